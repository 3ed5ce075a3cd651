//! Command-line front end. [`run`] parses arguments, computes a report and
//! returns the exit code with the rendered output, so the binary stays a thin
//! wrapper and the whole interface is testable in-process.
//!
//! Exit codes: 0 when all requested routes agree, 1 on any disagreement,
//! 2 on malformed input.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bpoly::{
    b_from_whittaker, b_via_setpartitions, b_via_tableaux, binmat_bruteforce, binmat_count, binmat_via_tableaux,
    touchard, StripTables, TouchardMethod,
};
use crate::profiles::{
    at, companion, jordan_block, pivot_sets, profile_histogram, sigma_diagonal, sigma_irreducible, sigma_multilinear,
    sigma_pivot, sigma_pivot_recursive, sigma_regular_diagonal, sigma_regular_nilpotent, smallest_irreducible,
    DiagonalSpec,
};
use crate::qarith::{exact_div, q_factorial, QPoly};
use crate::shapes::{sort_composition, Composition, Partition, Stat};
use crate::stirlrook::{
    board_of_nu, rook_convolution, rook_number, rook_rectangular, stirling_q, FerrersBoard, StirlingMethod,
};
use crate::verify::{self, Bounds, CaseResult, SUITES};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "qprofile",
    version,
    about = "Exact q-counting of subspace profiles and related polynomials"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include elapsed wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// b_mu,nu(q) by tableaux, set partitions and the strip recursion.
    Bpoly {
        #[arg(long, value_parser = parse::<Partition>)]
        mu: Partition,
        #[arg(long, value_parser = parse::<Composition>)]
        nu: Composition,
        /// tableaux, setpart, recursion or all.
        #[arg(long, default_value = "all")]
        method: String,
        /// Statistic for the set-partition route; all three when omitted.
        #[arg(long, value_parser = parse::<Stat>)]
        stat: Option<Stat>,
    },
    /// Number of subspaces with a given profile, as a polynomial in q.
    Sigma {
        #[arg(long, value_parser = parse::<Partition>)]
        mu: Partition,
        /// Type of the diagonal operator (block sizes).
        #[arg(long, value_parser = parse::<Composition>)]
        nu: Option<Composition>,
        #[arg(long, value_enum, default_value = "diagonal")]
        operator: Operator,
        /// Dimension for the regular-diagonal, irreducible and nilpotent operators.
        #[arg(long)]
        n: Option<usize>,
        /// formula, pivot, multilinear, recursion or all (diagonal operators).
        #[arg(long, default_value = "formula")]
        method: String,
        /// Primes at which to check against brute-force enumeration.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// q-Whittaker coefficient a_mu,nu(q).
    Whittaker {
        #[arg(long, value_parser = parse::<Partition>)]
        mu: Partition,
        #[arg(long, value_parser = parse::<Composition>)]
        nu: Composition,
        /// recursion, conversion or all.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Touchard-Riordan polynomial T_m(q).
    Touchard {
        #[arg(long)]
        m: usize,
        /// chords, whittaker, closed or all.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// q-Stirling number S_q(n, m; nu).
    Stirling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Defaults to (1^n).
        #[arg(long, value_parser = parse::<Partition>)]
        nu: Option<Partition>,
        /// definition, recursion, rook, setstat[-inv|-ninv|-maj] or all.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// q-rook number r_m(B) of a Ferrers board.
    Rook {
        /// Column heights, weakly increasing.
        #[arg(long, value_parser = parse::<FerrersBoard>, conflicts_with_all = ["rows", "cols", "nu"])]
        board: Option<FerrersBoard>,
        /// Use the truncated staircase B(nu).
        #[arg(long, value_parser = parse::<Partition>, conflicts_with_all = ["rows", "cols"])]
        nu: Option<Partition>,
        /// Height of a rectangular board.
        #[arg(long, requires = "cols")]
        rows: Option<usize>,
        /// Width of a rectangular board.
        #[arg(long, requires = "rows")]
        cols: Option<usize>,
        #[arg(long)]
        m: usize,
        /// bruteforce, formula or all.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Number of 0-1 matrices with given row and column sums.
    Binmat {
        #[arg(long, value_parser = parse::<Composition>)]
        rows: Composition,
        #[arg(long, value_parser = parse::<Composition>)]
        cols: Composition,
        /// formula, tableaux, bruteforce or all.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Exhaustive cross-checks up to a size bound.
    Verify {
        /// bpoly, profiles, stirling, touchard, rook, binmat or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 12)]
        max_cells: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Operator {
    Diagonal,
    RegularDiagonal,
    Irreducible,
    Nilpotent,
}

fn parse<T: FromStr<Err = Error>>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A computed value: a polynomial (coefficients ascending, as decimal
/// strings) or an integer (decimal string).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Poly(QPoly),
    Int(String),
}

impl Value {
    fn int(v: impl Into<BigInt>) -> Self {
        Value::Int(v.into().to_string())
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Poly(p) => write!(f, "{p}"),
            Value::Int(s) => f.write_str(s),
        }
    }
}

/// One route's result. `prime` marks an integer count over `F_p`, compared
/// against the polynomial value evaluated at `q = p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodResult {
    pub method: String,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
}

/// Report for a single computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub quantity: String,
    pub inputs: BTreeMap<String, String>,
    pub value: Value,
    pub methods: Vec<MethodResult>,
    pub agreement: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

/// Report for `verify`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suites: Vec<String>,
    pub max_n: BTreeMap<String, usize>,
    pub primes: Vec<u64>,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<SuiteCase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCase {
    pub suite: String,
    #[serde(flatten)]
    pub result: CaseResult,
}

fn report(quantity: &str, inputs: &[(&str, String)], methods: Vec<MethodResult>) -> Report {
    let value = methods
        .iter()
        .find(|m| m.prime.is_none())
        .map(|m| m.value.clone())
        .unwrap_or_else(|| methods[0].value.clone());
    let agreement = methods.iter().all(|m| match (m.prime, &value, &m.value) {
        (Some(p), Value::Poly(poly), Value::Int(n)) => at(poly, p).to_string() == *n,
        _ => m.value == value,
    });
    Report {
        quantity: quantity.to_string(),
        inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        value,
        methods,
        agreement,
        notes: Vec::new(),
        elapsed_ms: None,
    }
}

fn poly(method: impl Into<String>, p: QPoly) -> MethodResult {
    MethodResult {
        method: method.into(),
        value: Value::Poly(p),
        prime: None,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Picks the routes named by `method` out of `known` (`"all"` selects every
/// one).
fn select<'a>(method: &str, known: &[&'a str]) -> Result<Vec<&'a str>> {
    if method == "all" {
        return Ok(known.to_vec());
    }
    let mut out = Vec::new();
    for m in method.split(',') {
        match known.iter().find(|k| **k == m) {
            Some(k) => out.push(*k),
            None => {
                return Err(usage(format!(
                    "unknown method {m:?}; expected one of {} or all",
                    known.join(", ")
                )))
            }
        }
    }
    Ok(out)
}

fn bpoly_report(mu: &Partition, nu: &Composition, method: &str, stat: Option<Stat>) -> Result<Report> {
    let methods = select(method, &["tableaux", "setpart", "recursion"])?;
    let stats = stat.map_or(Stat::ALL.to_vec(), |s| vec![s]);
    let mut out = Vec::new();
    for m in methods {
        match m {
            "tableaux" => out.push(poly("tableaux", b_via_tableaux(mu, nu))),
            "setpart" => {
                for &phi in &stats {
                    out.push(poly(format!("setpart-{phi}"), b_via_setpartitions(mu, nu, phi)?));
                }
            }
            _ => out.push(poly("recursion", StripTables::new().b(mu, &sort_composition(nu))?)),
        }
    }
    Ok(report("b", &[("mu", mu.to_string()), ("nu", nu.to_string())], out))
}

fn check_prime(p: u64) -> Result<()> {
    if !crate::profiles::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn sigma_report(
    mu: &Partition,
    nu: Option<&Composition>,
    operator: Operator,
    n: Option<usize>,
    method: &str,
    primes: &[u64],
) -> Result<Report> {
    for &p in primes {
        check_prime(p)?;
    }
    let mut notes = Vec::new();
    let mut out = Vec::new();
    let mut inputs = vec![("mu", mu.to_string())];
    match operator {
        Operator::Diagonal => {
            let nu = nu.ok_or_else(|| usage("--nu is required for a diagonal operator"))?;
            if n.is_some() {
                return Err(usage(
                    "--n applies only to regular-diagonal, irreducible and nilpotent operators",
                ));
            }
            inputs.push(("nu", nu.to_string()));
            let methods = select(method, &["formula", "pivot", "multilinear", "recursion"])?;
            let dim = nu.size();
            for m in methods {
                let v = match m {
                    "formula" => sigma_diagonal(mu, nu),
                    "pivot" => pivot_sets(dim, mu.first()).iter().map(|c| sigma_pivot(mu, nu, c)).sum(),
                    "multilinear" => sigma_multilinear(mu, nu),
                    _ => {
                        let mut total = QPoly::zero();
                        for c in pivot_sets(dim, mu.first()) {
                            total += &sigma_pivot_recursive(mu, nu, &c)?;
                        }
                        total
                    }
                };
                out.push(poly(m, v));
            }
            for &p in primes {
                if nu.len() as u64 > p {
                    notes.push(format!("p={p} skipped: {} distinct eigenvalues needed", nu.len()));
                    continue;
                }
                let delta = DiagonalSpec::block_scalar(nu, p)?.to_matrix(p)?;
                out.push(brute(mu, &delta, p)?);
            }
        }
        _ => {
            if nu.is_some() {
                return Err(usage("--nu applies only to diagonal operators"));
            }
            if method != "formula" && method != "all" {
                return Err(usage("only the formula method is available for this operator"));
            }
            let dim = n.unwrap_or(mu.size());
            inputs.push(("n", dim.to_string()));
            inputs.push(("operator", format!("{operator:?}").to_lowercase()));
            match operator {
                Operator::RegularDiagonal => {
                    out.push(poly("formula", sigma_regular_diagonal(mu, dim)));
                    out.push(poly("diagonal", sigma_diagonal(mu, &Composition::ones(dim))));
                }
                Operator::Irreducible => out.push(poly("formula", sigma_irreducible(mu, dim))),
                _ => out.push(poly("formula", sigma_regular_nilpotent(mu))),
            }
            for &p in primes {
                let delta = match operator {
                    Operator::RegularDiagonal if dim as u64 > p => {
                        notes.push(format!("p={p} skipped: {dim} distinct eigenvalues needed"));
                        continue;
                    }
                    Operator::RegularDiagonal => DiagonalSpec::new((0..dim as u64).collect()).to_matrix(p)?,
                    Operator::Irreducible => companion(&smallest_irreducible(dim, p)?, p)?,
                    _ => jordan_block(dim, p)?,
                };
                out.push(brute(mu, &delta, p)?);
            }
        }
    }
    let mut r = report("sigma", &inputs, out);
    r.notes = notes;
    Ok(r)
}

fn brute(mu: &Partition, delta: &crate::profiles::FfMatrix, p: u64) -> Result<MethodResult> {
    let hist = profile_histogram(delta)?;
    Ok(MethodResult {
        method: format!("bruteforce p={p}"),
        value: Value::int(hist.get(mu).copied().unwrap_or(0)),
        prime: Some(p),
    })
}

fn whittaker_report(mu: &Partition, nu: &Composition, method: &str) -> Result<Report> {
    let sorted = sort_composition(nu);
    let mut out = Vec::new();
    for m in select(method, &["recursion", "conversion"])? {
        let v = match m {
            "recursion" => StripTables::new().a(mu, &sorted)?,
            _ => {
                if mu.size() != nu.size() {
                    return Err(Error::SizeMismatch {
                        left: mu.size(),
                        right: nu.size(),
                    });
                }
                let b = b_via_tableaux(mu, nu);
                let num: QPoly = (1..=mu.len())
                    .map(|i| q_factorial(mu.part(i) - mu.part(i + 1)))
                    .product();
                let den: QPoly = nu.parts().iter().map(|&v| q_factorial(v)).product();
                let a = exact_div(&(&b * &num), &den)?;
                debug_assert_eq!(b_from_whittaker(mu, &sorted, &a), b);
                a
            }
        };
        out.push(poly(m, v));
    }
    Ok(report("a", &[("mu", mu.to_string()), ("nu", nu.to_string())], out))
}

fn touchard_report(m: usize, method: &str) -> Result<Report> {
    let names: Vec<&str> = TouchardMethod::ALL.iter().map(|t| t.name()).collect();
    let mut out = Vec::new();
    for name in select(method, &names)? {
        out.push(poly(name, touchard(m, name.parse()?)?));
    }
    Ok(report("touchard", &[("m", m.to_string())], out))
}

fn stirling_report(n: usize, m: usize, nu: Option<&Partition>, method: &str) -> Result<Report> {
    let nu = nu.cloned().unwrap_or_else(|| Partition::ones(n));
    let methods: Vec<StirlingMethod> = if method == "all" {
        StirlingMethod::ALL.to_vec()
    } else {
        method.split(',').map(str::parse).collect::<Result<_>>()?
    };
    let mut out = Vec::new();
    for method in methods {
        out.push(poly(method.name(), stirling_q(n, m, &nu, method)?));
    }
    Ok(report(
        "stirling",
        &[("n", n.to_string()), ("m", m.to_string()), ("nu", nu.to_string())],
        out,
    ))
}

fn rook_report(board: &FerrersBoard, m: usize, method: &str) -> Result<Report> {
    let mut out = Vec::new();
    for name in select(method, &["bruteforce", "formula"])? {
        let v = if name == "bruteforce" {
            rook_number(board, m)
        } else {
            let heights = board.heights();
            match heights.last() {
                None => rook_number(board, m),
                Some(&a) => {
                    let b = heights.iter().rev().take_while(|&&h| h == a).count();
                    if b == heights.len() {
                        rook_rectangular(a, b, m)
                    } else {
                        let rest = FerrersBoard::new(heights[..heights.len() - b].to_vec())?;
                        rook_convolution(&rest, a, b, m)
                    }
                }
            }
        };
        out.push(poly(name, v));
    }
    Ok(report(
        "rook",
        &[("board", board.to_string()), ("m", m.to_string())],
        out,
    ))
}

fn binmat_report(rows: &Composition, cols: &Composition, method: &str) -> Result<Report> {
    let lambda = sort_composition(rows);
    let nu = sort_composition(cols);
    let mut out = Vec::new();
    for name in select(method, &["formula", "tableaux", "bruteforce"])? {
        let v = match name {
            "formula" => binmat_count(&lambda, &nu)?,
            "tableaux" => binmat_via_tableaux(&lambda, &nu)?,
            _ => BigInt::from(binmat_bruteforce(rows.parts(), cols.parts())),
        };
        out.push(MethodResult {
            method: name.to_string(),
            value: Value::int(v),
            prime: None,
        });
    }
    Ok(report(
        "binmat",
        &[("rows", rows.to_string()), ("cols", cols.to_string())],
        out,
    ))
}

/// Default size bound per suite when `--max-n` is omitted.
pub fn default_max_n(suite: &str) -> usize {
    match suite {
        "bpoly" => 6,
        "profiles" => 4,
        "stirling" => 6,
        "touchard" => 6,
        "binmat" => 6,
        _ => 0,
    }
}

fn verify_report(suite: &str, max_n: Option<usize>, primes: &[u64], max_cells: usize) -> Result<VerifyReport> {
    for &p in primes {
        check_prime(p)?;
    }
    let suites: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        select(suite, &SUITES)?
    };
    let mut cases = Vec::new();
    let mut bounds_used = BTreeMap::new();
    for s in &suites {
        let n = if *s == "rook" {
            max_cells
        } else {
            max_n.unwrap_or_else(|| default_max_n(s))
        };
        bounds_used.insert(s.to_string(), n);
        let bounds = Bounds {
            max_n: n,
            primes: primes.to_vec(),
            max_cells,
        };
        for result in verify::run_suite(s, &bounds)? {
            cases.push(SuiteCase {
                suite: s.to_string(),
                result,
            });
        }
    }
    let failed = cases.iter().filter(|c| !c.result.ok).count();
    Ok(VerifyReport {
        suites: suites.iter().map(|s| s.to_string()).collect(),
        max_n: bounds_used,
        primes: primes.to_vec(),
        passed: cases.len() - failed,
        failed,
        cases,
        elapsed_ms: None,
    })
}

fn render_report(r: &Report) -> String {
    let mut s = format!("quantity: {}\n", r.quantity);
    let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
    s += &format!("inputs: {}\n", inputs.join(" "));
    for m in &r.methods {
        s += &format!("  {}: {}\n", m.method, m.value);
    }
    for n in &r.notes {
        s += &format!("note: {n}\n");
    }
    s += &format!("value: {}\n", r.value);
    s += &format!("agreement: {}\n", r.agreement);
    if let Some(ms) = r.elapsed_ms {
        s += &format!("elapsed_ms: {ms:.3}\n");
    }
    s
}

fn render_verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    for c in &r.cases {
        let status = if c.result.ok { "ok" } else { "FAIL" };
        s += &format!("{status} [{}] {}", c.suite, c.result.case);
        if !c.result.detail.is_empty() {
            s += &format!(": {}", c.result.detail);
        }
        s.push('\n');
    }
    s += &format!("passed: {} failed: {}\n", r.passed, r.failed);
    if let Some(ms) = r.elapsed_ms {
        s += &format!("elapsed_ms: {ms:.3}\n");
    }
    s
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

/// Runs the command line given by `args` (including the program name) and
/// returns `(exit_code, output)`.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("error: invalid arguments");
                    (2, format!("{line}\n"))
                }
            };
        }
    };
    let start = Instant::now();
    let elapsed = |timing: bool| timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let outcome = match &cli.command {
        Command::Verify {
            suite,
            max_n,
            primes,
            max_cells,
        } => verify_report(suite, *max_n, primes, *max_cells).map(|mut r| {
            r.elapsed_ms = elapsed(cli.timing);
            let code = i32::from(r.failed > 0);
            (code, if cli.json { to_json(&r) } else { render_verify(&r) })
        }),
        command => single(command).map(|mut r| {
            r.elapsed_ms = elapsed(cli.timing);
            let code = i32::from(!r.agreement);
            (code, if cli.json { to_json(&r) } else { render_report(&r) })
        }),
    };
    outcome.unwrap_or_else(|e| (2, format!("error: {e}\n")))
}

fn single(command: &Command) -> Result<Report> {
    match command {
        Command::Bpoly { mu, nu, method, stat } => bpoly_report(mu, nu, method, *stat),
        Command::Sigma {
            mu,
            nu,
            operator,
            n,
            method,
            primes,
        } => sigma_report(mu, nu.as_ref(), *operator, *n, method, primes),
        Command::Whittaker { mu, nu, method } => whittaker_report(mu, nu, method),
        Command::Touchard { m, method } => touchard_report(*m, method),
        Command::Stirling { n, m, nu, method } => stirling_report(*n, *m, nu.as_ref(), method),
        Command::Rook {
            board,
            nu,
            rows,
            cols,
            m,
            method,
        } => {
            let board = match (board, nu, rows, cols) {
                (Some(b), _, _, _) => b.clone(),
                (None, Some(nu), _, _) => board_of_nu(nu),
                (None, None, Some(a), Some(b)) => crate::stirlrook::rectangle(*a, *b),
                _ => return Err(usage("give --board, --nu, or both --rows and --cols")),
            };
            rook_report(&board, *m, method)
        }
        Command::Binmat { rows, cols, method } => binmat_report(rows, cols, method),
        Command::Verify { .. } => unreachable!("handled by run"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> (i32, String) {
        run(std::iter::once("qprofile").chain(args.split_whitespace()))
    }

    #[test]
    fn headline_bpoly() {
        let (code, out) = cli("bpoly --mu 5,1 --nu 3,3 --method all");
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("value: q^4 + 2*q^3 + 3*q^2 + 2*q + 1"), "{out}");
        assert!(out.contains("agreement: true"));
    }

    #[test]
    fn touchard_two() {
        let (code, out) = cli("touchard --m 2 --method all");
        assert_eq!(code, 0);
        assert!(out.contains("value: q + 2"), "{out}");
    }

    #[test]
    fn malformed_input_exits_two() {
        assert_eq!(cli("bpoly --mu 1,2 --nu 3").0, 2);
        assert_eq!(cli("bpoly --mu 3 --nu 3 --method bogus").0, 2);
        assert_eq!(cli("sigma --mu 1 --nu 2 --primes 4").0, 2);
        assert_eq!(cli("frobnicate").0, 2);
        let (_, out) = cli("stirling --n 3 --m 1 --nu 2");
        assert_eq!(out.lines().count(), 1, "{out}");
    }

    #[test]
    fn json_round_trip() {
        let (code, out) = cli("sigma --mu 1 --nu 1,1 --method all --primes 2,3 --json");
        assert_eq!(code, 0, "{out}");
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(to_json(&r), out);
        assert_eq!(r.value, Value::Poly(QPoly::constant(2)));
    }
}
