//! Exhaustive cross-checks between independent routes and brute-force
//! oracles, bounded by instance size. Each check yields one [`CaseResult`];
//! cases come out in enumeration order, which is deterministic.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bpoly::{
    b_from_whittaker, b_via_setpartitions, b_via_tableaux, binmat_bruteforce, binmat_count, binmat_via_tableaux,
    kostka, touchard, StripTables, TouchardMethod,
};
use crate::error::Result;
use crate::profiles::{
    at, companion, jordan_block, profile_histogram, sigma_diagonal, sigma_irreducible, sigma_regular_nilpotent,
    smallest_irreducible, total_subspaces, DiagonalSpec,
};
use crate::qarith::QPoly;
use crate::shapes::{partitions_of, partitions_up_to, Partition, Stat};
use crate::stirlrook::{
    carlitz, rectangle, rook_convolution, rook_number, rook_rectangular, stirling_direct, stirling_one, stirling_q,
    FerrersBoard, StirlingMethod,
};

/// Outcome of a single check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CaseResult {
    fn check(case: String, ok: bool, detail: impl FnOnce() -> String) -> Self {
        let detail = if ok { String::new() } else { detail() };
        CaseResult { case, ok, detail }
    }
}

/// The named suites accepted by [`run_suite`].
pub const SUITES: [&str; 6] = ["bpoly", "profiles", "stirling", "touchard", "rook", "binmat"];

/// Size bounds for the suites.
#[derive(Clone, Debug)]
pub struct Bounds {
    /// Largest `n` (partition size, dimension, or number of chords).
    pub max_n: usize,
    /// Primes for finite-field oracles.
    pub primes: Vec<u64>,
    /// Largest board size for the rook suite.
    pub max_cells: usize,
}

pub fn run_suite(name: &str, bounds: &Bounds) -> Result<Vec<CaseResult>> {
    match name {
        "bpoly" => bpoly(bounds.max_n),
        "profiles" => profiles(bounds.max_n, &bounds.primes),
        "stirling" => stirling(bounds.max_n),
        "touchard" => touchard_suite(bounds.max_n),
        "rook" => Ok(rook(bounds.max_cells)),
        "binmat" => binmat(bounds.max_n),
        other => Err(crate::Error::Parse(format!("unknown suite {other:?}"))),
    }
}

/// For all `mu, nu |- n <= max_n`: tableau sum, set-partition sums for each
/// statistic, and the strip recursion agree; the q-Whittaker conversion holds
/// and `a_mu,nu(0) = b_mu,nu(0) = K_mu,nu`.
pub fn bpoly(max_n: usize) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    let mut tables = StripTables::new();
    for n in 0..=max_n {
        let parts = partitions_of(n);
        for mu in &parts {
            for nu in &parts {
                let alpha = nu.as_composition();
                let rec = tables.b(mu, nu)?;
                let tab = b_via_tableaux(mu, &alpha);
                let mut routes = vec![("tableaux".to_string(), tab)];
                for phi in Stat::ALL {
                    routes.push((format!("setpart-{phi}"), b_via_setpartitions(mu, &alpha, phi)?));
                }
                let bad: Vec<String> = routes
                    .iter()
                    .filter(|(_, v)| *v != rec)
                    .map(|(name, v)| format!("{name} gave {v}"))
                    .collect();
                out.push(CaseResult::check(format!("b mu={mu} nu={nu}"), bad.is_empty(), || {
                    format!("recursion gave {rec}; {}", bad.join("; "))
                }));
                let a = tables.a(mu, nu)?;
                let converted = b_from_whittaker(mu, nu, &a);
                let k = BigInt::from(kostka(mu, &alpha));
                let ok = converted == rec && a.eval_i64(0) == k && rec.eval_i64(0) == k;
                out.push(CaseResult::check(format!("whittaker mu={mu} nu={nu}"), ok, || {
                    format!("a={a}, converted={converted}, b={rec}, K={k}")
                }));
            }
        }
    }
    Ok(out)
}

/// Brute-force profile counts over `F_p` against the closed forms: diagonal
/// operators of every type with at most `p` distinct entries, plus the
/// irreducible and regular nilpotent cases.
pub fn profiles(max_n: usize, primes: &[u64]) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for &p in primes {
        for n in 0..=max_n {
            for nu in partitions_of(n) {
                if nu.len() as u64 > p {
                    continue;
                }
                let alpha = nu.as_composition();
                let delta = DiagonalSpec::block_scalar(&alpha, p)?.to_matrix(p)?;
                let hist = profile_histogram(&delta)?;
                let mut all_ok = true;
                let mut detail = Vec::new();
                for mu in partitions_up_to(n) {
                    let expected = at(&sigma_diagonal(&mu, &alpha), p);
                    let got = BigInt::from(hist.get(&mu).copied().unwrap_or(0));
                    if expected != got {
                        all_ok = false;
                        detail.push(format!("mu={mu}: formula {expected}, brute force {got}"));
                    }
                }
                let total: u64 = hist.values().sum();
                if BigInt::from(total) != at(&total_subspaces(n), p) {
                    all_ok = false;
                    detail.push(format!("total {total}"));
                }
                out.push(CaseResult::check(format!("diagonal p={p} nu={nu}"), all_ok, || {
                    detail.join("; ")
                }));
            }
            if n == 0 {
                continue;
            }
            let f = smallest_irreducible(n, p)?;
            let irreducible = profile_histogram(&companion(&f, p)?)?;
            let nilpotent = profile_histogram(&jordan_block(n, p)?)?;
            for mu in partitions_up_to(n) {
                let got = BigInt::from(irreducible.get(&mu).copied().unwrap_or(0));
                let expected = at(&sigma_irreducible(&mu, n), p);
                out.push(CaseResult::check(
                    format!("irreducible p={p} n={n} mu={mu}"),
                    got == expected,
                    || format!("formula {expected}, brute force {got}"),
                ));
                let got = BigInt::from(nilpotent.get(&mu).copied().unwrap_or(0));
                let expected = at(&sigma_regular_nilpotent(&mu), p);
                out.push(CaseResult::check(
                    format!("nilpotent p={p} n={n} mu={mu}"),
                    got == expected,
                    || format!("formula {expected}, brute force {got}"),
                ));
            }
        }
    }
    Ok(out)
}

/// Every route for `S_q(n, m; nu)` agrees, the `q = 1` values match the
/// direct count and recursion, and `nu = (1^n)` gives Carlitz numbers.
pub fn stirling(max_n: usize) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for nu in partitions_of(n) {
            for m in 0..=n {
                let reference = stirling_q(n, m, &nu, StirlingMethod::Recursion)?;
                let mut bad = Vec::new();
                for method in StirlingMethod::ALL {
                    let v = stirling_q(n, m, &nu, method)?;
                    if v != reference {
                        bad.push(format!("{} gave {v}", method.name()));
                    }
                }
                let direct = BigInt::from(stirling_direct(n, m, &nu)?);
                if stirling_one(n, m, &nu)? != direct || reference.eval_i64(1) != direct {
                    bad.push(format!("q=1 value {} vs count {direct}", reference.eval_i64(1)));
                }
                if nu == Partition::ones(n) && reference != carlitz(n, m) {
                    bad.push(format!("Carlitz gave {}", carlitz(n, m)));
                }
                out.push(CaseResult::check(
                    format!("stirling n={n} m={m} nu={nu}"),
                    bad.is_empty(),
                    || format!("recursion gave {reference}; {}", bad.join("; ")),
                ));
            }
        }
    }
    Ok(out)
}

/// The three Touchard-Riordan routes agree and `T_m(1) = (2m-1)!!`.
pub fn touchard_suite(max_m: usize) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let values = TouchardMethod::ALL
            .iter()
            .map(|&method| touchard(m, method))
            .collect::<Result<Vec<QPoly>>>()?;
        let double_factorial: BigInt = (1..=m).map(|i| BigInt::from(2 * i - 1)).product();
        let ok = values.iter().all(|v| *v == values[0]) && values[0].eval_i64(1) == double_factorial;
        out.push(CaseResult::check(format!("touchard m={m}"), ok, || {
            let shown: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            format!("{}; (2m-1)!! = {double_factorial}", shown.join(" | "))
        }));
    }
    Ok(out)
}

/// All Ferrers boards with at most `max_cells` cells, heights weakly
/// increasing, described by their heights.
pub fn boards_up_to(max_cells: usize) -> Vec<FerrersBoard> {
    partitions_up_to(max_cells)
        .into_iter()
        .map(|p| {
            let mut h = p.parts().to_vec();
            h.reverse();
            FerrersBoard::new(h).expect("reversed partition increases")
        })
        .collect()
}

/// Rectangular and convolution formulas against brute-force placement sums.
pub fn rook(max_cells: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for a in 1..=max_cells {
        for b in 1..=max_cells / a {
            let board = rectangle(a, b);
            let ok = (0..=a.min(b) + 1).all(|m| rook_number(&board, m) == rook_rectangular(a, b, m));
            out.push(CaseResult::check(format!("rectangle a={a} b={b}"), ok, String::new));
        }
    }
    for board in boards_up_to(max_cells) {
        let heights = board.heights();
        let Some(&a) = heights.last() else { continue };
        let run = heights.iter().rev().take_while(|&&h| h == a).count();
        let m_max = board.num_columns().min(a);
        let direct: Vec<QPoly> = (0..=m_max).map(|m| rook_number(&board, m)).collect();
        for b in 1..=run {
            let rest = FerrersBoard::new(heights[..heights.len() - b].to_vec()).expect("prefix of a board");
            let bad: Vec<usize> = (0..=m_max)
                .filter(|&m| rook_convolution(&rest, a, b, m) != direct[m])
                .collect();
            out.push(CaseResult::check(
                format!("convolution {rest} + {a}^{b}"),
                bad.is_empty(),
                || format!("mismatch at m in {bad:?}"),
            ));
        }
    }
    out
}

/// `M_lambda,nu` by the `b(1)` formula, the tableau sum and brute force.
pub fn binmat(max_n: usize) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let parts = partitions_of(n);
        for lambda in &parts {
            for nu in &parts {
                let formula = binmat_count(lambda, nu)?;
                let tab = binmat_via_tableaux(lambda, nu)?;
                let brute = BigInt::from(binmat_bruteforce(lambda.parts(), nu.parts()));
                out.push(CaseResult::check(
                    format!("binmat lambda={lambda} nu={nu}"),
                    formula == brute && tab == brute,
                    || format!("formula {formula}, tableaux {tab}, brute force {brute}"),
                ));
            }
        }
    }
    Ok(out)
}
