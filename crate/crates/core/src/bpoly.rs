//! The polynomials `b_mu,alpha(q)` by tableau sums, set-partition statistics
//! and the horizontal-strip recursion; q-Whittaker coefficients `a_mu,nu(q)`;
//! Kostka numbers; binary-matrix counts; Touchard-Riordan polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qarith::{binomial, exact_div, factorial, q_binomial, q_factorial, q_falling_factorial, QPoly};
use crate::setpart::{enumerate_partitions, SetPartition};
use crate::shapes::{
    conjugate, horizontal_strips, is_horizontal_strip, sort_composition, Composition, Partition, Stat,
};
use crate::tableaux::{enumerate_sstab, enumerate_ssyt, r_values, r_weight, s_weight};

fn strip_check(mu: &Partition, rho: &Partition) -> Result<()> {
    if is_horizontal_strip(mu, rho) {
        Ok(())
    } else {
        Err(Error::NotAStrip {
            outer: mu.to_string(),
            inner: rho.to_string(),
        })
    }
}

/// `psi_{mu/rho}(q) = prod_i [mu_i - mu_{i+1} choose mu_i - rho_i]_q`.
pub fn psi(mu: &Partition, rho: &Partition) -> Result<QPoly> {
    strip_check(mu, rho)?;
    Ok((1..=mu.len())
        .map(|i| q_binomial(mu.part(i) - mu.part(i + 1), mu.part(i) - rho.part(i)))
        .product())
}

/// `theta_{mu/rho}(q) = [|mu|-|rho|]_q! / [mu_1-rho_1]_q!
///  * prod_i [rho_i - rho_{i+1} choose mu_{i+1} - rho_{i+1}]_q`.
pub fn theta(mu: &Partition, rho: &Partition) -> Result<QPoly> {
    strip_check(mu, rho)?;
    let size = mu.size() - rho.size();
    let head = q_falling_factorial(size, size - (mu.first() - rho.first()));
    let tail: QPoly = (1..=mu.len())
        .map(|i| q_binomial(rho.part(i) - rho.part(i + 1), mu.part(i + 1) - rho.part(i + 1)))
        .product();
    Ok(head * tail)
}

fn assert_nonnegative(p: QPoly, what: &str) -> QPoly {
    assert!(p.is_nonnegative(), "{what} has a negative coefficient: {p}");
    p
}

/// `b_mu,alpha(q) = sum_{T in SSTab(mu, alpha)} r_q(T) s_q^alpha(T)`.
pub fn b_via_tableaux(mu: &Partition, alpha: &Composition) -> QPoly {
    let total = enumerate_sstab(mu, alpha)
        .iter()
        .map(|t| {
            let r = r_weight(t);
            if r.is_zero() {
                r
            } else {
                r * s_weight(t, alpha).expect("enumerated content fits alpha")
            }
        })
        .sum();
    assert_nonnegative(total, "b_mu,alpha")
}

/// `b_mu,alpha(q) = sum_{A in Pi(mu', alpha)} q^{i_alpha(A) + phi_alpha(A)}`.
pub fn b_via_setpartitions(mu: &Partition, alpha: &Composition, phi: Stat) -> Result<QPoly> {
    Ok(b_tilde(mu, alpha, phi)?.diagonal())
}

/// A polynomial in two commuting variables `q` and `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QtPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    /// Adds `c q^i t^j`.
    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Coefficient of `q^i t^j`.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms `((i, j), c)` in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    /// The one-variable polynomial obtained by setting `t = q`.
    pub fn diagonal(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (&(i, j), c) in &self.terms {
            out += &QPoly::monomial(c.clone(), i + j);
        }
        out
    }

    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * q.pow(i as u32) * t.pow(j as u32))
            .sum()
    }

    /// Product of a polynomial in `q` with a polynomial in `t`.
    pub fn from_product(qpart: &QPoly, tpart: &QPoly) -> Self {
        let mut out = QtPoly::zero();
        for (i, a) in qpart.coeffs().iter().enumerate() {
            for (j, b) in tpart.coeffs().iter().enumerate() {
                out.add_term(i, j, a * b);
            }
        }
        out
    }
}

impl std::ops::AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{j}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// `b~_mu,alpha(q, t) = sum_{A in Pi(mu', alpha)} q^{i_alpha(A)} t^{phi_alpha(A)}`.
pub fn b_tilde(mu: &Partition, alpha: &Composition, phi: Stat) -> Result<QtPoly> {
    let n = alpha.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: n,
        });
    }
    let shape = conjugate(mu);
    let mut out = QtPoly::zero();
    for a in enumerate_partitions(n, Some(&shape), Some(alpha)) {
        out.add_term(a.interlacings(Some(alpha)), a.phi_alpha(phi, alpha)?, BigInt::one());
    }
    Ok(out)
}

/// `b~_mu,alpha(q, t) = sum_{T in SSYT(mu, alpha)} r_q(T) s_t(T)`.
pub fn b_tilde_via_tableaux(mu: &Partition, alpha: &Composition) -> Result<QtPoly> {
    if mu.size() != alpha.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: alpha.size(),
        });
    }
    let mut out = QtPoly::zero();
    for t in enumerate_ssyt(mu, alpha) {
        out += &QtPoly::from_product(&r_weight(&t), &s_weight(&t, alpha)?);
    }
    Ok(out)
}

/// Memoized horizontal-strip recursions for `b_mu,nu` and `a_mu,nu`.
///
/// Keys are `(mu, nu)` with `nu` sorted; the recursion removes the last
/// (smallest) part of `nu` at each step.
#[derive(Debug, Default)]
pub struct StripTables {
    b: HashMap<(Partition, Partition), QPoly>,
    a: HashMap<(Partition, Partition), QPoly>,
}

#[derive(Clone, Copy)]
enum Chain {
    Theta,
    Psi,
}

impl StripTables {
    pub fn new() -> Self {
        StripTables::default()
    }

    /// `b_mu,nu(q)` for `|mu| = |nu|`.
    pub fn b(&mut self, mu: &Partition, nu: &Partition) -> Result<QPoly> {
        check_sizes(mu, nu)?;
        Ok(assert_nonnegative(self.chain(mu, nu, Chain::Theta), "b_mu,nu"))
    }

    /// `a_mu,nu(q)`, the coefficient of `m_nu` in the q-Whittaker function
    /// `W_mu`.
    pub fn a(&mut self, mu: &Partition, nu: &Partition) -> Result<QPoly> {
        check_sizes(mu, nu)?;
        Ok(assert_nonnegative(self.chain(mu, nu, Chain::Psi), "a_mu,nu"))
    }

    fn chain(&mut self, mu: &Partition, nu: &Partition, kind: Chain) -> QPoly {
        let Some(&last) = nu.parts().last() else {
            return if mu.is_empty() { QPoly::one() } else { QPoly::zero() };
        };
        let key = (mu.clone(), nu.clone());
        let memo = match kind {
            Chain::Theta => &self.b,
            Chain::Psi => &self.a,
        };
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let nu_hat = nu.without_last();
        let mut total = QPoly::zero();
        for rho in horizontal_strips(mu, last) {
            let inner = self.chain(&rho, &nu_hat, kind);
            if inner.is_zero() {
                continue;
            }
            let w = match kind {
                Chain::Theta => theta(mu, &rho),
                Chain::Psi => psi(mu, &rho),
            }
            .expect("enumerated strips are strips");
            total += &(inner * w);
        }
        let memo = match kind {
            Chain::Theta => &mut self.b,
            Chain::Psi => &mut self.a,
        };
        memo.insert(key, total.clone());
        total
    }
}

fn check_sizes(mu: &Partition, nu: &Partition) -> Result<()> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: nu.size(),
        });
    }
    Ok(())
}

/// `b_mu,nu(q)` by the theta-chain recursion; `nu` may be any rearrangement.
pub fn b_via_recursion(mu: &Partition, nu: &Composition) -> Result<QPoly> {
    StripTables::new().b(mu, &sort_composition(nu))
}

/// `a_mu,nu(q)` by the psi-chain sum.
pub fn whittaker_coeff(mu: &Partition, nu: &Composition) -> Result<QPoly> {
    StripTables::new().a(mu, &sort_composition(nu))
}

/// `b_mu,nu = a_mu,nu * prod [nu_i]_q! / prod [mu_i - mu_{i+1}]_q!`.
pub fn b_from_whittaker(mu: &Partition, nu: &Partition, a: &QPoly) -> QPoly {
    let num: QPoly = nu.parts().iter().map(|&v| q_factorial(v)).product();
    let den: QPoly = (1..=mu.len())
        .map(|i| q_factorial(mu.part(i) - mu.part(i + 1)))
        .product();
    exact_div(&(a * &num), &den).expect("Whittaker conversion must divide exactly")
}

/// Kostka number `K_mu,nu = |SSYT(mu, nu)|`.
pub fn kostka(mu: &Partition, nu: &Composition) -> usize {
    enumerate_ssyt(mu, nu).len()
}

fn binmat_factor(lambda: &Partition, nu: &Partition) -> (BigInt, BigInt) {
    let num: BigInt = lambda.multiplicities().iter().map(|&m| factorial(m)).product();
    let den: BigInt = nu.parts().iter().map(|&v| factorial(v)).product();
    (num, den)
}

/// `M_lambda,nu = b_{lambda',nu}(1) prod m_i(lambda)! / prod nu_i!`, the
/// number of 0-1 matrices with row sums `lambda` and column sums `nu`.
pub fn binmat_count(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    check_sizes(lambda, nu)?;
    let b1 = StripTables::new().b(&conjugate(lambda), nu)?.eval_i64(1);
    let (num, den) = binmat_factor(lambda, nu);
    Ok(b1 * num / den)
}

/// The same count through `sum_{T in SSYT(lambda', nu)} prod r_ij prod_i
/// multinomial(nu_i; beta^i)`, in integers only.
pub fn binmat_via_tableaux(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    check_sizes(lambda, nu)?;
    let alpha = nu.as_composition();
    let mut total = BigInt::zero();
    for t in enumerate_ssyt(&conjugate(lambda), &alpha) {
        let r: BigInt = r_values(&t).into_iter().flatten().flatten().map(BigInt::from).product();
        if r.is_zero() {
            continue;
        }
        let profile = t.content_profile(alpha.len());
        let s: BigInt = nu
            .parts()
            .iter()
            .zip(&profile.beta)
            .map(|(&v, beta)| {
                let den: BigInt = beta.parts().iter().map(|&b| factorial(b)).product();
                factorial(v) / den
            })
            .product();
        total += r * s;
    }
    let (num, den) = binmat_factor(lambda, nu);
    Ok(total * num / den)
}

/// Counts 0-1 matrices with the given row and column sums by backtracking.
pub fn binmat_bruteforce(rows: &[usize], cols: &[usize]) -> u64 {
    fn go(rows: &[usize], cap: &mut [usize], r: usize) -> u64 {
        if r == rows.len() {
            return u64::from(cap.iter().all(|&c| c == 0));
        }
        let mut total = 0;
        choose(rows, cap, r, 0, rows[r], &mut total);
        total
    }
    fn choose(rows: &[usize], cap: &mut [usize], r: usize, from: usize, left: usize, total: &mut u64) {
        if left == 0 {
            *total += go(rows, cap, r + 1);
            return;
        }
        for c in from..cap.len() {
            if cap[c] > 0 {
                cap[c] -= 1;
                choose(rows, cap, r, c + 1, left - 1, total);
                cap[c] += 1;
            }
        }
    }
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return 0;
    }
    go(rows, &mut cols.to_vec(), 0)
}

/// How to compute a Touchard-Riordan polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TouchardMethod {
    /// Crossing generating function over all perfect matchings of `[2m]`.
    Chords,
    /// `a_{(m,m),(1^2m)}(q) / [m]_q!`.
    Whittaker,
    /// The alternating binomial sum divided by `(1 - q)^m`.
    Closed,
}

impl TouchardMethod {
    pub const ALL: [TouchardMethod; 3] = [
        TouchardMethod::Chords,
        TouchardMethod::Whittaker,
        TouchardMethod::Closed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TouchardMethod::Chords => "chords",
            TouchardMethod::Whittaker => "whittaker",
            TouchardMethod::Closed => "closed",
        }
    }
}

impl FromStr for TouchardMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TouchardMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown touchard method {s:?}")))
    }
}

/// All perfect matchings of `[2m]` as set partitions with blocks of size 2.
pub fn perfect_matchings(m: usize) -> Vec<SetPartition> {
    fn go(free: &mut Vec<usize>, cur: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
        if free.is_empty() {
            out.push(SetPartition::from_blocks(cur.clone()).expect("pairs cover [2m]"));
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let partner = free.remove(k);
            cur.push(vec![first, partner]);
            go(free, cur, out);
            cur.pop();
            free.insert(k, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    go(&mut (1..=2 * m).collect(), &mut Vec::new(), &mut out);
    out
}

/// The Touchard-Riordan polynomial `T_m(q)`.
pub fn touchard(m: usize, method: TouchardMethod) -> Result<QPoly> {
    let out = match method {
        TouchardMethod::Chords => {
            let ones = Composition::ones(2 * m);
            perfect_matchings(m)
                .iter()
                .map(|a| QPoly::q_pow(a.interlacings(Some(&ones))))
                .sum()
        }
        TouchardMethod::Whittaker => {
            let a = StripTables::new().a(&Partition::new(vec![m, m])?, &Partition::ones(2 * m))?;
            exact_div(&a, &q_factorial(m))?
        }
        TouchardMethod::Closed => {
            let mut rhs = QPoly::zero();
            for i in 0..=m {
                let c = binomial(2 * m, m - i)
                    - if i < m {
                        binomial(2 * m, m - i - 1)
                    } else {
                        BigInt::zero()
                    };
                let c = if i % 2 == 0 { c } else { -c };
                rhs += &QPoly::monomial(c, i * (i + 1) / 2);
            }
            let one_minus_q = QPoly::from_i64s(&[1, -1]);
            exact_div(&rhs, &one_minus_q.pow(m as u32))?
        }
    };
    Ok(assert_nonnegative(out, "T_m"))
}
