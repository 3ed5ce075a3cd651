//! Subspaces of `F_p^n` by pivot sets, their profiles under an operator, and
//! every closed form for the number of subspaces with a given profile.

pub mod field;

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;

use crate::bpoly::b_via_tableaux;
use crate::error::{Error, Result};
use crate::qarith::{binomial, exact_div, q_binomial, QPoly};
use crate::shapes::{stat_alpha, Composition, Partition, Stat};
use crate::tableaux::{apply_s_alpha, enumerate_multilinear, enumerate_multilinear_all, r_weight, tcd, word_of};

pub use field::{companion, is_prime, jordan_block, smallest_irreducible, Echelon, FfMatrix};

/// Strictly increasing 1-based column indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PivotSet(Vec<usize>);

impl PivotSet {
    pub fn new(c: Vec<usize>) -> Result<Self> {
        if c.windows(2).any(|w| w[0] >= w[1]) || c.first() == Some(&0) {
            return Err(Error::Parse(format!(
                "{c:?} is not a strictly increasing set of positive integers"
            )));
        }
        Ok(PivotSet(c))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The binary word `b(C)` of length `n`: 1 at pivot positions, 0 elsewhere.
    pub fn binary_word(&self, n: usize) -> Vec<usize> {
        let mut w = vec![0; n];
        for &c in &self.0 {
            w[c - 1] = 1;
        }
        w
    }

    /// `inv(b(C)) = sum_i (n - m - c_i + i)`, the number of free entries of an
    /// RREF matrix with these pivots.
    pub fn free_entries(&self, n: usize) -> usize {
        let m = self.0.len();
        self.0.iter().enumerate().map(|(i, &c)| n - m + i + 1 - c).sum()
    }
}

/// All `m`-subsets of `[n]` in lexicographic order.
pub fn pivot_sets(n: usize, m: usize) -> Vec<PivotSet> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<PivotSet>) {
        if left == 0 {
            out.push(PivotSet(cur.clone()));
            return;
        }
        for c in start..=n + 1 - left {
            cur.push(c);
            go(c + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m <= n {
        go(1, n, m, &mut Vec::new(), &mut out);
    }
    out
}

/// The RREF matrices with pivots `c`, free entries enumerated in row-major
/// order as base-`p` odometer digits.
pub struct SubspacesWithPivots {
    p: u64,
    n: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u64>,
    done: bool,
}

impl Iterator for SubspacesWithPivots {
    type Item = FfMatrix;

    fn next(&mut self) -> Option<FfMatrix> {
        if self.done {
            return None;
        }
        let mut rows = vec![vec![0u64; self.n]; self.pivots.len()];
        for (i, &c) in self.pivots.iter().enumerate() {
            rows[i][c - 1] = 1;
        }
        for (&(i, j), &d) in self.free.iter().zip(&self.digits) {
            rows[i][j] = d;
        }
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < self.p {
                break;
            }
            self.digits[k] = 0;
        }
        Some(FfMatrix::from_rows_in(self.p, self.n, &rows).expect("prime checked on construction"))
    }
}

/// Every subspace with pivot set `c` in `F_p^n`, as its RREF matrix.
pub fn subspaces_with_pivots(c: &PivotSet, n: usize, p: u64) -> Result<SubspacesWithPivots> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(&last) = c.0.last() {
        if last > n {
            return Err(Error::OutOfRange { value: last, max: n });
        }
    }
    let free =
        c.0.iter()
            .enumerate()
            .flat_map(|(i, &ci)| (ci..n).filter(|&j| !c.0.contains(&(j + 1))).map(move |j| (i, j)))
            .collect::<Vec<_>>();
    Ok(SubspacesWithPivots {
        p,
        n,
        pivots: c.0.clone(),
        digits: vec![0; free.len()],
        free,
        done: false,
    })
}

/// All `m`-dimensional subspaces of `F_p^n`, grouped by pivot set in
/// lexicographic order.
pub fn enumerate_subspaces(n: usize, m: usize, p: u64) -> Result<impl Iterator<Item = FfMatrix>> {
    let iters = pivot_sets(n, m)
        .iter()
        .map(|c| subspaces_with_pivots(c, n, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(iters.into_iter().flatten())
}

/// Subspaces of dimension `m` built independently of the pivot enumeration:
/// spans of a subspace of dimension `m - 1` and one more vector (vanishing on
/// its leading columns), deduplicated by their canonical form. Returns the set of canonical RREF matrices.
pub fn subspaces_by_spans(n: usize, m: usize, p: u64) -> Result<HashSet<FfMatrix>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let vectors: Vec<Vec<u64>> = (0..p.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = code % p;
                    code /= p;
                    d
                })
                .collect()
        })
        .filter(|v: &Vec<u64>| v.iter().any(|&x| x != 0))
        .collect();
    let mut layer: HashSet<FfMatrix> = HashSet::new();
    layer.insert(FfMatrix::zero(p, 0, n)?);
    for _ in 0..m {
        let mut next = HashSet::new();
        for w in &layer {
            let mut base = Echelon::new(p, n);
            for i in 0..w.nrows() {
                base.insert(w.row(i).to_vec());
            }
            let pivots: Vec<usize> = (0..w.nrows())
                .filter_map(|i| w.row(i).iter().position(|&x| x != 0))
                .collect();
            for v in vectors.iter().filter(|v| pivots.iter().all(|&j| v[j] == 0)) {
                let mut e = base.clone();
                if e.insert(v.clone()) {
                    next.insert(e.into_rref().0);
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// The profile of the subspace spanned by the rows of `w` under `delta`:
/// successive increments of `dim(W + delta W + ... + delta^{j-1} W)`.
pub fn profile(w: &FfMatrix, delta: &FfMatrix) -> Result<Partition> {
    let n = delta.nrows();
    if delta.ncols() != n || w.ncols() != n || w.p() != delta.p() {
        return Err(Error::DimensionMismatch(format!(
            "subspace in F^{} under a {}x{} operator",
            w.ncols(),
            delta.nrows(),
            delta.ncols()
        )));
    }
    let p = delta.p();
    let mut span = Echelon::new(p, n);
    for i in 0..w.nrows() {
        span.insert(w.row(i).to_vec());
    }
    let mut parts = Vec::new();
    let mut prev = 0;
    let mut frontier: Vec<Vec<u64>> = span.basis().map(<[u64]>::to_vec).collect();
    let mut dim = span.dim();
    for _ in 0..=n {
        if dim == prev {
            break;
        }
        parts.push(dim - prev);
        prev = dim;
        let mut grown = Vec::new();
        for v in frontier {
            let image = delta.apply(&v);
            if span.insert(image.clone()) {
                grown.push(image);
            }
        }
        // K_{j+1} = W + delta K_j; only the new directions need to be pushed
        frontier = grown;
        dim = span.dim();
    }
    let mu = Partition::new(parts.clone());
    assert!(mu.is_ok(), "profile {parts:?} is not weakly decreasing");
    mu
}

/// A diagonal operator given by its diagonal entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSpec {
    entries: Vec<u64>,
}

impl DiagonalSpec {
    pub fn new(entries: Vec<u64>) -> Self {
        DiagonalSpec { entries }
    }

    /// Block-scalar diagonal of type `alpha`: block `i` holds the value
    /// `i` (0-based), so `F_p` must have at least as many elements as blocks.
    pub fn block_scalar(alpha: &Composition, p: u64) -> Result<Self> {
        let blocks = alpha.parts().iter().filter(|&&a| a > 0).count() as u64;
        if blocks > p {
            return Err(Error::OutOfRange {
                value: blocks as usize,
                max: p as usize,
            });
        }
        let mut entries = Vec::with_capacity(alpha.size());
        for (k, &a) in alpha.parts().iter().filter(|&&a| a > 0).enumerate() {
            entries.extend(std::iter::repeat_n(k as u64, a));
        }
        Ok(DiagonalSpec { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Equal entries are contiguous.
    pub fn is_block_scalar(&self) -> bool {
        let mut seen = HashSet::new();
        let mut prev = None;
        for &e in &self.entries {
            if prev != Some(e) && !seen.insert(e) {
                return false;
            }
            prev = Some(e);
        }
        true
    }

    /// Block sizes of the partition of positions by equal entries, blocks
    /// ordered by first occurrence.
    pub fn type_composition(&self) -> Composition {
        let mut order: Vec<u64> = Vec::new();
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for &e in &self.entries {
            if !counts.contains_key(&e) {
                order.push(e);
            }
            *counts.entry(e).or_default() += 1;
        }
        Composition::new(order.iter().map(|e| counts[e]).collect())
    }

    pub fn to_matrix(&self, p: u64) -> Result<FfMatrix> {
        FfMatrix::diagonal(p, &self.entries)
    }
}

/// Number of subspaces of every dimension, keyed by profile.
pub fn profile_histogram(delta: &FfMatrix) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    for ((_, mu), count) in profile_histogram_by_pivots(delta)? {
        *out.entry(mu).or_default() += count;
    }
    Ok(out)
}

/// Number of subspaces keyed by `(pivot set, profile)`.
pub fn profile_histogram_by_pivots(delta: &FfMatrix) -> Result<BTreeMap<(PivotSet, Partition), u64>> {
    let n = delta.nrows();
    let p = delta.p();
    let mut out = BTreeMap::new();
    for m in 0..=n {
        for c in pivot_sets(n, m) {
            for w in subspaces_with_pivots(&c, n, p)? {
                *out.entry((c.clone(), profile(&w, delta)?)).or_default() += 1;
            }
        }
    }
    Ok(out)
}

/// Counts subspaces with profile exactly `mu` by enumerating every subspace
/// of dimension `mu_1`.
pub fn sigma_bruteforce(mu: &Partition, delta: &FfMatrix) -> Result<u64> {
    let n = delta.nrows();
    if mu.size() > n {
        return Ok(0);
    }
    let mut count = 0;
    for w in enumerate_subspaces(n, mu.first(), delta.p())? {
        if profile(&w, delta)? == *mu {
            count += 1;
        }
    }
    Ok(count)
}

/// `(q - 1)^{sum_{j>=2} mu_j} q^{sum_{j>=2} binom(mu_j, 2)}`.
pub fn prefactor(mu: &Partition) -> QPoly {
    QPoly::from_i64s(&[-1, 1])
        .pow(mu.size_below_first() as u32)
        .shift(mu.pairs_below_first())
}

/// `sigma(mu, Delta)` for a diagonal `Delta` of type `nu`:
/// `prefactor(mu) * b_mu,nu(q)`.
pub fn sigma_diagonal(mu: &Partition, nu: &Composition) -> QPoly {
    if mu.size() > nu.size() {
        return QPoly::zero();
    }
    prefactor(mu) * b_via_tableaux(mu, nu)
}

/// `sigma(mu, Delta)` as a sum over multilinear tableaux of shape `mu` with
/// no column meeting a block of `A_alpha` twice.
pub fn sigma_multilinear(mu: &Partition, alpha: &Composition) -> QPoly {
    let n = alpha.size();
    let sum: QPoly = enumerate_multilinear(mu, alpha, None)
        .iter()
        .map(|t| multilinear_term(t, alpha, n))
        .sum();
    prefactor(mu) * sum
}

fn multilinear_term(t: &crate::tableaux::Tableau, alpha: &Composition, n: usize) -> QPoly {
    let r = r_weight(&apply_s_alpha(t, alpha).expect("entries within [n]"));
    if r.is_zero() {
        return r;
    }
    let e = stat_alpha(Stat::Ninv, alpha, &word_of(t, n).0).expect("word has length n");
    r.shift(e)
}

/// `sigma^C(mu, Delta)`: subspaces with pivots `C` and profile `mu`, as a sum
/// over multilinear tableaux with first row `C`.
pub fn sigma_pivot(mu: &Partition, alpha: &Composition, c: &PivotSet) -> QPoly {
    let n = alpha.size();
    if c.len() != mu.first() {
        return QPoly::zero();
    }
    if mu.is_empty() {
        return QPoly::one();
    }
    let sum: QPoly = enumerate_multilinear_all(mu, n, Some(c.as_slice()))
        .iter()
        .map(|t| multilinear_term(t, alpha, n))
        .sum();
    prefactor(mu) * sum
}

/// `eta_alpha(C, D) = (q-1)^{|D|} q^{binom(|D|, 2)} r_q(S_alpha(T(C, D)))`.
pub fn eta(alpha: &Composition, c: &PivotSet, d: &PivotSet) -> Result<QPoly> {
    let t = tcd(c.as_slice(), d.as_slice());
    let r = r_weight(&apply_s_alpha(&t, alpha)?);
    let k = d.len();
    Ok(QPoly::from_i64s(&[-1, 1])
        .pow(k as u32)
        .shift(k * k.saturating_sub(1) / 2)
        * r)
}

/// The type of `Delta` restricted to the coordinates outside `C`.
pub fn residual_type(alpha: &Composition, c: &PivotSet) -> Composition {
    let sums = alpha.prefix_sums();
    Composition::new(
        alpha
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &a)| a - c.0.iter().filter(|&&x| x > sums[i] && x <= sums[i + 1]).count())
            .filter(|&a| a > 0)
            .collect(),
    )
}

/// `sigma^C(mu, Delta)` by the pivot recursion
/// `q^{inv_alpha(b(C))} sum_D eta_alpha(C, D) sigma^D_{n - mu_1}(mu~, Delta_C)`.
pub fn sigma_pivot_recursive(mu: &Partition, alpha: &Composition, c: &PivotSet) -> Result<QPoly> {
    let n = alpha.size();
    if c.len() != mu.first() {
        return Ok(QPoly::zero());
    }
    if mu.is_empty() {
        return Ok(QPoly::one());
    }
    let head = stat_alpha(Stat::Inv, alpha, &c.binary_word(n))?;
    let rest = mu.tail();
    if rest.is_empty() {
        return Ok(QPoly::q_pow(head));
    }
    let sub_alpha = residual_type(alpha, c);
    let mut total = QPoly::zero();
    for d in pivot_sets(n - mu.first(), rest.first()) {
        let e = eta(alpha, c, &d)?;
        if e.is_zero() {
            continue;
        }
        total += &(e * sigma_pivot_recursive(&rest, &sub_alpha, &d)?);
    }
    Ok(total.shift(head))
}

/// Regular diagonal `Delta` (all entries distinct):
/// `binom(n, |mu|) prefactor(mu) b_{mu, (1^|mu|)}(q)`.
pub fn sigma_regular_diagonal(mu: &Partition, n: usize) -> QPoly {
    if mu.size() > n {
        return QPoly::zero();
    }
    let b = b_via_tableaux(mu, &Composition::ones(mu.size()));
    (prefactor(mu) * b).scale(binomial(n, mu.size()))
}

/// `Delta` with irreducible characteristic polynomial of degree `n`:
/// `(q^n - 1)/(q^{mu_1} - 1) prod_{i>=2} q^{mu_i^2 - mu_i} [mu_{i-1} choose mu_i]_q`
/// for `mu` a partition of `n`. Only `0` and `F^n` are invariant, so every
/// other size gives zero; `mu` empty gives 1.
pub fn sigma_irreducible(mu: &Partition, n: usize) -> QPoly {
    if mu.is_empty() {
        return QPoly::one();
    }
    if mu.size() != n {
        return QPoly::zero();
    }
    let mut num = QPoly::monomial(1, n) - QPoly::one();
    for i in 2..=mu.len() {
        let m = mu.part(i);
        num = (num * q_binomial(mu.part(i - 1), m)).shift(m * m - m);
    }
    let den = QPoly::monomial(1, mu.first()) - QPoly::one();
    exact_div(&num, &den).expect("leading factor divides")
}

/// Regular nilpotent `Delta`: `prod_{i>=2} q^{mu_i^2} [mu_{i-1} choose mu_i]_q`.
pub fn sigma_regular_nilpotent(mu: &Partition) -> QPoly {
    (2..=mu.len())
        .map(|i| {
            let m = mu.part(i);
            q_binomial(mu.part(i - 1), m).shift(m * m)
        })
        .product()
}

/// `sum_m [n choose m]_q`, the total number of subspaces.
pub fn total_subspaces(n: usize) -> QPoly {
    (0..=n).map(|m| q_binomial(n, m)).sum()
}

/// Evaluates at an integer, for comparisons with brute-force counts.
pub fn at(poly: &QPoly, p: u64) -> BigInt {
    poly.eval(&BigInt::from(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn piv(v: &[usize]) -> PivotSet {
        PivotSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn free_entry_count() {
        assert_eq!(piv(&[2, 4, 5]).free_entries(5), 1);
        assert_eq!(subspaces_with_pivots(&piv(&[2, 4, 5]), 5, 3).unwrap().count(), 3);
        assert_eq!(enumerate_subspaces(4, 0, 2).unwrap().count(), 1);
        assert_eq!(enumerate_subspaces(4, 2, 2).unwrap().count(), 35);
        let inv = crate::shapes::inv(&piv(&[1, 3]).binary_word(4));
        assert_eq!(inv, piv(&[1, 3]).free_entries(4));
    }

    #[test]
    fn spans_match_pivot_enumeration() {
        let spans = subspaces_by_spans(4, 2, 3).unwrap();
        let direct: HashSet<FfMatrix> = enumerate_subspaces(4, 2, 3).unwrap().collect();
        assert_eq!(spans, direct);
    }

    #[test]
    fn trivial_profiles() {
        let id = FfMatrix::identity(3, 3).unwrap();
        let zero = FfMatrix::zero(3, 0, 3).unwrap();
        assert_eq!(profile(&zero, &id).unwrap(), Partition::empty());
        for w in enumerate_subspaces(3, 2, 3).unwrap() {
            assert_eq!(profile(&w, &id).unwrap(), part(&[2]));
        }
        let j = jordan_block(3, 2).unwrap();
        let e1 = FfMatrix::from_rows(2, &[vec![0, 0, 1]]).unwrap();
        assert_eq!(profile(&e1, &j).unwrap(), part(&[1, 1, 1]));
        assert!(profile(&e1, &FfMatrix::identity(2, 2).unwrap()).is_err());
    }

    #[test]
    fn diagonal_specs() {
        let d = DiagonalSpec::block_scalar(&comp(&[2, 1, 3]), 3).unwrap();
        assert_eq!(d.entries(), &[0, 0, 1, 2, 2, 2]);
        assert!(d.is_block_scalar());
        assert_eq!(d.type_composition(), comp(&[2, 1, 3]));
        assert!(DiagonalSpec::block_scalar(&comp(&[1, 1, 1]), 2).is_err());
        let scattered = DiagonalSpec::new(vec![0, 1, 0]);
        assert!(!scattered.is_block_scalar());
        assert_eq!(scattered.type_composition(), comp(&[2, 1]));
    }

    #[test]
    fn eta_example() {
        let alpha = comp(&[2, 3, 2, 2, 3]);
        let got = eta(&alpha, &piv(&[1, 2, 4, 7, 8]), &piv(&[1, 2, 3, 5])).unwrap();
        let f = |hi: usize, lo: usize| QPoly::q_pow(hi) - QPoly::q_pow(lo);
        assert_eq!(got, f(2, 0) * f(2, 1) * f(3, 2) * f(5, 3));
        assert_eq!(eta(&alpha, &piv(&[1, 2]), &piv(&[])).unwrap(), QPoly::one());
        let flat = Composition::ones(7);
        assert_eq!(eta(&flat, &piv(&[1, 4, 5]), &piv(&[1, 2, 4])).unwrap(), QPoly::zero());
    }

    #[test]
    fn headline_sigma() {
        let mu = part(&[5, 1]);
        let nu = comp(&[3, 3]);
        let expected = QPoly::from_i64s(&[-1, 1]) * QPoly::from_i64s(&[1, 2, 3, 2, 1]);
        assert_eq!(sigma_diagonal(&mu, &nu), expected);
        let by_pivot: QPoly = pivot_sets(6, 5).iter().map(|c| sigma_pivot(&mu, &nu, c)).sum();
        assert_eq!(by_pivot, expected);
        assert_eq!(sigma_multilinear(&mu, &nu), expected);
        assert_eq!(sigma_diagonal(&Partition::empty(), &nu), QPoly::one());
    }

    #[test]
    fn closed_forms_small() {
        assert_eq!(sigma_regular_nilpotent(&part(&[3])), QPoly::one());
        assert_eq!(sigma_regular_nilpotent(&part(&[2, 1])), QPoly::from_i64s(&[0, 1, 1]));
        assert_eq!(sigma_irreducible(&part(&[1, 1]), 2), QPoly::from_i64s(&[1, 1]));
        assert_eq!(sigma_irreducible(&part(&[1]), 2), QPoly::zero());
        assert_eq!(sigma_irreducible(&part(&[2]), 2), QPoly::one());
        assert_eq!(sigma_irreducible(&Partition::empty(), 2), QPoly::one());
    }

    #[test]
    fn line_counts_for_regular_diagonal() {
        let delta = DiagonalSpec::block_scalar(&comp(&[1, 1]), 3)
            .unwrap()
            .to_matrix(3)
            .unwrap();
        assert_eq!(sigma_bruteforce(&part(&[1]), &delta).unwrap(), 2);
        assert_eq!(at(&sigma_regular_diagonal(&part(&[1]), 2), 3), 2.into());
    }
}
