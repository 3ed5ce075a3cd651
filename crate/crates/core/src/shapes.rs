//! Partitions, weak compositions, words and Mahonian word statistics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

/// Weak composition: zero parts are allowed and meaningful.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

/// A word over the nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Partition {
    /// Builds a partition, checking that `parts` is weakly decreasing once
    /// trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `mu_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Drops the first part: `(mu_2, mu_3, ...)`.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// Drops the last part.
    pub fn without_last(&self) -> Partition {
        let mut v = self.0.clone();
        v.pop();
        Partition(v)
    }

    /// `sum_{j >= 2} mu_j`.
    pub fn size_below_first(&self) -> usize {
        self.0.iter().skip(1).sum()
    }

    /// `sum_{j >= 2} binom(mu_j, 2)`.
    pub fn pairs_below_first(&self) -> usize {
        self.0.iter().skip(1).map(|&m| m * m.saturating_sub(1) / 2).sum()
    }

    /// Multiplicities `m_i(mu)` for `i = 1..=mu_1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first()];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums `alpha_1 + ... + alpha_i` for `i = 0..=len`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        std::iter::once(0)
            .chain(self.0.iter().map(|&a| {
                acc += a;
                acc
            }))
            .collect()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.as_composition()
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition(parse_list(s)?))
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("({})", join(&self.0)))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("({})", join(&self.0)))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            if x < 10 {
                write!(f, "{x}")?;
            } else {
                write!(f, "[{x}]")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    /// Single-digit letters, e.g. `"1212123"`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Conjugate partition (column lengths of the Young diagram).
pub fn conjugate(mu: &Partition) -> Partition {
    let parts = (1..=mu.first())
        .map(|c| mu.0.iter().take_while(|&&p| p >= c).count())
        .collect();
    Partition(parts)
}

/// Weakly decreasing rearrangement, zeros dropped.
pub fn sort_composition(alpha: &Composition) -> Partition {
    let mut v: Vec<usize> = alpha.0.iter().copied().filter(|&a| a > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition(v)
}

/// Dominance order `mu >= lambda`.
pub fn dominates(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0, 0);
    for i in 1..=len {
        a += mu.part(i);
        b += lambda.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All `rho` with `mu / rho` a horizontal strip of size `k`:
/// `mu_i >= rho_i >= mu_{i+1}` and `|mu| - |rho| = k`.
pub fn horizontal_strips(mu: &Partition, k: usize) -> Vec<Partition> {
    fn go(mu: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > mu.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interleaving keeps order"));
            }
            return;
        }
        let hi = mu.part(i);
        let lo = mu.part(i + 1);
        // removing `hi - r` cells from row i
        let max_removable: usize = (i..=mu.len()).map(|j| mu.part(j) - mu.part(j + 1)).sum();
        if max_removable < left {
            return;
        }
        for r in (lo..=hi).rev() {
            let removed = hi - r;
            if removed > left {
                break;
            }
            cur.push(r);
            go(mu, i + 1, left - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= mu.size() {
        go(mu, 1, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `mu / rho` is a horizontal strip.
pub fn is_horizontal_strip(mu: &Partition, rho: &Partition) -> bool {
    (1..=mu.len()).all(|i| mu.part(i) >= rho.part(i) && rho.part(i) >= mu.part(i + 1)) && rho.len() <= mu.len()
}

/// Word statistic used to build set-partition statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Inv,
    Ninv,
    Maj,
}

impl Stat {
    pub const ALL: [Stat; 3] = [Stat::Inv, Stat::Ninv, Stat::Maj];

    pub fn apply(self, w: &[usize]) -> usize {
        match self {
            Stat::Inv => inv(w),
            Stat::Ninv => ninv(w),
            Stat::Maj => maj(w),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::Inv => "inv",
            Stat::Ninv => "ninv",
            Stat::Maj => "maj",
        }
    }
}

impl FromStr for Stat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inv" => Ok(Stat::Inv),
            "ninv" => Ok(Stat::Ninv),
            "maj" => Ok(Stat::Maj),
            _ => Err(Error::Parse(format!("unknown statistic {s:?}"))),
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Pairs `i < j` with `w_i > w_j`.
pub fn inv(w: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Pairs `i < j` with `w_i < w_j`.
pub fn ninv(w: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] < w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Major index: sum of the 1-based descent positions.
pub fn maj(w: &[usize]) -> usize {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .sum()
}

/// `phi_alpha(w)`: sum of `phi` over the consecutive segments of `w` with
/// lengths `alpha_1, alpha_2, ...`.
pub fn stat_alpha(phi: Stat, alpha: &Composition, w: &[usize]) -> Result<usize> {
    if alpha.size() != w.len() {
        return Err(Error::LengthMismatch {
            expected: alpha.size(),
            actual: w.len(),
        });
    }
    let mut start = 0;
    let mut total = 0;
    for &a in alpha.parts() {
        total += phi.apply(&w[start..start + a]);
        start += a;
    }
    Ok(total)
}

/// Iterator over the rearrangement class `R(beta)` in lexicographic order.
pub struct MultisetPerms {
    next: Option<Vec<usize>>,
}

impl Iterator for MultisetPerms {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Word(cur))
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Words with `beta_i` copies of the letter `i` (1-based).
pub fn multiset_perms(beta: &Composition) -> MultisetPerms {
    let start: Vec<usize> = beta
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &b)| std::iter::repeat_n(i + 1, b))
        .collect();
    MultisetPerms { next: Some(start) }
}

/// Positions `1..=n` split into consecutive blocks of sizes `alpha_i`; zero
/// parts contribute no block.
pub fn canonical_blocks(alpha: &Composition) -> Vec<Vec<usize>> {
    let sums = alpha.prefix_sums();
    alpha
        .parts()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, _)| (sums[i] + 1..=sums[i + 1]).collect())
        .collect()
}

/// Least `i` (1-based) with `x <= alpha_1 + ... + alpha_i`.
pub fn s_alpha_of(x: usize, alpha: &Composition) -> Result<usize> {
    if x == 0 || x > alpha.size() {
        return Err(Error::OutOfRange {
            value: x,
            max: alpha.size(),
        });
    }
    let sums = alpha.prefix_sums();
    Ok(sums.iter().position(|&s| x <= s).expect("x within total"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(s: &str) -> Vec<usize> {
        s.parse::<Word>().unwrap().0
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate(&part(&[5, 3, 1])), part(&[3, 2, 2, 1, 1]));
        for n in 0..=10 {
            for mu in partitions_of(n) {
                assert_eq!(conjugate(&conjugate(&mu)), mu);
            }
        }
    }

    #[test]
    fn trailing_zeros_are_ignored() {
        assert_eq!(part(&[3, 1, 1, 0, 0]), part(&[3, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("3, 3".parse::<Partition>().unwrap(), part(&[3, 3]));
    }

    #[test]
    fn dominance_and_sort() {
        assert!(dominates(&part(&[2]), &part(&[1, 1])).unwrap());
        assert!(!dominates(&part(&[1, 1]), &part(&[2])).unwrap());
        assert!(dominates(&part(&[2]), &part(&[1])).is_err());
        assert_eq!(sort_composition(&Composition::new(vec![2, 3, 1])), part(&[3, 2, 1]));
        assert_eq!(sort_composition(&Composition::new(vec![0, 2, 0, 1])), part(&[2, 1]));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(horizontal_strips(&part(&[4]), 4), vec![Partition::empty()]);
        assert_eq!(horizontal_strips(&part(&[2, 2]), 2), vec![part(&[2])]);
        let mut got = horizontal_strips(&part(&[3, 1]), 2);
        got.sort();
        assert_eq!(got, vec![part(&[1, 1]), part(&[2])]);
        assert!(horizontal_strips(&part(&[1, 1]), 2).is_empty());
    }

    #[test]
    fn word_statistics() {
        assert_eq!(inv(&w("211")), 2);
        assert_eq!(ninv(&w("111")), 0);
        assert_eq!(ninv(&w("123")), 3);
        assert_eq!(maj(&w("21")), 1);
        assert_eq!(inv(&w("112")), 0);
        assert_eq!(maj(&w("1212123")), 2 + 4);
    }

    #[test]
    fn stat_alpha_examples() {
        let a = Composition::new(vec![3, 0, 2, 1, 1]);
        assert_eq!(stat_alpha(Stat::Inv, &a, &w("1212123")).unwrap(), 2);
        let a = Composition::new(vec![3, 3, 3]);
        assert_eq!(stat_alpha(Stat::Inv, &a, &w("111212231")).unwrap(), 3);
        let whole = Composition::new(vec![7]);
        for phi in Stat::ALL {
            assert_eq!(
                stat_alpha(phi, &whole, &w("1212123")).unwrap(),
                phi.apply(&w("1212123"))
            );
        }
        assert!(matches!(
            stat_alpha(Stat::Inv, &Composition::new(vec![2]), &w("111")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn multiset_permutations() {
        let v: Vec<_> = multiset_perms(&Composition::new(vec![2])).collect();
        assert_eq!(v, vec![Word(vec![1, 1])]);
        let v: Vec<_> = multiset_perms(&Composition::new(vec![1, 1])).collect();
        assert_eq!(v, vec![Word(vec![1, 2]), Word(vec![2, 1])]);
        let v: Vec<_> = multiset_perms(&Composition::new(vec![1, 0, 2])).collect();
        assert_eq!(v.len(), 3);
        assert_eq!(v[0], Word(vec![1, 3, 3]));
        assert_eq!(multiset_perms(&Composition::new(vec![])).count(), 1);
    }

    #[test]
    fn canonical_blocks_and_s_alpha() {
        assert_eq!(
            canonical_blocks(&Composition::new(vec![2, 3, 1])),
            vec![vec![1, 2], vec![3, 4, 5], vec![6]]
        );
        assert_eq!(
            canonical_blocks(&Composition::new(vec![2, 0, 1])),
            vec![vec![1, 2], vec![3]]
        );
        let a = Composition::new(vec![3, 3, 3]);
        assert_eq!(s_alpha_of(4, &a).unwrap(), 2);
        assert_eq!(s_alpha_of(9, &a).unwrap(), 3);
        assert_eq!(s_alpha_of(1, &a).unwrap(), 1);
        assert!(s_alpha_of(10, &a).is_err());
        assert!(s_alpha_of(0, &a).is_err());
        // zero parts are skipped over
        assert_eq!(s_alpha_of(3, &Composition::new(vec![2, 0, 1])).unwrap(), 3);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
