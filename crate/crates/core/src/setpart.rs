//! Set partitions of `[n]` in standard form, arcs, interlacings and the
//! statistics `phi_alpha`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::{canonical_blocks, stat_alpha, Composition, Partition, Stat, Word};

/// A set partition of `{1, ..., n}` with ascending blocks ordered by their
/// least elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

/// The `j`-th arc of a block joins its `j`-th and `(j+1)`-th smallest
/// elements; the last arc ends at `right = n + 1`, which stands for infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
    pub block: usize,
    pub index: usize,
}

impl SetPartition {
    /// Validates that `blocks` is a set partition of `[n]` in standard form.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (k, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::Parse(format!("block {} is empty", k + 1)));
            }
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!("block {} is not ascending", k + 1)));
            }
            if k > 0 && blocks[k - 1][0] > b[0] {
                return Err(Error::Parse(format!("block {} starts below block {}", k + 1, k)));
            }
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::OutOfRange { value: x, max: n });
                }
                if seen[x] {
                    return Err(Error::Parse(format!("element {x} appears twice")));
                }
                seen[x] = true;
            }
        }
        Ok(SetPartition { blocks, n })
    }

    /// Sorts blocks and orders them by least element.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        SetPartition::new(blocks)
    }

    /// Partition from a restricted growth string (`rgs[i]` is the 0-based
    /// block of `i + 1`).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let k = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { blocks, n: rgs.len() }
    }

    /// The canonical partition `A_alpha` into consecutive intervals.
    pub fn canonical(alpha: &Composition) -> Self {
        SetPartition {
            blocks: canonical_blocks(alpha),
            n: alpha.size(),
        }
    }

    /// All singletons `1|2|...|n`.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            blocks: (1..=n).map(|i| vec![i]).collect(),
            n,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Block index (0-based) of every element, indexed by element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut of = vec![usize::MAX; self.n + 1];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                of[x] = k;
            }
        }
        of
    }

    /// Sorted block sizes.
    pub fn shape(&self) -> Partition {
        let mut sizes: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(sizes).expect("sorted sizes")
    }

    /// `w(A)`: letter `i` is the rank of `i` within its block.
    pub fn word(&self) -> Word {
        let mut w = vec![0; self.n];
        for b in &self.blocks {
            for (j, &x) in b.iter().enumerate() {
                w[x - 1] = j + 1;
            }
        }
        Word(w)
    }

    /// Every arc, grouped by block.
    pub fn arcs(&self) -> Vec<Arc> {
        let inf = self.n + 1;
        let mut out = Vec::new();
        for (k, b) in self.blocks.iter().enumerate() {
            for (j, &x) in b.iter().enumerate() {
                out.push(Arc {
                    left: x,
                    right: b.get(j + 1).copied().unwrap_or(inf),
                    block: k,
                    index: j + 1,
                });
            }
        }
        out
    }

    /// `i(A)` when `alpha` is `None`, otherwise `i_alpha(A)`.
    pub fn interlacings(&self, alpha: Option<&Composition>) -> usize {
        let alpha_block = alpha.map(|a| SetPartition::canonical(a).block_of());
        let arcs = self.arcs();
        let mut count = 0;
        for (x, e) in arcs.iter().enumerate() {
            for f in &arcs[x + 1..] {
                if e.index != f.index || e.block == f.block {
                    continue;
                }
                let (first, second) = if e.left < f.left { (e, f) } else { (f, e) };
                // a < c < b < d with (a, b) = first, (c, d) = second
                let (b, c) = (first.right, second.left);
                if !(c < b && b < second.right) {
                    continue;
                }
                if let Some(of) = &alpha_block {
                    if b <= self.n && of.get(b) == of.get(c) {
                        continue;
                    }
                }
                count += 1;
            }
        }
        count
    }

    /// `phi_alpha(A) = phi_alpha(w(A))`.
    pub fn phi_alpha(&self, phi: Stat, alpha: &Composition) -> Result<usize> {
        stat_alpha(phi, alpha, &self.word().0)
    }

    /// Whether every block of `self` meets every block of `other` in at most
    /// one element.
    pub fn minimally_intersects(&self, other: &SetPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let of = other.block_of();
        Ok(self.blocks.iter().all(|b| {
            let mut hit: Vec<usize> = b.iter().map(|&x| of[x]).collect();
            hit.sort_unstable();
            hit.windows(2).all(|w| w[0] != w[1])
        }))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n >= 10;
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                match (wide, items.len()) {
                    (false, _) => items.concat(),
                    (true, 1) => format!("{},", items[0]),
                    (true, _) => items.join(","),
                }
            })
            .collect();
        f.pad(&parts.join("|"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Blocks separated by `|`; elements are single digits unless the block
    /// contains commas.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return SetPartition::new(Vec::new());
        }
        let blocks = s
            .split('|')
            .map(|b| {
                let b = b.trim();
                if b.contains(',') {
                    b.split(',')
                        .filter(|t| !t.trim().is_empty())
                        .map(|t| {
                            t.trim()
                                .parse::<usize>()
                                .map_err(|e| Error::Parse(format!("bad element {t:?}: {e}")))
                        })
                        .collect::<Result<Vec<_>>>()
                } else {
                    b.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|d| d as usize)
                                .ok_or_else(|| Error::Parse(format!("bad element {c:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}

pub fn shape_of(a: &SetPartition) -> Partition {
    a.shape()
}

pub fn minimally_intersecting(a: &SetPartition, b: &SetPartition) -> Result<bool> {
    a.minimally_intersects(b)
}

pub fn word_of_partition(a: &SetPartition) -> Word {
    a.word()
}

pub fn interlacings(a: &SetPartition, alpha: Option<&Composition>) -> usize {
    a.interlacings(alpha)
}

pub fn phi_alpha(phi: Stat, alpha: &Composition, a: &SetPartition) -> Result<usize> {
    a.phi_alpha(phi, alpha)
}

/// Iterator over set partitions of `[n]` in restricted-growth-string order.
pub struct Partitions {
    rgs: Vec<usize>,
    max: Vec<usize>,
    done: bool,
}

impl Partitions {
    fn new(n: usize) -> Self {
        Partitions {
            rgs: vec![0; n],
            max: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_rgs(&self.rgs);
        let n = self.rgs.len();
        // advance: rightmost position that can grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let prefix_max = self.max[i - 1];
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                self.max[i] = prefix_max.max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[i];
                }
                break;
            }
        }
        Some(out)
    }
}

/// All of `Pi_n`, or `Pi_n(shape)`, or `Pi(shape, alpha)` (those minimally
/// intersecting `A_alpha`).
pub fn enumerate_partitions(
    n: usize,
    shape: Option<&Partition>,
    alpha: Option<&Composition>,
) -> impl Iterator<Item = SetPartition> {
    let shape = shape.cloned();
    let canonical = alpha.map(SetPartition::canonical);
    Partitions::new(n).filter(move |a| {
        shape.as_ref().is_none_or(|s| a.shape() == *s)
            && canonical
                .as_ref()
                .is_none_or(|c| a.minimally_intersects(c).unwrap_or(false))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn parse_and_display() {
        let a = sp("127|34|56");
        assert_eq!(a.n(), 7);
        assert_eq!(a.to_string(), "127|34|56");
        assert!("21|3".parse::<SetPartition>().is_err());
        assert!("2|13".parse::<SetPartition>().is_err());
        assert!("12|24".parse::<SetPartition>().is_err());
        assert!("13".parse::<SetPartition>().is_err());
        let wide = sp("1,10|2,|3,|4,|5,|6,|7,|8,|9,");
        assert_eq!(wide.n(), 10);
        assert_eq!(wide.to_string(), "1,10|2,|3,|4,|5,|6,|7,|8,|9,");
        assert_eq!(sp("1,10|2|3|4|5|6|7|8|9"), wide);
    }

    #[test]
    fn words_and_shapes() {
        assert_eq!(sp("127|34|56").word().to_string(), "1212123");
        assert_eq!(sp("16|2|348|57|9").word().to_string(), "111212231");
        assert_eq!(SetPartition::singletons(4).word().to_string(), "1111");
        assert_eq!(
            sp("16|2|348|57|9").shape(),
            Partition::new(vec![3, 2, 2, 1, 1]).unwrap()
        );
    }

    #[test]
    fn minimal_intersection() {
        let c = SetPartition::canonical(&comp(&[3, 3, 1]));
        assert!(!sp("127|34|56").minimally_intersects(&c).unwrap());
        let s = SetPartition::singletons(7);
        assert!(sp("127|34|56").minimally_intersects(&s).unwrap());
        assert!(sp("12").minimally_intersects(&s).is_err());
    }

    #[test]
    fn interlacing_examples() {
        assert_eq!(sp("127|36|45").interlacings(None), 2);
        assert_eq!(sp("18|2|36|4|5|7").interlacings(Some(&comp(&[4, 4]))), 3);
    }

    #[test]
    fn interlacing_middle_points() {
        // (2,7) crosses (6,inf) and (5,inf); the first pair has middle points 6, 7
        let a = sp("127|36|45");
        assert_eq!(a.interlacings(Some(&comp(&[3, 2, 1, 1]))), 2);
        assert_eq!(a.interlacings(Some(&comp(&[2, 3, 2]))), 1);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            sp("127|34|56").phi_alpha(Stat::Inv, &comp(&[3, 0, 2, 1, 1])).unwrap(),
            2
        );
        assert_eq!(sp("14|2|3|5|6").phi_alpha(Stat::Inv, &comp(&[3, 3])).unwrap(), 2);
        assert_eq!(sp("1|2|36|4|5").phi_alpha(Stat::Inv, &comp(&[3, 3])).unwrap(), 0);
    }

    #[test]
    fn enumeration_counts() {
        let bell: Vec<usize> = (0..=7).map(|n| enumerate_partitions(n, None, None).count()).collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203, 877]);
        let ones = Partition::ones(5);
        assert_eq!(enumerate_partitions(5, Some(&ones), None).count(), 1);
        let shape = Partition::new(vec![2, 1, 1, 1, 1]).unwrap();
        assert_eq!(enumerate_partitions(6, Some(&shape), Some(&comp(&[3, 3]))).count(), 9);
    }

    #[test]
    fn enumeration_is_distinct_and_standard() {
        let all: Vec<_> = enumerate_partitions(6, None, None).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        for a in &all {
            assert_eq!(SetPartition::new(a.blocks().to_vec()).unwrap(), *a);
        }
    }
}
