//! q-Stirling numbers `S_q(n, m; nu)`, Ferrers boards and q-rook numbers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bpoly::StripTables;
use crate::error::{Error, Result};
use crate::qarith::{binomial, exact_div, factorial, q_binomial, q_factorial, q_falling_factorial, q_int, QPoly};
use crate::setpart::{enumerate_partitions, SetPartition};
use crate::shapes::{partitions_of, Composition, Partition, Stat};

/// A board whose columns, left to right, have weakly increasing heights.
/// Cells are `(column, row)`, both 1-based, rows counted from the bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FerrersBoard {
    heights: Vec<usize>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Parse(format!("column heights {heights:?} must weakly increase")));
        }
        Ok(FerrersBoard { heights })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn num_columns(&self) -> usize {
        self.heights.len()
    }

    pub fn num_cells(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn contains(&self, (col, row): (usize, usize)) -> bool {
        col >= 1 && row >= 1 && self.heights.get(col - 1).is_some_and(|&h| row <= h)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(c, &h)| (1..=h).map(move |r| (c + 1, r)))
    }

    /// Appends `b` columns of height `a`.
    pub fn with_rectangle(&self, a: usize, b: usize) -> Result<Self> {
        let mut heights = self.heights.clone();
        heights.extend(std::iter::repeat_n(a, b));
        FerrersBoard::new(heights)
    }
}

impl FromStr for FerrersBoard {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FerrersBoard::new(Composition::from_str(s)?.parts().to_vec())
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("B{}", Composition::new(self.heights.clone())))
    }
}

/// The staircase `B_n` with heights `1, ..., n - 1`. Its column `c` carries
/// the label `c + 1`.
pub fn staircase(n: usize) -> FerrersBoard {
    FerrersBoard {
        heights: (1..n).collect(),
    }
}

/// The rectangular board `B(a^b)`: `b` columns of height `a`.
pub fn rectangle(a: usize, b: usize) -> FerrersBoard {
    FerrersBoard { heights: vec![a; b] }
}

/// `B(nu)`: `nu_2` columns of height `nu_1`, then `nu_3` of height
/// `nu_1 + nu_2`, and so on.
pub fn board_of_nu(nu: &Partition) -> FerrersBoard {
    let mut heights = Vec::new();
    let mut acc = 0;
    for (k, &v) in nu.parts().iter().enumerate() {
        if k > 0 {
            heights.extend(std::iter::repeat_n(acc, v));
        }
        acc += v;
    }
    FerrersBoard { heights }
}

/// Nonattacking rooks, stored as sorted `(column, row)` cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookPlacement {
    cells: BTreeSet<(usize, usize)>,
}

impl RookPlacement {
    /// Checks that the rooks are on `board` and pairwise nonattacking.
    pub fn new(cells: impl IntoIterator<Item = (usize, usize)>, board: &FerrersBoard) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        let mut cols = BTreeSet::new();
        let mut rows = BTreeSet::new();
        for &(c, r) in &cells {
            if !board.contains((c, r)) {
                return Err(Error::InvalidPlacement(format!("cell ({c}, {r}) is off the board")));
            }
            if !cols.insert(c) {
                return Err(Error::InvalidPlacement(format!("two rooks in column {c}")));
            }
            if !rows.insert(r) {
                return Err(Error::InvalidPlacement(format!("two rooks in row {r}")));
            }
        }
        Ok(RookPlacement { cells })
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// `rho(P)`: cells of `board` that hold no rook and are neither below nor to
/// the right of a rook.
pub fn rho_stat(placement: &RookPlacement, board: &FerrersBoard) -> Result<usize> {
    let checked = RookPlacement::new(placement.cells(), board)?;
    Ok(rho_unchecked(&checked.cells, board))
}

fn rho_unchecked(rooks: &BTreeSet<(usize, usize)>, board: &FerrersBoard) -> usize {
    board
        .cells()
        .filter(|&(c, r)| {
            !rooks
                .iter()
                .any(|&(rc, rr)| (rc == c && rr >= r) || (rr == r && c > rc))
        })
        .count()
}

/// Every placement of `m` nonattacking rooks on `board`, columns scanned left
/// to right.
pub fn placements(board: &FerrersBoard, m: usize) -> Vec<RookPlacement> {
    fn go(
        heights: &[usize],
        col: usize,
        left: usize,
        used_rows: &mut Vec<bool>,
        cur: &mut BTreeSet<(usize, usize)>,
        out: &mut Vec<RookPlacement>,
    ) {
        if left == 0 {
            out.push(RookPlacement { cells: cur.clone() });
            return;
        }
        if heights.len() - col < left {
            return;
        }
        // column `col` left empty
        go(heights, col + 1, left, used_rows, cur, out);
        for r in 1..=heights[col] {
            if used_rows[r] {
                continue;
            }
            used_rows[r] = true;
            cur.insert((col + 1, r));
            go(heights, col + 1, left - 1, used_rows, cur, out);
            cur.remove(&(col + 1, r));
            used_rows[r] = false;
        }
    }
    let max_h = board.heights.last().copied().unwrap_or(0);
    let mut out = Vec::new();
    go(
        &board.heights,
        0,
        m,
        &mut vec![false; max_h + 1],
        &mut BTreeSet::new(),
        &mut out,
    );
    out
}

/// The Garsia-Remmel q-rook number `r_m(B) = sum_P q^{rho(P)}`.
pub fn rook_number(board: &FerrersBoard, m: usize) -> QPoly {
    placements(board, m)
        .iter()
        .map(|p| QPoly::q_pow(rho_unchecked(&p.cells, board)))
        .sum()
}

/// `r_m(B(a^b)) = q^{(a-m)(b-m)} [b choose m]_q [a]_q! / [a-m]_q!`.
pub fn rook_rectangular(a: usize, b: usize, m: usize) -> QPoly {
    if m > a || m > b {
        return QPoly::zero();
    }
    (q_binomial(b, m) * q_falling_factorial(a, m)).shift((a - m) * (b - m))
}

/// `r_m(B + B(a^b))` from the rook numbers of `B`, for `B` no taller than `a`:
/// `sum_j r_j(B) q^{(a-m)(b-m+j)} [b choose m-j]_q [a-j]_q! / [a-m]_q!`.
pub fn rook_convolution(board: &FerrersBoard, a: usize, b: usize, m: usize) -> QPoly {
    if m > a {
        return QPoly::zero();
    }
    let mut total = QPoly::zero();
    for j in 0..=m.min(board.num_columns()) {
        if m - j > b {
            continue;
        }
        let coeff = q_binomial(b, m - j) * q_falling_factorial(a - j, m - j);
        total += &(rook_number(board, j) * coeff).shift((a - m) * (b + j - m));
    }
    total
}

/// Rooks at `(row i, column label j)` for consecutive `i < j` in a block, as
/// cells of the staircase `B_n` (column label `j` is column `j - 1`).
pub fn partition_to_placement(a: &SetPartition) -> RookPlacement {
    let cells = a
        .blocks()
        .iter()
        .flat_map(|b| b.windows(2).map(|w| (w[1] - 1, w[0])))
        .collect();
    RookPlacement { cells }
}

/// Inverse of [`partition_to_placement`].
pub fn placement_to_partition(p: &RookPlacement, n: usize) -> SetPartition {
    let mut next = vec![0; n + 1];
    let mut has_prev = vec![false; n + 1];
    for (c, r) in p.cells() {
        next[r] = c + 1;
        has_prev[c + 1] = true;
    }
    let blocks = (1..=n)
        .filter(|&i| !has_prev[i])
        .map(|start| {
            let mut block = vec![start];
            let mut x = start;
            while next[x] != 0 {
                x = next[x];
                block.push(x);
            }
            block
        })
        .collect();
    SetPartition::from_blocks(blocks).expect("placement encodes a set partition")
}

/// How to compute `S_q(n, m; nu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StirlingMethod {
    /// `sum_{mu |- n, mu_1 = m} q^{sum_{j>=2} binom(mu_j, 2)} b_mu,nu(q)`.
    Definition,
    /// The convolution recursion removing the last part of `nu`.
    Recursion,
    /// `q^{-binom(m,2) + sum binom(nu_j, 2)} r_{n-m}(B(nu))`.
    Rook,
    /// Sum over `m`-block partitions minimally meeting `A_nu`.
    SetStatistic(Stat),
}

impl StirlingMethod {
    pub const ALL: [StirlingMethod; 6] = [
        StirlingMethod::Definition,
        StirlingMethod::Recursion,
        StirlingMethod::Rook,
        StirlingMethod::SetStatistic(Stat::Inv),
        StirlingMethod::SetStatistic(Stat::Ninv),
        StirlingMethod::SetStatistic(Stat::Maj),
    ];

    pub fn name(self) -> String {
        match self {
            StirlingMethod::Definition => "definition".into(),
            StirlingMethod::Recursion => "recursion".into(),
            StirlingMethod::Rook => "rook".into(),
            StirlingMethod::SetStatistic(s) => format!("setstat-{s}"),
        }
    }
}

impl FromStr for StirlingMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition" => Ok(StirlingMethod::Definition),
            "recursion" => Ok(StirlingMethod::Recursion),
            "rook" => Ok(StirlingMethod::Rook),
            "setstat" => Ok(StirlingMethod::SetStatistic(Stat::Inv)),
            _ => match s.strip_prefix("setstat-") {
                Some(stat) => Ok(StirlingMethod::SetStatistic(stat.parse()?)),
                None => Err(Error::Parse(format!("unknown stirling method {s:?}"))),
            },
        }
    }
}

fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn check_nu(n: usize, nu: &Partition) -> Result<()> {
    if nu.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: nu.size(),
        });
    }
    Ok(())
}

/// `S_q(n, m; nu)` for `nu` a partition of `n`.
pub fn stirling_q(n: usize, m: usize, nu: &Partition, method: StirlingMethod) -> Result<QPoly> {
    check_nu(n, nu)?;
    let out = match method {
        StirlingMethod::Definition => {
            let mut tables = StripTables::new();
            let mut total = QPoly::zero();
            for mu in partitions_of(n).into_iter().filter(|mu| mu.first() == m) {
                total += &tables.b(&mu, nu)?.shift(mu.pairs_below_first());
            }
            total
        }
        StirlingMethod::Recursion => stirling_recursive(m, nu),
        StirlingMethod::Rook => {
            if m > n {
                QPoly::zero()
            } else {
                let shift: usize = nu.parts().iter().map(|&v| pairs(v)).sum();
                let r = rook_number(&board_of_nu(nu), n - m).shift(shift);
                exact_div(&r, &QPoly::q_pow(pairs(m)))?
            }
        }
        StirlingMethod::SetStatistic(phi) => {
            let alpha = nu.as_composition();
            let mut total = QPoly::zero();
            for a in enumerate_partitions(n, None, Some(&alpha)) {
                if a.blocks().len() != m {
                    continue;
                }
                let lambda = a.shape();
                let extra: usize = lambda.parts().iter().enumerate().map(|(i, &l)| i * (l - 1)).sum();
                total += &QPoly::q_pow(a.interlacings(Some(&alpha)) + a.phi_alpha(phi, &alpha)? + extra);
            }
            total
        }
    };
    assert!(out.is_nonnegative(), "S_q has a negative coefficient: {out}");
    Ok(out)
}

fn stirling_recursive(m: usize, nu: &Partition) -> QPoly {
    let n = nu.size();
    match nu.len() {
        0 => return if m == 0 { QPoly::one() } else { QPoly::zero() },
        1 => return if m == n { QPoly::one() } else { QPoly::zero() },
        _ => {}
    }
    let k = *nu.parts().last().expect("nonempty");
    let rest = nu.without_last();
    let mut total = QPoly::zero();
    for r in 0..=k.min(m) {
        let inner = stirling_recursive(m - r, &rest);
        if inner.is_zero() {
            continue;
        }
        let coeff = (q_binomial(k, r) * q_binomial(m - r, k - r) * q_factorial(k - r)).shift(pairs(k - r));
        total += &(coeff * inner);
    }
    total
}

/// Carlitz q-Stirling numbers: `S_q(n, m) = S_q(n-1, m-1) + [m]_q S_q(n-1, m)`.
pub fn carlitz(n: usize, m: usize) -> QPoly {
    let mut row = vec![QPoly::one()];
    for i in 1..=n {
        let mut next = vec![QPoly::zero(); i + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut v = QPoly::zero();
            if j >= 1 && j - 1 < row.len() {
                v += &row[j - 1];
            }
            if j < row.len() {
                v += &(&q_int(j) * &row[j]);
            }
            *slot = v;
        }
        row = next;
    }
    row.get(m).cloned().unwrap_or_default()
}

/// `S(n, m; nu)` by its own recursion
/// `sum_r S(n - nu_k, m - r; nu^) C(nu_k, r) C(m - r, nu_k - r) (nu_k - r)!`.
pub fn stirling_one(n: usize, m: usize, nu: &Partition) -> Result<BigInt> {
    check_nu(n, nu)?;
    Ok(stirling_one_rec(m, nu))
}

fn stirling_one_rec(m: usize, nu: &Partition) -> BigInt {
    let Some(&k) = nu.parts().last() else {
        return BigInt::from(u8::from(m == 0));
    };
    let rest = nu.without_last();
    let mut total = BigInt::zero();
    for r in 0..=k.min(m) {
        let inner = stirling_one_rec(m - r, &rest);
        if inner.is_zero() {
            continue;
        }
        total += inner * binomial(k, r) * binomial(m - r, k - r) * factorial(k - r);
    }
    total
}

/// `S(n, m; nu)` by counting `m`-block partitions minimally meeting `A_nu`.
pub fn stirling_direct(n: usize, m: usize, nu: &Partition) -> Result<u64> {
    check_nu(n, nu)?;
    let alpha = nu.as_composition();
    Ok(enumerate_partitions(n, None, Some(&alpha))
        .filter(|a| a.blocks().len() == m)
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn staircase_example() {
        let a: SetPartition = "14|235".parse().unwrap();
        let p = partition_to_placement(&a);
        // labels (row, column label): (1,4), (2,3), (3,5)
        let expected: Vec<(usize, usize)> = vec![(2, 2), (3, 1), (4, 3)];
        assert_eq!(p.cells().collect::<Vec<_>>(), expected);
        assert_eq!(rho_stat(&p, &staircase(5)).unwrap(), 3);
        assert_eq!(placement_to_partition(&p, 5), a);
    }

    #[test]
    fn empty_and_single_rooks() {
        let b = FerrersBoard::new(vec![1, 2, 2]).unwrap();
        assert_eq!(rho_stat(&RookPlacement::default(), &b).unwrap(), 5);
        let rect = rectangle(3, 4);
        let p = RookPlacement::new([(1, 3)], &rect).unwrap();
        assert_eq!(rho_stat(&p, &rect).unwrap(), 12 - 1 - (2 + 3));
        assert!(RookPlacement::new([(1, 1), (2, 1)], &rect).is_err());
        assert!(RookPlacement::new([(5, 1)], &rect).is_err());
        assert_eq!(rook_number(&b, 0), QPoly::q_pow(5));
    }

    #[test]
    fn boards_of_nu() {
        assert_eq!(board_of_nu(&part(&[4])).num_columns(), 0);
        assert_eq!(board_of_nu(&Partition::ones(5)), staircase(5));
        assert_eq!(board_of_nu(&part(&[3, 2, 1])).heights(), &[3, 3, 5]);
    }

    #[test]
    fn carlitz_small() {
        assert_eq!(carlitz(3, 2), QPoly::from_i64s(&[2, 1]));
        assert_eq!(carlitz(0, 0), QPoly::one());
        let b3 = staircase(3);
        let via_rooks = exact_div(&rook_number(&b3, 1), &QPoly::q_pow(1)).unwrap();
        assert_eq!(via_rooks, carlitz(3, 2));
    }

    #[test]
    fn stirling_examples() {
        let ones = Partition::ones(4);
        assert_eq!(stirling_one(4, 2, &ones).unwrap(), 7.into());
        assert_eq!(stirling_direct(4, 2, &ones).unwrap(), 7);
        assert_eq!(stirling_one(4, 4, &part(&[2, 2])).unwrap(), 1.into());
        assert_eq!(stirling_one(4, 0, &part(&[2, 2])).unwrap(), 0.into());
        for method in StirlingMethod::ALL {
            assert_eq!(stirling_q(3, 3, &part(&[3]), method).unwrap(), QPoly::one());
            assert_eq!(stirling_q(3, 2, &part(&[3]), method).unwrap(), QPoly::zero());
            assert_eq!(stirling_q(4, 2, &ones, method).unwrap(), carlitz(4, 2));
        }
        assert!(stirling_q(4, 2, &part(&[2, 1]), StirlingMethod::Rook).is_err());
    }

    #[test]
    fn method_names_round_trip() {
        for method in StirlingMethod::ALL {
            assert_eq!(method.name().parse::<StirlingMethod>().unwrap(), method);
        }
    }
}
