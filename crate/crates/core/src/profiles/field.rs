//! Dense matrices over a prime field and incremental row reduction.

use std::fmt;

use crate::error::{Error, Result};

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Multiplicative inverse modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// A `rows x cols` matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FfMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FfMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Result<Self> {
        check_prime(p)?;
        Ok(FfMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(p: u64, n: usize) -> Result<Self> {
        let mut m = FfMatrix::zero(p, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Diagonal matrix with the given entries (reduced mod `p`).
    pub fn diagonal(p: u64, entries: &[u64]) -> Result<Self> {
        let mut m = FfMatrix::zero(p, entries.len(), entries.len())?;
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        Ok(m)
    }

    /// Matrix from rows of residues; all rows must have the same length.
    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<Self> {
        FfMatrix::from_rows_in(p, rows.first().map_or(0, Vec::len), rows)
    }

    /// Like [`FfMatrix::from_rows`] with an explicit column count, so that a
    /// matrix with no rows still knows its width.
    pub fn from_rows_in(p: u64, cols: usize, rows: &[Vec<u64>]) -> Result<Self> {
        check_prime(p)?;
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(FfMatrix {
            p,
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| x % p).collect(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    pub fn mul(&self, other: &FfMatrix) -> Result<FfMatrix> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FfMatrix::zero(self.p, self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % self.p;
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form (zero rows dropped) and 1-based pivot columns.
    pub fn rref(&self) -> (FfMatrix, Vec<usize>) {
        let mut ech = Echelon::new(self.p, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.into_rref()
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl fmt::Debug for FfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FfMatrix(p={}, {:?})", self.p, self.to_rows())
    }
}

impl fmt::Display for FfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Row-echelon basis of a growing subspace of `F_p^n`, each basis row
/// normalized to leading coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    n: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64, n: usize) -> Self {
        Echelon { p, n, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the residue.
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (piv, r) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                let f = self.p - c;
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = (*x + f * y) % self.p;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[piv], self.p);
        for x in &mut v {
            *x = *x * inv % self.p;
        }
        self.rows.push((piv, v));
        true
    }

    /// Basis vectors in insertion order.
    pub fn basis(&self) -> impl Iterator<Item = &[u64]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// The canonical reduced row echelon basis and 1-based pivots.
    pub fn into_rref(mut self) -> (FfMatrix, Vec<usize>) {
        let p = self.p;
        self.rows.sort_by_key(|(piv, _)| *piv);
        let k = self.rows.len();
        for i in 0..k {
            let (piv, pivot_row) = self.rows[i].clone();
            for (j, (_, r)) in self.rows.iter_mut().enumerate() {
                if j == i || r[piv] == 0 {
                    continue;
                }
                let f = p - r[piv];
                for (x, &y) in r.iter_mut().zip(&pivot_row) {
                    *x = (*x + f * y) % p;
                }
            }
        }
        let pivots = self.rows.iter().map(|(piv, _)| piv + 1).collect();
        let data = self.rows.into_iter().flat_map(|(_, r)| r).collect();
        (
            FfMatrix {
                p,
                rows: k,
                cols: self.n,
                data,
            },
            pivots,
        )
    }
}

/// Polynomials over `F_p`, coefficients ascending.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while r.len() > db {
        let lead = *r.last().expect("nonempty");
        if lead != 0 {
            let f = lead * inv % p;
            let shift = r.len() - 1 - db;
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - f * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_polys(degree: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(degree as u32);
    (0..count).map(move |mut code| {
        let mut c = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            c.push(code % p);
            code /= p;
        }
        c.push(1);
        c
    })
}

/// The first monic irreducible polynomial of the given degree over `F_p`,
/// scanning coefficient vectors `(c_0, ..., c_{d-1})` read as base-`p`
/// numbers with `c_0` least significant. Coefficients ascending, leading 1.
pub fn smallest_irreducible(degree: usize, p: u64) -> Result<Vec<u64>> {
    check_prime(p)?;
    assert!(degree >= 1, "degree must be positive");
    let found = monic_polys(degree, p)
        .find(|f| (1..=degree / 2).all(|d| monic_polys(d, p).all(|g| poly_rem(f, &g, p).iter().any(|&x| x != 0))));
    Ok(found.expect("irreducible polynomials exist in every degree"))
}

/// Companion matrix of a monic polynomial `c_0 + ... + c_{d-1} x^{d-1} + x^d`:
/// ones on the subdiagonal and `-c_i` in the last column.
pub fn companion(poly: &[u64], p: u64) -> Result<FfMatrix> {
    let d = poly.len() - 1;
    let mut m = FfMatrix::zero(p, d, d)?;
    for i in 1..d {
        m.set(i, i - 1, 1);
    }
    for (i, &c) in poly[..d].iter().enumerate() {
        m.set(i, d - 1, (p - c % p) % p);
    }
    Ok(m)
}

/// Nilpotent Jordan block: ones on the superdiagonal.
pub fn jordan_block(n: usize, p: u64) -> Result<FfMatrix> {
    let mut m = FfMatrix::zero(p, n, n)?;
    for i in 1..n {
        m.set(i - 1, i, 1);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(matches!(FfMatrix::zero(4, 1, 1), Err(Error::NotPrime(4))));
    }

    #[test]
    fn rref_trivial_cases() {
        let id = FfMatrix::identity(5, 3).unwrap();
        assert_eq!(id.rref(), (id.clone(), vec![1, 2, 3]));
        let z = FfMatrix::zero(5, 2, 3).unwrap();
        let (r, piv) = z.rref();
        assert_eq!(r.nrows(), 0);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_pivots() {
        let a = FfMatrix::from_rows(
            7,
            &[vec![1, 0, 3, 0, 0, 1], vec![0, 1, 4, 0, 3, 0], vec![0, 0, 0, 1, 2, 5]],
        )
        .unwrap();
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![1, 2, 4]);
        assert_eq!(r, a);
        // a scrambled spanning set reduces to the same form
        let b = FfMatrix::from_rows(
            7,
            &[
                a.row(2).to_vec(),
                vec![1, 1, 0, 0, 3, 1],
                a.row(0).to_vec(),
                vec![2, 0, 6, 1, 2, 0],
            ],
        )
        .unwrap();
        assert_eq!(b.rref(), (a.clone(), vec![1, 2, 4]));
        assert_eq!(b.rank(), 3);
    }

    #[test]
    fn irreducibles() {
        assert_eq!(smallest_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(1, 3).unwrap(), vec![0, 1]);
        assert_eq!(smallest_irreducible(2, 3).unwrap(), vec![1, 0, 1]);
        let f = smallest_irreducible(3, 2).unwrap();
        assert_eq!(f, vec![1, 1, 0, 1]);
    }

    #[test]
    fn companion_has_char_poly_action() {
        // x^2 + x + 1 over F_2: C^2 = C + 1
        let c = companion(&[1, 1, 1], 2).unwrap();
        let c2 = c.mul(&c).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let rhs = (c.get(i, j) + u64::from(i == j)) % 2;
                assert_eq!(c2.get(i, j), rhs);
            }
        }
    }
}
