//! Exact arithmetic in `Z[q]`.
//!
//! [`QPoly`] is a dense polynomial with arbitrary-precision signed coefficients,
//! stored in ascending order of the exponent. The q-analogues used throughout
//! the crate (`[n]_q`, `[n]_q!`, Gaussian binomials and multinomials) live here
//! together with exact division.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense polynomial in a formal variable `q` with integer coefficients.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector and derived equality is coefficient-wise equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^exp`.
    pub fn monomial<T: Into<BigInt>>(c: T, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// `q^exp`.
    pub fn q_pow(exp: usize) -> Self {
        Self::monomial(1, exp)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        Self::from_coeffs(self.coeffs.iter().map(|x| x * &c).collect())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    /// Long division returning `(quotient, remainder)`.
    ///
    /// Fails with `NonDivisible` as soon as a leading coefficient of the running
    /// remainder is not a multiple of the divisor's leading coefficient, since
    /// no quotient in `Z[q]` can exist at that point.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlen = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (factor, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonDivisible {
                    remainder: QPoly::from_coeffs(rem),
                });
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * d;
            }
            quot[shift] = factor;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }
}

/// Exact quotient `a / b`; errors with the remainder when `b` does not divide `a`.
pub fn exact_div(a: &QPoly, b: &QPoly) -> Result<QPoly> {
    let (q, r) = a.div_rem(b)?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonDivisible { remainder: r })
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

/// `[n]_q! / [n-k]_q! = [n-k+1]_q ... [n]_q`; zero when `k > n`.
pub fn q_falling_factorial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    (n - k + 1..=n).fold(QPoly::one(), |acc, i| &acc * &q_int(i))
}

/// Gaussian binomial coefficient, built by the q-Pascal rule
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`. Zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let k = k.min(n - k);
    // row[j] holds [i, j] for the current i
    let mut row: Vec<QPoly> = vec![QPoly::zero(); k + 1];
    row[0] = QPoly::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let next = &row[j - 1] + &row[j].shift(j);
            row[j] = next;
        }
    }
    row.swap_remove(k)
}

/// q-multinomial `[n; parts]_q`. Mass missing from `parts` is treated as one
/// extra part `n - sum(parts)`; returns zero if the parts overflow `n`.
pub fn q_multinomial(n: usize, parts: &[usize]) -> QPoly {
    let total: usize = parts.iter().sum();
    if total > n {
        return QPoly::zero();
    }
    let denom = parts
        .iter()
        .chain(std::iter::once(&(n - total)))
        .fold(QPoly::one(), |acc, &b| &acc * &q_factorial(b));
    exact_div(&q_factorial(n), &denom).expect("q-multinomial must divide exactly")
}

/// Ordinary binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

impl fmt::Display for QPoly {
    /// Descending powers, e.g. `q^4 + 2*q^3 + 3*q^2 + 2*q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match exp {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Serialize for QPoly {
    /// Ascending JSON array of decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    /// Accepts decimal strings or plain JSON integers.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = QPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<QPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(v) = seq.next_element::<serde_json::Value>()? {
                    let c = match &v {
                        serde_json::Value::String(s) => s.parse::<BigInt>().map_err(de::Error::custom)?,
                        serde_json::Value::Number(n) => n.to_string().parse::<BigInt>().map_err(de::Error::custom)?,
                        other => return Err(de::Error::custom(format!("bad coefficient {other}"))),
                    };
                    coeffs.push(c);
                }
                Ok(QPoly::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, d) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += d;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self += &rhs;
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self += &(-rhs);
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl MulAssign<&QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: &QPoly) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(0), QPoly::zero());
        assert_eq!(q_int(1), QPoly::one());
        assert_eq!(q_int(3), p(&[1, 1, 1]));
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(0), QPoly::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_values() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), QPoly::one());
        }
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 6), QPoly::zero());
    }

    #[test]
    fn q_multinomial_values() {
        assert_eq!(q_multinomial(3, &[3]), QPoly::one());
        assert_eq!(q_multinomial(3, &[1, 2]), p(&[1, 1, 1]));
        assert_eq!(q_multinomial(3, &[1, 1, 1]), p(&[1, 2, 2, 1]));
        // slack part: [3; 1] with missing mass 2 is [3 choose 1]
        assert_eq!(q_multinomial(3, &[1]), p(&[1, 1, 1]));
        assert_eq!(q_multinomial(2, &[2, 1]), QPoly::zero());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(exact_div(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(exact_div(&QPoly::zero(), &p(&[3, 1])).unwrap(), QPoly::zero());
        let a = &p(&[1, 1]) * &p(&[1, 1, 1]);
        assert_eq!(exact_div(&a, &p(&[1, 1])).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn non_divisible_reports_remainder() {
        match exact_div(&p(&[1, 0, 1]), &p(&[1, 1])) {
            Err(Error::NonDivisible { remainder }) => assert_eq!(remainder, p(&[2])),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            exact_div(&p(&[1, 1]), &p(&[0, 2])),
            Err(Error::NonDivisible { .. })
        ));
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[0, 0]), QPoly::zero());
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), QPoly::zero());
        assert_eq!((&p(&[0, 1]) - &p(&[0, 1])).degree(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 2, 3, 2, 1]).to_string(), "q^4 + 2*q^3 + 3*q^2 + 2*q + 1");
        assert_eq!(p(&[2, 1]).to_string(), "q + 2");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "q^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let poly = p(&[1, 2, 3, 2, 1]);
        let s = serde_json::to_string(&poly).unwrap();
        assert_eq!(s, r#"["1","2","3","2","1"]"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, poly);
        let plain: QPoly = serde_json::from_str("[1,2,3,2,1]").unwrap();
        assert_eq!(plain, poly);
    }

    #[test]
    fn evaluation() {
        assert_eq!(q_binomial(4, 2).eval_i64(2), BigInt::from(35));
        assert_eq!(p(&[-1, 0, 1]).eval_i64(-3), BigInt::from(8));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let x = p(&[-1, 1]);
        assert_eq!(x.pow(3), &(&x * &x) * &x);
        assert_eq!(x.pow(0), QPoly::one());
    }
}
