//! Algebraic properties of the q-integer arithmetic.

use num_bigint::BigInt;
use proptest::prelude::*;
use qprofile::qarith::{binomial, exact_div, q_binomial, q_factorial, q_int, q_multinomial, QPoly};

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-50i64..50, 0..7).prop_map(|c| QPoly::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = QPoly> {
    poly().prop_filter("nonzero divisor", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!(exact_div(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn division_with_remainder_recombines(a in poly(), k in 0usize..5) {
        let b = q_int(k + 1);
        let (quot, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.degree().is_none_or(|d| d < k));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), x in -5i64..6) {
        prop_assert_eq!((&a * &b).eval_i64(x), a.eval_i64(x) * b.eval_i64(x));
        prop_assert_eq!((&a + &b).eval_i64(x), a.eval_i64(x) + b.eval_i64(x));
    }

    #[test]
    fn multinomial_ignores_part_order(mut parts in prop::collection::vec(0usize..4, 0..5), extra in 0usize..3) {
        let n = parts.iter().sum::<usize>() + extra;
        let before = q_multinomial(n, &parts);
        parts.reverse();
        prop_assert_eq!(&before, &q_multinomial(n, &parts));
        parts.sort_unstable();
        prop_assert_eq!(before, q_multinomial(n, &parts));
    }
}

#[test]
fn pascal_recurrences() {
    for n in 1..=12 {
        for k in 1..n {
            let left = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k);
            assert_eq!(q_binomial(n, k), left, "n={n} k={k}");
            let right = q_binomial(n - 1, k) + q_binomial(n - 1, k - 1).shift(n - k);
            assert_eq!(q_binomial(n, k), right, "n={n} k={k}");
        }
    }
}

#[test]
fn binomial_specializes_at_one() {
    for n in 0..=15 {
        for k in 0..=n {
            assert_eq!(q_binomial(n, k).eval_i64(1), binomial(n, k));
            assert!(q_binomial(n, k).is_nonnegative());
        }
    }
}

#[test]
fn binomial_as_factorial_quotient() {
    for n in 0..=10 {
        for k in 0..=n {
            let num = q_factorial(n);
            let den = q_factorial(k) * q_factorial(n - k);
            assert_eq!(exact_div(&num, &den).unwrap(), q_binomial(n, k));
        }
    }
}

#[test]
fn multinomial_is_product_of_binomials() {
    let parts = [2usize, 1, 3];
    let expected = q_binomial(6, 2) * q_binomial(4, 1);
    assert_eq!(q_multinomial(6, &parts), expected);
    assert_eq!(q_multinomial(6, &parts).eval_i64(1), BigInt::from(60));
}
