//! Profile counts against brute-force enumeration over small fields.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use qprofile::profiles::{
    at, pivot_sets, profile_histogram, profile_histogram_by_pivots, residual_type, sigma_diagonal, sigma_multilinear,
    sigma_pivot, sigma_pivot_recursive, sigma_regular_diagonal, DiagonalSpec, FfMatrix,
};
use qprofile::shapes::{partitions_of, partitions_up_to};
use qprofile::Composition;

fn block_scalar(alpha: &Composition, p: u64) -> FfMatrix {
    DiagonalSpec::block_scalar(alpha, p).unwrap().to_matrix(p).unwrap()
}

#[test]
fn per_pivot_counts_match_pivot_formula() {
    for p in [2u64, 3] {
        for n in 1..=4 {
            for nu in partitions_of(n).into_iter().filter(|nu| nu.len() as u64 <= p) {
                let alpha = nu.as_composition();
                let hist = profile_histogram_by_pivots(&block_scalar(&alpha, p)).unwrap();
                for mu in partitions_up_to(n).into_iter().filter(|m| !m.is_empty()) {
                    for c in pivot_sets(n, mu.first()) {
                        let brute = hist.get(&(c.clone(), mu.clone())).copied().unwrap_or(0);
                        let formula = sigma_pivot(&mu, &alpha, &c);
                        assert_eq!(
                            at(&formula, p),
                            BigInt::from(brute),
                            "p={p} alpha={alpha} mu={mu} C={c:?}"
                        );
                        assert_eq!(sigma_pivot_recursive(&mu, &alpha, &c).unwrap(), formula);
                    }
                }
            }
        }
    }
}

#[test]
fn routes_agree_for_every_type() {
    for n in 0..=6 {
        for nu in partitions_of(n) {
            let alpha = nu.as_composition();
            for mu in partitions_up_to(n) {
                let formula = sigma_diagonal(&mu, &alpha);
                assert_eq!(sigma_multilinear(&mu, &alpha), formula, "mu={mu} alpha={alpha}");
                let pivots: qprofile::QPoly = if mu.is_empty() {
                    qprofile::QPoly::one()
                } else {
                    pivot_sets(n, mu.first())
                        .iter()
                        .map(|c| sigma_pivot(&mu, &alpha, c))
                        .sum()
                };
                assert_eq!(pivots, formula, "mu={mu} alpha={alpha}");
            }
        }
    }
}

#[test]
fn permuting_diagonal_entries_preserves_counts() {
    let p = 3;
    let base = profile_histogram(&FfMatrix::diagonal(p, &[0, 0, 1, 1, 2]).unwrap()).unwrap();
    for entries in [[1u64, 0, 2, 1, 0], [2, 1, 0, 0, 1], [0, 1, 0, 2, 1]] {
        let h = profile_histogram(&FfMatrix::diagonal(p, &entries).unwrap()).unwrap();
        assert_eq!(h, base, "{entries:?}");
    }
    let spec = DiagonalSpec::new(vec![1, 0, 2, 1, 0]);
    assert!(!spec.is_block_scalar());
    let alpha = spec.type_composition();
    for (mu, count) in &base {
        assert_eq!(at(&sigma_diagonal(mu, &alpha), p), BigInt::from(*count));
    }
}

#[test]
fn regular_diagonal_formula() {
    for n in 0..=7 {
        for mu in partitions_up_to(n) {
            assert_eq!(
                sigma_regular_diagonal(&mu, n),
                sigma_diagonal(&mu, &Composition::ones(n)),
                "mu={mu} n={n}"
            );
        }
    }
    let hist = profile_histogram(&FfMatrix::diagonal(5, &[0, 1, 2, 3]).unwrap()).unwrap();
    let by_size: BTreeMap<usize, u64> = hist.iter().fold(BTreeMap::new(), |mut acc, (mu, c)| {
        *acc.entry(mu.size()).or_default() += c;
        acc
    });
    assert_eq!(by_size.values().sum::<u64>(), 1 + 156 + 806 + 156 + 1);
}

#[test]
fn residual_type_drops_pivots() {
    let alpha = Composition::new(vec![2, 3, 2]);
    let c = qprofile::profiles::PivotSet::new(vec![1, 3, 4]).unwrap();
    assert_eq!(residual_type(&alpha, &c), Composition::new(vec![1, 1, 2]));
}
