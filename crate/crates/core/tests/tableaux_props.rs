//! The correspondence between set partitions and tableaux.

use std::collections::{BTreeMap, HashMap};

use qprofile::qarith::QPoly;
use qprofile::setpart::enumerate_partitions;
use qprofile::shapes::{conjugate, partitions_of, partitions_up_to};
use qprofile::tableaux::{
    apply_s_alpha, enumerate_ssyt, enumerate_syt_alpha, fiber_of_s_alpha, flatten_sort, r_weight, word_of, Flavor,
};
use qprofile::Tableau;

#[test]
fn words_determine_tableaux() {
    for n in 0..=7 {
        let mut by_word: HashMap<Vec<usize>, Tableau> = HashMap::new();
        let mut by_tableau: HashMap<Tableau, Vec<usize>> = HashMap::new();
        for a in enumerate_partitions(n, None, None) {
            let t = flatten_sort(&a);
            let w = a.word().0;
            assert_eq!(word_of(&t, n).0, w, "{a}");
            assert_eq!(by_word.entry(w.clone()).or_insert_with(|| t.clone()), &t);
            assert_eq!(by_tableau.entry(t).or_insert(w.clone()), &w);
        }
    }
}

#[test]
fn interlacings_sum_to_r_weight() {
    for n in 1..=7 {
        for mu in partitions_of(n) {
            for nu in partitions_of(n) {
                let alpha = nu.as_composition();
                let mut sums: BTreeMap<Tableau, QPoly> = BTreeMap::new();
                for a in enumerate_partitions(n, Some(&conjugate(&mu)), Some(&alpha)) {
                    *sums.entry(flatten_sort(&a)).or_insert_with(QPoly::zero) +=
                        &QPoly::q_pow(a.interlacings(Some(&alpha)));
                }
                let syt = enumerate_syt_alpha(&mu, &alpha);
                for t in sums.keys() {
                    assert!(syt.contains(t), "{t} outside SYT({mu}, {alpha})");
                }
                for t in &syt {
                    let expected = r_weight(&apply_s_alpha(t, &alpha).unwrap());
                    let got = sums.get(t).cloned().unwrap_or_else(QPoly::zero);
                    assert_eq!(got, expected, "mu={mu} alpha={alpha} T={t}");
                }
            }
        }
    }
}

#[test]
fn s_alpha_maps_onto_ssyt_with_matching_fibres() {
    for n in 1..=6 {
        for mu in partitions_up_to(n).into_iter().filter(|m| m.size() == n) {
            for nu in partitions_of(n) {
                let alpha = nu.as_composition();
                let syt = enumerate_syt_alpha(&mu, &alpha);
                let mut images: BTreeMap<Tableau, Vec<Tableau>> = BTreeMap::new();
                for t in &syt {
                    let s = apply_s_alpha(t, &alpha).unwrap();
                    s.validate(Flavor::Semistandard, Some(&alpha)).unwrap();
                    images.entry(s).or_default().push(t.clone());
                }
                let ssyt = enumerate_ssyt(&mu, &alpha);
                assert_eq!(images.len(), ssyt.len(), "mu={mu} alpha={alpha}");
                for s in &ssyt {
                    let mut fiber = fiber_of_s_alpha(s, &alpha).unwrap();
                    let mut expected = images.remove(s).expect("surjective");
                    fiber.sort();
                    expected.sort();
                    assert_eq!(fiber, expected, "fibre of {s}");
                }
            }
        }
    }
}
