mod common;

use std::collections::BTreeSet;

use qwalg::axioms::{is_commutative, is_qw, is_wajsberg};
use qwalg::search::{canonical_form, enumerate_qw, is_isomorphic};
use qwalg::{catalog, Gates};

#[test]
fn matches_brute_force_up_to_order_five() {
    for n in 1..=5 {
        let oracle: BTreeSet<_> = common::brute_force_qw(n).iter().map(canonical_form).collect();
        let found = enumerate_qw(n, None, &Gates::default()).unwrap();
        let found: BTreeSet<_> = found.models.into_iter().collect();
        assert_eq!(found, oracle, "order {n}");
    }
}

#[test]
fn models_are_sound_and_pairwise_distinct() {
    for n in 1..=6 {
        let r = enumerate_qw(n, None, &Gates::default()).unwrap();
        let algs: Vec<_> = r.algebras().collect();
        for (i, a) in algs.iter().enumerate() {
            assert!(is_qw(a), "order {n} model {i}");
            for b in &algs[i + 1..] {
                assert!(is_isomorphic(a, b).is_none());
            }
        }
        assert_eq!(r.stats.final_rejections, 0);
    }
}

#[test]
fn fixtures_are_found() {
    let g = Gates::default();
    let five: Vec<_> = enumerate_qw(5, None, &g).unwrap().algebras().collect();
    assert!(five.iter().any(|m| is_isomorphic(m, &catalog::weakly_linear5()).is_some()));
    let six: Vec<_> = enumerate_qw(6, None, &g).unwrap().algebras().collect();
    assert!(six.iter().any(|m| is_isomorphic(m, &catalog::orthomodular6()).is_some()));
}

#[test]
fn products_of_models_are_qw() {
    let g = Gates::default();
    let small: Vec<_> = (2..=3).flat_map(|n| enumerate_qw(n, None, &g).unwrap().algebras().collect::<Vec<_>>()).collect();
    for a in &small {
        for b in &small {
            assert!(is_qw(&a.product(b).unwrap()));
        }
    }
    assert!(is_qw(&catalog::boolean2().product(&catalog::weakly_linear5()).unwrap()));
}

#[test]
fn commutative_models_are_wajsberg() {
    for n in 1..=6 {
        for a in enumerate_qw(n, None, &Gates::default()).unwrap().algebras() {
            assert_eq!(is_wajsberg(&a).unwrap(), is_commutative(&a), "order {n}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let g = Gates::default();
    assert_eq!(enumerate_qw(6, None, &g).unwrap(), enumerate_qw(6, None, &g).unwrap());
}
