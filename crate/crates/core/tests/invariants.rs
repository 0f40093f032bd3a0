mod common;

use proptest::prelude::*;
use qwalg::congruence::{self, Partition};
use qwalg::search::{canonical_form, is_isomorphic};
use qwalg::structure::{self, Family};
use qwalg::{catalog, FiniteAlgebra, Gates, Subset};

fn fixtures() -> Vec<FiniteAlgebra> {
    catalog::all().into_iter().filter(|a| a.order() > 1).collect()
}

/// A permutation of `0..n` that keeps zero and one in place.
fn relabeling(a: &FiniteAlgebra, seed: &[usize]) -> Vec<usize> {
    let (z, o) = (a.zero().index(), a.one().index());
    let mut mid: Vec<usize> = (0..a.order()).filter(|&i| i != z && i != o).collect();
    for (i, &s) in seed.iter().enumerate().take(mid.len()) {
        let j = s % mid.len();
        mid.swap(i, j);
    }
    let mut it = mid.into_iter();
    (0..a.order()).map(|i| if i == z || i == o { i } else { it.next().unwrap() }).collect()
}

proptest! {
    #[test]
    fn relabeling_preserves_structure(k in 0usize..7, seed in proptest::collection::vec(0usize..16, 8)) {
        let a = &fixtures()[k];
        let perm = relabeling(a, &seed);
        let b = a.relabel(&perm).unwrap();
        prop_assert!(is_isomorphic(a, &b).is_some());
        prop_assert_eq!(canonical_form(a), canonical_form(&b));
        let g = Gates::default();
        let fa = structure::enumerate_filters(a, &g).unwrap();
        let fb = structure::enumerate_filters(&b, &g).unwrap();
        prop_assert_eq!(fa.len(), fb.len());
        for f in &fa {
            let image = Subset::from_elements(b.order(), f.iter().map(|x| qwalg::ElementId::new(perm[x.index()])));
            prop_assert!(fb.contains(&image));
        }
        prop_assert_eq!(
            structure::is_weakly_linear(a).unwrap().holds(),
            structure::is_weakly_linear(&b).unwrap().holds()
        );
    }

    #[test]
    fn generated_filter_is_least(k in 0usize..7, bits in any::<u64>()) {
        let a = &fixtures()[k];
        let n = a.order();
        let y = Subset::from_bits(n, bits & ((1u64 << n) - 1));
        prop_assume!(!y.is_empty());
        let f = structure::generated_filter(a, &y).unwrap();
        prop_assert!(structure::is_filter(a, &f).unwrap().holds());
        prop_assert!(y.is_subset_of(&f));
        let meet = structure::generated_filter_by_intersection(a, &y, &Gates::default()).unwrap();
        prop_assert_eq!(Some(f), meet);
    }

    #[test]
    fn generated_ds_is_least(k in 0usize..7, bits in any::<u64>()) {
        let a = &fixtures()[k];
        let n = a.order();
        let y = Subset::from_bits(n, bits & ((1u64 << n) - 1));
        let d = structure::generated_deductive_system(a, &y).unwrap();
        prop_assert!(structure::is_deductive_system(a, &d).unwrap().holds());
        for other in structure::enumerate_deductive_systems(a, &Gates::default()).unwrap() {
            if y.is_subset_of(&other) {
                prop_assert!(d.is_subset_of(&other));
            }
        }
    }

    #[test]
    fn random_partitions_of_small_algebras(k in 0usize..7, labels in proptest::collection::vec(0usize..3, 6)) {
        let a = &fixtures()[k];
        let p = Partition::from_labels(&labels[..a.order().min(6)]);
        prop_assume!(p.width() == a.order());
        if congruence::is_congruence(a, &p).unwrap().holds() {
            let f = congruence::ds_from_congruence(a, &p).unwrap();
            prop_assert!(structure::is_deductive_system(a, &f).unwrap().holds());
        }
    }
}

#[test]
fn filter_characterizations_agree_on_corpus() {
    for (name, a) in common::corpus() {
        let n = a.order();
        for bits in 0..1u64 << n {
            let f = Subset::from_bits(n, bits);
            let v1 = structure::is_filter(&a, &f).unwrap().holds();
            assert_eq!(v1, structure::is_filter_q_upward(&a, &f).unwrap().holds(), "{name}");
            let d = structure::is_deductive_system(&a, &f).unwrap().holds();
            assert_eq!(d, structure::is_deductive_system_upward(&a, &f).unwrap().holds(), "{name}");
            assert_eq!(d, structure::is_deductive_system_join(&a, &f).unwrap().holds(), "{name}");
            assert_eq!(d, structure::is_deductive_system_perspective(&a, &f).unwrap().holds(), "{name}");
        }
    }
}

#[test]
fn maximality_routes_agree_on_corpus() {
    let g = Gates::default();
    let no_scan = Gates { subsets: 0, ..g };
    for (name, a) in common::corpus() {
        for family in [Family::Filters, Family::DeductiveSystems] {
            for f in structure::enumerate(&a, family, &g).unwrap() {
                assert_eq!(
                    structure::is_maximal(&a, &f, family, &g).unwrap(),
                    structure::is_maximal(&a, &f, family, &no_scan).unwrap(),
                    "{name} {}",
                    a.format_subset(&f)
                );
            }
        }
    }
}

#[test]
fn quotient_by_one_is_isomorphic() {
    for (name, a) in common::corpus() {
        let q = congruence::quotient(&a, &Subset::singleton(a.order(), a.one())).unwrap();
        assert!(is_isomorphic(&a, &q.algebra).is_some(), "{name}");
    }
}

#[test]
fn linearity_forms_agree_on_search_models() {
    for n in 1..=6 {
        for a in qwalg::search::enumerate_qw(n, None, &Gates::default()).unwrap().algebras() {
            structure::is_weakly_linear(&a).unwrap();
            structure::is_quasi_linear(&a).unwrap();
            if structure::is_weakly_linear(&a).unwrap().holds() {
                assert!(structure::weakly_linear_identity_suite(&a).unwrap().passed());
            }
        }
    }
}
