use std::collections::BTreeSet;

use proptest::prelude::*;
use yamhall::degraphs::{big_d, d, d_tilde};
use yamhall::descent_sets::{is_realizable, leading_yam_word};
use yamhall::fillings::{descent_cells, fill, inv, maj, maj_of_descents};
use yamhall::qsym_schur::{schur_from_f, schur_to_f, r_polynomial_f};
use yamhall::rsk_yam::{is_yamanouchi, rsk, superstandard};
use yamhall::words::{restrict, reverse_values, standardize, unstandardize};
use yamhall::{Cell, Diagram, Permutation, Word};

fn diagram(max: usize) -> impl Strategy<Value = Diagram> {
    prop::collection::btree_set((0i32..4, 0i32..4), 1..=max)
        .prop_map(|s| Diagram::new(s.into_iter().map(|(x, y)| Cell::new(x, y))).unwrap())
}

fn with_perm(max: usize) -> impl Strategy<Value = (Diagram, Permutation)> {
    diagram(max).prop_flat_map(|d| {
        let n = d.len() as u32;
        (Just(d), Just((1..=n).collect::<Vec<u32>>()).prop_shuffle())
    })
    .prop_map(|(d, v)| (d, Permutation::new(v).unwrap()))
}

proptest! {
    #[test]
    fn involutions_square_to_identity((delta, pi) in with_perm(9)) {
        for i in 2..pi.len() {
            prop_assert_eq!(d(i, &d(i, &pi).unwrap()).unwrap(), pi.clone());
            prop_assert_eq!(d_tilde(i, &d_tilde(i, &pi).unwrap()).unwrap(), pi.clone());
            let img = big_d(i, &delta, &pi).unwrap();
            prop_assert_eq!(big_d(i, &delta, &img).unwrap(), pi.clone());
            prop_assert_eq!(inv(&delta, &img), inv(&delta, &pi));
            prop_assert_eq!(maj(&delta, &img), maj(&delta, &pi));
            prop_assert_eq!(descent_cells(&delta, &img), descent_cells(&delta, &pi));
        }
    }

    #[test]
    fn complement_laws((delta, pi) in with_perm(9)) {
        let rev = reverse_values(&pi);
        prop_assert_eq!(inv(&delta, &pi) + inv(&delta, &rev), delta.max_inv());
        let full = maj_of_descents(&delta, &delta.descent_capable()).unwrap();
        prop_assert_eq!(maj(&delta, &pi) + maj(&delta, &rev), full);
    }

    #[test]
    fn standardization_round_trip(letters in prop::collection::vec(1u32..5, 0..10)) {
        let w = Word::new(letters).unwrap();
        let pi = standardize(&w);
        prop_assert_eq!(standardize(&unstandardize(&pi)), pi.clone());
        if is_yamanouchi(&w).is_some() {
            prop_assert_eq!(unstandardize(&pi), w);
        }
    }

    #[test]
    fn yamanouchi_iff_superstandard((_d, pi) in with_perm(9)) {
        let p = rsk(&pi).0;
        prop_assert_eq!(is_yamanouchi(&unstandardize(&pi)).is_some(), p == superstandard(&p.shape()));
        if pi.len() >= 2 {
            let keep: BTreeSet<u32> = (1..pi.len() as u32).collect();
            prop_assert_eq!(rsk(&restrict(&pi, &keep)).0, p.without_max());
        }
    }

    #[test]
    fn leading_word_realizes_its_descents(delta in diagram(7), mask in any::<u64>()) {
        let cells = delta.descent_capable();
        let gamma = Diagram::new(
            cells.cells().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| *c),
        ).unwrap();
        if is_realizable(&gamma, &delta).unwrap() {
            let w = leading_yam_word(&gamma, &delta).unwrap();
            let t = fill(&delta, &w).unwrap();
            prop_assert_eq!(t.inv(), 0);
            prop_assert_eq!(t.descent_cells(), gamma);
        } else {
            prop_assert!(r_polynomial_f(&gamma, &delta).unwrap().is_zero());
        }
    }

    #[test]
    fn schur_conversion_round_trip(delta in diagram(6), mask in any::<u64>()) {
        let cells = delta.descent_capable();
        let gamma = Diagram::new(
            cells.cells().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| *c),
        ).unwrap();
        let f = r_polynomial_f(&gamma, &delta).unwrap();
        let s = schur_from_f(&f).unwrap();
        prop_assert!(s.is_positive());
        prop_assert_eq!(schur_to_f(&s), f);
    }
}
