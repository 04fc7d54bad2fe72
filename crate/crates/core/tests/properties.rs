use std::collections::BTreeSet;

use mrat_core::diagram::DihedralMap;
use mrat_core::labeling::{
    count_rooted, count_rooted_at, count_rooted_classes, generic_root, labeled_classes,
    shift_orbits,
};
use mrat_core::series::RationalSeries;
use mrat_core::updown::{count_updown_bruteforce, count_updown_determinant, Step};
use mrat_core::{ChordDiagram, Polarity, UpDownWord};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn diagram_strategy(max_m: usize) -> impl Strategy<Value = ChordDiagram> {
    (1..=max_m).prop_flat_map(|m| {
        let all = ChordDiagram::raw_matchings(m).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = UpDownWord> {
    prop::collection::vec(prop::bool::ANY, 1..=max_len).prop_map(|bits| {
        UpDownWord::from_steps(
            bits.into_iter()
                .map(|b| if b { Step::Up } else { Step::Down })
                .collect(),
        )
    })
}

fn series_strategy(order: usize) -> impl Strategy<Value = RationalSeries> {
    prop::collection::vec((-20i64..=20, 1i64..=9), order + 1).prop_map(|cs| {
        RationalSeries::from_coeffs(
            cs.into_iter()
                .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn faces_cover_every_arc_once(d in diagram_strategy(7)) {
        let m = d.chord_count();
        let faces = d.faces();
        prop_assert_eq!(faces.len(), m + 1);
        prop_assert_eq!(faces.iter().map(|f| f.boundary_len()).sum::<usize>(), 4 * m);
        let arcs: BTreeSet<usize> = faces.iter().flat_map(|f| f.arcs.clone()).collect();
        prop_assert_eq!(arcs.len(), 2 * m);
    }

    #[test]
    fn canonical_form_is_invariant(d in diagram_strategy(7), r in 0usize..14, reflected in prop::bool::ANY) {
        let g = DihedralMap { rotation: r % d.order(), reflected };
        let moved = d.transform(g);
        prop_assert_eq!(moved.canonical(), d.canonical());
        prop_assert!(d.canonical().is_canonical());
        prop_assert_eq!(moved.symmetry_group().len(), d.symmetry_group().len());
    }

    #[test]
    fn symmetry_group_is_a_group(d in diagram_strategy(7)) {
        let g = d.symmetry_group();
        prop_assert!(g.contains(DihedralMap::IDENTITY));
        prop_assert!(g.is_closed());
        if g.is_orientation_symmetric() {
            prop_assert_eq!(2 * g.preserving_count(), g.len());
        }
        prop_assert!(d.diameter().is_ok());
    }

    #[test]
    fn associated_tree_of_a_planting_round_trips(d in diagram_strategy(6)) {
        let tree = d.associated_tree();
        prop_assert_eq!(tree.edge_count(), d.chord_count());
        for planted in tree.plantings() {
            let back = planted.to_diagram().unwrap().associated_tree();
            prop_assert_eq!(back.signature(), tree.signature());
        }
    }

    #[test]
    fn text_format_round_trips(d in diagram_strategy(7)) {
        let back: ChordDiagram = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn rooted_count_ignores_root_and_orientation(d in diagram_strategy(4), root in 0usize..8, minus in prop::bool::ANY) {
        prop_assume!(d.chord_count() >= 2);
        let root = root % d.order();
        let generic = count_rooted(&d, generic_root(&d).unwrap()).unwrap();
        let polarity = if minus { Polarity::Minus } else { Polarity::Plus };
        prop_assert_eq!(count_rooted_at(&d, root, polarity).unwrap(), generic);
        let on_diameter = d.diameter().unwrap().is_some_and(|c| c.0 == root || c.1 == root);
        let classes = count_rooted_classes(&d, root).unwrap();
        prop_assert_eq!(if on_diameter { 2 * classes } else { classes }, generic);
    }

    #[test]
    fn orbit_lengths_divide_the_group_order(d in diagram_strategy(4)) {
        prop_assume!(d.chord_count() >= 2);
        let classes = labeled_classes(&d);
        let orbits = shift_orbits(&d, &classes);
        let order = d.order();
        prop_assert!(orbits.iter().all(|l| order % l == 0));
        prop_assert_eq!(orbits.iter().sum::<usize>(), classes.len());
        if d.symmetry_group().len() == 1 {
            prop_assert!(orbits.iter().all(|&l| l == order));
        }
    }

    #[test]
    fn determinant_matches_brute_force(w in word_strategy(9)) {
        let det = count_updown_determinant(&w);
        prop_assert_eq!(det.clone(), count_updown_bruteforce(&w).unwrap().into());
        prop_assert_eq!(count_updown_determinant(&w.reverse_complement()), det.clone());
        prop_assert_eq!(count_updown_determinant(&w.complement()), det);
    }

    #[test]
    fn word_text_round_trips(w in word_strategy(16)) {
        prop_assert_eq!(UpDownWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn division_multiplies_back(a in series_strategy(12), b in series_strategy(12)) {
        prop_assume!(b.coeff(0) != BigRational::from_integer(BigInt::from(0)));
        let q = a.div(&b).unwrap();
        prop_assert_eq!(&q * &b, a);
    }
}
