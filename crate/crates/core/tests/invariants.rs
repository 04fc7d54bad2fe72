use mrat_core::labeling::{analyze_degree, analyze_diagram, sharp_real_via_planted_trees};
use mrat_core::updown::{build_svalues, count_updown_determinant, sharp_caterpillar};
use mrat_core::ChordDiagram;
use num_bigint::BigInt;

#[test]
fn proposition_holds_for_every_diagram_up_to_five_chords() {
    for m in 2..=5 {
        for d in ChordDiagram::enumerate(m).unwrap() {
            let c = analyze_diagram(&d).unwrap();
            assert_eq!(c.total, c.pi * c.sharp_r, "{d}");
        }
    }
}

#[test]
fn pair_automorphisms_match_tree_automorphisms() {
    for m in 1..=5 {
        for d in ChordDiagram::raw_matchings(m).unwrap() {
            assert_eq!(
                d.symmetry_group().len(),
                d.associated_tree().pair_automorphism_count(),
                "{d}"
            );
        }
    }
}

#[test]
fn orbit_structure_up_to_degree_six() {
    for n in 3..=6 {
        let order = 2 * n - 2;
        for c in analyze_degree(n).unwrap() {
            assert!(c.orbits.iter().all(|l| order % l == 0), "{}", c.diagram);
            assert_eq!(c.orbits.iter().sum::<usize>() as u64, c.total);
            if c.diagram.symmetry_group().len() == 1 {
                assert!(c.orbits.iter().all(|&l| l == order), "{}", c.diagram);
            }
        }
    }
}

#[test]
fn planted_tree_sum_matches_diagram_sum() {
    for n in 3..=6 {
        let direct: u64 = analyze_degree(n).unwrap().iter().map(|c| c.total).sum();
        assert_eq!(sharp_real_via_planted_trees(n).unwrap(), direct, "n={n}");
    }
}

#[test]
fn caterpillar_formula_per_diagram() {
    for m in 2..=5 {
        for d in ChordDiagram::enumerate(m).unwrap() {
            let kind = d
                .associated_tree()
                .caterpillar_type()
                .expect("trees with at most 6 vertices are caterpillars");
            let group = d.symmetry_group();
            let formula = sharp_caterpillar(
                &kind,
                group.preserving_count(),
                group.is_orientation_symmetric(),
            )
            .unwrap();
            assert_eq!(
                formula,
                analyze_diagram(&d).unwrap().total.into(),
                "{d} {kind}"
            );
            let s = build_svalues(&kind).unwrap();
            assert_eq!(
                s.determinant(),
                BigInt::from(count_updown_determinant(&kind.word())),
                "{kind}"
            );
        }
    }
}

#[test]
fn at_most_one_diameter_up_to_six_chords() {
    for m in 1..=6 {
        for d in ChordDiagram::raw_matchings(m).unwrap() {
            assert!(d.diameters().len() <= 1, "{d}");
        }
    }
}
