mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use tiltcell::rootdata::{RootSystem, Weight};

const TYPES: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"];

#[test]
fn positive_roots_match_weyl_orbit_closure() {
    for t in TYPES {
        let rs = RootSystem::parse(t).unwrap();
        let orbit = common::roots_by_orbit(&rs);
        let pos: HashSet<Vec<i64>> = rs.positive_roots().iter().cloned().collect();
        let expect: HashSet<Vec<i64>> = orbit.iter().filter(|b| b.iter().all(|&c| c >= 0)).cloned().collect();
        assert_eq!(pos, expect, "{t}");
        assert_eq!(orbit.len(), 2 * pos.len(), "{t}");
    }
}

#[test]
fn weyl_orders_and_coxeter_numbers() {
    let table = [("A1", 2, 2), ("A2", 6, 3), ("A3", 24, 4), ("B2", 8, 4), ("B3", 48, 6), ("C3", 48, 6), ("G2", 12, 6), ("D4", 192, 6)];
    for (t, order, h) in table {
        let rs = RootSystem::parse(t).unwrap();
        assert_eq!(rs.weyl().order(), order, "{t}");
        assert_eq!(rs.coxeter_number(), h, "{t}");
        let n = rs.positive_roots().len();
        assert_eq!(n * 2, rs.rank() * h, "{t}");
    }
}

#[test]
fn g2_convention_has_alpha1_short() {
    let rs = RootSystem::parse("G2").unwrap();
    assert_eq!(rs.datum().matrix(), &[vec![2, -3], vec![-1, 2]]);
    assert_eq!(rs.norms(), &[1, 3]);
}

fn weight_strategy(rank: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(-6i64..7, rank).prop_map(Weight::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simple_reflections_are_involutions(i in 0usize..2, lambda in weight_strategy(2), t in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let rs = RootSystem::parse(t).unwrap();
        let once = rs.reflect_simple(i, &lambda);
        prop_assert_eq!(rs.reflect_simple(i, &once), lambda);
    }

    #[test]
    fn to_dominant_lands_in_orbit(lambda in weight_strategy(2), t in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let rs = RootSystem::parse(t).unwrap();
        let (d, steps) = rs.to_dominant(&lambda);
        prop_assert!(d.is_dominant());
        prop_assert!(steps <= rs.positive_roots().len());
        prop_assert!(rs.weyl_orbit(&lambda).contains(&d));
    }

    #[test]
    fn height_is_additive(a in weight_strategy(3), b in weight_strategy(3)) {
        let rs = RootSystem::parse("B3").unwrap();
        prop_assert_eq!(rs.height(&(&a + &b)), rs.height(&a) + rs.height(&b));
    }
}
