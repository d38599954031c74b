mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;
use tiltcell::characters::Characters;
use tiltcell::rootdata::{RootSystem, Weight};

fn chars(t: &str) -> Characters {
    Characters::new(Arc::new(RootSystem::parse(t).unwrap()))
}

fn as_map(c: &Characters, lambda: &Weight) -> BTreeMap<Weight, i64> {
    c.weight_multiplicities(lambda).unwrap().iter().map(|(w, m)| (w.clone(), m)).collect()
}

fn dominant_grid(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..=max).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out.into_iter().map(Weight::new).collect()
}

#[test]
fn characters_match_alternant_division() {
    for (t, max) in [("A1", 6), ("A2", 3), ("B2", 3), ("G2", 2), ("A3", 1), ("B3", 1)] {
        let c = chars(t);
        for lambda in dominant_grid(c.root_system().rank(), max) {
            let oracle = common::character_by_division(c.root_system(), &lambda);
            assert_eq!(as_map(&c, &lambda), oracle, "{t} {lambda}");
        }
    }
}

#[test]
fn g2_fundamental_dimensions() {
    let c = chars("G2");
    assert_eq!(c.weyl_dim(&common::w(&[1, 0])).unwrap(), 7);
    assert_eq!(c.weyl_dim(&common::w(&[0, 1])).unwrap(), 14);
    assert_eq!(c.weyl_dim(&common::w(&[2, 0])).unwrap(), 27);
}

#[test]
fn tensor_factors_match_peeling() {
    for (t, max) in [("A2", 2), ("B2", 2), ("G2", 1)] {
        let c = chars(t);
        let grid = dominant_grid(2, max);
        for a in &grid {
            for b in &grid {
                let oracle = common::tensor_by_peeling(c.root_system(), a, b);
                assert_eq!(c.tensor_weyl_factors(a, b).unwrap(), oracle, "{t} {a} x {b}");
            }
        }
    }
}

#[test]
fn negative_input_is_rejected() {
    let c = chars("A2");
    assert!(c.weight_multiplicities(&common::w(&[-1, 0])).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn characters_are_weyl_invariant_and_sum_to_dimension(a in 0i64..5, b in 0i64..5, t in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let c = chars(t);
        let lambda = common::w(&[a, b]);
        let ch = c.weight_multiplicities(&lambda).unwrap();
        prop_assert!(ch.is_weyl_invariant(c.root_system()));
        prop_assert_eq!(ch.total(), c.weyl_dim(&lambda).unwrap());
    }

    #[test]
    fn tensor_is_commutative_and_conserves_dimension(a in 0i64..3, b in 0i64..3, x in 0i64..3, y in 0i64..3, t in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let c = chars(t);
        let l = common::w(&[a, b]);
        let m = common::w(&[x, y]);
        let lm = c.tensor_weyl_factors(&l, &m).unwrap();
        prop_assert_eq!(&lm, &c.tensor_weyl_factors(&m, &l).unwrap());
        let dim: i64 = lm.iter().map(|(nu, k)| k * c.weyl_dim(nu).unwrap()).sum();
        prop_assert_eq!(dim, c.weyl_dim(&l).unwrap() * c.weyl_dim(&m).unwrap());
    }
}
