mod common;

use std::collections::BTreeMap;
use std::fs;

use common::affine_perm;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use tiltcell::hecke::{act_hbar_s, n1_act_gen, specialize_v1, AntisphericalVector, KlBasis, LaurentPoly};

fn as_words(n: &AntisphericalVector) -> BTreeMap<Vec<u8>, BTreeMap<i32, i64>> {
    n.iter()
        .map(|(x, p)| (x.word().to_vec(), p.terms().map(|(e, c)| (e, c.to_i64().unwrap())).collect()))
        .collect()
}

#[test]
fn kl_basis_matches_full_hecke_oracle() {
    for (t, n) in [("A1", 2usize), ("A2", 3)] {
        let kl = common::kl(t, 7);
        let oracle = affine_perm::FullKl::new(n, 8);
        let mut checked = 0;
        for w in oracle.basis.keys().filter(|w| affine_perm::is_minimal(w)) {
            let x = kl.group().wf_rep(&kl.group().from_word(&affine_perm::word(w))).unwrap();
            assert_eq!(as_words(&kl.kl_element(&x).unwrap()), oracle.project(w), "{t} {x}");
            checked += 1;
        }
        assert!(checked > 8);
    }
}

#[test]
fn sl2_kl_elements_are_chains() {
    // Nbar_x = N_x + v N_y for the element y one shorter, for every x != e.
    let kl = common::kl("A1", 5);
    for x in kl.group().ball(12).into_iter().skip(1) {
        let n = kl.kl_element(&x).unwrap();
        assert_eq!(n.len(), 2, "{x}");
    }
}

#[test]
fn kl_elements_are_independent_of_descent_choice() {
    let kl = common::kl("G2", 7);
    let g = kl.group();
    for x in g.ball(12) {
        let reference = kl.kl_element(&x).unwrap();
        for s in g.right_descents(x.element()) {
            if !g.is_wf(&g.mul_gen(x.element(), s)) {
                continue;
            }
            assert_eq!(&kl.kl_element_via(&x, s).unwrap(), &*reference, "{x} via {s}");
        }
    }
}

#[test]
fn kl_coefficients_are_positive() {
    for (t, l, len) in [("B2", 5, 14), ("G2", 7, 14), ("A3", 5, 8)] {
        let kl = common::kl(t, l);
        for x in kl.group().ball(len) {
            for (y, p) in kl.kl_element(&x).unwrap().iter() {
                assert!(p.is_in_nonneg_polynomials(), "{t}: coefficient {p} of {y} in Nbar_{x}");
            }
        }
    }
}

#[test]
fn left_multiplication_by_finite_generator_is_not_wf() {
    let g = common::group("B2", 5);
    for x in g.ball(6) {
        for s in 1..g.num_generators() {
            let sx = g.gen_mul(s, x.element());
            assert!(!g.is_wf(&sx) || g.length(&sx) > x.length());
        }
    }
}

#[test]
fn disk_cache_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let g = common::group("G2", 7);
    let kl = KlBasis::with_cache(g.clone(), dir.path()).unwrap();
    let ball = g.ball(6);
    kl.precompute(&ball).unwrap();
    let cache = kl.cache().unwrap();
    let entries = cache.list().unwrap();
    assert_eq!(entries.len(), ball.len());

    // Truncate one file, garble another, and write a stray one.
    let victim = cache.dir().join(format!("{}.kl", ball[4].word_string()));
    let text = fs::read_to_string(&victim).unwrap();
    fs::write(&victim, &text[..text.len() / 2]).unwrap();
    let garbled = cache.dir().join(format!("{}.kl", ball[5].word_string()));
    fs::write(&garbled, "tiltcell-kl 1 G2 wrong\nnonsense\n").unwrap();

    let fresh = KlBasis::with_cache(g.clone(), dir.path()).unwrap();
    let plain = KlBasis::new(g.clone());
    for x in &ball {
        assert_eq!(*fresh.kl_element(x).unwrap(), *plain.kl_element(x).unwrap(), "{x}");
    }
    let report = fresh.cache().unwrap().verify(g.clone(), 1.0, 3).unwrap();
    assert_eq!(report.checked, report.entries);
    assert_eq!(report.matched, report.checked);

    // A well-formed but wrong entry is caught by verification.
    let liar = cache.dir().join(format!("{}.kl", ball[6].word_string()));
    let honest = fs::read_to_string(&liar).unwrap();
    let forged = honest.replacen(":1", ":2", 1);
    assert_ne!(forged, honest);
    fs::write(&liar, forged).unwrap();
    let report = cache.verify(g.clone(), 1.0, 3).unwrap();
    assert_eq!(report.evicted, vec![ball[6].word_string()]);
    assert!(!liar.exists());
    assert_eq!(cache.clear().unwrap(), ball.len() - 1);
    assert!(cache.list().unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn specialization_commutes_with_action(idx in 0usize..60, s in 0usize..3, t in prop::sample::select(vec!["A2", "B2", "G2"])) {
        // At v = 1, Hbar_s acts as s + 1.
        let kl = common::kl(t, 7);
        let g = kl.group();
        let ball = g.ball(10);
        let x = &ball[idx % ball.len()];
        let n = kl.kl_element(x).unwrap();
        let lhs = specialize_v1(&act_hbar_s(g, &n, s));
        let beta = specialize_v1(&n);
        let mut rhs = n1_act_gen(g, &beta, s);
        rhs.add_scaled(1, &beta);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kl_elements_are_triangular_and_bar_invariant_at_top(idx in 0usize..80, t in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let kl = common::kl(t, 7);
        let ball = kl.group().ball(11);
        let x = &ball[idx % ball.len()];
        let n = kl.kl_element(x).unwrap();
        prop_assert_eq!(n.leading(), Some(x));
        prop_assert_eq!(n.coeff(x), LaurentPoly::one());
        for (y, p) in n.iter() {
            prop_assert!(y <= x);
            if y != x {
                prop_assert!(p.is_in_v_zv());
            }
        }
    }

    #[test]
    fn kl_products_expand_with_bar_invariant_coefficients(idx in 0usize..60, s in 0usize..3, t in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let kl = common::kl(t, 7);
        let g = kl.group();
        let ball = g.ball(9);
        let x = &ball[idx % ball.len()];
        let prod = act_hbar_s(g, &kl.kl_element(x).unwrap(), s);
        for (_, c) in kl.kl_expand(&prod).unwrap() {
            prop_assert_eq!(c.bar(), c.clone());
            prop_assert!(c.terms().all(|(_, k)| k > &num_bigint::BigInt::from(0)));
        }
    }
}
