mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use terracini_core::constructions::{conic_points, default_conic_params};
use terracini_core::terracini::is_minimal_critical;
use terracini_core::{
    double_scheme, find_critical_scheme, h1, hilbert_profile, is_minimally_terracini, is_terracini, PrimeField,
    ZeroDimScheme, DEFAULT_PRIME,
};

fn field() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

fn small() -> PrimeField {
    PrimeField::new(10007).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn euler_identity(seed in any::<u64>(), d in 0usize..8) {
        let f = field();
        let z = common::random_scheme(&f, &mut common::rng(seed), 7);
        prop_assert_eq!(common::euler(&f, &z, d), Ok(()));
    }

    #[test]
    fn euler_identity_small_prime(seed in any::<u64>(), d in 0usize..8) {
        let f = small();
        let z = common::random_scheme(&f, &mut common::rng(seed), 7);
        prop_assert_eq!(common::euler(&f, &z, d), Ok(()));
    }

    #[test]
    fn monotone_in_subscheme_and_degree(seed in any::<u64>()) {
        let f = field();
        let mut rng = common::rng(seed);
        let z = common::random_scheme(&f, &mut rng, 7);
        let w = common::random_subscheme(&f, &mut rng, &z);
        prop_assert_eq!(common::monotonicity(&f, &z, &w, 7), Ok(()));
    }

    #[test]
    fn character_round_trip(seed in any::<u64>()) {
        let f = field();
        let z = common::random_scheme(&f, &mut common::rng(seed), 8);
        prop_assert_eq!(common::character_invariants(&f, &z), Ok(()));
    }

    #[test]
    fn double_points_raise_s(seed in any::<u64>(), count in 1usize..9) {
        let f = field();
        let pts = common::random_points(&f, &mut common::rng(seed), count, 15);
        prop_assert_eq!(common::double_s_chain(&f, &pts), Ok(()));
    }

    #[test]
    fn jet_depends_on_direction_only(seed in any::<u64>(), lambda in -20i64..20, d in 1usize..7) {
        let f = field();
        let mut rng = common::rng(seed);
        let pts = common::random_points(&f, &mut rng, 5, 10);
        let k = rng.gen_range(0..3);
        let rest = ZeroDimScheme::simple(2, &pts[2..2 + k]).unwrap();
        prop_assert_eq!(common::jet_invariance(&f, &rest, &pts[0], &pts[1], lambda, d), Ok(()));
    }

    /// Many points on a conic: `h_Z(d) = 2d + 1` once the points outnumber it.
    #[test]
    fn points_on_conic_closed_form(extra in 0usize..6, d in 1usize..6) {
        let f = field();
        let pts = conic_points(&f, &default_conic_params(2 * d + 2 + extra)).unwrap();
        let z = ZeroDimScheme::simple(2, &pts).unwrap();
        let p = hilbert_profile(&f, &z).unwrap();
        let hd = pts.len() - h1(&f, &z, d as i64).unwrap();
        prop_assert_eq!(hd, 2 * d + 1);
        prop_assert_eq!(p.s, 2);
    }
}

/// Points on a line: `h_Z(d) = d + 1` for `d < z`.
#[test]
fn points_on_line_closed_form() {
    let f = field();
    let pts: Vec<_> = (0..9).map(|i| terracini_core::ProjPoint::from_i64(&f, &[i, 3 * i + 1, 1]).unwrap()).collect();
    let z = ZeroDimScheme::simple(2, &pts).unwrap();
    for d in 0..9 {
        assert_eq!(9 - h1(&f, &z, d).unwrap(), d as usize + 1);
    }
}

/// Minimal sets of doubles: random proper subsets have `h1 = 0`.
#[test]
fn minimal_sets_have_regular_subsets() {
    let f = field();
    let mut rng = common::rng(11);
    for d in [4usize, 6, 8] {
        let pts = conic_points(&f, &default_conic_params(d + 1)).unwrap();
        assert!(is_minimally_terracini(&f, &pts, d).unwrap().minimal == Some(true));
        for _ in 0..20 {
            let keep = rng.gen_range(1..pts.len());
            let subset: Vec<_> = pts.choose_multiple(&mut rng, keep).cloned().collect();
            assert_eq!(h1(&f, &double_scheme(2, &subset).unwrap(), d as i64).unwrap(), 0);
        }
    }
}

/// Every critical scheme the search returns is minimal when checked
/// component by component.
#[test]
fn critical_schemes_are_minimal() {
    let f = field();
    for (d, count) in [(4usize, 5usize), (6, 7), (8, 9)] {
        let pts = conic_points(&f, &default_conic_params(count)).unwrap();
        assert!(is_terracini(&f, &pts, d).unwrap().terracini);
        for seed in 0..4 {
            let c = find_critical_scheme(&f, &pts, d, 8, seed).unwrap();
            assert!(h1(&f, &c.scheme, d as i64).unwrap() > 0);
            assert!(is_minimal_critical(&f, &c.scheme, d).unwrap());
            for i in 0..c.scheme.components().len() {
                let smaller = c.scheme.with_component(i, None);
                assert_eq!(h1(&f, &smaller, d as i64).unwrap(), 0, "d={d} seed={seed} drop {i}");
            }
        }
    }
}
