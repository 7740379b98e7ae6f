use std::collections::BTreeMap;

use serde::Serialize;

use super::{conic_ci, conic_points, default_conic_params, default_grid_params, grid_complete_intersection};
use crate::cohomology::{h1, hilbert_profile, s_min, NumericalCharacter};
use crate::error::{Error, Result};
use crate::exactfield::{Field, PrimeField};
use crate::geometry::{double_scheme, restrict_to_curve, CurveForm, ProjPoint, ZeroDimScheme};
use crate::terracini::is_minimally_terracini;

fn ceil_half(d: usize) -> usize {
    d.div_ceil(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CiLemmaReport {
    pub a: usize,
    pub b: usize,
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub degree: usize,
    /// `a + b - 3`.
    pub critical_degree: i64,
    /// `None` when `a + b - 3 < 0` and the check is vacuous.
    pub h1_at_critical: Option<usize>,
    /// `(t, h1)` for `a + b - 2 ≤ t ≤ a + b + 2`.
    pub h1_above: Vec<(i64, usize)>,
    pub subsets_checked: usize,
    /// Omitted indices whose complement still has `h1 > 0`.
    pub subsets_failing: Vec<usize>,
    pub checks: BTreeMap<String, bool>,
    pub pass: bool,
}

/// The grid complete intersection `W` of degrees `(a, b)` has
/// `h1(I_W(a+b-3)) = 1`, vanishing `h1` above, and every `W` minus one point
/// has `h1 = 0` in degree `a + b - 3`.
pub fn ci_lemma_verify<F: Field>(field: &F, a: usize, b: usize, params: Option<(Vec<i64>, Vec<i64>)>) -> Result<CiLemmaReport> {
    if a == 0 || a > b {
        return Err(Error::PreconditionViolated(format!("need 1 <= a <= b, got a={a} b={b}")));
    }
    let (u, v) = params.unwrap_or_else(|| default_grid_params(a, b));
    if u.len() != a || v.len() != b {
        return Err(Error::PreconditionViolated("parameter counts must equal a and b".into()));
    }
    let grid = grid_complete_intersection(field, &u, &v)?;
    let w = ZeroDimScheme::simple(2, &grid.points)?;
    let top = a as i64 + b as i64 - 3;
    let mut checks = BTreeMap::new();

    let h1_above = (top + 1..=top + 5)
        .map(|t| Ok((t, h1(field, &w, t)?)))
        .collect::<Result<Vec<_>>>()?;
    checks.insert("h1_vanishes_above".to_string(), h1_above.iter().all(|&(_, h)| h == 0));
    if h1_above.iter().any(|&(_, h)| h != 0) {
        return Err(Error::DegenerateParameters(format!("grid {u:?} x {v:?} is not in general position")));
    }

    let (h1_at_critical, subsets_failing, subsets_checked) = if top < 0 {
        (None, Vec::new(), 0)
    } else {
        let value = h1(field, &w, top)?;
        checks.insert("h1_equals_1".to_string(), value == 1);
        let mut failing = Vec::new();
        for omit in 0..grid.points.len() {
            let mut rest = grid.points.clone();
            rest.remove(omit);
            if h1(field, &ZeroDimScheme::simple(2, &rest)?, top)? != 0 {
                failing.push(omit);
            }
        }
        checks.insert("one_point_removed_vanishes".to_string(), failing.is_empty());
        (Some(value), failing, grid.points.len())
    };
    let pass = checks.values().all(|&v| v);
    Ok(CiLemmaReport {
        a,
        b,
        u,
        v,
        degree: w.degree(),
        critical_degree: top,
        h1_at_critical,
        h1_above,
        subsets_checked,
        subsets_failing,
        checks,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum O1o1Variant {
    /// Product of lines `x0 = u_i x2` against `x1 = v_j x2`.
    Grid,
    /// The smooth conic against a seeded curve; `t = 2` and prime fields only.
    Conic { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct O1o1Report {
    pub t: usize,
    pub d: usize,
    pub x: usize,
    pub variant: O1o1Variant,
    pub points: usize,
    pub terracini: bool,
    pub minimal: bool,
    pub critical_degree: usize,
    pub h1: usize,
    pub tau: i64,
    pub character: Vec<usize>,
    pub connected: bool,
    pub checks: BTreeMap<String, bool>,
    pub pass: bool,
}

/// `S = C ∩ B` with `deg C = t`, `deg B = (d + 3 - t)/2`, and `Z = C ∩ 2S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct O1o1Instance<E> {
    pub points: Vec<ProjPoint<E>>,
    pub curve: CurveForm<E>,
    pub critical: ZeroDimScheme<E>,
    pub report: O1o1Report,
}

fn o1o1_preconditions(t: usize, d: usize) -> Result<usize> {
    if t < 2 {
        return Err(Error::PreconditionViolated(format!("t = {t} must be at least 2")));
    }
    if d + 3 < t || (d + 3 - t) % 2 != 0 {
        return Err(Error::PreconditionViolated(format!("d + 3 - t = {} must be even", d as i64 + 3 - t as i64)));
    }
    if d + 1 < 3 * t {
        return Err(Error::PreconditionViolated(format!("d = {d} must be at least 3t - 1 = {}", 3 * t - 1)));
    }
    Ok((d + 3 - t) / 2)
}

/// Grid variant over any field.
pub fn proposition_o1o1_instance<F: Field>(field: &F, t: usize, d: usize) -> Result<O1o1Instance<F::Element>> {
    let b = o1o1_preconditions(t, d)?;
    let (u, v) = default_grid_params(t, b);
    let grid = grid_complete_intersection(field, &u, &v)?;
    proposition_o1o1_report(field, t, d, grid.points, grid.a, O1o1Variant::Grid)
}

/// Conic variant; needs a prime field.
pub fn proposition_o1o1_conic(field: &PrimeField, d: usize, seed: u64) -> Result<O1o1Instance<u64>> {
    let b = o1o1_preconditions(2, d)?;
    let ci = conic_ci(field, b, seed)?;
    proposition_o1o1_report(field, 2, d, ci.points, ci.conic, O1o1Variant::Conic { seed })
}

/// Evaluates a prepared `(S, C)` pair by direct rank computation.
pub fn proposition_o1o1_report<F: Field>(
    field: &F,
    t: usize,
    d: usize,
    points: Vec<ProjPoint<F::Element>>,
    curve: CurveForm<F::Element>,
    variant: O1o1Variant,
) -> Result<O1o1Instance<F::Element>> {
    o1o1_preconditions(t, d)?;
    let x = t * (d + 3 - t) / 2;
    let verdict = is_minimally_terracini(field, &points, d)?;
    let z = restrict_to_curve(field, &double_scheme(2, &points)?, &curve)?;
    let h1_z = h1(field, &z, d as i64)?;
    let profile = hilbert_profile(field, &z)?;
    let character = NumericalCharacter::from_profile(&profile)?;

    let mut checks = BTreeMap::new();
    checks.insert("cardinality".to_string(), points.len() == x);
    checks.insert("minimally_terracini".to_string(), verdict.minimal == Some(true));
    checks.insert("critical_degree".to_string(), z.degree() == 2 * x);
    checks.insert("h1_equals_1".to_string(), h1_z == 1);
    checks.insert("tau_equals_d".to_string(), profile.tau == d as i64);
    checks.insert("connected".to_string(), character.connected());
    checks.insert("n0_equals_d_plus_2".to_string(), character.entries()[0] == d + 2);
    let pass = checks.values().all(|&v| v);
    let report = O1o1Report {
        t,
        d,
        x,
        variant,
        points: points.len(),
        terracini: verdict.terracini,
        minimal: verdict.minimal == Some(true),
        critical_degree: z.degree(),
        h1: h1_z,
        tau: profile.tau,
        character: character.entries().to_vec(),
        connected: character.connected(),
        checks,
        pass,
    };
    Ok(O1o1Instance { points, curve, critical: z, report })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Due001Report {
    pub d: usize,
    pub params: Vec<i64>,
    /// `t = 0 ..= τ(S) + 1`.
    pub t: Vec<usize>,
    pub h1: Vec<usize>,
    pub delta: Vec<usize>,
    pub expected_h1: Vec<usize>,
    pub tau: i64,
    pub character: Vec<usize>,
    pub double_h1: Vec<(usize, usize)>,
    pub double_s: usize,
    pub double_character: Vec<usize>,
    pub expected_double_character: Vec<usize>,
    pub double_connected: bool,
    pub minimal: bool,
    pub checks: BTreeMap<String, bool>,
    pub pass: bool,
}

/// `d + 1` points on a smooth conic form a minimally Terracini set in
/// degree `d`, with a disconnected character for `2S`.
pub fn example_due001_report<F: Field>(field: &F, d: usize) -> Result<Due001Report> {
    if d < 8 {
        return Err(Error::PreconditionViolated(format!("d = {d} must be at least 8")));
    }
    let k = ceil_half(d);
    let params = default_conic_params(d + 1);
    let points = conic_points(field, &params)?;
    let s = ZeroDimScheme::simple(2, &points)?;
    let profile = hilbert_profile(field, &s)?;
    let character = NumericalCharacter::from_profile(&profile)?;
    let two_s = double_scheme(2, &points)?;
    let double_profile = hilbert_profile(field, &two_s)?;
    let double_character = NumericalCharacter::from_profile(&double_profile)?;
    let double_h1: Vec<(usize, usize)> = [d, d - 1, d - 2].iter().map(|&t| (t, double_profile.h1[t])).collect();
    let verdict = is_minimally_terracini(field, &points, d)?;

    let expected_h1: Vec<usize> = (0..k).map(|t| d - 2 * t).chain([0]).collect();
    let expected_double_character = vec![d + 2, d + 1, k + 3, d - k + 3];
    let mut checks = BTreeMap::new();
    checks.insert("h1_table".to_string(), profile.h1 == expected_h1);
    checks.insert("tau".to_string(), profile.tau == k as i64 - 1);
    checks.insert("character".to_string(), character.entries() == [k + 1, d - k + 1]);
    checks.insert(
        "double_h1".to_string(),
        double_h1.iter().map(|&(_, h)| h).eq([1, 3, 5]),
    );
    checks.insert("double_s".to_string(), double_profile.s == 4);
    checks.insert("double_s_is_twice_s".to_string(), double_profile.s == 2 * s_min(field, &s)?);
    checks.insert("double_character".to_string(), double_character.entries() == expected_double_character.as_slice());
    checks.insert("double_disconnected".to_string(), !double_character.connected());
    checks.insert("minimally_terracini".to_string(), verdict.minimal == Some(true));
    let pass = checks.values().all(|&v| v);
    Ok(Due001Report {
        d,
        params,
        t: profile.degrees().collect(),
        h1: profile.h1.clone(),
        delta: profile.delta.clone(),
        expected_h1,
        tau: profile.tau,
        character: character.entries().to_vec(),
        double_h1,
        double_s: double_profile.s,
        double_character: double_character.entries().to_vec(),
        expected_double_character,
        double_connected: double_character.connected(),
        minimal: verdict.minimal == Some(true),
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::RationalField;

    #[test]
    fn ci_lemma_small_cases() {
        let f = PrimeField::default();
        let r = ci_lemma_verify(&f, 2, 2, None).unwrap();
        assert_eq!((r.h1_at_critical, r.subsets_checked), (Some(1), 4));
        assert_eq!(r.h1_above[0], (2, 0));
        assert!(r.pass);
        let r = ci_lemma_verify(&f, 2, 4, None).unwrap();
        assert_eq!((r.critical_degree, r.h1_at_critical, r.h1_above[0]), (3, Some(1), (4, 0)));
        assert!(r.pass);
        let r = ci_lemma_verify(&f, 1, 1, None).unwrap();
        assert_eq!((r.h1_at_critical, r.subsets_checked), (None, 0));
        assert!(r.pass);
        assert!(matches!(ci_lemma_verify(&f, 3, 2, None), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn ci_lemma_over_rationals() {
        let r = ci_lemma_verify(&RationalField, 3, 4, None).unwrap();
        assert_eq!(r.h1_at_critical, Some(1));
        assert!(r.pass);
    }

    #[test]
    fn o1o1_grid_instances() {
        let f = PrimeField::default();
        let inst = proposition_o1o1_instance(&f, 2, 7).unwrap();
        assert_eq!((inst.report.x, inst.report.critical_degree), (8, 16));
        assert!(inst.report.pass, "{:?}", inst.report.checks);
        let inst = proposition_o1o1_instance(&f, 3, 8).unwrap();
        assert_eq!(inst.report.x, 12);
        assert!(inst.report.pass, "{:?}", inst.report.checks);
    }

    #[test]
    fn o1o1_preconditions_are_enforced() {
        let f = PrimeField::default();
        assert!(matches!(proposition_o1o1_instance(&f, 2, 6), Err(Error::PreconditionViolated(_))));
        assert!(matches!(proposition_o1o1_instance(&f, 3, 6), Err(Error::PreconditionViolated(_))));
        assert!(matches!(proposition_o1o1_instance(&f, 1, 6), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn o1o1_conic_matches_grid() {
        let f = PrimeField::default();
        for d in [7, 9] {
            let grid = proposition_o1o1_instance(&f, 2, d).unwrap().report;
            let conic = (0..20).find_map(|seed| proposition_o1o1_conic(&f, d, seed).ok()).unwrap().report;
            assert!(grid.pass && conic.pass);
            assert_eq!((grid.critical_degree, grid.h1, grid.tau), (conic.critical_degree, conic.h1, conic.tau));
        }
    }

    #[test]
    fn due001_at_8_and_9() {
        let f = PrimeField::default();
        let r = example_due001_report(&f, 8).unwrap();
        assert_eq!(r.h1, vec![8, 6, 4, 2, 0]);
        assert_eq!(r.double_character, vec![10, 9, 7, 7]);
        assert!(r.pass, "{:?}", r.checks);
        let r = example_due001_report(&f, 9).unwrap();
        assert_eq!(r.double_character, vec![11, 10, 8, 7]);
        assert!(r.pass, "{:?}", r.checks);
        assert!(matches!(example_due001_report(&f, 7), Err(Error::PreconditionViolated(_))));
    }
}
