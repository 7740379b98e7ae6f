//! Terracini and minimally Terracini membership, critical schemes, and the
//! dichotomy check for schemes with connected numerical character.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cohomology::{conditions_matrix, h1, hilbert_profile, s_min, tau_max, NumericalCharacter};
use crate::error::{Error, Result};
use crate::exactfield::{ExactMatrix, Field};
use crate::geometry::{
    binomial, double_scheme, restrict_to_curve, span_dimension, tangent_direction, CurveForm, ProjPoint,
    SchemeComponent, ZeroDimScheme,
};

/// `S ∖ {p_omitted}` has `h1(I_{2A}(d)) = h1 > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetWitness {
    pub omitted: usize,
    pub h1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerraciniVerdict {
    pub points: usize,
    pub degree: usize,
    pub h0: usize,
    pub h1: usize,
    pub spans: bool,
    pub terracini: bool,
    /// Only filled in by [`is_minimally_terracini`].
    pub minimal: Option<bool>,
    pub witnesses: Vec<SubsetWitness>,
}

fn ambient<E: Clone>(points: &[ProjPoint<E>]) -> usize {
    points.first().map_or(2, |p| p.ambient_dim())
}

/// `h0(I_{2S}(d)) > 0`, `h1(I_{2S}(d)) > 0` and `S` spans `P^n`.
pub fn is_terracini<F: Field>(field: &F, points: &[ProjPoint<F::Element>], d: usize) -> Result<TerraciniVerdict> {
    if d == 0 {
        return Err(Error::PreconditionViolated("degree must be at least 1".into()));
    }
    let n = ambient(points);
    let two_s = double_scheme(n, points)?;
    let c = crate::cohomology::cohomology(field, &two_s, d as i64)?;
    let spans = span_dimension(field, points) == n as i64;
    Ok(TerraciniVerdict {
        points: points.len(),
        degree: d,
        h0: c.h0,
        h1: c.h1,
        spans,
        terracini: c.h0 > 0 && c.h1 > 0 && spans,
        minimal: None,
        witnesses: Vec::new(),
    })
}

/// Adds the minimality test: every co-size-one subset `A` must have
/// `h1(I_{2A}(d)) = 0`. Smaller subsets follow because `2A' ⊆ 2A` and `h1`
/// only grows with the scheme.
pub fn is_minimally_terracini<F: Field>(
    field: &F,
    points: &[ProjPoint<F::Element>],
    d: usize,
) -> Result<TerraciniVerdict> {
    minimality(field, points, d, false)
}

pub(crate) fn minimality<F: Field>(
    field: &F,
    points: &[ProjPoint<F::Element>],
    d: usize,
    stop_at_first_witness: bool,
) -> Result<TerraciniVerdict> {
    let mut verdict = is_terracini(field, points, d)?;
    if !verdict.terracini {
        verdict.minimal = Some(false);
        return Ok(verdict);
    }
    let n = ambient(points);
    for omitted in 0..points.len() {
        let mut rest = points.to_vec();
        rest.remove(omitted);
        let value = h1(field, &double_scheme(n, &rest)?, d as i64)?;
        if value > 0 {
            verdict.witnesses.push(SubsetWitness { omitted, h1: value });
            if stop_at_first_witness {
                break;
            }
        }
    }
    verdict.minimal = Some(verdict.witnesses.is_empty());
    Ok(verdict)
}

/// A `d`-critical scheme for `S`: inside `2S`, components of degree at most
/// two, `h1(I_Z(d)) > 0`, and every proper subscheme has `h1 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalScheme<E> {
    pub scheme: ZeroDimScheme<E>,
    pub points: Vec<ProjPoint<E>>,
    pub degree: usize,
}

/// Directions `λ` such that a relation among the rows of `z` involves the
/// double point `index` through `Σ λ_k ∂_k`. Keeping only the derivative
/// along `λ` preserves that relation, hence `h1 > 0`.
fn syzygy_directions<F: Field>(
    field: &F,
    z: &ZeroDimScheme<F::Element>,
    index: usize,
    d: usize,
) -> Result<Vec<ProjPoint<F::Element>>> {
    let m = conditions_matrix(field, z, d)?;
    let offset: usize = z.components()[..index].iter().map(|c| c.degree()).sum();
    let width = z.components()[index].degree();
    let p = z.components()[index].point();
    let mut out = Vec::new();
    for y in m.left_kernel() {
        let lambda = y[offset..offset + width].to_vec();
        if let Ok(v) = ProjPoint::new(field, lambda) {
            if &v != p && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

fn random_direction<F: Field, R: Rng>(field: &F, rng: &mut R, p: &ProjPoint<F::Element>) -> ProjPoint<F::Element> {
    loop {
        let v: Vec<_> = (0..p.coords().len()).map(|_| field.random(rng)).collect();
        if let Ok(v) = ProjPoint::new(field, v) {
            if &v != p {
                return v;
            }
        }
    }
}

/// Greedy reduction of `2S` to a `d`-critical scheme.
///
/// Points are visited in input order. A double point is first replaced by a
/// jet along a direction from the pool: directions read off the relations
/// among the current conditions, then tangent directions of a basis of
/// `|I_S(s(2S))|`, then seeded random directions, `pool_size` in all. Each jet
/// is then tried as a simple point, and each simple point is tried for
/// removal. A step is kept iff `h1(I_Z(d))` stays positive. Passes repeat
/// until nothing changes.
pub fn find_critical_scheme<F: Field>(
    field: &F,
    points: &[ProjPoint<F::Element>],
    d: usize,
    pool_size: usize,
    seed: u64,
) -> Result<CriticalScheme<F::Element>> {
    let verdict = is_terracini(field, points, d)?;
    if !verdict.terracini {
        return Err(Error::PreconditionViolated("the point set is not Terracini in this degree".into()));
    }
    if pool_size == 0 {
        return Err(Error::PreconditionViolated("pool size must be positive".into()));
    }
    let n = ambient(points);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut z = double_scheme(n, points)?;
    let reduced = ZeroDimScheme::simple(n, points)?;
    let s_double = s_min(field, &z)?;
    let forms = conditions_matrix(field, &reduced, s_double)?.kernel();
    let forms: Vec<CurveForm<F::Element>> = forms
        .into_iter()
        .filter_map(|c| CurveForm::new(field, n, s_double, c).ok())
        .collect();
    let positive = |z: &ZeroDimScheme<F::Element>| -> Result<bool> { Ok(h1(field, z, d as i64)? > 0) };

    let mut changed = true;
    while changed {
        changed = false;
        for p in points {
            let Some(i) = z.components().iter().position(|c| c.point() == p) else {
                continue;
            };
            if matches!(z.components()[i], SchemeComponent::Double(_)) {
                let mut pool = syzygy_directions(field, &z, i, d)?;
                for f in &forms {
                    let grad = f.gradient(field, p);
                    if grad.iter().any(|g| !field.is_zero(g)) {
                        if let Ok(v) = tangent_direction(field, p, &grad) {
                            if !pool.contains(&v) {
                                pool.push(v);
                            }
                        }
                    }
                }
                while pool.len() < pool_size {
                    pool.push(random_direction(field, &mut rng, p));
                }
                pool.truncate(pool_size);
                for v in pool {
                    let candidate = z.with_component(i, Some(SchemeComponent::curvilinear(p.clone(), v)?));
                    if positive(&candidate)? {
                        z = candidate;
                        changed = true;
                        break;
                    }
                }
            }
            if matches!(z.components()[i], SchemeComponent::Curvilinear { .. }) {
                let candidate = z.with_component(i, Some(SchemeComponent::Simple(p.clone())));
                if positive(&candidate)? {
                    z = candidate;
                    changed = true;
                }
            }
            if matches!(z.components()[i], SchemeComponent::Simple(_)) {
                let candidate = z.with_component(i, None);
                if positive(&candidate)? {
                    z = candidate;
                    changed = true;
                }
            }
        }
    }

    if let Some(c) = z.components().iter().find(|c| matches!(c, SchemeComponent::Double(_))) {
        let index = points.iter().position(|p| p == c.point()).unwrap_or(0);
        return Err(Error::CriticalSearchFailed(format!(
            "no direction in a pool of {pool_size} keeps h1 > 0 at point {index}"
        )));
    }
    if z.components().len() < points.len() && is_minimally_terracini(field, points, d)?.minimal == Some(true) {
        return Err(Error::CriticalSearchFailed(
            "reduction dropped a point of a minimally Terracini set".into(),
        ));
    }
    Ok(CriticalScheme { scheme: z, points: points.to_vec(), degree: d })
}

/// Every maximal proper subscheme (one jet made simple, or one simple point
/// removed) has `h1(I(d)) = 0`.
pub fn is_minimal_critical<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>, d: usize) -> Result<bool> {
    for (i, c) in z.components().iter().enumerate() {
        let smaller = match c {
            SchemeComponent::Simple(_) => z.with_component(i, None),
            SchemeComponent::Curvilinear { point, .. } => z.with_component(i, Some(SchemeComponent::Simple(point.clone()))),
            SchemeComponent::Double(_) => return Ok(false),
        };
        if h1(field, &smaller, d as i64)? > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalReport {
    pub scheme_degree: usize,
    pub h1: usize,
    pub tau: i64,
    pub s_points: usize,
    pub s_scheme: usize,
    pub s_double: usize,
    pub character: Vec<usize>,
    pub contains_all_points: bool,
    pub checks: BTreeMap<String, bool>,
    pub pass: bool,
}

/// Checks `τ(Z) = d`, `h1(I_Z(d)) = 1`, `n_0 = d + 2 > n_1`, connectedness,
/// `s(S) ≤ s(Z) ≤ s(2S)` and minimality. A failing check is reported, not
/// raised.
pub fn verify_critical_properties<F: Field>(field: &F, critical: &CriticalScheme<F::Element>) -> Result<CriticalReport> {
    let z = &critical.scheme;
    let d = critical.degree;
    let n = z.ambient_dim();
    let two_s = double_scheme(n, &critical.points)?;
    let reduced = ZeroDimScheme::simple(n, &critical.points)?;
    let mut checks = BTreeMap::new();

    checks.insert("components_degree_at_most_2".into(), z.components().iter().all(|c| c.degree() <= 2));
    checks.insert("inside_double_scheme".into(), z.is_subscheme_of(field, &two_s));
    let h1_d = h1(field, z, d as i64)?;
    checks.insert("h1_equals_1".into(), h1_d == 1);
    checks.insert("minimal".into(), h1_d > 0 && is_minimal_critical(field, z, d)?);

    let (tau, s_scheme, character) = if z.is_empty() {
        (-1, 0, Vec::new())
    } else {
        let profile = hilbert_profile(field, z)?;
        let c = NumericalCharacter::from_profile(&profile)?;
        checks.insert("character_connected".into(), c.connected());
        (profile.tau, profile.s, c.entries().to_vec())
    };
    checks.insert("tau_equals_d".into(), tau == d as i64);
    checks.insert("n0_equals_d_plus_2".into(), character.first() == Some(&(d + 2)));
    checks.insert("n0_greater_than_n1".into(), character.len() < 2 || character[0] > character[1]);
    checks.entry("character_connected".into()).or_insert(false);

    let s_points = s_min(field, &reduced)?;
    let s_double = s_min(field, &two_s)?;
    checks.insert("s_chain".into(), s_points <= s_scheme && s_scheme <= s_double);

    let support = z.support();
    let contains_all_points = critical.points.iter().all(|p| support.contains(p));
    let pass = checks.values().all(|&v| v);
    Ok(CriticalReport {
        scheme_degree: z.degree(),
        h1: h1_d,
        tau,
        s_points,
        s_scheme,
        s_double,
        character,
        contains_all_points,
        checks,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WReport {
    pub degree: usize,
    pub tau: i64,
    pub s: usize,
    pub s_critical: usize,
    pub character: Vec<usize>,
    pub curve_degree_is_s: bool,
    pub checks: BTreeMap<String, bool>,
    pub pass: bool,
}

/// Extends a critical scheme to `W ⊂ C` with one degree-2 jet along `C` at
/// every point of `S`.
pub fn build_w_on_curve<F: Field>(
    field: &F,
    critical: &CriticalScheme<F::Element>,
    c: &CurveForm<F::Element>,
) -> Result<(ZeroDimScheme<F::Element>, WReport)> {
    let z = &critical.scheme;
    let n = z.ambient_dim();
    let mut grads = Vec::with_capacity(critical.points.len());
    for (i, p) in critical.points.iter().enumerate() {
        if !c.contains_point(field, p) {
            return Err(Error::CurveDoesNotContainZ(format!("point {i} is not on the curve")));
        }
        let grad = c.gradient(field, p);
        if grad.iter().all(|g| field.is_zero(g)) {
            return Err(Error::SingularAtSupport(i));
        }
        grads.push(grad);
    }
    for (i, comp) in z.components().iter().enumerate() {
        let on = comp
            .rows(field, c.degree())?
            .iter()
            .all(|row| field.is_zero(&crate::exactfield::matrix::dot(field, row, c.coefficients())));
        if !on {
            return Err(Error::CurveDoesNotContainZ(format!("component {i} is not contained in the curve")));
        }
    }
    let mut comps = Vec::with_capacity(critical.points.len());
    for (p, grad) in critical.points.iter().zip(&grads) {
        let existing = z.components().iter().find(|k| k.point() == p);
        comps.push(match existing {
            Some(jet @ SchemeComponent::Curvilinear { .. }) => jet.clone(),
            _ => SchemeComponent::curvilinear(p.clone(), tangent_direction(field, p, grad)?)?,
        });
    }
    let w = ZeroDimScheme::new(n, comps)?;
    let profile = hilbert_profile(field, &w)?;
    let character = NumericalCharacter::from_profile(&profile)?;
    let s_critical = s_min(field, z)?;
    let mut checks = BTreeMap::new();
    checks.insert("tau_equals_d".to_string(), profile.tau == critical.degree as i64);
    checks.insert("s_equals_s_critical".to_string(), profile.s == s_critical);
    checks.insert("character_connected".to_string(), character.connected());
    checks.insert("contains_critical".to_string(), z.is_subscheme_of(field, &w));
    let pass = checks.values().all(|&v| v);
    let report = WReport {
        degree: w.degree(),
        tau: profile.tau,
        s: profile.s,
        s_critical,
        character: character.entries().to_vec(),
        curve_degree_is_s: c.degree() == s_critical,
        checks,
        pass,
    };
    Ok((w, report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DichotomyBranch {
    /// `a = s` and `w = s(d + 3 - s)`.
    EqualDegree,
    /// `s < a`; a lower-degree curve is searched for.
    LowerDegreeCurve,
    /// Hypotheses hold but neither conclusion does.
    Inconsistent,
    /// Some hypothesis fails.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoundCurve {
    pub degree: usize,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomyReport {
    pub d: i64,
    pub s: usize,
    pub w: usize,
    pub a: usize,
    pub hypotheses: BTreeMap<String, bool>,
    pub branch: DichotomyBranch,
    /// `found`, `not found` (not a refutation) or `not applicable`.
    pub search: String,
    pub curve: Option<FoundCurve>,
}

/// Number of random subsets tried per degree in the curve search.
const SUBSET_TRIES: usize = 24;

/// Evaluates the hypotheses and the two-way conclusion for a scheme `W`
/// (with `d = τ(W)`, `s = s(W)`, `w = deg W`) and an integer `a`.
///
/// In the `s < a` branch a curve `D` of degree `m < a` with `τ(W ∩ D) = d`
/// is searched among basis elements of `|I_T(m)|` for `T` the support and
/// seeded random subsets of it, plus `extra_curves`.
pub fn lemma_z03_check<F: Field>(
    field: &F,
    w: &ZeroDimScheme<F::Element>,
    a: usize,
    extra_curves: &[CurveForm<F::Element>],
    seed: u64,
) -> Result<DichotomyReport> {
    let profile = hilbert_profile(field, w)?;
    let character = NumericalCharacter::from_profile(&profile)?;
    let (d, s, deg) = (profile.tau, profile.s, w.degree());
    let (ai, si, wi) = (a as i64, s as i64, deg as i64);
    let mut hyp = BTreeMap::new();
    hyp.insert("a_s_at_most_half_d_plus_3".to_string(), 2 * si <= d + 3);
    hyp.insert("b_connected".to_string(), character.connected());
    hyp.insert("c_a_squared_at_most_w".to_string(), ai * ai <= wi);
    hyp.insert("d_degree_bound".to_string(), a > 0 && ai * d >= ai * ai - 3 * ai + wi);
    let all = hyp.values().all(|&v| v);

    let branch = if !all {
        DichotomyBranch::NotApplicable
    } else if a == s && wi == si * (d + 3 - si) {
        DichotomyBranch::EqualDegree
    } else if s < a {
        DichotomyBranch::LowerDegreeCurve
    } else {
        DichotomyBranch::Inconsistent
    };

    let mut curve = None;
    let search = if branch == DichotomyBranch::LowerDegreeCurve {
        curve = search_curve(field, w, a, d, extra_curves, seed)?;
        if curve.is_some() { "found" } else { "not found" }
    } else {
        "not applicable"
    };
    Ok(DichotomyReport {
        d,
        s,
        w: deg,
        a,
        hypotheses: hyp,
        branch,
        search: search.into(),
        curve,
    })
}

fn search_curve<F: Field>(
    field: &F,
    w: &ZeroDimScheme<F::Element>,
    a: usize,
    d: i64,
    extra: &[CurveForm<F::Element>],
    seed: u64,
) -> Result<Option<FoundCurve>> {
    let n = w.ambient_dim();
    let support = w.support();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = |c: &CurveForm<F::Element>| -> Result<bool> {
        match restrict_to_curve(field, w, c) {
            Ok(sub) if !sub.is_empty() => Ok(tau_max(field, &sub)? == d),
            Ok(_) | Err(Error::SingularAtSupport(_)) => Ok(false),
            Err(e) => Err(e),
        }
    };
    let found = |c: &CurveForm<F::Element>| FoundCurve { degree: c.degree(), coefficients: c.to_strings(field) };
    for c in extra.iter().filter(|c| c.degree() < a) {
        if hits(c)? {
            return Ok(Some(found(c)));
        }
    }
    for m in 1..a {
        let mut subsets = vec![support.clone()];
        let take = (binomial(m + n, n) as usize).saturating_sub(1).min(support.len());
        for _ in 0..SUBSET_TRIES {
            let mut pick = support.clone();
            while pick.len() > take {
                pick.remove(rng.gen_range(0..pick.len()));
            }
            subsets.push(pick);
        }
        for t in subsets {
            let cond = conditions_matrix(field, &ZeroDimScheme::simple(n, &t)?, m)?;
            for coeffs in cond.kernel() {
                let c = CurveForm::new(field, n, m, coeffs)?;
                if hits(&c)? {
                    return Ok(Some(found(&c)));
                }
            }
        }
    }
    Ok(None)
}

/// Convenience for callers holding a point list and a curve.
pub fn curve_through<F: Field>(field: &F, points: &[ProjPoint<F::Element>], m: usize) -> Result<Vec<CurveForm<F::Element>>> {
    let n = ambient(points);
    let cond: ExactMatrix<F> = conditions_matrix(field, &ZeroDimScheme::simple(n, points)?, m)?;
    cond.kernel().into_iter().map(|c| CurveForm::new(field, n, m, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, RationalField};

    fn conic_points<F: Field>(f: &F, ts: impl IntoIterator<Item = i64>) -> Vec<ProjPoint<F::Element>> {
        ts.into_iter().map(|t| ProjPoint::from_i64(f, &[1, t, t * t]).unwrap()).collect()
    }

    fn conic<F: Field>(f: &F) -> CurveForm<F::Element> {
        CurveForm::new(f, 2, 2, [0, 0, 1, -1, 0, 0].map(|v| f.from_i64(v)).to_vec()).unwrap()
    }

    fn grid<F: Field>(f: &F, us: &[i64], vs: &[i64]) -> Vec<ProjPoint<F::Element>> {
        us.iter()
            .flat_map(|&u| vs.iter().map(move |&v| [u, v, 1]))
            .map(|c| ProjPoint::from_i64(f, &c).unwrap())
            .collect()
    }

    #[test]
    fn nine_conic_points_are_minimally_terracini() {
        let f = PrimeField::default();
        let s = conic_points(&f, -4..=4);
        let v = is_minimally_terracini(&f, &s, 8).unwrap();
        assert_eq!((v.h1, v.spans, v.terracini, v.minimal), (1, true, true, Some(true)));
    }

    #[test]
    fn ten_conic_points_are_not_minimal() {
        let f = PrimeField::default();
        let s = conic_points(&f, -5..=4);
        let v = is_minimally_terracini(&f, &s, 8).unwrap();
        assert!(v.terracini);
        assert_eq!(v.minimal, Some(false));
        assert_eq!(v.witnesses.len(), 10);
    }

    #[test]
    fn general_points_and_collinear_points() {
        let f = PrimeField::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s: Vec<_> = (0..5)
            .map(|_| ProjPoint::new(&f, vec![f.random(&mut rng), f.random(&mut rng), f.one()]).unwrap())
            .collect();
        // five double points lie on the doubled conic through them
        let v = is_terracini(&f, &s, 4).unwrap();
        assert_eq!((v.h0, v.h1, v.terracini), (1, 1, true));
        let v = is_terracini(&f, &s, 5).unwrap();
        assert_eq!((v.h0, v.h1, v.terracini), (6, 0, false));
        let line: Vec<_> = (0..3).map(|i| ProjPoint::from_i64(&f, &[i, 0, 1]).unwrap()).collect();
        for d in 1..6 {
            let v = is_terracini(&f, &line, d).unwrap();
            assert!(!v.spans && !v.terracini);
        }
    }

    #[test]
    fn grid_2_by_4_is_minimal_in_degree_7() {
        let f = PrimeField::default();
        let s = grid(&f, &[0, 1], &[-1, 0, 1, 2]);
        assert_eq!(is_minimally_terracini(&f, &s, 7).unwrap().minimal, Some(true));
    }

    #[test]
    fn critical_scheme_of_conic_configuration() {
        let f = PrimeField::default();
        let s = conic_points(&f, -4..=4);
        let crit = find_critical_scheme(&f, &s, 8, 4, 1).unwrap();
        assert_eq!(crit.scheme.degree(), 18);
        let expected = restrict_to_curve(&f, &double_scheme(2, &s).unwrap(), &conic(&f)).unwrap();
        assert!(crit.scheme.is_subscheme_of(&f, &expected) && expected.is_subscheme_of(&f, &crit.scheme));
        let report = verify_critical_properties(&f, &crit).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.character[0], 10);
        assert!(report.contains_all_points);
    }

    #[test]
    fn critical_scheme_of_grid_instance() {
        let f = PrimeField::default();
        let s = grid(&f, &[0, 1], &[-1, 0, 1, 2]);
        let crit = find_critical_scheme(&f, &s, 7, 4, 9).unwrap();
        assert_eq!(crit.scheme.degree(), 16);
        let report = verify_critical_properties(&f, &crit).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.tau, 7);
        assert_eq!(report.character, vec![9, 8]);
    }

    #[test]
    fn non_terracini_input_is_rejected() {
        let f = PrimeField::default();
        let s = conic_points(&f, 0..5);
        assert!(matches!(find_critical_scheme(&f, &s, 8, 4, 0), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn broken_critical_scheme_is_reported() {
        let f = PrimeField::default();
        let s = conic_points(&f, -4..=4);
        let crit = find_critical_scheme(&f, &s, 8, 4, 1).unwrap();
        let broken = CriticalScheme { scheme: crit.scheme.with_component(0, None), ..crit };
        let report = verify_critical_properties(&f, &broken).unwrap();
        assert_eq!(report.h1, 0);
        assert!(!report.pass);
    }

    #[test]
    fn w_on_singular_double_conic_is_rejected() {
        let f = PrimeField::default();
        let s = conic_points(&f, -4..=4);
        let crit = find_critical_scheme(&f, &s, 8, 4, 1).unwrap();
        let double_conic = conic(&f).product(&f, &conic(&f)).unwrap();
        assert_eq!(build_w_on_curve(&f, &crit, &double_conic).unwrap_err(), Error::SingularAtSupport(0));
        let (w, report) = build_w_on_curve(&f, &crit, &conic(&f)).unwrap();
        assert_eq!(w, crit.scheme);
        assert!(report.pass);
    }

    #[test]
    fn w_for_grid_instance_equals_z() {
        let f = PrimeField::default();
        let s = grid(&f, &[0, 1], &[-1, 0, 1, 2]);
        let crit = find_critical_scheme(&f, &s, 7, 4, 9).unwrap();
        // A = x0 (x0 - x2)
        let a = CurveForm::new(&f, 2, 2, [1, 0, -1, 0, 0, 0].map(|v| f.from_i64(v)).to_vec()).unwrap();
        let (w, report) = build_w_on_curve(&f, &crit, &a).unwrap();
        assert!(w.is_subscheme_of(&f, &crit.scheme) && crit.scheme.is_subscheme_of(&f, &w));
        assert_eq!(report.tau, 7);
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn dichotomy_equal_degree_branch() {
        let q = RationalField;
        // grid CI of degrees (3, 6): τ = 6, w = 18 = 3 (6 + 3 - 3)
        let w = ZeroDimScheme::simple(2, &grid(&q, &[-1, 0, 1], &[-2, -1, 0, 1, 2, 3])).unwrap();
        let r = lemma_z03_check(&q, &w, 3, &[], 0).unwrap();
        assert_eq!((r.d, r.s, r.w), (6, 3, 18));
        assert_eq!(r.branch, DichotomyBranch::EqualDegree);
    }

    #[test]
    fn dichotomy_lower_degree_branch_finds_the_conic_pair() {
        let q = RationalField;
        // grid CI of degrees (2, 6): τ = 5, s = 2, w = 12; take a = 3
        let w = ZeroDimScheme::simple(2, &grid(&q, &[0, 1], &[-2, -1, 0, 1, 2, 3])).unwrap();
        let r = lemma_z03_check(&q, &w, 3, &[], 0).unwrap();
        assert_eq!(r.branch, DichotomyBranch::LowerDegreeCurve);
        assert_eq!(r.search, "found");
        assert_eq!(r.curve.unwrap().degree, 2);
    }

    #[test]
    fn dichotomy_needs_connected_character() {
        let f = PrimeField::default();
        let two_s = double_scheme(2, &conic_points(&f, -4..=4)).unwrap();
        let r = lemma_z03_check(&f, &two_s, 4, &[], 0).unwrap();
        assert!(!r.hypotheses["b_connected"]);
        assert_eq!(r.branch, DichotomyBranch::NotApplicable);
    }
}
