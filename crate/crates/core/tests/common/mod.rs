//! Invariant checks shared by the property suite and the acceptance run.
//! Each returns `Err(description)` on the first violation.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use terracini_core::cohomology::{bound_checks, character_to_h1, cohomology, h1, hilbert_profile, NumericalCharacter};
use terracini_core::geometry::{binomial, derivative_row, eval_row};
use terracini_core::{double_scheme, s_min, Field, ProjPoint, SchemeComponent, ZeroDimScheme};

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_points<F: Field, R: Rng>(f: &F, rng: &mut R, count: usize, range: i64) -> Vec<ProjPoint<F::Element>> {
    let mut out: Vec<ProjPoint<F::Element>> = Vec::with_capacity(count);
    while out.len() < count {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-range..=range)).collect();
        if let Ok(p) = ProjPoint::from_i64(f, &c) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Random mixture of simple points, jets and double points.
pub fn random_scheme<F: Field, R: Rng>(f: &F, rng: &mut R, max_components: usize) -> ZeroDimScheme<F::Element> {
    let count = rng.gen_range(1..=max_components);
    let pts = random_points(f, rng, count, 12);
    let comps = pts
        .into_iter()
        .map(|p| match rng.gen_range(0..3) {
            0 => SchemeComponent::Simple(p),
            1 => SchemeComponent::Double(p),
            _ => loop {
                let v = random_points(f, rng, 1, 12).pop().unwrap();
                if let Ok(c) = SchemeComponent::curvilinear(p.clone(), v) {
                    break c;
                }
            },
        })
        .collect();
    ZeroDimScheme::new(2, comps).unwrap()
}

/// Random subscheme: each component is kept, downgraded or dropped.
pub fn random_subscheme<F: Field, R: Rng>(f: &F, rng: &mut R, z: &ZeroDimScheme<F::Element>) -> ZeroDimScheme<F::Element> {
    let mut comps = Vec::new();
    for c in z.components() {
        let choice = rng.gen_range(0..3);
        let kept = match (c, choice) {
            (_, 0) => Some(c.clone()),
            (_, 1) => None,
            (SchemeComponent::Double(p), _) => Some(match rng.gen_bool(0.5) {
                true => SchemeComponent::Simple(p.clone()),
                false => loop {
                    let v = random_points(f, rng, 1, 12).pop().unwrap();
                    if let Ok(j) = SchemeComponent::curvilinear(p.clone(), v) {
                        break j;
                    }
                },
            }),
            (SchemeComponent::Curvilinear { point, .. }, _) => Some(SchemeComponent::Simple(point.clone())),
            (SchemeComponent::Simple(_), _) => None,
        };
        comps.extend(kept);
    }
    ZeroDimScheme::new(2, comps).unwrap()
}

pub fn euler<F: Field>(f: &F, z: &ZeroDimScheme<F::Element>, d: usize) -> Check {
    let c = cohomology(f, z, d as i64).map_err(|e| e.to_string())?;
    let lhs = c.h0 as i64 - c.h1 as i64;
    let rhs = binomial(d + 2, 2) as i64 - z.degree() as i64;
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("h0 - h1 = {lhs}, expected {rhs} at d = {d}"))
    }
}

/// `W ⊆ Z` lowers `h1` and raises `h0`; in the degree, `h0` grows and `h1`
/// shrinks.
pub fn monotonicity<F: Field>(f: &F, z: &ZeroDimScheme<F::Element>, w: &ZeroDimScheme<F::Element>, max_d: usize) -> Check {
    if !w.is_subscheme_of(f, z) {
        return Err("generator produced a non-subscheme".into());
    }
    let mut prev: Option<(usize, usize)> = None;
    for d in 0..=max_d {
        let cz = cohomology(f, z, d as i64).map_err(|e| e.to_string())?;
        let cw = cohomology(f, w, d as i64).map_err(|e| e.to_string())?;
        if cz.h0 > cw.h0 || cw.h1 > cz.h1 {
            return Err(format!("subscheme direction fails at d = {d}: Z {cz:?}, W {cw:?}"));
        }
        if let Some((h0, h1)) = prev {
            if cz.h0 < h0 || cz.h1 > h1 {
                return Err(format!("degree direction fails at d = {d}"));
            }
        }
        prev = Some((cz.h0, cz.h1));
    }
    Ok(())
}

/// Character against `h1`, `Σ n_i = z + binom(s, 2)`, `n_0 = τ + 2`, and the
/// degree bounds.
pub fn character_invariants<F: Field>(f: &F, z: &ZeroDimScheme<F::Element>) -> Check {
    let p = hilbert_profile(f, z).map_err(|e| e.to_string())?;
    let c = NumericalCharacter::from_profile(&p).map_err(|e| e.to_string())?;
    for t in 0..p.h1.len() {
        if character_to_h1(&c, t as i64) != p.h1[t] as i64 {
            return Err(format!("character {:?} disagrees with h1 at t = {t}", c.entries()));
        }
    }
    if c.entries().iter().sum::<usize>() != z.degree() + binomial(c.len(), 2) as usize {
        return Err(format!("sum of {:?} is not z + binom(s, 2)", c.entries()));
    }
    if c.entries()[0] as i64 != p.tau + 2 {
        return Err(format!("n0 = {} but tau = {}", c.entries()[0], p.tau));
    }
    let b = bound_checks(f, z).map_err(|e| e.to_string())?;
    if !(b.lower_ok && b.upper_ok) {
        return Err(format!("bounds fail: {b:?}"));
    }
    Ok(())
}

/// `s(S) < s(2S) ≤ 2 s(S)`.
pub fn double_s_chain<F: Field>(f: &F, pts: &[ProjPoint<F::Element>]) -> Check {
    let s = s_min(f, &ZeroDimScheme::simple(2, pts).unwrap()).map_err(|e| e.to_string())?;
    let s2 = s_min(f, &double_scheme(2, pts).unwrap()).map_err(|e| e.to_string())?;
    if s < s2 && s2 <= 2 * s {
        Ok(())
    } else {
        Err(format!("s(S) = {s}, s(2S) = {s2}"))
    }
}

/// A jet at `p` depends on `v` only modulo `p`: the schemes given by `v` and
/// `v + λp` have the same `h1`, and `D_p = d ev_p` by Euler's formula.
pub fn jet_invariance<F: Field>(
    f: &F,
    rest: &ZeroDimScheme<F::Element>,
    p: &ProjPoint<F::Element>,
    v: &ProjPoint<F::Element>,
    lambda: i64,
    d: usize,
) -> Check {
    let shifted: Vec<_> = v
        .coords()
        .iter()
        .zip(p.coords())
        .map(|(a, b)| f.add(a, &f.mul(&f.from_i64(lambda), b)))
        .collect();
    let w = ProjPoint::new(f, shifted).map_err(|e| e.to_string())?;
    let with = |dir: &ProjPoint<F::Element>| -> Result<ZeroDimScheme<F::Element>, String> {
        let mut comps = rest.components().to_vec();
        comps.push(SchemeComponent::curvilinear(p.clone(), dir.clone()).map_err(|e| e.to_string())?);
        ZeroDimScheme::new(2, comps).map_err(|e| e.to_string())
    };
    let (zv, zw) = (with(v)?, with(&w)?);
    for t in 0..=d {
        let a = h1(f, &zv, t as i64).map_err(|e| e.to_string())?;
        let b = h1(f, &zw, t as i64).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("h1 at t = {t} changes from {a} to {b} under v -> v + {lambda} p"));
        }
    }
    let ev = eval_row(f, p, d);
    let dp = derivative_row(f, p, p, d).map_err(|e| e.to_string())?;
    let scaled: Vec<_> = ev.iter().map(|x| f.mul(&f.from_i64(d as i64), x)).collect();
    if dp != scaled {
        return Err("D_p differs from d ev_p".into());
    }
    Ok(())
}
