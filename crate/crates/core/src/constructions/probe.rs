//! Seeded random search for minimally Terracini sets. A probe that finds
//! nothing is evidence of emptiness, never a proof.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::geometry::ProjPoint;
use crate::terracini::minimality;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    /// Independent random points.
    Uniform,
    /// Points spread over a union of one to three random lines plus a few
    /// random points, so the set still spans the plane.
    LowDegreeCurve,
    /// A grid with a few points replaced by random ones.
    PerturbedGrid,
    /// Random distinct points of the conic `x0 x2 = x1²`.
    OnConic,
    /// Cycles through the four generators above by trial index.
    Mixed,
}

impl Generator {
    pub const ALL: [Generator; 5] =
        [Generator::Uniform, Generator::LowDegreeCurve, Generator::PerturbedGrid, Generator::OnConic, Generator::Mixed];

    fn for_trial(self, index: usize) -> Generator {
        match self {
            Generator::Mixed => Generator::ALL[index % 4],
            g => g,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Uniform => "uniform",
            Generator::LowDegreeCurve => "low-degree-curve",
            Generator::PerturbedGrid => "perturbed-grid",
            Generator::OnConic => "on-conic",
            Generator::Mixed => "mixed",
        })
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.to_string() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown generator {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeSummary {
    /// Always `"evidence"`.
    pub label: String,
    pub d: usize,
    pub y: usize,
    pub trials: usize,
    pub seed: u64,
    pub generator: Generator,
    pub terracini: usize,
    pub found: usize,
    pub trials_by_generator: BTreeMap<String, usize>,
    /// Trial index and points of each minimally Terracini configuration.
    pub counterexamples: Vec<(usize, Vec<Vec<String>>)>,
}

/// Per-trial stream: trial `i` uses stream `i` of the ChaCha generator
/// seeded with `seed`, so trials are independent of each other's order.
fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn random_point<F: Field, R: Rng>(field: &F, rng: &mut R) -> ProjPoint<F::Element> {
    loop {
        if let Ok(p) = ProjPoint::new(field, (0..3).map(|_| field.random(rng)).collect()) {
            return p;
        }
    }
}

fn push_new<E: PartialEq>(out: &mut Vec<ProjPoint<E>>, p: ProjPoint<E>) {
    if !out.contains(&p) {
        out.push(p);
    }
}

fn configuration<F: Field, R: Rng>(field: &F, y: usize, generator: Generator, rng: &mut R) -> Vec<ProjPoint<F::Element>> {
    let mut out = Vec::with_capacity(y);
    match generator {
        Generator::Uniform | Generator::Mixed => {}
        Generator::LowDegreeCurve => {
            let lines: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| (random_point(field, rng), random_point(field, rng))).collect();
            let on_lines = y.saturating_sub(rng.gen_range(1..=3));
            let mut guard = 0;
            while out.len() < on_lines && guard < 64 * y {
                guard += 1;
                let (p, q) = &lines[out.len() % lines.len()];
                let l = field.random(rng);
                let coords = p.coords().iter().zip(q.coords()).map(|(a, b)| field.add(a, &field.mul(&l, b))).collect();
                if let Ok(pt) = ProjPoint::new(field, coords) {
                    push_new(&mut out, pt);
                }
            }
        }
        Generator::PerturbedGrid => {
            let a = rng.gen_range(2..=4usize);
            let b = y.div_ceil(a);
            let mut us: Vec<i64> = (-(2 * a as i64)..=2 * a as i64).collect();
            let mut vs: Vec<i64> = (-(2 * b as i64)..=2 * b as i64).collect();
            us.shuffle(rng);
            vs.shuffle(rng);
            for &u in &us[..a] {
                for &v in &vs[..b] {
                    if out.len() < y {
                        push_new(&mut out, ProjPoint::from_i64(field, &[u, v, 1]).expect("nonzero"));
                    }
                }
            }
            for _ in 0..rng.gen_range(1..=3).min(out.len()) {
                let i = rng.gen_range(0..out.len());
                out.remove(i);
            }
        }
        Generator::OnConic => {
            let window = 4 * y as i64 + 8;
            let mut guard = 0;
            while out.len() < y && guard < 64 * y {
                guard += 1;
                let t = field.from_i64(rng.gen_range(-window..=window));
                let pt = ProjPoint::new(field, vec![field.one(), t.clone(), field.mul(&t, &t)]).expect("nonzero");
                push_new(&mut out, pt);
            }
        }
    }
    while out.len() < y {
        push_new(&mut out, random_point(field, rng));
    }
    out
}

/// Runs `trials` independent configurations of `y` points through the
/// minimally Terracini test in degree `d`.
pub fn emptiness_probe<F: Field>(
    field: &F,
    d: usize,
    y: usize,
    trials: usize,
    seed: u64,
    generator: Generator,
) -> Result<ProbeSummary> {
    if trials == 0 {
        return Err(Error::PreconditionViolated("trials must be at least 1".into()));
    }
    if y == 0 || d == 0 {
        return Err(Error::PreconditionViolated("y and d must be positive".into()));
    }
    let mut summary = ProbeSummary {
        label: "evidence".into(),
        d,
        y,
        trials,
        seed,
        generator,
        terracini: 0,
        found: 0,
        trials_by_generator: BTreeMap::new(),
        counterexamples: Vec::new(),
    };
    for index in 0..trials {
        let g = generator.for_trial(index);
        *summary.trials_by_generator.entry(g.to_string()).or_default() += 1;
        let mut rng = trial_rng(seed, index);
        let points = configuration(field, y, g, &mut rng);
        let verdict = minimality(field, &points, d, true)?;
        if verdict.terracini {
            summary.terracini += 1;
        }
        if verdict.minimal == Some(true) {
            summary.found += 1;
            summary.counterexamples.push((index, points.iter().map(|p| p.to_strings(field)).collect()));
        }
    }
    Ok(summary)
}
