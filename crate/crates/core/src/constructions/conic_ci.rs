//! Complete intersections of the smooth conic with a degree-`b` curve over
//! a prime field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactfield::{Field, PrimeField};
use crate::geometry::{monomial_basis, CurveForm, ProjPoint};

/// Moduli up to this size are scanned point by point.
const SCAN_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicCi {
    pub points: Vec<ProjPoint<u64>>,
    pub conic: CurveForm<u64>,
    pub curve: CurveForm<u64>,
}

/// `x0 x2 - x1²`.
pub fn conic_form<F: Field>(field: &F) -> CurveForm<F::Element> {
    CurveForm::new(field, 2, 2, [0, 0, 1, -1, 0, 0].map(|v| field.from_i64(v)).to_vec()).expect("nonzero conic")
}

/// `S = D ∩ B` for `D` the conic `x0 x2 = x1²` and a seeded degree-`b`
/// curve `B`.
///
/// `B` is the lift of `Π (t - t_k)` to the plane plus `D` times a random
/// form, with the `2b` parameters `t_k` drawn from `[-4b, 4b]`. The
/// intersection is then read back from `B(1, t, t²)` by root finding on the
/// parameter line; when the draw repeats a parameter there are fewer than
/// `2b` distinct points and the seed is rejected.
pub fn conic_ci(field: &PrimeField, b: usize, seed: u64) -> Result<ConicCi> {
    if b == 0 {
        return Err(Error::PreconditionViolated("b must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let window = 4 * b as i64;
    let roots: Vec<u64> = (0..2 * b).map(|_| field.from_i64(rng.gen_range(-window..=window))).collect();
    let mut binary = vec![1u64];
    for r in &roots {
        binary = poly_mul(field, &binary, &[field.neg(r), 1]);
    }

    let basis = monomial_basis(2, b);
    let mut coeffs = vec![0u64; basis.len()];
    for (k, c) in binary.iter().enumerate() {
        // t^k from x0^(b - β - γ) x1^β x2^γ with γ = k/2, β = k mod 2
        let (beta, gamma) = ((k % 2) as u32, (k / 2) as u32);
        let alpha = b as u32 - beta - gamma;
        let idx = basis.iter().position(|m| m == &[alpha, beta, gamma]).expect("monomial in basis");
        coeffs[idx] = *c;
    }
    let conic = conic_form(field);
    let mut curve = CurveForm::new(field, 2, b, coeffs)?;
    if b >= 2 {
        let len = monomial_basis(2, b - 2).len();
        let r: Vec<u64> = (0..len).map(|_| field.random(&mut rng)).collect();
        if r.iter().any(|c| *c != 0) {
            let extra = conic.product(field, &CurveForm::new(field, 2, b - 2, r)?)?;
            let sum: Vec<u64> = curve.coefficients().iter().zip(extra.coefficients()).map(|(x, y)| field.add(x, y)).collect();
            curve = CurveForm::new(field, 2, b, sum)?;
        }
    }

    let params = intersection_parameters(field, &curve)?;
    if params.len() < 2 * b {
        return Err(Error::InsufficientRationalPoints { found: params.len(), needed: 2 * b });
    }
    let points = params
        .iter()
        .map(|t| match t {
            Some(t) => ProjPoint::new(field, vec![1, *t, field.mul(t, t)]),
            None => ProjPoint::new(field, vec![0, 0, 1]),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConicCi { points, conic, curve })
}

/// Distinct rational parameters of `B ∩ D`; `None` stands for `(0:0:1)`.
fn intersection_parameters(field: &PrimeField, curve: &CurveForm<u64>) -> Result<Vec<Option<u64>>> {
    let b = curve.degree();
    // restriction to (1 : t : t²)
    let mut g = vec![0u64; 2 * b + 1];
    for (m, c) in monomial_basis(2, b).iter().zip(curve.coefficients()) {
        let k = (m[1] + 2 * m[2]) as usize;
        g[k] = field.add(&g[k], c);
    }
    trim(&mut g);
    if g.is_empty() {
        return Err(Error::PreconditionViolated("curve contains the conic".into()));
    }
    let mut params: Vec<Option<u64>> = distinct_roots(field, &g).into_iter().map(Some).collect();
    if g.len() - 1 < 2 * b {
        params.push(None);
    }
    Ok(params)
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

fn poly_rem(f: &PrimeField, a: &[u64], m: &[u64]) -> Vec<u64> {
    poly_divmod(f, a, m).1
}

fn monic(f: &PrimeField, a: Vec<u64>) -> Vec<u64> {
    match a.last() {
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero lead");
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
        None => a,
    }
}

fn poly_gcd(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

fn poly_powmod(f: &PrimeField, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = poly_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(f, &poly_mul(f, &acc, &base), m);
        }
        base = poly_rem(f, &poly_mul(f, &base, &base), m);
        e >>= 1;
    }
    acc
}

fn eval(f: &PrimeField, a: &[u64], t: u64) -> u64 {
    a.iter().rev().fold(0, |acc, c| f.add(&f.mul(&acc, &t), c))
}

/// Distinct roots in `F_p`, ascending.
fn distinct_roots(f: &PrimeField, g: &[u64]) -> Vec<u64> {
    let p = f.modulus();
    let mut roots = if p <= SCAN_LIMIT {
        (0..p).filter(|&t| eval(f, g, t) == 0).collect()
    } else {
        // gcd with t^p - t keeps one copy of each linear factor
        let g = monic(f, g.to_vec());
        let mut tp = poly_powmod(f, &[0, 1], p, &g);
        tp.resize(tp.len().max(2), 0);
        tp[1] = f.sub(&tp[1], &1);
        let split = poly_gcd(f, &g, &tp);
        let mut out = Vec::new();
        split_linear(f, split, 0, &mut out);
        out
    };
    roots.sort_unstable();
    roots
}

/// Equal-degree splitting of a squarefree product of linear factors.
fn split_linear(f: &PrimeField, g: Vec<u64>, mut shift: u64, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(f.neg(&g[0])),
        _ => loop {
            shift += 1;
            let mut h = poly_powmod(f, &[shift, 1], (f.modulus() - 1) / 2, &g);
            if h.is_empty() {
                h.push(0);
            }
            h[0] = f.sub(&h[0], &1);
            let d = poly_gcd(f, &g, &h);
            if d.len() > 1 && d.len() < g.len() {
                let (q, _) = poly_divmod(f, &g, &d);
                split_linear(f, d, shift, out);
                split_linear(f, q, shift, out);
                return;
            }
        },
    }
}

fn poly_divmod(f: &PrimeField, a: &[u64], m: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < m.len() {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(m.last().unwrap()).unwrap();
    let mut q = vec![0u64; r.len() - m.len() + 1];
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let factor = f.mul(r.last().unwrap(), &lead_inv);
        q[shift] = factor;
        for (i, c) in m.iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&factor, c));
        }
        trim(&mut r);
    }
    (q, r)
}
