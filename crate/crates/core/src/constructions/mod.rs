//! Witness configurations: grid and conic complete intersections, conic
//! point sets, the gap-theorem arithmetic and seeded emptiness probes.

mod arithmetic;
mod conic_ci;
mod probe;
mod reports;

pub use arithmetic::{due2_table, f_of, g_of, Due2Report, Due2Row, Parity};
pub use conic_ci::{conic_ci, conic_form, ConicCi};
pub use probe::{emptiness_probe, Generator, ProbeSummary};
pub use reports::{
    ci_lemma_verify, example_due001_report, proposition_o1o1_conic, proposition_o1o1_instance,
    proposition_o1o1_report, CiLemmaReport, Due001Report, O1o1Instance, O1o1Report, O1o1Variant,
};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::geometry::{CurveForm, ProjPoint};

/// Spacing of the default `v` parameters of a grid.
pub const GRID_STRIDE: i64 = 2;

/// `S = A ∩ B` with `A = Π (x0 - u_i x2)` and `B = Π (x1 - v_j x2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCi<E> {
    pub points: Vec<ProjPoint<E>>,
    pub a: CurveForm<E>,
    pub b: CurveForm<E>,
}

/// `u_i = i`, `v_j = GRID_STRIDE * j`.
pub fn default_grid_params(a: usize, b: usize) -> (Vec<i64>, Vec<i64>) {
    ((0..a as i64).collect(), (0..b as i64).map(|j| GRID_STRIDE * j).collect())
}

fn check_params<F: Field>(field: &F, params: &[i64]) -> Result<Vec<F::Element>> {
    if params.iter().collect::<HashSet<_>>().len() != params.len() {
        return Err(Error::DuplicateParameters);
    }
    let reduced: Vec<_> = params.iter().map(|&u| field.from_i64(u)).collect();
    if reduced.iter().collect::<HashSet<_>>().len() != reduced.len() {
        return Err(Error::DegenerateParameters(format!(
            "parameters {params:?} collide in characteristic {}",
            field.characteristic()
        )));
    }
    Ok(reduced)
}

fn line_product<F: Field>(field: &F, coord: usize, params: &[F::Element]) -> Result<CurveForm<F::Element>> {
    let lines = params
        .iter()
        .map(|u| {
            let mut c = vec![field.zero(); 3];
            c[coord] = field.one();
            c[2] = field.neg(u);
            CurveForm::linear(field, c)
        })
        .collect::<Result<Vec<_>>>()?;
    CurveForm::product_of(field, &lines)
}

pub fn grid_complete_intersection<F: Field>(field: &F, u: &[i64], v: &[i64]) -> Result<GridCi<F::Element>> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::PreconditionViolated("grid needs at least one parameter on each side".into()));
    }
    let (ue, ve) = (check_params(field, u)?, check_params(field, v)?);
    let points = ue
        .iter()
        .flat_map(|x| ve.iter().map(move |y| (x, y)))
        .map(|(x, y)| ProjPoint::new(field, vec![x.clone(), y.clone(), field.one()]))
        .collect::<Result<Vec<_>>>()?;
    Ok(GridCi { points, a: line_product(field, 0, &ue)?, b: line_product(field, 1, &ve)? })
}

/// `(1 : t : t²)` on the smooth conic `x0 x2 = x1²`.
pub fn conic_points<F: Field>(field: &F, params: &[i64]) -> Result<Vec<ProjPoint<F::Element>>> {
    let ts = check_params(field, params)?;
    ts.iter()
        .map(|t| ProjPoint::new(field, vec![field.one(), t.clone(), field.mul(t, t)]))
        .collect()
}

/// `0, 1, …, count - 1`.
pub fn default_conic_params(count: usize) -> Vec<i64> {
    (0..count as i64).collect()
}
