use serde::{Deserialize, Serialize};

use super::{check_characteristic, derivative_row_unchecked, eval_row, partial_row, CurveForm, ProjPoint};
use crate::error::{Error, Result};
use crate::exactfield::matrix::dot;
use crate::exactfield::{ExactMatrix, Field};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Simple,
    Curvilinear,
    Double,
}

/// A connected component: a reduced point, a degree-2 jet, or a double point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SchemeComponent<E> {
    Simple(ProjPoint<E>),
    /// `direction` is a second projective point distinct from `point`; only
    /// its class modulo `point` matters.
    Curvilinear { point: ProjPoint<E>, direction: ProjPoint<E> },
    Double(ProjPoint<E>),
}

impl<E: Clone + PartialEq> SchemeComponent<E> {
    pub fn curvilinear(point: ProjPoint<E>, direction: ProjPoint<E>) -> Result<Self> {
        if point.ambient_dim() != direction.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: point.coords().len(),
                got: direction.coords().len(),
            });
        }
        if point == direction {
            return Err(Error::DegenerateDirection);
        }
        Ok(SchemeComponent::Curvilinear { point, direction })
    }

    pub fn point(&self) -> &ProjPoint<E> {
        match self {
            SchemeComponent::Simple(p) | SchemeComponent::Double(p) => p,
            SchemeComponent::Curvilinear { point, .. } => point,
        }
    }

    pub fn kind(&self) -> ComponentKind {
        match self {
            SchemeComponent::Simple(_) => ComponentKind::Simple,
            SchemeComponent::Curvilinear { .. } => ComponentKind::Curvilinear,
            SchemeComponent::Double(_) => ComponentKind::Double,
        }
    }

    /// 1, 2 and `n + 1` respectively.
    pub fn degree(&self) -> usize {
        match self {
            SchemeComponent::Simple(_) => 1,
            SchemeComponent::Curvilinear { .. } => 2,
            SchemeComponent::Double(p) => p.ambient_dim() + 1,
        }
    }

    /// Linear conditions imposed on degree-`d` forms, one row per unit of
    /// length. For a double point the value row is implied by the partials
    /// (Euler), so the rows are the `n + 1` partial derivatives; in degree 0
    /// only the value survives and the remaining rows are zero.
    pub fn rows<F: Field<Element = E>>(&self, field: &F, d: usize) -> Result<Vec<Vec<E>>> {
        if d > 0 && self.kind() != ComponentKind::Simple {
            check_characteristic(field, d)?;
        }
        let p = self.point();
        Ok(match self {
            SchemeComponent::Simple(_) => vec![eval_row(field, p, d)],
            SchemeComponent::Curvilinear { direction, .. } => vec![
                eval_row(field, p, d),
                derivative_row_unchecked(field, p.coords(), direction.coords(), d),
            ],
            SchemeComponent::Double(_) if d == 0 => {
                let mut rows = vec![eval_row(field, p, 0)];
                rows.extend((0..p.ambient_dim()).map(|_| vec![field.zero()]));
                rows
            }
            SchemeComponent::Double(_) => (0..=p.ambient_dim())
                .map(|k| partial_row(field, p.coords(), k, d))
                .collect(),
        })
    }

    /// Componentwise containment at the same support point.
    pub fn is_subscheme_of<F: Field<Element = E>>(&self, field: &F, other: &Self) -> bool {
        if self.point() != other.point() {
            return false;
        }
        match (self, other) {
            (_, SchemeComponent::Double(_)) => true,
            (SchemeComponent::Simple(_), _) => true,
            (
                SchemeComponent::Curvilinear { point, direction: v },
                SchemeComponent::Curvilinear { direction: w, .. },
            ) => super::same_direction(field, point, v, w),
            _ => false,
        }
    }
}

/// A union of components with pairwise distinct supports in `P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroDimScheme<E> {
    n: usize,
    components: Vec<SchemeComponent<E>>,
}

impl<E: Clone + PartialEq> ZeroDimScheme<E> {
    pub fn new(n: usize, components: Vec<SchemeComponent<E>>) -> Result<Self> {
        for c in &components {
            if c.point().ambient_dim() != n {
                return Err(Error::DimensionMismatch { expected: n + 1, got: c.point().coords().len() });
            }
        }
        for i in 0..components.len() {
            for j in 0..i {
                if components[i].point() == components[j].point() {
                    return Err(Error::DuplicatePoints(j, i));
                }
            }
        }
        Ok(ZeroDimScheme { n, components })
    }

    pub fn empty(n: usize) -> Self {
        ZeroDimScheme { n, components: Vec::new() }
    }

    /// Reduced scheme on distinct points.
    pub fn simple(n: usize, points: &[ProjPoint<E>]) -> Result<Self> {
        Self::new(n, points.iter().cloned().map(SchemeComponent::Simple).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[SchemeComponent<E>] {
        &self.components
    }

    pub fn into_components(self) -> Vec<SchemeComponent<E>> {
        self.components
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(SchemeComponent::degree).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn support(&self) -> Vec<ProjPoint<E>> {
        self.components.iter().map(|c| c.point().clone()).collect()
    }

    /// Same scheme with component `i` replaced (or removed when `None`).
    pub fn with_component(&self, i: usize, replacement: Option<SchemeComponent<E>>) -> Self {
        let mut components = self.components.clone();
        match replacement {
            Some(c) => components[i] = c,
            None => {
                components.remove(i);
            }
        }
        ZeroDimScheme { n: self.n, components }
    }

    /// Componentwise `self ⊆ other`.
    pub fn is_subscheme_of<F: Field<Element = E>>(&self, field: &F, other: &Self) -> bool {
        self.components.iter().all(|c| {
            other
                .components
                .iter()
                .any(|o| o.point() == c.point() && c.is_subscheme_of(field, o))
        })
    }
}

/// The scheme `2S`.
pub fn double_scheme<E: Clone + PartialEq>(n: usize, points: &[ProjPoint<E>]) -> Result<ZeroDimScheme<E>> {
    ZeroDimScheme::new(n, points.iter().cloned().map(SchemeComponent::Double).collect())
}

/// A tangent direction at `p` to the hypersurface with gradient `grad`:
/// a kernel vector of the gradient row not proportional to `p`.
pub fn tangent_direction<F: Field>(
    field: &F,
    p: &ProjPoint<F::Element>,
    grad: &[F::Element],
) -> Result<ProjPoint<F::Element>> {
    let m = ExactMatrix::from_rows(field, grad.len(), [grad.to_vec()]);
    for v in m.kernel() {
        let v = ProjPoint::new(field, v)?;
        if &v != p {
            return Ok(v);
        }
    }
    Err(Error::DegenerateDirection)
}

enum Position<E> {
    Off,
    On { grad: Vec<E> },
}

fn locate<F: Field>(
    field: &F,
    c: &CurveForm<F::Element>,
    p: &ProjPoint<F::Element>,
    index: usize,
) -> Result<Position<F::Element>> {
    if !c.contains_point(field, p) {
        return Ok(Position::Off);
    }
    let grad = c.gradient(field, p);
    if grad.iter().all(|g| field.is_zero(g)) {
        return Err(Error::SingularAtSupport(index));
    }
    Ok(Position::On { grad })
}

fn check_curve<F: Field>(z: &ZeroDimScheme<F::Element>, c: &CurveForm<F::Element>) -> Result<()> {
    if c.ambient_dim() != z.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: z.ambient_dim() + 1, got: c.ambient_dim() + 1 });
    }
    Ok(())
}

/// `Z ∩ C`, computed componentwise at smooth points of `C`.
pub fn restrict_to_curve<F: Field>(
    field: &F,
    z: &ZeroDimScheme<F::Element>,
    c: &CurveForm<F::Element>,
) -> Result<ZeroDimScheme<F::Element>> {
    check_curve::<F>(z, c)?;
    let mut out = Vec::new();
    for (i, comp) in z.components().iter().enumerate() {
        let Position::On { grad } = locate(field, c, comp.point(), i)? else {
            continue;
        };
        let p = comp.point().clone();
        out.push(match comp {
            SchemeComponent::Simple(_) => SchemeComponent::Simple(p),
            SchemeComponent::Curvilinear { direction, .. } => {
                if field.is_zero(&dot(field, &grad, direction.coords())) {
                    comp.clone()
                } else {
                    SchemeComponent::Simple(p)
                }
            }
            SchemeComponent::Double(_) => {
                if z.ambient_dim() != 2 {
                    return Err(Error::UnsupportedAmbient(z.ambient_dim()));
                }
                let v = tangent_direction(field, &p, &grad)?;
                SchemeComponent::Curvilinear { point: p, direction: v }
            }
        });
    }
    Ok(ZeroDimScheme { n: z.ambient_dim(), components: out })
}

/// `Res_C(Z)`, the complement of `Z ∩ C` in degree.
pub fn residual_scheme<F: Field>(
    field: &F,
    z: &ZeroDimScheme<F::Element>,
    c: &CurveForm<F::Element>,
) -> Result<ZeroDimScheme<F::Element>> {
    check_curve::<F>(z, c)?;
    let mut out = Vec::new();
    for (i, comp) in z.components().iter().enumerate() {
        let Position::On { grad } = locate(field, c, comp.point(), i)? else {
            out.push(comp.clone());
            continue;
        };
        let p = comp.point().clone();
        match comp {
            SchemeComponent::Simple(_) => {}
            SchemeComponent::Curvilinear { direction, .. } => {
                if !field.is_zero(&dot(field, &grad, direction.coords())) {
                    out.push(SchemeComponent::Simple(p));
                }
            }
            SchemeComponent::Double(_) => {
                if z.ambient_dim() != 2 {
                    return Err(Error::UnsupportedAmbient(z.ambient_dim()));
                }
                out.push(SchemeComponent::Simple(p));
            }
        }
    }
    Ok(ZeroDimScheme { n: z.ambient_dim(), components: out })
}
