//! JSON file formats for point sets, schemes and curves. Scalars are
//! decimal strings, rationals as `num/den`.
//!
//! ```json
//! {"field":{"kind":"rational"},"n":2,"points":[["3","5","1"],["0","1","0"]]}
//! {"field":…,"n":2,"components":[{"kind":"double","point":["3","5","1"]},
//!   {"kind":"curvilinear","point":["1","0","1"],"direction":["0","1","0"]}]}
//! {"degree":2,"coefficients":["0","0","1","-1","0","0"]}
//! ```
//!
//! Curve coefficients follow [`crate::geometry::monomial_basis`]: exponent
//! vectors in descending lexicographic order, `x0^d` first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec};
use crate::geometry::{ComponentKind, CurveForm, ProjPoint, SchemeComponent, ZeroDimScheme};

fn plane() -> usize {
    2
}

fn is_plane(n: &usize) -> bool {
    *n == 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub n: usize,
    pub points: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub kind: ComponentKind,
    pub point: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub n: usize,
    pub components: Vec<ComponentRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    #[serde(default = "plane", skip_serializing_if = "is_plane")]
    pub n: usize,
    pub degree: usize,
    pub coefficients: Vec<String>,
}

fn parse_point<F: Field>(field: &F, n: usize, coords: &[String]) -> Result<ProjPoint<F::Element>> {
    if coords.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: coords.len() });
    }
    ProjPoint::parse(field, coords)
}

impl PointsFile {
    pub fn new<F: Field>(field: &F, n: usize, points: &[ProjPoint<F::Element>]) -> Self {
        PointsFile { field: Some(field.spec()), n, points: points.iter().map(|p| p.to_strings(field)).collect() }
    }

    /// Rejects repeated points.
    pub fn to_points<F: Field>(&self, field: &F) -> Result<Vec<ProjPoint<F::Element>>> {
        let points = self.points.iter().map(|c| parse_point(field, self.n, c)).collect::<Result<Vec<_>>>()?;
        ZeroDimScheme::simple(self.n, &points)?;
        Ok(points)
    }
}

impl SchemeFile {
    pub fn new<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>) -> Self {
        let components = z
            .components()
            .iter()
            .map(|c| ComponentRecord {
                kind: c.kind(),
                point: c.point().to_strings(field),
                direction: match c {
                    SchemeComponent::Curvilinear { direction, .. } => Some(direction.to_strings(field)),
                    _ => None,
                },
            })
            .collect();
        SchemeFile { field: Some(field.spec()), n: z.ambient_dim(), components }
    }

    pub fn to_scheme<F: Field>(&self, field: &F) -> Result<ZeroDimScheme<F::Element>> {
        let comps = self
            .components
            .iter()
            .map(|rec| {
                let p = parse_point(field, self.n, &rec.point)?;
                match (rec.kind, &rec.direction) {
                    (ComponentKind::Simple, None) => Ok(SchemeComponent::Simple(p)),
                    (ComponentKind::Double, None) => Ok(SchemeComponent::Double(p)),
                    (ComponentKind::Curvilinear, Some(v)) => {
                        SchemeComponent::curvilinear(p, parse_point(field, self.n, v)?)
                    }
                    (ComponentKind::Curvilinear, None) => {
                        Err(Error::Malformed("curvilinear component needs a direction".into()))
                    }
                    (_, Some(_)) => Err(Error::Malformed("only curvilinear components carry a direction".into())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ZeroDimScheme::new(self.n, comps)
    }
}

impl CurveFile {
    pub fn new<F: Field>(field: &F, c: &CurveForm<F::Element>) -> Self {
        CurveFile { n: c.ambient_dim(), degree: c.degree(), coefficients: c.to_strings(field) }
    }

    pub fn to_curve<F: Field>(&self, field: &F) -> Result<CurveForm<F::Element>> {
        let coeffs = self.coefficients.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?;
        CurveForm::new(field, self.n, self.degree, coeffs)
    }
}

/// Parses JSON, mapping syntax errors to [`Error::Malformed`].
pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}
