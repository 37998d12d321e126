//! Generalized sine of the angle at a simplex vertex.
//!
//! For a d-simplex `S = conv{A_0..A_d}` the d-sine of the angle at `A_i` is
//!
//! ```text
//! sin_d(A_i) = d^(d-1) * meas_d(S)^(d-1) / ( (d-1)! * prod_{j != i} meas_{d-1}(F_j) )
//! ```
//!
//! which reduces to the ordinary sine for triangles and vanishes exactly on
//! degenerate configurations. It is also a function of the d unit edge
//! directions leaving `A_i` only, which gives the second entry point
//! [`sin_d_of_vectors`]; the third, [`sin_d_via_product`], evaluates the
//! factorization of `sin_d` into a (d-1)-sine within one facet times sines
//! of dihedral angles, and exists so the two routes can be checked against
//! each other.

use nalgebra::{DMatrix, DVector};

use crate::error::GeometryError;
use crate::geometry::{Point, Simplex};

/// Rank threshold: a tuple whose vector matrix has smallest singular value
/// at or below this is treated as linearly dependent.
pub const RANK_THRESHOLD: f64 = 1e-12;

/// Relative clamping excess above which a sine value is considered
/// numerically suspect (see [`SineValue::clamping_exceeded`]).
pub const CLAMP_FLAG_RELATIVE: f64 = 1e-6;

/// Dimension from which the quotient is evaluated in log space to avoid
/// overflow/underflow in the measure products.
const LOG_SPACE_DIM: usize = 5;

/// Result of a d-sine evaluation.
///
/// `value` is clamped into `[0, 1]`; `raw` keeps the unclamped quotient so
/// that callers can detect when clamping was more than harmless rounding.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SineValue {
    /// Sine in `[0, 1]`.
    pub value: f64,
    /// True when the input was (numerically) linearly dependent and the
    /// sine is zero by continuity.
    pub rank_deficient: bool,
    /// Unclamped quotient, for diagnostics.
    pub raw: f64,
}

impl SineValue {
    fn zero_deficient() -> Self {
        Self {
            value: 0.0,
            rank_deficient: true,
            raw: 0.0,
        }
    }

    fn from_raw(raw: f64) -> Self {
        Self {
            value: raw.clamp(0.0, 1.0),
            rank_deficient: false,
            raw,
        }
    }

    /// True when clamping changed the value by more than
    /// [`CLAMP_FLAG_RELATIVE`] relative to the clamped result.
    pub fn clamping_exceeded(&self) -> bool {
        (self.raw - self.value).abs() > CLAMP_FLAG_RELATIVE * self.value.max(1.0)
    }
}

/// d unit vectors in R^d, the edge directions entering [`sin_d_of_vectors`].
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVectorTuple {
    vectors: Vec<DVector<f64>>,
}

impl UnitVectorTuple {
    /// Accepts exactly `d` vectors of length `d`, each of unit norm within
    /// 1e-12.
    pub fn new(vectors: Vec<DVector<f64>>) -> Result<Self, GeometryError> {
        if vectors.is_empty() {
            return Err(GeometryError::InvalidUnitTuple {
                reason: "empty tuple".to_string(),
            });
        }
        let d = vectors.len();
        for (k, v) in vectors.iter().enumerate() {
            if v.len() != d {
                return Err(GeometryError::InvalidUnitTuple {
                    reason: format!("vector {k} has length {}, expected {d}", v.len()),
                });
            }
            if !v.iter().all(|c| c.is_finite()) {
                return Err(GeometryError::InvalidUnitTuple {
                    reason: format!("vector {k} has a non-finite component"),
                });
            }
            if (v.norm() - 1.0).abs() > 1e-12 {
                return Err(GeometryError::InvalidUnitTuple {
                    reason: format!("vector {k} has norm {} != 1", v.norm()),
                });
            }
        }
        Ok(Self { vectors })
    }

    /// Normalizes arbitrary nonzero directions into a tuple.
    pub fn from_directions(directions: Vec<DVector<f64>>) -> Result<Self, GeometryError> {
        let normalized = directions
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                let n = v.norm();
                if n == 0.0 || !n.is_finite() {
                    Err(GeometryError::InvalidUnitTuple {
                        reason: format!("direction {k} has norm {n}"),
                    })
                } else {
                    Ok(v / n)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(normalized)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[DVector<f64>] {
        &self.vectors
    }

    /// `d x d` matrix with the tuple as columns.
    pub fn matrix(&self) -> DMatrix<f64> {
        let d = self.dim();
        let mut m = DMatrix::zeros(d, d);
        for (j, v) in self.vectors.iter().enumerate() {
            m.set_column(j, v);
        }
        m
    }

    /// Smallest singular value of the vector matrix.
    pub fn smallest_singular_value(&self) -> f64 {
        let sv = self.matrix().singular_values();
        sv.iter().fold(f64::INFINITY, |a, &b| a.min(b))
    }

    /// Numerical linear dependence at the shared [`RANK_THRESHOLD`]. The
    /// Jamet angle uses the same test so that `theta = pi/2` coincides
    /// exactly with `rank_deficient = true`.
    pub fn is_rank_deficient(&self) -> bool {
        self.smallest_singular_value() <= RANK_THRESHOLD
    }
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// Unclamped quotient of the defining formula. Assumes the caller already
/// handled degeneracy; facet measures of a non-degenerate simplex are
/// strictly positive.
fn sine_quotient(s: &Simplex, i: usize) -> f64 {
    let d = s.dim();
    let meas = s.measure();
    let mut facet_measures = Vec::with_capacity(d);
    for j in 0..=d {
        if j == i {
            continue;
        }
        facet_measures.push(s.facet(j).expect("index checked").measure());
    }
    if d >= LOG_SPACE_DIM {
        let mut ln = (d as f64 - 1.0) * ((d as f64).ln() + meas.ln()) - ln_factorial(d - 1);
        for f in &facet_measures {
            ln -= f.ln();
        }
        ln.exp()
    } else {
        let num = (d as f64).powi(d as i32 - 1) * meas.powi(d as i32 - 1);
        let den: f64 = (1..d).map(|k| k as f64).product::<f64>() * facet_measures.iter().product::<f64>();
        num / den
    }
}

/// d-sine of the angle of `s` at vertex `i`. Returns zero with
/// `rank_deficient = true` when the simplex measure is below its degeneracy
/// threshold. Accepts simplices embedded in higher ambient dimension.
pub fn sin_d_at_vertex(s: &Simplex, i: usize) -> Result<SineValue, GeometryError> {
    let d = s.dim();
    if d < 2 {
        return Err(GeometryError::UnsupportedDimension {
            required: ">= 2".to_string(),
            actual: d,
        });
    }
    if i > d {
        return Err(GeometryError::IndexOutOfRange {
            index: i,
            len: d + 1,
        });
    }
    if s.is_degenerate() {
        return Ok(SineValue::zero_deficient());
    }
    Ok(SineValue::from_raw(sine_quotient(s, i)))
}

/// d-sine as a function of d unit vectors: zero on (numerically) dependent
/// tuples, otherwise the vertex sine of the simplex `conv{0, t_1, .., t_d}`
/// at the origin.
pub fn sin_d_of_vectors(tuple: &UnitVectorTuple) -> Result<SineValue, GeometryError> {
    if tuple.is_rank_deficient() {
        return Ok(SineValue::zero_deficient());
    }
    let d = tuple.dim();
    if d == 1 {
        // One-dimensional convention: sin_1 = 1.
        return Ok(SineValue::from_raw(1.0));
    }
    let mut vertices = Vec::with_capacity(d + 1);
    vertices.push(Point::new(vec![0.0; d])?);
    for v in tuple.vectors() {
        vertices.push(Point::new(v.iter().copied().collect())?);
    }
    let s = Simplex::new(vertices)?;
    Ok(SineValue::from_raw(sine_quotient(&s, 0)))
}

/// Factorized evaluation of the vertex sine: the (d-1)-sine of the angle at
/// vertex `i` within the facet opposite `pivot`, times the sines of the
/// dihedral angles between that facet and every other facet not opposite
/// `i`. Equals [`sin_d_at_vertex`] up to rounding; kept as an independent
/// route for consistency checks.
pub fn sin_d_via_product(s: &Simplex, i: usize, pivot: usize) -> Result<SineValue, GeometryError> {
    let d = s.dim();
    if d < 2 {
        return Err(GeometryError::UnsupportedDimension {
            required: ">= 2".to_string(),
            actual: d,
        });
    }
    for index in [i, pivot] {
        if index > d {
            return Err(GeometryError::IndexOutOfRange {
                index,
                len: d + 1,
            });
        }
    }
    if i == pivot {
        return Err(GeometryError::UnsupportedDimension {
            required: "distinct vertex and pivot".to_string(),
            actual: i,
        });
    }
    if s.ambient_dim() != d {
        let frame = crate::geometry::affine_frame(s.vertices())?;
        if frame.rank < d {
            return Ok(SineValue::zero_deficient());
        }
        let projected = Simplex::new(frame.coords.clone())?;
        return sin_d_via_product(&projected, i, pivot);
    }
    if s.is_degenerate() {
        return Ok(SineValue::zero_deficient());
    }

    // Sine of the angle at A_i inside the facet opposite the pivot. The
    // facet keeps the parent's coordinates; the vertex index shifts down by
    // one when it comes after the pivot.
    let facet_sine = if d == 2 {
        1.0
    } else {
        let facet = s.facet(pivot)?;
        let i_local = if i < pivot { i } else { i - 1 };
        let inner = sin_d_at_vertex(&facet.simplex, i_local)?;
        if inner.rank_deficient {
            return Ok(SineValue::zero_deficient());
        }
        inner.value
    };

    let normals = s.outward_normals()?;
    let mut product = facet_sine;
    for j in 0..=d {
        if j == i || j == pivot {
            continue;
        }
        let cos = (-normals[j].dot(&normals[pivot])).clamp(-1.0, 1.0);
        product *= ((1.0 - cos) * (1.0 + cos)).max(0.0).sqrt();
    }
    Ok(SineValue::from_raw(product))
}

/// Largest vertex sine together with the first vertex index attaining it.
pub fn max_sine_over_vertices(s: &Simplex) -> Result<(f64, usize), GeometryError> {
    let mut best = f64::NEG_INFINITY;
    let mut best_index = 0;
    for i in 0..=s.dim() {
        let v = sin_d_at_vertex(s, i)?.value;
        if v > best {
            best = v;
            best_index = i;
        }
    }
    Ok((best, best_index))
}
