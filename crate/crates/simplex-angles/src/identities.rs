//! Randomized consistency suite for the d-sine: every identity the sine
//! satisfies by construction, checked on seeded draws with pinned
//! tolerances. The suite backs the `check-identities` subcommand.

use nalgebra::DVector;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::GeometryError;
use crate::geometry::{Point, Simplex};
use crate::sine::{sin_d_at_vertex, sin_d_of_vectors, sin_d_via_product, UnitVectorTuple};

/// Minimum normalized quality `measure * d! / h^d` accepted by
/// [`random_simplex`]. Uniform draws can be arbitrarily flat; below this
/// floor the rounding error of any measure-based quantity can exceed the
/// suite tolerances, so such draws say nothing about the identities
/// themselves. Degenerate behaviour is exercised separately through
/// constructed families.
pub const QUALITY_FLOOR: f64 = 3e-3;

/// Absolute tolerance for the triangle reduction identity.
pub const CLASSICAL_TOLERANCE: f64 = 1e-12;
/// Relative tolerance for the two evaluation routes of the vertex sine.
pub const PRODUCT_TOLERANCE: f64 = 1e-9;
/// Allowed excess above 1 for raw (unclamped) sine values.
pub const RANGE_TOLERANCE: f64 = 1e-12;
/// Absolute tolerance for invariance under positive edge rescaling.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// Result of one identity over all its trials.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub max_violation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityOutcome {
    fn new(name: &'static str, max_violation: f64, tolerance: f64) -> Self {
        Self {
            name,
            max_violation,
            tolerance,
            pass: max_violation <= tolerance,
        }
    }
}

/// Classical sine of the angle between two edge vectors, in Gram form:
/// `sqrt(|u|^2 |w|^2 - (u.w)^2) / (|u| |w|)`.
pub fn classical_triangle_sine(u: &DVector<f64>, w: &DVector<f64>) -> f64 {
    let uu = u.dot(u);
    let ww = w.dot(w);
    let uw = u.dot(w);
    (uu * ww - uw * uw).max(0.0).sqrt() / (uu.sqrt() * ww.sqrt())
}

/// Classical sine of the angle of a triangle at vertex `i`, computed from
/// the two edge vectors leaving `i`. Independent reference route for the
/// 2-dimensional reduction of the d-sine.
pub fn classical_vertex_sine(s: &Simplex, i: usize) -> Result<f64, GeometryError> {
    if s.dim() != 2 {
        return Err(GeometryError::UnsupportedDimension {
            required: "2".to_string(),
            actual: s.dim(),
        });
    }
    if i > 2 {
        return Err(GeometryError::IndexOutOfRange { index: i, len: 3 });
    }
    let (j, k) = match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let u = s.vertices()[j].coords() - s.vertices()[i].coords();
    let w = s.vertices()[k].coords() - s.vertices()[i].coords();
    Ok(classical_triangle_sine(&u, &w))
}

/// Uniform draw of a d-simplex from the unit cube, redrawn until the
/// normalized quality clears [`QUALITY_FLOOR`].
pub fn random_simplex(rng: &mut ChaCha8Rng, dim: usize) -> Result<Simplex, GeometryError> {
    if dim < 1 {
        return Err(GeometryError::UnsupportedDimension {
            required: ">= 1".to_string(),
            actual: dim,
        });
    }
    for _ in 0..10_000 {
        let vertices = (0..=dim)
            .map(|_| Point::new((0..dim).map(|_| rng.random::<f64>()).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        let s = Simplex::new(vertices)?;
        let factorial: f64 = (1..=dim).map(|k| k as f64).product();
        let quality = s.measure() * factorial / s.diameter().powi(dim as i32);
        if quality >= QUALITY_FLOOR {
            return Ok(s);
        }
    }
    Err(GeometryError::InvalidParameter {
        name: "random draw",
        reason: format!("no draw reached quality {QUALITY_FLOOR} in 10000 attempts"),
    })
}

/// Random unit-vector tuple: d independent Gaussian directions, normalized.
pub fn random_unit_tuple(rng: &mut ChaCha8Rng, dim: usize) -> Result<UnitVectorTuple, GeometryError> {
    let directions = (0..dim)
        .map(|_| gaussian_direction(rng, dim))
        .collect::<Vec<_>>();
    UnitVectorTuple::from_directions(directions)
}

fn gaussian_direction(rng: &mut ChaCha8Rng, dim: usize) -> DVector<f64> {
    loop {
        let v = DVector::from_iterator(dim, (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)));
        if v.norm() > 1e-6 {
            return v;
        }
    }
}

/// Tuple whose last vector is a random combination of the others: linearly
/// dependent by construction (up to rounding).
fn dependent_tuple(rng: &mut ChaCha8Rng, dim: usize) -> Result<UnitVectorTuple, GeometryError> {
    let mut directions: Vec<DVector<f64>> = (0..dim - 1)
        .map(|_| gaussian_direction(rng, dim))
        .collect();
    let last = loop {
        let mut combo = DVector::zeros(dim);
        for v in &directions {
            let c: f64 = rng.sample(StandardNormal);
            combo += v.scale(c);
        }
        if combo.norm() > 1e-6 {
            break combo;
        }
    };
    directions.push(last);
    UnitVectorTuple::from_directions(directions)
}

/// Running range of raw (unclamped) sine values seen across the suite.
#[derive(Clone, Copy, Debug)]
struct RawRange {
    min: f64,
    max: f64,
}

impl RawRange {
    fn new() -> Self {
        Self {
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
        }
    }

    fn record(&mut self, raw: f64) {
        self.min = self.min.min(raw);
        self.max = self.max.max(raw);
    }

    /// How far the observed range escapes `[0, 1]` from either side.
    fn violation(&self) -> f64 {
        if self.min > self.max {
            return 0.0;
        }
        (-self.min).max(self.max - 1.0).max(0.0)
    }
}

/// Runs the five-identity suite at the given dimension.
///
/// The triangle reduction always runs on triangles (it has no
/// d-dimensional analogue); the remaining identities run at `dim`. Every
/// raw sine computed anywhere in the suite feeds the range bound.
pub fn run_identity_suite(
    dim: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<IdentityOutcome>, GeometryError> {
    if !(2..=6).contains(&dim) {
        return Err(GeometryError::UnsupportedDimension {
            required: "2..=6".to_string(),
            actual: dim,
        });
    }
    if trials == 0 {
        return Err(GeometryError::InvalidParameter {
            name: "trials",
            reason: "must be at least 1".to_string(),
        });
    }

    let mut range = RawRange::new();

    // Triangle reduction: the d-sine at a triangle vertex is the classical
    // sine of that vertex angle.
    let mut classical_violation: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let s = random_simplex(&mut rng, 2)?;
        for i in 0..3 {
            let sine = sin_d_at_vertex(&s, i)?;
            range.record(sine.raw);
            classical_violation =
                classical_violation.max((sine.value - classical_vertex_sine(&s, i)?).abs());
        }
    }

    // Two evaluation routes for the vertex sine must agree for every
    // (vertex, pivot) pair.
    let mut product_violation: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    for _ in 0..trials {
        let s = random_simplex(&mut rng, dim)?;
        for i in 0..=dim {
            let direct = sin_d_at_vertex(&s, i)?;
            range.record(direct.raw);
            for pivot in 0..=dim {
                if pivot == i {
                    continue;
                }
                let via = sin_d_via_product(&s, i, pivot)?;
                range.record(via.raw);
                let scale = direct.value.max(via.value).max(f64::MIN_POSITIVE);
                product_violation =
                    product_violation.max((direct.value - via.value).abs() / scale);
            }
        }
    }

    // Constructed dependent tuples must come back exactly zero and flagged.
    let mut dependence_violation: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
    for _ in 0..trials {
        let tuple = dependent_tuple(&mut rng, dim)?;
        let sine = sin_d_of_vectors(&tuple)?;
        range.record(sine.raw);
        let v = if sine.rank_deficient {
            sine.value.abs()
        } else {
            // An unflagged dependent tuple is a categorical failure, scored
            // far above any tolerance.
            1.0
        };
        dependence_violation = dependence_violation.max(v);
    }

    // Rescaling the edges at a vertex by positive constants leaves the
    // vertex sine unchanged.
    let mut normalization_violation: f64 = 0.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
    for _ in 0..trials {
        let s = random_simplex(&mut rng, dim)?;
        let base = rng.random_range(0..=dim);
        let origin = s.vertices()[base].coords().clone();
        let vertices = s
            .vertices()
            .iter()
            .enumerate()
            .map(|(j, p)| {
                if j == base {
                    return Ok(p.clone());
                }
                let c = (rng.random::<f64>() * (4.0f64.ln()) - 2.0f64.ln()).exp();
                let moved = &origin + (p.coords() - &origin).scale(c);
                Point::new(moved.iter().copied().collect())
            })
            .collect::<Result<Vec<_>, GeometryError>>()?;
        let rescaled = Simplex::new(vertices)?;
        let a = sin_d_at_vertex(&s, base)?;
        let b = sin_d_at_vertex(&rescaled, base)?;
        range.record(a.raw);
        range.record(b.raw);
        normalization_violation = normalization_violation.max((a.value - b.value).abs());
    }

    Ok(vec![
        IdentityOutcome::new("classical-reduction", classical_violation, CLASSICAL_TOLERANCE),
        IdentityOutcome::new("product-formula", product_violation, PRODUCT_TOLERANCE),
        IdentityOutcome::new("range-bound", range.violation(), RANGE_TOLERANCE),
        IdentityOutcome::new("dependence-zero", dependence_violation, 0.0),
        IdentityOutcome::new(
            "normalization-invariance",
            normalization_violation,
            NORMALIZATION_TOLERANCE,
        ),
    ])
}
