//! Parameterized simplex families that degenerate in controlled ways, and
//! the study driver that tabulates every quality quantity along a shape
//! schedule.
//!
//! Each family maps a shape parameter `eps` to one simplex; a decreasing
//! schedule of `eps` values yields a degenerating (or, for `regular`, a
//! constant) sequence. The families cover the qualitatively different
//! degeneration modes:
//!
//! * `path` — orthogonal edge chain of lengths `(1, .., 1, eps)`; the
//!   minimum vertex sine collapses while every dihedral angle of every
//!   sub-simplex stays at or below a right angle.
//! * `needle` — regular simplex with the last vertex pulled to distance
//!   `eps` from the midpoint of the first edge; flattens completely.
//! * `cap` — apex at height `eps` over the centroid of a regular base;
//!   dihedral angles along the base approach pi.
//! * `sliver` — the classic three-dimensional near-planar tetrahedron with
//!   two perpendicular opposite edges at separation `eps`.
//! * `splinter` — regular simplex squeezed by `eps` in every coordinate but
//!   the first.
//! * `regular` — the regular simplex, ignoring `eps`; constant control rows.
//! * `random` — seeded uniform vertices in the unit cube, one fresh draw
//!   per schedule entry.

use std::fmt;
use std::str::FromStr;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conditions::{best_edge_sine, best_jamet_theta, max_subsimplex_dihedral, min_vertex_sine};
use crate::error::{FamilyError, GeometryError};
use crate::geometry::{Point, Simplex};
use crate::interp::{interpolation_ratio, quadratic_suite};

/// The named shape families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Path,
    Needle,
    Cap,
    Sliver,
    Splinter,
    Regular,
    Random,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Path,
        FamilyKind::Needle,
        FamilyKind::Cap,
        FamilyKind::Sliver,
        FamilyKind::Splinter,
        FamilyKind::Regular,
        FamilyKind::Random,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Needle => "needle",
            FamilyKind::Cap => "cap",
            FamilyKind::Sliver => "sliver",
            FamilyKind::Splinter => "splinter",
            FamilyKind::Regular => "regular",
            FamilyKind::Random => "random",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily {
                name: s.to_string(),
            })
    }
}

/// A family, a dimension, a decreasing shape schedule and a seed (used only
/// by the `random` family).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub dim: usize,
    pub schedule: Vec<f64>,
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, dim: usize, schedule: Vec<f64>, seed: u64) -> Self {
        Self {
            kind,
            dim,
            schedule,
            seed,
        }
    }

    /// Geometric schedule `start, start*factor, .., start*factor^(count-1)`.
    pub fn geometric_schedule(start: f64, factor: f64, count: usize) -> Vec<f64> {
        (0..count).map(|k| start * factor.powi(k as i32)).collect()
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.dim < 2 {
            return Err(FamilyError::DimensionTooSmall { dim: self.dim });
        }
        if self.kind == FamilyKind::Sliver && self.dim != 3 {
            return Err(FamilyError::UnsupportedFamilyDimension {
                family: "sliver",
                supported: 3,
                dim: self.dim,
            });
        }
        if self.schedule.is_empty() {
            return Err(FamilyError::InvalidSchedule {
                reason: "schedule is empty".to_string(),
            });
        }
        for (k, &eps) in self.schedule.iter().enumerate() {
            if !(eps.is_finite() && eps > 0.0) {
                return Err(FamilyError::InvalidSchedule {
                    reason: format!("entry {k} is {eps}; all entries must be finite and positive"),
                });
            }
            if k > 0 && eps >= self.schedule[k - 1] {
                return Err(FamilyError::InvalidSchedule {
                    reason: format!(
                        "entry {k} ({eps}) does not decrease from {}",
                        self.schedule[k - 1]
                    ),
                });
            }
        }
        Ok(())
    }
}

/// The regular d-simplex with unit edges, built incrementally: each new
/// vertex sits over the centroid of the previous face at height
/// `sqrt((k+1)/(2k))`.
pub fn regular_simplex(d: usize) -> Result<Simplex, GeometryError> {
    if d < 1 {
        return Err(GeometryError::UnsupportedDimension {
            required: ">= 1".to_string(),
            actual: d,
        });
    }
    let mut rows: Vec<Vec<f64>> = vec![vec![0.0; d]];
    for k in 1..=d {
        let mut row = vec![0.0; d];
        for (j, item) in row.iter_mut().enumerate().take(k - 1) {
            *item = rows.iter().map(|r| r[j]).sum::<f64>() / rows.len() as f64;
        }
        row[k - 1] = ((k as f64 + 1.0) / (2.0 * k as f64)).sqrt();
        rows.push(row);
    }
    Simplex::new(
        rows.into_iter()
            .map(Point::new)
            .collect::<Result<Vec<_>, _>>()?,
    )
}

/// Orthogonal chain `0, e_1, e_1+e_2, .., e_1+..+e_{d-1}, e_1+..+eps*e_d`:
/// full-length steps followed by one short step.
fn path_simplex(d: usize, eps: f64) -> Result<Simplex, GeometryError> {
    let mut rows = vec![vec![0.0; d]];
    for k in 0..d {
        let mut row = rows[k].clone();
        row[k] = if k + 1 == d { eps } else { 1.0 };
        rows.push(row);
    }
    Simplex::new(
        rows.into_iter()
            .map(Point::new)
            .collect::<Result<Vec<_>, _>>()?,
    )
}

/// Regular simplex with the last vertex pulled to distance `eps` from the
/// midpoint of the edge between the first two vertices.
fn needle_simplex(d: usize, eps: f64) -> Result<Simplex, GeometryError> {
    let regular = regular_simplex(d)?;
    let mut vertices = regular.vertices().to_vec();
    let midpoint = (vertices[0].coords() + vertices[1].coords()).scale(0.5);
    let from_mid = vertices[d].coords() - &midpoint;
    let direction = &from_mid / from_mid.norm();
    let moved = midpoint + direction.scale(eps);
    vertices[d] = Point::new(moved.iter().copied().collect())?;
    Simplex::new(vertices)
}

/// Apex at height `eps` over the centroid of a regular (d-1)-simplex base.
fn cap_simplex(d: usize, eps: f64) -> Result<Simplex, GeometryError> {
    let base = regular_simplex(d - 1)?;
    let mut rows: Vec<Vec<f64>> = base
        .vertices()
        .iter()
        .map(|p| {
            let mut row: Vec<f64> = p.coords().iter().copied().collect();
            row.push(0.0);
            row
        })
        .collect();
    let mut apex = vec![0.0; d];
    for row in &rows {
        for (j, item) in apex.iter_mut().enumerate() {
            *item += row[j] / rows.len() as f64;
        }
    }
    apex[d - 1] = eps;
    rows.push(apex);
    Simplex::new(
        rows.into_iter()
            .map(Point::new)
            .collect::<Result<Vec<_>, _>>()?,
    )
}

/// Two perpendicular unit edges, skew at separation `eps`: the classic
/// three-dimensional sliver.
fn sliver_simplex(eps: f64) -> Result<Simplex, GeometryError> {
    Simplex::from_rows(&[
        &[-0.5, 0.0, 0.0],
        &[0.5, 0.0, 0.0],
        &[0.0, -0.5, eps],
        &[0.0, 0.5, eps],
    ])
}

/// Regular simplex squeezed by `eps` in every coordinate except the first.
fn splinter_simplex(d: usize, eps: f64) -> Result<Simplex, GeometryError> {
    let regular = regular_simplex(d)?;
    let vertices = regular
        .vertices()
        .iter()
        .map(|p| {
            Point::new(
                p.coords()
                    .iter()
                    .enumerate()
                    .map(|(j, &x)| if j == 0 { x } else { eps * x })
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Simplex::new(vertices)
}

/// One uniform draw from the unit cube, retried in the measure-zero event
/// of a numerically degenerate draw.
fn random_simplex_from(rng: &mut ChaCha8Rng, d: usize) -> Result<Simplex, GeometryError> {
    for _ in 0..1000 {
        let vertices = (0..=d)
            .map(|_| Point::new((0..d).map(|_| rng.random::<f64>()).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        let s = Simplex::new(vertices)?;
        if !s.is_degenerate() {
            return Ok(s);
        }
    }
    Err(GeometryError::InvalidParameter {
        name: "random draw",
        reason: "could not draw a nondegenerate simplex in 1000 attempts".to_string(),
    })
}

/// The simplex sequence of a family spec, one simplex per schedule entry.
pub fn generate_family(spec: &FamilySpec) -> Result<Vec<Simplex>, FamilyError> {
    spec.validate()?;
    let d = spec.dim;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    spec.schedule
        .iter()
        .map(|&eps| {
            let s = match spec.kind {
                FamilyKind::Path => path_simplex(d, eps)?,
                FamilyKind::Needle => needle_simplex(d, eps)?,
                FamilyKind::Cap => cap_simplex(d, eps)?,
                FamilyKind::Sliver => sliver_simplex(eps)?,
                FamilyKind::Splinter => splinter_simplex(d, eps)?,
                FamilyKind::Regular => regular_simplex(d)?,
                FamilyKind::Random => random_simplex_from(&mut rng, d)?,
            };
            Ok(s)
        })
        .collect()
}

/// One study row: the shape parameter and every quality quantity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FamilyRow {
    pub eps: f64,
    pub min_vertex_sine: f64,
    pub best_edge_sine: f64,
    pub max_dihedral: f64,
    pub jamet_theta: f64,
    pub interp_ratio: f64,
}

/// Study output: one row per schedule entry, in schedule order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyReport {
    pub family: FamilyKind,
    pub dim: usize,
    pub rows: Vec<FamilyRow>,
}

impl FamilyReport {
    pub const CSV_HEADER: &'static str =
        "eps,min_vertex_sine,best_edge_sine,max_dihedral,jamet_theta,interp_ratio";

    /// CSV rendering with 17 significant digits, enough for a lossless
    /// float round-trip.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
                r.eps,
                r.min_vertex_sine,
                r.best_edge_sine,
                r.max_dihedral,
                r.jamet_theta,
                r.interp_ratio
            ));
        }
        out
    }

    /// Human-readable trend verdicts comparing the first and last rows:
    /// whether the dihedral/edge-sine pair and the Jamet/edge-sine pair
    /// degenerate together.
    pub fn trend_lines(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let (Some(first), Some(last)) = (self.rows.first(), self.rows.last()) else {
            return lines;
        };
        let dihedral_degen = last.max_dihedral > std::f64::consts::PI - 0.01;
        let sine_degen = last.best_edge_sine < 0.05;
        let jamet_degen = last.jamet_theta > std::f64::consts::FRAC_PI_2 - 0.05;
        lines.push(format!(
            "dihedral vs edge-sine: {}",
            match (dihedral_degen, sine_degen) {
                (true, true) => "co-degeneration detected (max dihedral near pi, edge sine collapsed)",
                (false, false) => "no degeneration (max dihedral bounded, edge sine bounded below)",
                _ => "mixed trend (inspect rows)",
            }
        ));
        lines.push(format!(
            "jamet vs edge-sine: {}",
            match (jamet_degen, sine_degen) {
                (true, true) => "co-degeneration detected (theta near pi/2, edge sine collapsed)",
                (false, false) => "no degeneration (theta bounded away from pi/2)",
                _ => "mixed trend (inspect rows)",
            }
        ));
        let ratio_growth = if first.interp_ratio > 0.0 {
            last.interp_ratio / first.interp_ratio
        } else {
            f64::INFINITY
        };
        lines.push(format!(
            "interpolation ratio growth across schedule: {:.3e}x",
            ratio_growth
        ));
        lines
    }
}

/// Runs the full quantity battery over a family schedule.
///
/// `lattice_order` controls the sampling density of the interpolation
/// error; see [`crate::interp::interpolation_error`].
pub fn run_family_study(spec: &FamilySpec, lattice_order: usize) -> Result<FamilyReport, FamilyError> {
    let simplices = generate_family(spec)?;
    let suite = quadratic_suite(spec.dim);
    let mut rows = Vec::with_capacity(simplices.len());
    for (&eps, s) in spec.schedule.iter().zip(&simplices) {
        let (min_sine, _) = min_vertex_sine(s).map_err(FamilyError::Geometry)?;
        let (edge_sine, _) = best_edge_sine(s)?;
        let (max_dihedral, _, _) = max_subsimplex_dihedral(s)?;
        let (theta, _) = best_jamet_theta(s)?;
        let interp_ratio =
            interpolation_ratio(s, &suite, lattice_order).map_err(FamilyError::Geometry)?;
        rows.push(FamilyRow {
            eps,
            min_vertex_sine: min_sine,
            best_edge_sine: edge_sine,
            max_dihedral,
            jamet_theta: theta,
            interp_ratio,
        });
    }
    Ok(FamilyReport {
        family: spec.kind,
        dim: spec.dim,
        rows,
    })
}
