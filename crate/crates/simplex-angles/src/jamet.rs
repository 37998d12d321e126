//! Jamet's minimax angle for a tuple of unit vectors.
//!
//! For unit vectors `e_1 .. e_d` and a direction `u` on the unit sphere let
//! `theta_i(u) = arccos(|u . e_i|)` be the angle between `u` and the line
//! through `e_i`. Jamet's angle is
//!
//! ```text
//! theta = max_u min_i theta_i(u)
//! ```
//!
//! the covering radius of the d lines seen as a net on the sphere; it equals
//! `pi/2` exactly when the vectors are linearly dependent. Because
//! `min_i theta_i(u) = arccos(max_i |u . e_i|)`, maximizing the angle is the
//! same as minimizing `g(u) = max_i |u . e_i|`.
//!
//! The minimum is found exactly by candidate enumeration. At a minimizer
//! with positive value every constraint attaining the maximum is smooth
//! there, so first-order optimality for a pointwise maximum on the sphere
//! applies: a convex combination of the active gradients `s_i e_i` (with
//! `s_i` the sign of `u . e_i`) is parallel to `u`. Hence `u` lies in the
//! span of the active vectors, and the active magnitudes are all equal —
//! both linear statements once the signs are fixed. A single active
//! constraint would force `u` parallel to that vector, a maximizer rather
//! than a minimizer, so at least two are active. Enumerating every subset
//! of size at least two and every sign class (up to a global flip) covers
//! all local minima; each candidate is one small linear solve, and scoring
//! every candidate with the full objective makes spurious ones harmless.
//! The result is deterministic and exact up to roundoff.

use nalgebra::{DMatrix, DVector};

use crate::sine::UnitVectorTuple;

/// `g(u) = max_i |u . e_i|` for unit `u`; small g means `u` is far from
/// every line.
fn objective(vectors: &[DVector<f64>], u: &DVector<f64>) -> f64 {
    vectors
        .iter()
        .map(|e| e.dot(u).abs())
        .fold(0.0_f64, f64::max)
}

/// Minimum of `g` over the unit sphere by exact candidate enumeration (see
/// the module docs). Any full-rank tuple produces at least one candidate;
/// callers handle rank-deficient tuples separately.
pub(crate) fn minimax_objective(vectors: &[DVector<f64>]) -> f64 {
    let n = vectors.len();
    let d = vectors[0].len();
    debug_assert!(n <= 16, "candidate enumeration is exponential in the tuple size");
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << n) {
        let a = mask.count_ones() as usize;
        if a < 2 || a > d {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let span = DMatrix::from_columns(
            &idx.iter().map(|&i| vectors[i].clone()).collect::<Vec<_>>(),
        );
        let svd = span.svd(true, false);
        let scale = svd.singular_values.max();
        let rank = svd
            .singular_values
            .iter()
            .filter(|&&s| s > scale * 1e-10)
            .count();
        if rank < a {
            // Dependent actives cannot pin an isolated candidate; the
            // minimizer, if it has this active set, reappears for a subset.
            continue;
        }
        let basis = svd.u.as_ref().expect("u requested");
        for signbits in 0..(1u32 << (a - 1)) {
            // Rows s_i e_i^T restricted to the active span; the candidate
            // solves (rows) . w = 1 so all signed projections equal one,
            // then normalization rescales the common value.
            let mut sys = DMatrix::zeros(a, a);
            for (r, &i) in idx.iter().enumerate() {
                let s = if r > 0 && signbits & (1 << (r - 1)) != 0 {
                    -1.0
                } else {
                    1.0
                };
                sys.row_mut(r).copy_from(&((vectors[i].transpose() * basis) * s));
            }
            let rhs = DVector::from_element(a, 1.0);
            if let Some(w) = sys.lu().solve(&rhs) {
                let mut u = basis * w;
                let norm = u.norm();
                if norm > 1e-12 {
                    u /= norm;
                    let g = objective(vectors, &u);
                    if g < best {
                        best = g;
                    }
                }
            }
        }
    }
    best
}

pub(crate) fn theta_from_objective(g: f64) -> f64 {
    g.clamp(0.0, 1.0).acos()
}

/// Jamet's angle `max_u min_i arccos(|u . e_i|)` of a tuple of unit
/// vectors. Returns exactly `pi/2` when the tuple is rank-deficient (same
/// rank test as the d-sine of the tuple).
pub fn jamet_theta(tuple: &UnitVectorTuple) -> f64 {
    if tuple.is_rank_deficient() {
        return std::f64::consts::FRAC_PI_2;
    }
    theta_from_objective(minimax_objective(tuple.vectors()))
}
