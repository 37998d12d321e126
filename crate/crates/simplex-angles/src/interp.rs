//! Linear Lagrange interpolation on a simplex and its error in the
//! `W^{1,inf}` norm.
//!
//! The interpolant of a function on a nondegenerate d-simplex is the affine
//! function matching it at the vertices. Errors are measured by sampling a
//! barycentric lattice of a given order: `sup |v - p|` for the value part
//! and `sup max_k |d_k v - g_k|` for the gradient part. The quality ratio
//!
//! ```text
//! max over suite of  ||v - p||_{1,inf} / ( h_S * |v|_{2,inf} )
//! ```
//!
//! stays bounded along families that keep the maximum-angle condition and
//! blows up along families that lose it, which is what the family studies
//! record.

use nalgebra::{DMatrix, DVector};

use crate::error::GeometryError;
use crate::geometry::Simplex;

/// Default barycentric lattice order for error sampling; even, so edge
/// midpoints (where quadratic error peaks sit) are lattice points.
pub const DEFAULT_LATTICE_ORDER: usize = 20;

/// An affine function `x -> gradient . x + offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineFunction {
    pub gradient: DVector<f64>,
    pub offset: f64,
}

impl AffineFunction {
    pub fn evaluate(&self, x: &DVector<f64>) -> f64 {
        self.gradient.dot(x) + self.offset
    }
}

/// A scalar test function with its gradient and a bound on its second
/// derivatives (`sup max_{k,l} |d_k d_l v|`).
pub struct TestFunction {
    pub name: String,
    pub f: Box<dyn Fn(&DVector<f64>) -> f64 + Send + Sync>,
    pub grad: Box<dyn Fn(&DVector<f64>) -> DVector<f64> + Send + Sync>,
    pub hessian_sup: f64,
}

/// Sampled interpolation error components.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InterpolationError {
    /// `sup |v - p|` over the lattice.
    pub sup_value: f64,
    /// `sup max_k |d_k v - g_k|` over the lattice.
    pub sup_gradient: f64,
}

impl InterpolationError {
    /// The `W^{1,inf}`-style norm: max of value and gradient parts.
    pub fn norm_1_inf(&self) -> f64 {
        self.sup_value.max(self.sup_gradient)
    }
}

/// Affine interpolant matching `values` at the vertices of a
/// full-dimensional simplex, by solving the (d+1)x(d+1) vertex system.
pub fn lagrange_interpolant(s: &Simplex, values: &[f64]) -> Result<AffineFunction, GeometryError> {
    let d = s.dim();
    if s.ambient_dim() != d || d < 1 {
        return Err(GeometryError::UnsupportedDimension {
            required: "full-dimensional (ambient == dim >= 1)".to_string(),
            actual: d,
        });
    }
    if values.len() != d + 1 {
        return Err(GeometryError::InvalidParameter {
            name: "values",
            reason: format!("expected {} vertex values, got {}", d + 1, values.len()),
        });
    }
    let measure = s.measure();
    let threshold = s.degeneracy_threshold();
    if measure <= threshold {
        return Err(GeometryError::DegenerateSimplex { measure, threshold });
    }
    // Row i: [1, A_i^T]; unknowns [offset, gradient].
    let mut m = DMatrix::zeros(d + 1, d + 1);
    let mut rhs = DVector::zeros(d + 1);
    for (i, v) in s.vertices().iter().enumerate() {
        m[(i, 0)] = 1.0;
        for k in 0..d {
            m[(i, k + 1)] = v.coords()[k];
        }
        rhs[i] = values[i];
    }
    let solution = m
        .lu()
        .solve(&rhs)
        .ok_or(GeometryError::DegenerateSimplex { measure, threshold })?;
    Ok(AffineFunction {
        gradient: solution.rows(1, d).into_owned(),
        offset: solution[0],
    })
}

/// Visits every barycentric multi-index of the given order.
fn for_each_multi_index(slots: usize, order: usize, mut visit: impl FnMut(&[usize])) {
    let mut index = vec![0usize; slots];
    fn recurse(
        index: &mut Vec<usize>,
        slot: usize,
        remaining: usize,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if slot == index.len() - 1 {
            index[slot] = remaining;
            visit(index);
            return;
        }
        for take in 0..=remaining {
            index[slot] = take;
            recurse(index, slot + 1, remaining - take, visit);
        }
    }
    recurse(&mut index, 0, order, &mut visit);
}

/// Interpolation error of one test function, sampled on the barycentric
/// lattice `{ sum_i (a_i / order) A_i : sum a_i = order }`. Order must be
/// at least 2 so interior and edge-midpoint points exist.
pub fn interpolation_error(
    s: &Simplex,
    v: &TestFunction,
    lattice_order: usize,
) -> Result<InterpolationError, GeometryError> {
    if lattice_order < 2 {
        return Err(GeometryError::InvalidParameter {
            name: "lattice_order",
            reason: format!("must be >= 2, got {lattice_order}"),
        });
    }
    let d = s.dim();
    let values: Vec<f64> = s.vertices().iter().map(|p| (v.f)(p.coords())).collect();
    let p = lagrange_interpolant(s, &values)?;

    let mut sup_value: f64 = 0.0;
    let mut sup_gradient: f64 = 0.0;
    let order_f = lattice_order as f64;
    for_each_multi_index(d + 2 - 1, lattice_order, |alpha| {
        let mut x = DVector::zeros(d);
        for (i, &a) in alpha.iter().enumerate() {
            if a > 0 {
                x += s.vertices()[i].coords().scale(a as f64 / order_f);
            }
        }
        let value_err = ((v.f)(&x) - p.evaluate(&x)).abs();
        sup_value = sup_value.max(value_err);
        let grad_v = (v.grad)(&x);
        let grad_err = (0..d)
            .map(|k| (grad_v[k] - p.gradient[k]).abs())
            .fold(0.0_f64, f64::max);
        sup_gradient = sup_gradient.max(grad_err);
    });
    Ok(InterpolationError {
        sup_value,
        sup_gradient,
    })
}

/// Worst ratio `||v - p||_{1,inf} / (h_S |v|_{2,inf})` over a suite of test
/// functions.
pub fn interpolation_ratio(
    s: &Simplex,
    suite: &[TestFunction],
    lattice_order: usize,
) -> Result<f64, GeometryError> {
    if suite.is_empty() {
        return Err(GeometryError::InvalidParameter {
            name: "suite",
            reason: "empty test-function suite".to_string(),
        });
    }
    let h = s.diameter();
    let mut worst: f64 = 0.0;
    for v in suite {
        if !(v.hessian_sup > 0.0) {
            return Err(GeometryError::InvalidParameter {
                name: "hessian_sup",
                reason: format!("test function {} must have positive hessian_sup", v.name),
            });
        }
        let err = interpolation_error(s, v, lattice_order)?;
        worst = worst.max(err.norm_1_inf() / (h * v.hessian_sup));
    }
    Ok(worst)
}

/// The default quadratic suite: `x_k^2` (second derivative bound 2) and
/// `x_k x_l`, k < l (bound 1). Quadratics are the lowest order at which
/// linear interpolation has nonzero error, and their Hessians are constant,
/// so the sampled ratios are exact up to lattice resolution.
pub fn quadratic_suite(d: usize) -> Vec<TestFunction> {
    let mut suite = Vec::new();
    for k in 0..d {
        suite.push(TestFunction {
            name: format!("x{k}^2"),
            f: Box::new(move |x: &DVector<f64>| x[k] * x[k]),
            grad: Box::new(move |x: &DVector<f64>| {
                let mut g = DVector::zeros(x.len());
                g[k] = 2.0 * x[k];
                g
            }),
            hessian_sup: 2.0,
        });
    }
    for k in 0..d {
        for l in (k + 1)..d {
            suite.push(TestFunction {
                name: format!("x{k}*x{l}"),
                f: Box::new(move |x: &DVector<f64>| x[k] * x[l]),
                grad: Box::new(move |x: &DVector<f64>| {
                    let mut g = DVector::zeros(x.len());
                    g[k] = x[l];
                    g[l] = x[k];
                    g
                }),
                hessian_sup: 1.0,
            });
        }
    }
    suite
}
