//! Simplices, measures, affine frames, outward normals and dihedral angles.
//!
//! A `Simplex` of dimension k is stored as k+1 vertices that may be embedded
//! in an ambient space of dimension m >= k; k-dimensional measure is computed
//! through the Gram determinant, so embedded facets need no special casing.
//! Outward facet normals come from the gradients of the barycentric
//! coordinates, and the dihedral angle between facets i and j is
//! `acos(-n_i . n_j)` for the outward unit normals.

use nalgebra::{DMatrix, DVector};

use crate::error::GeometryError;

/// Relative degeneracy threshold: a k-simplex with measure below
/// `1e-14 * h^k` (h its diameter) is treated as degenerate wherever normals
/// or angles are required.
pub const DEGENERACY_RELATIVE: f64 = 1e-14;

/// Relative cutoff on column-pivoted QR diagonals used to decide the rank of
/// an affine frame.
pub const FRAME_RANK_RELATIVE: f64 = 1e-12;

/// A point with finite coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    coords: DVector<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self, GeometryError> {
        for (index, c) in coords.iter().enumerate() {
            if !c.is_finite() {
                return Err(GeometryError::NonFiniteCoordinate { index });
            }
        }
        Ok(Self {
            coords: DVector::from_vec(coords),
        })
    }

    pub fn from_slice(coords: &[f64]) -> Result<Self, GeometryError> {
        Self::new(coords.to_vec())
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// A k-simplex given by k+1 pairwise distinct vertices in R^m, m >= k.
///
/// `dim` is derived from the vertex count; the simplex may be numerically
/// degenerate (vertices nearly affinely dependent), which is reported by the
/// operations that cannot tolerate it rather than at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Simplex {
    vertices: Vec<Point>,
}

/// Facet `F_i`: the (k-1)-simplex obtained by omitting vertex i, kept
/// together with its parent and the omitted index.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet {
    pub parent: Simplex,
    pub omitted_index: usize,
    pub simplex: Simplex,
}

/// Dihedral angle between two facets, in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DihedralAngle {
    /// Angle in `[0, pi]`.
    pub value: f64,
    /// Indices (i, j) of the two facets, i.e. of their omitted vertices.
    pub facet_pair: (usize, usize),
}

/// Orthonormal basis of the affine hull of a point set, with the points
/// re-expressed in that basis.
#[derive(Clone, Debug)]
pub struct AffineFrame {
    /// First input point; origin of the frame.
    pub origin: Point,
    /// `m x rank` matrix with orthonormal columns spanning the hull directions.
    pub basis: DMatrix<f64>,
    /// Dimension of the affine hull as determined numerically.
    pub rank: usize,
    /// Input points expressed in frame coordinates (each of length `rank`).
    pub coords: Vec<Point>,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

impl Simplex {
    /// Builds a simplex from its vertices. The vertex count fixes the
    /// dimension; coordinates must be finite, of equal length, and pairwise
    /// distinct.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.is_empty() {
            return Err(GeometryError::TooFewVertices {
                required: 1,
                actual: 0,
            });
        }
        let ambient = vertices[0].dim();
        for (index, v) in vertices.iter().enumerate() {
            if v.dim() != ambient {
                return Err(GeometryError::DimensionMismatch {
                    index,
                    expected: ambient,
                    actual: v.dim(),
                });
            }
        }
        let dim = vertices.len() - 1;
        if ambient < dim {
            return Err(GeometryError::AmbientTooSmall { dim, ambient });
        }
        for i in 0..vertices.len() {
            for j in (i + 1)..vertices.len() {
                if (vertices[i].coords() - vertices[j].coords()).norm() == 0.0 {
                    return Err(GeometryError::DuplicateVertices { first: i, second: j });
                }
            }
        }
        Ok(Self { vertices })
    }

    /// Convenience constructor from rows of coordinates.
    pub fn from_rows(rows: &[&[f64]]) -> Result<Self, GeometryError> {
        let vertices = rows
            .iter()
            .map(|r| Point::from_slice(r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices)
    }

    /// Intrinsic dimension (vertex count minus one).
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Result<&Point, GeometryError> {
        self.vertices.get(i).ok_or(GeometryError::IndexOutOfRange {
            index: i,
            len: self.vertices.len(),
        })
    }

    /// Matrix whose columns are the edge vectors `A_j - A_base`, j != base.
    pub fn edge_matrix(&self, base: usize) -> DMatrix<f64> {
        let m = self.ambient_dim();
        let k = self.dim();
        let base_coords = self.vertices[base].coords();
        let mut e = DMatrix::zeros(m, k);
        let mut col = 0;
        for (j, v) in self.vertices.iter().enumerate() {
            if j == base {
                continue;
            }
            e.set_column(col, &(v.coords() - base_coords));
            col += 1;
        }
        e
    }

    /// k-dimensional measure via the Gram determinant
    /// `sqrt(det(E^T E)) / k!`; the measure of a single vertex is 1 by
    /// convention. Works for simplices embedded in higher dimension.
    pub fn measure(&self) -> f64 {
        let k = self.dim();
        if k == 0 {
            return 1.0;
        }
        // Product of singular values of the edge matrix, not the Gram
        // determinant: the Gram route squares the condition number and
        // loses half the digits on thin simplices.
        let e = self.edge_matrix(0);
        let singular = e.svd(false, false).singular_values;
        singular.iter().product::<f64>() / factorial(k)
    }

    /// Longest pairwise vertex distance (`h_S`); 0 for a single vertex.
    pub fn diameter(&self) -> f64 {
        let mut h: f64 = 0.0;
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                h = h.max((self.vertices[i].coords() - self.vertices[j].coords()).norm());
            }
        }
        h
    }

    /// Scale-invariant degeneracy cutoff `1e-14 * h^k` for the k-measure.
    pub fn degeneracy_threshold(&self) -> f64 {
        DEGENERACY_RELATIVE * self.diameter().powi(self.dim() as i32)
    }

    /// True when the measure falls below the degeneracy cutoff.
    pub fn is_degenerate(&self) -> bool {
        self.measure() <= self.degeneracy_threshold()
    }

    /// Facet opposite vertex i, as a (k-1)-simplex embedded in the parent's
    /// coordinates.
    pub fn facet(&self, i: usize) -> Result<Facet, GeometryError> {
        if self.dim() == 0 {
            return Err(GeometryError::UnsupportedDimension {
                required: ">= 1".to_string(),
                actual: 0,
            });
        }
        if i >= self.vertices.len() {
            return Err(GeometryError::IndexOutOfRange {
                index: i,
                len: self.vertices.len(),
            });
        }
        let remaining: Vec<Point> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        Ok(Facet {
            parent: self.clone(),
            omitted_index: i,
            simplex: Simplex { vertices: remaining },
        })
    }

    /// All vertex-index pairs (a, b), a < b, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for a in 0..n {
            for b in (a + 1)..n {
                out.push((a, b));
            }
        }
        out
    }

    /// Sub-simplex spanned by the given (distinct) vertex indices, embedded
    /// in the parent's coordinates.
    pub fn subsimplex(&self, indices: &[usize]) -> Result<Simplex, GeometryError> {
        let vertices = indices
            .iter()
            .map(|&i| self.vertex(i).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        Simplex::new(vertices)
    }

    /// Gradients of the barycentric coordinates of a full-dimensional
    /// simplex. `grad lambda_i` points inward from facet i; the rows of the
    /// inverted edge matrix give `grad lambda_1 .. grad lambda_d` and
    /// `grad lambda_0` closes the sum to zero.
    pub fn barycentric_gradients(&self) -> Result<Vec<DVector<f64>>, GeometryError> {
        let d = self.dim();
        if d == 0 || self.ambient_dim() != d {
            return Err(GeometryError::UnsupportedDimension {
                required: "full-dimensional (ambient == dim >= 1)".to_string(),
                actual: d,
            });
        }
        let measure = self.measure();
        let threshold = self.degeneracy_threshold();
        if measure <= threshold {
            return Err(GeometryError::DegenerateSimplex { measure, threshold });
        }
        let m = self.edge_matrix(0);
        let inv = m
            .try_inverse()
            .ok_or(GeometryError::DegenerateSimplex { measure, threshold })?;
        let mut grads = Vec::with_capacity(d + 1);
        let mut grad0 = DVector::zeros(d);
        for j in 0..d {
            let g = inv.row(j).transpose();
            grad0 -= &g;
            grads.push(g);
        }
        grads.insert(0, grad0);
        Ok(grads)
    }

    /// Barycentric coordinates of a point with respect to a
    /// full-dimensional simplex.
    pub fn barycentric_coordinates(&self, x: &DVector<f64>) -> Result<DVector<f64>, GeometryError> {
        let grads = self.barycentric_gradients()?;
        let d = self.dim();
        let a0 = self.vertices[0].coords();
        let mut lambda = DVector::zeros(d + 1);
        let delta = x - a0;
        for j in 1..=d {
            lambda[j] = grads[j].dot(&delta);
        }
        lambda[0] = 1.0 - lambda.iter().skip(1).sum::<f64>();
        Ok(lambda)
    }

    /// Outward unit normals of all facets, taken within the simplex's
    /// affine hull and expressed in ambient coordinates. For an embedded
    /// simplex the computation happens in an orthonormal frame of the hull
    /// and the result is lifted back.
    pub fn outward_normals(&self) -> Result<Vec<DVector<f64>>, GeometryError> {
        let d = self.dim();
        if d < 1 {
            return Err(GeometryError::UnsupportedDimension {
                required: ">= 1".to_string(),
                actual: d,
            });
        }
        if self.ambient_dim() == d {
            let grads = self.barycentric_gradients()?;
            return Ok(grads.into_iter().map(|g| -(&g / g.norm())).collect());
        }
        let measure = self.measure();
        let threshold = self.degeneracy_threshold();
        if measure <= threshold {
            return Err(GeometryError::DegenerateSimplex { measure, threshold });
        }
        let frame = affine_frame(&self.vertices)?;
        if frame.rank < d {
            return Err(GeometryError::DegenerateSimplex { measure, threshold });
        }
        let projected = Simplex::new(frame.coords.clone())?;
        let normals = projected.outward_normals()?;
        Ok(normals.into_iter().map(|n| &frame.basis * n).collect())
    }

    /// Dihedral angle between facets i and j: `acos(-n_i . n_j)` with the
    /// outward unit normals of the two facets. For a triangle this is the
    /// planar angle at the vertex shared by the two edge facets.
    pub fn dihedral_angle(&self, i: usize, j: usize) -> Result<DihedralAngle, GeometryError> {
        let n_vertices = self.vertices.len();
        for index in [i, j] {
            if index >= n_vertices {
                return Err(GeometryError::IndexOutOfRange {
                    index,
                    len: n_vertices,
                });
            }
        }
        if i == j {
            return Err(GeometryError::UnsupportedDimension {
                required: "two distinct facets".to_string(),
                actual: i,
            });
        }
        if self.dim() < 2 {
            return Err(GeometryError::UnsupportedDimension {
                required: ">= 2".to_string(),
                actual: self.dim(),
            });
        }
        let normals = self.outward_normals()?;
        let cos = (-normals[i].dot(&normals[j])).clamp(-1.0, 1.0);
        Ok(DihedralAngle {
            value: cos.acos(),
            facet_pair: (i, j),
        })
    }

    /// All dihedral angles, one per facet pair i < j.
    pub fn dihedral_angles(&self) -> Result<Vec<DihedralAngle>, GeometryError> {
        let normals = self.outward_normals()?;
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                let cos = (-normals[i].dot(&normals[j])).clamp(-1.0, 1.0);
                out.push(DihedralAngle {
                    value: cos.acos(),
                    facet_pair: (i, j),
                });
            }
        }
        Ok(out)
    }
}

impl Facet {
    pub fn measure(&self) -> f64 {
        self.simplex.measure()
    }
}

/// Orthonormal frame of the affine hull of `points` by column-pivoted QR of
/// the difference matrix. Rank-deficient inputs yield a frame of the actual
/// numerical rank; coordinates are the orthogonal projections onto the hull.
pub fn affine_frame(points: &[Point]) -> Result<AffineFrame, GeometryError> {
    if points.len() < 2 {
        return Err(GeometryError::TooFewVertices {
            required: 2,
            actual: points.len(),
        });
    }
    let ambient = points[0].dim();
    for (index, p) in points.iter().enumerate() {
        if p.dim() != ambient {
            return Err(GeometryError::DimensionMismatch {
                index,
                expected: ambient,
                actual: p.dim(),
            });
        }
    }
    let n = points.len() - 1;
    let origin = points[0].clone();
    let mut e = DMatrix::zeros(ambient, n);
    for j in 1..points.len() {
        e.set_column(j - 1, &(points[j].coords() - origin.coords()));
    }
    let qr = e.col_piv_qr();
    let q = qr.q();
    let r = qr.r();
    let diag_len = r.nrows().min(r.ncols());
    let lead = r[(0, 0)].abs();
    let mut rank = 0;
    for k in 0..diag_len {
        if r[(k, k)].abs() > FRAME_RANK_RELATIVE * lead && lead > 0.0 {
            rank = k + 1;
        } else {
            break;
        }
    }
    let basis = q.columns(0, rank).into_owned();
    let coords = points
        .iter()
        .map(|p| {
            let local = basis.transpose() * (p.coords() - origin.coords());
            Point {
                coords: local,
            }
        })
        .collect();
    Ok(AffineFrame {
        origin,
        basis,
        rank,
        coords,
    })
}
