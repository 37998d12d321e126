//! The four angle conditions on a d-simplex, with witnesses.
//!
//! * minimum-angle condition: every vertex sine at least `C`;
//! * maximum-angle condition: some selection of d edges whose unit
//!   directions have d-sine at least `C`;
//! * dihedral-angle condition: every dihedral angle of every sub-simplex
//!   spanned by 3 or more vertices at most `gamma0 < pi`;
//! * Jamet's condition: some selection of d edges whose lines have Jamet
//!   angle at most `theta0 < pi/2`.
//!
//! Searches over edge selections are exhaustive: all `C(N, d)` subsets of
//! the `N = d(d+1)/2` edges and, for the sine, all `2^(d-1)` orientations
//! (a global flip leaves the sine unchanged). Witnesses are reported
//! deterministically: the first selection in enumeration order whose value
//! lies within [`TIE_WINDOW`] of the optimum.

use itertools::Itertools;
use nalgebra::DVector;

use crate::error::{ConditionError, GeometryError};
use crate::geometry::Simplex;
use crate::jamet;
use crate::sine::{sin_d_at_vertex, sin_d_of_vectors, UnitVectorTuple};

/// Values within this window of the optimum count as ties; the first tied
/// selection in enumeration order becomes the witness.
pub const TIE_WINDOW: f64 = 1e-12;

/// Thresholds of the four conditions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    /// Dihedral-angle bound `gamma0`, in `(0, pi)`.
    pub gamma0: f64,
    /// Lower sine bound `C`, positive.
    pub min_sine: f64,
    /// Jamet angle bound `theta0`, in `(0, pi/2)`.
    pub theta0: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            gamma0: 3.0,
            min_sine: 1e-3,
            theta0: 1.5,
        }
    }
}

impl Thresholds {
    pub fn validate(&self) -> Result<(), ConditionError> {
        if !(self.gamma0 > 0.0 && self.gamma0 < std::f64::consts::PI) {
            return Err(ConditionError::InvalidThreshold {
                name: "gamma0",
                value: self.gamma0,
                range: "(0, pi)",
            });
        }
        if !(self.min_sine > 0.0) {
            return Err(ConditionError::InvalidThreshold {
                name: "min_sine",
                value: self.min_sine,
                range: "(0, inf)",
            });
        }
        if !(self.theta0 > 0.0 && self.theta0 < std::f64::consts::FRAC_PI_2) {
            return Err(ConditionError::InvalidThreshold {
                name: "theta0",
                value: self.theta0,
                range: "(0, pi/2)",
            });
        }
        Ok(())
    }
}

/// A selection of d edges with orientation signs and the resulting unit
/// directions. Edge pairs are vertex indices `(a, b)`, `a < b`; the sign
/// +1 orients the edge from `a` to `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeSelection {
    pub edges: Vec<(usize, usize)>,
    pub signs: Vec<i8>,
    pub tuple: UnitVectorTuple,
}

/// Sorted vertex indices identifying a sub-simplex of the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsimplexId {
    pub vertices: Vec<usize>,
}

/// Which of the four conditions a verdict refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConditionKind {
    MinVertexSine,
    EdgeSine,
    SubsimplexDihedral,
    Jamet,
}

impl std::fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            ConditionKind::MinVertexSine => "min-vertex-sine",
            ConditionKind::EdgeSine => "edge-sine",
            ConditionKind::SubsimplexDihedral => "subsimplex-dihedral",
            ConditionKind::Jamet => "jamet",
        };
        // pad() rather than write_str() so callers' width/alignment flags work.
        f.pad(name)
    }
}

/// Witness backing a verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum ConditionWitness {
    /// Vertex attaining the minimum sine.
    Vertex(usize),
    /// Edge selection attaining the optimum.
    Edges(EdgeSelection),
    /// Sub-simplex and facet pair attaining the largest dihedral angle; the
    /// pair holds the omitted vertex indices in parent numbering.
    Subsimplex {
        id: SubsimplexId,
        facet_pair: (usize, usize),
    },
}

/// Outcome of a single condition.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionVerdict {
    pub quantity: f64,
    pub threshold: f64,
    pub satisfied: bool,
    pub witness: ConditionWitness,
}

/// All four verdicts for one simplex.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    entries: Vec<(ConditionKind, ConditionVerdict)>,
}

impl ConditionReport {
    pub fn get(&self, kind: ConditionKind) -> &ConditionVerdict {
        &self
            .entries
            .iter()
            .find(|(k, _)| *k == kind)
            .expect("all kinds present")
            .1
    }

    pub fn iter(&self) -> impl Iterator<Item = (ConditionKind, &ConditionVerdict)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn all_satisfied(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.satisfied)
    }
}

/// Quality quantities of one simplex plus the verdicts against a set of
/// thresholds.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleReport {
    pub min_vertex_sine: f64,
    pub min_vertex: usize,
    pub best_edge_sine: f64,
    pub best_edge_selection: EdgeSelection,
    pub max_dihedral: f64,
    pub max_dihedral_subsimplex: SubsimplexId,
    pub max_dihedral_facet_pair: (usize, usize),
    pub jamet_theta: f64,
    pub jamet_selection: EdgeSelection,
    pub verdicts: ConditionReport,
}

fn require_dim_at_least_2(s: &Simplex) -> Result<usize, GeometryError> {
    let d = s.dim();
    if d < 2 {
        return Err(GeometryError::UnsupportedDimension {
            required: ">= 2".to_string(),
            actual: d,
        });
    }
    Ok(d)
}

/// Smallest vertex sine and the first vertex attaining it.
pub fn min_vertex_sine(s: &Simplex) -> Result<(f64, usize), GeometryError> {
    let d = require_dim_at_least_2(s)?;
    let mut best = f64::INFINITY;
    let mut best_index = 0;
    for i in 0..=d {
        let v = sin_d_at_vertex(s, i)?.value;
        if v < best {
            best = v;
            best_index = i;
        }
    }
    Ok((best, best_index))
}

fn unit_edge_directions(s: &Simplex) -> Vec<DVector<f64>> {
    s.edges()
        .iter()
        .map(|&(a, b)| {
            let v = s.vertices()[b].coords() - s.vertices()[a].coords();
            let n = v.norm();
            v / n
        })
        .collect()
}

/// Largest d-sine over all oriented selections of d edges, with a witness.
/// The first edge of a selection is always oriented positively; a global
/// flip does not change the sine.
pub fn best_edge_sine(s: &Simplex) -> Result<(f64, EdgeSelection), ConditionError> {
    let d = require_dim_at_least_2(s)?;
    let edges = s.edges();
    let directions = unit_edge_directions(s);
    let mut true_best = f64::NEG_INFINITY;
    let mut witness: Option<(f64, Vec<usize>, u32)> = None;

    for subset in (0..edges.len()).combinations(d) {
        for mask in 0u32..(1 << (d - 1)) {
            let vectors: Vec<DVector<f64>> = subset
                .iter()
                .enumerate()
                .map(|(pos, &e)| {
                    if pos > 0 && (mask >> (pos - 1)) & 1 == 1 {
                        -&directions[e]
                    } else {
                        directions[e].clone()
                    }
                })
                .collect();
            let tuple = UnitVectorTuple::new(vectors).map_err(ConditionError::Geometry)?;
            let value = sin_d_of_vectors(&tuple).map_err(ConditionError::Geometry)?.value;
            if value > true_best {
                true_best = value;
            }
            let replace = match &witness {
                None => true,
                Some((wv, _, _)) => value > wv + TIE_WINDOW,
            };
            if replace {
                witness = Some((value, subset.clone(), mask));
            }
        }
    }

    let (_, subset, mask) = witness.expect("at least one selection");
    let selection = build_selection(&edges, &directions, &subset, mask);
    Ok((true_best, selection))
}

fn build_selection(
    edges: &[(usize, usize)],
    directions: &[DVector<f64>],
    subset: &[usize],
    mask: u32,
) -> EdgeSelection {
    let mut pairs = Vec::with_capacity(subset.len());
    let mut signs = Vec::with_capacity(subset.len());
    let mut vectors = Vec::with_capacity(subset.len());
    for (pos, &e) in subset.iter().enumerate() {
        let flip = pos > 0 && (mask >> (pos - 1)) & 1 == 1;
        pairs.push(edges[e]);
        signs.push(if flip { -1 } else { 1 });
        vectors.push(if flip {
            -&directions[e]
        } else {
            directions[e].clone()
        });
    }
    EdgeSelection {
        edges: pairs,
        signs,
        tuple: UnitVectorTuple::new(vectors).expect("unit directions"),
    }
}

/// Largest dihedral angle over all sub-simplices spanned by 3 or more
/// vertices. Returns the angle, the sub-simplex and the facet pair (as
/// omitted vertex indices of the parent). Enumeration: subset size
/// ascending, then lexicographic, then facet pairs lexicographic; ties
/// resolve to the first witness within [`TIE_WINDOW`].
pub fn max_subsimplex_dihedral(
    s: &Simplex,
) -> Result<(f64, SubsimplexId, (usize, usize)), ConditionError> {
    let d = require_dim_at_least_2(s)?;
    let mut true_best = f64::NEG_INFINITY;
    let mut witness: Option<(f64, Vec<usize>, (usize, usize))> = None;

    for size in 3..=(d + 1) {
        for subset in (0..=d).combinations(size) {
            let sub = s.subsimplex(&subset).map_err(ConditionError::Geometry)?;
            let angles = sub.dihedral_angles().map_err(|source| match source {
                GeometryError::DegenerateSimplex { .. } => ConditionError::DegenerateSubsimplex {
                    vertices: subset.clone(),
                    source,
                },
                other => ConditionError::Geometry(other),
            })?;
            for a in angles {
                if a.value > true_best {
                    true_best = a.value;
                }
                let replace = match &witness {
                    None => true,
                    Some((wv, _, _)) => a.value > wv + TIE_WINDOW,
                };
                if replace {
                    let (p, q) = a.facet_pair;
                    witness = Some((a.value, subset.clone(), (subset[p], subset[q])));
                }
            }
        }
    }

    let (_, vertices, pair) = witness.expect("at least one subsimplex");
    Ok((true_best, SubsimplexId { vertices }, pair))
}

/// Smallest Jamet angle over all selections of d edges (orientation is
/// irrelevant for lines; signs are reported as +1), with a witness.
///
/// Each selection is solved exactly by candidate enumeration, so the scan
/// is a plain exhaustive minimum; ties within [`TIE_WINDOW`] keep the
/// first witness in subset order.
pub fn best_jamet_theta(s: &Simplex) -> Result<(f64, EdgeSelection), ConditionError> {
    let d = require_dim_at_least_2(s)?;
    let edges = s.edges();
    let directions = unit_edge_directions(s);

    let mut true_best = f64::INFINITY;
    let mut witness: Option<(f64, Vec<usize>)> = None;
    for subset in (0..edges.len()).combinations(d) {
        let vectors: Vec<DVector<f64>> = subset.iter().map(|&e| directions[e].clone()).collect();
        let tuple = UnitVectorTuple::new(vectors).map_err(ConditionError::Geometry)?;
        let theta = if tuple.is_rank_deficient() {
            std::f64::consts::FRAC_PI_2
        } else {
            jamet::theta_from_objective(jamet::minimax_objective(tuple.vectors()))
        };

        if theta < true_best {
            true_best = theta;
        }
        let replace = match &witness {
            None => true,
            Some((wv, _)) => theta < wv - TIE_WINDOW,
        };
        if replace {
            witness = Some((theta, subset.clone()));
        }
    }

    let (_, subset) = witness.expect("at least one selection");
    let selection = build_selection(&edges, &directions, &subset, 0);
    Ok((true_best, selection))
}

/// Evaluates all four conditions against the thresholds.
pub fn check_conditions(s: &Simplex, thresholds: &Thresholds) -> Result<AngleReport, ConditionError> {
    thresholds.validate()?;
    require_dim_at_least_2(s).map_err(ConditionError::Geometry)?;

    let (min_sine, min_vertex) = min_vertex_sine(s).map_err(ConditionError::Geometry)?;
    let (edge_sine, edge_selection) = best_edge_sine(s)?;
    let (max_dihedral, sub_id, facet_pair) = max_subsimplex_dihedral(s)?;
    let (theta, jamet_selection) = best_jamet_theta(s)?;

    let entries = vec![
        (
            ConditionKind::MinVertexSine,
            ConditionVerdict {
                quantity: min_sine,
                threshold: thresholds.min_sine,
                satisfied: min_sine >= thresholds.min_sine,
                witness: ConditionWitness::Vertex(min_vertex),
            },
        ),
        (
            ConditionKind::EdgeSine,
            ConditionVerdict {
                quantity: edge_sine,
                threshold: thresholds.min_sine,
                satisfied: edge_sine >= thresholds.min_sine,
                witness: ConditionWitness::Edges(edge_selection.clone()),
            },
        ),
        (
            ConditionKind::SubsimplexDihedral,
            ConditionVerdict {
                quantity: max_dihedral,
                threshold: thresholds.gamma0,
                satisfied: max_dihedral <= thresholds.gamma0,
                witness: ConditionWitness::Subsimplex {
                    id: sub_id.clone(),
                    facet_pair,
                },
            },
        ),
        (
            ConditionKind::Jamet,
            ConditionVerdict {
                quantity: theta,
                threshold: thresholds.theta0,
                satisfied: theta <= thresholds.theta0,
                witness: ConditionWitness::Edges(jamet_selection.clone()),
            },
        ),
    ];

    Ok(AngleReport {
        min_vertex_sine: min_sine,
        min_vertex,
        best_edge_sine: edge_sine,
        best_edge_selection: edge_selection,
        max_dihedral,
        max_dihedral_subsimplex: sub_id,
        max_dihedral_facet_pair: facet_pair,
        jamet_theta: theta,
        jamet_selection,
        verdicts: ConditionReport { entries },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn corner_simplex(d: usize) -> Simplex {
        let mut rows: Vec<Vec<f64>> = vec![vec![0.0; d]];
        for k in 0..d {
            let mut r = vec![0.0; d];
            r[k] = 1.0;
            rows.push(r);
        }
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        Simplex::from_rows(&refs).unwrap()
    }

    #[test]
    fn min_vertex_sine_flat_triangle() {
        let eps = 1e-3;
        let s = Simplex::from_rows(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, eps]]).unwrap();
        let (value, index) = min_vertex_sine(&s).unwrap();
        // The base angles have sine about 2 eps.
        assert!(close(value, 2.0 * eps, 1e-5), "{value}");
        assert_eq!(index, 0);
    }

    #[test]
    fn best_edge_sine_equilateral() {
        let s = Simplex::from_rows(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, 3.0_f64.sqrt() / 2.0]])
            .unwrap();
        let (value, selection) = best_edge_sine(&s).unwrap();
        assert!(close(value, 3.0_f64.sqrt() / 2.0, 1e-12));
        assert_eq!(selection.edges.len(), 2);
    }

    #[test]
    fn best_edge_sine_corner_is_one() {
        for d in 2..=4 {
            let s = corner_simplex(d);
            let (value, selection) = best_edge_sine(&s).unwrap();
            assert!(close(value, 1.0, 1e-12), "d = {d}: {value}");
            // The axis edges (0, k) form an orthonormal selection; the
            // first witness in lexicographic order picks exactly those.
            assert_eq!(
                selection.edges,
                (1..=d).map(|k| (0, k)).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn min_vertex_sine_bounds_best_edge_sine() {
        let s = Simplex::from_rows(&[
            &[0.0, 0.1, 0.0],
            &[1.2, 0.0, 0.1],
            &[0.3, 1.1, 0.0],
            &[0.1, 0.4, 1.3],
        ])
        .unwrap();
        let (min_sine, _) = min_vertex_sine(&s).unwrap();
        let (edge_sine, _) = best_edge_sine(&s).unwrap();
        assert!(min_sine <= edge_sine + TIE_WINDOW);
    }

    #[test]
    fn max_dihedral_regular_simplices() {
        for d in 3..=5 {
            let s = crate::family::regular_simplex(d).unwrap();
            let (value, id, _) = max_subsimplex_dihedral(&s).unwrap();
            let expected = (1.0 / d as f64).acos();
            assert!(close(value, expected, 1e-10), "d = {d}: {value}");
            // The full simplex has the widest dihedral angles.
            assert_eq!(id.vertices.len(), d + 1);
        }
    }

    #[test]
    fn max_dihedral_includes_triangle_faces() {
        // A tetrahedron with an obtuse face angle that exceeds every
        // three-dimensional dihedral angle would be missed without
        // sub-simplex enumeration.  Bend one leg of a corner simplex so the
        // base face turns obtuse at the corner (about 1.862 rad) while the
        // largest dihedral angle of the full tetrahedron stays near 1.838.
        let s = Simplex::from_rows(&[
            &[0.0, 0.0, 0.0],
            &[1.0, -0.3, 0.0],
            &[0.0, 1.0, 0.0],
            &[0.2, -0.15, 1.0],
        ])
        .unwrap();
        let (value, id, pair) = max_subsimplex_dihedral(&s).unwrap();
        // Face {0,1,2} is widest at vertex 0, i.e. between its facets
        // opposite vertices 1 and 2.
        assert_eq!(id.vertices, vec![0, 1, 2]);
        assert_eq!(pair, (1, 2));
        let expected = (-0.3 / 1.09f64.sqrt()).acos();
        assert!(close(value, expected, 1e-12), "{value}");
    }

    #[test]
    fn jamet_corner_matches_axis_selection() {
        for d in 2..=3 {
            let s = corner_simplex(d);
            let (theta, selection) = best_jamet_theta(&s).unwrap();
            let expected = (1.0 / (d as f64).sqrt()).acos();
            assert!(close(theta, expected, 1e-7), "d = {d}: {theta}");
            assert_eq!(
                selection.edges,
                (1..=d).map(|k| (0, k)).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn jamet_coplanar_tetrahedron_is_right_angle() {
        let s = Simplex::from_rows(&[
            &[0.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0],
            &[1.0, 1.0, 0.0],
        ])
        .unwrap();
        let (theta, _) = best_jamet_theta(&s).unwrap();
        assert_eq!(theta, std::f64::consts::FRAC_PI_2);
    }

    #[test]
    fn check_conditions_equilateral_all_pass() {
        let s = Simplex::from_rows(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, 3.0_f64.sqrt() / 2.0]])
            .unwrap();
        let thresholds = Thresholds {
            gamma0: 2.8,
            min_sine: 0.1,
            theta0: 1.4,
        };
        let report = check_conditions(&s, &thresholds).unwrap();
        assert!(report.verdicts.all_satisfied());
        assert!(close(report.max_dihedral, std::f64::consts::FRAC_PI_3, 1e-12));
    }

    #[test]
    fn check_conditions_path_triangle_shows_weaker_conditions() {
        // A degenerating path simplex: the smallest angle vanishes, yet the
        // maximum angle stays at pi/2 and an orthogonal edge pair survives.
        let eps = 1e-3;
        let s = Simplex::from_rows(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, eps]]).unwrap();
        let thresholds = Thresholds {
            gamma0: 2.8,
            min_sine: 0.1,
            theta0: 1.4,
        };
        let report = check_conditions(&s, &thresholds).unwrap();
        assert!(!report.verdicts.get(ConditionKind::MinVertexSine).satisfied);
        assert!(report.verdicts.get(ConditionKind::EdgeSine).satisfied);
        assert!(report.verdicts.get(ConditionKind::SubsimplexDihedral).satisfied);
        assert!(report.verdicts.get(ConditionKind::Jamet).satisfied);
    }

    #[test]
    fn check_conditions_cap_fails_max_angle() {
        // Apex close above the base centroid: dihedral angles approach pi
        // and every edge selection flattens.
        let eps = 1e-4;
        let base = crate::family::regular_simplex(2).unwrap();
        let mut rows: Vec<Vec<f64>> = base
            .vertices()
            .iter()
            .map(|p| {
                let mut c: Vec<f64> = p.coords().iter().copied().collect();
                c.push(0.0);
                c
            })
            .collect();
        let centroid: Vec<f64> = (0..2)
            .map(|k| rows.iter().map(|r| r[k]).sum::<f64>() / 3.0)
            .collect();
        rows.push(vec![centroid[0], centroid[1], eps]);
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let s = Simplex::from_rows(&refs).unwrap();
        let thresholds = Thresholds {
            gamma0: 2.8,
            min_sine: 0.1,
            theta0: 1.4,
        };
        let report = check_conditions(&s, &thresholds).unwrap();
        assert!(!report.verdicts.get(ConditionKind::EdgeSine).satisfied);
        assert!(!report.verdicts.get(ConditionKind::SubsimplexDihedral).satisfied);
        assert!(!report.verdicts.get(ConditionKind::Jamet).satisfied);
        assert!(!report.verdicts.all_satisfied());
    }

    #[test]
    fn invalid_thresholds_rejected() {
        let s = corner_simplex(2);
        for t in [
            Thresholds { gamma0: 3.5, ..Default::default() },
            Thresholds { gamma0: 0.0, ..Default::default() },
            Thresholds { min_sine: 0.0, ..Default::default() },
            Thresholds { theta0: 1.6, ..Default::default() },
        ] {
            match check_conditions(&s, &t) {
                Err(ConditionError::InvalidThreshold { .. }) => {}
                other => panic!("expected threshold rejection, got {other:?}"),
            }
        }
    }

    #[test]
    fn segment_rejected() {
        let s = Simplex::from_rows(&[&[0.0], &[1.0]]).unwrap();
        assert!(min_vertex_sine(&s).is_err());
        assert!(best_edge_sine(&s).is_err());
        assert!(max_subsimplex_dihedral(&s).is_err());
        assert!(best_jamet_theta(&s).is_err());
    }
}
