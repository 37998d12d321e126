//! Quality measures and angle conditions for d-dimensional simplices.
//!
//! A nondegenerate simplex in `R^d` can degenerate in qualitatively different
//! ways as a mesh is refined: some degenerations (needles, path simplices)
//! are harmless for linear interpolation while others (caps, slivers) destroy
//! gradient accuracy. This crate computes the quantities that tell the two
//! classes apart and checks the classical conditions built on them:
//!
//! * the generalized sine `sin_d` of the angle at a simplex vertex, together
//!   with its product factorization over dihedral angles,
//! * the minimum-angle condition (every vertex sine bounded below),
//! * the maximum-angle condition (some d-tuple of edge directions with sine
//!   bounded below),
//! * the dihedral-angle condition (all dihedral angles of all sub-simplices
//!   bounded away from pi),
//! * Jamet's condition (some d-tuple of edge lines forming a bounded-angle
//!   net of the direction sphere),
//! * the Lagrange interpolation error ratio that these conditions control.
//!
//! The `family` module generates the standard degenerating families (path,
//! needle, cap, sliver, splinter) so the equivalences between the conditions
//! can be observed numerically, and the `mesh` module handles simplicial
//! meshes in a small text format, including the Kuhn subdivision of the unit
//! cube and a face-to-face conformity check.
//!
//! Each capability has a runnable example:
//!
//! ```text
//! cargo run --example dsine_basics          # vertex sines, product formula
//! cargo run --example subsimplex_dihedrals  # dihedral angles over sub-simplices
//! cargo run --example angle_conditions      # the four conditions on one simplex
//! cargo run --example jamet_angle           # Jamet's minimax angle
//! cargo run --example family_study          # degenerating-family study tables
//! cargo run --example mesh_conformity       # Kuhn meshes, hanging-node detection
//! cargo run --example interpolation_error   # interpolation error ratios
//! ```
//!
//! The `simplex-angles` binary exposes the same pipelines as subcommands
//! (`analyze`, `generate`, `study`, `check-identities`, `interp-study`).

pub mod cli;
pub mod conditions;
pub mod error;
pub mod family;
pub mod geometry;
pub mod identities;
pub mod interp;
pub mod jamet;
pub mod mesh;
pub mod report;
pub mod sine;

pub use conditions::{
    best_edge_sine, best_jamet_theta, check_conditions, max_subsimplex_dihedral, min_vertex_sine,
    AngleReport, ConditionKind, ConditionReport, ConditionVerdict, EdgeSelection, SubsimplexId,
    Thresholds,
};
pub use error::{ConditionError, FamilyError, GeometryError, MeshError};
pub use family::{generate_family, run_family_study, FamilyKind, FamilyReport, FamilySpec};
pub use geometry::{affine_frame, AffineFrame, DihedralAngle, Facet, Point, Simplex};
pub use interp::{
    interpolation_error, interpolation_ratio, lagrange_interpolant, quadratic_suite,
    AffineFunction, InterpolationError, TestFunction,
};
pub use jamet::jamet_theta;
pub use mesh::{
    analyze_mesh, face_to_face_check, kuhn_subdivision, parse_mesh, serialize_mesh, MeshAnalysis,
    SimplicialMesh,
};
pub use sine::{
    max_sine_over_vertices, sin_d_at_vertex, sin_d_of_vectors, sin_d_via_product, SineValue,
    UnitVectorTuple,
};
