//! Error types shared across the crate.

use thiserror::Error;

/// Errors from simplex construction and elementary geometric queries.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum GeometryError {
    /// A coordinate was NaN or infinite.
    #[error("point {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },

    /// Points of one simplex must share a coordinate dimension.
    #[error("expected {expected} coordinates, point {index} has {actual}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        actual: usize,
    },

    /// A simplex needs at least one vertex; most operations need dim >= 1.
    #[error("a simplex requires at least {required} vertices, got {actual}")]
    TooFewVertices { required: usize, actual: usize },

    /// The ambient space cannot hold a simplex of this dimension.
    #[error("simplex of dimension {dim} cannot be embedded in {ambient} ambient coordinates")]
    AmbientTooSmall { dim: usize, ambient: usize },

    /// Vertices must be pairwise distinct.
    #[error("vertices {first} and {second} coincide")]
    DuplicateVertices { first: usize, second: usize },

    /// Vertex or facet index outside `0..len`.
    #[error("index {index} out of range for {len} entries")]
    IndexOutOfRange { index: usize, len: usize },

    /// Measure fell below the degeneracy threshold; normals and angles are
    /// undefined.
    #[error("degenerate simplex: measure {measure:.3e} below threshold {threshold:.3e}")]
    DegenerateSimplex { measure: f64, threshold: f64 },

    /// Operation not defined for this simplex dimension.
    #[error("operation requires dimension {required}, got {actual}")]
    UnsupportedDimension { required: String, actual: usize },

    /// A tuple of unit vectors was malformed (wrong count or non-unit norm).
    #[error("invalid unit-vector tuple: {reason}")]
    InvalidUnitTuple { reason: String },

    /// A scalar or size parameter was outside its admissible range.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

/// Errors from condition evaluation over a simplex.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum ConditionError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),

    /// A threshold was outside its admissible open interval.
    #[error("threshold {name} = {value} outside admissible range {range}")]
    InvalidThreshold {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    /// An enumerated sub-simplex was degenerate; identified by its sorted
    /// vertex indices in the parent simplex.
    #[error("degenerate sub-simplex {vertices:?}: {source}")]
    DegenerateSubsimplex {
        vertices: Vec<usize>,
        source: GeometryError,
    },
}

/// Errors from family generation and studies.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum FamilyError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),

    #[error(transparent)]
    Condition(#[from] ConditionError),

    /// The sliver family is a three-dimensional construction only.
    #[error("family {family} is only defined for dimension {supported}, got {dim}")]
    UnsupportedFamilyDimension {
        family: &'static str,
        supported: usize,
        dim: usize,
    },

    /// Family dimension must be at least 2.
    #[error("family dimension must be >= 2, got {dim}")]
    DimensionTooSmall { dim: usize },

    /// Shape parameters must form a strictly decreasing positive sequence.
    #[error("invalid schedule: {reason}")]
    InvalidSchedule { reason: String },

    /// Unknown family name in a run configuration.
    #[error("unknown family name {name:?}")]
    UnknownFamily { name: String },
}

/// Errors from mesh parsing, validation and analysis.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum MeshError {
    /// Syntactic error in the mesh text format.
    #[error("parse error at line {line}, field {field}: {message}")]
    Parse {
        line: usize,
        field: usize,
        message: String,
    },

    /// Structural error: the tokens parsed but describe an invalid mesh.
    #[error("invalid mesh (element {element}): {message}")]
    Validation { element: usize, message: String },

    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
