//! Simplicial meshes: a minimal line-oriented text format, validation,
//! conformity (face-to-face) checking, per-element angle analysis, and the
//! Kuhn cube subdivision as the canonical conforming mesh.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use nalgebra::DVector;

use crate::conditions::{check_conditions, AngleReport, Thresholds};
use crate::error::{ConditionError, GeometryError, MeshError};
use crate::geometry::{Point, Simplex};

/// Barycentric slack below which a point counts as lying in a closed
/// element. Barycentric coordinates are scale-free, so this is an absolute
/// tolerance.
pub const CONTAINMENT_TOLERANCE: f64 = 1e-9;

/// A validated d-dimensional simplicial mesh.
///
/// Elements are stored in canonical form (vertex indices sorted
/// ascending), which makes the parse/serialize round-trip an identity.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplicialMesh {
    dim: usize,
    vertices: Vec<Point>,
    elements: Vec<Vec<usize>>,
}

impl SimplicialMesh {
    /// Builds a mesh, canonicalizing and validating every element: index
    /// ranges, arity d+1, no repeats within or across elements, and
    /// nondegeneracy.
    pub fn new(
        dim: usize,
        vertices: Vec<Point>,
        elements: Vec<Vec<usize>>,
    ) -> Result<Self, MeshError> {
        if dim < 1 {
            return Err(MeshError::Geometry(GeometryError::UnsupportedDimension {
                required: ">= 1".to_string(),
                actual: dim,
            }));
        }
        for (index, v) in vertices.iter().enumerate() {
            if v.dim() != dim {
                return Err(MeshError::Geometry(GeometryError::DimensionMismatch {
                    index,
                    expected: dim,
                    actual: v.dim(),
                }));
            }
        }
        let mut canonical = Vec::with_capacity(elements.len());
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for (e, element) in elements.into_iter().enumerate() {
            if element.len() != dim + 1 {
                return Err(MeshError::Validation {
                    element: e,
                    message: format!(
                        "expected {} vertex indices, found {}",
                        dim + 1,
                        element.len()
                    ),
                });
            }
            let mut sorted = element;
            sorted.sort_unstable();
            for pair in sorted.windows(2) {
                if pair[0] == pair[1] {
                    return Err(MeshError::Validation {
                        element: e,
                        message: format!("vertex index {} repeated", pair[0]),
                    });
                }
            }
            if let Some(&i) = sorted.iter().find(|&&i| i >= vertices.len()) {
                return Err(MeshError::Validation {
                    element: e,
                    message: format!(
                        "vertex index {} out of range (mesh has {} vertices)",
                        i,
                        vertices.len()
                    ),
                });
            }
            if let Some(&other) = seen.get(&sorted) {
                return Err(MeshError::Validation {
                    element: e,
                    message: format!("duplicate of element {other}"),
                });
            }
            seen.insert(sorted.clone(), e);
            let s = Simplex::new(sorted.iter().map(|&i| vertices[i].clone()).collect())
                .map_err(|err| MeshError::Validation {
                    element: e,
                    message: format!("invalid element geometry: {err}"),
                })?;
            if s.is_degenerate() {
                return Err(MeshError::Validation {
                    element: e,
                    message: format!(
                        "degenerate element (measure {:.3e} below threshold {:.3e})",
                        s.measure(),
                        s.degeneracy_threshold()
                    ),
                });
            }
            canonical.push(sorted);
        }
        Ok(Self {
            dim,
            vertices,
            elements: canonical,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    /// The e-th element as a geometric simplex.
    pub fn element_simplex(&self, e: usize) -> Result<Simplex, MeshError> {
        let element = self.elements.get(e).ok_or(MeshError::Geometry(
            GeometryError::IndexOutOfRange {
                index: e,
                len: self.elements.len(),
            },
        ))?;
        Simplex::new(element.iter().map(|&i| self.vertices[i].clone()).collect())
            .map_err(MeshError::Geometry)
    }
}

fn parse_error(line: usize, field: usize, message: impl Into<String>) -> MeshError {
    MeshError::Parse {
        line,
        field,
        message: message.into(),
    }
}

/// Parses the line-oriented mesh format:
///
/// ```text
/// dim <d>
/// vertices <n>
/// <n lines of d coordinates>
/// elements <m>
/// <m lines of d+1 zero-based vertex indices>
/// ```
///
/// Blank lines are ignored; a line whose first non-space character is `#`
/// is a comment and may appear anywhere. Reported positions are 1-based.
pub fn parse_mesh(text: &str) -> Result<SimplicialMesh, MeshError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect();
    let mut cursor = 0usize;

    let (line, header) = take_line(&lines, &mut cursor, "`dim <d>` header")?;
    let dim = parse_count_line(line, header, "dim")?;
    if dim < 1 {
        return Err(parse_error(line, 2, "dimension must be at least 1"));
    }

    let (line, header) = take_line(&lines, &mut cursor, "`vertices <n>` header")?;
    let vertex_count = parse_count_line(line, header, "vertices")?;
    let mut vertices = Vec::with_capacity(vertex_count);
    for _ in 0..vertex_count {
        let (line, row) = take_line(&lines, &mut cursor, "vertex coordinate line")?;
        let fields: Vec<&str> = row.split_whitespace().collect();
        if fields.len() != dim {
            return Err(parse_error(
                line,
                fields.len().min(dim) + 1,
                format!("expected {dim} coordinates, found {}", fields.len()),
            ));
        }
        let mut coords = Vec::with_capacity(dim);
        for (j, f) in fields.iter().enumerate() {
            let x: f64 = f.parse().map_err(|_| {
                parse_error(line, j + 1, format!("invalid coordinate `{f}`"))
            })?;
            if !x.is_finite() {
                return Err(parse_error(line, j + 1, format!("non-finite coordinate `{f}`")));
            }
            coords.push(x);
        }
        vertices.push(Point::new(coords).map_err(MeshError::Geometry)?);
    }

    let (line, header) = take_line(&lines, &mut cursor, "`elements <m>` header")?;
    let element_count = parse_count_line(line, header, "elements")?;
    let mut elements = Vec::with_capacity(element_count);
    for _ in 0..element_count {
        let (line, row) = take_line(&lines, &mut cursor, "element index line")?;
        let fields: Vec<&str> = row.split_whitespace().collect();
        if fields.len() != dim + 1 {
            return Err(parse_error(
                line,
                fields.len().min(dim + 1) + 1,
                format!("expected {} vertex indices, found {}", dim + 1, fields.len()),
            ));
        }
        let mut indices = Vec::with_capacity(dim + 1);
        for (j, f) in fields.iter().enumerate() {
            let i: usize = f.parse().map_err(|_| {
                parse_error(line, j + 1, format!("invalid vertex index `{f}`"))
            })?;
            indices.push(i);
        }
        elements.push(indices);
    }

    if let Some(&(line, _)) = lines.get(cursor) {
        return Err(parse_error(line, 1, "unexpected content after last element"));
    }

    SimplicialMesh::new(dim, vertices, elements)
}

fn take_line<'a>(
    lines: &[(usize, &'a str)],
    cursor: &mut usize,
    expect: &str,
) -> Result<(usize, &'a str), MeshError> {
    if let Some(&entry) = lines.get(*cursor) {
        *cursor += 1;
        Ok(entry)
    } else {
        let last = lines.last().map(|&(n, _)| n).unwrap_or(0);
        Err(parse_error(last + 1, 1, format!("missing {expect}")))
    }
}

fn parse_count_line(line: usize, content: &str, keyword: &str) -> Result<usize, MeshError> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 || fields[0] != keyword {
        return Err(parse_error(
            line,
            1,
            format!("expected `{keyword} <count>`, found `{}`", content.trim()),
        ));
    }
    fields[1]
        .parse()
        .map_err(|_| parse_error(line, 2, format!("invalid count `{}`", fields[1])))
}

/// Serializes to the canonical text form: sorted element indices, floats
/// in shortest round-trip notation.
pub fn serialize_mesh(mesh: &SimplicialMesh) -> String {
    let mut out = format!("dim {}\nvertices {}\n", mesh.dim(), mesh.vertices().len());
    for v in mesh.vertices() {
        let row = v.coords().iter().map(|x| x.to_string()).join(" ");
        out.push_str(&row);
        out.push('\n');
    }
    out.push_str(&format!("elements {}\n", mesh.elements().len()));
    for e in mesh.elements() {
        let row = e.iter().map(|i| i.to_string()).join(" ");
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Kuhn subdivision of the unit d-cube: the 2^d cube corners (vertex index
/// = coordinate bitmask) and d! path simplices, one per permutation, each
/// walking from the origin corner to the opposite corner one coordinate at
/// a time.
pub fn kuhn_subdivision(dim: usize) -> Result<SimplicialMesh, MeshError> {
    if !(1..=8).contains(&dim) {
        return Err(MeshError::Geometry(GeometryError::UnsupportedDimension {
            required: "1..=8".to_string(),
            actual: dim,
        }));
    }
    let vertices = (0..1usize << dim)
        .map(|mask| {
            Point::new((0..dim).map(|j| ((mask >> j) & 1) as f64).collect())
                .map_err(MeshError::Geometry)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let elements = (0..dim)
        .permutations(dim)
        .map(|perm| {
            let mut mask = 0usize;
            let mut element = vec![0usize];
            for j in perm {
                mask |= 1 << j;
                element.push(mask);
            }
            element
        })
        .collect();
    SimplicialMesh::new(dim, vertices, elements)
}

/// One conformity defect found by [`face_to_face_check`].
#[derive(Clone, Debug, PartialEq)]
pub enum ConformityViolation {
    /// A (d-1)-facet, as a sorted vertex-index tuple, is used by more than
    /// two elements.
    FacetOveruse {
        facet: Vec<usize>,
        elements: Vec<usize>,
    },
    /// Two elements intersect outside the face spanned by their shared
    /// vertex indices (hanging nodes, overlaps, interpenetration).
    NonFaceContact {
        first: usize,
        second: usize,
        detail: String,
    },
}

impl ConformityViolation {
    /// Indices of the offending elements.
    pub fn elements(&self) -> Vec<usize> {
        match self {
            ConformityViolation::FacetOveruse { elements, .. } => elements.clone(),
            ConformityViolation::NonFaceContact { first, second, .. } => vec![*first, *second],
        }
    }
}

impl fmt::Display for ConformityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConformityViolation::FacetOveruse { facet, elements } => write!(
                f,
                "facet {facet:?} shared by {} elements {elements:?}",
                elements.len()
            ),
            ConformityViolation::NonFaceContact {
                first,
                second,
                detail,
            } => write!(f, "elements {first} and {second}: {detail}"),
        }
    }
}

fn in_closed_simplex(s: &Simplex, x: &DVector<f64>, tol: f64) -> Result<bool, GeometryError> {
    let lambda = s.barycentric_coordinates(x)?;
    Ok(lambda.iter().all(|&l| l >= -tol))
}

/// Whether every pair of elements meets face-to-face.
///
/// Two stages: every (d-1)-facet may serve at most two elements, and for
/// every element pair the geometric contact must stay within the face
/// spanned by the shared vertex indices. The second stage probes vertices
/// of one element against the closed other, flags same-side neighbours
/// across a fully shared facet, and checks mutual centroid exclusion.
pub fn face_to_face_check(
    mesh: &SimplicialMesh,
) -> Result<(bool, Vec<ConformityViolation>), MeshError> {
    let mut violations = Vec::new();

    let mut facet_use: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (e, element) in mesh.elements().iter().enumerate() {
        for omit in 0..element.len() {
            let mut facet = element.clone();
            facet.remove(omit);
            facet_use.entry(facet).or_default().push(e);
        }
    }
    let mut overused: Vec<(Vec<usize>, Vec<usize>)> = facet_use
        .into_iter()
        .filter(|(_, users)| users.len() > 2)
        .collect();
    overused.sort();
    for (facet, elements) in overused {
        violations.push(ConformityViolation::FacetOveruse { facet, elements });
    }

    let simplices = (0..mesh.elements().len())
        .map(|e| mesh.element_simplex(e))
        .collect::<Result<Vec<_>, _>>()?;

    for a in 0..mesh.elements().len() {
        for b in a + 1..mesh.elements().len() {
            if let Some(detail) = pair_contact_defect(mesh, &simplices, a, b)? {
                violations.push(ConformityViolation::NonFaceContact {
                    first: a,
                    second: b,
                    detail,
                });
            }
        }
    }

    Ok((violations.is_empty(), violations))
}

fn pair_contact_defect(
    mesh: &SimplicialMesh,
    simplices: &[Simplex],
    a: usize,
    b: usize,
) -> Result<Option<String>, MeshError> {
    let ea = &mesh.elements()[a];
    let eb = &mesh.elements()[b];
    let shared: Vec<usize> = ea.iter().copied().filter(|i| eb.contains(i)).collect();
    let d = mesh.dim();

    // A vertex outside the shared index set must stay out of the other
    // element's closed hull.
    for (this, other, this_el, other_s) in
        [(a, b, ea, &simplices[b]), (b, a, eb, &simplices[a])]
    {
        for &v in this_el {
            if shared.contains(&v) {
                continue;
            }
            if in_closed_simplex(other_s, mesh.vertices()[v].coords(), CONTAINMENT_TOLERANCE)
                .map_err(MeshError::Geometry)?
            {
                return Ok(Some(format!(
                    "vertex {v} of element {this} lies inside element {other}"
                )));
            }
        }
    }

    // Neighbours across a fully shared facet must occupy opposite half
    // spaces of the facet hyperplane.
    if shared.len() == d {
        let va = *ea.iter().find(|i| !shared.contains(i)).expect("one vertex left");
        let vb = *eb.iter().find(|i| !shared.contains(i)).expect("one vertex left");
        let face_points: Vec<Point> = shared.iter().map(|&i| mesh.vertices()[i].clone()).collect();
        let frame = crate::geometry::affine_frame(&face_points).map_err(MeshError::Geometry)?;
        // Component of each opposite vertex orthogonal to the facet plane.
        let residual = |v: usize| {
            let delta = mesh.vertices()[v].coords() - mesh.vertices()[shared[0]].coords();
            &delta - &frame.basis * (frame.basis.transpose() * &delta)
        };
        let ra = residual(va);
        let rb = residual(vb);
        if ra.dot(&rb) > 0.0 {
            return Ok(Some(format!(
                "elements on the same side of shared facet {shared:?}"
            )));
        }
    }

    // Mutual centroid exclusion catches coincident and nested elements.
    for (this, other, this_s, other_s) in [
        (a, b, &simplices[a], &simplices[b]),
        (b, a, &simplices[b], &simplices[a]),
    ] {
        let mut centroid = DVector::zeros(d);
        for v in this_s.vertices() {
            centroid += v.coords().scale(1.0 / (d as f64 + 1.0));
        }
        if in_closed_simplex(other_s, &centroid, CONTAINMENT_TOLERANCE)
            .map_err(MeshError::Geometry)?
        {
            return Ok(Some(format!(
                "centroid of element {this} lies inside element {other}"
            )));
        }
    }

    Ok(None)
}

/// Worst-case quality quantities over the successfully analyzed elements.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeshSummary {
    pub min_best_edge_sine: Option<f64>,
    pub max_dihedral: Option<f64>,
    pub max_jamet_theta: Option<f64>,
    pub analyzed_elements: usize,
    pub failed_elements: usize,
    pub all_conditions_satisfied: bool,
}

/// Per-element condition reports plus the mesh-wide summary.
#[derive(Clone, Debug)]
pub struct MeshAnalysis {
    pub reports: Vec<Result<AngleReport, ConditionError>>,
    pub summary: MeshSummary,
}

/// Runs the full condition battery on every element. Element-level errors
/// are recorded in place of the report; the run never aborts early.
pub fn analyze_mesh(
    mesh: &SimplicialMesh,
    thresholds: &Thresholds,
) -> Result<MeshAnalysis, ConditionError> {
    thresholds.validate()?;
    let mut reports = Vec::with_capacity(mesh.elements().len());
    for e in 0..mesh.elements().len() {
        let report = match mesh.element_simplex(e) {
            Ok(s) => check_conditions(&s, thresholds),
            Err(MeshError::Geometry(g)) => Err(ConditionError::Geometry(g)),
            Err(other) => Err(ConditionError::Geometry(GeometryError::InvalidParameter {
                name: "element",
                reason: other.to_string(),
            })),
        };
        reports.push(report);
    }
    let mut summary = MeshSummary {
        min_best_edge_sine: None,
        max_dihedral: None,
        max_jamet_theta: None,
        analyzed_elements: 0,
        failed_elements: 0,
        all_conditions_satisfied: true,
    };
    for report in &reports {
        match report {
            Ok(r) => {
                summary.analyzed_elements += 1;
                summary.min_best_edge_sine = Some(match summary.min_best_edge_sine {
                    Some(cur) => cur.min(r.best_edge_sine),
                    None => r.best_edge_sine,
                });
                summary.max_dihedral = Some(match summary.max_dihedral {
                    Some(cur) => cur.max(r.max_dihedral),
                    None => r.max_dihedral,
                });
                summary.max_jamet_theta = Some(match summary.max_jamet_theta {
                    Some(cur) => cur.max(r.jamet_theta),
                    None => r.jamet_theta,
                });
                if !r.verdicts.all_satisfied() {
                    summary.all_conditions_satisfied = false;
                }
            }
            Err(_) => {
                summary.failed_elements += 1;
                summary.all_conditions_satisfied = false;
            }
        }
    }
    Ok(MeshAnalysis { reports, summary })
}
