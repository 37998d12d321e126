//! Serializable report shapes and text/CSV/JSON renderers shared by the
//! command-line front end. All numeric CSV fields use 17 significant
//! digits so files round-trip losslessly and byte-identically.

use serde::Serialize;

use crate::conditions::{AngleReport, ConditionWitness};
use crate::family::FamilyReport;
use crate::identities::IdentityOutcome;
use crate::mesh::{ConformityViolation, MeshAnalysis};

/// One condition verdict, flattened for serialization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictDto {
    pub condition: String,
    pub quantity: f64,
    pub threshold: f64,
    pub satisfied: bool,
    pub witness: String,
}

/// One element's quality quantities and verdicts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AngleReportDto {
    pub min_vertex_sine: f64,
    pub min_vertex: usize,
    pub best_edge_sine: f64,
    pub best_edges: Vec<(usize, usize)>,
    pub best_edge_signs: Vec<i8>,
    pub max_dihedral: f64,
    pub max_dihedral_subsimplex: Vec<usize>,
    pub max_dihedral_facet_pair: (usize, usize),
    pub jamet_theta: f64,
    pub jamet_edges: Vec<(usize, usize)>,
    pub all_satisfied: bool,
    pub verdicts: Vec<VerdictDto>,
}

fn witness_label(witness: &ConditionWitness) -> String {
    match witness {
        ConditionWitness::Vertex(i) => format!("vertex {i}"),
        ConditionWitness::Edges(sel) => format!("edges {:?}", sel.edges),
        ConditionWitness::Subsimplex { id, facet_pair } => format!(
            "subsimplex {:?}, facets opposite vertices {} and {}",
            id.vertices, facet_pair.0, facet_pair.1
        ),
    }
}

impl From<&AngleReport> for AngleReportDto {
    fn from(r: &AngleReport) -> Self {
        Self {
            min_vertex_sine: r.min_vertex_sine,
            min_vertex: r.min_vertex,
            best_edge_sine: r.best_edge_sine,
            best_edges: r.best_edge_selection.edges.clone(),
            best_edge_signs: r.best_edge_selection.signs.clone(),
            max_dihedral: r.max_dihedral,
            max_dihedral_subsimplex: r.max_dihedral_subsimplex.vertices.clone(),
            max_dihedral_facet_pair: r.max_dihedral_facet_pair,
            jamet_theta: r.jamet_theta,
            jamet_edges: r.jamet_selection.edges.clone(),
            all_satisfied: r.verdicts.all_satisfied(),
            verdicts: r
                .verdicts
                .iter()
                .map(|(kind, v)| VerdictDto {
                    condition: kind.to_string(),
                    quantity: v.quantity,
                    threshold: v.threshold,
                    satisfied: v.satisfied,
                    witness: witness_label(&v.witness),
                })
                .collect(),
        }
    }
}

/// One mesh element: either a report or the error that prevented one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ElementDto {
    pub element: usize,
    pub report: Option<AngleReportDto>,
    pub error: Option<String>,
}

/// Whole-mesh analysis: per-element entries, extreme quantities, and
/// conformity defects.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeshAnalysisDto {
    pub elements: Vec<ElementDto>,
    pub min_best_edge_sine: Option<f64>,
    pub max_dihedral: Option<f64>,
    pub max_jamet_theta: Option<f64>,
    pub analyzed_elements: usize,
    pub failed_elements: usize,
    pub all_conditions_satisfied: bool,
    pub face_to_face: bool,
    pub conformity_violations: Vec<String>,
}

pub fn mesh_analysis_dto(
    analysis: &MeshAnalysis,
    face_to_face: bool,
    violations: &[ConformityViolation],
) -> MeshAnalysisDto {
    MeshAnalysisDto {
        elements: analysis
            .reports
            .iter()
            .enumerate()
            .map(|(e, r)| match r {
                Ok(report) => ElementDto {
                    element: e,
                    report: Some(report.into()),
                    error: None,
                },
                Err(err) => ElementDto {
                    element: e,
                    report: None,
                    error: Some(err.to_string()),
                },
            })
            .collect(),
        min_best_edge_sine: analysis.summary.min_best_edge_sine,
        max_dihedral: analysis.summary.max_dihedral,
        max_jamet_theta: analysis.summary.max_jamet_theta,
        analyzed_elements: analysis.summary.analyzed_elements,
        failed_elements: analysis.summary.failed_elements,
        all_conditions_satisfied: analysis.summary.all_conditions_satisfied,
        face_to_face,
        conformity_violations: violations.iter().map(|v| v.to_string()).collect(),
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.16e}")).unwrap_or_else(|| "-".to_string())
}

pub fn mesh_text(dto: &MeshAnalysisDto) -> String {
    let mut out = String::new();
    for e in &dto.elements {
        match (&e.report, &e.error) {
            (Some(r), _) => {
                out.push_str(&format!(
                    "element {}: min_vertex_sine {:.6e}  best_edge_sine {:.6e}  max_dihedral {:.6e}  jamet_theta {:.6e}  [{}]\n",
                    e.element,
                    r.min_vertex_sine,
                    r.best_edge_sine,
                    r.max_dihedral,
                    r.jamet_theta,
                    if r.all_satisfied { "ok" } else { "violated" }
                ));
                for v in &r.verdicts {
                    if !v.satisfied {
                        out.push_str(&format!(
                            "  {} violated: {:.6e} vs threshold {:.6e} ({})\n",
                            v.condition, v.quantity, v.threshold, v.witness
                        ));
                    }
                }
            }
            (None, Some(err)) => {
                out.push_str(&format!("element {}: error: {err}\n", e.element));
            }
            (None, None) => unreachable!("element entry carries a report or an error"),
        }
    }
    out.push_str(&format!(
        "summary: elements {} (failed {})  min_best_edge_sine {}  max_dihedral {}  max_jamet_theta {}\n",
        dto.analyzed_elements + dto.failed_elements,
        dto.failed_elements,
        opt(dto.min_best_edge_sine),
        opt(dto.max_dihedral),
        opt(dto.max_jamet_theta),
    ));
    out.push_str(&format!(
        "face-to-face: {}\n",
        if dto.face_to_face { "yes" } else { "no" }
    ));
    for v in &dto.conformity_violations {
        out.push_str(&format!("  conformity violation: {v}\n"));
    }
    out.push_str(&format!(
        "conditions: {}\n",
        if dto.all_conditions_satisfied && dto.face_to_face {
            "all satisfied"
        } else {
            "violated"
        }
    ));
    out
}

pub const MESH_CSV_HEADER: &str =
    "element,min_vertex_sine,best_edge_sine,max_dihedral,jamet_theta,satisfied,error";

pub fn mesh_csv(dto: &MeshAnalysisDto) -> String {
    let mut out = String::from(MESH_CSV_HEADER);
    out.push('\n');
    for e in &dto.elements {
        match (&e.report, &e.error) {
            (Some(r), _) => out.push_str(&format!(
                "{},{:.16e},{:.16e},{:.16e},{:.16e},{},\n",
                e.element,
                r.min_vertex_sine,
                r.best_edge_sine,
                r.max_dihedral,
                r.jamet_theta,
                r.all_satisfied
            )),
            (None, Some(err)) => {
                out.push_str(&format!(
                    "{},,,,,false,{}\n",
                    e.element,
                    err.replace([',', '\n'], ";")
                ));
            }
            (None, None) => unreachable!("element entry carries a report or an error"),
        }
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}

pub const IDENTITY_CSV_HEADER: &str = "identity,max_violation,tolerance,pass";

pub fn identities_text(outcomes: &[IdentityOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&format!(
            "{:<26} max violation {:.6e}  (tolerance {:.1e})  {}\n",
            o.name,
            o.max_violation,
            o.tolerance,
            if o.pass { "pass" } else { "FAIL" }
        ));
    }
    out
}

pub fn identities_csv(outcomes: &[IdentityOutcome]) -> String {
    let mut out = String::from(IDENTITY_CSV_HEADER);
    out.push('\n');
    for o in outcomes {
        out.push_str(&format!(
            "{},{:.16e},{:.16e},{}\n",
            o.name, o.max_violation, o.tolerance, o.pass
        ));
    }
    out
}

/// Text rendering of a family study: aligned columns plus trend verdicts.
pub fn family_text(report: &FamilyReport) -> String {
    let mut out = format!("family {} (dim {})\n", report.family, report.dim);
    out.push_str(&format!(
        "{:>12} {:>14} {:>14} {:>14} {:>14} {:>14}\n",
        "eps", "min_vtx_sine", "best_edge_sine", "max_dihedral", "jamet_theta", "interp_ratio"
    ));
    for r in &report.rows {
        out.push_str(&format!(
            "{:>12.5e} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e}\n",
            r.eps, r.min_vertex_sine, r.best_edge_sine, r.max_dihedral, r.jamet_theta, r.interp_ratio
        ));
    }
    for line in report.trend_lines() {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Per-element report rendering used by single-simplex inspection paths.
pub fn angle_report_text(dto: &AngleReportDto) -> String {
    let mut out = String::new();
    out.push_str(&format!("min_vertex_sine  {:.16e}  (vertex {})\n", dto.min_vertex_sine, dto.min_vertex));
    out.push_str(&format!(
        "best_edge_sine   {:.16e}  (edges {:?}, signs {:?})\n",
        dto.best_edge_sine, dto.best_edges, dto.best_edge_signs
    ));
    out.push_str(&format!(
        "max_dihedral     {:.16e}  (subsimplex {:?}, facets opposite {:?})\n",
        dto.max_dihedral, dto.max_dihedral_subsimplex, dto.max_dihedral_facet_pair
    ));
    out.push_str(&format!(
        "jamet_theta      {:.16e}  (edges {:?})\n",
        dto.jamet_theta, dto.jamet_edges
    ));
    for v in &dto.verdicts {
        out.push_str(&format!(
            "{:<22} {}  ({:.6e} vs {:.6e})\n",
            v.condition,
            if v.satisfied { "satisfied" } else { "VIOLATED" },
            v.quantity,
            v.threshold
        ));
    }
    out
}
