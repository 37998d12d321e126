//! Command-line front end: mesh analysis, family generation, degeneration
//! studies, the identity suite, and interpolation studies.
//!
//! Exit codes follow one contract everywhere: 0 success / all checks
//! satisfied, 1 a condition or identity was violated, 2 usage or input
//! error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::conditions::Thresholds;
use crate::family::{generate_family, run_family_study, FamilyKind, FamilySpec};
use crate::identities::run_identity_suite;
use crate::interp::{interpolation_error, interpolation_ratio, quadratic_suite, DEFAULT_LATTICE_ORDER};
use crate::mesh::{analyze_mesh, face_to_face_check, parse_mesh, serialize_mesh, kuhn_subdivision, SimplicialMesh};
use crate::geometry::Point;
use crate::report;

/// Largest dimension accepted by the exhaustive searches; higher
/// dimensions are rejected explicitly instead of running for hours.
pub const MAX_DIM: usize = 6;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "simplex-angles",
    about = "Simplex angle conditions, degenerating families, and mesh quality analysis",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a mesh file: conformity plus the four angle conditions per element.
    Analyze(AnalyzeArgs),
    /// Generate a shape family (or the Kuhn cube subdivision) as a mesh file.
    Generate(GenerateArgs),
    /// Tabulate all quality quantities along a degenerating family schedule.
    Study(StudyArgs),
    /// Run the randomized d-sine identity suite.
    CheckIdentities(CheckIdentitiesArgs),
    /// Tabulate interpolation error quantities along a family schedule.
    InterpStudy(InterpStudyArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Mesh file to analyze.
    #[arg(long)]
    pub input: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Largest tolerated dihedral angle (radians), in (0, pi).
    #[arg(long, default_value_t = 3.0)]
    pub gamma0: f64,
    /// Smallest tolerated vertex/edge-selection sine, positive.
    #[arg(long, default_value_t = 1e-3)]
    pub min_sine: f64,
    /// Largest tolerated Jamet angle (radians), in (0, pi/2).
    #[arg(long, default_value_t = 1.5)]
    pub theta0: f64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Family name: path, needle, cap, sliver, splinter, regular, random, or kuhn.
    #[arg(long)]
    pub family: String,
    /// Simplex dimension, 2..=6.
    #[arg(long)]
    pub dim: usize,
    /// Shape schedule as start,factor,count (geometric, strictly decreasing).
    #[arg(long, default_value = "0.5,0.5,8")]
    pub schedule: String,
    /// Seed for the random family.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the mesh here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    /// Family name: path, needle, cap, sliver, splinter, regular, or random.
    #[arg(long)]
    pub family: String,
    /// Simplex dimension, 2..=6.
    #[arg(long)]
    pub dim: usize,
    /// Shape schedule as start,factor,count (geometric, strictly decreasing).
    #[arg(long, default_value = "0.5,0.5,20")]
    pub schedule: String,
    /// Seed for the random family.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Barycentric lattice order for interpolation error sampling.
    #[arg(long, default_value_t = DEFAULT_LATTICE_ORDER)]
    pub lattice_order: usize,
}

#[derive(Debug, Args)]
pub struct CheckIdentitiesArgs {
    /// Dimension the randomized identities run at, 2..=6.
    #[arg(long)]
    pub dim: usize,
    /// Number of random trials per identity.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the outcome table here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct InterpStudyArgs {
    /// Family name: path, needle, cap, sliver, splinter, regular, or random.
    #[arg(long)]
    pub family: String,
    /// Simplex dimension, 2..=6.
    #[arg(long)]
    pub dim: usize,
    /// Shape schedule as start,factor,count (geometric, strictly decreasing).
    #[arg(long, default_value = "0.5,0.5,20")]
    pub schedule: String,
    /// Seed for the random family.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Barycentric lattice order for error sampling.
    #[arg(long, default_value_t = DEFAULT_LATTICE_ORDER)]
    pub lattice_order: usize,
}

/// Parses the program arguments and runs; the returned code is the
/// process exit status. Usage errors from the argument parser exit with
/// status 2 directly.
pub fn run() -> i32 {
    execute(Cli::parse())
}

pub fn execute(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(&args),
        Command::Generate(args) => cmd_generate(&args),
        Command::Study(args) => cmd_study(&args),
        Command::CheckIdentities(args) => cmd_check_identities(&args),
        Command::InterpStudy(args) => cmd_interp_study(&args),
    }
}

/// `start,factor,count` with start > 0, 0 < factor < 1, count >= 1.
pub fn parse_schedule(text: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "schedule must be start,factor,count; found `{text}`"
        ));
    }
    let start: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("invalid schedule start `{}`", parts[0]))?;
    let factor: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("invalid schedule factor `{}`", parts[1]))?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("invalid schedule count `{}`", parts[2]))?;
    if !(start.is_finite() && start > 0.0) {
        return Err(format!("schedule start must be positive and finite, found {start}"));
    }
    if !(factor.is_finite() && factor > 0.0 && factor < 1.0) {
        return Err(format!("schedule factor must lie in (0, 1), found {factor}"));
    }
    if count == 0 {
        return Err("schedule count must be at least 1".to_string());
    }
    Ok(FamilySpec::geometric_schedule(start, factor, count))
}

fn check_dim(dim: usize) -> Result<(), String> {
    if !(2..=MAX_DIM).contains(&dim) {
        return Err(format!(
            "dimension {dim} unsupported; the exhaustive searches accept 2..={MAX_DIM}"
        ));
    }
    Ok(())
}

fn write_out(output: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> i32 {
    let text = match fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", args.input.display())),
    };
    let mesh = match parse_mesh(&text) {
        Ok(m) => m,
        Err(e) => return usage_error(&format!("{}: {e}", args.input.display())),
    };
    let thresholds = Thresholds {
        gamma0: args.gamma0,
        min_sine: args.min_sine,
        theta0: args.theta0,
    };
    if let Err(e) = thresholds.validate() {
        return usage_error(&e.to_string());
    }
    if mesh.dim() > MAX_DIM {
        return usage_error(&format!(
            "mesh dimension {} unsupported; the exhaustive searches accept 2..={MAX_DIM}",
            mesh.dim()
        ));
    }
    let (face_ok, violations) = match face_to_face_check(&mesh) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    let analysis = match analyze_mesh(&mesh, &thresholds) {
        Ok(a) => a,
        Err(e) => return usage_error(&e.to_string()),
    };
    let dto = report::mesh_analysis_dto(&analysis, face_ok, &violations);
    let rendered = match args.format {
        OutputFormat::Text => report::mesh_text(&dto),
        OutputFormat::Csv => report::mesh_csv(&dto),
        OutputFormat::Json => report::to_json(&dto),
    };
    if let Err(e) = write_out(&args.output, &rendered) {
        return usage_error(&e);
    }
    if dto.all_conditions_satisfied && dto.face_to_face && dto.failed_elements == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

/// Packs a generated family into one valid mesh: each member keeps its own
/// vertices and is translated along the first coordinate so member hulls
/// stay disjoint.
fn pack_family_mesh(spec: &FamilySpec) -> Result<SimplicialMesh, String> {
    let simplices = generate_family(spec).map_err(|e| e.to_string())?;
    let mut vertices: Vec<Point> = Vec::new();
    let mut elements: Vec<Vec<usize>> = Vec::new();
    let mut cursor = 0.0f64;
    for s in &simplices {
        let min_x = s
            .vertices()
            .iter()
            .map(|p| p.coords()[0])
            .fold(f64::INFINITY, f64::min);
        let max_x = s
            .vertices()
            .iter()
            .map(|p| p.coords()[0])
            .fold(f64::NEG_INFINITY, f64::max);
        let shift = cursor - min_x;
        let base = vertices.len();
        for p in s.vertices() {
            let mut coords: Vec<f64> = p.coords().iter().copied().collect();
            coords[0] += shift;
            vertices.push(Point::new(coords).map_err(|e| e.to_string())?);
        }
        elements.push((base..base + s.vertices().len()).collect());
        cursor += max_x - min_x + 1.0;
    }
    SimplicialMesh::new(spec.dim, vertices, elements).map_err(|e| e.to_string())
}

pub fn cmd_generate(args: &GenerateArgs) -> i32 {
    if let Err(e) = check_dim(args.dim) {
        return usage_error(&e);
    }
    let mesh = if args.family == "kuhn" {
        match kuhn_subdivision(args.dim) {
            Ok(m) => m,
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        let kind: FamilyKind = match args.family.parse() {
            Ok(k) => k,
            Err(e) => {
                return usage_error(&format!("{e} (expected a family name or `kuhn`)"));
            }
        };
        let schedule = match parse_schedule(&args.schedule) {
            Ok(s) => s,
            Err(e) => return usage_error(&e),
        };
        let spec = FamilySpec::new(kind, args.dim, schedule, args.seed);
        if let Err(e) = spec.validate() {
            return usage_error(&e.to_string());
        }
        match pack_family_mesh(&spec) {
            Ok(m) => m,
            Err(e) => return usage_error(&e),
        }
    };
    match write_out(&args.output, &serialize_mesh(&mesh)) {
        Ok(()) => EXIT_OK,
        Err(e) => usage_error(&e),
    }
}

pub fn cmd_study(args: &StudyArgs) -> i32 {
    if let Err(e) = check_dim(args.dim) {
        return usage_error(&e);
    }
    let kind: FamilyKind = match args.family.parse() {
        Ok(k) => k,
        Err(e) => return usage_error(&e.to_string()),
    };
    let schedule = match parse_schedule(&args.schedule) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let spec = FamilySpec::new(kind, args.dim, schedule, args.seed);
    if let Err(e) = spec.validate() {
        return usage_error(&e.to_string());
    }
    if args.lattice_order < 2 {
        return usage_error("lattice order must be at least 2");
    }
    let report = match run_family_study(&spec, args.lattice_order) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    let rendered = match args.format {
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => crate::report::to_json(&report),
        OutputFormat::Text => crate::report::family_text(&report),
    };
    if let Err(e) = write_out(&args.output, &rendered) {
        return usage_error(&e);
    }
    for line in report.trend_lines() {
        eprintln!("{line}");
    }
    EXIT_OK
}

pub fn cmd_check_identities(args: &CheckIdentitiesArgs) -> i32 {
    let outcomes = match run_identity_suite(args.dim, args.trials, args.seed) {
        Ok(o) => o,
        Err(e) => return usage_error(&e.to_string()),
    };
    let rendered = match args.format {
        OutputFormat::Text => report::identities_text(&outcomes),
        OutputFormat::Csv => report::identities_csv(&outcomes),
        OutputFormat::Json => report::to_json(&outcomes),
    };
    if let Err(e) = write_out(&args.output, &rendered) {
        return usage_error(&e);
    }
    if outcomes.iter().all(|o| o.pass) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

pub const INTERP_CSV_HEADER: &str = "eps,diameter,sup_value,sup_gradient,interp_ratio";

pub fn cmd_interp_study(args: &InterpStudyArgs) -> i32 {
    if let Err(e) = check_dim(args.dim) {
        return usage_error(&e);
    }
    let kind: FamilyKind = match args.family.parse() {
        Ok(k) => k,
        Err(e) => return usage_error(&e.to_string()),
    };
    let schedule = match parse_schedule(&args.schedule) {
        Ok(s) => s,
        Err(e) => return usage_error(&e),
    };
    let spec = FamilySpec::new(kind, args.dim, schedule, args.seed);
    if let Err(e) = spec.validate() {
        return usage_error(&e.to_string());
    }
    if args.lattice_order < 2 {
        return usage_error("lattice order must be at least 2");
    }
    let simplices = match generate_family(&spec) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let suite = quadratic_suite(args.dim);
    let mut out = String::from(INTERP_CSV_HEADER);
    out.push('\n');
    for (&eps, s) in spec.schedule.iter().zip(&simplices) {
        let mut sup_value = 0.0f64;
        let mut sup_gradient = 0.0f64;
        for f in &suite {
            let err = match interpolation_error(s, f, args.lattice_order) {
                Ok(e) => e,
                Err(e) => return usage_error(&e.to_string()),
            };
            sup_value = sup_value.max(err.sup_value);
            sup_gradient = sup_gradient.max(err.sup_gradient);
        }
        let ratio = match interpolation_ratio(s, &suite, args.lattice_order) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        };
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            eps,
            s.diameter(),
            sup_value,
            sup_gradient,
            ratio
        ));
    }
    match write_out(&args.output, &out) {
        Ok(()) => EXIT_OK,
        Err(e) => usage_error(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_parsing() {
        let s = parse_schedule("0.5,0.5,3").unwrap();
        assert_eq!(s, vec![0.5, 0.25, 0.125]);
        assert!(parse_schedule("0.5,0.5").is_err());
        assert!(parse_schedule("0,0.5,3").is_err());
        assert!(parse_schedule("0.5,1.5,3").is_err());
        assert!(parse_schedule("0.5,0.5,0").is_err());
        assert!(parse_schedule("a,b,c").is_err());
    }

    #[test]
    fn dimension_cap_is_enforced() {
        assert!(check_dim(2).is_ok());
        assert!(check_dim(6).is_ok());
        assert!(check_dim(1).is_err());
        assert!(check_dim(7).is_err());
    }

    #[test]
    fn cli_parses_all_subcommands() {
        let cli = Cli::try_parse_from([
            "simplex-angles",
            "study",
            "--family",
            "cap",
            "--dim",
            "3",
            "--schedule",
            "0.5,0.5,4",
        ])
        .unwrap();
        match cli.command {
            Command::Study(args) => {
                assert_eq!(args.family, "cap");
                assert_eq!(args.dim, 3);
                assert_eq!(args.lattice_order, DEFAULT_LATTICE_ORDER);
            }
            other => panic!("unexpected command {other:?}"),
        }
        assert!(Cli::try_parse_from(["simplex-angles", "check-identities", "--dim", "3"]).is_ok());
        assert!(Cli::try_parse_from(["simplex-angles", "interp-study", "--family", "path", "--dim", "3"]).is_ok());
        assert!(Cli::try_parse_from(["simplex-angles", "bogus"]).is_err());
    }

    #[test]
    fn generated_family_mesh_is_disjoint_and_valid() {
        let spec = FamilySpec::new(
            FamilyKind::Cap,
            3,
            FamilySpec::geometric_schedule(0.5, 0.5, 3),
            0,
        );
        let mesh = pack_family_mesh(&spec).unwrap();
        assert_eq!(mesh.elements().len(), 3);
        let (ok, violations) = face_to_face_check(&mesh).unwrap();
        assert!(ok, "{violations:?}");
    }
}
