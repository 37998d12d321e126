//! End-to-end validation harness.
//!
//! Runs thirteen numbered checks with pinned tolerances: closed-form
//! anchors for the generalized sine and the regular-simplex dihedral,
//! identity agreement on seeded random simplices, trend assertions on
//! degenerating shape families, an independent dense-sampling oracle for
//! the direction-angle search, the mesh conformity pipeline, and
//! byte-level determinism of the study writer.
//!
//! One line is printed per check; the process exits nonzero if any check
//! fails.  Checks are intentionally literal: when a stated expectation is
//! geometrically impossible the check reports the honest failure together
//! with the measured numbers rather than being relaxed to pass.

use std::f64::consts::{FRAC_PI_2, PI};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use simplex_angles::cli::{cmd_study, OutputFormat, StudyArgs};
use simplex_angles::conditions::{best_jamet_theta, max_subsimplex_dihedral, Thresholds};
use simplex_angles::family::{
    regular_simplex, run_family_study, FamilyKind, FamilyReport, FamilySpec,
};
use simplex_angles::geometry::{Point, Simplex};
use simplex_angles::identities::{classical_vertex_sine, random_simplex, random_unit_tuple};
use simplex_angles::jamet::jamet_theta;
use simplex_angles::mesh::{analyze_mesh, face_to_face_check, kuhn_subdivision, SimplicialMesh};
use simplex_angles::sine::{sin_d_at_vertex, sin_d_via_product, UnitVectorTuple};

/// Shape families exercised by the trend checks, with their dimensions.
const STUDY_CONFIGS: [(FamilyKind, usize); 7] = [
    (FamilyKind::Cap, 3),
    (FamilyKind::Sliver, 3),
    (FamilyKind::Cap, 4),
    (FamilyKind::Cap, 5),
    (FamilyKind::Path, 3),
    (FamilyKind::Path, 4),
    (FamilyKind::Path, 5),
];

struct Study {
    kind: FamilyKind,
    dim: usize,
    report: FamilyReport,
    seconds: f64,
}

struct StudySet(Vec<Study>);

impl StudySet {
    fn get(&self, kind: FamilyKind, dim: usize) -> Result<&Study, String> {
        self.0
            .iter()
            .find(|s| s.kind == kind && s.dim == dim)
            .ok_or_else(|| format!("missing study {} d={dim}", kind.name()))
    }
}

fn compute_studies() -> Result<StudySet, String> {
    let mut out = Vec::new();
    for (kind, dim) in STUDY_CONFIGS {
        let spec = FamilySpec::new(kind, dim, FamilySpec::geometric_schedule(0.5, 0.5, 20), 0);
        let started = Instant::now();
        let report = run_family_study(&spec, 20)
            .map_err(|e| format!("{} d={dim} study failed: {e}", kind.name()))?;
        let seconds = started.elapsed().as_secs_f64();
        eprintln!("  {} d={dim} study: {seconds:.1} s", kind.name());
        out.push(Study {
            kind,
            dim,
            report,
            seconds,
        });
    }
    Ok(StudySet(out))
}

/// Running min/max of every raw (unclamped) sine produced by checks 1-2.
struct RawRange {
    min: f64,
    max: f64,
    count: usize,
}

impl RawRange {
    fn new() -> Self {
        Self {
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
            count: 0,
        }
    }

    fn record(&mut self, raw: f64) {
        self.min = self.min.min(raw);
        self.max = self.max.max(raw);
        self.count += 1;
    }
}

// Check 1: at d=2 the vertex sine must agree with the classical sine of
// the vertex angle on a large seeded sample.
fn check_reduction(range: &mut RawRange) -> Result<String, String> {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let s = random_simplex(&mut rng, 2).map_err(|e| e.to_string())?;
        for i in 0..3 {
            let sine = sin_d_at_vertex(&s, i).map_err(|e| e.to_string())?;
            range.record(sine.raw);
            let classical = classical_vertex_sine(&s, i).map_err(|e| e.to_string())?;
            worst = worst.max((sine.value - classical).abs());
        }
    }
    let seconds = started.elapsed().as_secs_f64();
    if worst >= 1e-12 {
        return Err(format!(
            "max |sin_2 - classical| = {worst:.3e} (tolerance 1e-12)"
        ));
    }
    if seconds >= 5.0 {
        return Err(format!("took {seconds:.2} s (budget 5 s)"));
    }
    Ok(format!(
        "max |sin_2 - classical| = {worst:.2e} on 10000 triangles, {seconds:.2} s"
    ))
}

// Check 2: the direct vertex sine and the facet-product route must agree
// to 1e-9 relative for every (vertex, pivot) pair, d = 3..6.
fn check_product(range: &mut RawRange) -> Result<String, String> {
    let started = Instant::now();
    let mut worst = 0.0f64;
    let mut worst_dim = 0usize;
    for dim in 3..=6 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB0B0 + dim as u64);
        for _ in 0..1_000 {
            let s = random_simplex(&mut rng, dim).map_err(|e| e.to_string())?;
            for i in 0..=dim {
                let direct = sin_d_at_vertex(&s, i).map_err(|e| e.to_string())?;
                range.record(direct.raw);
                for pivot in 0..=dim {
                    if pivot == i {
                        continue;
                    }
                    let product = sin_d_via_product(&s, i, pivot).map_err(|e| e.to_string())?;
                    range.record(product.raw);
                    let denom = direct.value.max(product.value).max(f64::MIN_POSITIVE);
                    let rel = (direct.value - product.value).abs() / denom;
                    if rel > worst {
                        worst = rel;
                        worst_dim = dim;
                    }
                }
            }
        }
    }
    let seconds = started.elapsed().as_secs_f64();
    if worst >= 1e-9 {
        return Err(format!(
            "max relative route difference {worst:.3e} at d={worst_dim} (tolerance 1e-9)"
        ));
    }
    if seconds >= 60.0 {
        return Err(format!("took {seconds:.1} s (budget 60 s)"));
    }
    Ok(format!(
        "max relative route difference {worst:.2e} (worst at d={worst_dim}), {seconds:.1} s"
    ))
}

// Check 3: every raw sine recorded by checks 1-2 lies in [0, 1 + 1e-12].
fn check_range(range: &RawRange) -> Result<String, String> {
    if range.count == 0 {
        return Err("no sine values were recorded".into());
    }
    if range.min < 0.0 || range.max > 1.0 + 1e-12 {
        return Err(format!(
            "raw sines span [{:.3e}, {:.17}]; required [0, 1 + 1e-12]",
            range.min, range.max
        ));
    }
    Ok(format!(
        "{} raw sines within [0, 1 + 1e-12]; max overshoot {:.2e}",
        range.count,
        (range.max - 1.0).max(0.0)
    ))
}

fn corner_simplex(d: usize) -> Result<Simplex, String> {
    let mut rows = vec![vec![0.0; d]];
    for k in 0..d {
        let mut row = vec![0.0; d];
        row[k] = 1.0;
        rows.push(row);
    }
    let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
    Simplex::from_rows(&refs).map_err(|e| e.to_string())
}

// Check 4: the sine at the orthogonal corner of conv{0, e_1, ..., e_d}
// equals 1 within 1e-10 for d = 2..6.
fn check_corner() -> Result<String, String> {
    let mut worst = 0.0f64;
    for d in 2..=6 {
        let s = corner_simplex(d)?;
        let sine = sin_d_at_vertex(&s, 0).map_err(|e| e.to_string())?;
        let err = (sine.value - 1.0).abs();
        worst = worst.max(err);
        if err > 1e-10 {
            return Err(format!(
                "d={d}: corner sine {:.15} off by {err:.3e} (tolerance 1e-10)",
                sine.value
            ));
        }
    }
    Ok(format!(
        "corner sine equals 1 for d=2..6, max error {worst:.2e}"
    ))
}

// Check 5: the widest sub-simplex dihedral angle of the regular d-simplex
// is arccos(1/d) within 1e-10 for d = 3..6.
fn check_regular_dihedral() -> Result<String, String> {
    let mut worst = 0.0f64;
    for d in 3..=6 {
        let s = regular_simplex(d).map_err(|e| e.to_string())?;
        let (value, _, _) = max_subsimplex_dihedral(&s).map_err(|e| e.to_string())?;
        let expected = (1.0 / d as f64).acos();
        let err = (value - expected).abs();
        worst = worst.max(err);
        if err > 1e-10 {
            return Err(format!(
                "d={d}: max dihedral {value:.15}, expected arccos(1/{d}) = {expected:.15}"
            ));
        }
    }
    Ok(format!(
        "max dihedral = arccos(1/d) for d=3..6, max error {worst:.2e}"
    ))
}

// Check 6: the cap (d=3,4,5) and sliver (d=3) families develop a dihedral
// angle above pi - 0.01, the edge sine on those rows is below 0.05 and
// strictly decreasing over the last 10 rows, and the d=5 study fits the
// 10-minute budget.
fn check_degenerating(studies: &StudySet) -> Result<String, String> {
    let mut notes = Vec::new();
    for (kind, dim) in [
        (FamilyKind::Cap, 3),
        (FamilyKind::Sliver, 3),
        (FamilyKind::Cap, 4),
        (FamilyKind::Cap, 5),
    ] {
        let study = studies.get(kind, dim)?;
        let rows = &study.report.rows;
        let mut start = rows.len();
        while start > 0 && rows[start - 1].max_dihedral > PI - 0.01 {
            start -= 1;
        }
        if start == rows.len() {
            return Err(format!(
                "{} d={dim}: no row reaches dihedral > pi - 0.01 (last row {:.6})",
                kind.name(),
                rows.last().expect("rows nonempty").max_dihedral
            ));
        }
        for (k, row) in rows.iter().enumerate().skip(start) {
            if row.best_edge_sine >= 0.05 {
                return Err(format!(
                    "{} d={dim} k={}: edge sine {:.4} not below 0.05 on a wide-dihedral row",
                    kind.name(),
                    k + 1,
                    row.best_edge_sine
                ));
            }
        }
        let tail = &rows[rows.len() - 10..];
        for w in tail.windows(2) {
            if w[1].best_edge_sine >= w[0].best_edge_sine {
                return Err(format!(
                    "{} d={dim}: edge sine not strictly decreasing over the last 10 rows",
                    kind.name()
                ));
            }
        }
        notes.push(format!("{} d={dim} wide from k={}", kind.name(), start + 1));
    }
    let d5 = studies.get(FamilyKind::Cap, 5)?;
    if d5.seconds >= 600.0 {
        return Err(format!(
            "cap d=5 study took {:.0} s (budget 600 s)",
            d5.seconds
        ));
    }
    notes.push(format!("cap d=5 study {:.1} s", d5.seconds));
    Ok(notes.join("; "))
}

// Check 7: the orthogonal-path family keeps every dihedral angle at or
// below pi/2 and its edge sine bounded below, with a flat tail.
fn check_path(studies: &StudySet) -> Result<String, String> {
    let mut notes = Vec::new();
    for dim in [3, 4, 5] {
        let study = studies.get(FamilyKind::Path, dim)?;
        let rows = &study.report.rows;
        for (k, row) in rows.iter().enumerate() {
            if row.max_dihedral > FRAC_PI_2 + 1e-9 {
                return Err(format!(
                    "path d={dim} k={}: dihedral {:.12} above pi/2 + 1e-9",
                    k + 1,
                    row.max_dihedral
                ));
            }
        }
        let min_sine = rows
            .iter()
            .map(|r| r.best_edge_sine)
            .fold(f64::INFINITY, f64::min);
        if min_sine <= 0.0 {
            return Err(format!("path d={dim}: edge sine reaches {min_sine}"));
        }
        let tail = &rows[rows.len() - 10..];
        let lo = tail
            .iter()
            .map(|r| r.best_edge_sine)
            .fold(f64::INFINITY, f64::min);
        let hi = tail
            .iter()
            .map(|r| r.best_edge_sine)
            .fold(f64::NEG_INFINITY, f64::max);
        if (hi - lo) / lo >= 0.10 {
            return Err(format!(
                "path d={dim}: tail edge-sine variation {:.1}% (limit 10%)",
                100.0 * (hi - lo) / lo
            ));
        }
        notes.push(format!("d={dim} min sine {min_sine:.3}"));
    }
    Ok(notes.join(", "))
}

// Check 8: on every family row, the best direction angle must sit above
// pi/2 - 0.05 exactly on the rows whose edge sine is below 0.05; on the
// remaining rows it must stay below pi/2 by a fitted per-family margin
// (above 0.1 for the path family).
fn check_linkage(studies: &StudySet) -> Result<String, String> {
    const GAP: f64 = 0.05;
    let mut offenders: Vec<String> = Vec::new();
    let mut margins: Vec<String> = Vec::new();
    for (kind, dim) in STUDY_CONFIGS {
        let study = studies.get(kind, dim)?;
        let mut bounded_max_theta = f64::NEG_INFINITY;
        let mut bounded_rows = 0usize;
        for (k, row) in study.report.rows.iter().enumerate() {
            let near_right = row.jamet_theta > FRAC_PI_2 - GAP;
            let degenerate_sine = row.best_edge_sine < GAP;
            if near_right != degenerate_sine {
                offenders.push(format!(
                    "{} d={dim} k={}: edge sine {:.6} vs theta gap {:.6}",
                    kind.name(),
                    k + 1,
                    row.best_edge_sine,
                    FRAC_PI_2 - row.jamet_theta
                ));
            }
            if !degenerate_sine {
                bounded_rows += 1;
                bounded_max_theta = bounded_max_theta.max(row.jamet_theta);
            }
        }
        if bounded_rows > 0 {
            let margin = FRAC_PI_2 - bounded_max_theta;
            let floor = if kind == FamilyKind::Path { 0.1 } else { 0.0 };
            if margin <= floor {
                offenders.push(format!(
                    "{} d={dim}: fitted theta margin {margin:.4} rad not above {floor:.1}",
                    kind.name()
                ));
            } else {
                margins.push(format!("{} d={dim} {margin:.3}", kind.name()));
            }
        }
    }
    if offenders.is_empty() {
        Ok(format!(
            "all rows match; fitted margins: {}",
            margins.join(", ")
        ))
    } else {
        let shown = offenders
            .iter()
            .take(8)
            .cloned()
            .collect::<Vec<_>>()
            .join("; ");
        let extra = offenders.len().saturating_sub(8);
        Err(if extra > 0 {
            format!("{shown}; +{extra} more")
        } else {
            shown
        })
    }
}

// Check 9: on seeded random triangles with maximum angle gamma, the best
// direction angle is asserted to stay at or below gamma/2 + 1e-6.  The
// attained value is max(gamma, pi - gamma)/2, so acute triangles exceed
// gamma/2; the check reports the measured split rather than filtering
// them out.
fn check_triangle_bound() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2D71_2A);
    let mut violations = 0usize;
    let mut acute_rows = 0usize;
    let mut non_acute_violations = 0usize;
    let mut max_excess = 0.0f64;
    for _ in 0..10_000 {
        let s = random_simplex(&mut rng, 2).map_err(|e| e.to_string())?;
        let gamma = s
            .dihedral_angles()
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|a| a.value)
            .fold(f64::NEG_INFINITY, f64::max);
        let (theta, _) = best_jamet_theta(&s).map_err(|e| e.to_string())?;
        if gamma < FRAC_PI_2 {
            acute_rows += 1;
        }
        let excess = theta - gamma / 2.0;
        if excess > 1e-6 {
            violations += 1;
            max_excess = max_excess.max(excess);
            if gamma >= FRAC_PI_2 {
                non_acute_violations += 1;
            }
        }
    }
    if violations == 0 {
        Ok("theta <= gamma/2 + 1e-6 on all 10000 triangles".into())
    } else {
        Err(format!(
            "{violations} of 10000 triangles violate theta <= gamma/2 + 1e-6 \
             (max excess {max_excess:.4} rad; {acute_rows} triangles acute, \
             {non_acute_violations} violations with gamma >= pi/2)"
        ))
    }
}

/// Direction grid for the dense oracle, flat layout.  `|u . e|` is even
/// under `u -> -u`, so a half circle (d=2) or half sphere (d=3) covers
/// every line direction.
fn oracle_directions(dim: usize, n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n * dim);
    match dim {
        2 => {
            for k in 0..n {
                let phi = PI * (k as f64 + 0.5) / n as f64;
                out.push(phi.cos());
                out.push(phi.sin());
            }
        }
        3 => {
            let golden = PI * (3.0 - 5.0f64.sqrt());
            for k in 0..n {
                let z = (k as f64 + 0.5) / n as f64;
                let r = (1.0 - z * z).max(0.0).sqrt();
                let phi = golden * k as f64;
                out.push(r * phi.cos());
                out.push(r * phi.sin());
                out.push(z);
            }
        }
        _ => unreachable!("oracle grids are built only for d = 2, 3"),
    }
    out
}

fn oracle_theta(tuple: &UnitVectorTuple, samples: &[f64], dim: usize) -> f64 {
    let vectors: Vec<Vec<f64>> = tuple
        .vectors()
        .iter()
        .map(|v| v.iter().copied().collect())
        .collect();
    let mut best = f64::INFINITY;
    for chunk in samples.chunks_exact(dim) {
        let mut widest = 0.0f64;
        for e in &vectors {
            let mut dot = 0.0;
            for (a, b) in chunk.iter().zip(e) {
                dot += a * b;
            }
            let a = dot.abs();
            if a > widest {
                widest = a;
                if widest >= best {
                    break;
                }
            }
        }
        if widest < best {
            best = widest;
        }
    }
    best.clamp(0.0, 1.0).acos()
}

// Check 10: the multi-start direction search agrees with a dense
// 10^6-direction oracle within 2e-3 radians on seeded random tuples.
fn check_oracle() -> Result<String, String> {
    let mut notes = Vec::new();
    for dim in [2usize, 3] {
        let samples = oracle_directions(dim, 1_000_000);
        let mut rng = ChaCha8Rng::seed_from_u64(0xC1E0 + dim as u64);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let tuple = random_unit_tuple(&mut rng, dim).map_err(|e| e.to_string())?;
            let fast = jamet_theta(&tuple);
            let dense = oracle_theta(&tuple, &samples, dim);
            worst = worst.max((fast - dense).abs());
        }
        if worst >= 2e-3 {
            return Err(format!(
                "d={dim}: max |search - oracle| = {worst:.3e} rad (tolerance 2e-3)"
            ));
        }
        notes.push(format!("d={dim} max diff {worst:.2e}"));
    }
    Ok(notes.join(", "))
}

// Check 11: the interpolation ratio stays within a factor 2 along the
// path family (d=3,4) and grows by more than 10x along the cap family
// (d=3).
fn check_interp_trends(studies: &StudySet) -> Result<String, String> {
    let mut notes = Vec::new();
    for dim in [3, 4] {
        let rows = &studies.get(FamilyKind::Path, dim)?.report.rows;
        let lo = rows
            .iter()
            .map(|r| r.interp_ratio)
            .fold(f64::INFINITY, f64::min);
        let hi = rows
            .iter()
            .map(|r| r.interp_ratio)
            .fold(f64::NEG_INFINITY, f64::max);
        if hi >= 2.0 * lo {
            return Err(format!(
                "path d={dim}: interpolation ratio spread {:.2}x (limit 2x)",
                hi / lo
            ));
        }
        notes.push(format!("path d={dim} spread {:.2}x", hi / lo));
    }
    let rows = &studies.get(FamilyKind::Cap, 3)?.report.rows;
    let first = rows.first().expect("rows nonempty").interp_ratio;
    let last = rows.last().expect("rows nonempty").interp_ratio;
    let growth = last / first;
    if growth <= 10.0 {
        return Err(format!(
            "cap d=3: interpolation ratio grows only {growth:.2}x from k=1 to k=20"
        ));
    }
    notes.push(format!("cap d=3 growth {growth:.0}x"));
    Ok(notes.join(", "))
}

fn point(coords: &[f64]) -> Point {
    Point::new(coords.to_vec()).expect("finite coordinates")
}

// Check 12: Kuhn subdivisions of the unit cube are conforming with
// summary max dihedral exactly pi/2; a hanging-node mesh is rejected with
// the offending element pair named.
fn check_mesh_pipeline() -> Result<String, String> {
    let mut notes = Vec::new();
    for d in 2..=4 {
        let mesh = kuhn_subdivision(d).map_err(|e| e.to_string())?;
        let (ok, violations) = face_to_face_check(&mesh).map_err(|e| e.to_string())?;
        if !ok || !violations.is_empty() {
            return Err(format!(
                "Kuhn d={d}: conformity reported {} violations",
                violations.len()
            ));
        }
        let analysis = analyze_mesh(&mesh, &Thresholds::default()).map_err(|e| e.to_string())?;
        if analysis.summary.failed_elements != 0 {
            return Err(format!(
                "Kuhn d={d}: {} elements failed analysis",
                analysis.summary.failed_elements
            ));
        }
        let max_dihedral = analysis
            .summary
            .max_dihedral
            .ok_or_else(|| format!("Kuhn d={d}: summary has no dihedral"))?;
        if (max_dihedral - FRAC_PI_2).abs() > 1e-9 {
            return Err(format!(
                "Kuhn d={d}: summary max dihedral {max_dihedral:.12}, expected pi/2"
            ));
        }
        notes.push(format!("Kuhn d={d} ok"));
    }

    let vertices = vec![
        point(&[0.0, 0.0]),
        point(&[1.0, 0.0]),
        point(&[0.5, -1.0]),
        point(&[0.5, 0.0]),
        point(&[0.5, 1.0]),
    ];
    let elements = vec![vec![0, 1, 2], vec![0, 3, 4], vec![3, 1, 4]];
    let mesh = SimplicialMesh::new(2, vertices, elements).map_err(|e| e.to_string())?;
    let (ok, violations) = face_to_face_check(&mesh).map_err(|e| e.to_string())?;
    if ok || violations.is_empty() {
        return Err("hanging-node mesh passed the conformity check".into());
    }
    let pairs: Vec<Vec<usize>> = violations.iter().map(|v| v.elements()).collect();
    if !pairs.iter().any(|p| p == &vec![0, 1] || p == &vec![0, 2]) {
        return Err(format!(
            "violations do not name element 0 against 1 or 2: {pairs:?}"
        ));
    }
    notes.push(format!("hanging node flagged: {}", violations[0]));
    Ok(notes.join("; "))
}

// Check 13: two study runs with identical configuration write
// byte-identical CSV files.
fn check_determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut paths = Vec::new();
    for name in ["first.csv", "second.csv"] {
        let path = dir.path().join(name);
        let args = StudyArgs {
            family: "random".to_string(),
            dim: 3,
            schedule: "0.5,0.5,6".to_string(),
            seed: 7,
            output: Some(path.clone()),
            format: OutputFormat::Csv,
            lattice_order: 20,
        };
        let code = cmd_study(&args);
        if code != 0 {
            return Err(format!("cmd_study exited with {code}"));
        }
        paths.push(path);
    }
    let a = std::fs::read(&paths[0]).map_err(|e| e.to_string())?;
    let b = std::fs::read(&paths[1]).map_err(|e| e.to_string())?;
    if a.is_empty() {
        return Err("study output is empty".into());
    }
    if a != b {
        return Err(format!(
            "outputs differ: {} bytes vs {} bytes",
            a.len(),
            b.len()
        ));
    }
    Ok(format!("two runs produced {} identical bytes", a.len()))
}

fn panic_text(payload: &(dyn std::any::Any + Send)) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "opaque panic payload".to_string()
    }
}

fn run_check<F: FnOnce() -> Result<String, String>>(idx: u32, label: &str, f: F) -> bool {
    let outcome = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(p) => Err(format!("panicked: {}", panic_text(p.as_ref()))),
    };
    match outcome {
        Ok(detail) => {
            println!("check {idx:02} {label:<32} PASS  {detail}");
            true
        }
        Err(detail) => {
            println!("check {idx:02} {label:<32} FAIL  {detail}");
            false
        }
    }
}

fn main() {
    eprintln!("building shape-family studies (7 studies, 20 rows each)...");
    let studies: Result<StudySet, String> = match catch_unwind(compute_studies) {
        Ok(r) => r,
        Err(p) => Err(format!("study phase panicked: {}", panic_text(p.as_ref()))),
    };
    let with_studies = |f: &dyn Fn(&StudySet) -> Result<String, String>| match &studies {
        Ok(set) => f(set),
        Err(e) => Err(format!("studies unavailable: {e}")),
    };

    let mut range = RawRange::new();
    let mut results = Vec::new();
    results.push(run_check(1, "classical-sine reduction", || {
        check_reduction(&mut range)
    }));
    results.push(run_check(2, "sine product factorization", || {
        check_product(&mut range)
    }));
    results.push(run_check(3, "sine range bound", || check_range(&range)));
    results.push(run_check(4, "orthogonal-corner anchor", check_corner));
    results.push(run_check(
        5,
        "regular-simplex dihedral",
        check_regular_dihedral,
    ));
    results.push(run_check(6, "degenerating families", || {
        with_studies(&check_degenerating)
    }));
    results.push(run_check(7, "orthogonal-path family", || {
        with_studies(&check_path)
    }));
    results.push(run_check(8, "direction-angle linkage", || {
        with_studies(&check_linkage)
    }));
    results.push(run_check(9, "triangle direction bound", check_triangle_bound));
    results.push(run_check(10, "direction-search oracle", check_oracle));
    results.push(run_check(11, "interpolation-ratio trends", || {
        with_studies(&check_interp_trends)
    }));
    results.push(run_check(12, "mesh pipeline", check_mesh_pipeline));
    results.push(run_check(13, "study determinism", check_determinism));

    let passed = results.iter().filter(|ok| **ok).count();
    println!("{passed}/{} checks passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
