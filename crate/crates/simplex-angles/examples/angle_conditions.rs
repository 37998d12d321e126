//! The four angle conditions evaluated on good and degenerate simplices.
//!
//! * minimum-angle condition: every vertex sine bounded below;
//! * maximum-angle condition: the best d-edge selection has sine bounded
//!   below;
//! * dihedral condition: every dihedral angle of every sub-simplex bounded
//!   away from pi;
//! * direction-net condition: some d-edge selection spans the direction
//!   sphere with angle bounded away from pi/2.
//!
//! The first is strictly stronger than the rest: a needle-like simplex
//! fails it while still satisfying the other three, and a flattening cap
//! fails all four.

use simplex_angles::conditions::{check_conditions, Thresholds};
use simplex_angles::family::{generate_family, FamilyKind, FamilySpec};
use simplex_angles::geometry::Simplex;

fn show(label: &str, s: &Simplex, thresholds: &Thresholds) -> Result<(), Box<dyn std::error::Error>> {
    let report = check_conditions(s, thresholds)?;
    println!("{label}");
    for (kind, verdict) in report.verdicts.iter() {
        println!(
            "  {kind:<20} value {:>12.6}  threshold {:>9.4}  {}",
            verdict.quantity,
            verdict.threshold,
            if verdict.satisfied { "ok" } else { "VIOLATED" }
        );
    }
    println!(
        "  => {}",
        if report.verdicts.all_satisfied() {
            "all conditions satisfied"
        } else {
            "not all conditions satisfied"
        }
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let thresholds = Thresholds {
        gamma0: 3.0,
        min_sine: 1e-2,
        theta0: 1.5,
    };

    let healthy = Simplex::from_rows(&[
        &[0.0, 0.0, 0.0],
        &[1.0, 0.0, 0.0],
        &[0.3, 0.9, 0.0],
        &[0.2, 0.3, 0.8],
    ])?;
    show("well-shaped tetrahedron", &healthy, &thresholds)?;

    // A path simplex squashed along its last step: the vertex sines
    // collapse but the edge selection, dihedral, and direction conditions
    // hold — degeneration without loss of interpolation quality.
    let spec = FamilySpec::new(FamilyKind::Path, 3, vec![1e-4], 0);
    let path = generate_family(&spec)?.pop().expect("one member");
    println!();
    show("path simplex, last step 1e-4", &path, &thresholds)?;

    // A cap flattens: every condition degenerates at once.
    let spec = FamilySpec::new(FamilyKind::Cap, 3, vec![1e-4], 0);
    let cap = generate_family(&spec)?.pop().expect("one member");
    println!();
    show("cap simplex, apex height 1e-4", &cap, &thresholds)?;
    Ok(())
}
