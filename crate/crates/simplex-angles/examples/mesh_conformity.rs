//! Face-to-face conformity checking on simplicial meshes.
//!
//! Two elements of a conforming mesh may only meet in a common sub-simplex
//! whose vertices are vertices of both.  The check below catches the
//! classic failure modes: hanging nodes (a vertex of one element sitting
//! in the interior of another's facet) and facets shared by more than two
//! elements.

use simplex_angles::conditions::Thresholds;
use simplex_angles::geometry::Point;
use simplex_angles::mesh::{
    analyze_mesh, face_to_face_check, kuhn_subdivision, SimplicialMesh,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // The standard subdivision of the unit cube into d! simplices is
    // face-to-face in every dimension.
    for d in 2..=4 {
        let mesh = kuhn_subdivision(d)?;
        let (ok, violations) = face_to_face_check(&mesh)?;
        println!(
            "cube subdivision d = {d}: {} vertices, {} elements, conforming: {ok} \
             ({} violations)",
            mesh.vertices().len(),
            mesh.elements().len(),
            violations.len()
        );
    }

    // A hanging node: the right edge of the big triangle is split by the
    // two small triangles, so their shared vertex 3 lies in the interior
    // of the big triangle's edge without being one of its vertices.
    println!();
    println!("hanging-node mesh:");
    let vertices = vec![
        Point::from_slice(&[0.0, 0.0])?,
        Point::from_slice(&[1.0, 0.0])?,
        Point::from_slice(&[0.5, -1.0])?,
        Point::from_slice(&[0.5, 0.0])?,
        Point::from_slice(&[0.5, 1.0])?,
    ];
    let elements = vec![vec![0, 1, 2], vec![0, 3, 4], vec![3, 1, 4]];
    let mesh = SimplicialMesh::new(2, vertices, elements)?;
    let (ok, violations) = face_to_face_check(&mesh)?;
    println!("  conforming: {ok}");
    for v in &violations {
        println!("  violation: {v}");
    }

    // Full mesh analysis: per-element condition checks plus the summary.
    println!();
    let mesh = kuhn_subdivision(3)?;
    let analysis = analyze_mesh(&mesh, &Thresholds::default())?;
    let s = &analysis.summary;
    println!("cube subdivision d = 3 under default thresholds:");
    println!("  elements analyzed       {}", s.analyzed_elements);
    println!("  elements failing        {}", s.failed_elements);
    // Summary extrema are None only when nothing was analyzed, which the
    // counts above already rule out.
    println!(
        "  worst edge-sine         {:.6}",
        s.min_best_edge_sine.unwrap_or(f64::NAN)
    );
    println!(
        "  largest dihedral (rad)  {:.6}",
        s.max_dihedral.unwrap_or(f64::NAN)
    );
    println!(
        "  largest direction angle {:.6}",
        s.max_jamet_theta.unwrap_or(f64::NAN)
    );
    println!("  all conditions hold     {}", s.all_conditions_satisfied);
    Ok(())
}
