//! Dihedral angles of a simplex and of all its sub-simplices.
//!
//! The angle between two facets is read off their outward normals. For
//! quality control the worst angle over every sub-simplex of dimension at
//! least 2 matters: a simplex can hide its flatness in a face.

use simplex_angles::conditions::max_subsimplex_dihedral;
use simplex_angles::family::regular_simplex;
use simplex_angles::geometry::Simplex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Every dihedral angle of the regular d-simplex equals arccos(1/d).
    println!("regular simplices: worst dihedral vs arccos(1/d)");
    for d in 3..=6 {
        let s = regular_simplex(d)?;
        let (value, id, pair) = max_subsimplex_dihedral(&s)?;
        let expected = (1.0 / d as f64).acos();
        println!(
            "  d = {d}: {value:.12} (expected {expected:.12}) on sub-simplex {:?}, facet pair {:?}",
            id.vertices, pair
        );
    }

    // All dihedral angles of one tetrahedron, facet pair by facet pair.
    let s = Simplex::from_rows(&[
        &[0.0, 0.0, 0.0],
        &[1.0, 0.0, 0.0],
        &[0.3, 0.9, 0.0],
        &[0.2, 0.3, 0.8],
    ])?;
    println!("\ntetrahedron dihedral angles (radians)");
    for a in s.dihedral_angles()? {
        println!(
            "  facets opposite vertices {} and {}: {:.6}",
            a.facet_pair.0, a.facet_pair.1, a.value
        );
    }

    // A simplex whose worst angle lives in a triangular face, not in the
    // full-dimensional dihedrals: the bent corner at vertex 0 of the face
    // {0, 1, 2} is more obtuse than any facet-to-facet angle.
    let bent = Simplex::from_rows(&[
        &[0.0, 0.0, 0.0],
        &[1.0, -0.3, 0.0],
        &[0.0, 1.0, 0.0],
        &[0.2, -0.15, 1.0],
    ])?;
    let (value, id, pair) = max_subsimplex_dihedral(&bent)?;
    println!("\nworst angle hiding in a face");
    println!(
        "  worst dihedral {value:.6} on sub-simplex {:?} (facet pair {:?})",
        id.vertices, pair
    );
    let full_worst = bent
        .dihedral_angles()?
        .into_iter()
        .map(|a| a.value)
        .fold(f64::NEG_INFINITY, f64::max);
    println!("  worst full-dimensional dihedral only {full_worst:.6}");
    Ok(())
}
