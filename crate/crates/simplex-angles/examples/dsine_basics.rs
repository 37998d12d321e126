//! Vertex sines of a simplex and the two ways to compute them.
//!
//! Evaluates the d-dimensional sine at every vertex of a tetrahedron, shows
//! the corner of the unit-cube simplex where the sine is exactly 1, and
//! cross-checks the direct evaluation against the product factorization
//! over a pivot vertex.

use simplex_angles::geometry::Simplex;
use simplex_angles::sine::{max_sine_over_vertices, sin_d_at_vertex, sin_d_via_product};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A mildly irregular tetrahedron.
    let s = Simplex::from_rows(&[
        &[0.0, 0.0, 0.0],
        &[1.0, 0.0, 0.0],
        &[0.3, 0.9, 0.0],
        &[0.2, 0.3, 0.8],
    ])?;

    println!("tetrahedron vertex sines");
    for i in 0..4 {
        let sine = sin_d_at_vertex(&s, i)?;
        println!("  vertex {i}: sin_3 = {:.12}", sine.value);
    }
    let (best, vertex) = max_sine_over_vertices(&s)?;
    println!("  largest sine {best:.12} at vertex {vertex}");

    // The same quantity via the factorization into a facet sine and the
    // sines of the dihedral angles meeting at a pivot vertex. Any pivot
    // other than the angle vertex gives the same value.
    println!("\ndirect evaluation vs product factorization");
    for pivot in 1..4 {
        let direct = sin_d_at_vertex(&s, 0)?;
        let product = sin_d_via_product(&s, 0, pivot)?;
        println!(
            "  pivot {pivot}: direct {:.15}  product {:.15}  |diff| {:.2e}",
            direct.value,
            product.value,
            (direct.value - product.value).abs()
        );
    }

    // At the right-angle corner of conv{0, e_1, .., e_d} the edges are
    // orthonormal and the sine is exactly 1 — the d-dimensional analogue
    // of a right angle having sine one.
    println!("\northogonal corners of conv{{0, e_1, .., e_d}}");
    for d in 2..=6 {
        let mut rows: Vec<Vec<f64>> = vec![vec![0.0; d]];
        for k in 0..d {
            let mut e = vec![0.0; d];
            e[k] = 1.0;
            rows.push(e);
        }
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let corner = Simplex::from_rows(&refs)?;
        let sine = sin_d_at_vertex(&corner, 0)?;
        println!("  d = {d}: sin_d = {:.15}", sine.value);
    }

    // Flattening a tetrahedron drives the sine at every vertex to zero.
    println!("\nflattening: apex height eps over the base plane");
    for eps in [0.5, 0.1, 1e-3, 1e-6] {
        let flat = Simplex::from_rows(&[
            &[0.0, 0.0, 0.0],
            &[1.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0],
            &[0.3, 0.3, eps],
        ])?;
        let sine = sin_d_at_vertex(&flat, 0)?;
        println!("  eps = {eps:8.1e}: sin_3 at the base corner = {:.6e}", sine.value);
    }
    Ok(())
}
