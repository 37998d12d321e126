//! The direction-net angle of a line tuple and its simplex counterpart.
//!
//! For unit vectors e_1..e_k the angle is
//!
//! ```text
//! theta = arccos( min over unit u of max_i |u . e_i| )
//! ```
//!
//! — the best worst-case alignment any direction u can achieve with the
//! tuple, treating each e_i as an undirected line.  The angle equals pi/2
//! exactly when the tuple is linearly dependent, so it doubles as a
//! quantitative rank measure.  For a simplex, the selection of d edges
//! (one per vertex, forming a spanning tree-like net) with the smallest
//! such angle gives a shape-quality measure that degrades only for truly
//! flat elements.

use std::f64::consts::FRAC_PI_2;

use nalgebra::DVector;
use simplex_angles::conditions::best_jamet_theta;
use simplex_angles::geometry::Simplex;
use simplex_angles::jamet::jamet_theta;
use simplex_angles::sine::UnitVectorTuple;

fn axis(d: usize, i: usize) -> DVector<f64> {
    DVector::from_fn(d, |r, _| if r == i { 1.0 } else { 0.0 })
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("orthonormal axes: theta = arccos(1/sqrt(d))");
    for d in 2..=6 {
        let tuple = UnitVectorTuple::new((0..d).map(|i| axis(d, i)).collect())?;
        let theta = jamet_theta(&tuple);
        let expected = (1.0 / (d as f64).sqrt()).acos();
        println!(
            "  d = {d}   theta = {theta:.12}   arccos(1/sqrt(d)) = {expected:.12}   \
             diff = {:.1e}",
            (theta - expected).abs()
        );
    }

    // A dependent tuple: the third line lies in the span of the first two,
    // so a direction orthogonal to that plane is orthogonal to all three
    // lines and the angle is exactly a right angle (no tolerance needed).
    let dependent = UnitVectorTuple::from_directions(vec![
        DVector::from_vec(vec![1.0, 0.0, 0.0]),
        DVector::from_vec(vec![0.0, 1.0, 0.0]),
        DVector::from_vec(vec![3.0, -2.0, 0.0]),
    ])?;
    let theta = jamet_theta(&dependent);
    println!();
    println!("coplanar triple in 3-space: theta = {theta:.17}");
    println!("  exactly pi/2: {}", theta == FRAC_PI_2);

    // Two lines phi apart: the best direction bisects them, giving
    // theta = pi/2 - phi/2.  Undirectedness matters: lines at 170 degrees
    // are really 10 degrees apart.
    println!();
    println!("two lines phi apart: theta = pi/2 - phi/2");
    for phi_deg in [10.0_f64, 60.0, 90.0, 170.0] {
        let phi = phi_deg.to_radians();
        let tuple = UnitVectorTuple::new(vec![
            DVector::from_vec(vec![1.0, 0.0]),
            DVector::from_vec(vec![phi.cos(), phi.sin()]),
        ])?;
        let theta = jamet_theta(&tuple);
        let folded = if phi > FRAC_PI_2 { std::f64::consts::PI - phi } else { phi };
        println!(
            "  phi = {phi_deg:>5.1} deg   theta = {:.6} deg   pi/2 - folded/2 = {:.6} deg",
            theta.to_degrees(),
            (FRAC_PI_2 - folded / 2.0).to_degrees()
        );
    }

    // On simplices: scan all selections of d edges covering the vertices
    // and keep the one with the smallest angle.  For a triangle with
    // largest angle gamma the best value is max(gamma, pi - gamma) / 2.
    println!();
    println!("triangles: best selection angle vs max(gamma, pi - gamma)/2");
    for (label, rows) in [
        (
            "equilateral",
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![0.5, 3.0_f64.sqrt() / 2.0],
            ],
        ),
        (
            "right isoceles",
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]],
        ),
        (
            "obtuse 150 deg",
            // interior angle at (1, 0) between the edges back to the origin
            // and on to the third vertex is 150 degrees
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![
                    1.0 + (30.0_f64).to_radians().cos(),
                    (30.0_f64).to_radians().sin(),
                ],
            ],
        ),
    ] {
        let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
        let s = Simplex::from_rows(&refs)?;
        let (theta, selection) = best_jamet_theta(&s)?;
        println!(
            "  {label:<15} theta = {:.4} deg   edges {:?}",
            theta.to_degrees(),
            selection.edges
        );
    }
    Ok(())
}
