// Geodesics in n-level state space and their star trajectories on the Bloch sphere.

use qwgeo::geophase::gp_curve;
use qwgeo::stargeo::{degenerate_endpoints, geodesic, geodesic_decompose};
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let th = PI / 3.0;
    for n in 3..=6 {
        let (p1, p2) = degenerate_endpoints(n, th)?;
        let g = geodesic(&p1, &p2, 201)?;
        let d = geodesic_decompose(&p1, &p2, 301)?;
        println!(
            "n = {}: phase along geodesic {:+.1e}, {} star curves, circle residual {:.1e}, dual pairs {:?}, great circle {:?}",
            n,
            gp_curve(&g)?,
            d.curves.len(),
            d.max_circle_residual(),
            d.pairing,
            d.great_circle
        );
        let radii: Vec<String> = d.radii_formula.iter().map(|r| format!("{:.4}", r)).collect();
        println!("    radii [{}]", radii.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
