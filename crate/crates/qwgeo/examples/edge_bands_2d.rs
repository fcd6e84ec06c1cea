// Edge branches of a 2D walk strip with a domain wall along y.

use qwgeo::topo::edge_bands_2d;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c1 = (7.0 * PI / 3.0, 7.0 * PI / 3.0);
    let c0 = (2.0 * PI, 3.0 * PI);
    for g in [0.0, 0.2] {
        let b = edge_bands_2d(41, 10, c1, c0, g, g, 8)?;
        println!(
            "gamma = {:.1}: {} gap states, {} wall-bound, gap windows ({:.3}, {:.3}), isolated = {}",
            g,
            b.in_gap,
            b.localized_in_gap,
            b.gap0,
            b.gap_pi,
            b.isolated()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
