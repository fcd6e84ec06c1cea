// Chern numbers of the two-dimensional walk on a plaquette grid.

use qwgeo::topo::chern_fhs;
use qwgeo::walks::WalkSpec;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let points = [
        ("7pi/3, 7pi/3", 7.0 * PI / 3.0, 7.0 * PI / 3.0),
        ("2pi, 3pi", 2.0 * PI, 3.0 * PI),
        ("7pi/6, 7pi/6", 7.0 * PI / 6.0, 7.0 * PI / 6.0),
    ];
    for (label, t1, t2) in points {
        let c = chern_fhs(&WalkSpec::dtqw2d(4, 4, t1, t2, 0.0, 0.0), 48)?;
        println!("({}): C = {:+} (raw {:+.2e})", label, c.value, c.raw);
    }

    // loss along x drives a transition at fixed y gain
    for gx in [0.2, 0.5, 0.8] {
        let spec = WalkSpec::dtqw2d(4, 4, PI / 4.0, -3.0 * PI / 16.0, gx, 0.1);
        match chern_fhs(&spec, 48) {
            Ok(c) => println!("gamma_x = {:.1}: C = {:+}", gx, c.value),
            Err(e) => println!("gamma_x = {:.1}: {}", gx, e),
        }
    }

    match chern_fhs(&WalkSpec::dtqw2d(4, 4, 1.5 * PI, PI, 0.0, 0.0), 48) {
        Ok(c) => println!("(3pi/2, pi): C = {}", c.value),
        Err(e) => println!("(3pi/2, pi): {}", e),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
