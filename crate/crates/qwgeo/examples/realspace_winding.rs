// Winding number read out from a lossy real-space walk with partial measurements.

use qwgeo::topo::winding_realspace;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t2 = PI / 4.0;
    for j in 0..9 {
        let t1 = -PI + 2.0 * PI * (j as f64 + 0.5) / 9.0;
        let r = winding_realspace(t1, t2, 0.5, 200)?;
        println!("theta1 = {:+.3}: W = {:+.4} (survival {:.1e})", t1, r.value, r.survival);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
