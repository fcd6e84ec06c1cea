// Momentum-space winding number under growing gain/loss.

use qwgeo::topo::winding_momentum;
use qwgeo::walks::{gamma_critical, WalkSpec};
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (t1, t2) = (-3.0 * PI / 8.0, PI / 8.0);
    let gc = gamma_critical(t1, t2)?.value.re;
    println!("gamma_c = {:.4}", gc);
    for f in [0.0, 0.5, 0.9, 1.5, 3.0] {
        let w = winding_momentum(&WalkSpec::ssqw1d(4, t1, t2, f * gc), 2001)?;
        println!("gamma = {:.2} gamma_c: W = {:+.6}", f, w.value);
    }
    let trivial = winding_momentum(&WalkSpec::ssqw1d(4, t1, 5.0 * PI / 8.0, 0.0), 2001)?;
    println!("(-3pi/8, 5pi/8), unitary: W = {:+.6}", trivial.value);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
