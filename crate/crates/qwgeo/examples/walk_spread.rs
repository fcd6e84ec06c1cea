// Ballistic spreading of a coined walk and the norm behaviour of a lossy split-step walk.

use qwgeo::walks::{classify_norm, evolve, variance, StateVector, WalkSpec};
use qwgeo::C64;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = 0.5f64.sqrt();
    let sym = [C64::new(s, 0.0), C64::new(0.0, s)];

    let spec = WalkSpec::dtqw1d(401, PI / 2.0);
    let s0 = StateVector::localized(&spec, &sym)?;
    for t in [25, 50, 100, 150] {
        let ev = evolve(&spec, &s0, t)?;
        let var = variance(&ev.state.positions(), &ev.state.distribution())?;
        println!("t = {:3}  variance = {:9.3}  variance/t^2 = {:.4}", t, var, var / (t * t) as f64);
    }

    let lossy = WalkSpec::ssqw1d(401, -3.0 * PI / 8.0, PI / 4.0, 0.15);
    let ev = evolve(&lossy, &StateVector::localized(&lossy, &sym)?, 150)?;
    let fit = classify_norm(&ev.norms)?;
    println!("gain 0.15, 150 steps: final norm {:.6}, regime {:?}", ev.norms.last().unwrap(), fit.regime);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
