// Discrete geometric phases from Bargmann invariants, and the phase of a sampled curve.

use qwgeo::geophase::{bargmann, gp_curve, gp_discrete, qubit_from_bloch, PureCurve};
use qwgeo::C64;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = 0.5f64.sqrt();
    let triple = vec![
        vec![C64::new(s, 0.0), C64::new(s, 0.0)],
        vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        vec![C64::new(s, 0.0), C64::new(0.0, s)],
    ];
    println!("Bargmann invariant of x, z, y states: {:.6}", bargmann(&triple)?);
    println!("discrete phase: {:+.6} (pi/4 = {:.6})", gp_discrete(&triple)?, PI / 4.0);

    for th in [0.5, 1.0, PI / 2.0] {
        let circuit = PureCurve::from_fn(0.0, 2.0 * PI, 1001, |phi| {
            qubit_from_bloch([th.sin() * phi.cos(), th.sin() * phi.sin(), th.cos()])
        })?;
        println!("latitude circuit at theta = {:.3}: phase {:+.6}, -pi(1-cos) = {:+.6}", th, gp_curve(&circuit)?, -PI * (1.0 - th.cos()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
