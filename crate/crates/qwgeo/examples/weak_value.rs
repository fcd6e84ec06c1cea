// Geometric phase carried by a weak value, read directly and through pointer shifts.

use qwgeo::geophase::weak::bloch_projector;
use qwgeo::geophase::{gp_from_pointer, qubit_from_bloch, strackee_solid_angle, weak_value};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = [1.0, 0.0, 0.0];
    let b = [0.0, 0.6, 0.8];
    let c = [0.0, -1.0, 0.0];
    let z = weak_value(&qubit_from_bloch(a), &qubit_from_bloch(c), &bloch_projector(b))?;
    let omega = strackee_solid_angle(a, b, c);
    println!("weak value of the middle projector: {:.6}", z);
    println!("arg = {:+.6}, half solid angle = {:+.6}", z.arg(), -omega / 2.0);

    let (kappa, sigma, hbar) = (1e-3, 0.5, 1.0);
    let dq = kappa * sigma * sigma * z.im;
    let dp = -hbar * kappa * z.re;
    println!("from pointer shifts (dq = {:.3e}, dp = {:.3e}): {:+.6}", dq, dp, gp_from_pointer(dq, dp, sigma, hbar)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
