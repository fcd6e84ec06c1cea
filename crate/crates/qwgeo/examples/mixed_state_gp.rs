// Mixed-state phases: unitary precession, a dephasing qubit, and the Uhlmann holonomy.

use qwgeo::geophase::{
    dephasing_trajectory, gp_mixed_nonunitary, gp_mixed_unitary, precession_gp_closed, precession_path,
    tong_dephasing_exact, tong_dephasing_first_order, uhlmann_phase_numeric, uhlmann_phase_qubit,
};
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for r in [1.0, 0.7, 0.3] {
        let th = PI / 4.0;
        let (rho0, t, u) = precession_path(r, th, 2001);
        let m = gp_mixed_unitary(&rho0, &t, &u)?;
        println!("precession r = {}: path {:+.6}, closed form {:+.6}, visibility {:.4}", r, m.phase, precession_gp_closed(r, th), m.visibility);
    }

    let th0 = PI / 3.0;
    for ratio in [0.0, 0.01, 0.05] {
        let traj = dephasing_trajectory(th0, 1.0, ratio, 4001)?;
        let m = gp_mixed_nonunitary(&traj)?;
        println!(
            "dephasing L/eta = {:.2}: trajectory {:+.6}, exact {:+.6}, first order {:+.6}",
            ratio,
            m.phase,
            tong_dephasing_exact(th0, 1.0, ratio),
            tong_dephasing_first_order(th0, ratio)
        );
    }

    let n = [0.6, 0.0, 0.8];
    for tau in [0.5, PI, 2.0 * PI] {
        let c = uhlmann_phase_qubit(0.5, n, tau)?;
        println!("Uhlmann r = 0.5, tau = {:.3}: closed {:+.6}, direct {:+.6}", tau, c.phase, uhlmann_phase_numeric(0.5, n, tau)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
