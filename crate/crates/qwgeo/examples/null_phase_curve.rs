// Null phase curves: built from dual star curves, and detected by their Bargmann triples.

use qwgeo::geophase::{gp_curve, PureCurve};
use qwgeo::stargeo::{default_g, npc_check, npc_from_dual_curves, npc_g_curve_angles, null_phase_curve};
use qwgeo::C64;
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let th = PI / 3.0;
    let direct = null_phase_curve(th, 0.0, default_g(th), 101)?;
    let ang = npc_g_curve_angles(th, default_g(th), 101)?;
    let dual = npc_from_dual_curves(&ang.params, &ang.eta, &ang.gamma, ang.alpha)?;
    let back = ang.mapping.adjoint();
    let err = dual
        .states()
        .iter()
        .zip(direct.states())
        .flat_map(|(a, b)| back.mul_vec(a).into_iter().zip(b.iter().copied()).map(|(x, y)| (x - y).norm()).collect::<Vec<_>>())
        .fold(0.0, f64::max);
    println!("dual-curve construction vs explicit curve: max component error {:.1e}", err);
    println!("phase along it: {:+.1e}", gp_curve(&dual)?);

    let rotated = null_phase_curve(th, PI / 3.0, default_g(th), 101)?;
    let twisted = PureCurve::from_fn(0.0, 1.0, 30, |s| {
        vec![C64::new(1.0, 0.0), C64::from_polar(s, 3.0 * s), C64::from_polar(s * s, -2.0 * s)]
    })?;
    for (label, c) in [("explicit", &direct), ("chi-rotated", &rotated), ("twisted", &twisted)] {
        let r = npc_check(c, 5000)?;
        println!("{:>11}: NPC = {}, min Re = {:.3e}, max |Im| = {:.1e} over {} triples", label, r.is_npc, r.min_real, r.max_abs_imag, r.triples);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
