// Geometric phase of a rotating atom in a lossy cavity: inertial vs non-inertial parts.

use qwgeo::cavity::{eta_for_a_scale, gp_regimes, lindblad, CavityParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut high = CavityParams::high_regime_reference();
    high.eta = eta_for_a_scale(&high, 1e-16)?;
    let mut low = CavityParams::low_regime_reference();
    low.eta = eta_for_a_scale(&low, 1e-21)?;

    for (label, p) in [("high", &mut high), ("low", &mut low)] {
        let ab = lindblad(p)?;
        println!(
            "{} regime: A = {:.3e}, B = {:.3e}, non-inertial/inertial emission {:.3e}",
            label,
            ab.a(),
            ab.b(),
            ab.rates.down_noninertial / ab.rates.down_inertial
        );
        for n in [1e2, 1e3, 1e4, 1e5] {
            p.n = n;
            let g = gp_regimes(p)?;
            println!("    n = {:>6}: inertial {:+.3e}  non-inertial {:+.3e}", n, g.inertial, g.noninertial);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
