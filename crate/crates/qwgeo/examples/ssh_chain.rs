// Tight-binding SSH chain: zero-energy end modes and the bulk winding number.

use qwgeo::topo::{ssh_reference, ssh_winding};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (v, w) in [(0.5, 1.0), (1.0, 0.5)] {
        let r = ssh_reference(v, w, 100, true, 64)?;
        let wind = ssh_winding(v, w, 401)?;
        println!("v = {}, w = {}: winding {:+.4}, {} near-zero modes", v, w, wind.value, r.near_zero(1e-6));
        for m in &r.zero_modes {
            println!("    |E| = {:.1e}, sublattice A weight {:.6}, center {:.1}", m.energy, m.weight_a, m.center);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
