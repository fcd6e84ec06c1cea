// Bound states at the walls between two topologically distinct domains.

use qwgeo::topo::{edge_spectrum_1d, two_domain_ssqw};
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inner = (-3.0 * PI / 8.0, 5.0 * PI / 8.0);
    let outer = (-3.0 * PI / 8.0, PI / 4.0);
    for g in [0.0, 0.1, 0.2, 0.25] {
        let s = edge_spectrum_1d(&two_domain_ssqw(201, 50, inner, outer, g), 50)?;
        println!(
            "gamma = {:.2}: {} mid-gap, {} wall-bound, clean = {}",
            g,
            s.midgap_count(),
            s.edge_states().len(),
            s.is_clean()
        );
        for &i in s.edge_states().iter().take(2) {
            let l = s.localization[i];
            println!("    E arg = {:+.2e}  IPR = {:.3}  wall weight = {:.4}", s.eigenvalues[i].arg(), l.ipr, l.wall_weight);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
