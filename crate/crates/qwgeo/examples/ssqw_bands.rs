// Quasi-energy bands of the split-step walk, the critical gain and the PT test.

use qwgeo::walks::{band_grid, gamma_critical, pt_check, WalkSpec};
use std::f64::consts::PI;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (t1, t2) = (-3.0 * PI / 8.0, PI / 4.0);
    let gc = gamma_critical(t1, t2)?;
    println!("critical gain at (-3pi/8, pi/4): {:.4} (real: {})", gc.value.re, gc.is_real);

    for g in [0.0, 0.5 * gc.value.re, 1.5 * gc.value.re] {
        let spec = WalkSpec::ssqw1d(8, t1, t2, g);
        let grid = band_grid(&spec, 201)?;
        let max_im = grid.points.iter().map(|p| p.energy.im.abs()).fold(0.0, f64::max);
        let pt = pt_check(&spec, 101)?;
        println!(
            "gain {:.4}: max |Im E| = {:.3e}, closed vs numeric {:.1e}, PT relation holds: {}",
            g,
            max_im,
            grid.max_closed_vs_numeric(),
            pt.all
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
