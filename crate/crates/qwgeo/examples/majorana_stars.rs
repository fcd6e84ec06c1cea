// Majorana star decomposition of spin states and its inverse.

use qwgeo::numkit::matrix::pauli;
use qwgeo::stargeo::{coherent_state, state_to_stars, stars_to_state};
use qwgeo::C64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = coherent_state(C64::new(0.8, 0.0), C64::new(0.0, 0.6), 3);
    let stars = state_to_stars(&c)?;
    println!("spin-3/2 coherent state: multiplicities {:?}", stars.multiplicities);

    let psi: Vec<C64> = [(0.3, 0.1), (0.5, -0.2), (0.1, 0.6), (0.4, 0.2)].iter().map(|&(a, b)| C64::new(a, b)).collect();
    let nrm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let psi: Vec<C64> = psi.iter().map(|z| z / nrm).collect();
    let stars = state_to_stars(&psi)?;
    for s in &stars.stars {
        let b = pauli::bloch(s);
        println!("    star at ({:+.4}, {:+.4}, {:+.4})", b[0], b[1], b[2]);
    }
    let back = stars_to_state(&stars.stars)?;
    let fid = back.iter().zip(&psi).map(|(a, b)| a.conj() * b).sum::<C64>().norm();
    println!("round-trip fidelity {:.12}", fid);

    let north = vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
    let s = state_to_stars(&north)?;
    println!("(1,0,0): {} star(s) with multiplicities {:?}", s.stars.len(), s.multiplicities);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
