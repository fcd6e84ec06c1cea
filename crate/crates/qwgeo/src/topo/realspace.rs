//! Winding number from the mean displacement of a walker that is repeatedly
//! monitored for arrival on one chiral sublattice.

use crate::error::{invalid, Result};
use crate::walks::{position, Stepper};
use crate::C64;
use std::f64::consts::FRAC_1_SQRT_2;

#[derive(Debug, Clone, PartialEq)]
pub struct RealspaceWinding {
    /// Accumulated mean displacement of detection events.
    pub value: f64,
    /// Probability never detected after the last step.
    pub survival: f64,
    pub steps: usize,
}

/// Chiral sublattices of Γ = σ_x: A = |−⟩, B = |+⟩. Starting on A at the origin, each
/// step applies the time-symmetric walk, records `p_M Σ_x x|⟨x,B|ψ⟩|²`, then applies
/// the partial projector `P_A + √(1−p_M) P_B`.
pub fn winding_realspace(theta1: f64, theta2: f64, pm: f64, steps: usize) -> Result<RealspaceWinding> {
    if !(pm > 0.0 && pm <= 1.0) {
        return invalid("p_M must lie in (0, 1]");
    }
    let n = 2 * steps + 5;
    let stepper = Stepper::ssqw_symmetric(n, theta1, theta2)?;
    let s = FRAC_1_SQRT_2;
    let mut psi = vec![C64::new(0.0, 0.0); 2 * n];
    let origin = n / 2;
    psi[2 * origin] = C64::new(s, 0.0);
    psi[2 * origin + 1] = C64::new(-s, 0.0);
    let keep = (1.0 - pm).sqrt();
    let mut scratch = Vec::with_capacity(psi.len());
    let mut value = 0.0;
    for _ in 0..steps {
        stepper.apply(&mut psi, &mut scratch);
        for (i, cell) in psi.chunks_mut(2).enumerate() {
            let b = (cell[0] + cell[1]) * s;
            let a = (cell[0] - cell[1]) * s;
            value += pm * position(i, n) as f64 * b.norm_sqr();
            let b = b * keep;
            cell[0] = (a + b) * s;
            cell[1] = (b - a) * s;
        }
    }
    let survival = psi.iter().map(|z| z.norm_sqr()).sum();
    Ok(RealspaceWinding { value: -value, survival, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::winding_momentum;
    use crate::walks::WalkSpec;
    use std::f64::consts::PI;

    #[test]
    fn plateaus() {
        let one = winding_realspace(-3.0 * PI / 8.0, PI / 4.0, 0.5, 200).unwrap();
        let zero = winding_realspace(-3.0 * PI / 8.0, 5.0 * PI / 8.0, 0.5, 200).unwrap();
        assert!((one.value - 1.0).abs() < 0.05 && zero.value.abs() < 0.05);
        assert!(one.survival < 1e-6);
    }

    #[test]
    fn sweep_tracks_momentum_invariant() {
        let t2 = PI / 4.0;
        for j in 0..24 {
            let t1 = -PI + 2.0 * PI * (j as f64 + 0.37) / 24.0;
            let Ok(w) = winding_momentum(&WalkSpec::ssqw1d(4, t1, t2, 0.0), 501) else { continue };
            let r = winding_realspace(t1, t2, 0.5, 200).unwrap();
            if r.survival < 1e-3 {
                assert!((r.value - w.value).abs() < 0.05, "θ₁ = {}: {} vs {}", t1, r.value, w.value);
            }
        }
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(winding_realspace(0.1, 0.2, 0.0, 10).is_err());
        assert!(winding_realspace(0.1, 0.2, 1.5, 10).is_err());
    }
}
