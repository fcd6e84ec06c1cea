//! Uhlmann phase of a qubit evolving under `H = n·σ/2` with `n_y = 0`,
//! starting from `ρ₀ = (1 + rσ_z)/2`.

use crate::error::{invalid, Result};
use crate::numkit::matrix::pauli;
use crate::C64;
use std::f64::consts::FRAC_PI_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UhlmannPhase {
    /// Principal value of tan⁻¹, in (−π/2, π/2].
    pub phase: f64,
    /// The tangent argument sat on a pole; `phase` is its limit ±π/2.
    pub at_pole: bool,
}

fn check(r: f64, n: [f64; 3]) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return invalid("purity r must lie in [0, 1]");
    }
    if n[1].abs() > 1e-12 {
        return invalid("axis must have n_y = 0");
    }
    if ((n[0] * n[0] + n[2] * n[2]).sqrt() - 1.0).abs() > 1e-9 {
        return invalid("axis must be a unit vector");
    }
    if r * n[0].abs() >= 1.0 {
        return invalid("need r·|n_x| < 1");
    }
    Ok(())
}

/// `ñ` and `τ̃` of the ancilla Hamiltonian.
pub fn tilde_axis(r: f64, n: [f64; 3], tau: f64) -> ([f64; 3], f64) {
    let s = (1.0 - r * r * n[0] * n[0]).sqrt();
    ([(1.0 - r * r).sqrt() * n[0] / s, 0.0, n[2] / s], s * tau)
}

/// Closed form, multiplied through by cos(τ/2)cos(τ̃/2) so the tangent poles of
/// the individual factors never appear.
pub fn uhlmann_phase_qubit(r: f64, n: [f64; 3], tau: f64) -> Result<UhlmannPhase> {
    check(r, n)?;
    let (nt, taut) = tilde_axis(r, n, tau);
    let (s1, c1) = (tau / 2.0).sin_cos();
    let (s2, c2) = (taut / 2.0).sin_cos();
    let num = r * (nt[2] * s2 * c1 - n[2] * s1 * c2);
    let den = c1 * c2 + (n[2] * nt[2] + (1.0 - r * r).sqrt() * n[0] * nt[0]) * s1 * s2;
    if den.abs() < 1e-12 {
        let phase = if num == 0.0 { 0.0 } else { FRAC_PI_2 };
        return Ok(UhlmannPhase { phase, at_pole: num != 0.0 });
    }
    Ok(UhlmannPhase { phase: (num / den).atan(), at_pole: false })
}

/// Direct evaluation of `arg Σ_{kl} √(λ_kλ_l)⟨k|e^{−iτn·σ/2}|l⟩⟨l|e^{iτ̃ñ·σ/2}|k⟩`.
pub fn uhlmann_phase_numeric(r: f64, n: [f64; 3], tau: f64) -> Result<f64> {
    check(r, n)?;
    let (nt, taut) = tilde_axis(r, n, tau);
    let u = pauli::rotation(tau, n);
    let v = pauli::rotation(-taut, nt);
    let lam = [(1.0 + r) / 2.0, (1.0 - r) / 2.0];
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..2 {
        for l in 0..2 {
            sum += (lam[k] * lam[l]).sqrt() * u[(k, l)] * v[(l, k)];
        }
    }
    Ok(sum.arg())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geophase::angle_gap;
    use std::f64::consts::PI;

    fn axis(a: f64) -> [f64; 3] {
        [a.sin(), 0.0, a.cos()]
    }

    #[test]
    fn closed_form_matches_direct_sum() {
        for &r in &[0.1, 0.5, 0.9] {
            for &a in &[0.2, 0.9, 2.0] {
                for &tau in &[0.5, 2.0, 5.0] {
                    let c = uhlmann_phase_qubit(r, axis(a), tau).unwrap().phase;
                    let d = uhlmann_phase_numeric(r, axis(a), tau).unwrap();
                    assert!(angle_gap(c, d, PI) < 1e-10, "r={} a={} tau={}", r, a, tau);
                }
            }
        }
    }

    #[test]
    fn cyclic_case() {
        let (r, n) = (0.6, axis(0.7));
        let s = (1.0f64 - r * r * n[0] * n[0]).sqrt();
        let want = (r * n[2] / s * (PI * s).tan()).atan();
        let got = uhlmann_phase_qubit(r, n, 2.0 * PI).unwrap().phase;
        assert!(angle_gap(got, want, PI) < 1e-12);
    }

    #[test]
    fn pure_state_limit() {
        let n = axis(0.5);
        let tau: f64 = 1.3;
        let want = -(n[2] * (tau / 2.0).tan()).atan() + n[2] * tau / 2.0;
        let got = uhlmann_phase_qubit(1.0, n, tau).unwrap().phase;
        assert!(angle_gap(got, want, PI) < 1e-12);
    }

    #[test]
    fn zero_purity() {
        assert_eq!(uhlmann_phase_qubit(0.0, axis(0.4), 2.0).unwrap().phase, 0.0);
    }

    #[test]
    fn rejects_ny() {
        assert!(uhlmann_phase_qubit(0.5, [0.6, 0.8, 0.0], 1.0).is_err());
    }
}
