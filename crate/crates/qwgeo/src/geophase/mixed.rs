//! Mixed-state geometric phases: the interferometric gauge-invariant functional
//! for unitary paths and the eigen-decomposition formula for non-unitary ones.

use super::{principal, qubit_from_bloch, transported_overlap};
use crate::error::{invalid, QwError, Result};
use crate::numkit::matrix::pauli;
use crate::numkit::{inner, ComplexMatrix};
use crate::C64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedPhase {
    /// Phase in (−π, π].
    pub phase: f64,
    /// Magnitude of the weighted sum whose argument is the phase.
    pub visibility: f64,
    /// Purity below 1e-6: the phase is reported as 0 because it is ill-defined.
    pub low_purity: bool,
}

/// Eigen-decomposition of a 2×2 density matrix: descending eigenvalues with unit eigenvectors.
fn eig_density2(rho: &ComplexMatrix) -> Result<([f64; 2], [Vec<C64>; 2], f64)> {
    if rho.rows() != 2 || rho.cols() != 2 {
        return invalid("density matrix must be 2x2");
    }
    if rho.max_abs_diff(&rho.adjoint()) > 1e-10 {
        return invalid("density matrix is not Hermitian");
    }
    let tr = rho.trace().re;
    if (tr - 1.0).abs() > 1e-12 {
        return invalid(format!("density matrix trace {} != 1", tr));
    }
    let r = [2.0 * rho[(0, 1)].re, -2.0 * rho[(0, 1)].im, (rho[(0, 0)] - rho[(1, 1)]).re];
    let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if rn > 1.0 + 2e-12 {
        return invalid("density matrix has a negative eigenvalue");
    }
    let p = [(1.0 + rn) / 2.0, (1.0 - rn) / 2.0];
    let (up, down) = if rn < 1e-12 {
        (vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)], vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)])
    } else {
        (qubit_from_bloch(r), qubit_from_bloch([-r[0], -r[1], -r[2]]))
    };
    Ok((p, [up, down], rn))
}

/// Density matrix with Bloch vector `r`.
pub fn density_from_bloch(r: [f64; 3]) -> ComplexMatrix {
    let n = pauli::dot([C64::new(r[0], 0.0), C64::new(r[1], 0.0), C64::new(r[2], 0.0)]);
    pauli::id().add(&n).scale(C64::new(0.5, 0.0))
}

/// Time-ordered 2×2 density matrices with branch-continuous eigenvectors.
#[derive(Debug, Clone)]
pub struct DensityTrajectory {
    pub times: Vec<f64>,
    pub rho: Vec<ComplexMatrix>,
    /// `p[i] = [p_+(τ_i), p_−(τ_i)]`, descending.
    pub p: Vec<[f64; 2]>,
    /// `phi[k][i]` = eigenvector k at time i; Re⟨φ_k(τ_i)|φ_k(τ_{i+1})⟩ > 0.
    pub phi: [Vec<Vec<C64>>; 2],
}

impl DensityTrajectory {
    pub fn new(times: Vec<f64>, rho: Vec<ComplexMatrix>) -> Result<Self> {
        if times.len() != rho.len() || times.len() < 2 {
            return invalid("trajectory needs at least two times with matching matrices");
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return invalid("times must be strictly ascending");
        }
        let mut p = Vec::with_capacity(times.len());
        let mut phi: [Vec<Vec<C64>>; 2] = [Vec::new(), Vec::new()];
        for (i, m) in rho.iter().enumerate() {
            let (pk, mut vk, rn) = eig_density2(m)?;
            if rn < 1e-12 && i > 0 {
                vk = [phi[0][i - 1].clone(), phi[1][i - 1].clone()];
            }
            for k in 0..2 {
                if i > 0 {
                    let ov = inner(&phi[k][i - 1], &vk[k]);
                    if ov.norm() > 0.0 {
                        let fix = (ov / ov.norm()).conj();
                        for z in vk[k].iter_mut() {
                            *z *= fix;
                        }
                    }
                }
                phi[k].push(vk[k].clone());
            }
            p.push(pk);
        }
        Ok(Self { times, rho, p, phi })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }
    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Non-unitary mixed-state phase:
/// `arg Σ_k √(p_k(0)p_k(T)) ⟨φ_k(0)|φ_k(T)⟩ e^{−∫⟨φ_k|φ̇_k⟩}`, dropping p_k(0) < 1e-12.
pub fn gp_mixed_nonunitary(traj: &DensityTrajectory) -> Result<MixedPhase> {
    let last = traj.len() - 1;
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..2 {
        let p0 = traj.p[0][k];
        if p0 < 1e-12 {
            continue;
        }
        let w = (p0 * traj.p[last][k].max(0.0)).sqrt();
        sum += w * transported_overlap(&traj.times, &traj.phi[k]);
    }
    if sum.norm() < 1e-14 {
        return Err(QwError::Numerical("all weights vanish; phase undefined".into()));
    }
    Ok(MixedPhase { phase: principal(sum.arg()), visibility: sum.norm(), low_purity: false })
}

/// Interferometric gauge-invariant functional for a sampled unitary path from `U(0) = 1`:
/// `arg Σ_k w_k⟨k|U(T)|k⟩ e^{−∫⟨k|U†U̇|k⟩dτ}`.
pub fn gp_mixed_unitary(rho0: &ComplexMatrix, times: &[f64], upath: &[ComplexMatrix]) -> Result<MixedPhase> {
    if times.len() != upath.len() || times.len() < 2 {
        return invalid("unitary path needs at least two samples with matching times");
    }
    if upath.iter().any(|u| u.rows() != 2 || u.cols() != 2) {
        return invalid("unitaries must be 2x2");
    }
    if upath[0].max_abs_diff(&pauli::id()) > 1e-10 {
        return invalid("U(0) must be the identity");
    }
    let (w, basis, r) = eig_density2(rho0)?;
    if r < 1e-6 {
        return Ok(MixedPhase { phase: 0.0, visibility: 0.0, low_purity: true });
    }
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..2 {
        if w[k] < 1e-12 {
            continue;
        }
        let traj: Vec<Vec<C64>> = upath.iter().map(|u| u.mul_vec(&basis[k])).collect();
        sum += w[k] * transported_overlap(times, &traj);
    }
    if sum.norm() < 1e-14 {
        return Err(QwError::Numerical("zero visibility; phase undefined".into()));
    }
    Ok(MixedPhase { phase: principal(sum.arg()), visibility: sum.norm(), low_purity: false })
}

/// One full precession `U(t) = e^{−iσ_z t/2}`, t ∈ [0, 2π], and the initial state of
/// purity `r` whose Bloch vector has colatitude `theta`.
pub fn precession_path(r: f64, theta: f64, samples: usize) -> (ComplexMatrix, Vec<f64>, Vec<ComplexMatrix>) {
    let rho0 = density_from_bloch([r * theta.sin(), 0.0, r * theta.cos()]);
    let times: Vec<f64> = (0..samples).map(|i| 2.0 * PI * i as f64 / (samples - 1) as f64).collect();
    let us = times.iter().map(|&t| pauli::rotation(t, [0.0, 0.0, 1.0])).collect();
    (rho0, times, us)
}

/// `arg[−(cos(π cosθ) + i r sin(π cosθ))]`, the interferometric phase of one precession.
pub fn precession_gp_interferometric(r: f64, theta: f64) -> f64 {
    let x = PI * theta.cos();
    principal((-C64::new(x.cos(), r * x.sin())).arg())
}

/// `tan⁻¹[r tan(π cosθ)]`; agrees with the interferometric form modulo π.
pub fn precession_gp_closed(r: f64, theta: f64) -> f64 {
    (r * (PI * theta.cos()).tan()).atan()
}

/// Dephasing qubit: azimuthal precession at rate `eta`, transverse Bloch component
/// decaying as e^{−Λt}, sampled over one period 2π/η.
pub fn dephasing_trajectory(theta0: f64, eta: f64, lambda: f64, samples: usize) -> Result<DensityTrajectory> {
    if !(eta > 0.0) || lambda < 0.0 || samples < 2 {
        return invalid("need eta > 0, lambda >= 0 and at least two samples");
    }
    let t_end = 2.0 * PI / eta;
    let times: Vec<f64> = (0..samples).map(|i| t_end * i as f64 / (samples - 1) as f64).collect();
    let rho = times
        .iter()
        .map(|&t| {
            let a = theta0.sin() * (-lambda * t).exp();
            density_from_bloch([a * (eta * t).cos(), a * (eta * t).sin(), theta0.cos()])
        })
        .collect();
    DensityTrajectory::new(times, rho)
}

/// Closed form of the dephasing-qubit phase over one period:
/// `−(η/2)[T − sgn(cosθ₀)(asinh(e^{ΛT}|cotθ₀|) − asinh(|cotθ₀|))/Λ]`, T = 2π/η.
pub fn tong_dephasing_exact(theta0: f64, eta: f64, lambda: f64) -> f64 {
    let t = 2.0 * PI / eta;
    let c = theta0.cos();
    let cot = (c / theta0.sin()).abs();
    let integral = if lambda == 0.0 {
        c.abs() * t
    } else {
        (((lambda * t).exp() * cot).asinh() - cot.asinh()) / lambda
    };
    let signed = if c >= 0.0 { integral } else { -integral };
    principal(-(eta / 2.0) * (t - signed))
}

/// First-order expansion `−π(1−cosθ₀) + π² cosθ₀ sin²θ₀ (Λ/η)`.
pub fn tong_dephasing_first_order(theta0: f64, ratio: f64) -> f64 {
    -PI * (1.0 - theta0.cos()) + PI * PI * theta0.cos() * theta0.sin().powi(2) * ratio
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geophase::{angle_gap, gp_curve, PureCurve};

    #[test]
    fn pure_state_precession_gives_half_solid_angle() {
        let th: f64 = 0.8;
        let (rho0, t, u) = precession_path(1.0, th, 2001);
        let g = gp_mixed_unitary(&rho0, &t, &u).unwrap().phase;
        assert!(angle_gap(g, -PI * (1.0 - th.cos()), PI) < 1e-9);
    }

    #[test]
    fn quarter_pi_value() {
        let v = precession_gp_interferometric(0.5, PI / 4.0);
        assert!((v + 0.581).abs() < 1e-3);
        assert!((precession_gp_closed(0.5, PI / 4.0) - v).abs() < 1e-12);
        let (rho0, t, u) = precession_path(0.5, PI / 4.0, 2001);
        assert!((gp_mixed_unitary(&rho0, &t, &u).unwrap().phase - v).abs() < 1e-9);
    }

    #[test]
    fn equatorial_is_zero() {
        assert!(precession_gp_closed(0.4, PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn maximally_mixed_is_flagged() {
        let (rho0, t, u) = precession_path(0.0, 1.0, 11);
        let r = gp_mixed_unitary(&rho0, &t, &u).unwrap();
        assert!(r.low_purity && r.phase == 0.0);
    }

    #[test]
    fn rank_one_matches_pure_curve() {
        let th: f64 = 1.1;
        let traj = dephasing_trajectory(th, 1.0, 0.0, 2001).unwrap();
        let g = gp_mixed_nonunitary(&traj).unwrap().phase;
        let curve = PureCurve::new(traj.times.clone(), traj.phi[0].clone()).unwrap();
        assert!((g - gp_curve(&curve).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn dephasing_equator_is_minus_pi() {
        let g = tong_dephasing_exact(PI / 2.0, 1.0, 0.01);
        assert!(angle_gap(g, -PI, 2.0 * PI) < 1e-12);
    }

    #[test]
    fn dephasing_trajectory_matches_exact() {
        let traj = dephasing_trajectory(PI / 3.0, 1.0, 0.01, 4001).unwrap();
        let g = gp_mixed_nonunitary(&traj).unwrap().phase;
        assert!((g - tong_dephasing_exact(PI / 3.0, 1.0, 0.01)).abs() < 1e-9);
        assert!((tong_dephasing_first_order(PI / 3.0, 0.01) + 1.5338).abs() < 1e-4);
    }

    #[test]
    fn trajectory_rejects_bad_trace() {
        let m = ComplexMatrix::identity(2);
        assert!(DensityTrajectory::new(vec![0.0, 1.0], vec![m.clone(), m]).is_err());
    }
}
