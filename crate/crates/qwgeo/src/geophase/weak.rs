//! Weak values and their link to the three-vertex geometric phase.

use super::{cross3, dot3, qubit_from_bloch};
use crate::error::{invalid, QwError, Result};
use crate::numkit::matrix::pauli;
use crate::numkit::{inner, ComplexMatrix};
use crate::C64;

/// `A_w = ⟨post|A|pre⟩/⟨post|pre⟩`.
pub fn weak_value(pre: &[C64], post: &[C64], obs: &ComplexMatrix) -> Result<C64> {
    if pre.len() != post.len() || obs.rows() != pre.len() || obs.cols() != pre.len() {
        return invalid("dimension mismatch between states and observable");
    }
    let den = inner(post, pre);
    if den.norm() <= 1e-12 {
        return Err(QwError::Orthogonal("pre- and post-selected states are orthogonal".into()));
    }
    Ok(inner(post, &obs.mul_vec(pre)) / den)
}

/// Solid angle of the geodesic triangle (a, b, c) on the unit sphere, signed by orientation:
/// `2·atan2(a·(b×c), 1 + a·b + b·c + c·a)`.
pub fn strackee_solid_angle(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    2.0 * dot3(a, cross3(b, c)).atan2(1.0 + dot3(a, b) + dot3(b, c) + dot3(c, a))
}

/// Projector `(1 + k·σ)/2`.
pub fn bloch_projector(k: [f64; 3]) -> ComplexMatrix {
    super::mixed::density_from_bloch(k)
}

/// Phase read from pointer shifts: `atan2(ħ·δq, −σ²·δp)`.
///
/// For a pointer displaced by a weak value `z = a + ib` (δq = κσ²b, δp = −ħκa) this is
/// `arg z`, which coincides with `−tan⁻¹(ħδq/(σ²δp))` modulo π.
pub fn gp_from_pointer(dq: f64, dp: f64, sigma: f64, hbar: f64) -> Result<f64> {
    if dq == 0.0 && dp == 0.0 {
        return invalid("both pointer shifts vanish; phase undefined");
    }
    if !(sigma > 0.0 && hbar > 0.0) {
        return invalid("sigma and hbar must be positive");
    }
    Ok((hbar * dq).atan2(-sigma * sigma * dp))
}

fn expect(psi: &[C64], m: &ComplexMatrix) -> f64 {
    let n: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    inner(psi, &m.mul_vec(psi)).re / n
}

fn sigma_dot(v: [f64; 3]) -> ComplexMatrix {
    pauli::dot([C64::new(v[0], 0.0), C64::new(v[1], 0.0), C64::new(v[2], 0.0)])
}

/// Qubit pointer with Bloch vector `m`, coupled along `n` with strength `kappa` to a
/// system of weak value `z`: first-order readout of ⟨q·σ⟩,
/// `q·m + 2κx (q×n)·m + 2κy[q·n − (n·m)(q·m)]`.
pub fn qubit_pointer_first_order(z: C64, kappa: f64, n: [f64; 3], m: [f64; 3], q: [f64; 3]) -> f64 {
    dot3(q, m) + 2.0 * kappa * z.re * dot3(cross3(q, n), m) + 2.0 * kappa * z.im * (dot3(q, n) - dot3(n, m) * dot3(q, m))
}

/// Same readout from the unexpanded pointer state `(1 − iκz n·σ)|m⟩`.
pub fn qubit_pointer_exact(z: C64, kappa: f64, n: [f64; 3], m: [f64; 3], q: [f64; 3]) -> f64 {
    let phi = qubit_from_bloch(m);
    let ns = sigma_dot(n);
    let nphi = ns.mul_vec(&phi);
    let fin: Vec<C64> = phi.iter().zip(&nphi).map(|(a, b)| a - C64::new(0.0, kappa) * z * b).collect();
    expect(&fin, &sigma_dot(q))
}

/// Inverts the two orthogonal readouts: with `m ⊥ n`, reading along `n×m` gives 2κx and
/// along `n` gives 2κy, so `z = (r₁ + i r₂)/(2κ)`.
pub fn weak_value_from_qubit_pointer(r_nxm: f64, r_n: f64, kappa: f64) -> C64 {
    C64::new(r_nxm, r_n) / (2.0 * kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geophase::bargmann;

    fn unit(v: [f64; 3]) -> [f64; 3] {
        let n = dot3(v, v).sqrt();
        [v[0] / n, v[1] / n, v[2] / n]
    }

    #[test]
    fn eigenstate_weak_value_is_eigenvalue() {
        let z = pauli::z();
        let up = vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
        assert!((weak_value(&up, &up, &z).unwrap() - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn projector_weak_value_phase_is_minus_half_solid_angle() {
        let n = unit([0.3, -0.2, 0.9]);
        let m = unit([0.5, 0.6, 0.2]);
        let k = unit([-0.1, 0.8, 0.5]);
        let aw = weak_value(&qubit_from_bloch(n), &qubit_from_bloch(m), &bloch_projector(k)).unwrap();
        let omega = strackee_solid_angle(m, n, k);
        assert!((aw.arg() + omega / 2.0).abs() < 1e-12);
        // same phase as the Bargmann invariant (post, projector, pre)
        let d = bargmann(&[qubit_from_bloch(m), qubit_from_bloch(k), qubit_from_bloch(n)]).unwrap();
        assert!((aw.arg() - d.arg()).abs() < 1e-12);
    }

    #[test]
    fn pointer_recovers_weak_value_phase() {
        let z = C64::new(-0.4, 0.7);
        let (kappa, sigma, hbar) = (1e-3, 0.8, 1.0);
        let dq = kappa * sigma * sigma * z.im;
        let dp = -hbar * kappa * z.re;
        assert!((gp_from_pointer(dq, dp, sigma, hbar).unwrap() - z.arg()).abs() < 1e-12);
        assert_eq!(gp_from_pointer(0.0, -1.0, sigma, hbar).unwrap(), 0.0);
        assert!(gp_from_pointer(0.0, 0.0, sigma, hbar).is_err());
    }

    #[test]
    fn qubit_pointer_first_order_matches_exact() {
        let z = C64::new(0.3, -0.5);
        let n = unit([0.2, 0.4, 0.9]);
        let m = unit([0.7, -0.3, 0.1]);
        let q = unit([-0.5, 0.5, 0.2]);
        let k = 1e-5;
        let a = qubit_pointer_first_order(z, k, n, m, q);
        let b = qubit_pointer_exact(z, k, n, m, q);
        assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn orthogonal_pointer_readouts() {
        let z = C64::new(0.8, 0.25);
        let n = [0.0, 0.0, 1.0];
        let m = [1.0, 0.0, 0.0];
        let k = 1e-6;
        let r1 = qubit_pointer_exact(z, k, n, m, cross3(n, m));
        let r2 = qubit_pointer_exact(z, k, n, m, n);
        let back = weak_value_from_qubit_pointer(r1, r2, k);
        assert!((back - z).norm() < 1e-5);
    }
}
