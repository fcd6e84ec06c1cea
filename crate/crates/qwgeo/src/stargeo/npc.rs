//! Null phase curves: curves along which every third-order Bargmann invariant is
//! real and positive.

use super::geodesic::degenerate_mapping_unitary;
use crate::error::{invalid, QwError, Result};
use crate::geophase::PureCurve;
use crate::numkit::{inner, ComplexMatrix};
use crate::C64;

/// Three-level state of the dual pair `(cos η/2, e^{±iΓ} sin η/2)`, in the Dicke basis.
pub fn dual_pair_state(eta: f64, gamma: f64) -> Vec<C64> {
    let (s, c) = (eta / 2.0).sin_cos();
    let v = [c * c, 2f64.sqrt() * c * s * gamma.cos(), s * s];
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    v.iter().map(|x| C64::new(x / n, 0.0)).collect()
}

/// NPC built from a curve and its dual on the Bloch sphere. `eta`, `gamma` are sampled on
/// `params`; the boundary values must be η = 0 → 2 arccos α and Γ = 0 at both ends.
pub fn npc_from_dual_curves(params: &[f64], eta: &[f64], gamma: &[f64], alpha: f64) -> Result<PureCurve> {
    if params.len() != eta.len() || params.len() != gamma.len() || params.len() < 2 {
        return invalid("params, eta and gamma must have equal length >= 2");
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return invalid("alpha must lie in (0, 1]");
    }
    let n = params.len();
    let tol = 1e-9;
    if eta[0].abs() > tol || (eta[n - 1] - 2.0 * alpha.acos()).abs() > tol {
        return invalid("eta violates its boundary conditions");
    }
    if gamma[0].abs() > tol || gamma[n - 1].abs() > tol {
        return invalid("gamma must vanish at both ends");
    }
    let states = eta.iter().zip(gamma).map(|(&e, &g)| dual_pair_state(e, g)).collect();
    PureCurve::new(params.to_vec(), states)
}

/// Recovers (η, Γ ∈ [0, π]) from a three-level state in the degenerate frame. Fails if the
/// state is not of dual-pair form, i.e. not real up to a global phase with
/// non-negative outer components and `M² ≤ 2AC`.
pub fn dual_angles_from_state(psi: &[C64]) -> Result<(f64, f64)> {
    if psi.len() != 3 {
        return invalid("dual-pair states are 3-level");
    }
    let pivot = if psi[0].norm() >= psi[2].norm() { psi[0] } else { psi[2] };
    if pivot.norm() < 1e-14 {
        return invalid("state has vanishing outer components");
    }
    let ph = (pivot / pivot.norm()).conj();
    let v: Vec<C64> = psi.iter().map(|z| z * ph).collect();
    let tol = 1e-9;
    if v.iter().any(|z| z.im.abs() > tol) {
        return invalid("state is not real up to a global phase");
    }
    let (a, m, c) = (v[0].re, v[1].re, v[2].re);
    if a < -tol || c < -tol {
        return invalid("outer components must share a sign");
    }
    let (a, c) = (a.max(0.0), c.max(0.0));
    let eta = ((a - c) / (a + c)).clamp(-1.0, 1.0).acos();
    let gamma = if a * c <= 1e-300 {
        if m.abs() > tol {
            return invalid("middle component without outer support");
        }
        0.0
    } else {
        let cg = m / (2.0 * a * c).sqrt();
        if cg.abs() > 1.0 + tol {
            return invalid("M^2 > 2AC: no real Γ");
        }
        cg.clamp(-1.0, 1.0).acos()
    };
    Ok((eta, gamma))
}

fn g_curve_state(g: f64, s: f64, chi: f64) -> Vec<C64> {
    let r = (1.0 - g * g).max(0.0).sqrt();
    vec![C64::new(g * s.cos(), 0.0), C64::new(g * s.sin(), 0.0), C64::from_polar(r, chi)]
}

fn check_g(theta: f64, g: &dyn Fn(f64) -> f64) -> Result<()> {
    if !(theta > 0.0 && theta < std::f64::consts::FRAC_PI_2) {
        return invalid("theta must lie in (0, π/2)");
    }
    if (g(0.0) - 1.0).abs() > 1e-12 || (g(theta) - 1.0).abs() > 1e-12 {
        return invalid("g must equal 1 at both ends");
    }
    Ok(())
}

/// `(g cos s, g sin s, e^{iχ}√(1−g²))` on `[0, θ]`; χ = 0 is the first family.
pub fn null_phase_curve(theta: f64, chi: f64, g: impl Fn(f64) -> f64, samples: usize) -> Result<PureCurve> {
    check_g(theta, &g)?;
    let mut bad = None;
    let c = PureCurve::from_fn(0.0, theta, samples, |s| {
        let gv = g(s);
        if !(-1e-12..=1.0 + 1e-12).contains(&gv) {
            bad = Some(s);
        }
        g_curve_state(gv.clamp(0.0, 1.0), s, chi)
    })?;
    if let Some(s) = bad {
        return invalid(format!("g leaves [0, 1] at s = {}", s));
    }
    Ok(c)
}

/// The default profile `g(s) = cos[s(s−θ)]`.
pub fn default_g(theta: f64) -> impl Fn(f64) -> f64 {
    move |s| (s * (s - theta)).cos()
}

/// Dual-curve angles that reproduce the χ = 0 family after mapping into the degenerate
/// frame of the endpoints `(1,0,0)` and `(cos θ, sin θ, 0)`.
pub struct GCurveAngles {
    pub params: Vec<f64>,
    pub eta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub alpha: f64,
    /// Maps the original frame into the degenerate frame.
    pub mapping: ComplexMatrix,
}

pub fn npc_g_curve_angles(theta: f64, g: impl Fn(f64) -> f64, samples: usize) -> Result<GCurveAngles> {
    let curve = null_phase_curve(theta, 0.0, g, samples)?;
    let e1 = vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
    let e2 = vec![C64::new(theta.cos(), 0.0), C64::new(theta.sin(), 0.0), C64::new(0.0, 0.0)];
    let u = degenerate_mapping_unitary(&e1, &e2)?;
    let mut eta = Vec::with_capacity(samples);
    let mut gamma = Vec::with_capacity(samples);
    for (i, st) in curve.states().iter().enumerate() {
        let (e, gm) = dual_angles_from_state(&u.mul_vec(st))
            .map_err(|e| QwError::Numerical(format!("sample {}: {}", i, e)))?;
        eta.push(e);
        gamma.push(gm);
    }
    // pin the boundary values exactly
    let n = eta.len();
    let alpha = theta.cos().sqrt();
    eta[0] = 0.0;
    eta[n - 1] = 2.0 * alpha.acos();
    gamma[0] = 0.0;
    gamma[n - 1] = 0.0;
    Ok(GCurveAngles { params: curve.params().to_vec(), eta, gamma, alpha, mapping: u })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NpcReport {
    pub is_npc: bool,
    pub min_real: f64,
    pub max_abs_imag: f64,
    pub triples: usize,
}

fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Scans third-order invariants over all triples when `C(N,3) ≤ budget`, otherwise over
/// all triples of an evenly spaced sub-grid.
pub fn npc_check(curve: &PureCurve, budget: usize) -> Result<NpcReport> {
    let n = curve.len();
    if n < 3 {
        return invalid("need at least three samples");
    }
    let mut k = n;
    while k > 3 && choose3(k) > budget.max(1) {
        k -= 1;
    }
    let idx: Vec<usize> = if k == n { (0..n).collect() } else { (0..k).map(|i| i * (n - 1) / (k - 1)).collect() };
    let st = curve.states();
    let mut ov = vec![vec![C64::new(0.0, 0.0); k]; k];
    for a in 0..k {
        for b in a..k {
            let v = inner(&st[idx[a]], &st[idx[b]]);
            if v.norm() <= 1e-12 {
                return Err(QwError::Orthogonal(format!("samples {} and {} are orthogonal", idx[a], idx[b])));
            }
            ov[a][b] = v;
            ov[b][a] = v.conj();
        }
    }
    let mut min_real = f64::INFINITY;
    let mut max_abs_imag: f64 = 0.0;
    let mut count = 0;
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let d = ov[a][b] * ov[b][c] * ov[c][a];
                min_real = min_real.min(d.re);
                max_abs_imag = max_abs_imag.max(d.im.abs());
                count += 1;
            }
        }
    }
    Ok(NpcReport { is_npc: min_real > 1e-10 && max_abs_imag < 1e-9, min_real, max_abs_imag, triples: count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geophase::gp_curve;
    use crate::stargeo::{geodesic, state_to_stars};
    use std::f64::consts::PI;

    #[test]
    fn self_dual_curve_is_product_state() {
        let alpha: f64 = 0.8;
        let params: Vec<f64> = (0..51).map(|i| i as f64 / 50.0).collect();
        let eta: Vec<f64> = params.iter().map(|s| 2.0 * alpha.acos() * s).collect();
        let c = npc_from_dual_curves(&params, &eta, &vec![0.0; 51], alpha).unwrap();
        for (st, e) in c.states().iter().zip(&eta) {
            let stars = state_to_stars(st).unwrap();
            assert_eq!(stars.multiplicities, vec![2]);
            let b = crate::numkit::matrix::pauli::bloch(&stars.stars[0]);
            assert!(b[1].abs() < 1e-7 && (b[2] - e.cos()).abs() < 1e-7);
        }
        assert!(npc_check(&c, 5000).unwrap().is_npc);
    }

    #[test]
    fn g_curve_reproduced_componentwise() {
        let th = PI / 3.0;
        let ang = npc_g_curve_angles(th, default_g(th), 201).unwrap();
        let c = npc_from_dual_curves(&ang.params, &ang.eta, &ang.gamma, ang.alpha).unwrap();
        let back = ang.mapping.adjoint();
        let target = null_phase_curve(th, 0.0, default_g(th), 201).unwrap();
        for (a, b) in c.states().iter().zip(target.states()) {
            let v = back.mul_vec(a);
            for i in 0..3 {
                assert!((v[i] - b[i]).norm() < 1e-9);
            }
        }
        assert!(gp_curve(&c).unwrap().abs() < 1e-8);
        assert!(npc_check(&c, 20000).unwrap().is_npc);
    }

    #[test]
    fn chi_family_is_npc_but_not_dual_pair() {
        let th = PI / 3.0;
        let c = null_phase_curve(th, PI / 3.0, default_g(th), 101).unwrap();
        assert!(npc_check(&c, 20000).unwrap().is_npc);
        assert!(npc_g_curve_angles(th, default_g(th), 101).is_ok());
        let e1 = vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        let e2 = vec![C64::new(th.cos(), 0.0), C64::new(th.sin(), 0.0), C64::new(0.0, 0.0)];
        let u = degenerate_mapping_unitary(&e1, &e2).unwrap();
        let fails = c.states().iter().filter(|s| dual_angles_from_state(&u.mul_vec(s)).is_err()).count();
        assert!(fails > 50);
    }

    #[test]
    fn geodesic_is_npc_and_twisted_curve_is_not() {
        let p1 = vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        let p2 = vec![C64::new(0.6, 0.0), C64::new(0.5, 0.3), C64::new(0.2, -0.5)];
        assert!(npc_check(&geodesic(&p1, &p2, 40).unwrap(), 20000).unwrap().is_npc);
        let c = PureCurve::from_fn(0.0, 1.0, 20, |s| {
            vec![C64::new(1.0, 0.0), C64::from_polar(s, 3.0 * s), C64::from_polar(s * s, -2.0 * s)]
        })
        .unwrap();
        assert!(!npc_check(&c, 2000).unwrap().is_npc);
    }

    #[test]
    fn rejects_bad_boundaries() {
        let p = vec![0.0, 1.0];
        assert!(npc_from_dual_curves(&p, &[0.1, 1.0], &[0.0, 0.0], 0.5).is_err());
    }
}
