//! Su-Schrieffer-Heeger chain as a Hermitian reference model.

use super::winding::{smooth_loop, winding_of_loop, ChiralAxis, WindingResult};
use crate::error::{invalid, QwError, Result};
use crate::numkit::{eig_dense, eig_values, ComplexMatrix};
use crate::C64;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct ZeroMode {
    pub energy: f64,
    /// Amplitudes on sites 0..2N, A sites even, B sites odd.
    pub vector: Vec<C64>,
    pub weight_a: f64,
    /// Center of mass in unit cells.
    pub center: f64,
}

#[derive(Debug, Clone)]
pub struct SshReport {
    pub ks: Vec<f64>,
    /// Upper band `E₊(k) = √(v²+w²+2vw cos k)`; the lower band is its negative.
    pub dispersion: Vec<f64>,
    /// Bloch vector `(v + w cos k, w sin k)`.
    pub dvector: Vec<[f64; 2]>,
    /// Finite-chain spectrum, ascending.
    pub spectrum: Vec<f64>,
    pub zero_modes: Vec<ZeroMode>,
}

impl SshReport {
    /// Eigenvalues with |E| below `tol`.
    pub fn near_zero(&self, tol: f64) -> usize {
        self.spectrum.iter().filter(|e| e.abs() < tol).count()
    }
}

fn hamiltonian(v: f64, w: f64, cells: usize, open: bool) -> ComplexMatrix {
    let n = 2 * cells;
    let mut h = ComplexMatrix::zeros(n, n);
    for j in 0..cells {
        h[(2 * j, 2 * j + 1)] = C64::new(v, 0.0);
        h[(2 * j + 1, 2 * j)] = C64::new(v, 0.0);
        if j + 1 < cells || !open {
            let a = (2 * j + 2) % n;
            h[(2 * j + 1, a)] = C64::new(w, 0.0);
            h[(a, 2 * j + 1)] = C64::new(w, 0.0);
        }
    }
    h
}

/// Sublattice block of H²: Q†Q on A sites (`b = false`) or QQ† on B sites.
fn squared_block(h: &ComplexMatrix, b: bool) -> ComplexMatrix {
    let cells = h.rows() / 2;
    let off = usize::from(b);
    let mut m = ComplexMatrix::zeros(cells, cells);
    for i in 0..cells {
        for j in 0..cells {
            m[(i, j)] = (0..h.rows()).map(|k| h[(2 * i + off, k)] * h[(k, 2 * j + off)]).sum();
        }
    }
    m
}

pub fn ssh_reference(v: f64, w: f64, cells: usize, open: bool, kcount: usize) -> Result<SshReport> {
    if !(v >= 0.0 && w >= 0.0 && v.is_finite() && w.is_finite()) {
        return invalid("hoppings must be finite and non-negative");
    }
    if cells < 2 || kcount < 2 {
        return invalid("need at least two cells and two k points");
    }
    let ks: Vec<f64> = (0..kcount).map(|j| -PI + 2.0 * PI * j as f64 / kcount as f64).collect();
    let dvector: Vec<[f64; 2]> = ks.iter().map(|k| [v + w * k.cos(), w * k.sin()]).collect();
    let dispersion = dvector.iter().map(|d| d[0].hypot(d[1])).collect();

    let h = hamiltonian(v, w, cells, open);
    let mut spectrum: Vec<f64> = eig_values(&h)?.iter().map(|z| z.re).collect();
    spectrum.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Zero modes of a chiral chain are sublattice polarized; H² is block diagonal in
    // the sublattice basis, so each block yields them directly.
    let mut zero_modes = Vec::new();
    for b in [false, true] {
        let e = eig_dense(&squared_block(&h, b))?;
        for (i, lam) in e.values.iter().enumerate() {
            if lam.re.abs() < 1e-12 {
                let cellvec = e.vector(i);
                let mut vector = vec![C64::new(0.0, 0.0); 2 * cells];
                for (c, a) in cellvec.iter().enumerate() {
                    vector[2 * c + usize::from(b)] = *a;
                }
                let hv = h.mul_vec(&vector);
                let energy = hv.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                let weight_a: f64 = vector.iter().step_by(2).map(|z| z.norm_sqr()).sum();
                let center = vector.iter().enumerate().map(|(s, z)| (s / 2) as f64 * z.norm_sqr()).sum();
                zero_modes.push(ZeroMode { energy, vector, weight_a, center });
            }
        }
    }
    Ok(SshReport { ks, dispersion, dvector, spectrum, zero_modes })
}

/// Momentum winding of the lower SSH band with Γ = σ_z.
pub fn ssh_winding(v: f64, w: f64, kcount: usize) -> Result<WindingResult> {
    let mut states = Vec::with_capacity(kcount);
    let mut pts = Vec::with_capacity(kcount);
    for j in 0..kcount {
        let k = -PI + 2.0 * PI * j as f64 / kcount as f64;
        let q = C64::new(v, 0.0) + C64::from_polar(w, k);
        if q.norm() < 1e-8 {
            return Err(QwError::Numerical(format!("gap closes at k = {:.6}", k)));
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        states.push(vec![C64::new(s, 0.0), -q / q.norm() * s]);
        pts.push((q.re, q.im));
    }
    smooth_loop(&mut states);
    let value = winding_of_loop(&states, ChiralAxis::Z);
    Ok(WindingResult { value, dvector: Some(super::winding::planar_winding(&pts)), kcount, band: "lower" })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windings() {
        let triv = ssh_winding(1.0, 0.5, 2001).unwrap();
        let topo = ssh_winding(0.5, 1.0, 2001).unwrap();
        assert!(triv.value.abs() < 1e-6 && (topo.value - 1.0).abs() < 1e-6);
        assert!((topo.value - topo.dvector.unwrap()).abs() < 1e-6);
        assert!(ssh_winding(1.0, 1.0, 2000).is_err());
    }

    #[test]
    fn gap_closes_at_equal_hopping() {
        let r = ssh_reference(1.0, 1.0, 10, false, 200).unwrap();
        assert!(r.dispersion[0].abs() < 1e-12);
        let r = ssh_reference(0.3, 1.0, 10, true, 11).unwrap();
        for (d, k) in r.dispersion.iter().zip(&r.ks) {
            assert!((d - (0.09f64 + 1.0 + 0.6 * k.cos()).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn dimerized_limit_has_end_site_modes() {
        let r = ssh_reference(0.0, 1.0, 100, true, 8).unwrap();
        assert_eq!(r.near_zero(1e-6), 2);
        assert_eq!(r.zero_modes.len(), 2);
        let left = r.zero_modes.iter().find(|m| m.weight_a > 0.5).unwrap();
        assert!((left.vector[0].norm() - 1.0).abs() < 1e-12);
        let right = r.zero_modes.iter().find(|m| m.weight_a < 0.5).unwrap();
        assert!((right.vector[199].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn topological_chain_zero_modes() {
        let r = ssh_reference(0.5, 1.0, 100, true, 8).unwrap();
        assert_eq!(r.near_zero(1e-6), 2);
        assert_eq!(r.zero_modes.len(), 2);
        for m in &r.zero_modes {
            assert!(m.energy < 1e-6);
            assert!(m.weight_a > 1.0 - 1e-6 || m.weight_a < 1e-6);
            assert!(m.center < 5.0 || m.center > 94.0);
        }
        let triv = ssh_reference(1.0, 0.5, 100, true, 8).unwrap();
        assert_eq!(triv.near_zero(1e-6), 0);
        assert!(triv.zero_modes.is_empty());
    }
}
