//! Spectra of walks with two angle domains and detection of wall-bound states.

use crate::error::{invalid, QwError, Result};
use crate::numkit::{eig_dense, inner, ComplexMatrix};
use crate::walks::{domain_map, position, step_matrix_k, Stepper, WalkSpec};
use crate::C64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Localization thresholds: IPR above this and wall weight at least `WALL_WEIGHT`.
pub const IPR_MIN: f64 = 0.1;
pub const WALL_WEIGHT: f64 = 0.9;
/// Sites on either side of a wall counted as "at the wall".
pub const WALL_REACH: i64 = 10;

/// Per-state localization measures from a site distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Localization {
    pub ipr: f64,
    pub wall_weight: f64,
}

impl Localization {
    pub fn localized(&self) -> bool {
        self.ipr > IPR_MIN && self.wall_weight >= WALL_WEIGHT
    }
}

fn localization(v: &[C64], len: usize, wall: i64) -> Localization {
    let p: Vec<f64> = v.chunks(2).map(|c| c[0].norm_sqr() + c[1].norm_sqr()).collect();
    let total: f64 = p.iter().sum();
    let ipr = p.iter().map(|x| (x / total).powi(2)).sum();
    let wall_weight = p
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            let x = position(*i, len);
            (x - wall).abs() <= WALL_REACH || (x + wall).abs() <= WALL_REACH
        })
        .map(|(_, x)| x / total)
        .sum();
    Localization { ipr, wall_weight }
}

#[derive(Debug, Clone)]
pub struct EdgeSpectrum {
    pub eigenvalues: Vec<C64>,
    pub localization: Vec<Localization>,
    /// `|arg λ| < ε` or `|arg λ − π| < ε`, with λ real up to the same ε.
    pub midgap: Vec<bool>,
    pub walls: (i64, i64),
    pub eps: f64,
}

impl EdgeSpectrum {
    pub fn midgap_count(&self) -> usize {
        self.midgap.iter().filter(|m| **m).count()
    }

    /// Indices of mid-gap states bound to a wall.
    pub fn edge_states(&self) -> Vec<usize> {
        (0..self.eigenvalues.len()).filter(|&i| self.midgap[i] && self.localization[i].localized()).collect()
    }

    /// Every mid-gap state is wall-bound and there is at least one.
    pub fn is_clean(&self) -> bool {
        let m = self.midgap_count();
        m > 0 && self.edge_states().len() == m
    }

    pub fn max_modulus_defect(&self) -> f64 {
        self.eigenvalues.iter().map(|l| (l.norm() - 1.0).abs()).fold(0.0, f64::max)
    }
}

/// Split-step chain of `len` sites with `inner` angles for |x| ≤ `wall`, `outer` elsewhere.
pub fn two_domain_ssqw(len: usize, wall: i64, inner: (f64, f64), outer: (f64, f64), gamma: f64) -> WalkSpec {
    let mut s = WalkSpec::ssqw1d(len, 0.0, 0.0, gamma);
    s.theta1 = domain_map(len, wall, inner.0, outer.0);
    s.theta2 = domain_map(len, wall, inner.1, outer.1);
    s
}

fn orthonormalize(cols: &mut Vec<Vec<C64>>) {
    for j in 0..cols.len() {
        for i in 0..j {
            let ov = inner(&cols[i], &cols[j]);
            let ci = cols[i].clone();
            cols[j].iter_mut().zip(&ci).for_each(|(z, q)| *z -= ov * q);
        }
        let nrm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols[j].iter_mut().for_each(|z| *z /= nrm);
    }
}

/// Rebuilds the invariant subspace of a numerically degenerate eigenvalue cluster by
/// inverse subspace iteration, then picks the basis that diagonalizes the projector
/// onto x ≥ 0, which separates states bound to opposite walls.
fn split_cluster(u: &ComplexMatrix, lam: C64, k: usize, len: usize) -> Result<Vec<Vec<C64>>> {
    let n = u.rows();
    let mut shifted = u.clone();
    for i in 0..n {
        shifted[(i, i)] -= lam;
    }
    let mut x = ComplexMatrix::zeros(n, k);
    for i in 0..n {
        for j in 0..k {
            x[(i, j)] = C64::new((0.37 * ((i + 1) * (j + 1)) as f64).cos(), (0.11 * (i + 3 * j) as f64).sin());
        }
    }
    let mut cols: Vec<Vec<C64>> = Vec::new();
    for _ in 0..3 {
        x = shifted.solve(&x).ok_or_else(|| QwError::Numerical("inverse iteration failed".into()))?;
        cols = (0..k).map(|j| x.col(j)).collect();
        orthonormalize(&mut cols);
        for (j, c) in cols.iter().enumerate() {
            x.set_col(j, c);
        }
    }
    let mut p = ComplexMatrix::zeros(k, k);
    for a in 0..k {
        for b in 0..k {
            p[(a, b)] = (0..len)
                .filter(|&i| position(i, len) >= 0)
                .map(|i| cols[a][2 * i].conj() * cols[b][2 * i] + cols[a][2 * i + 1].conj() * cols[b][2 * i + 1])
                .sum();
        }
    }
    let e = eig_dense(&p)?;
    Ok((0..k)
        .map(|m| {
            let c = e.vector(m);
            (0..n).map(|i| (0..k).map(|a| c[a] * cols[a][i]).sum()).collect()
        })
        .collect())
}

/// Full diagonalization of the 2N×2N step of a two-domain split-step chain.
pub fn edge_spectrum_1d(spec: &WalkSpec, wall: i64) -> Result<EdgeSpectrum> {
    if spec.variant != crate::walks::Variant::Ssqw1d {
        return invalid("edge spectrum needs a split-step chain");
    }
    let u = Stepper::new(spec)?.dense()?;
    let e = eig_dense(&u)?;
    if !e.all_converged() {
        return Err(QwError::NoConvergence("edge spectrum eigenpairs".into()));
    }
    let eps = if spec.gamma == 0.0 { 1e-6 } else { 1e-3 };
    let n = spec.nx;
    let midgap: Vec<bool> = e
        .values
        .iter()
        .map(|l| {
            let a = l.arg().abs();
            a < eps || (PI - a) < eps
        })
        .collect();
    let mut localization: Vec<Localization> = (0..e.values.len()).map(|i| localization(&e.vector(i), n, wall)).collect();
    let mut done = vec![false; e.values.len()];
    for i in 0..e.values.len() {
        if !midgap[i] || done[i] {
            continue;
        }
        let cluster: Vec<usize> =
            (i..e.values.len()).filter(|&j| midgap[j] && (e.values[j] - e.values[i]).norm() < 1e-6).collect();
        cluster.iter().for_each(|&j| done[j] = true);
        if cluster.len() > 1 {
            let states = split_cluster(&u, e.values[i], cluster.len(), n)?;
            for (&j, v) in cluster.iter().zip(&states) {
                localization[j] = self::localization(v, n, wall);
            }
        }
    }
    Ok(EdgeSpectrum { eigenvalues: e.values, localization, midgap, walls: (-wall, wall), eps })
}

#[derive(Debug, Clone)]
pub struct EdgeBands2d {
    pub kx: Vec<f64>,
    /// Quasi-energies `E = i ln λ` per k_x (Re E ∈ (−π, π]).
    pub energies: Vec<Vec<C64>>,
    pub localization: Vec<Vec<Localization>>,
    /// Half-widths of the bulk gaps around E = 0 and E = π (smaller of the two domains).
    pub gap0: f64,
    pub gap_pi: f64,
    pub in_gap: usize,
    pub localized_in_gap: usize,
}

impl EdgeBands2d {
    /// Gap states exist and all of them sit on a wall.
    pub fn isolated(&self) -> bool {
        self.in_gap > 0 && self.in_gap == self.localized_in_gap
    }
}

/// Smallest |Re E| and π − |Re E| of the homogeneous bulk on an n×n grid.
pub fn bulk_gaps(t1: f64, t2: f64, gx: f64, gy: f64, n: usize) -> Result<(f64, f64)> {
    let spec = WalkSpec::dtqw2d(4, 4, t1, t2, gx, gy);
    let mut g0 = f64::INFINITY;
    let mut gp = f64::INFINITY;
    for k in crate::walks::k_grid(&spec, n) {
        let e = eig_dense(&step_matrix_k(&spec, k[0], k[1])?)?;
        for l in &e.values {
            let a = l.arg().abs();
            g0 = g0.min(a);
            gp = gp.min(PI - a);
        }
    }
    Ok((g0, gp))
}

/// Quasi-1D spectra of the 2D walk, periodic in x, with `inner` angles for |y| ≤ `wall`.
pub fn edge_bands_2d(
    ny: usize,
    wall: i64,
    inner: (f64, f64),
    outer: (f64, f64),
    gamma_x: f64,
    gamma_y: f64,
    kcount: usize,
) -> Result<EdgeBands2d> {
    if kcount < 2 {
        return invalid("need at least two k_x points");
    }
    let mut spec = WalkSpec::dtqw2d(4, ny, 0.0, 0.0, gamma_x, gamma_y);
    spec.theta1 = domain_map(ny, wall, inner.0, outer.0);
    spec.theta2 = domain_map(ny, wall, inner.1, outer.1);
    spec.validate()?;
    let kx: Vec<f64> = (0..kcount).map(|j| -PI / 2.0 + PI * j as f64 / kcount as f64).collect();
    let blocks: Result<Vec<(Vec<C64>, Vec<Localization>)>> = kx
        .par_iter()
        .map(|&k| {
            let m: ComplexMatrix = Stepper::dtqw2d_kx(&spec, k)?.dense()?;
            let e = eig_dense(&m)?;
            let en = e.values.iter().map(|l| C64::new(0.0, 1.0) * l.ln()).collect();
            let loc = (0..e.values.len()).map(|i| localization(&e.vector(i), ny, wall)).collect();
            Ok((en, loc))
        })
        .collect();
    let (energies, localization): (Vec<_>, Vec<_>) = blocks?.into_iter().unzip();
    let a = bulk_gaps(inner.0, inner.1, gamma_x, gamma_y, 48)?;
    let b = bulk_gaps(outer.0, outer.1, gamma_x, gamma_y, 48)?;
    let (gap0, gap_pi) = (a.0.min(b.0), a.1.min(b.1));
    let mut in_gap = 0;
    let mut localized_in_gap = 0;
    for (es, ls) in energies.iter().zip(&localization) {
        for (e, l) in es.iter().zip(ls) {
            let r = e.re.abs();
            if r < gap0 || PI - r < gap_pi {
                in_gap += 1;
                if l.localized() {
                    localized_in_gap += 1;
                }
            }
        }
    }
    Ok(EdgeBands2d { kx, energies, localization, gap0, gap_pi, in_gap, localized_in_gap })
}

#[cfg(test)]
mod tests {
    use super::*;

    const INNER: (f64, f64) = (-3.0 * PI / 8.0, 5.0 * PI / 8.0);
    const OUTER: (f64, f64) = (-3.0 * PI / 8.0, PI / 4.0);

    #[test]
    fn one_dimensional_wall_states() {
        let clean = |g: f64| edge_spectrum_1d(&two_domain_ssqw(201, 50, INNER, OUTER, g), 50).unwrap();
        let s0 = clean(0.0);
        assert!(s0.max_modulus_defect() < 1e-9);
        assert_eq!(s0.midgap_count(), 2);
        assert!(s0.is_clean());
        let s2 = clean(0.2);
        assert_eq!(s2.edge_states().len(), 2);
        assert!(s2.is_clean());
        let s3 = clean(0.25);
        assert!(s3.midgap_count() > 2 && !s3.is_clean());
    }

    #[test]
    fn homogeneous_chain_has_no_wall_states() {
        let s = edge_spectrum_1d(&two_domain_ssqw(61, 15, OUTER, OUTER, 0.0), 15).unwrap();
        assert!(s.edge_states().is_empty());
    }

    #[test]
    fn two_dimensional_edge_branches() {
        let (c1, c0) = ((7.0 * PI / 3.0, 7.0 * PI / 3.0), (2.0 * PI, 3.0 * PI));
        for g in [0.0, 0.3] {
            let b = edge_bands_2d(81, 20, c1, c0, g, g, 16).unwrap();
            assert!(b.isolated(), "γ = {}", g);
        }
        assert!(!edge_bands_2d(81, 20, c1, c0, 0.47, 0.47, 16).unwrap().isolated());
        assert!(!edge_bands_2d(41, 10, c0, c0, 0.0, 0.0, 8).unwrap().isolated());
    }
}
