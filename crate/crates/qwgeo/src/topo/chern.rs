//! Chern numbers from U(1) link variables on a discretized Brillouin zone.

use crate::error::{invalid, QwError, Result};
use crate::numkit::{eig_dense, inner, ComplexMatrix};
use crate::walks::{step_matrix_k, Variant, WalkSpec};
use crate::C64;
use rayon::prelude::*;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub struct ChernResult {
    pub value: i64,
    /// ΣF/2π before rounding; integer up to rounding error by construction.
    pub raw: f64,
    /// Plaquette field strength F(k), row-major with k_x fastest.
    pub field: Vec<f64>,
    pub n: usize,
}

/// Lower band (Re E < 0, i.e. the eigenvalue with the larger phase) of a 2×2 block.
fn lower_band(u: &ComplexMatrix, kx: f64, ky: f64) -> Result<Vec<C64>> {
    let e = eig_dense(u)?;
    let (a0, a1) = (e.values[0].arg(), e.values[1].arg());
    if (a0 - a1).abs() < 1e-10 {
        return Err(QwError::Numerical(format!("bands touch at ({:.6}, {:.6})", kx, ky)));
    }
    Ok(e.vector(if a0 > a1 { 0 } else { 1 }))
}

fn link(a: &[C64], b: &[C64]) -> Result<C64> {
    let z = inner(a, b);
    if z.norm() < 1e-12 {
        return Err(QwError::Numerical("vanishing link variable; refine the grid".into()));
    }
    Ok(z / z.norm())
}

/// Chern number of the lower band of the two-state 2D walk on an n×n grid of the
/// zone [−π/2, π/2)².
pub fn chern_fhs(spec: &WalkSpec, n: usize) -> Result<ChernResult> {
    if spec.variant != Variant::Dtqw2d {
        return invalid("Chern number needs the two-state 2D walk");
    }
    if n < 4 {
        return invalid("grid must be at least 4×4");
    }
    chern_of_blocks(|kx, ky| step_matrix_k(spec, kx, ky), n, PI)
}

/// FHS Chern number of the lower band of any 2×2 Bloch block on an n×n grid of the
/// square zone of side `period` centered at the origin.
pub fn chern_of_blocks<F>(block: F, n: usize, period: f64) -> Result<ChernResult>
where
    F: Fn(f64, f64) -> Result<ComplexMatrix> + Sync,
{
    if n < 4 {
        return invalid("grid must be at least 4×4");
    }
    let h = period / n as f64;
    let ks: Vec<[f64; 2]> =
        (0..n * n).map(|c| [-period / 2.0 + h * (c % n) as f64, -period / 2.0 + h * (c / n) as f64]).collect();
    let states: Result<Vec<Vec<C64>>> = ks.par_iter().map(|k| lower_band(&block(k[0], k[1])?, k[0], k[1])).collect();
    let states = states?;
    let at = |i: usize, j: usize| &states[(j % n) * n + (i % n)];
    let field: Result<Vec<f64>> = (0..n * n)
        .into_par_iter()
        .map(|c| {
            let (i, j) = (c % n, c / n);
            let u1 = link(at(i, j), at(i + 1, j))?;
            let u2 = link(at(i + 1, j), at(i + 1, j + 1))?;
            let u3 = link(at(i + 1, j + 1), at(i, j + 1))?;
            let u4 = link(at(i, j + 1), at(i, j))?;
            Ok((u1 * u2 * u3 * u4).arg())
        })
        .collect();
    let field = field?;
    let raw = field.iter().sum::<f64>() / (2.0 * PI);
    Ok(ChernResult { value: raw.round() as i64, raw, field, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::closed_form;

    fn c(t1: f64, t2: f64, n: usize) -> Result<ChernResult> {
        chern_fhs(&WalkSpec::dtqw2d(4, 4, t1, t2, 0.0, 0.0), n)
    }

    /// Lower-band Chern number −(1/4π)∫ n̂·(∂ₓn̂ × ∂ᵧn̂) from the closed-form Bloch vector.
    fn skyrmion(t1: f64, t2: f64, m: usize) -> f64 {
        let spec = WalkSpec::dtqw2d(4, 4, t1, t2, 0.0, 0.0);
        let nhat = |kx: f64, ky: f64| -> [f64; 3] {
            let (_, v) = closed_form(&spec, kx, ky).unwrap();
            let l = (v[0].re.powi(2) + v[1].re.powi(2) + v[2].re.powi(2)).sqrt();
            [v[0].re / l, v[1].re / l, v[2].re / l]
        };
        let (h, e) = (PI / m as f64, 1e-5);
        let mut acc = 0.0;
        for j in 0..m {
            for i in 0..m {
                let (kx, ky) = (-PI / 2.0 + h * (i as f64 + 0.5), -PI / 2.0 + h * (j as f64 + 0.5));
                let n = nhat(kx, ky);
                let (a, b, cc, d) = (nhat(kx + e, ky), nhat(kx - e, ky), nhat(kx, ky + e), nhat(kx, ky - e));
                let dx: Vec<f64> = (0..3).map(|q| (a[q] - b[q]) / (2.0 * e)).collect();
                let dy: Vec<f64> = (0..3).map(|q| (cc[q] - d[q]) / (2.0 * e)).collect();
                let cr = [dx[1] * dy[2] - dx[2] * dy[1], dx[2] * dy[0] - dx[0] * dy[2], dx[0] * dy[1] - dx[1] * dy[0]];
                acc += (n[0] * cr[0] + n[1] * cr[1] + n[2] * cr[2]) * h * h;
            }
        }
        -acc / (4.0 * PI)
    }

    #[test]
    fn agrees_with_continuum_curvature() {
        for (a, b) in [(7.0 * PI / 3.0, 7.0 * PI / 3.0), (2.0 * PI, 3.0 * PI), (PI / 3.0, PI / 3.0), (1.5 * PI, 0.5 * PI)] {
            let f = c(a, b, 48).unwrap();
            assert!((f.raw - f.value as f64).abs() < 1e-9);
            assert!((skyrmion(a, b, 300) - f.value as f64).abs() < 1e-3, "({}, {})", a, b);
        }
    }

    #[test]
    fn reference_angle_points() {
        // (7π/6, 7π/6) is gapped and trivial; (3π/2, π) closes the gap at k = 0
        assert_eq!(c(7.0 * PI / 6.0, 7.0 * PI / 6.0, 48).unwrap().value, 0);
        assert!(matches!(c(3.0 * PI / 2.0, PI, 48), Err(QwError::Numerical(_))));
    }

    #[test]
    fn grid_independent() {
        for (t1, t2) in [(7.0 * PI / 3.0, 7.0 * PI / 3.0), (2.0 * PI, 3.0 * PI), (PI / 3.0, PI / 3.0)] {
            let v: Vec<i64> = [24, 48, 96].iter().map(|&n| c(t1, t2, n).unwrap().value).collect();
            assert!(v.windows(2).all(|w| w[0] == w[1]), "{:?}", v);
        }
    }

    #[test]
    fn field_sums_to_integer_under_gain() {
        let r = chern_fhs(&WalkSpec::dtqw2d(4, 4, 7.0 * PI / 3.0, 7.0 * PI / 3.0, 0.1, 0.05), 48).unwrap();
        assert!((r.raw - r.value as f64).abs() < 1e-9);
        assert_eq!(r.field.len(), 48 * 48);
    }

    #[test]
    fn loss_induced_jump() {
        let at = |gx: f64| chern_fhs(&WalkSpec::dtqw2d(4, 4, PI / 4.0, -3.0 * PI / 16.0, gx, 0.1), 48).unwrap().value;
        assert_eq!(at(0.0), -1);
        assert_eq!(at(0.5), -1);
        assert_eq!(at(1.0), 0);
    }
}
