//! Momentum-space blocks, quasi-energy bands, critical gain/loss and PT diagnostics.

use super::engine::{coin4_matrix, diag2, evolve, gain, m2_to_matrix, mul2, rot, StateVector, M2};
use super::spec::{position, Variant, WalkSpec};
use crate::error::{invalid, QwError, Result};
use crate::numkit::matrix::pauli;
use crate::numkit::{eig_dense, ComplexMatrix, EigenResult};
use crate::C64;
use rayon::prelude::*;
use std::f64::consts::PI;

fn t_k(k: f64) -> M2 {
    diag2(C64::from_polar(1.0, k), C64::from_polar(1.0, -k))
}
fn t_up(k: f64) -> M2 {
    diag2(C64::from_polar(1.0, k), C64::new(1.0, 0.0))
}
fn t_down(k: f64) -> M2 {
    diag2(C64::new(1.0, 0.0), C64::from_polar(1.0, -k))
}

fn chain(ms: &[M2]) -> M2 {
    ms.iter().skip(1).fold(ms[0], |acc, m| mul2(&acc, m))
}

fn homogeneous_angles(spec: &WalkSpec) -> Result<(f64, f64)> {
    spec.validate()?;
    match (spec.theta1.global(), spec.theta2.global()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => invalid("momentum-space blocks need homogeneous angles"),
    }
}

fn ssqw_phase(spec: &WalkSpec) -> M2 {
    diag2(C64::from_polar(1.0, spec.phase_op), C64::from_polar(1.0, -spec.phase_op))
}

fn block2(spec: &WalkSpec, kx: f64, ky: f64) -> Result<M2> {
    let (t1, t2) = homogeneous_angles(spec)?;
    Ok(match spec.variant {
        Variant::Dtqw1d => mul2(&t_k(kx), &rot(t1)),
        Variant::Ssqw1d => {
            let ph = ssqw_phase(spec);
            chain(&[
                t_down(kx),
                gain(spec.gamma),
                ph,
                rot(t2),
                t_up(kx),
                gain(-spec.gamma),
                ph,
                rot(t1),
            ])
        }
        Variant::Dtqw2d => {
            let (gx, gy) = (spec.gamma_x, spec.gamma_y);
            chain(&[
                gain(gy),
                t_k(ky),
                rot(t1),
                gain(-gy),
                t_k(ky),
                rot(t2),
                gain(gx),
                t_k(kx),
                rot(t1),
                gain(-gx),
                t_k(kx),
            ])
        }
        Variant::Electric1d => return invalid("the electric walk is not translation invariant"),
        Variant::Coin4d2d => return invalid("four-state coin blocks are 4x4; use step_matrix_k"),
    })
}

/// One-step block `Ũ(k)` (2×2, or 4×4 for the four-state coin walk).
pub fn step_matrix_k(spec: &WalkSpec, kx: f64, ky: f64) -> Result<ComplexMatrix> {
    if spec.variant == Variant::Coin4d2d {
        spec.validate()?;
        let mut t = ComplexMatrix::zeros(4, 4);
        for c in 0..4 {
            let dx = if c / 2 == 0 { 1.0 } else { -1.0 };
            let dy = if c % 2 == 0 { 1.0 } else { -1.0 };
            t[(c, c)] = C64::from_polar(1.0, dx * kx + dy * ky);
        }
        return Ok(t.matmul(&coin4_matrix(spec.coin4d)));
    }
    Ok(m2_to_matrix(&block2(spec, kx, ky)?))
}

/// Time-symmetric frame of the split-step block, `R(θ₁/2)T↓GΦR(θ₂)T↑G⁻¹ΦR(θ₁/2)`,
/// which carries chiral symmetry Γ = σ_x.
pub fn time_symmetric_k(spec: &WalkSpec, k: f64) -> Result<ComplexMatrix> {
    if spec.variant != Variant::Ssqw1d {
        return invalid("time-symmetric frame is defined for the split-step walk");
    }
    let (t1, t2) = homogeneous_angles(spec)?;
    let ph = ssqw_phase(spec);
    Ok(m2_to_matrix(&chain(&[
        rot(t1 / 2.0),
        t_down(k),
        gain(spec.gamma),
        ph,
        rot(t2),
        t_up(k),
        gain(-spec.gamma),
        ph,
        rot(t1 / 2.0),
    ])))
}

/// Principal branch: real E ∈ [0, π] for real |cos E| ≤ 1, complex arccos otherwise.
/// Imaginary parts below `1e-13` are treated as rounding so both sides of the cut agree.
pub fn quasi_energy(cos_e: C64) -> C64 {
    if cos_e.im.abs() < 1e-13 {
        if cos_e.re.abs() <= 1.0 {
            C64::new(cos_e.re.acos(), 0.0)
        } else {
            C64::new(cos_e.re, 0.0).acos()
        }
    } else {
        cos_e.acos()
    }
}

/// Closed-form `cos E` and unnormalized `sin E·n` (so that `n = v / sin E`).
pub fn closed_form(spec: &WalkSpec, kx: f64, ky: f64) -> Result<(C64, [C64; 3])> {
    let (t1, t2) = homogeneous_angles(spec)?;
    let c = |x: f64| C64::new(x, 0.0);
    match spec.variant {
        Variant::Dtqw1d => {
            let (s, co) = (t1 / 2.0).sin_cos();
            Ok((c(co * kx.cos()), [c(s * kx.sin()), c(s * kx.cos()), c(-co * kx.sin())]))
        }
        Variant::Ssqw1d => {
            if spec.phase_op != 0.0 {
                return invalid("no closed form with a nonzero phase operator");
            }
            let (s1, c1) = (t1 / 2.0).sin_cos();
            let (s2, c2) = (t2 / 2.0).sin_cos();
            let (ch, sh) = ((2.0 * spec.gamma).cosh(), (2.0 * spec.gamma).sinh());
            let cos_e = c(c1 * c2 * kx.cos() - s1 * s2 * ch);
            let v = [
                C64::new(s1 * c2 * kx.sin(), -c1 * s2 * sh),
                c(s1 * c2 * kx.cos() + c1 * s2 * ch),
                C64::new(-c1 * c2 * kx.sin(), -s1 * s2 * sh),
            ];
            Ok((cos_e, v))
        }
        Variant::Dtqw2d => {
            let (st, ct) = t1.sin_cos();
            let (s2, c2) = (t2 / 2.0).sin_cos();
            let i = C64::new(0.0, 1.0);
            let (gx, gy) = (spec.gamma_x, spec.gamma_y);
            let (a, b) = (kx + ky, kx - ky);
            let p = c(a) - i * gx + i * gy;
            let q = c(a) + i * gx - i * gy;
            let r = c(b) - i * gx - i * gy;
            let u = c(b) + i * gx + i * gy;
            let cos_e = p.cos() * q.cos() * (ct * c2) - p.sin() * q.sin() * c2 - r.cos() * q.cos() * (st * s2);
            let nx = -p.cos() * u.sin() * (st * c2) - r.cos() * u.sin() * (ct * s2) - r.sin() * u.cos() * s2;
            let ny = p.cos() * u.cos() * (st * c2) + r.cos() * u.cos() * (ct * s2) - r.sin() * u.sin() * s2;
            let nz = -p.cos() * q.sin() * (ct * c2) - p.sin() * q.cos() * c2 + r.cos() * q.sin() * (st * s2);
            Ok((cos_e, [nx, ny, nz]))
        }
        _ => invalid("no closed form for this variant"),
    }
}

#[derive(Debug, Clone)]
pub struct BandPoint {
    pub k: [f64; 2],
    /// Closed-form quasi-energy (numeric when no closed form exists).
    pub energy: C64,
    /// Bloch vector `n = (i/2)tr(Ũσ)/sin E` from the closed form.
    pub n: [C64; 3],
    /// `arccos(tr Ũ/2)` of the numerically composed block.
    pub energy_numeric: C64,
    pub n_numeric: [C64; 3],
    pub eig: EigenResult,
    pub closed_form: bool,
}

impl BandPoint {
    /// Largest distance between the closed form and the numeric block: half-trace and
    /// the eigenvalues against `e^{±iE}`.
    pub fn closed_vs_numeric(&self) -> f64 {
        let dcos = (self.energy.cos() - self.energy_numeric.cos()).norm();
        let i = C64::new(0.0, 1.0);
        let (lp, lm) = ((i * self.energy).exp(), (-i * self.energy).exp());
        let eg = self.eig.values.iter().map(|l| (l - lp).norm().min((l - lm).norm())).fold(0.0, f64::max);
        dcos.max(eg)
    }

    /// Bilinear norm n·n (not Hermitian).
    pub fn n_dot_n(&self) -> C64 {
        self.n.iter().map(|z| z * z).sum()
    }
}

#[derive(Debug, Clone)]
pub struct BandGrid {
    pub shape: (usize, usize),
    pub points: Vec<BandPoint>,
}

impl BandGrid {
    pub fn max_closed_vs_numeric(&self) -> f64 {
        self.points.iter().map(|p| p.closed_vs_numeric()).fold(0.0, f64::max)
    }
}

/// 1D grid `k_j = −π + 2πj/N`; 2D grid `k_j = −π/2 + πj/N` on each axis.
pub fn k_grid(spec: &WalkSpec, kcount: usize) -> Vec<[f64; 2]> {
    if spec.is_2d() {
        let h = PI / kcount as f64;
        (0..kcount).flat_map(|j| (0..kcount).map(move |i| [-PI / 2.0 + h * i as f64, -PI / 2.0 + h * j as f64])).collect()
    } else {
        (0..kcount).map(|j| [-PI + 2.0 * PI * j as f64 / kcount as f64, 0.0]).collect()
    }
}

fn bloch_numeric(u: &ComplexMatrix, sin_e: C64) -> [C64; 3] {
    let i = C64::new(0.0, 0.5);
    let s = [pauli::x(), pauli::y(), pauli::z()];
    let mut n = [C64::new(0.0, 0.0); 3];
    for j in 0..3 {
        n[j] = i * u.matmul(&s[j]).trace() / sin_e;
    }
    n
}

pub fn band_point(spec: &WalkSpec, kx: f64, ky: f64) -> Result<BandPoint> {
    let u = step_matrix_k(spec, kx, ky)?;
    let half_tr = u.trace() * 0.5;
    let e_num = quasi_energy(half_tr);
    let n_num = bloch_numeric(&u, e_num.sin());
    let (energy, n, closed) = match closed_form(spec, kx, ky) {
        Ok((ce, v)) => {
            let e = quasi_energy(ce);
            let s = e.sin();
            (e, [v[0] / s, v[1] / s, v[2] / s], true)
        }
        Err(_) => (e_num, n_num, false),
    };
    Ok(BandPoint { k: [kx, ky], energy, n, energy_numeric: e_num, n_numeric: n_num, eig: eig_dense(&u)?, closed_form: closed })
}

/// Bands on the default grid; per-k work runs in parallel and is gathered in grid order.
pub fn band_grid(spec: &WalkSpec, kcount: usize) -> Result<BandGrid> {
    if kcount < 2 {
        return invalid("need at least two k points");
    }
    if spec.variant == Variant::Coin4d2d || spec.variant == Variant::Electric1d {
        return invalid("band grid needs a two-band translation-invariant walk");
    }
    homogeneous_angles(spec)?;
    let ks = k_grid(spec, kcount);
    let points: Result<Vec<BandPoint>> = ks.par_iter().map(|k| band_point(spec, k[0], k[1])).collect();
    let shape = if spec.is_2d() { (kcount, kcount) } else { (kcount, 1) };
    Ok(BandGrid { shape, points: points? })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaCritical {
    pub value: C64,
    /// Argument of arccosh; below 1 the critical value is complex.
    pub argument: f64,
    pub is_real: bool,
}

/// `γ_c = ½ arccosh[(cos(θ₁/2)cos(θ₂/2) − 1)/(sin(θ₁/2)sin(θ₂/2))]`.
pub fn gamma_critical(theta1: f64, theta2: f64) -> Result<GammaCritical> {
    let (s1, c1) = (theta1 / 2.0).sin_cos();
    let (s2, c2) = (theta2 / 2.0).sin_cos();
    let den = s1 * s2;
    if den.abs() < 1e-14 {
        return invalid("sin(θ₁/2)sin(θ₂/2) vanishes");
    }
    let arg = (c1 * c2 - 1.0) / den;
    if arg >= 1.0 {
        Ok(GammaCritical { value: C64::new(0.5 * arg.acosh(), 0.0), argument: arg, is_real: true })
    } else {
        Ok(GammaCritical { value: C64::new(arg, 0.0).acosh() * 0.5, argument: arg, is_real: false })
    }
}

#[derive(Debug, Clone)]
pub struct PtReport {
    pub per_k: Vec<bool>,
    pub max_deviation: f64,
    pub all: bool,
}

/// `‖σ_z Ũ*(k) σ_z − Ũ⁻¹(k)‖ < 1e-10` on the grid. The split-step walk is tested in its
/// time-symmetric frame, where the relation holds exactly.
pub fn pt_check(spec: &WalkSpec, kcount: usize) -> Result<PtReport> {
    if spec.variant == Variant::Coin4d2d || spec.variant == Variant::Electric1d {
        return invalid("PT check needs a two-band translation-invariant walk");
    }
    let z = pauli::z();
    let mut per_k = Vec::new();
    let mut max_dev: f64 = 0.0;
    for k in k_grid(spec, kcount) {
        let u = if spec.variant == Variant::Ssqw1d { time_symmetric_k(spec, k[0])? } else { step_matrix_k(spec, k[0], k[1])? };
        if u.det2().norm() < 1e-14 {
            return Err(QwError::Numerical(format!("singular block at k = {:?}", k)));
        }
        let lhs = z.matmul(&u.conj()).matmul(&z);
        let inv = u.inv2().ok_or_else(|| QwError::Numerical("singular block".into()))?;
        let dev = lhs.sub(&inv).norm_fro();
        max_dev = max_dev.max(dev);
        per_k.push(dev < 1e-10);
    }
    Ok(PtReport { all: per_k.iter().all(|b| *b), per_k, max_deviation: max_dev })
}

/// Evolves in real space and, independently, mode by mode with `Ũ(k)^t`; returns the
/// largest amplitude deviation.
pub fn momentum_real_consistency(spec: &WalkSpec, state: &StateVector, steps: usize) -> Result<f64> {
    if !matches!(spec.variant, Variant::Dtqw1d | Variant::Ssqw1d) {
        return invalid("consistency check implemented for 1D translation-invariant walks");
    }
    let n = spec.nx;
    let real = evolve(spec, state, steps)?.state.amps;
    let xs: Vec<f64> = (0..n).map(|i| position(i, n) as f64).collect();
    let mut back = vec![C64::new(0.0, 0.0); 2 * n];
    for m in 0..n {
        let k = 2.0 * PI * m as f64 / n as f64;
        let mut chi = [C64::new(0.0, 0.0); 2];
        for (i, x) in xs.iter().enumerate() {
            let ph = C64::from_polar(1.0, k * x);
            chi[0] += state.amps[2 * i] * ph;
            chi[1] += state.amps[2 * i + 1] * ph;
        }
        let u = step_matrix_k(spec, k, 0.0)?;
        let mut v = chi.to_vec();
        for _ in 0..steps {
            v = u.mul_vec(&v);
        }
        for (i, x) in xs.iter().enumerate() {
            let ph = C64::from_polar(1.0 / n as f64, -k * x);
            back[2 * i] += v[0] * ph;
            back[2 * i + 1] += v[1] * ph;
        }
    }
    Ok(real.iter().zip(&back).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_and_gapless_limits() {
        let flat = band_grid(&WalkSpec::dtqw1d(10, PI), 64).unwrap();
        assert!(flat.points.iter().all(|p| (p.energy.re - PI / 2.0).abs() < 1e-12));
        let gl = band_grid(&WalkSpec::dtqw1d(10, 0.0), 64).unwrap();
        assert!(gl.points.iter().all(|p| (p.energy.re - p.k[0].abs()).abs() < 1e-7));
    }

    #[test]
    fn closed_forms_match_numeric_blocks() {
        let specs = [
            WalkSpec::dtqw1d(10, 1.1),
            WalkSpec::ssqw1d(10, -3.0 * PI / 8.0, PI / 4.0, 0.0),
            WalkSpec::ssqw1d(10, -3.0 * PI / 8.0, PI / 4.0, 0.15),
            WalkSpec::ssqw1d(10, -3.0 * PI / 8.0, PI / 4.0, 0.4),
            WalkSpec::dtqw2d(4, 4, 7.0 * PI / 6.0, 7.0 * PI / 6.0, 0.0, 0.0),
            WalkSpec::dtqw2d(4, 4, 0.7, 2.1, 0.2, 0.1),
        ];
        for s in &specs {
            let g = band_grid(s, 41).unwrap();
            assert!(g.max_closed_vs_numeric() < 1e-10, "{:?}", s.variant);
            for p in &g.points {
                if p.energy.sin().norm() > 1e-6 {
                    for j in 0..3 {
                        assert!((p.n[j] - p.n_numeric[j]).norm() < 1e-8, "{:?} k={:?} g={} {:?} {:?} {:?}", s.variant, p.k, s.gamma, p.energy, p.n, p.n_numeric);
                    }
                    assert!((p.n_dot_n() - 1.0).norm() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn critical_values() {
        let a = gamma_critical(-3.0 * PI / 8.0, PI / 4.0).unwrap();
        assert!(a.is_real && (a.value.re - 0.2110).abs() < 5e-4);
        let b = gamma_critical(-3.0 * PI / 8.0, 5.0 * PI / 8.0).unwrap();
        assert!((b.value.re - 0.2832).abs() < 5e-4);
        let c = gamma_critical(PI / 4.0, -PI / 6.0).unwrap();
        assert!((c.value.re - 0.2065).abs() < 5e-4 && (1.1f64.ln()..1.4f64.ln()).contains(&c.value.re));
        assert!(!gamma_critical(0.5, 0.5).unwrap().is_real);
        assert!(gamma_critical(0.0, 0.5).is_err());
    }

    #[test]
    fn band_touching_at_critical_gain() {
        let g = gamma_critical(-3.0 * PI / 8.0, PI / 4.0).unwrap().value.re;
        let (ce, _) = closed_form(&WalkSpec::ssqw1d(4, -3.0 * PI / 8.0, PI / 4.0, g), 0.0, 0.0).unwrap();
        assert!((ce.re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pt_symmetry() {
        for g in [0.0, 0.1, 0.3, 0.6] {
            assert!(pt_check(&WalkSpec::ssqw1d(4, PI / 4.0, -PI / 6.0, g), 101).unwrap().all);
        }
        assert!(!pt_check(&WalkSpec::dtqw2d(4, 4, 0.9, 1.3, 0.01, 0.0), 21).unwrap().all);
    }

    #[test]
    fn first_order_shift_in_2d() {
        let (t1, t2, gx) = (0.9, 1.3, 1e-6);
        for &(kx, ky) in &[(0.1, 0.4), (-0.7, 0.3), (1.2, -0.5)] {
            let (c0, _) = closed_form(&WalkSpec::dtqw2d(4, 4, t1, t2, 0.0, 0.0), kx, ky).unwrap();
            let u = step_matrix_k(&WalkSpec::dtqw2d(4, 4, t1, t2, gx, 0.0), kx, ky).unwrap();
            let shift = (u.trace() * 0.5 - c0) / gx;
            let want = C64::new(0.0, t1.sin() * (t2 / 2.0).sin() * (2.0 * ky).sin());
            assert!((shift - want).norm() < 1e-5, "{} vs {}", shift, want);
        }
    }

    #[test]
    fn fourier_modes_agree_with_real_space() {
        let s = 0.5f64.sqrt();
        for spec in [WalkSpec::dtqw1d(64, 0.8), WalkSpec::ssqw1d(64, -3.0 * PI / 8.0, PI / 4.0, 0.15)] {
            let st = StateVector::localized(&spec, &[C64::new(s, 0.0), C64::new(0.0, s)]).unwrap();
            assert!(momentum_real_consistency(&spec, &st, 50).unwrap() < 1e-9);
            assert!(momentum_real_consistency(&spec, &st, 0).unwrap() < 1e-12);
        }
    }

    #[test]
    fn two_d_step_differs_from_split_step_product() {
        // the 2D step is not the product of an x and a y split-step walk
        let (t1, t2) = (0.9, 1.7);
        let (kx, ky) = (0.3, -0.8);
        let u = step_matrix_k(&WalkSpec::dtqw2d(4, 4, t1, t2, 0.0, 0.0), kx, ky).unwrap();
        let ux = step_matrix_k(&WalkSpec::ssqw1d(4, t1, t2, 0.0), kx, 0.0).unwrap();
        let uy = step_matrix_k(&WalkSpec::ssqw1d(4, t1, 0.0, 0.0), ky, 0.0).unwrap();
        let p = uy.matmul(&ux);
        assert!((u.trace() - p.trace()).norm() > 1e-3);
    }
}
