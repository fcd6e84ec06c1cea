//! Real-space evolution by stencils: per-site coin mixes and periodic shifts.

use super::spec::{index, position, Coin4, Variant, WalkSpec};
use crate::error::{invalid, QwError, Result};
use crate::numkit::ComplexMatrix;
use crate::C64;

pub type M2 = [[C64; 2]; 2];

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// `R(θ) = e^{−iθσ_y/2}`.
pub fn rot(theta: f64) -> M2 {
    let (s, c) = (theta / 2.0).sin_cos();
    [[C64::new(c, 0.0), C64::new(-s, 0.0)], [C64::new(s, 0.0), C64::new(c, 0.0)]]
}

pub fn diag2(a: C64, b: C64) -> M2 {
    [[a, ZERO], [ZERO, b]]
}

/// `G = e^{γσ_z}`.
pub fn gain(g: f64) -> M2 {
    diag2(C64::new(g.exp(), 0.0), C64::new((-g).exp(), 0.0))
}

pub fn mul2(a: &M2, b: &M2) -> M2 {
    let mut o = [[ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            o[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    o
}

pub fn m2_to_matrix(m: &M2) -> ComplexMatrix {
    ComplexMatrix::m2(m[0][0], m[0][1], m[1][0], m[1][1])
}

/// 4×4 coins of the 2D walk with a four-state coin; basis |j,k⟩ at index 2j+k.
pub fn coin4_matrix(c: Coin4) -> ComplexMatrix {
    let h = 0.5;
    let rows: [[C64; 4]; 4] = match c {
        Coin4::Hadamard => {
            let s = [[1.0, 1.0, 1.0, 1.0], [1.0, -1.0, 1.0, -1.0], [1.0, 1.0, -1.0, -1.0], [1.0, -1.0, -1.0, 1.0]];
            s.map(|r| r.map(|v| C64::new(h * v, 0.0)))
        }
        Coin4::Grover => {
            let s = [[-1.0, 1.0, 1.0, 1.0], [1.0, -1.0, 1.0, 1.0], [1.0, 1.0, -1.0, 1.0], [1.0, 1.0, 1.0, -1.0]];
            s.map(|r| r.map(|v| C64::new(h * v, 0.0)))
        }
        Coin4::Fourier => {
            let mut r = [[ZERO; 4]; 4];
            for (u, row) in r.iter_mut().enumerate() {
                for (v, e) in row.iter_mut().enumerate() {
                    *e = C64::from_polar(h, 2.0 * std::f64::consts::PI * (u * v) as f64 / 4.0);
                }
            }
            r
        }
    };
    let mut m = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            m[(i, j)] = rows[i][j];
        }
    }
    m
}

#[derive(Debug, Clone)]
enum Stage {
    /// Coin per map index (1D: site, 2D: row); a single entry applies everywhere.
    Coin(Vec<M2>),
    /// Shift of the up/down components along x by the given offsets.
    ShiftX(i64, i64),
    ShiftY(i64, i64),
    /// Site-dependent scalar phase (1D).
    SitePhase(Vec<C64>),
    Coin4(ComplexMatrix),
    Shift4,
}

/// Precomputed one-step operator of a walk.
#[derive(Debug, Clone)]
pub struct Stepper {
    nx: usize,
    ny: usize,
    d: usize,
    stages: Vec<Stage>,
}

fn coin_stage(len: usize, f: impl Fn(usize) -> M2, homogeneous: bool) -> Stage {
    if homogeneous {
        Stage::Coin(vec![f(0)])
    } else {
        Stage::Coin((0..len).map(f).collect())
    }
}

impl Stepper {
    pub fn new(spec: &WalkSpec) -> Result<Self> {
        spec.validate()?;
        let hom = spec.is_homogeneous();
        let (t1, t2) = (&spec.theta1, &spec.theta2);
        let (nx, ny) = (spec.nx, if spec.is_2d() { spec.ny } else { 1 });
        let map_len = if spec.is_2d() { ny } else { nx };
        let stages = match spec.variant {
            Variant::Dtqw1d => vec![coin_stage(map_len, |i| rot(t1.at(i)), hom), Stage::ShiftX(1, -1)],
            Variant::Electric1d => vec![
                coin_stage(map_len, |i| rot(t1.at(i)), hom),
                Stage::ShiftX(1, -1),
                Stage::SitePhase((0..nx).map(|i| C64::from_polar(1.0, spec.phi * position(i, nx) as f64)).collect()),
            ],
            Variant::Ssqw1d => {
                let ph = diag2(C64::from_polar(1.0, spec.phase_op), C64::from_polar(1.0, -spec.phase_op));
                let g1 = mul2(&gain(-spec.gamma), &ph);
                let g2 = mul2(&gain(spec.gamma), &ph);
                vec![
                    coin_stage(map_len, |i| mul2(&g1, &rot(t1.at(i))), hom),
                    Stage::ShiftX(1, 0),
                    coin_stage(map_len, |i| mul2(&g2, &rot(t2.at(i))), hom),
                    Stage::ShiftX(0, -1),
                ]
            }
            Variant::Dtqw2d => {
                let (gx, gy) = (spec.gamma_x, spec.gamma_y);
                vec![
                    Stage::ShiftX(1, -1),
                    coin_stage(map_len, |i| mul2(&rot(t1.at(i)), &gain(-gx)), hom),
                    Stage::ShiftX(1, -1),
                    coin_stage(map_len, |i| mul2(&rot(t2.at(i)), &gain(gx)), hom),
                    Stage::ShiftY(1, -1),
                    coin_stage(map_len, |i| mul2(&rot(t1.at(i)), &gain(-gy)), hom),
                    Stage::ShiftY(1, -1),
                    Stage::Coin(vec![gain(gy)]),
                ]
            }
            Variant::Coin4d2d => vec![Stage::Coin4(coin4_matrix(spec.coin4d)), Stage::Shift4],
        };
        Ok(Self { nx, ny, d: spec.coin_dim(), stages })
    }

    /// Walk `U = C·T` with arbitrary per-site 2×2 coins applied after the shift.
    pub fn coin_after_shift(coins: Vec<M2>) -> Result<Self> {
        if coins.len() < 2 {
            return invalid("need at least two sites");
        }
        Ok(Self { nx: coins.len(), ny: 1, d: 2, stages: vec![Stage::ShiftX(1, -1), Stage::Coin(coins)] })
    }

    /// Time-symmetric split-step walk `R(θ₁/2)T↓R(θ₂)T↑R(θ₁/2)` on a ring of `n` sites.
    pub fn ssqw_symmetric(n: usize, theta1: f64, theta2: f64) -> Result<Self> {
        if n < 2 || !theta1.is_finite() || !theta2.is_finite() {
            return invalid("need n ≥ 2 and finite angles");
        }
        let half = rot(theta1 / 2.0);
        let stages = vec![
            Stage::Coin(vec![half]),
            Stage::ShiftX(1, 0),
            Stage::Coin(vec![rot(theta2)]),
            Stage::ShiftX(0, -1),
            Stage::Coin(vec![half]),
        ];
        Ok(Self { nx: n, ny: 1, d: 2, stages })
    }

    /// Quasi-1D block of the 2D walk at fixed k_x: periodic in x, real space along y.
    pub fn dtqw2d_kx(spec: &WalkSpec, kx: f64) -> Result<Self> {
        if spec.variant != Variant::Dtqw2d {
            return invalid("k_x blocks exist only for the two-state 2D walk");
        }
        spec.validate()?;
        let hom = spec.is_homogeneous();
        let (t1, t2) = (&spec.theta1, &spec.theta2);
        let (gx, gy) = (spec.gamma_x, spec.gamma_y);
        let tx = diag2(C64::from_polar(1.0, kx), C64::from_polar(1.0, -kx));
        let ny = spec.ny;
        let stages = vec![
            coin_stage(ny, |i| mul2(&mul2(&rot(t1.at(i)), &gain(-gx)), &tx), hom),
            coin_stage(ny, |i| mul2(&mul2(&rot(t2.at(i)), &gain(gx)), &tx), hom),
            Stage::ShiftX(1, -1),
            coin_stage(ny, |i| mul2(&rot(t1.at(i)), &gain(-gy)), hom),
            Stage::ShiftX(1, -1),
            Stage::Coin(vec![gain(gy)]),
        ];
        Ok(Self { nx: ny, ny: 1, d: 2, stages })
    }

    pub fn dim(&self) -> usize {
        self.nx * self.ny * self.d
    }

    pub fn apply(&self, psi: &mut Vec<C64>, scratch: &mut Vec<C64>) {
        for st in &self.stages {
            match st {
                Stage::Coin(m) => self.coin(psi, m),
                Stage::ShiftX(u, dn) => self.shift(psi, scratch, *u, *dn, true),
                Stage::ShiftY(u, dn) => self.shift(psi, scratch, *u, *dn, false),
                Stage::SitePhase(p) => {
                    for (i, ph) in p.iter().enumerate() {
                        psi[2 * i] *= ph;
                        psi[2 * i + 1] *= ph;
                    }
                }
                Stage::Coin4(c) => {
                    for cell in psi.chunks_mut(4) {
                        let v = c.mul_vec(cell);
                        cell.copy_from_slice(&v);
                    }
                }
                Stage::Shift4 => self.shift4(psi, scratch),
            }
        }
    }

    fn coin(&self, psi: &mut [C64], m: &[M2]) {
        let len = m.len();
        let row = |cell: usize| if len == 1 { 0 } else if self.ny > 1 { cell / self.nx } else { cell };
        for (cell, v) in psi.chunks_mut(2).enumerate() {
            let c = &m[row(cell)];
            let (a, b) = (v[0], v[1]);
            v[0] = c[0][0] * a + c[0][1] * b;
            v[1] = c[1][0] * a + c[1][1] * b;
        }
    }

    fn shift(&self, psi: &mut Vec<C64>, scratch: &mut Vec<C64>, up: i64, down: i64, along_x: bool) {
        scratch.clear();
        scratch.resize(psi.len(), ZERO);
        let (nx, ny) = (self.nx as i64, self.ny as i64);
        for y in 0..ny {
            for x in 0..nx {
                let src = (y * nx + x) as usize * 2;
                for (s, off) in [(0usize, up), (1usize, down)] {
                    let (tx, ty) = if along_x { ((x + off).rem_euclid(nx), y) } else { (x, (y + off).rem_euclid(ny)) };
                    scratch[(ty * nx + tx) as usize * 2 + s] = psi[src + s];
                }
            }
        }
        std::mem::swap(psi, scratch);
    }

    fn shift4(&self, psi: &mut Vec<C64>, scratch: &mut Vec<C64>) {
        scratch.clear();
        scratch.resize(psi.len(), ZERO);
        let (nx, ny) = (self.nx as i64, self.ny as i64);
        for y in 0..ny {
            for x in 0..nx {
                for c in 0..4usize {
                    let dx = if c / 2 == 0 { 1 } else { -1 };
                    let dy = if c % 2 == 0 { 1 } else { -1 };
                    let (tx, ty) = ((x + dx).rem_euclid(nx), (y + dy).rem_euclid(ny));
                    scratch[(ty * nx + tx) as usize * 4 + c] = psi[(y * nx + x) as usize * 4 + c];
                }
            }
        }
        std::mem::swap(psi, scratch);
    }

    /// Dense matrix of one step (columns are images of basis vectors).
    pub fn dense(&self) -> Result<ComplexMatrix> {
        let n = self.dim();
        if n > 4096 {
            return invalid(format!("dense step matrix of dimension {} refused", n));
        }
        let mut m = ComplexMatrix::zeros(n, n);
        let mut scratch = Vec::new();
        for j in 0..n {
            let mut e = vec![ZERO; n];
            e[j] = ONE;
            self.apply(&mut e, &mut scratch);
            for i in 0..n {
                m[(i, j)] = e[i];
            }
        }
        Ok(m)
    }
}

pub fn dense_step(spec: &WalkSpec) -> Result<ComplexMatrix> {
    Stepper::new(spec)?.dense()
}

/// Raw amplitudes over site ⊗ coin (coin index fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub amps: Vec<C64>,
    pub nx: usize,
    pub ny: usize,
    pub coin_dim: usize,
}

impl StateVector {
    /// Walker at the origin with the given coin state.
    pub fn localized(spec: &WalkSpec, coin: &[C64]) -> Result<Self> {
        Self::at(spec, 0, 0, coin)
    }

    pub fn at(spec: &WalkSpec, x: i64, y: i64, coin: &[C64]) -> Result<Self> {
        spec.validate()?;
        let d = spec.coin_dim();
        if coin.len() != d {
            return invalid(format!("coin state must have {} components", d));
        }
        let ny = if spec.is_2d() { spec.ny } else { 1 };
        let mut amps = vec![ZERO; spec.dim()];
        let iy = if spec.is_2d() { index(y, ny) } else { 0 };
        let cell = iy * spec.nx + index(x, spec.nx);
        amps[cell * d..cell * d + d].copy_from_slice(coin);
        Ok(Self { amps, nx: spec.nx, ny, coin_dim: d })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Per-site probabilities, normalized by the current norm.
    pub fn distribution(&self) -> Vec<f64> {
        let total = self.norm_sqr();
        self.amps.chunks(self.coin_dim).map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>() / total).collect()
    }

    /// Centered coordinates of the chain (1D).
    pub fn positions(&self) -> Vec<f64> {
        (0..self.nx).map(|i| position(i, self.nx) as f64).collect()
    }

    /// Marginal distributions along x and y of a 2D lattice.
    pub fn marginals(&self) -> (Vec<f64>, Vec<f64>) {
        let p = self.distribution();
        let mut mx = vec![0.0; self.nx];
        let mut my = vec![0.0; self.ny];
        for y in 0..self.ny {
            for x in 0..self.nx {
                mx[x] += p[y * self.nx + x];
                my[y] += p[y * self.nx + x];
            }
        }
        (mx, my)
    }
}

#[derive(Debug, Clone)]
pub struct Evolution {
    pub state: StateVector,
    /// P(t) = Σ|C|², t = 0..=steps, never renormalized.
    pub norms: Vec<f64>,
}

pub fn evolve(spec: &WalkSpec, state0: &StateVector, steps: usize) -> Result<Evolution> {
    let stepper = Stepper::new(spec)?;
    evolve_with(&stepper, state0, steps)
}

pub fn evolve_with(stepper: &Stepper, state0: &StateVector, steps: usize) -> Result<Evolution> {
    if state0.amps.len() != stepper.dim() {
        return invalid("initial state does not match the lattice");
    }
    let mut psi = state0.amps.clone();
    let mut scratch = Vec::with_capacity(psi.len());
    let mut norms = Vec::with_capacity(steps + 1);
    norms.push(state0.norm_sqr());
    for t in 0..steps {
        stepper.apply(&mut psi, &mut scratch);
        let n: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if !n.is_finite() {
            return Err(QwError::Numerical(format!("norm overflow at step {}", t + 1)));
        }
        norms.push(n);
    }
    Ok(Evolution { state: StateVector { amps: psi, ..state0.clone() }, norms })
}

/// σ² = Σx²p − (Σxp)² of a normalized distribution.
pub fn variance(positions: &[f64], probs: &[f64]) -> Result<f64> {
    if probs.is_empty() || positions.len() != probs.len() {
        return invalid("distribution is empty or mismatched");
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > 1e-8 {
        return invalid(format!("distribution sums to {}", total));
    }
    let m1: f64 = positions.iter().zip(probs).map(|(x, p)| x * p).sum();
    let m2: f64 = positions.iter().zip(probs).map(|(x, p)| x * x * p).sum();
    Ok(m2 - m1 * m1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormRegime {
    Bounded,
    Linear,
    Exponential,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormFit {
    pub regime: NormRegime,
    pub rss_const: f64,
    pub rss_linear: f64,
    pub rss_exp: f64,
    /// Exponential rate from the log-linear fit.
    pub rate: f64,
}

fn line_fit(t: &[f64], y: &[f64]) -> (f64, f64) {
    let n = t.len() as f64;
    let mt = t.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = t.iter().zip(y).map(|(a, b)| (a - mt) * (b - my)).sum();
    let sxx: f64 = t.iter().map(|a| (a - mt) * (a - mt)).sum();
    let b = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    (my - b * mt, b)
}

/// Fits the last half of P(t) with constant, linear and exponential models. A growth
/// model must beat the constant by 5%; linear vs exponential needs a 5% margin too.
pub fn classify_norm(norms: &[f64]) -> Result<NormFit> {
    if norms.len() < 8 {
        return invalid("need at least 8 norm samples");
    }
    if norms.iter().any(|p| !(*p > 0.0) || !p.is_finite()) {
        return invalid("norms must be positive and finite");
    }
    let start = norms.len() / 2;
    let t: Vec<f64> = (start..norms.len()).map(|i| i as f64).collect();
    let y = &norms[start..];
    let mean = y.iter().sum::<f64>() / y.len() as f64;
    let rss_const: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
    let (a, b) = line_fit(&t, y);
    let rss_linear: f64 = t.iter().zip(y).map(|(ti, v)| (v - a - b * ti).powi(2)).sum();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let (la, lb) = line_fit(&t, &ly);
    let rss_exp: f64 = t.iter().zip(y).map(|(ti, v)| (v - (la + lb * ti).exp()).powi(2)).sum();
    let scale = mean * mean * y.len() as f64;
    let regime = if rss_const <= 1e-20 * scale || rss_linear.min(rss_exp) > 0.95 * rss_const {
        NormRegime::Bounded
    } else if rss_linear < 0.95 * rss_exp {
        NormRegime::Linear
    } else if rss_exp < 0.95 * rss_linear {
        NormRegime::Exponential
    } else {
        NormRegime::Indeterminate
    };
    Ok(NormFit { regime, rss_const, rss_linear, rss_exp, rate: lb })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::spec::Angles;
    use std::f64::consts::PI;

    fn sym() -> Vec<C64> {
        let s = 0.5f64.sqrt();
        vec![C64::new(s, 0.0), C64::new(0.0, s)]
    }

    #[test]
    fn ballistic_limit() {
        let spec = WalkSpec::dtqw1d(41, 0.0);
        let s0 = StateVector::localized(&spec, &[ONE, ZERO]).unwrap();
        let ev = evolve(&spec, &s0, 7).unwrap();
        let i = index(7, 41);
        assert_eq!(ev.state.amps[2 * i], ONE);
    }

    #[test]
    fn symmetric_start_gives_symmetric_distribution() {
        let spec = WalkSpec::dtqw1d(301, PI / 2.0);
        let ev = evolve(&spec, &StateVector::localized(&spec, &sym()).unwrap(), 100).unwrap();
        let p = ev.state.distribution();
        for x in 1..140 {
            assert!((p[index(x, 301)] - p[index(-x, 301)]).abs() < 1e-12);
        }
        assert!(ev.norms.iter().all(|n| (n - 1.0).abs() < 1e-10));
    }

    #[test]
    fn ssqw_with_zero_second_angle_is_dtqw() {
        let a = WalkSpec::ssqw1d(51, 0.7, 0.0, 0.0);
        let b = WalkSpec::dtqw1d(51, 0.7);
        let mut s = StateVector::localized(&a, &sym()).unwrap();
        for (i, z) in s.amps.iter_mut().enumerate() {
            *z += C64::new((i as f64 * 0.37).sin(), (i as f64 * 0.11).cos()) * 0.01;
        }
        let ea = evolve(&a, &s, 20).unwrap();
        let eb = evolve(&b, &s, 20).unwrap();
        for (x, y) in ea.state.amps.iter().zip(&eb.state.amps) {
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn dense_matches_stencil() {
        let mut spec = WalkSpec::ssqw1d(9, 0.4, -1.1, 0.2);
        spec.theta2 = Angles::PerSite((0..9).map(|i| i as f64 * 0.1).collect());
        let m = dense_step(&spec).unwrap();
        let s = StateVector::at(&spec, 2, 0, &sym()).unwrap();
        let ev = evolve(&spec, &s, 1).unwrap();
        let v = m.mul_vec(&s.amps);
        for (x, y) in v.iter().zip(&ev.state.amps) {
            assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn variance_basics() {
        assert_eq!(variance(&[0.0, 1.0], &[1.0, 0.0]).unwrap(), 0.0);
        assert!((variance(&[-1.0, 1.0], &[0.5, 0.5]).unwrap() - 1.0).abs() < 1e-15);
        assert!(variance(&[], &[]).is_err());
    }

    #[test]
    fn norm_classifier_on_synthetic_data() {
        let osc: Vec<f64> = (0..200).map(|t| 1.2 + 0.1 * (0.3 * t as f64).sin()).collect();
        assert_eq!(classify_norm(&osc).unwrap().regime, NormRegime::Bounded);
        let lin: Vec<f64> = (0..200).map(|t| 1.0 + 0.05 * t as f64 + 0.01 * (0.3 * t as f64).sin()).collect();
        assert_eq!(classify_norm(&lin).unwrap().regime, NormRegime::Linear);
        let ex: Vec<f64> = (0..200).map(|t| (0.05 * t as f64).exp()).collect();
        assert_eq!(classify_norm(&ex).unwrap().regime, NormRegime::Exponential);
    }
}
