//! Winding numbers of chiral two-band loops.

use crate::error::{invalid, QwError, Result};
use crate::numkit::{eig_dense, inner, ComplexMatrix};
use crate::walks::{time_symmetric_k, Variant, WalkSpec};
use crate::C64;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub struct WindingResult {
    pub value: f64,
    /// Bloch-vector winding about the chiral axis; `None` when the vector is not real.
    pub dvector: Option<f64>,
    pub kcount: usize,
    pub band: &'static str,
}

impl WindingResult {
    pub fn distance_to_integer(&self) -> f64 {
        (self.value - self.value.round()).abs()
    }
}

/// Which single-qubit Pauli operator is the chiral symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralAxis {
    X,
    Z,
}

impl ChiralAxis {
    fn apply(self, v: &[C64]) -> [C64; 2] {
        match self {
            ChiralAxis::X => [v[1], v[0]],
            ChiralAxis::Z => [v[0], -v[1]],
        }
    }
    /// Components spanning the plane orthogonal to the axis, in right-handed order.
    fn plane(self, n: [f64; 3]) -> (f64, f64) {
        match self {
            ChiralAxis::X => (n[1], n[2]),
            ChiralAxis::Z => (n[0], n[1]),
        }
    }
}

/// Parallel-transport gauge around a closed loop, then spread the holonomy evenly so
/// the last state connects smoothly back to the first.
pub fn smooth_loop(states: &mut [Vec<C64>]) {
    let n = states.len();
    for j in 1..n {
        let ov = inner(&states[j - 1], &states[j]);
        if ov.norm() > 0.0 {
            let ph = ov.conj() / ov.norm();
            states[j].iter_mut().for_each(|z| *z *= ph);
        }
    }
    let close = inner(&states[n - 1], &states[0]);
    let hol = close.arg();
    for (j, s) in states.iter_mut().enumerate() {
        let ph = C64::from_polar(1.0, hol * j as f64 / n as f64);
        s.iter_mut().for_each(|z| *z *= ph);
    }
}

/// `W = (1/π) Σ_k Re[i⟨Γψ(k)|Δψ⟩]` with fourth-order centered differences on a uniform
/// closed loop.
pub fn winding_of_loop(states: &[Vec<C64>], axis: ChiralAxis) -> f64 {
    let n = states.len();
    let mut acc = 0.0;
    for j in 0..n {
        let at = |o: isize| &states[(j as isize + o).rem_euclid(n as isize) as usize];
        let (p2, p1, m1, m2) = (at(2), at(1), at(-1), at(-2));
        let d: Vec<C64> = (0..p1.len()).map(|c| (p1[c] - m1[c]) * (8.0 / 12.0) - (p2[c] - m2[c]) / 12.0).collect();
        let g = axis.apply(&states[j]);
        acc += (C64::new(0.0, 1.0) * inner(&g, &d)).re;
    }
    acc / PI
}

/// Total turning angle of a planar curve about the origin, in turns.
pub fn planar_winding(points: &[(f64, f64)]) -> f64 {
    let n = points.len();
    let mut acc = 0.0;
    for j in 0..n {
        let (a, b) = (points[j], points[(j + 1) % n]);
        let d = (a.0 * b.1 - a.1 * b.0).atan2(a.0 * b.0 + a.1 * b.1);
        acc += d;
    }
    acc / (2.0 * PI)
}

fn band_vector(u: &ComplexMatrix, prev: Option<&Vec<C64>>) -> Result<(Vec<C64>, C64)> {
    let e = eig_dense(u)?;
    let (a0, a1) = (e.values[0].arg(), e.values[1].arg());
    let pick = if (a0 - a1).abs() < 1e-9 {
        match prev {
            Some(p) if inner(p, &e.vector(1)).norm() > inner(p, &e.vector(0)).norm() => 1,
            _ => 0,
        }
    } else if a0 > a1 {
        0
    } else {
        1
    };
    Ok((e.vector(pick), e.values[pick]))
}

/// Winding of the split-step walk in its time-symmetric frame (Γ = σ_x), lower band
/// (eigenvalue with positive phase) from right eigenvectors.
pub fn winding_momentum(spec: &WalkSpec, kcount: usize) -> Result<WindingResult> {
    if spec.variant != Variant::Ssqw1d {
        return invalid("momentum winding is defined for the split-step walk");
    }
    if kcount < 8 {
        return invalid("need at least 8 k points");
    }
    let mut states: Vec<Vec<C64>> = Vec::with_capacity(kcount);
    let mut bloch = Vec::with_capacity(kcount);
    let mut real = true;
    for j in 0..kcount {
        let k = -PI + 2.0 * PI * j as f64 / kcount as f64;
        let u = time_symmetric_k(spec, k)?;
        let half = u.trace() * 0.5;
        let s = (C64::new(1.0, 0.0) - half * half).sqrt();
        if s.norm() < 1e-8 {
            return Err(QwError::Numerical(format!("band degeneracy at k = {:.6}", k)));
        }
        let (v, _) = band_vector(&u, states.last())?;
        states.push(v);
        let i2 = C64::new(0.0, 0.5);
        let n = [
            i2 * (u[(0, 1)] + u[(1, 0)]) / s,
            i2 * (C64::new(0.0, 1.0) * u[(0, 1)] - C64::new(0.0, 1.0) * u[(1, 0)]) / s,
            i2 * (u[(0, 0)] - u[(1, 1)]) / s,
        ];
        if n.iter().any(|z| z.im.abs() > 1e-9) {
            real = false;
        }
        bloch.push(ChiralAxis::X.plane([n[0].re, n[1].re, n[2].re]));
    }
    smooth_loop(&mut states);
    let value = winding_of_loop(&states, ChiralAxis::X);
    Ok(WindingResult { value, dvector: real.then(|| planar_winding(&bloch)), kcount, band: "lower" })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_circle() {
        let pts: Vec<(f64, f64)> = (0..50).map(|j| 2.0 * PI * j as f64 / 50.0).map(|t| (t.cos() + 0.3, t.sin())).collect();
        assert!((planar_winding(&pts) - 1.0).abs() < 1e-12);
        let off: Vec<(f64, f64)> = pts.iter().map(|p| (p.0 + 3.0, p.1)).collect();
        assert!(planar_winding(&off).abs() < 1e-12);
    }

    #[test]
    fn unitary_phases_integer_and_agree_with_bloch_vector() {
        for (t1, t2) in [(-3.0 * PI / 8.0, PI / 4.0), (-3.0 * PI / 8.0, 5.0 * PI / 8.0), (-3.0 * PI / 8.0, PI / 8.0), (1.0, 0.4)] {
            let w = winding_momentum(&WalkSpec::ssqw1d(4, t1, t2, 0.0), 2001).unwrap();
            assert!(w.distance_to_integer() < 1e-3, "{:?}", w);
            assert!((w.value - w.dvector.unwrap()).abs() < 1e-6, "{:?}", w);
        }
    }

    #[test]
    fn domain_choices_differ_by_one() {
        let a = winding_momentum(&WalkSpec::ssqw1d(4, -3.0 * PI / 8.0, PI / 4.0, 0.0), 2001).unwrap();
        let b = winding_momentum(&WalkSpec::ssqw1d(4, -3.0 * PI / 8.0, 5.0 * PI / 8.0, 0.0), 2001).unwrap();
        assert_eq!((a.value - b.value).abs().round(), 1.0);
    }

    #[test]
    fn persists_below_critical_gain() {
        let (t1, t2) = (-3.0 * PI / 8.0, PI / 8.0);
        let gc = crate::walks::gamma_critical(t1, t2).unwrap().value.re;
        for g in [0.1, 0.5 * gc, 0.9 * gc] {
            let w = winding_momentum(&WalkSpec::ssqw1d(4, t1, t2, g), 2001).unwrap();
            assert!((w.value - 1.0).abs() < 1e-3);
        }
        let above = winding_momentum(&WalkSpec::ssqw1d(4, t1, t2, 1.5 * gc), 2001).unwrap();
        assert!(above.distance_to_integer() > 0.05);
        let far = winding_momentum(&WalkSpec::ssqw1d(4, t1, t2, 3.0 * gc), 2001).unwrap();
        assert!(far.value.abs() < above.value.abs());
    }
}
