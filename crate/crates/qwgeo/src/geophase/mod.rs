//! Geometric phases of pure and mixed states.

pub mod bargmann;
pub mod curve;
pub mod mixed;
pub mod uhlmann;
pub mod weak;

pub use bargmann::{bargmann, gp_discrete};
pub use curve::{gp_curve, PureCurve};
pub use mixed::{
    dephasing_trajectory, gp_mixed_nonunitary, gp_mixed_unitary, precession_gp_closed, precession_gp_interferometric,
    precession_path, tong_dephasing_exact, tong_dephasing_first_order, DensityTrajectory, MixedPhase,
};
pub use uhlmann::{uhlmann_phase_numeric, uhlmann_phase_qubit, UhlmannPhase};
pub use weak::{
    gp_from_pointer, qubit_pointer_exact, qubit_pointer_first_order, strackee_solid_angle, weak_value,
    weak_value_from_qubit_pointer,
};

use crate::C64;
use std::f64::consts::PI;

/// Wraps an angle into (−π, π].
pub fn principal(x: f64) -> f64 {
    let mut y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    }
    y
}

/// Distance between two angles modulo `period`.
pub fn angle_gap(a: f64, b: f64, period: f64) -> f64 {
    let d = (a - b).rem_euclid(period);
    d.min(period - d)
}

/// Qubit state with the given Bloch vector (normalized direction).
pub fn qubit_from_bloch(b: [f64; 3]) -> Vec<C64> {
    let r = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
    let theta = (b[2] / r).clamp(-1.0, 1.0).acos();
    let phi = b[1].atan2(b[0]);
    vec![C64::new((theta / 2.0).cos(), 0.0), C64::from_polar((theta / 2.0).sin(), phi)]
}

pub fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn is_uniform(s: &[f64]) -> bool {
    if s.len() < 3 {
        return true;
    }
    let h = (s[s.len() - 1] - s[0]) / (s.len() - 1) as f64;
    s.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h.abs())
}

/// Derivatives of sampled vectors: fourth-order stencils on uniform grids,
/// second-order three-point formulas otherwise.
pub(crate) fn sample_derivatives(s: &[f64], v: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let n = s.len();
    let dim = v[0].len();
    let mut out = vec![vec![C64::new(0.0, 0.0); dim]; n];
    if n < 2 {
        return out;
    }
    if n >= 5 && is_uniform(s) {
        let h = (s[n - 1] - s[0]) / (n - 1) as f64;
        let w = 1.0 / (12.0 * h);
        for d in 0..dim {
            let f = |i: usize| v[i][d];
            out[0][d] = (-25.0 * f(0) + 48.0 * f(1) - 36.0 * f(2) + 16.0 * f(3) - 3.0 * f(4)) * w;
            out[1][d] = (-3.0 * f(0) - 10.0 * f(1) + 18.0 * f(2) - 6.0 * f(3) + f(4)) * w;
            for i in 2..n - 2 {
                out[i][d] = (f(i - 2) - 8.0 * f(i - 1) + 8.0 * f(i + 1) - f(i + 2)) * w;
            }
            let m = n - 1;
            out[m - 1][d] = (3.0 * f(m) + 10.0 * f(m - 1) - 18.0 * f(m - 2) + 6.0 * f(m - 3) - f(m - 4)) * w;
            out[m][d] = (25.0 * f(m) - 48.0 * f(m - 1) + 36.0 * f(m - 2) - 16.0 * f(m - 3) + 3.0 * f(m - 4)) * w;
        }
        return out;
    }
    if n == 2 {
        let h = s[1] - s[0];
        for d in 0..dim {
            let g = (v[1][d] - v[0][d]) / h;
            out[0][d] = g;
            out[1][d] = g;
        }
        return out;
    }
    for d in 0..dim {
        for i in 0..n {
            // three-point Lagrange derivative on the nearest stencil
            let (a, b, c) = if i == 0 { (0, 1, 2) } else if i == n - 1 { (n - 3, n - 2, n - 1) } else { (i - 1, i, i + 1) };
            let (x0, x1, x2) = (s[a], s[b], s[c]);
            let x = s[i];
            let l0 = (2.0 * x - x1 - x2) / ((x0 - x1) * (x0 - x2));
            let l1 = (2.0 * x - x0 - x2) / ((x1 - x0) * (x1 - x2));
            let l2 = (2.0 * x - x0 - x1) / ((x2 - x0) * (x2 - x1));
            out[i][d] = v[a][d] * l0 + v[b][d] * l1 + v[c][d] * l2;
        }
    }
    out
}

/// Integral of sampled values: trapezoid with fourth-order end corrections on
/// uniform grids of at least 6 points, plain trapezoid otherwise.
pub(crate) fn integrate_samples(s: &[f64], f: &[f64]) -> f64 {
    let n = s.len();
    if n < 2 {
        return 0.0;
    }
    if n >= 6 && is_uniform(s) {
        let h = (s[n - 1] - s[0]) / (n - 1) as f64;
        let w = [3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0];
        let mut acc = 0.0;
        for (i, &x) in f.iter().enumerate() {
            let wi = if i < 3 {
                w[i]
            } else if i >= n - 3 {
                w[n - 1 - i]
            } else {
                1.0
            };
            acc += wi * x;
        }
        return acc * h;
    }
    s.windows(2).zip(f.windows(2)).map(|(x, y)| 0.5 * (x[1] - x[0]) * (y[0] + y[1])).sum()
}

/// Re-phases samples so every consecutive overlap is real and positive (discrete
/// parallel transport). Only the phase of the first sample survives from the input gauge.
pub(crate) fn discrete_transport(v: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<C64>> = Vec::with_capacity(v.len());
    for (i, x) in v.iter().enumerate() {
        if i == 0 {
            out.push(x.clone());
            continue;
        }
        let ov = crate::numkit::inner(&out[i - 1], x);
        let fix = if ov.norm() > 0.0 { (ov / ov.norm()).conj() } else { C64::new(1.0, 0.0) };
        out.push(x.iter().map(|z| z * fix).collect());
    }
    out
}

/// `⟨ψ(s₁)|ψ(s₂)⟩·e^{−i Im∫⟨ψ|ψ̇⟩ds}`: its argument is the geometric phase of the
/// sampled path. Evaluated in the discrete parallel-transport gauge, so the result does
/// not depend on the phases of the input samples.
pub(crate) fn transported_overlap(s: &[f64], v: &[Vec<C64>]) -> C64 {
    let t = discrete_transport(v);
    let ov = crate::numkit::inner(&t[0], &t[t.len() - 1]);
    ov * C64::from_polar(1.0, -connection_integral(s, &t))
}

/// `Im ∫⟨ψ|ψ̇⟩ ds` over sampled (not necessarily normalized) states.
pub(crate) fn connection_integral(s: &[f64], v: &[Vec<C64>]) -> f64 {
    let dv = sample_derivatives(s, v);
    let f: Vec<f64> = v
        .iter()
        .zip(&dv)
        .map(|(a, b)| {
            let n2: f64 = a.iter().map(|z| z.norm_sqr()).sum();
            crate::numkit::inner(a, b).im / n2
        })
        .collect();
    integrate_samples(s, &f)
}
