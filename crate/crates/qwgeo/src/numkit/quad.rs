//! Globally adaptive Gauss–Kronrod 7/15 quadrature for real or complex integrands.

use crate::error::{invalid, QwError, Result};
use num_complex::Complex64 as C64;
use std::ops::{Add, Mul};

pub trait QuadValue: Copy + Add<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for C64 {
    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_INTERVALS: usize = 4000;

fn gk15<T: QuadValue, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64) -> (T, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x) + f(c + x);
        k = k + s * WGK[i];
        if i % 2 == 1 {
            g = g + s * WG[i / 2];
        }
    }
    let k = k * h;
    let g = g * h;
    let err = (k + g * -1.0).magnitude();
    (k, err)
}

/// Adaptive integral of `f` over `[a, b]` with absolute error estimate ≤ `tol`.
pub fn integrate_1d<T: QuadValue, F: FnMut(f64) -> T>(mut f: F, a: f64, b: f64, tol: f64) -> Result<T> {
    if !(a.is_finite() && b.is_finite()) {
        return invalid("integration limits must be finite");
    }
    if !(tol > 0.0) {
        return invalid("tolerance must be positive");
    }
    if a == b {
        return Ok(T::zero());
    }
    let (v, e) = gk15(&mut f, a, b);
    let mut parts: Vec<(f64, f64, T, f64)> = vec![(a, b, v, e)];
    loop {
        let total_err: f64 = parts.iter().map(|p| p.3).sum();
        let total = parts.iter().fold(T::zero(), |acc, p| acc + p.2);
        if !total.magnitude().is_finite() {
            return Err(QwError::Numerical("integrand not finite on interval".into()));
        }
        if total_err <= tol {
            return Ok(total);
        }
        if parts.len() >= MAX_INTERVALS {
            return Err(QwError::NoConvergence(format!(
                "quadrature error {:.3e} above tolerance {:.3e} after {} subdivisions",
                total_err, tol, MAX_INTERVALS
            )));
        }
        let worst = (0..parts.len()).max_by(|&i, &j| parts[i].3.partial_cmp(&parts[j].3).unwrap()).unwrap();
        let (lo, hi, _, _) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Err(QwError::NoConvergence("interval underflow in quadrature".into()));
        }
        let (v1, e1) = gk15(&mut f, lo, mid);
        let (v2, e2) = gk15(&mut f, mid, hi);
        parts.push((lo, mid, v1, e1));
        parts.push((mid, hi, v2, e2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sine_integral() {
        let v: f64 = integrate_1d(f64::sin, 0.0, PI, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn constant_integral() {
        let v: f64 = integrate_1d(|_| 3.5, 0.0, 2.0 * PI, 1e-12).unwrap();
        assert!((v - 7.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn complex_exponential() {
        let v: C64 = integrate_1d(|t| C64::from_polar(1.0, t), 0.0, 2.0 * PI, 1e-12).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn sharp_peak() {
        let v: f64 = integrate_1d(|x| 1e-3 / (1e-6 + x * x), -1.0, 1.0, 1e-10).unwrap();
        let exact = 2.0 * (1e-3 / 1e-3) * (1.0f64 / 1e-3).atan();
        assert!((v - exact).abs() < 1e-9);
    }

    #[test]
    fn non_finite_limits_rejected() {
        assert!(integrate_1d(|x: f64| x, 0.0, f64::INFINITY, 1e-6).is_err());
    }
}
