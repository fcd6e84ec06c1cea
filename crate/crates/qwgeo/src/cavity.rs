//! Geometric phase of a two-level atom on a circular orbit inside a lossy cavity.
//!
//! Frequencies are angular (rad/s), lengths in metres. Transition rates are first
//! order in ζ(ω) = ω²R²/c². "Non-inertial" always means the R-dependent part.

use crate::error::{invalid, QwError, Result};
use crate::numkit::integrate_1d;
use rayon::prelude::*;
use std::f64::consts::PI;

pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
const HBAR: f64 = 1.054_571_817e-34;
const EPS0: f64 = 8.854_187_8128e-12;

/// Upper bound on 4AT for the small-A phase formulas.
pub const VALIDITY_BOUND: f64 = 0.1;
pub const DEFAULT_Q: f64 = 1e7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityParams {
    pub omega0: f64,
    pub omega: f64,
    pub radius: f64,
    pub volume: f64,
    pub omega_c: f64,
    pub q: f64,
    pub eta: f64,
    pub theta: f64,
    pub n: f64,
}

impl CavityParams {
    pub fn zeta(&self) -> f64 {
        zeta(self.omega, self.radius)
    }

    /// Ω̄₀ = Ω₀√(1 − ζ(ω)).
    pub fn omega0_bar(&self) -> f64 {
        self.omega0 * (1.0 - self.zeta()).sqrt()
    }

    pub fn validate(&self) -> Result<()> {
        let vals = [self.omega0, self.omega, self.radius, self.volume, self.omega_c, self.q, self.eta, self.theta, self.n];
        if vals.iter().any(|v| !v.is_finite()) {
            return invalid("cavity parameters must be finite");
        }
        if self.omega0 <= 0.0 || self.omega_c <= 0.0 || self.omega < 0.0 || self.radius < 0.0 {
            return invalid("frequencies must be positive and radius non-negative");
        }
        if self.q <= 1.0 {
            return invalid("quality factor must exceed 1");
        }
        if self.eta < 0.0 || self.n < 0.0 {
            return invalid("η and n must be non-negative");
        }
        if self.zeta() >= 0.1 {
            return invalid(format!("ζ(ω) = {:.3e} outside the perturbative range (< 0.1)", self.zeta()));
        }
        Ok(())
    }

    /// Reference parameters of the fast-rotation regime, cavity on ω + Ω̄₀.
    pub fn high_regime_reference() -> Self {
        let mut p = CavityParams {
            omega0: 1e7,
            omega: 5e9,
            radius: 1e-6,
            volume: 1e-7,
            omega_c: 0.0,
            q: DEFAULT_Q,
            eta: 0.0,
            theta: PI / 2.0,
            n: 1e5,
        };
        p.omega_c = p.omega + p.omega0_bar();
        p
    }

    /// Reference parameters of the slow-rotation regime, cavity on Ω̄₀ + ω.
    pub fn low_regime_reference() -> Self {
        let mut p = CavityParams {
            omega0: 1e7,
            omega: 1e5,
            radius: 1e-3,
            volume: 1e-3,
            omega_c: 0.0,
            q: DEFAULT_Q,
            eta: 0.0,
            theta: PI / 2.0,
            n: 1e5,
        };
        p.omega_c = p.omega0_bar() + p.omega;
        p
    }
}

pub fn zeta(freq: f64, radius: f64) -> f64 {
    (freq * radius / SPEED_OF_LIGHT).powi(2)
}

/// η = |d|²/(3πħε₀V) for a dipole moment in C·m and a volume in m³.
pub fn eta_from_dipole(dipole: f64, volume: f64) -> Result<f64> {
    if !(volume > 0.0 && dipole.is_finite()) {
        return invalid("volume must be positive");
    }
    Ok(dipole * dipole / (3.0 * PI * HBAR * EPS0 * volume))
}

/// η that puts πA/Ω₀ at `scale` per quasi-cycle for the given parameters.
pub fn eta_for_a_scale(params: &CavityParams, scale: f64) -> Result<f64> {
    let mut unit = *params;
    unit.eta = 1.0;
    let a = lindblad(&unit)?.a();
    if a <= 0.0 {
        return Err(QwError::Numerical("A vanishes; cannot scale η".into()));
    }
    Ok(scale * params.omega0 / (PI * a))
}

/// Lorentzian density of states, normalized to peak value Q/ω_c.
pub fn lorentzian_dos(omega_k: f64, omega_c: f64, q: f64) -> Result<f64> {
    if q <= 0.0 {
        return invalid("quality factor must be positive");
    }
    if !(omega_k > 0.0 && omega_c > 0.0) {
        return invalid("frequencies must be positive");
    }
    let g = omega_c / q;
    Ok(g / (g * g + (omega_k - omega_c).powi(2)))
}

fn dos_derivative(omega_k: f64, omega_c: f64, q: f64) -> f64 {
    let g = omega_c / q;
    let d = omega_k - omega_c;
    -2.0 * g * d / (g * g + d * d).powi(2)
}

/// Rates split into the R-independent (inertial) and R-dependent parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rates {
    pub down_inertial: f64,
    pub down_noninertial: f64,
    pub up_inertial: f64,
    pub up_noninertial: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    High,
    Low,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LindbladAB {
    pub regime: Regime,
    pub rates: Rates,
}

impl LindbladAB {
    pub fn gamma_down(&self) -> f64 {
        self.rates.down_inertial + self.rates.down_noninertial
    }
    pub fn gamma_up(&self) -> f64 {
        self.rates.up_inertial + self.rates.up_noninertial
    }
    pub fn a(&self) -> f64 {
        (self.gamma_down() + self.gamma_up()) / 4.0
    }
    pub fn b(&self) -> f64 {
        (self.gamma_down() - self.gamma_up()) / 4.0
    }
    pub fn a_inertial(&self) -> f64 {
        (self.rates.down_inertial + self.rates.up_inertial) / 4.0
    }
    pub fn a_noninertial(&self) -> f64 {
        (self.rates.down_noninertial + self.rates.up_noninertial) / 4.0
    }
    pub fn b_inertial(&self) -> f64 {
        (self.rates.down_inertial - self.rates.up_inertial) / 4.0
    }
    pub fn b_noninertial(&self) -> f64 {
        (self.rates.down_noninertial - self.rates.up_noninertial) / 4.0
    }
}

fn ratio(p: &CavityParams) -> f64 {
    p.omega / p.omega0_bar()
}

/// Fast rotation, ω/Ω̄₀ > 10. The Ω₀ terms are shared by emission and absorption;
/// the sidebands ω₊ = ω + Ω̄₀ and ω₋ = ω − Ω̄₀ add to A and subtract in B.
pub fn rates_high(p: &CavityParams) -> Result<LindbladAB> {
    p.validate()?;
    if ratio(p) <= 10.0 {
        return invalid(format!("ω/Ω̄₀ = {:.3} does not satisfy ω ≫ Ω̄₀ (> 10)", ratio(p)));
    }
    let z = p.zeta();
    let rho = |w: f64| lorentzian_dos(w, p.omega_c, p.q);
    let (wp, wm) = (p.omega + p.omega0_bar(), p.omega - p.omega0_bar());
    let base = rho(p.omega0)? * p.omega0;
    let slope = -0.5 * z * p.omega0 * p.omega0 * dos_derivative(p.omega0, p.omega_c, p.q);
    let side_p = 0.45 * z * wp * rho(wp)?;
    let side_m = 0.45 * z * wm * rho(wm)?;
    // 4A = η[base + slope + side₊ + side₋], 4B = η[base + slope + side₊ − side₋]
    let rates = Rates {
        down_inertial: p.eta * base,
        down_noninertial: p.eta * (slope + side_p),
        up_inertial: 0.0,
        up_noninertial: p.eta * side_m,
    };
    Ok(LindbladAB { regime: Regime::High, rates })
}

/// Slow rotation, ω/Ω̄₀ < 0.1: emission only, with sidebands at Ω̄₀ ± ω.
pub fn rates_low(p: &CavityParams) -> Result<LindbladAB> {
    p.validate()?;
    if ratio(p) >= 0.1 {
        return invalid(format!("ω/Ω̄₀ = {:.3} does not satisfy ω ≪ Ω̄₀ (< 0.1)", ratio(p)));
    }
    let z = p.zeta();
    let rho = |w: f64| lorentzian_dos(w, p.omega_c, p.q);
    let (op, om) = (p.omega0_bar() + p.omega, p.omega0_bar() - p.omega);
    let base = rho(p.omega0)? * p.omega0;
    let slope = -0.5 * z * p.omega0 * p.omega0 * dos_derivative(p.omega0, p.omega_c, p.q);
    let side = 0.25 * z * (rho(op)? * op + rho(om)? * om);
    let zr = |w: f64| zeta(w, p.radius);
    let kin = -0.4 * (zr(p.omega0) * base - 0.5 * (zr(op) * rho(op)? * op + zr(om) * rho(om)? * om));
    let rates = Rates {
        down_inertial: p.eta * base,
        down_noninertial: p.eta * (slope + side + kin),
        up_inertial: 0.0,
        up_noninertial: 0.0,
    };
    Ok(LindbladAB { regime: Regime::Low, rates })
}

/// Picks the regime from ω/Ω̄₀.
pub fn lindblad(p: &CavityParams) -> Result<LindbladAB> {
    p.validate()?;
    let r = ratio(p);
    if r > 10.0 {
        rates_high(p)
    } else if r < 0.1 {
        rates_low(p)
    } else {
        invalid(format!("ω/Ω̄₀ = {:.3} lies between the two regimes", r))
    }
}

/// Mixed-state geometric phase of the decaying atom, integrated numerically:
/// γ = −(Ω/2)∫₀ᵀ [1 − X/√(e^{4Aτ}sin²θ + X²)] dτ with X = (B/A)(1 − e^{4Aτ}) + cos θ.
pub fn gp_exact(a: f64, b: f64, omega: f64, theta: f64, t: f64) -> Result<f64> {
    Ok(-(omega / 2.0) * t * (1.0 - theta.cos()) + gp_exact_nonunitary(a, b, omega, theta, t)?)
}

/// The part of [`gp_exact`] beyond the unitary −(Ω/2)T(1 − cos θ).
pub fn gp_exact_nonunitary(a: f64, b: f64, omega: f64, theta: f64, t: f64) -> Result<f64> {
    if !(a >= 0.0) || ![b, omega, theta, t].iter().all(|v| v.is_finite()) || t < 0.0 {
        return invalid("need A ≥ 0, finite B, Ω, θ and T ≥ 0");
    }
    let (c, s2) = (theta.cos(), theta.sin().powi(2));
    let f = |tau: f64| {
        let u = 4.0 * a * tau;
        // (B/A)(1 − e^u) written to survive A → 0
        let shift = if u.abs() < 1e-300 { -4.0 * b * tau } else { -b / a * u.exp_m1() };
        let x = shift + c;
        let d = (u.exp() * s2 + x * x).sqrt();
        if d == 0.0 {
            return 0.0;
        }
        let cd = c * d;
        if x * cd > 0.0 {
            // x − cd = (x² − c²d²)/(x + cd) with x² − c²d² = s²(x − c e^{u/2})(x + c e^{u/2})
            let minus = shift - c * (u / 2.0).exp_m1();
            let plus = x + c * (u / 2.0).exp();
            s2 * minus * plus / ((x + cd) * d)
        } else {
            (x - cd) / d
        }
    };
    // integrand grows like τ for small AT; scale the tolerance with T
    let scale = (4.0 * a * t + 4.0 * b.abs() * t).max(1e-300) * t;
    let v = integrate_1d(f, 0.0, t, 1e-12 * scale.max(1e-300))?;
    Ok((omega / 2.0) * v)
}

/// Small-A closed form: −πn(1 − cos θ) − (2π²n²/Ω₀)(2B + A cos θ) sin²θ, with T = 2πn/Ω₀.
/// Refuses when 4AT exceeds [`VALIDITY_BOUND`].
pub fn gp_closed(a: f64, b: f64, omega0: f64, theta: f64, n: f64) -> Result<(f64, f64)> {
    guard(a, omega0, n)?;
    let unitary = -PI * n * (1.0 - theta.cos());
    Ok((unitary, nonunitary(2.0 * b + a * theta.cos(), omega0, theta, n)))
}

fn nonunitary(weight: f64, omega0: f64, theta: f64, n: f64) -> f64 {
    -2.0 * PI * PI * n * n / omega0 * weight * theta.sin().powi(2)
}

fn guard(a: f64, omega0: f64, n: f64) -> Result<()> {
    let four_at = 4.0 * a * 2.0 * PI * n / omega0;
    if four_at > VALIDITY_BOUND {
        return invalid(format!("4AT = {:.3e} exceeds {} ; small-A phase formula invalid", four_at, VALIDITY_BOUND));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GpSplit {
    pub regime: Regime,
    pub unitary: f64,
    pub inertial: f64,
    pub noninertial: f64,
}

impl GpSplit {
    pub fn nonunitary(&self) -> f64 {
        self.inertial + self.noninertial
    }
}

/// Unitary, inertial and non-inertial parts of the phase after `n` quasi-cycles.
pub fn gp_regimes(p: &CavityParams) -> Result<GpSplit> {
    let ab = lindblad(p)?;
    guard(ab.a(), p.omega0, p.n)?;
    let c = p.theta.cos();
    let inertial = nonunitary(2.0 * ab.b_inertial() + ab.a_inertial() * c, p.omega0, p.theta, p.n);
    let noninertial = nonunitary(2.0 * ab.b_noninertial() + ab.a_noninertial() * c, p.omega0, p.theta, p.n);
    Ok(GpSplit { regime: ab.regime, unitary: -PI * p.n * (1.0 - c), inertial, noninertial })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub omega_c: f64,
    pub gamma_down: f64,
    pub gamma_up: f64,
    pub a: f64,
    pub b: f64,
    pub phi_inertial: f64,
    pub phi_noninertial: f64,
    pub n: f64,
}

/// Rates and phases across cavity frequencies; rows keep the input order.
pub fn sweep_omega_c(p: &CavityParams, omega_cs: &[f64]) -> Result<Vec<SweepRow>> {
    omega_cs
        .par_iter()
        .map(|&wc| {
            let q = CavityParams { omega_c: wc, ..*p };
            let ab = lindblad(&q)?;
            let g = gp_regimes(&q)?;
            Ok(SweepRow {
                omega_c: wc,
                gamma_down: ab.gamma_down(),
                gamma_up: ab.gamma_up(),
                a: ab.a(),
                b: ab.b(),
                phi_inertial: g.inertial,
                phi_noninertial: g.noninertial,
                n: p.n,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn dos_shape() {
        let (wc, q) = (1e9, 1e4);
        let peak = lorentzian_dos(wc, wc, q).unwrap();
        assert!(rel(peak, q / wc) < 1e-14);
        assert!(rel(lorentzian_dos(wc + wc / q, wc, q).unwrap(), peak / 2.0) < 1e-12);
        assert!(rel(lorentzian_dos(wc - wc / q, wc, q).unwrap(), peak / 2.0) < 1e-12);
        assert!(lorentzian_dos(wc + 10.0 * wc / q, wc, q).unwrap() < 0.01 * peak);
        assert!(lorentzian_dos(wc, wc, 0.0).is_err());
        let h = 10.0;
        let num = (lorentzian_dos(wc + 3e5 + h, wc, q).unwrap() - lorentzian_dos(wc + 3e5 - h, wc, q).unwrap()) / (2.0 * h);
        assert!(rel(dos_derivative(wc + 3e5, wc, q), num) < 1e-5);
    }

    #[test]
    fn zero_radius_is_purely_inertial() {
        for mut p in [CavityParams::high_regime_reference(), CavityParams::low_regime_reference()] {
            p.radius = 0.0;
            p.eta = 1e-3;
            let ab = lindblad(&p).unwrap();
            let expect = p.eta * lorentzian_dos(p.omega0, p.omega_c, p.q).unwrap() * p.omega0;
            assert!(rel(ab.gamma_down(), expect) < 1e-14);
            assert_eq!(ab.gamma_up(), 0.0);
            assert!(rel(ab.a(), expect / 4.0) < 1e-14 && rel(ab.b(), expect / 4.0) < 1e-14);
            assert_eq!(gp_regimes(&p).unwrap().noninertial, 0.0);
        }
    }

    #[test]
    fn regime_guards() {
        let mut p = CavityParams::high_regime_reference();
        p.eta = 1e-6;
        assert!(rates_low(&p).is_err());
        let mut q = CavityParams::low_regime_reference();
        q.eta = 1e-6;
        assert!(rates_high(&q).is_err());
        q.omega = 1e6;
        assert!(lindblad(&q).is_err());
        q.q = 1.0;
        assert!(q.validate().is_err());
    }

    #[test]
    fn high_regime_cavity_on_sideband() {
        let mut p = CavityParams::high_regime_reference();
        p.eta = eta_for_a_scale(&p, 1e-16).unwrap();
        let ab = rates_high(&p).unwrap();
        assert!(rel(PI * ab.a() / p.omega0, 1e-16) < 1e-12);
        assert!(ab.a_noninertial() > 1e5 * ab.a_inertial());
        let g = gp_regimes(&p).unwrap();
        assert!(g.noninertial.abs() > 1e-7 && g.noninertial.abs() < 1e-4, "{}", g.noninertial);
        assert!(g.inertial.abs() > 1e-14 && g.inertial.abs() < 1e-11, "{}", g.inertial);
    }

    #[test]
    fn high_regime_cavity_on_atom() {
        let mut p = CavityParams::high_regime_reference();
        p.omega_c = p.omega0;
        p.eta = 1.0;
        let ab = rates_high(&p).unwrap();
        let inertial = ab.rates.down_inertial;
        for term in [ab.rates.down_noninertial, ab.rates.up_noninertial] {
            assert!(inertial >= p.q * term.abs());
        }
    }

    #[test]
    fn low_regime_comparable_contributions() {
        let mut p = CavityParams::low_regime_reference();
        p.eta = 1.0;
        let ab = rates_low(&p).unwrap();
        assert_eq!(ab.b() - ab.a(), 0.0);
        let r = ab.rates.down_noninertial / ab.rates.down_inertial;
        assert!((0.1..=10.0).contains(&r), "{}", r);
        p.theta = PI / 2.0;
        p.eta = eta_for_a_scale(&p, 1e-21).unwrap();
        let g = gp_regimes(&p).unwrap();
        let expect = -(PI * PI * p.n * p.n / (2.0 * p.omega0)) * lindblad(&p).unwrap().gamma_down() * 2.0;
        assert!(rel(g.nonunitary(), expect) < 1e-12);
    }

    #[test]
    fn exact_phase_limits() {
        let (omega, n) = (1e7, 3.0);
        let t = 2.0 * PI * n / omega;
        for th in [0.3, 1.0, 2.5] {
            let g = gp_exact(0.0, 0.0, omega, th, t).unwrap();
            assert!((g + PI * n * (1.0 - th.cos())).abs() < 1e-10);
        }
        assert!(gp_exact(1e3, 5e2, omega, 0.0, t).unwrap().abs() < 1e-14);
        assert!(gp_exact(-1.0, 0.0, omega, 1.0, t).is_err());
    }

    #[test]
    fn exact_matches_closed_form() {
        let omega = 1e7;
        for (a, n, th) in [(1.0, 100.0, 1.0), (3.0, 50.0, PI / 2.0), (0.5, 200.0, 2.0), (2.0, 10.0, 0.4)] {
            for b in [a, 0.5 * a, -0.3 * a] {
                assert!(PI * n * a / omega < 1e-3);
                let t = 2.0 * PI * n / omega;
                let ex = gp_exact_nonunitary(a, b, omega, th, t).unwrap();
                let (_, cl) = gp_closed(a, b, omega, th, n).unwrap();
                assert!(rel(ex, cl) < 1e-2, "a={} b={} n={} θ={}: {} vs {}", a, b, n, th, ex, cl);
            }
        }
    }

    #[test]
    fn refuses_outside_validity() {
        assert!(gp_closed(1e4, 1e4, 1e7, 1.0, 1e3).is_err());
        let mut p = CavityParams::low_regime_reference();
        p.eta = 1.0;
        p.n = 1e12;
        assert!(gp_regimes(&p).is_err());
    }

    #[test]
    fn sweep_keeps_order() {
        let mut p = CavityParams::low_regime_reference();
        p.eta = 1e-9;
        let wcs: Vec<f64> = (0..5).map(|i| 0.99e7 + 5e4 * i as f64).collect();
        let rows = sweep_omega_c(&p, &wcs).unwrap();
        assert!(rows.iter().zip(&wcs).all(|(r, w)| r.omega_c == *w && r.gamma_up == 0.0));
    }
}
