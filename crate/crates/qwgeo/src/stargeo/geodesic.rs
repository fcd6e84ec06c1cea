//! Geodesics in projective Hilbert space and the circle decomposition of their
//! Majorana stars.

use super::stars::{coherent_state, state_to_stars};
use crate::error::{invalid, QwError, Result};
use crate::geophase::{cross3, dot3, PureCurve};
use crate::numkit::matrix::pauli;
use crate::numkit::{inner, norm, normalize, ComplexMatrix};
use crate::C64;
use std::f64::consts::PI;

/// `|Ψ(s)⟩ = cos s|Ψ₁⟩ + sin s(|Ψ₂⟩ − ξ|Ψ₁⟩)/√(1−ξ²)`, s ∈ [0, θ], cos θ = ξ = |⟨Ψ₁|Ψ₂⟩|,
/// with Ψ₂ re-phased so the overlap is real positive. Identical endpoints give a constant
/// curve parametrized over [0, 1].
pub fn geodesic(psi1: &[C64], psi2: &[C64], samples: usize) -> Result<PureCurve> {
    if psi1.len() != psi2.len() || psi1.is_empty() {
        return invalid("endpoint dimensions differ");
    }
    if samples < 2 {
        return invalid("need at least two samples");
    }
    let p1 = normalize(psi1).ok_or_else(|| QwError::InvalidInput("zero endpoint".into()))?;
    let p2 = normalize(psi2).ok_or_else(|| QwError::InvalidInput("zero endpoint".into()))?;
    let ov = inner(&p1, &p2);
    if ov.norm() <= 1e-12 {
        return Err(QwError::Orthogonal("geodesic between orthogonal states is not unique".into()));
    }
    let xi = ov.norm().min(1.0);
    let ph = (ov / ov.norm()).conj();
    let p2: Vec<C64> = p2.iter().map(|z| z * ph).collect();
    let perp: Vec<C64> = p2.iter().zip(&p1).map(|(b, a)| b - a * xi).collect();
    let pn = norm(&perp);
    if pn < 1e-14 {
        return PureCurve::from_fn(0.0, 1.0, samples, |_| p1.clone());
    }
    let perp: Vec<C64> = perp.iter().map(|z| z / pn).collect();
    let theta = xi.acos();
    PureCurve::from_fn(0.0, theta, samples, |s| {
        let (sn, cs) = s.sin_cos();
        p1.iter().zip(&perp).map(|(a, b)| a * cs + b * sn).collect()
    })
}

/// Points on the unit sphere with their parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochCurve {
    pub params: Vec<f64>,
    pub points: Vec<[f64; 3]>,
}

/// Circle through a sampled curve: plane normal `normal`, offset `d = normal·p`,
/// center `d·normal`, radius √(1−d²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleFit {
    pub normal: [f64; 3],
    pub offset: f64,
    pub center: [f64; 3],
    pub radius: f64,
    /// max |normal·p − d| over the samples
    pub plane_residual: f64,
    /// max |‖p − center‖ − radius| over the samples
    pub radius_residual: f64,
}

impl BlochCurve {
    /// Fits the plane through three well-separated samples and measures all residuals.
    pub fn circle_fit(&self) -> Option<CircleFit> {
        let n = self.points.len();
        if n < 3 {
            return None;
        }
        let (a, b, c) = (self.points[n / 4], self.points[n / 2], self.points[(3 * n) / 4]);
        let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
        let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
        let w = cross3(u, v);
        let wn = dot3(w, w).sqrt();
        if wn < 1e-300 {
            return None;
        }
        let mut normal = [w[0] / wn, w[1] / wn, w[2] / wn];
        let mut d = dot3(normal, a);
        if d < 0.0 {
            normal = [-normal[0], -normal[1], -normal[2]];
            d = -d;
        }
        let center = [d * normal[0], d * normal[1], d * normal[2]];
        let radius = (1.0 - d * d).max(0.0).sqrt();
        let mut plane_residual: f64 = 0.0;
        let mut radius_residual: f64 = 0.0;
        for p in &self.points {
            plane_residual = plane_residual.max((dot3(normal, *p) - d).abs());
            let q = [p[0] - center[0], p[1] - center[1], p[2] - center[2]];
            radius_residual = radius_residual.max((dot3(q, q).sqrt() - radius).abs());
        }
        Some(CircleFit { normal, offset: d, center, radius, plane_residual, radius_residual })
    }
}

#[derive(Debug, Clone)]
pub struct GeodesicDecomposition {
    /// Star trajectories in the canonical frame (first endpoint star at the north pole,
    /// second in the xz-plane with x > 0). Curve k follows the root `Δ·ω_k·A^{1/m}`.
    pub curves: Vec<BlochCurve>,
    /// Mirror pairs (i ≤ j) under y → −y; i == j marks a curve on the great circle.
    pub pairing: Vec<(usize, usize)>,
    /// Index of the curve on the great circle through the endpoint stars (n even).
    pub great_circle: Option<usize>,
    /// Fitted circles, one per curve (None for stationary curves).
    pub circles: Vec<Option<CircleFit>>,
    /// Radii from the closed form `β/√(β² + α²Im²(Δω_k))`.
    pub radii_formula: Vec<f64>,
    /// Rotation taking canonical-frame Bloch vectors back to the input frame.
    pub to_input_frame: [[f64; 3]; 3],
    pub alpha: f64,
    pub beta: f64,
    pub theta: f64,
    /// Largest Bloch-space step between consecutive tracked samples, end steps excluded.
    pub max_step: f64,
    /// max ‖p_j(s) − reflect(p_i(s))‖ over pairs and samples.
    pub reflection_residual: f64,
}

impl GeodesicDecomposition {
    pub fn dimension(&self) -> usize {
        self.curves.len() + 1
    }

    /// Largest plane/radius residual over all non-stationary curves.
    pub fn max_circle_residual(&self) -> f64 {
        self.circles.iter().flatten().map(|c| c.plane_residual.max(c.radius_residual)).fold(0.0, f64::max)
    }
}

/// Principal root Δ of Π_k ω_k (= ±1) over the m-th roots of unity.
pub fn delta_root(m: usize) -> C64 {
    if m % 2 == 0 {
        C64::from_polar(1.0, PI / m as f64)
    } else {
        C64::new(1.0, 0.0)
    }
}

/// Closed-form radius of the k-th star circle.
pub fn radius_formula(alpha: f64, beta: f64, m: usize, k: usize) -> f64 {
    let w = delta_root(m) * C64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64);
    beta / (beta * beta + alpha * alpha * w.im * w.im).sqrt()
}

/// Dual partner of curve k: conjugation maps Δω_k to Δω_j with
/// `k + j ≡ m−1 (mod m)` for even m and `k + j ≡ 0 (mod m)` for odd m.
pub fn dual_index(m: usize, k: usize) -> usize {
    let target = if m % 2 == 0 { m - 1 } else { 0 };
    (target + m - (k % m)) % m
}

/// Canonical-frame Bloch point of star k at arc length s.
pub fn closed_form_star(alpha: f64, beta: f64, m: usize, k: usize, s: f64, theta: f64) -> [f64; 3] {
    if s <= 0.0 {
        return [0.0, 0.0, 1.0];
    }
    if s >= theta {
        return [2.0 * alpha * beta, 0.0, alpha * alpha - beta * beta];
    }
    let a = s.sin() / (theta - s).sin();
    let z = delta_root(m) * C64::from_polar(a.powf(1.0 / m as f64), 2.0 * PI * k as f64 / m as f64);
    let x = beta * z / (1.0 + alpha * z);
    pauli::bloch(&[C64::new(1.0, 0.0), x])
}

/// Endpoints `|0⟩^{⊗m}` and `(α, β)^{⊗m}` with `α^m = cos θ`.
pub fn degenerate_endpoints(n: usize, theta: f64) -> Result<(Vec<C64>, Vec<C64>)> {
    if n < 2 {
        return invalid("dimension must be at least 2");
    }
    if !(0.0..PI / 2.0).contains(&theta) {
        return invalid("theta must lie in [0, π/2)");
    }
    let m = n - 1;
    let alpha = theta.cos().powf(1.0 / m as f64);
    let beta = (1.0 - alpha * alpha).max(0.0).sqrt();
    let mut p1 = vec![C64::new(0.0, 0.0); n];
    p1[0] = C64::new(1.0, 0.0);
    Ok((p1, coherent_state(C64::new(alpha, 0.0), C64::new(beta, 0.0), m)))
}

/// SO(3) image of an SU(2) matrix: `O_ij = ½ tr(σ_i R σ_j R†)`.
fn so3(r: &ComplexMatrix) -> [[f64; 3]; 3] {
    let s = [pauli::x(), pauli::y(), pauli::z()];
    let mut o = [[0.0; 3]; 3];
    for j in 0..3 {
        let t = r.matmul(&s[j]).matmul(&r.adjoint());
        for i in 0..3 {
            o[i][j] = 0.5 * s[i].matmul(&t).trace().re;
        }
    }
    o
}

fn degenerate_star(psi: &[C64]) -> Result<Vec<C64>> {
    let st = state_to_stars(psi)?;
    if st.multiplicities.len() != 1 {
        return invalid("endpoint is not a degenerate-star state");
    }
    Ok(st.stars[0].clone())
}

/// Minimum-cost assignment (cost[i][j]: previous curve i to new point j) by subset DP.
fn assign(cost: &[Vec<f64>]) -> Vec<usize> {
    let m = cost.len();
    let full = 1usize << m;
    let mut dp = vec![f64::INFINITY; full];
    let mut from = vec![usize::MAX; full];
    dp[0] = 0.0;
    for mask in 0..full {
        if !dp[mask].is_finite() {
            continue;
        }
        let i = mask.count_ones() as usize;
        if i == m {
            continue;
        }
        for j in 0..m {
            if mask & (1 << j) == 0 {
                let nm = mask | (1 << j);
                let v = dp[mask] + cost[i][j];
                if v < dp[nm] {
                    dp[nm] = v;
                    from[nm] = j;
                }
            }
        }
    }
    let mut out = vec![0; m];
    let mut mask = full - 1;
    for i in (0..m).rev() {
        let j = from[mask];
        out[i] = j;
        mask &= !(1 << j);
    }
    out
}

fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Tracks the Majorana stars along the geodesic between two degenerate-star states.
pub fn geodesic_decompose(psi1: &[C64], psi2: &[C64], samples: usize) -> Result<GeodesicDecomposition> {
    let n = psi1.len();
    if n < 2 || psi2.len() != n {
        return invalid("endpoints must share a dimension >= 2");
    }
    let m = n - 1;
    if m > 16 {
        return invalid("dimension above 17 is not supported by the root tracker");
    }
    if samples < 5 {
        return invalid("need at least five samples");
    }
    let s1 = degenerate_star(psi1)?;
    let s2 = degenerate_star(psi2)?;
    // SU(2) frame: s1 -> |0>, s2 -> (α, β) with α, β >= 0
    let r1 = ComplexMatrix::m2(s1[0].conj(), s1[1].conj(), -s1[1], s1[0]);
    let t = r1.mul_vec(&s2);
    let chi = if t[1].norm() > 1e-15 { (t[1] / t[0]).arg() } else { 0.0 };
    let rz = ComplexMatrix::m2(C64::from_polar(1.0, chi / 2.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::from_polar(1.0, -chi / 2.0));
    let rot = rz.matmul(&r1);
    let o = so3(&rot);
    let mut back = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            back[i][j] = o[j][i];
        }
    }
    let alpha = t[0].norm();
    let beta = t[1].norm();
    if alpha <= 1e-12 {
        return Err(QwError::Orthogonal("endpoint stars are antipodal".into()));
    }
    let (c1, c2) = degenerate_endpoints(n, (alpha.powi(m as i32)).min(1.0).acos())?;
    let theta = (alpha.powi(m as i32)).min(1.0).acos();
    let curve = geodesic(&c1, &c2, samples)?;

    let mut tracks: Vec<Vec<[f64; 3]>> = vec![Vec::with_capacity(samples); m];
    let mut max_step: f64 = 0.0;
    for (idx, st) in curve.states().iter().enumerate() {
        let pts = state_to_stars(st)?.bloch_points();
        if idx == 0 {
            for (k, p) in pts.into_iter().enumerate() {
                tracks[k].push(p);
            }
            continue;
        }
        let cost: Vec<Vec<f64>> = (0..m).map(|i| pts.iter().map(|p| dist(tracks[i][idx - 1], *p)).collect()).collect();
        let a = assign(&cost);
        for i in 0..m {
            let step = dist(tracks[i][idx - 1], pts[a[i]]);
            if idx > 1 && idx < samples - 1 {
                max_step = max_step.max(step);
            }
            tracks[i].push(pts[a[i]]);
        }
    }
    if beta > 1e-12 && max_step > 0.5 {
        return Err(QwError::Numerical(format!("root tracking jumped by {:.3} in Bloch distance", max_step)));
    }

    // label tracks by the closed-form roots at the midpoint
    let mid = samples / 2;
    let s_mid = curve.params()[mid];
    let labels = if beta > 1e-12 {
        let cost: Vec<Vec<f64>> = (0..m)
            .map(|k| {
                let p = closed_form_star(alpha, beta, m, k, s_mid, theta);
                (0..m).map(|i| dist(p, tracks[i][mid])).collect()
            })
            .collect();
        assign(&cost)
    } else {
        (0..m).collect()
    };
    let curves: Vec<BlochCurve> =
        labels.iter().map(|&i| BlochCurve { params: curve.params().to_vec(), points: tracks[i].clone() }).collect();

    let mut pairing = Vec::new();
    for k in 0..m {
        let j = dual_index(m, k);
        if k <= j {
            pairing.push((k, j));
        }
    }
    let great_circle = pairing.iter().find(|(i, j)| i == j).map(|p| p.0);
    let mut reflection_residual: f64 = 0.0;
    for &(i, j) in &pairing {
        for (p, q) in curves[i].points.iter().zip(&curves[j].points) {
            reflection_residual = reflection_residual.max(dist(*q, [p[0], -p[1], p[2]]));
        }
    }
    let circles = curves.iter().map(|c| if beta > 1e-12 { c.circle_fit() } else { None }).collect();
    let radii_formula = (0..m).map(|k| if beta > 1e-12 { radius_formula(alpha, beta, m, k) } else { 0.0 }).collect();
    Ok(GeodesicDecomposition {
        curves,
        pairing,
        great_circle,
        circles,
        radii_formula,
        to_input_frame: back,
        alpha,
        beta,
        theta,
        max_step,
        reflection_residual,
    })
}

/// Unitary U with `U·ψ₁ = (1,0,0)` and `U·ψ₂ = e^{iφ}(α², √2αβ, β²)`, α² = |⟨ψ₁|ψ₂⟩|,
/// e^{iφ} the phase of the overlap.
pub fn degenerate_mapping_unitary(psi1: &[C64], psi2: &[C64]) -> Result<ComplexMatrix> {
    if psi1.len() != 3 || psi2.len() != 3 {
        return invalid("mapping unitary is defined for 3-level states");
    }
    let p1 = normalize(psi1).ok_or_else(|| QwError::InvalidInput("zero state".into()))?;
    let p2 = normalize(psi2).ok_or_else(|| QwError::InvalidInput("zero state".into()))?;
    let ov = inner(&p1, &p2);
    if ov.norm() <= 1e-12 {
        return Err(QwError::Orthogonal("mapping undefined for orthogonal states".into()));
    }
    let xi = ov.norm().min(1.0);
    let ph = (ov / ov.norm()).conj();
    let p2: Vec<C64> = p2.iter().map(|z| z * ph).collect();
    // orthonormal frame e1 = ψ₁, e2 ∝ ψ₂ − ξψ₁, e3 completes it
    let mut basis = vec![p1.clone()];
    let perp: Vec<C64> = p2.iter().zip(&p1).map(|(b, a)| b - a * xi).collect();
    let sin_t = norm(&perp);
    let mut cands: Vec<Vec<C64>> = Vec::new();
    if sin_t > 1e-10 {
        cands.push(perp.clone());
    }
    for i in 0..3 {
        let mut e = vec![C64::new(0.0, 0.0); 3];
        e[i] = C64::new(1.0, 0.0);
        cands.push(e);
    }
    while basis.len() < 3 {
        let mut best: Option<(f64, Vec<C64>)> = None;
        for c in &cands {
            let mut r = c.clone();
            for b in &basis {
                let pr = inner(b, &r);
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= pr * y;
                }
            }
            let rn = norm(&r);
            let better = match &best {
                None => true,
                Some((bn, _)) => rn > *bn + 1e-12,
            };
            // the perpendicular direction, when present, must be the second vector
            if basis.len() == 1 && sin_t > 1e-10 {
                best = Some((rn, r));
                break;
            }
            if better {
                best = Some((rn, r));
            }
        }
        let (rn, r) = best.unwrap();
        basis.push(r.iter().map(|z| z / rn).collect());
    }
    let mut v = ComplexMatrix::zeros(3, 3);
    for (i, b) in basis.iter().enumerate() {
        for j in 0..3 {
            v[(i, j)] = b[j].conj();
        }
    }
    if sin_t <= 1e-10 {
        return Ok(v);
    }
    let alpha2 = xi;
    let alpha = alpha2.sqrt();
    let beta = (1.0 - alpha2).max(0.0).sqrt();
    let a = 2f64.sqrt() * alpha * beta / sin_t;
    let b = beta * beta / sin_t;
    let w = ComplexMatrix::from_real_rows(&[&[1.0, 0.0, 0.0], &[0.0, a, -b], &[0.0, b, a]])?;
    Ok(w.matmul(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geophase::gp_curve;

    #[test]
    fn geodesic_endpoints() {
        let p1 = normalize(&[C64::new(1.0, 0.2), C64::new(0.3, -0.5), C64::new(0.1, 0.0)]).unwrap();
        let p2 = normalize(&[C64::new(0.4, 0.0), C64::new(0.2, 0.9), C64::new(-0.3, 0.1)]).unwrap();
        let g = geodesic(&p1, &p2, 101).unwrap();
        let st = g.states();
        assert!((inner(&st[0], &p1).norm() - 1.0).abs() < 1e-12);
        assert!((inner(&st[100], &p2).norm() - 1.0).abs() < 1e-12);
        assert!(gp_curve(&g).unwrap().abs() < 1e-8);
    }

    #[test]
    fn qubit_geodesic_is_great_circle() {
        let p1 = normalize(&[C64::new(0.9, 0.1), C64::new(0.2, 0.4)]).unwrap();
        let p2 = normalize(&[C64::new(0.1, -0.3), C64::new(0.8, 0.2)]).unwrap();
        let g = geodesic(&p1, &p2, 31).unwrap();
        let pts: Vec<[f64; 3]> = g.states().iter().map(|s| pauli::bloch(s)).collect();
        for i in 0..pts.len() {
            assert!(dot3(pts[0], cross3(pts[30], pts[i])).abs() < 1e-9);
        }
    }

    #[test]
    fn qutrit_decomposition_circle() {
        let th = PI / 3.0;
        let (p1, p2) = degenerate_endpoints(3, th).unwrap();
        let d = geodesic_decompose(&p1, &p2, 401).unwrap();
        let (a, b) = (d.alpha, d.beta);
        for c in &d.curves {
            for p in &c.points {
                let r = (p[0] - a * b).powi(2) + p[1].powi(2) + (p[2] - a * a).powi(2) - b * b;
                assert!(r.abs() < 1e-9);
            }
        }
        assert!((radius_formula(a, b, 2, 0) - b).abs() < 1e-15);
        assert_eq!(d.pairing, vec![(0, 1)]);
        assert!(d.reflection_residual < 1e-9);
    }

    #[test]
    fn even_dimension_has_great_circle_curve() {
        let (p1, p2) = degenerate_endpoints(4, 0.9).unwrap();
        let d = geodesic_decompose(&p1, &p2, 301).unwrap();
        let g = d.great_circle.unwrap();
        assert!(d.circles[g].unwrap().offset.abs() < 1e-9);
        for (k, c) in d.circles.iter().enumerate() {
            let c = c.unwrap();
            assert!((c.radius - d.radii_formula[k]).abs() < 1e-9);
        }
    }

    #[test]
    fn decomposition_in_rotated_frame() {
        // rotate a canonical pair by a random SU(2): same radii
        let (p1, p2) = degenerate_endpoints(3, 0.8).unwrap();
        let d0 = geodesic_decompose(&p1, &p2, 201).unwrap();
        let s1 = vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)];
        let q = normalize(&[C64::new(0.3, 0.1), C64::new(0.9, 0.0)]).unwrap();
        // pick a second star at the same angular distance as the canonical pair
        let ang = (d0.alpha).acos();
        let axis_state = geodesic(&s1, &q, 2001).unwrap();
        let idx = axis_state.params().iter().position(|&s| s >= ang).unwrap();
        let s2 = axis_state.states()[idx].clone();
        let e1 = coherent_state(s1[0], s1[1], 2);
        let e2 = coherent_state(s2[0], s2[1], 2);
        let d1 = geodesic_decompose(&e1, &e2, 201).unwrap();
        assert!((d1.beta - d0.beta).abs() < 2e-3);
        assert!(d1.max_circle_residual() < 1e-9);
    }

    #[test]
    fn mapping_unitary_on_real_pair() {
        let th: f64 = 0.7;
        let p1 = vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        let p2 = vec![C64::new(th.cos(), 0.0), C64::new(th.sin(), 0.0), C64::new(0.0, 0.0)];
        let u = degenerate_mapping_unitary(&p1, &p2).unwrap();
        let (al, be) = (th.cos().sqrt(), (1.0 - th.cos()).sqrt());
        let img = u.mul_vec(&p2);
        assert!((img[0].re - al * al).abs() < 1e-12);
        assert!((img[1].re - 2f64.sqrt() * al * be).abs() < 1e-12);
        assert!((img[2].re - be * be).abs() < 1e-12);
        let a = 2f64.sqrt() * al * be / th.sin();
        let b = be * be / th.sin();
        assert!((u[(1, 1)].re - a).abs() < 1e-12 && (u[(2, 1)].re - b).abs() < 1e-12);
    }
}
