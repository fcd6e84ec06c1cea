//! Polynomial roots by Aberth–Ehrlich iteration with cluster refinement.
//!
//! Coefficients are ordered highest degree first: `c[0] x^d + ... + c[d]`.

use crate::error::{invalid, Result};
use num_complex::Complex64 as C64;

#[derive(Debug, Clone, Copy)]
pub struct RootOptions {
    /// Roots closer than `cluster_tol·max(1,|x|)` are merged into one multiple root.
    pub cluster_tol: f64,
    /// Leading coefficients below `zero_tol·max|c|` are treated as vanishing.
    pub zero_tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self { cluster_tol: 1e-6, zero_tol: 1e-14, max_iter: 500 }
    }
}

#[derive(Debug, Clone)]
pub struct Roots {
    /// Finite roots with repetition, sorted by (Re, Im).
    pub roots: Vec<C64>,
    /// Distinct roots with multiplicities.
    pub clusters: Vec<(C64, usize)>,
    /// Degree deficit from vanishing leading coefficients.
    pub at_infinity: usize,
}

pub fn poly_eval(c: &[C64], x: C64) -> C64 {
    c.iter().fold(C64::new(0.0, 0.0), |acc, &a| acc * x + a)
}

fn derivative(c: &[C64]) -> Vec<C64> {
    let d = c.len() - 1;
    c[..d].iter().enumerate().map(|(i, &a)| a * (d - i) as f64).collect()
}

/// Coefficients (highest first, monic) of Π(x − r).
pub fn poly_from_roots(roots: &[C64]) -> Vec<C64> {
    let mut c = vec![C64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![C64::new(0.0, 0.0); c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i] += a;
            next[i + 1] -= a * r;
        }
        c = next;
    }
    c
}

pub fn poly_roots(coeffs: &[C64]) -> Result<Roots> {
    poly_roots_with(coeffs, RootOptions::default())
}

pub fn poly_roots_with(coeffs: &[C64], opt: RootOptions) -> Result<Roots> {
    let cmax = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if coeffs.is_empty() || cmax == 0.0 {
        return invalid("all-zero polynomial");
    }
    if coeffs.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return invalid("non-finite coefficient");
    }
    let lead = coeffs.iter().position(|z| z.norm() > opt.zero_tol * cmax).unwrap();
    let at_infinity = lead;
    let mut c: Vec<C64> = coeffs[lead..].to_vec();
    let mut zeros = 0usize;
    while c.len() > 1 && c[c.len() - 1] == C64::new(0.0, 0.0) {
        c.pop();
        zeros += 1;
    }
    let a0 = c[0];
    let c: Vec<C64> = c.iter().map(|z| z / a0).collect();
    let mut roots = vec![C64::new(0.0, 0.0); zeros];
    let d = c.len() - 1;
    if d > 0 {
        roots.extend(aberth(&c, opt.max_iter));
    }
    let full: Vec<C64> = coeffs[lead..].iter().map(|z| z / a0).collect();
    let (roots, clusters) = cluster(&full, roots, opt.cluster_tol);
    Ok(Roots { roots, clusters, at_infinity })
}

fn aberth(c: &[C64], max_iter: usize) -> Vec<C64> {
    let d = c.len() - 1;
    if d == 1 {
        return vec![-c[1]];
    }
    let dc = derivative(c);
    // initial radius from the Cauchy-type bound
    let rad = c[1..].iter().enumerate().map(|(i, z)| z.norm().powf(1.0 / (i + 1) as f64)).fold(0.0, f64::max).max(1e-3);
    let mut z: Vec<C64> = (0..d)
        .map(|k| C64::from_polar(rad, 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4))
        .collect();
    let mut done = vec![false; d];
    for _ in 0..max_iter {
        let mut all = true;
        for k in 0..d {
            if done[k] {
                continue;
            }
            let p = poly_eval(c, z[k]);
            let dp = poly_eval(&dc, z[k]);
            if p.norm() == 0.0 {
                done[k] = true;
                continue;
            }
            let w = p / dp;
            let s: C64 = (0..d).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = w / (1.0 - w * s);
            let step = if step.re.is_finite() && step.im.is_finite() { step } else { w };
            z[k] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * z[k].norm().max(1e-300) {
                done[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            break;
        }
    }
    z
}

fn residual_bound(c: &[C64], x: C64) -> f64 {
    let cmax = c.iter().map(|z| z.norm()).fold(0.0, f64::max);
    1e-9 * cmax * x.norm().max(1.0).powi((c.len() - 1) as i32)
}

/// Newton on the (m-1)th derivative, where an m-fold root is simple.
fn refine_multiple(c: &[C64], mean: C64, m: usize) -> Option<C64> {
    let mut dc = c.to_vec();
    for _ in 0..m - 1 {
        dc = derivative(&dc);
    }
    if dc.len() < 2 {
        return None;
    }
    let ddc = derivative(&dc);
    let mut x = mean;
    for _ in 0..60 {
        let den = poly_eval(&ddc, x);
        if den.norm() == 0.0 {
            break;
        }
        let step = poly_eval(&dc, x) / den;
        x -= step;
        if step.norm() <= 1e-16 * x.norm().max(1.0) {
            break;
        }
    }
    let ok = x.re.is_finite() && x.im.is_finite() && poly_eval(c, x).norm() <= residual_bound(c, x);
    ok.then_some(x)
}

/// Groups numerically coincident roots. An m-fold root is only resolved to about
/// eps^(1/m), so the merge radius is `max(tol, 8·eps^(1/m))·max(1,|x|)`.
fn cluster(c: &[C64], roots: Vec<C64>, tol: f64) -> (Vec<C64>, Vec<(C64, usize)>) {
    let key = |a: &C64, b: &C64| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap());
    let mut sorted = roots;
    sorted.sort_by(key);
    let n = sorted.len();
    let mut used = vec![false; n];
    let mut clusters: Vec<(C64, usize)> = Vec::new();
    for i in 0..n {
        if used[i] {
            continue;
        }
        let ri = sorted[i];
        let scale = ri.norm().max(1.0);
        let mut cand: Vec<usize> = (0..n).filter(|&j| !used[j]).collect();
        cand.sort_by(|&a, &b| (sorted[a] - ri).norm().partial_cmp(&(sorted[b] - ri).norm()).unwrap());
        let spread = |m: usize| {
            let mean = cand[..m].iter().map(|&j| sorted[j]).sum::<C64>() / m as f64;
            let rad = cand[..m].iter().map(|&j| (sorted[j] - mean).norm()).fold(0.0, f64::max);
            (mean, rad)
        };
        let mut best = 1;
        for m in 2..=cand.len() {
            let (_, rad) = spread(m);
            if rad <= tol.max(8.0 * f64::EPSILON.powf(1.0 / m as f64)) * scale {
                best = m;
            }
        }
        let mut chosen = (ri, 1usize);
        while best > 1 {
            let (mean, rad) = spread(best);
            if let Some(x) = refine_multiple(c, mean, best) {
                if (x - mean).norm() <= 2.0 * rad.max(tol * scale) {
                    chosen = (x, best);
                    break;
                }
            }
            if rad <= tol * scale {
                chosen = (mean, best);
                break;
            }
            best -= 1;
        }
        for &j in &cand[..chosen.1] {
            used[j] = true;
        }
        clusters.push(chosen);
    }
    clusters.sort_by(|a, b| key(&a.0, &b.0));
    let roots = clusters.iter().flat_map(|&(x, m)| std::iter::repeat(x).take(m)).collect();
    (roots, clusters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn quadratic() {
        let r = poly_roots(&[c(1.0), c(0.0), c(-1.0)]).unwrap();
        assert!((r.roots[0] - c(-1.0)).norm() < 1e-14);
        assert!((r.roots[1] - c(1.0)).norm() < 1e-14);
        assert_eq!(r.at_infinity, 0);
    }

    #[test]
    fn majorana_double_root() {
        let a = 0.5f64.sqrt();
        let s2 = 2f64.sqrt();
        let r = poly_roots(&[c(a * a / s2), c(-s2 * a * a), c(a * a / s2)]).unwrap();
        assert_eq!(r.clusters.len(), 1);
        assert_eq!(r.clusters[0].1, 2);
        assert!((r.roots[0] - c(1.0)).norm() < 1e-12);
    }

    #[test]
    fn zero_double_root() {
        let r = poly_roots(&[c(0.5f64.sqrt()), c(0.0), c(0.0)]).unwrap();
        assert_eq!(r.roots, vec![c(0.0), c(0.0)]);
    }

    #[test]
    fn roots_at_infinity() {
        let r = poly_roots(&[c(0.0), c(0.0), c(1.0), c(-2.0)]).unwrap();
        assert_eq!(r.at_infinity, 2);
        assert_eq!(r.roots.len(), 1);
        assert!((r.roots[0] - c(2.0)).norm() < 1e-14);
    }

    #[test]
    fn all_zero_rejected() {
        assert!(poly_roots(&[c(0.0), c(0.0)]).is_err());
    }

    #[test]
    fn triple_root_is_merged() {
        let p = poly_from_roots(&[C64::new(0.3, 0.2); 3]);
        let r = poly_roots(&p).unwrap();
        assert_eq!(r.clusters.len(), 1);
        assert!((r.clusters[0].0 - C64::new(0.3, 0.2)).norm() < 1e-10);
    }

    #[test]
    fn sevenfold_root_is_merged() {
        let p = poly_from_roots(&[C64::new(0.6, -0.1); 7]);
        let r = poly_roots(&p).unwrap();
        assert_eq!(r.clusters.len(), 1);
        assert_eq!(r.clusters[0].1, 7);
        assert!((r.clusters[0].0 - C64::new(0.6, -0.1)).norm() < 1e-10);
    }

    #[test]
    fn close_distinct_roots_not_merged() {
        let r = poly_roots(&poly_from_roots(&[c(0.5), c(0.501)])).unwrap();
        assert_eq!(r.clusters.len(), 2);
    }

    #[test]
    fn degree_eight_roundtrip() {
        let truth: Vec<C64> = (0..8).map(|k| C64::from_polar(1.0 + 0.1 * k as f64, 0.7 * k as f64)).collect();
        let r = poly_roots(&poly_from_roots(&truth)).unwrap();
        for t in &truth {
            assert!(r.roots.iter().any(|x| (x - t).norm() < 1e-10));
        }
    }
}
