//! Majorana stars of symmetric (spin-j) states.
//!
//! Amplitudes `c_r` are in the symmetric (Dicke) basis, r = number of |1⟩ factors.
//! The polynomial is `p(x) = Σ_r f_r x^{n−1−r}` with `f_r = (−1)^r c_r/√(r!(n−1−r)!)`;
//! a root `x` is the star `(1, x)/√(1+|x|²)` and each missing degree is a star at |1⟩.

use crate::error::{invalid, Result};
use crate::numkit::matrix::pauli;
use crate::numkit::{normalize, poly_roots_with, RootOptions};
use crate::C64;

#[derive(Debug, Clone, PartialEq)]
pub struct StarSet {
    /// Unit qubit states, finite roots first (sorted), then stars at infinity.
    pub stars: Vec<Vec<C64>>,
    /// Number of stars at |1⟩ coming from vanishing leading coefficients.
    pub at_infinity: usize,
    /// Distinct stars with multiplicities (same order as the finite roots).
    pub multiplicities: Vec<usize>,
}

impl StarSet {
    pub fn bloch_points(&self) -> Vec<[f64; 3]> {
        self.stars.iter().map(|s| pauli::bloch(s)).collect()
    }
    pub fn len(&self) -> usize {
        self.stars.len()
    }
    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }
}

fn ln_factorial(k: usize) -> f64 {
    (1..=k).map(|i| (i as f64).ln()).sum()
}

/// √(r!(m−r)!)
fn sqrt_fact_pair(r: usize, m: usize) -> f64 {
    (0.5 * (ln_factorial(r) + ln_factorial(m - r))).exp()
}

/// Majorana polynomial coefficients, highest degree first.
pub fn majorana_coefficients(c: &[C64]) -> Vec<C64> {
    let m = c.len() - 1;
    c.iter()
        .enumerate()
        .map(|(r, &cr)| {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            cr * (sign / sqrt_fact_pair(r, m))
        })
        .collect()
}

/// Star from a root.
pub fn star_from_root(x: C64) -> Vec<C64> {
    let n = (1.0 + x.norm_sqr()).sqrt();
    vec![C64::new(1.0 / n, 0.0), x / n]
}

pub fn state_to_stars(c: &[C64]) -> Result<StarSet> {
    state_to_stars_with(c, RootOptions::default())
}

pub fn state_to_stars_with(c: &[C64], opt: RootOptions) -> Result<StarSet> {
    if c.len() < 2 {
        return invalid("need at least a qubit (dimension >= 2)");
    }
    let c = normalize(c).ok_or_else(|| crate::QwError::InvalidInput("zero state vector".into()))?;
    let roots = poly_roots_with(&majorana_coefficients(&c), opt)?;
    let mut stars: Vec<Vec<C64>> = roots.roots.iter().map(|&x| star_from_root(x)).collect();
    for _ in 0..roots.at_infinity {
        stars.push(vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)]);
    }
    let mut multiplicities: Vec<usize> = roots.clusters.iter().map(|c| c.1).collect();
    if roots.at_infinity > 0 {
        multiplicities.push(roots.at_infinity);
    }
    Ok(StarSet { stars, at_infinity: roots.at_infinity, multiplicities })
}

/// Symmetrized product of the stars, normalized. Left inverse of `state_to_stars`
/// up to a global phase.
pub fn stars_to_state(stars: &[Vec<C64>]) -> Result<Vec<C64>> {
    if stars.is_empty() {
        return invalid("empty star set");
    }
    if stars.iter().any(|s| s.len() != 2) {
        return invalid("stars must be qubit states");
    }
    let m = stars.len();
    // Π_k (α_k + β_k t) = Σ_r e_r t^r
    let mut e = vec![C64::new(1.0, 0.0)];
    for s in stars {
        let mut next = vec![C64::new(0.0, 0.0); e.len() + 1];
        for (r, &v) in e.iter().enumerate() {
            next[r] += v * s[0];
            next[r + 1] += v * s[1];
        }
        e = next;
    }
    let c: Vec<C64> = e.iter().enumerate().map(|(r, &v)| v * sqrt_fact_pair(r, m)).collect();
    normalize(&c).ok_or_else(|| crate::QwError::InvalidInput("stars produce a zero state".into()))
}

/// Dicke amplitudes of the product state `(α, β)^{⊗m}`.
pub fn coherent_state(alpha: C64, beta: C64, m: usize) -> Vec<C64> {
    stars_to_state(&vec![vec![alpha, beta]; m]).expect("non-empty")
}
