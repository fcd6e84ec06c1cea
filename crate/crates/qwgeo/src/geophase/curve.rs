use super::{principal, transported_overlap};
use crate::error::{invalid, QwError, Result};
use crate::numkit::{inner, norm, normalize};
use crate::C64;

/// Sampled one-parameter family of unit-norm pure states.
#[derive(Debug, Clone, PartialEq)]
pub struct PureCurve {
    params: Vec<f64>,
    states: Vec<Vec<C64>>,
}

impl PureCurve {
    /// Validates ascending parameters, unit norms (±1e-12), common dimension and
    /// non-orthogonal consecutive samples.
    pub fn new(params: Vec<f64>, states: Vec<Vec<C64>>) -> Result<Self> {
        if params.len() != states.len() || params.len() < 2 {
            return invalid("curve needs at least two samples with matching parameter count");
        }
        if params.windows(2).any(|w| !(w[1] > w[0])) {
            return invalid("curve parameters must be strictly ascending");
        }
        let dim = states[0].len();
        if dim == 0 || states.iter().any(|s| s.len() != dim) {
            return invalid("curve states must share a nonzero dimension");
        }
        if let Some(i) = states.iter().position(|s| (norm(s) - 1.0).abs() > 1e-12) {
            return invalid(format!("state {} is not unit norm", i));
        }
        for i in 0..states.len() - 1 {
            if inner(&states[i], &states[i + 1]).norm() <= 1e-12 {
                return Err(QwError::Orthogonal(format!("samples {} and {} are orthogonal", i, i + 1)));
            }
        }
        Ok(Self { params, states })
    }

    /// Samples `f` at `count` equally spaced points of `[a, b]`, normalizing each state.
    pub fn from_fn(a: f64, b: f64, count: usize, mut f: impl FnMut(f64) -> Vec<C64>) -> Result<Self> {
        if count < 2 {
            return invalid("need at least two samples");
        }
        let params: Vec<f64> = (0..count).map(|i| a + (b - a) * i as f64 / (count - 1) as f64).collect();
        let mut states = Vec::with_capacity(count);
        for &s in &params {
            states.push(normalize(&f(s)).ok_or_else(|| QwError::InvalidInput(format!("zero state at s={}", s)))?);
        }
        Self::new(params, states)
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }
    pub fn states(&self) -> &[Vec<C64>] {
        &self.states
    }
    pub fn dim(&self) -> usize {
        self.states[0].len()
    }
    pub fn len(&self) -> usize {
        self.params.len()
    }
    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    /// Multiplies every sample by `e^{iα(s)}`.
    pub fn regauge(&self, alpha: impl Fn(f64) -> f64) -> Self {
        let states = self
            .params
            .iter()
            .zip(&self.states)
            .map(|(&s, v)| {
                let ph = C64::from_polar(1.0, alpha(s));
                v.iter().map(|z| z * ph).collect()
            })
            .collect();
        Self { params: self.params.clone(), states }
    }
}

/// Geometric phase of an open curve: total phase minus the dynamical phase,
/// `arg⟨Ψ(s₁)|Ψ(s₂)⟩ − Im ∫⟨Ψ|Ψ̇⟩ ds`, in (−π, π].
pub fn gp_curve(curve: &PureCurve) -> Result<f64> {
    let first = &curve.states[0];
    let last = &curve.states[curve.len() - 1];
    let ov = inner(first, last);
    if ov.norm() <= 1e-12 {
        return Err(QwError::Orthogonal("curve endpoints are orthogonal".into()));
    }
    Ok(principal(transported_overlap(&curve.params, &curve.states).arg()))
}
