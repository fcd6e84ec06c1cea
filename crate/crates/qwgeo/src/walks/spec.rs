use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Dtqw1d,
    Ssqw1d,
    Electric1d,
    Dtqw2d,
    Coin4d2d,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coin4 {
    Hadamard,
    Grover,
    Fourier,
}

/// A coin angle: one value for the whole lattice or one per site.
/// For 2D lattices a per-site map is indexed by the y coordinate (rows).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Angles {
    Global(f64),
    PerSite(Vec<f64>),
}

impl Angles {
    pub fn at(&self, i: usize) -> f64 {
        match self {
            Angles::Global(v) => *v,
            Angles::PerSite(m) => m[i],
        }
    }
    pub fn global(&self) -> Option<f64> {
        match self {
            Angles::Global(v) => Some(*v),
            Angles::PerSite(_) => None,
        }
    }
    fn check(&self, len: usize, what: &str) -> Result<()> {
        match self {
            Angles::Global(v) if !v.is_finite() => invalid(format!("{} is not finite", what)),
            Angles::PerSite(m) if m.len() != len => {
                invalid(format!("{} map has {} entries, lattice needs {}", what, m.len(), len))
            }
            Angles::PerSite(m) if m.iter().any(|v| !v.is_finite()) => invalid(format!("{} map has non-finite entries", what)),
            _ => Ok(()),
        }
    }
}

/// Two-domain angle map: sites with |x| ≤ `wall` take `inner`, the rest `outer`.
pub fn domain_map(len: usize, wall: i64, inner: f64, outer: f64) -> Angles {
    Angles::PerSite((0..len).map(|i| if position(i, len).abs() <= wall { inner } else { outer }).collect())
}

/// Centered coordinate of lattice index `i`: x = i − ⌊len/2⌋.
pub fn position(i: usize, len: usize) -> i64 {
    i as i64 - (len / 2) as i64
}

/// Lattice index of coordinate `x` (periodic).
pub fn index(x: i64, len: usize) -> usize {
    (x + (len / 2) as i64).rem_euclid(len as i64) as usize
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkSpec {
    pub variant: Variant,
    pub theta1: Angles,
    pub theta2: Angles,
    /// Gain/loss exponent of the split-step walk.
    pub gamma: f64,
    pub gamma_x: f64,
    pub gamma_y: f64,
    /// Electric phase per site (electric walk).
    pub phi: f64,
    /// Phase operator exponent of the split-step walk, `Φ = e^{iφσ_z}`.
    pub phase_op: f64,
    pub coin4d: Coin4,
    /// Sites along x (1D: the chain length).
    pub nx: usize,
    /// Sites along y (2D only).
    pub ny: usize,
}

impl WalkSpec {
    fn base(variant: Variant, nx: usize, ny: usize) -> Self {
        Self {
            variant,
            theta1: Angles::Global(0.0),
            theta2: Angles::Global(0.0),
            gamma: 0.0,
            gamma_x: 0.0,
            gamma_y: 0.0,
            phi: 0.0,
            phase_op: 0.0,
            coin4d: Coin4::Hadamard,
            nx,
            ny,
        }
    }

    pub fn dtqw1d(n: usize, theta: f64) -> Self {
        Self { theta1: Angles::Global(theta), ..Self::base(Variant::Dtqw1d, n, 1) }
    }

    pub fn ssqw1d(n: usize, theta1: f64, theta2: f64, gamma: f64) -> Self {
        Self { theta1: Angles::Global(theta1), theta2: Angles::Global(theta2), gamma, ..Self::base(Variant::Ssqw1d, n, 1) }
    }

    pub fn electric1d(n: usize, theta: f64, phi: f64) -> Self {
        Self { theta1: Angles::Global(theta), phi, ..Self::base(Variant::Electric1d, n, 1) }
    }

    pub fn dtqw2d(nx: usize, ny: usize, theta1: f64, theta2: f64, gamma_x: f64, gamma_y: f64) -> Self {
        Self {
            theta1: Angles::Global(theta1),
            theta2: Angles::Global(theta2),
            gamma_x,
            gamma_y,
            ..Self::base(Variant::Dtqw2d, nx, ny)
        }
    }

    pub fn coin4d(nx: usize, ny: usize, coin: Coin4) -> Self {
        Self { coin4d: coin, ..Self::base(Variant::Coin4d2d, nx, ny) }
    }

    pub fn is_2d(&self) -> bool {
        matches!(self.variant, Variant::Dtqw2d | Variant::Coin4d2d)
    }

    pub fn coin_dim(&self) -> usize {
        if self.variant == Variant::Coin4d2d {
            4
        } else {
            2
        }
    }

    pub fn sites(&self) -> usize {
        if self.is_2d() {
            self.nx * self.ny
        } else {
            self.nx
        }
    }

    pub fn dim(&self) -> usize {
        self.sites() * self.coin_dim()
    }

    /// True when every angle is global.
    pub fn is_homogeneous(&self) -> bool {
        self.theta1.global().is_some() && self.theta2.global().is_some()
    }

    pub fn validate(&self) -> Result<()> {
        if self.nx < 2 || (self.is_2d() && self.ny < 2) {
            return invalid("lattice sizes must be at least 2");
        }
        let map_len = if self.is_2d() { self.ny } else { self.nx };
        self.theta1.check(map_len, "theta1")?;
        self.theta2.check(map_len, "theta2")?;
        for (v, name) in [(self.gamma, "gamma"), (self.gamma_x, "gamma_x"), (self.gamma_y, "gamma_y"), (self.phi, "phi"), (self.phase_op, "phase_op")] {
            if !v.is_finite() {
                return invalid(format!("{} is not finite", name));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_centered() {
        assert_eq!(position(100, 201), 0);
        assert_eq!(index(-100, 201), 0);
        assert_eq!(index(101, 201), 0);
    }

    #[test]
    fn domain_map_walls() {
        let m = domain_map(201, 50, 1.0, 2.0);
        assert_eq!(m.at(index(50, 201)), 1.0);
        assert_eq!(m.at(index(51, 201)), 2.0);
        assert_eq!(m.at(index(-50, 201)), 1.0);
    }

    #[test]
    fn validation() {
        let mut s = WalkSpec::ssqw1d(10, 0.1, 0.2, 0.0);
        assert!(s.validate().is_ok());
        s.theta1 = Angles::PerSite(vec![0.0; 9]);
        assert!(s.validate().is_err());
    }
}
