use super::principal;
use crate::error::{invalid, QwError, Result};
use crate::numkit::inner;
use crate::C64;

/// Cyclic overlap product Π⟨Ψ_i|Ψ_{i+1}⟩ (indices mod n).
pub fn bargmann(states: &[Vec<C64>]) -> Result<C64> {
    let n = states.len();
    if n < 2 {
        return invalid("Bargmann invariant needs at least two states");
    }
    let dim = states[0].len();
    if dim == 0 || states.iter().any(|s| s.len() != dim) {
        return invalid("states must share a nonzero dimension");
    }
    let mut prod = C64::new(1.0, 0.0);
    for i in 0..n {
        let ov = inner(&states[i], &states[(i + 1) % n]);
        if ov.norm() <= 1e-12 {
            return Err(QwError::Orthogonal(format!("states {} and {} are orthogonal", i, (i + 1) % n)));
        }
        prod *= ov;
    }
    Ok(prod)
}

/// Geometric phase of the geodesic polygon through the states: −arg Δ_n in (−π, π].
pub fn gp_discrete(states: &[Vec<C64>]) -> Result<f64> {
    Ok(principal(-bargmann(states)?.arg()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2 as S;

    fn pauli_triple() -> Vec<Vec<C64>> {
        vec![
            vec![C64::new(S, 0.0), C64::new(S, 0.0)],
            vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
            vec![C64::new(S, 0.0), C64::new(0.0, S)],
        ]
    }

    #[test]
    fn identical_states() {
        let s = vec![vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)]; 4];
        assert!((bargmann(&s).unwrap() - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(gp_discrete(&s).unwrap(), 0.0);
    }

    #[test]
    fn pauli_triple_overlaps() {
        let t = pauli_triple();
        assert!((inner(&t[0], &t[1]) - C64::new(S, 0.0)).norm() < 1e-15);
        assert!((inner(&t[1], &t[2]) - C64::new(S, 0.0)).norm() < 1e-15);
        // ⟨ψ3|ψ1⟩ = (1 − i)/2
        assert!((inner(&t[2], &t[0]) - C64::new(0.5, -0.5)).norm() < 1e-15);
        let d = bargmann(&t).unwrap();
        assert!((d - C64::new(0.25, -0.25)).norm() < 1e-15);
        assert!((gp_discrete(&t).unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn reversed_triple_flips_sign() {
        let mut t = pauli_triple();
        t.reverse();
        assert!((gp_discrete(&t).unwrap() + std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn real_states_give_positive_invariant() {
        let st: Vec<Vec<C64>> =
            [0.1f64, 0.5, 0.9].iter().map(|&a| vec![C64::new(a.cos(), 0.0), C64::new(a.sin(), 0.0)]).collect();
        let d = bargmann(&st).unwrap();
        assert!(d.re > 0.0 && d.im.abs() < 1e-15);
    }

    #[test]
    fn orthogonal_neighbors_rejected() {
        let st = vec![vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)], vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)]];
        assert!(matches!(bargmann(&st), Err(QwError::Orthogonal(_))));
    }
}
