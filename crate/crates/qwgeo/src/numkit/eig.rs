//! Dense non-symmetric complex eigensolver: Householder Hessenberg reduction,
//! shifted QR to Schur form, eigenvectors by back-substitution.

use super::matrix::ComplexMatrix;
use crate::error::{invalid, QwError, Result};
use num_complex::Complex64 as C64;

#[derive(Debug, Clone)]
pub struct EigenResult {
    /// Sorted by (Re, Im) ascending.
    pub values: Vec<C64>,
    /// Unit-norm right eigenvectors as columns, same order as `values`.
    pub vectors: ComplexMatrix,
    /// Per-pair residual check `‖A v − λ v‖ ≤ 1e-10·‖A‖`.
    pub converged: Vec<bool>,
}

impl EigenResult {
    pub fn vector(&self, i: usize) -> Vec<C64> {
        self.vectors.col(i)
    }
    pub fn all_converged(&self) -> bool {
        self.converged.iter().all(|&c| c)
    }
}

const ZERO: C64 = C64::new(0.0, 0.0);

fn check(m: &ComplexMatrix) -> Result<()> {
    if !m.is_square() {
        return invalid(format!("eigenproblem needs a square matrix, got {}x{}", m.rows(), m.cols()));
    }
    if !m.is_finite() {
        return invalid("matrix has non-finite entries");
    }
    Ok(())
}

/// Reduces `a` to upper Hessenberg form in place; returns the accumulated unitary Q with A = Q H Q†.
fn hessenberg(a: &mut ComplexMatrix) -> ComplexMatrix {
    let n = a.rows();
    let mut q = ComplexMatrix::identity(n);
    if n < 3 {
        return q;
    }
    for k in 0..n - 2 {
        let mut v: Vec<C64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let xnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let tail: f64 = v[1..].iter().map(|z| z.norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let phase = if v[0].norm() == 0.0 { C64::new(1.0, 0.0) } else { v[0] / v[0].norm() };
        let alpha = -phase * xnorm;
        v[0] -= alpha;
        let vn = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in v.iter_mut() {
            *z /= vn;
        }
        // A <- (I - 2vv†) A on rows k+1..n
        for j in 0..n {
            let s: C64 = (k + 1..n).map(|i| v[i - k - 1].conj() * a[(i, j)]).sum();
            if s == ZERO {
                continue;
            }
            for i in k + 1..n {
                a[(i, j)] -= 2.0 * v[i - k - 1] * s;
            }
        }
        // A <- A (I - 2vv†), Q <- Q (I - 2vv†) on cols k+1..n
        for m in [&mut *a, &mut q] {
            for i in 0..n {
                let s: C64 = (k + 1..n).map(|j| m[(i, j)] * v[j - k - 1]).sum();
                if s == ZERO {
                    continue;
                }
                for j in k + 1..n {
                    m[(i, j)] -= 2.0 * s * v[j - k - 1].conj();
                }
            }
        }
        for i in k + 2..n {
            a[(i, k)] = ZERO;
        }
    }
    q
}

/// Givens pair (c real, s) with [c s; −s̄ c]·[a; b] = [r; 0].
fn givens(a: C64, b: C64) -> (f64, C64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, ZERO);
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let nrm = an.hypot(bn);
    (an / nrm, a * b.conj() / (an * nrm))
}

fn wilkinson(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let tr2 = (a + d) * 0.5;
    let disc = ((a - d) * 0.5 * ((a - d) * 0.5) + b * c).sqrt();
    let l1 = tr2 + disc;
    let l2 = tr2 - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Schur decomposition of a Hessenberg matrix in place; `z` accumulates the transforms.
fn schur(h: &mut ComplexMatrix, z: &mut ComplexMatrix, anorm: f64) -> Result<()> {
    let n = h.rows();
    if n < 2 {
        return Ok(());
    }
    let eps = f64::EPSILON;
    let small = f64::MIN_POSITIVE / eps;
    let max_total = 60 * n.max(10);
    let mut total = 0usize;
    let mut hi = n - 1;
    let mut its = 0usize;
    let mut rots: Vec<(f64, C64)> = Vec::with_capacity(n);
    while hi > 0 {
        let mut l = hi;
        while l > 0 {
            let mut s = h[(l - 1, l - 1)].norm() + h[(l, l)].norm();
            if s == 0.0 {
                s = anorm;
            }
            if h[(l, l - 1)].norm() <= (eps * s).max(small) {
                h[(l, l - 1)] = ZERO;
                break;
            }
            l -= 1;
        }
        if l == hi {
            hi -= 1;
            its = 0;
            continue;
        }
        its += 1;
        total += 1;
        if total > max_total {
            return Err(QwError::NoConvergence(format!("QR iteration cap {} reached", max_total)));
        }
        let mu = if its % 10 == 0 {
            h[(hi, hi)] + C64::new(1.5 * h[(hi, hi - 1)].norm(), 0.75 * h[(hi, hi - 1)].norm())
        } else {
            wilkinson(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };
        for i in l..=hi {
            h[(i, i)] -= mu;
        }
        rots.clear();
        for k in l..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            rots.push((c, s));
            for j in k..n {
                let x = h[(k, j)];
                let y = h[(k + 1, j)];
                h[(k, j)] = c * x + s * y;
                h[(k + 1, j)] = -s.conj() * x + c * y;
            }
            h[(k + 1, k)] = ZERO;
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = l + idx;
            for i in 0..=(k + 1).min(hi) {
                let x = h[(i, k)];
                let y = h[(i, k + 1)];
                h[(i, k)] = c * x + s.conj() * y;
                h[(i, k + 1)] = -s * x + c * y;
            }
            for i in 0..n {
                let x = z[(i, k)];
                let y = z[(i, k + 1)];
                z[(i, k)] = c * x + s.conj() * y;
                z[(i, k + 1)] = -s * x + c * y;
            }
        }
        for i in l..=hi {
            h[(i, i)] += mu;
        }
    }
    Ok(())
}

fn sort_key_order(values: &[C64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| {
        values[a]
            .re
            .partial_cmp(&values[b].re)
            .unwrap()
            .then(values[a].im.partial_cmp(&values[b].im).unwrap())
    });
    idx
}

/// Eigenvalues only, sorted by (Re, Im).
pub fn eig_values(m: &ComplexMatrix) -> Result<Vec<C64>> {
    check(m)?;
    let mut h = m.clone();
    let mut z = hessenberg(&mut h);
    schur(&mut h, &mut z, m.norm_fro().max(f64::MIN_POSITIVE))?;
    let vals: Vec<C64> = (0..m.rows()).map(|i| h[(i, i)]).collect();
    Ok(sort_key_order(&vals).into_iter().map(|i| vals[i]).collect())
}

/// Full eigendecomposition.
pub fn eig_dense(m: &ComplexMatrix) -> Result<EigenResult> {
    check(m)?;
    let n = m.rows();
    let anorm = m.norm_fro();
    let mut t = m.clone();
    let mut z = hessenberg(&mut t);
    schur(&mut t, &mut z, anorm.max(f64::MIN_POSITIVE))?;

    let tnorm = t.norm_fro();
    let smin = (f64::EPSILON * tnorm).max(f64::MIN_POSITIVE * 1e10);
    let mut vecs = ComplexMatrix::zeros(n, n);
    let mut x = vec![ZERO; n];
    for k in 0..n {
        let lam = t[(k, k)];
        for v in x.iter_mut() {
            *v = ZERO;
        }
        x[k] = C64::new(1.0, 0.0);
        for i in (0..k).rev() {
            let s: C64 = (i + 1..=k).map(|j| t[(i, j)] * x[j]).sum();
            let mut d = t[(i, i)] - lam;
            if d.norm() < smin {
                d = C64::new(smin, 0.0);
            }
            x[i] = -s / d;
            let big = x[i].norm();
            if big > 1e100 {
                for v in x[..=k].iter_mut() {
                    *v /= big;
                }
            }
        }
        let mut v: Vec<C64> = (0..n).map(|i| (0..=k).map(|j| z[(i, j)] * x[j]).sum()).collect();
        let vn = v.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt();
        for q in v.iter_mut() {
            *q /= vn;
        }
        vecs.set_col(k, &v);
    }

    let vals: Vec<C64> = (0..n).map(|i| t[(i, i)]).collect();
    let order = sort_key_order(&vals);
    let mut values = Vec::with_capacity(n);
    let mut vectors = ComplexMatrix::zeros(n, n);
    let mut converged = Vec::with_capacity(n);
    let tol = 1e-10 * anorm.max(f64::MIN_POSITIVE);
    for (dst, &src) in order.iter().enumerate() {
        let lam = vals[src];
        let v = vecs.col(src);
        let av = m.mul_vec(&v);
        let res = av.iter().zip(&v).map(|(a, b)| (a - lam * b).norm_sqr()).sum::<f64>().sqrt();
        if !lam.re.is_finite() || !lam.im.is_finite() {
            return Err(QwError::Numerical("non-finite eigenvalue".into()));
        }
        values.push(lam);
        vectors.set_col(dst, &v);
        converged.push(res <= tol);
    }
    Ok(EigenResult { values, vectors, converged })
}
