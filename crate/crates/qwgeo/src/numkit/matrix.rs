use crate::error::{invalid, Result};
use num_complex::Complex64 as C64;
use std::ops::{Index, IndexMut};

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows * cols != data.len() {
            return invalid(format!("{}x{} matrix needs {} entries, got {}", rows, cols, rows * cols, data.len()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return invalid("ragged rows");
        }
        Ok(Self { rows: r, cols: c, data: rows.concat() })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let v: Vec<Vec<C64>> = rows.iter().map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect()).collect();
        Self::from_rows(&v)
    }

    /// 2x2 from entries `[[a, b], [c, d]]`.
    pub fn m2(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self { rows: 2, cols: 2, data: vec![a, b, c, d] }
    }

    pub fn diag(d: &[C64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn data(&self) -> &[C64] {
        &self.data
    }
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[C64]) {
        for (i, &x) in v.iter().enumerate() {
            self[(i, j)] = x;
        }
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let orow = &o.data[k * o.cols..(k + 1) * o.cols];
                let out_row = &mut out.data[i * o.cols..(i + 1) * o.cols];
                for (y, &b) in out_row.iter_mut().zip(orow) {
                    *y += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, o: &Self) -> f64 {
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out[(i * o.rows + k, j * o.cols + l)] = a * o[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Determinant of a 2x2.
    pub fn det2(&self) -> C64 {
        assert!(self.rows == 2 && self.cols == 2);
        self.data[0] * self.data[3] - self.data[1] * self.data[2]
    }

    /// Inverse of a 2x2; `None` when singular.
    pub fn inv2(&self) -> Option<Self> {
        let d = self.det2();
        if d.norm() < 1e-300 {
            return None;
        }
        Some(Self::m2(self.data[3] / d, -self.data[1] / d, -self.data[2] / d, self.data[0] / d))
    }

    /// Solves `A X = B` by LU with partial pivoting. Exactly zero pivots are replaced by
    /// `ε‖A‖` so that nearly singular shifted systems (inverse iteration) still solve.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        if !self.is_square() || b.rows != self.rows {
            return None;
        }
        let n = self.rows;
        let tiny = f64::EPSILON * self.norm_fro().max(f64::MIN_POSITIVE);
        let mut a = self.clone();
        let mut x = b.clone();
        for k in 0..n {
            let p = (k..n).max_by(|&i, &j| a[(i, k)].norm().partial_cmp(&a[(j, k)].norm()).unwrap())?;
            if p != k {
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                }
                for j in 0..x.cols {
                    x.data.swap(k * x.cols + j, p * x.cols + j);
                }
            }
            if a[(k, k)].norm() < tiny {
                a[(k, k)] = C64::new(tiny, 0.0);
            }
            let piv = a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / piv;
                if f == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in k..n {
                    let v = a[(k, j)];
                    a[(i, j)] -= f * v;
                }
                for j in 0..x.cols {
                    let v = x[(k, j)];
                    x[(i, j)] -= f * v;
                }
            }
        }
        for k in (0..n).rev() {
            for j in 0..x.cols {
                let s: C64 = (k + 1..n).map(|m| a[(k, m)] * x[(m, j)]).sum();
                x[(k, j)] = (x[(k, j)] - s) / a[(k, k)];
            }
        }
        x.is_finite().then_some(x)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `⟨a|b⟩`, antilinear in the first argument.
pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn norm(a: &[C64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Returns the unit vector, or `None` for a zero vector.
pub fn normalize(a: &[C64]) -> Option<Vec<C64>> {
    let n = norm(a);
    if n == 0.0 || !n.is_finite() {
        return None;
    }
    Some(a.iter().map(|z| z / n).collect())
}

/// Pauli matrices and friends.
pub mod pauli {
    use super::ComplexMatrix;
    use num_complex::Complex64 as C64;

    const O: C64 = C64::new(0.0, 0.0);
    const I1: C64 = C64::new(1.0, 0.0);
    const IM: C64 = C64::new(0.0, 1.0);

    pub fn id() -> ComplexMatrix {
        ComplexMatrix::identity(2)
    }
    pub fn x() -> ComplexMatrix {
        ComplexMatrix::m2(O, I1, I1, O)
    }
    pub fn y() -> ComplexMatrix {
        ComplexMatrix::m2(O, -IM, IM, O)
    }
    pub fn z() -> ComplexMatrix {
        ComplexMatrix::m2(I1, O, O, -I1)
    }

    /// `n·σ` for a complex 3-vector.
    pub fn dot(n: [C64; 3]) -> ComplexMatrix {
        ComplexMatrix::m2(n[2], n[0] - IM * n[1], n[0] + IM * n[1], -n[2])
    }

    /// `exp(-i a n·σ / 2)` for real unit `n`.
    pub fn rotation(a: f64, n: [f64; 3]) -> ComplexMatrix {
        let (s, c) = (a / 2.0).sin_cos();
        let nc = [C64::new(n[0], 0.0), C64::new(n[1], 0.0), C64::new(n[2], 0.0)];
        id().scale(C64::new(c, 0.0)).sub(&dot(nc).scale(IM * s))
    }

    /// Bloch vector of a qubit state (not assumed normalized).
    pub fn bloch(psi: &[C64]) -> [f64; 3] {
        let n = psi[0].norm_sqr() + psi[1].norm_sqr();
        let off = psi[0].conj() * psi[1];
        [2.0 * off.re / n, 2.0 * off.im / n, (psi[0].norm_sqr() - psi[1].norm_sqr()) / n]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_recovers_rhs() {
        let a = ComplexMatrix::from_rows(&[
            vec![C64::new(0.0, 1.0), C64::new(2.0, 0.0), C64::new(0.5, -1.0)],
            vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(3.0, 0.0)],
            vec![C64::new(-2.0, 0.5), C64::new(1.0, 1.0), C64::new(0.0, 0.0)],
        ])
        .unwrap();
        let b = ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[2.0, 1.0], &[3.0, -1.0]]).unwrap();
        let x = a.solve(&b).unwrap();
        assert!(a.matmul(&x).max_abs_diff(&b) < 1e-12);
        assert!(ComplexMatrix::zeros(2, 3).solve(&b).is_none());
    }

    #[test]
    fn matmul_identity_and_kron() {
        let a = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 4.0]]).unwrap();
        assert_eq!(a.matmul(&ComplexMatrix::identity(2)), a);
        let k = ComplexMatrix::identity(2).kron(&a);
        assert_eq!(k.rows(), 4);
        assert_eq!(k[(3, 2)], C64::new(3.0, 0.0));
        assert_eq!(k[(0, 2)], C64::new(0.0, 0.0));
    }

    #[test]
    fn pauli_algebra() {
        let xy = pauli::x().matmul(&pauli::y());
        let iz = pauli::z().scale(C64::new(0.0, 1.0));
        assert!(xy.max_abs_diff(&iz) < 1e-15);
        let r = pauli::rotation(std::f64::consts::PI, [0.0, 1.0, 0.0]);
        assert!(r.matmul(&r.adjoint()).max_abs_diff(&pauli::id()) < 1e-15);
    }

    #[test]
    fn bloch_vector_of_plus_state() {
        let s = 0.5f64.sqrt();
        let b = pauli::bloch(&[C64::new(s, 0.0), C64::new(s, 0.0)]);
        assert!((b[0] - 1.0).abs() < 1e-15 && b[1].abs() < 1e-15 && b[2].abs() < 1e-15);
    }

    #[test]
    fn from_vec_rejects_bad_len() {
        assert!(ComplexMatrix::from_vec(2, 2, vec![C64::new(0.0, 0.0); 3]).is_err());
    }
}
