//! Dense square matrices and a cyclic Jacobi eigensolver.
//!
//! Every matrix in this crate is at most a few dozen rows wide, so storage is
//! a flat row-major `Vec<f64>` and no attempt is made at blocking.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![0.0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Builds a matrix from row-major data; `None` when the length is not a
    /// perfect square.
    pub fn from_row_major(data: Vec<f64>) -> Option<Self> {
        let dim = libm::sqrt(data.len() as f64) as usize;
        (dim * dim == data.len()).then_some(Matrix { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn scale(&self, k: f64) -> Self {
        Matrix { dim: self.dim, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| f64::max(acc, libm::fabs(a - b)))
    }

    /// Largest `|M_ij - M_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                worst = worst.max(libm::fabs(self[(i, j)] - self[(j, i)]));
            }
        }
        worst
    }

    /// `S · self · Sᵀ`
    pub fn congruence(&self, s: &Matrix) -> Self {
        &(s * self) * &s.transpose()
    }

    /// `S · self · Sᵀ` for symmetric `self`, with the lower triangle mirrored
    /// from the upper so the result is exactly symmetric.
    pub fn symmetric_congruence(&self, s: &Matrix) -> Self {
        let mut out = self.congruence(s);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                out[(j, i)] = out[(i, j)];
            }
        }
        out
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn select(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    /// Eigenvalues of a symmetric matrix, ascending. Only the upper triangle
    /// is trusted; the caller is responsible for symmetry.
    pub fn symmetric_eigenvalues(&self) -> Vec<f64> {
        let mut vals = jacobi(self, false).0;
        vals.sort_by(f64::total_cmp);
        vals
    }

    /// Eigen-decomposition `self = Q diag(λ) Qᵀ` of a symmetric matrix.
    /// Column `k` of the returned matrix is the eigenvector for `λ[k]`.
    pub fn symmetric_eigen(&self) -> (Vec<f64>, Matrix) {
        let (vals, vecs) = jacobi(self, true);
        (vals, vecs.expect("eigenvectors requested"))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        debug_assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

/// Matrix-vector product.
pub fn mat_vec(m: &Matrix, v: &[f64]) -> Vec<f64> {
    debug_assert_eq!(m.dim(), v.len());
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m[(i, j)] * v[j]).sum())
        .collect()
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible
/// relative to the diagonal.
fn jacobi(m: &Matrix, want_vectors: bool) -> (Vec<f64>, Option<Matrix>) {
    let n = m.dim();
    // symmetrize from the upper triangle
    let mut a = Matrix::from_fn(n, |i, j| if i <= j { m[(i, j)] } else { m[(j, i)] });
    let mut v = want_vectors.then(|| Matrix::identity(n));

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        let mut diag = 0.0;
        for i in 0..n {
            diag += a[(i, i)] * a[(i, i)];
            for j in (i + 1)..n {
                off += a[(i, j)] * a[(i, j)];
            }
        }
        if off <= f64::EPSILON * f64::EPSILON * diag.max(f64::MIN_POSITIVE) * 1e-4 || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;

                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;

                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = c * vkp - s * vkq;
                        v[(k, q)] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)]).collect(), v)
}
