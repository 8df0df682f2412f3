//! Dense real vectors, symmetric matrices, and a cyclic Jacobi eigensolver.
//!
//! Everything here is sized for small spaces (the CLI caps n at 64), so the
//! storage is dense and the algorithms are the plain O(n^3) ones.

use crate::error::{Error, Result};

/// Relative off-diagonal threshold for Jacobi convergence.
pub const JACOBI_REL_TOL: f64 = 1e-14;
/// Sweep cap for the Jacobi eigensolver.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Eigenvalues inside (-EIGEN_CLAMP_TOL, EIGEN_CLAMP_TOL) report as exact
/// zeros in spectra used for PSD and purity decisions.
pub const EIGEN_CLAMP_TOL: f64 = 1e-10;

/// Column vector over the reals. Entries are validated finite at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    entries: Vec<f64>,
}

impl Vector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        for (index, &value) in entries.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteEntry { index, value });
            }
        }
        Ok(Self { entries })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            entries: vec![0.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    /// Inner product: the sum of products of corresponding entries.
    pub fn inner(&self, other: &Vector) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Outer product: the n x n matrix with entry (j,k) = self_j * other_k.
    pub fn outer(&self, other: &Vector) -> Result<Matrix> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let n = self.len();
        let mut out = Matrix::zeros(n);
        for j in 0..n {
            for k in 0..n {
                out.set(j, k, self.entries[j] * other.entries[k]);
            }
        }
        Ok(out)
    }

    /// Outer product of a vector with itself, symmetric by storage.
    pub fn symmetric_outer(&self) -> SymMatrix {
        let n = self.len();
        let mut out = SymMatrix::zeros(n);
        for j in 0..n {
            for k in j..n {
                out.set(j, k, self.entries[j] * self.entries[k]);
            }
        }
        out
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.entries[i]
    }
}

/// General dense square matrix, row-major. Products of symmetric matrices
/// land here since they need not be symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    /// Sum of diagonal elements.
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Max-norm of the difference against another matrix of the same size.
    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Symmetric matrix stored as the packed upper triangle, so `M[j][k]` and
/// `M[k][j]` are the same storage cell and symmetry holds by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * (n + 1) / 2],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_diagonal(diagonal: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diagonal.len());
        for (i, &value) in diagonal.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteEntry { index: i, value });
            }
            m.set(i, i, value);
        }
        Ok(m)
    }

    /// Builds from a function evaluated on the upper triangle (i <= j) only.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        a * self.n - a * (a + 1) / 2 + b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[self.offset(i, j)]
    }

    /// Writes the single storage cell shared by (i,j) and (j,i).
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let o = self.offset(i, j);
        self.data[o] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                sum += v * v;
            }
        }
        sum.sqrt()
    }

    /// self += factor * other
    pub fn add_scaled(&mut self, other: &SymMatrix, factor: f64) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += factor * b;
        }
        Ok(())
    }

    pub fn scale(&mut self, factor: f64) {
        for a in self.data.iter_mut() {
            *a *= factor;
        }
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, self.get(i, j));
            }
        }
        m
    }

    /// Full row-major rows, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// Standard matrix product of two symmetric matrices. The result is a general
/// matrix: products of symmetric matrices need not be symmetric.
pub fn mat_mul(a: &SymMatrix, b: &SymMatrix) -> Result<Matrix> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let n = a.n();
    let mut out = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut sum = 0.0;
            for k in 0..n {
                sum += a.get(i, k) * b.get(k, j);
            }
            out.set(i, j, sum);
        }
    }
    Ok(out)
}

/// Full eigendecomposition of a symmetric matrix.
///
/// Eigenvalues are sorted descending; ties keep the order of the diagonal
/// positions they converged on, so repeated runs are deterministic.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vector>,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvalues with values inside (-EIGEN_CLAMP_TOL, EIGEN_CLAMP_TOL)
    /// reported as exact zeros.
    pub fn eigenvalues_clamped(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .map(|&v| if v.abs() < EIGEN_CLAMP_TOL { 0.0 } else { v })
            .collect()
    }

    /// Eigenvector paired with `eigenvalues()[k]`.
    pub fn eigenvector(&self, k: usize) -> &Vector {
        &self.eigenvectors[k]
    }

    pub fn eigenvectors(&self) -> &[Vector] {
        &self.eigenvectors
    }

    /// Max-norm of V^t V - I over all eigenvector pairs.
    pub fn orthonormality_error(&self) -> f64 {
        let n = self.n();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let dot: f64 = self.eigenvectors[i]
                    .as_slice()
                    .iter()
                    .zip(self.eigenvectors[j].as_slice())
                    .map(|(a, b)| a * b)
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// Max-norm of M - V diag(lambda) V^t.
    pub fn reconstruction_error(&self, m: &SymMatrix) -> f64 {
        let n = self.n();
        let mut worst: f64 = 0.0;
        for j in 0..n {
            for k in j..n {
                let mut sum = 0.0;
                for (lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
                    sum += lambda * v[j] * v[k];
                }
                worst = worst.max((m.get(j, k) - sum).abs());
            }
        }
        worst
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps annihilate each off-diagonal element in turn until the off-diagonal
/// Frobenius norm drops to `JACOBI_REL_TOL` times the Frobenius norm of the
/// input, or the sweep cap is reached (`NoConvergence`).
pub fn sym_eigen(m: &SymMatrix) -> Result<Spectrum> {
    let n = m.n();
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = m.get(i, j);
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let threshold = JACOBI_REL_TOL * m.frobenius_norm();
    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = {
                    let denom = theta.abs() + (theta * theta + 1.0).sqrt();
                    if theta < 0.0 {
                        -1.0 / denom
                    } else {
                        1.0 / denom
                    }
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                let app = a[p * n + p];
                let aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[p * n + i] = a[i * n + p];
                    a[i * n + q] = s * aip + c * aiq;
                    a[q * n + i] = a[i * n + q];
                }
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    // Sort descending; the stable sort keeps ties in diagonal-position order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));

    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let eigenvectors: Vec<Vector> = order
        .iter()
        .map(|&k| {
            Vector::new((0..n).map(|i| v[i * n + k]).collect())
                .expect("rotations preserve finiteness")
        })
        .collect();

    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}
