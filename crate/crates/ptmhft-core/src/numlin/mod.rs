//! Dense complex linear algebra: matrices, vectors, LU inverses, a general
//! non-Hermitian eigensolver, and spectral matrix functions.
//!
//! Everything is plain row-major `Vec<Complex64>` storage sized for desk-scale
//! problems (n up to ~1000). Constructors reject non-finite entries; all
//! operations are pure.

mod eig;
mod lu;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};

pub use eig::{eig_general, EigResult, DEFAULT_EIG_TOL};
pub use lu::{inverse, solve};

/// Complex scalar used throughout the crate.
pub type C64 = Complex<f64>;

pub(crate) fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    /// Build from row-major entries. Rejects empty shapes, shape/data
    /// mismatches, and non-finite entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInput("matrix dimensions must be at least 1x1"));
        }
        if data.len() != rows * cols {
            return Err(Error::InvalidInput("entry count does not match rows*cols"));
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidInput("matrix entries must be finite"));
        }
        Ok(Self { rows, cols, data })
    }

    /// Square matrix from row-major real/imag pairs, mostly for tests and
    /// model builders.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::InvalidInput("matrix dimensions must be at least 1x1"));
        }
        let cols = rows[0].len();
        if rows.iter().any(|row| row.len() != cols) {
            return Err(Error::InvalidInput("ragged rows"));
        }
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            data.extend_from_slice(row);
        }
        Self::from_vec(r, cols, data)
    }

    /// All-zero matrix. Internal shortcut; shape is trusted.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C64::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::ONE;
        }
        m
    }

    pub fn diag(entries: &[C64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
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

    pub(crate) fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> ComplexVector {
        let mut v = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            v.push(self[(i, j)]);
        }
        ComplexVector { data: v }
    }

    pub fn set_col(&mut self, j: usize, v: &ComplexVector) {
        assert_eq!(v.dim(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
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

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Frobenius norm.
    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        let mut best = 0.0_f64;
        for j in 0..self.cols {
            let mut s = 0.0;
            for i in 0..self.rows {
                s += self[(i, j)].norm();
            }
            best = best.max(s);
        }
        best
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry of `self - I`, used for residual checks.
    pub fn max_dev_from_identity(&self) -> f64 {
        let mut dev = 0.0_f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = if i == j { self[(i, j)] - C64::ONE } else { self[(i, j)] };
                dev = dev.max(d.norm());
            }
        }
        dev
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> Result<ComplexVector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.dim() });
        }
        let mut out = vec![C64::ZERO; self.rows];
        for i in 0..self.rows {
            let mut acc = C64::ZERO;
            for j in 0..self.cols {
                acc += self.data[i * self.cols + j] * v[j];
            }
            out[i] = acc;
        }
        Ok(ComplexVector { data: out })
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

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == C64::ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.6e}{:+.6e}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dense complex vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    data: Vec<C64>,
}

impl ComplexVector {
    pub fn from_vec(data: Vec<C64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::InvalidInput("vector dimension must be at least 1"));
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidInput("vector entries must be finite"));
        }
        Ok(Self { data })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { data: vec![C64::ZERO; dim] }
    }

    /// Standard basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.data[i] = C64::ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    /// Conjugating inner product `⟨self|other⟩ = Σ conj(self_i)·other_i`.
    pub fn dot_conj(&self, other: &ComplexVector) -> C64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.data.iter().zip(&other.data).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, other: &ComplexVector) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self { data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &ComplexVector) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self { data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    /// `self += s * other`.
    pub fn axpy(&mut self, s: C64, other: &ComplexVector) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            return self.clone();
        }
        self.scale(c(1.0 / n, 0.0))
    }
}

impl Index<usize> for ComplexVector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.data[i]
    }
}

impl IndexMut<usize> for ComplexVector {
    fn index_mut(&mut self, i: usize) -> &mut C64 {
        &mut self.data[i]
    }
}

/// Spectral matrix function `f(H) = Σ_i f(E_i) |R_i⟩⟨L_i|` from an
/// eigentriple. With `f = id` this reconstructs `H`; with
/// `f = E ↦ exp(-iEt/ħ)` it is the evolution operator.
pub fn spectral_function<F>(
    values: &[C64],
    right: &ComplexMatrix,
    left: &ComplexMatrix,
    f: F,
) -> ComplexMatrix
where
    F: Fn(C64) -> C64,
{
    let n = right.rows();
    debug_assert_eq!(values.len(), n);
    // R · diag(f(E)) · L†
    let mut out = ComplexMatrix::zeros(n, n);
    for k in 0..n {
        let fk = f(values[k]);
        for i in 0..n {
            let rf = right[(i, k)] * fk;
            for j in 0..n {
                out[(i, j)] += rf * left[(j, k)].conj();
            }
        }
    }
    out
}

/// Deterministic pseudo-random unit vector (splitmix64-based), used to seed
/// inverse iteration and in randomized tests.
pub fn pseudo_random_unit(dim: usize, seed: u64) -> ComplexVector {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(0x2545f4914f6cdd1d);
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut unit_f64 = move || {
        // uniform in [-1, 1)
        let bits = next() >> 11; // 53 random bits
        (bits as f64) / (1u64 << 52) as f64 - 1.0
    };
    let mut data = Vec::with_capacity(dim);
    for _ in 0..dim {
        let re = unit_f64();
        let im = unit_f64();
        data.push(c(re, im));
    }
    ComplexVector { data }.normalized()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_reject_bad_input() {
        assert!(ComplexMatrix::from_vec(0, 1, vec![]).is_err());
        assert!(ComplexMatrix::from_vec(1, 2, vec![C64::ONE]).is_err());
        assert!(ComplexMatrix::from_vec(1, 1, vec![c(f64::NAN, 0.0)]).is_err());
        assert!(ComplexVector::from_vec(vec![]).is_err());
        assert!(ComplexVector::from_vec(vec![c(0.0, f64::INFINITY)]).is_err());
    }

    #[test]
    fn matmul_and_adjoint() {
        let a = ComplexMatrix::from_vec(2, 2, vec![c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), c(0.0, -1.0)])
            .unwrap();
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(&a * &i2, a);
        let adj = a.adjoint();
        assert_eq!(adj[(1, 0)], c(0.0, -1.0));
        assert_eq!(adj[(0, 1)], c(2.0, 0.0));
    }

    #[test]
    fn spectral_identity_reconstructs_diagonal() {
        let vals = [c(2.0, 0.0), c(3.0, 0.0)];
        let r = ComplexMatrix::identity(2);
        let l = ComplexMatrix::identity(2);
        let h = spectral_function(&vals, &r, &l, |e| e);
        assert!((h[(0, 0)] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((h[(1, 1)] - c(3.0, 0.0)).norm() < 1e-15);
        // f = E ↦ E² on diag(2,3) gives diag(4,9)
        let h2 = spectral_function(&vals, &r, &l, |e| e * e);
        assert!((h2[(0, 0)] - c(4.0, 0.0)).norm() < 1e-15);
        assert!((h2[(1, 1)] - c(9.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pseudo_random_is_deterministic_and_unit() {
        let a = pseudo_random_unit(7, 42);
        let b = pseudo_random_unit(7, 42);
        assert_eq!(a, b);
        assert!((a.norm() - 1.0).abs() < 1e-14);
        let d = pseudo_random_unit(7, 43);
        assert!(a.sub(&d).norm() > 1e-3);
    }
}
