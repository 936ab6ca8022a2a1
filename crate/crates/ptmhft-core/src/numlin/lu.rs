//! LU factorization with partial pivoting, linear solves, and the matrix
//! inverse.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use super::{ComplexMatrix, ComplexVector, C64};
use crate::error::{Error, Result};

/// Pivot magnitudes below `SINGULAR_PIVOT_FACTOR * ||A||_F` abort the
/// elimination with [`Error::Singular`].
pub const SINGULAR_PIVOT_FACTOR: f64 = 1e-14;

pub(crate) struct LuFactors {
    n: usize,
    /// Packed L (unit lower, below diagonal) and U (upper).
    lu: Vec<C64>,
    /// Row permutation: `perm[k]` is the source row swapped into position k.
    perm: Vec<usize>,
}

pub(crate) fn lu_factor(a: &ComplexMatrix) -> Result<LuFactors> {
    if !a.is_square() {
        return Err(Error::InvalidInput("LU requires a square matrix"));
    }
    let n = a.rows();
    let scale = a.fro_norm();
    let threshold = SINGULAR_PIVOT_FACTOR * scale;
    let mut lu = a.data().to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut min_pivot = f64::INFINITY;

    for k in 0..n {
        // partial pivot
        let mut p = k;
        let mut best = lu[k * n + k].norm();
        for i in (k + 1)..n {
            let mag = lu[i * n + k].norm();
            if mag > best {
                best = mag;
                p = i;
            }
        }
        if p != k {
            for j in 0..n {
                lu.swap(k * n + j, p * n + j);
            }
            perm.swap(k, p);
        }
        let pivot = lu[k * n + k];
        let pmag = pivot.norm();
        min_pivot = min_pivot.min(pmag);
        if pmag <= threshold {
            let kappa_est = if pmag > 0.0 { scale / pmag } else { f64::INFINITY };
            return Err(Error::Singular { kappa_est });
        }
        for i in (k + 1)..n {
            let m = lu[i * n + k] / pivot;
            lu[i * n + k] = m;
            if m != C64::ZERO {
                for j in (k + 1)..n {
                    let t = lu[k * n + j];
                    lu[i * n + j] -= m * t;
                }
            }
        }
    }
    Ok(LuFactors { n, lu, perm })
}

impl LuFactors {
    pub(crate) fn solve_vec(&self, b: &[C64]) -> Vec<C64> {
        let n = self.n;
        debug_assert_eq!(b.len(), n);
        let mut x: Vec<C64> = (0..n).map(|k| b[self.perm[k]]).collect();
        // forward: L y = Pb
        for i in 1..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[i * n + j] * x[j];
            }
            x[i] = acc;
        }
        // backward: U x = y
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in (i + 1)..n {
                acc -= self.lu[i * n + j] * x[j];
            }
            x[i] = acc / self.lu[i * n + i];
        }
        x
    }
}

/// Solve `A x = b` by LU with partial pivoting.
pub fn solve(a: &ComplexMatrix, b: &ComplexVector) -> Result<ComplexVector> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.rows(), got: b.dim() });
    }
    let f = lu_factor(a)?;
    ComplexVector::from_vec(f.solve_vec(b.data()))
}

/// Matrix inverse via LU with partial pivoting. Fails with
/// [`Error::Singular`] when a pivot drops below `1e-14 * ||A||_F`.
pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::InvalidInput("inverse requires a square matrix"));
    }
    let n = a.rows();
    let f = lu_factor(a)?;
    let mut out = ComplexMatrix::zeros(n, n);
    let mut e = vec![C64::ZERO; n];
    for col in 0..n {
        if col > 0 {
            e[col - 1] = C64::ZERO;
        }
        e[col] = C64::ONE;
        let x = f.solve_vec(&e);
        for row in 0..n {
            out[(row, col)] = x[row];
        }
    }
    Ok(out)
}
