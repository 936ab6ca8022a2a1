//! General complex (non-Hermitian) eigensolver.
//!
//! Pipeline: Householder reduction to upper Hessenberg form, shifted QR
//! iteration with Wilkinson shifts for the eigenvalues, then inverse
//! iteration on the Hessenberg form for the right eigenvectors, transformed
//! back with the accumulated unitary.
//!
//! Eigenvalues are returned sorted by real part, then imaginary part (ties
//! keep discovery order), so downstream sweeps and CSV output are
//! reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Float;

use super::{c, ComplexMatrix, ComplexVector, C64};
use crate::error::{Error, Result};

/// Default relative tolerance for the eigensolver residual gate.
pub const DEFAULT_EIG_TOL: f64 = 1e-12;

const EPS: f64 = f64::EPSILON;
/// QR steps allowed per matrix: `MAX_SWEEP_FACTOR * n`.
const MAX_SWEEP_FACTOR: usize = 100;
/// Every this many stalled steps on one window, take an ad-hoc shift.
const EXCEPTIONAL_EVERY: usize = 12;
/// Inverse-iteration refinements per eigenvector.
const MAX_INVERSE_ITER: usize = 6;

/// Eigenvalues plus unit-norm right eigenvectors (columns) of a general
/// complex matrix, with the worst relative eigen-residual
/// `max_i ||H v_i - λ_i v_i|| / ||H||`.
#[derive(Debug, Clone)]
pub struct EigResult {
    pub values: Vec<C64>,
    pub right_vectors: ComplexMatrix,
    pub residual: f64,
}

/// Eigendecomposition of a general square complex matrix.
///
/// `tol` is a relative residual gate: the result is accepted when
/// `residual <= tol * n`, otherwise [`Error::NonConvergence`] is returned.
pub fn eig_general(h: &ComplexMatrix, tol: f64) -> Result<EigResult> {
    if !h.is_square() {
        return Err(Error::InvalidInput("eigensolver requires a square matrix"));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive"));
    }
    if !h.data().iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidInput("matrix entries must be finite"));
    }
    let n = h.rows();
    let hnorm = h.fro_norm();

    if n == 1 {
        return Ok(EigResult {
            values: vec![h[(0, 0)]],
            right_vectors: ComplexMatrix::identity(1),
            residual: 0.0,
        });
    }
    if hnorm == 0.0 {
        return Ok(EigResult {
            values: vec![C64::ZERO; n],
            right_vectors: ComplexMatrix::identity(n),
            residual: 0.0,
        });
    }

    let (hess, q) = hessenberg(h);

    let mut t = hess.clone();
    let raw = qr_eigenvalues(&mut t, n, hnorm, MAX_SWEEP_FACTOR * n)?;

    // Deterministic order: by real part, then imaginary part, ties by
    // discovery index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        raw[a]
            .re
            .partial_cmp(&raw[b].re)
            .unwrap_or(Ordering::Equal)
            .then(raw[a].im.partial_cmp(&raw[b].im).unwrap_or(Ordering::Equal))
            .then(a.cmp(&b))
    });
    let values: Vec<C64> = order.iter().map(|&i| raw[i]).collect();

    // Eigenvectors by inverse iteration on the Hessenberg form. Coincident
    // eigenvalues get slightly separated shifts and independent start
    // vectors so diagonalizable clusters yield independent vectors.
    let sep = 16.0 * (n as f64).max(4.0) * EPS * hnorm;
    let dir = c(0.8944271909999159, 0.4472135954999579); // unit, off-axis
    let mut used: Vec<C64> = Vec::with_capacity(n);
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (i, &lambda) in values.iter().enumerate() {
        let mut shift = lambda;
        while used.iter().any(|u| (shift - u).norm() < sep) {
            shift += dir * sep;
        }
        used.push(shift);
        let y = inverse_iteration(&hess, n, shift, hnorm, i as u64);
        // back-transform v = Q y
        let mut v = vec![C64::ZERO; n];
        for r in 0..n {
            let mut acc = C64::ZERO;
            for k in 0..n {
                acc += q[r * n + k] * y[k];
            }
            v[r] = acc;
        }
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for r in 0..n {
            vectors[(r, i)] = v[r] / vnorm;
        }
    }

    // Residual against the original matrix and unperturbed eigenvalues.
    let mut residual = 0.0_f64;
    for i in 0..n {
        let mut rnorm2 = 0.0;
        for r in 0..n {
            let mut acc = C64::ZERO;
            for k in 0..n {
                acc += h[(r, k)] * vectors[(k, i)];
            }
            acc -= values[i] * vectors[(r, i)];
            rnorm2 += acc.norm_sqr();
        }
        residual = residual.max(rnorm2.sqrt() / hnorm);
    }

    if residual > tol * n as f64 {
        return Err(Error::NonConvergence { sweeps: MAX_SWEEP_FACTOR * n });
    }

    Ok(EigResult { values, right_vectors: vectors, residual })
}

/// Householder reduction to upper Hessenberg form.
///
/// Returns `(H_hess, Q)` as flat row-major buffers with `A = Q H_hess Q†`
/// and `Q` unitary.
fn hessenberg(a: &ComplexMatrix) -> (Vec<C64>, Vec<C64>) {
    let n = a.rows();
    let mut h = a.data().to_vec();
    let mut q = vec![C64::ZERO; n * n];
    for i in 0..n {
        q[i * n + i] = C64::ONE;
    }

    let mut v = vec![C64::ZERO; n];
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1; // length of the column below the diagonal
        let mut xnorm2 = 0.0;
        for i in 0..m {
            xnorm2 += h[(k + 1 + i) * n + k].norm_sqr();
        }
        let xnorm = xnorm2.sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let alpha = h[(k + 1) * n + k];
        let phase = if alpha == C64::ZERO { C64::ONE } else { alpha / alpha.norm() };
        let beta = -phase * xnorm;
        for i in 0..m {
            v[i] = h[(k + 1 + i) * n + k];
        }
        v[0] -= beta;
        let vnorm2: f64 = v[..m].iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let tau = 2.0 / vnorm2;

        // left: rows k+1.. get P = I - tau v v†
        for j in k..n {
            let mut s = C64::ZERO;
            for i in 0..m {
                s += v[i].conj() * h[(k + 1 + i) * n + j];
            }
            s *= tau;
            for i in 0..m {
                h[(k + 1 + i) * n + j] -= s * v[i];
            }
        }
        // right: columns k+1..
        for r in 0..n {
            let mut s = C64::ZERO;
            for i in 0..m {
                s += h[r * n + (k + 1 + i)] * v[i];
            }
            s *= tau;
            for i in 0..m {
                h[r * n + (k + 1 + i)] -= s * v[i].conj();
            }
        }
        // accumulate Q <- Q P
        for r in 0..n {
            let mut s = C64::ZERO;
            for i in 0..m {
                s += q[r * n + (k + 1 + i)] * v[i];
            }
            s *= tau;
            for i in 0..m {
                q[r * n + (k + 1 + i)] -= s * v[i].conj();
            }
        }
        // the reflected column is exactly beta e1
        h[(k + 1) * n + k] = beta;
        for i in 1..m {
            h[(k + 1 + i) * n + k] = C64::ZERO;
        }
    }
    (h, q)
}

/// Complex Givens rotation `G = [[c, s], [-conj(s), c]]` with real `c`
/// such that `G (f, g)ᵀ = (r, 0)ᵀ`.
fn givens(f: C64, g: C64) -> (f64, C64, C64) {
    if g == C64::ZERO {
        return (1.0, C64::ZERO, f);
    }
    if f == C64::ZERO {
        let gmag = g.norm();
        return (0.0, g.conj() / gmag, c(gmag, 0.0));
    }
    let fmag = f.norm();
    let d = (fmag * fmag + g.norm_sqr()).sqrt();
    let cc = fmag / d;
    let s = (f / fmag) * g.conj() / d;
    let r = (f / fmag) * d;
    (cc, s, r)
}

/// Eigenvalues of `[[a, b], [cc, d]]` by the stabilized quadratic formula.
fn eig2x2(a: C64, b: C64, cc: C64, d: C64) -> (C64, C64) {
    let m = (a + d) * 0.5;
    let disc = ((a - d) * (a - d) * 0.25 + b * cc).sqrt();
    let r1 = m + disc;
    let r2_direct = m - disc;
    // refine the smaller root through the determinant when safe
    if r1.norm() > r2_direct.norm() && r1 != C64::ZERO {
        (r1, (a * d - b * cc) / r1)
    } else {
        (r1, r2_direct)
    }
}

fn subdiag_negligible(t: &[C64], n: usize, row: usize, hnorm: f64) -> bool {
    let s = t[(row - 1) * n + (row - 1)].norm() + t[row * n + row].norm();
    let scale = if s > 0.0 { s } else { hnorm };
    t[row * n + (row - 1)].norm() <= EPS * scale
}

/// Shifted QR iteration on an upper Hessenberg matrix; consumes `t` and
/// returns the eigenvalues in discovery order. Windows of size two are
/// resolved directly by the quadratic formula.
fn qr_eigenvalues(t: &mut [C64], n: usize, hnorm: f64, max_steps: usize) -> Result<Vec<C64>> {
    let mut hi = n - 1;
    let mut steps_total = 0usize;
    let mut steps_window = 0usize;

    loop {
        if hi == 0 {
            break;
        }
        if subdiag_negligible(t, n, hi, hnorm) {
            t[hi * n + (hi - 1)] = C64::ZERO;
            hi -= 1;
            steps_window = 0;
            continue;
        }
        // active window [lo, hi]
        let mut lo = 0;
        for m in (1..hi).rev() {
            if subdiag_negligible(t, n, m, hnorm) {
                t[m * n + (m - 1)] = C64::ZERO;
                lo = m;
                break;
            }
        }

        if hi - lo == 1 {
            // 2x2 window: closed form
            let (r1, r2) = eig2x2(
                t[lo * n + lo],
                t[lo * n + hi],
                t[hi * n + lo],
                t[hi * n + hi],
            );
            t[lo * n + lo] = r1;
            t[hi * n + hi] = r2;
            t[hi * n + lo] = C64::ZERO;
            if lo == 0 {
                hi = 0;
            } else {
                hi = lo - 1;
            }
            steps_window = 0;
            continue;
        }

        steps_total += 1;
        steps_window += 1;
        if steps_total > max_steps {
            return Err(Error::NonConvergence { sweeps: max_steps });
        }

        let shift = if steps_window % EXCEPTIONAL_EVERY == 0 {
            // stalled: ad-hoc real displacement breaks symmetry
            t[hi * n + hi] + c(0.75 * t[hi * n + (hi - 1)].norm(), 0.0)
        } else {
            let (r1, r2) = eig2x2(
                t[(hi - 1) * n + (hi - 1)],
                t[(hi - 1) * n + hi],
                t[hi * n + (hi - 1)],
                t[hi * n + hi],
            );
            let d = t[hi * n + hi];
            if (r1 - d).norm() <= (r2 - d).norm() {
                r1
            } else {
                r2
            }
        };

        qr_step(t, n, lo, hi, shift);
    }

    Ok((0..n).map(|i| t[i * n + i]).collect())
}

/// One explicit shifted QR step on the window `[lo, hi]`:
/// `T - μI = QR`, then `T ← RQ + μI`, via Givens rotations.
///
/// Updates are confined to the window; the coupling blocks outside it are
/// left stale, which preserves the spectrum (block triangular structure)
/// and is all the eigenvalue extraction needs.
fn qr_step(t: &mut [C64], n: usize, lo: usize, hi: usize, mu: C64) {
    for k in lo..=hi {
        t[k * n + k] -= mu;
    }
    let mut rots: Vec<(f64, C64)> = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (cc, s, r) = givens(t[k * n + k], t[(k + 1) * n + k]);
        t[k * n + k] = r;
        t[(k + 1) * n + k] = C64::ZERO;
        for j in (k + 1)..=hi {
            let t1 = t[k * n + j];
            let t2 = t[(k + 1) * n + j];
            t[k * n + j] = cc * t1 + s * t2;
            t[(k + 1) * n + j] = -s.conj() * t1 + cc * t2;
        }
        rots.push((cc, s));
    }
    for k in lo..hi {
        let (cc, s) = rots[k - lo];
        let top = core::cmp::min(k + 1, hi);
        for i in lo..=top {
            let t1 = t[i * n + k];
            let t2 = t[i * n + (k + 1)];
            t[i * n + k] = cc * t1 + s.conj() * t2;
            t[i * n + (k + 1)] = -s * t1 + cc * t2;
        }
    }
    for k in lo..=hi {
        t[k * n + k] += mu;
    }
}

/// Inverse iteration for one eigenvector of an upper Hessenberg matrix.
///
/// Factors `H - λI` once with adjacent-row partial pivoting (the Hessenberg
/// structure keeps U upper triangular), replacing vanishing pivots by
/// `eps * ||H||`, then refines a deterministic pseudo-random start vector.
fn inverse_iteration(hess: &[C64], n: usize, lambda: C64, hnorm: f64, seed: u64) -> Vec<C64> {
    let smlnum = EPS * hnorm;
    let mut m = hess.to_vec();
    for i in 0..n {
        m[i * n + i] -= lambda;
    }
    // factor: per column, optional adjacent swap + one elimination
    let mut swapped = vec![false; n.saturating_sub(1)];
    let mut mults = vec![C64::ZERO; n.saturating_sub(1)];
    for k in 0..n - 1 {
        if m[(k + 1) * n + k].norm() > m[k * n + k].norm() {
            for j in k..n {
                m.swap(k * n + j, (k + 1) * n + j);
            }
            swapped[k] = true;
        }
        if m[k * n + k].norm() < smlnum {
            m[k * n + k] = c(smlnum, 0.0);
        }
        let mult = m[(k + 1) * n + k] / m[k * n + k];
        mults[k] = mult;
        m[(k + 1) * n + k] = C64::ZERO;
        if mult != C64::ZERO {
            for j in (k + 1)..n {
                let t = m[k * n + j];
                m[(k + 1) * n + j] -= mult * t;
            }
        }
    }
    if m[(n - 1) * n + (n - 1)].norm() < smlnum {
        m[(n - 1) * n + (n - 1)] = c(smlnum, 0.0);
    }

    let accept = 1e3 * EPS * hnorm;
    let mut b: Vec<C64> = super::pseudo_random_unit(n, seed).data().to_vec();
    let mut best = b.clone();
    let mut best_growth = 0.0_f64;
    for _ in 0..MAX_INVERSE_ITER {
        let mut y = b.clone();
        for k in 0..n - 1 {
            if swapped[k] {
                y.swap(k, k + 1);
            }
            let t = y[k];
            y[k + 1] -= mults[k] * t;
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in (i + 1)..n {
                acc -= m[i * n + j] * y[j];
            }
            y[i] = acc / m[i * n + i];
        }
        let ynorm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in y.iter_mut() {
            *z /= ynorm;
        }
        b = y;
        if ynorm > best_growth {
            best_growth = ynorm;
            best.clone_from(&b);
        }
        // residual of the new iterate is ~ 1/ynorm
        if 1.0 / ynorm <= accept {
            return b;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numlin::pseudo_random_unit;

    fn mat(rows: usize, cols: usize, entries: &[(f64, f64)]) -> ComplexMatrix {
        let data: Vec<C64> = entries.iter().map(|&(re, im)| c(re, im)).collect();
        ComplexMatrix::from_vec(rows, cols, data).unwrap()
    }

    fn random_matrix(n: usize, seed: u64) -> ComplexMatrix {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend_from_slice(pseudo_random_unit(n, seed + i as u64).data());
        }
        ComplexMatrix::from_vec(n, n, data).unwrap()
    }

    fn eig_values_match(values: &[C64], expected: &[C64], tol: f64) {
        assert_eq!(values.len(), expected.len());
        let mut exp = expected.to_vec();
        for v in values {
            let (idx, dist) = exp
                .iter()
                .enumerate()
                .map(|(i, e)| (i, (v - e).norm()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            assert!(dist <= tol, "eigenvalue {v} not matched, best distance {dist:.3e}");
            exp.swap_remove(idx);
        }
    }

    #[test]
    fn givens_annihilates_and_is_unitary() {
        let cases = [
            (c(1.0, 2.0), c(-0.5, 0.3)),
            (c(0.0, 0.0), c(1.0, -1.0)),
            (c(2.0, 0.0), c(0.0, 0.0)),
            (c(1e-8, 0.0), c(3.0, 4.0)),
        ];
        for (f, g) in cases {
            let (cc, s, r) = givens(f, g);
            assert!((cc * cc + s.norm_sqr() - 1.0).abs() < 1e-14);
            let lower = -s.conj() * f + cc * g;
            assert!(lower.norm() < 1e-14 * (f.norm() + g.norm()).max(1.0));
            let upper = cc * f + s * g;
            assert!((upper - r).norm() < 1e-14 * r.norm().max(1.0));
        }
    }

    #[test]
    fn hessenberg_is_similarity() {
        let n = 7;
        let a = random_matrix(n, 99);
        let (h, q) = hessenberg(&a);
        let hm = ComplexMatrix::from_vec(n, n, h.clone()).unwrap();
        let qm = ComplexMatrix::from_vec(n, n, q).unwrap();
        // below-subdiagonal части are zero
        for i in 0..n {
            for j in 0..n {
                if i > j + 1 {
                    assert_eq!(hm[(i, j)], C64::ZERO);
                }
            }
        }
        assert!((&qm * &qm.adjoint()).max_dev_from_identity() < 1e-14);
        let back = &(&qm * &hm) * &qm.adjoint();
        assert!((&back - &a).max_abs() < 1e-13 * a.max_abs());
    }

    #[test]
    fn identity_and_diagonal_eigenvalues() {
        let r = eig_general(&ComplexMatrix::identity(2), DEFAULT_EIG_TOL).unwrap();
        assert_eq!(r.values.len(), 2);
        for v in &r.values {
            assert!((v - C64::ONE).norm() < 1e-14);
        }
        assert!(r.residual < 1e-14);

        // diag(2, -3i) sorts to (-3i, 2)
        let d = ComplexMatrix::diag(&[c(2.0, 0.0), c(0.0, -3.0)]);
        let r = eig_general(&d, DEFAULT_EIG_TOL).unwrap();
        assert!((r.values[0] - c(0.0, -3.0)).norm() < 1e-14);
        assert!((r.values[1] - c(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn wang_closed_form_spectrum() {
        // [[1, 0.6i], [0.6i, -1]] has eigenvalues ±sqrt(1 - 0.36) = ±0.8
        let h = mat(2, 2, &[(1.0, 0.0), (0.0, 0.6), (0.0, 0.6), (-1.0, 0.0)]);
        let r = eig_general(&h, DEFAULT_EIG_TOL).unwrap();
        assert!((r.values[0] - c(-0.8, 0.0)).norm() < 1e-12);
        assert!((r.values[1] - c(0.8, 0.0)).norm() < 1e-12);
        assert!(r.residual < 1e-13);
    }

    #[test]
    fn random_matrices_satisfy_residual_and_trace() {
        for (n, seed) in [(4usize, 7u64), (8, 21), (12, 55), (20, 77)] {
            let a = random_matrix(n, seed);
            let r = eig_general(&a, DEFAULT_EIG_TOL).unwrap();
            assert!(r.residual <= DEFAULT_EIG_TOL * n as f64, "residual {:.3e}", r.residual);
            let tr: C64 = (0..n).map(|i| a[(i, i)]).sum();
            let sum: C64 = r.values.iter().sum();
            assert!(
                (tr - sum).norm() < 1e-11 * a.fro_norm().max(1.0),
                "trace mismatch {:.3e}",
                (tr - sum).norm()
            );
        }
    }

    #[test]
    fn transpose_has_same_spectrum() {
        let a = random_matrix(9, 1234);
        let ra = eig_general(&a, DEFAULT_EIG_TOL).unwrap();
        let rt = eig_general(&a.transpose(), DEFAULT_EIG_TOL).unwrap();
        eig_values_match(&ra.values, &rt.values, 1e-10);
    }

    #[test]
    fn hermitian_input_gives_real_spectrum() {
        let b = random_matrix(8, 31);
        let a_h = &b + &b.adjoint(); // Hermitian
        let r = eig_general(&a_h, DEFAULT_EIG_TOL).unwrap();
        let scale = a_h.fro_norm();
        for v in &r.values {
            assert!(v.im.abs() <= DEFAULT_EIG_TOL * scale, "Im {:.3e}", v.im);
        }
    }

    #[test]
    fn triangular_spectrum_is_diagonal() {
        let a = mat(
            3,
            3,
            &[
                (1.0, 0.0),
                (2.0, 1.0),
                (0.0, 3.0),
                (0.0, 0.0),
                (-1.0, 0.5),
                (4.0, 0.0),
                (0.0, 0.0),
                (0.0, 0.0),
                (2.5, -0.5),
            ],
        );
        let r = eig_general(&a, DEFAULT_EIG_TOL).unwrap();
        eig_values_match(
            &r.values,
            &[c(1.0, 0.0), c(-1.0, 0.5), c(2.5, -0.5)],
            1e-12,
        );
    }

    #[test]
    fn defective_jordan_block_still_returns_values() {
        // [[1,1],[0,1]]: eigenvalues {1,1}; vectors collapse to e1 and the
        // residual stays small because each returned vector is a genuine
        // eigenvector.
        let a = mat(2, 2, &[(1.0, 0.0), (1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]);
        let r = eig_general(&a, DEFAULT_EIG_TOL).unwrap();
        for v in &r.values {
            assert!((v - C64::ONE).norm() < 1e-7); // sqrt(eps)-level splitting
        }
        assert!(r.residual < 1e-12);
    }

    #[test]
    fn larger_random_matrix_converges() {
        let n = 60;
        let a = random_matrix(n, 4242);
        let r = eig_general(&a, DEFAULT_EIG_TOL).unwrap();
        assert!(r.residual <= DEFAULT_EIG_TOL * n as f64);
        let tr: C64 = (0..n).map(|i| a[(i, i)]).sum();
        let sum: C64 = r.values.iter().sum();
        assert!((tr - sum).norm() < 1e-10 * a.fro_norm());
    }
}
