//! Eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence bisection.

use crate::error::{Error, Result};

/// Number of eigenvalues strictly below `x`.
pub fn sturm_count(diag: &[f64], offdiag: &[f64], x: f64) -> usize {
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diag.iter().enumerate() {
        let e2 = if i == 0 { 0.0 } else { offdiag[i - 1] * offdiag[i - 1] };
        q = d - x - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = -tiny;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval enclosing the spectrum.
fn gershgorin(diag: &[f64], offdiag: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { offdiag[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { offdiag[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo, hi)
}

/// The `k` smallest eigenvalues, ascending. Each is bisected down to the
/// resolution of `f64`, which is well inside `1e-12 * max |diag|`.
pub fn sturm_tridiag_eigs(diag: &[f64], offdiag: &[f64], k: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Err(Error::DimensionMismatch("empty matrix".into()));
    }
    if offdiag.len() + 1 != n {
        return Err(Error::DimensionMismatch(format!(
            "diagonal has {n} entries but off-diagonal has {}",
            offdiag.len()
        )));
    }
    if k > n {
        return Err(Error::DimensionMismatch(format!(
            "requested {k} eigenvalues of a {n}x{n} matrix"
        )));
    }
    if diag.iter().chain(offdiag).any(|v| !v.is_finite()) {
        return Err(Error::Domain("non-finite matrix entry".into()));
    }
    let (glo, ghi) = gershgorin(diag, offdiag);
    let pad = f64::EPSILON * glo.abs().max(ghi.abs()).max(1.0) * n as f64;
    let (glo, ghi) = (glo - pad, ghi + pad);

    let mut eigs = Vec::with_capacity(k);
    let mut lower = glo;
    for j in 0..k {
        // find the smallest x with count(x) > j
        let mut lo = lower;
        let mut hi = ghi;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if sturm_count(diag, offdiag, mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let eig = 0.5 * (lo + hi);
        eigs.push(eig);
        lower = lo;
    }
    Ok(eigs)
}

/// Eigenvector for an (accurate) eigenvalue by two steps of inverse iteration.
pub fn tridiag_eigenvector(diag: &[f64], offdiag: &[f64], eigenvalue: f64) -> Vec<f64> {
    let n = diag.len();
    let scale = diag.iter().fold(0.0_f64, |m, d| m.max(d.abs())).max(1.0);
    let shift = eigenvalue + 16.0 * f64::EPSILON * scale;
    let mut v = vec![1.0; n];
    for _ in 0..3 {
        v = solve_shifted(diag, offdiag, shift, &v, scale);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 && norm.is_finite() {
            v.iter_mut().for_each(|x| *x /= norm);
        }
    }
    v
}

/// Thomas algorithm on `(T - shift) y = rhs`, replacing vanishing pivots.
fn solve_shifted(diag: &[f64], offdiag: &[f64], shift: f64, rhs: &[f64], scale: f64) -> Vec<f64> {
    let n = diag.len();
    let floor = f64::EPSILON * scale;
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut piv = diag[0] - shift;
    if piv.abs() < floor {
        piv = floor;
    }
    if n > 1 {
        c[0] = offdiag[0] / piv;
    }
    d[0] = rhs[0] / piv;
    for i in 1..n {
        let mut p = diag[i] - shift - offdiag[i - 1] * c[i - 1];
        if p.abs() < floor {
            p = floor;
        }
        if i + 1 < n {
            c[i] = offdiag[i] / p;
        }
        d[i] = (rhs[i] - offdiag[i - 1] * d[i - 1]) / p;
    }
    let mut y = d;
    for i in (0..n.saturating_sub(1)).rev() {
        y[i] -= c[i] * y[i + 1];
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn one_by_one() {
        assert_eq!(sturm_tridiag_eigs(&[5.0], &[], 1).unwrap(), vec![5.0]);
    }

    #[test]
    fn discrete_laplacian_closed_form() {
        let n = 200;
        let eigs = sturm_tridiag_eigs(&vec![2.0; n], &vec![-1.0; n - 1], 10).unwrap();
        for (j, e) in eigs.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((j + 1) as f64 * PI / (n + 1) as f64).cos();
            assert!((e - exact).abs() < 1e-12, "j={j}");
        }
    }

    #[test]
    fn dimension_checks() {
        assert!(sturm_tridiag_eigs(&[1.0, 2.0], &[], 1).is_err());
        assert!(sturm_tridiag_eigs(&[1.0], &[], 2).is_err());
        assert!(sturm_tridiag_eigs(&[], &[], 0).is_err());
    }

    #[test]
    fn eigenvector_of_laplacian_is_a_sine() {
        let n = 50;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        let lam = sturm_tridiag_eigs(&diag, &off, 1).unwrap()[0];
        let v = tridiag_eigenvector(&diag, &off, lam);
        let s: Vec<f64> = (1..=n).map(|i| (i as f64 * PI / (n + 1) as f64).sin()).collect();
        let ns = s.iter().map(|x| x * x).sum::<f64>().sqrt();
        let dot: f64 = v.iter().zip(&s).map(|(a, b)| a * b).sum::<f64>() / ns;
        assert!((dot.abs() - 1.0).abs() < 1e-10);
    }
}
