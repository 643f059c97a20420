//! Dense matrix exponential, square root and principal logarithm.
//!
//! Desk-scale only: matrices here are at most (n+3)x(n+3) with n <= 8, so
//! plain scaling-and-squaring with Taylor tails is accurate and fast.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Matrix exponential by scaling and squaring with a Taylor tail.
pub fn expm(a: &DMatrix<f64>) -> DMatrix<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm needs a square matrix");
    let norm = inf_norm(a);
    // Scale so the Taylor series converges in a handful of terms.
    let k = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a / 2f64.powi(k as i32);
    let mut term = DMatrix::identity(n, n);
    let mut sum = DMatrix::identity(n, n);
    for j in 1..=20 {
        term = (&term * &scaled) / j as f64;
        sum += &term;
    }
    let mut result = sum;
    for _ in 0..k {
        result = &result * &result;
    }
    result
}

/// Matrix square root by the Denman-Beavers iteration.
///
/// Requires the spectrum to avoid the closed negative real axis.
pub fn sqrtm(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let mut y = a.clone();
    let mut z = DMatrix::identity(n, n);
    for _ in 0..60 {
        let yi = y
            .clone()
            .try_inverse()
            .ok_or(Error::OutOfInjectivity)?;
        let zi = z
            .clone()
            .try_inverse()
            .ok_or(Error::OutOfInjectivity)?;
        let y_next = (&y + &zi) * 0.5;
        let z_next = (&z + &yi) * 0.5;
        let delta = inf_norm(&(&y_next - &y));
        y = y_next;
        z = z_next;
        if delta < 1e-15 * (1.0 + inf_norm(&y)) {
            return Ok(y);
        }
    }
    // Did not converge; treat as a branch failure.
    Err(Error::OutOfInjectivity)
}

/// Principal matrix logarithm via inverse scaling-and-squaring.
///
/// Fails with `OutOfInjectivity` when an eigenvalue sits on (or numerically
/// touches) the negative real axis, where no principal branch exists.
pub fn logm(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "logm needs a square matrix");
    // Branch check on the spectrum.
    for ev in a.complex_eigenvalues().iter() {
        if ev.re < 0.0 && ev.im.abs() < 1e-9 * (1.0 + ev.re.abs()) {
            return Err(Error::OutOfInjectivity);
        }
        if ev.norm() < 1e-14 {
            return Err(Error::OutOfInjectivity);
        }
    }
    let id = DMatrix::identity(n, n);
    let mut x = a.clone();
    let mut k = 0u32;
    while inf_norm(&(&x - &id)) > 0.25 {
        x = sqrtm(&x)?;
        k += 1;
        if k > 50 {
            return Err(Error::OutOfInjectivity);
        }
    }
    // log(I + E) by the alternating Taylor series; ||E|| <= 0.25 here.
    let e = &x - &id;
    let mut term = e.clone();
    let mut sum = e.clone();
    for j in 2..=40 {
        term = -(&term * &e);
        // term now holds (-1)^{j-1} E^j up to the 1/j factor applied below.
        sum += &term / j as f64;
    }
    Ok(sum * 2f64.powi(k as i32))
}

pub fn inf_norm(a: &DMatrix<f64>) -> f64 {
    a.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn expm_matches_closed_form_rotation() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -1.3, 1.3, 0.0]);
        let e = expm(&a);
        assert_abs_diff_eq!(e[(0, 0)], 1.3f64.cos(), epsilon = 1e-13);
        assert_abs_diff_eq!(e[(1, 0)], 1.3f64.sin(), epsilon = 1e-13);
    }

    #[test]
    fn logm_inverts_expm() {
        let a = DMatrix::from_row_slice(
            3,
            3,
            &[0.0, 0.7, 0.2, 0.7, 0.0, -0.4, 0.2, -0.4, 0.0],
        );
        let l = logm(&expm(&a)).unwrap();
        assert!(inf_norm(&(&l - &a)) < 1e-11);
    }

    #[test]
    fn logm_rejects_negative_real_spectrum() {
        let a = DMatrix::from_row_slice(2, 2, &[-1.0, 0.0, 0.0, 2.0]);
        assert!(logm(&a).is_err());
    }

    #[test]
    fn sqrtm_squares_back() {
        let a = DMatrix::from_row_slice(2, 2, &[4.0, 1.0, 0.5, 3.0]);
        let s = sqrtm(&a).unwrap();
        assert!(inf_norm(&(&s * &s - &a)) < 1e-12);
    }
}
