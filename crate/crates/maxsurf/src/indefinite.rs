//! Linear algebra over R^{2,n+1}.
//!
//! The quadratic form is q(x) = x_1^2 + x_2^2 - x_3^2 - ... - x_{n+3}^2:
//! coordinates 1,2 are positive, the remaining n+1 are negative. Every other
//! module inherits this convention.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matfun::inf_norm;

/// An element of R^{2,n+1}, stored with its signature parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vector {
    pub coords: DVector<f64>,
    pub n: usize,
}

impl Vector {
    /// Build from coordinates; `coords.len()` must be `n + 3`.
    pub fn new(coords: DVector<f64>, n: usize) -> Result<Self> {
        if coords.len() != n + 3 {
            return Err(Error::DimensionMismatch {
                expected: n + 3,
                got: coords.len(),
            });
        }
        Ok(Vector { coords, n })
    }

    pub fn from_slice(coords: &[f64], n: usize) -> Result<Self> {
        Self::new(DVector::from_row_slice(coords), n)
    }

    /// Standard basis vector e_i (zero based).
    pub fn basis(i: usize, n: usize) -> Self {
        let mut c = DVector::zeros(n + 3);
        c[i] = 1.0;
        Vector { coords: c, n }
    }

    pub fn zeros(n: usize) -> Self {
        Vector {
            coords: DVector::zeros(n + 3),
            n,
        }
    }

    pub fn dim(&self) -> usize {
        self.n + 3
    }

    pub fn scale(&self, s: f64) -> Self {
        Vector {
            coords: &self.coords * s,
            n: self.n,
        }
    }

    pub fn add(&self, other: &Vector) -> Self {
        Vector {
            coords: &self.coords + &other.coords,
            n: self.n,
        }
    }

    pub fn sub(&self, other: &Vector) -> Self {
        Vector {
            coords: &self.coords - &other.coords,
            n: self.n,
        }
    }

    /// Euclidean (not indefinite) norm; used only for normalizing
    /// representatives of isotropic lines.
    pub fn euclidean_norm(&self) -> f64 {
        self.coords.norm()
    }
}

/// The diagonal of the Gram matrix J = diag(1,1,-1,...,-1).
pub fn form_matrix(n: usize) -> DMatrix<f64> {
    let d = n + 3;
    DMatrix::from_fn(d, d, |i, j| {
        if i != j {
            0.0
        } else if i < 2 {
            1.0
        } else {
            -1.0
        }
    })
}

/// q(x) = x_1^2 + x_2^2 - sum_{i>=3} x_i^2.
pub fn q_eval(x: &Vector) -> f64 {
    let c = &x.coords;
    let mut s = c[0] * c[0] + c[1] * c[1];
    for i in 2..c.len() {
        s -= c[i] * c[i];
    }
    s
}

/// The symmetric bilinear form polarizing `q_eval`.
pub fn inner(x: &Vector, y: &Vector) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    let (a, b) = (&x.coords, &y.coords);
    let mut s = a[0] * b[0] + a[1] * b[1];
    for i in 2..a.len() {
        s -= a[i] * b[i];
    }
    Ok(s)
}

/// Like `inner` but panics on dimension mismatch; for internal hot paths
/// where dimensions are structurally equal.
pub fn inner_unchecked(x: &Vector, y: &Vector) -> f64 {
    inner(x, y).expect("dimension mismatch in inner_unchecked")
}

/// An element of O(2,n+1), i.e. M^T J M = J.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    pub matrix: DMatrix<f64>,
    pub n: usize,
}

impl Isometry {
    pub fn new(matrix: DMatrix<f64>, n: usize, tol: f64) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.nrows() != n + 3 {
            return Err(Error::DimensionMismatch {
                expected: n + 3,
                got: matrix.nrows(),
            });
        }
        let defect = isometry_defect(&matrix, n);
        if defect > tol {
            return Err(Error::NotIsometry { defect });
        }
        Ok(Isometry { matrix, n })
    }

    pub fn identity(n: usize) -> Self {
        Isometry {
            matrix: DMatrix::identity(n + 3, n + 3),
            n,
        }
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        Vector {
            coords: &self.matrix * &x.coords,
            n: x.n,
        }
    }

    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            matrix: &self.matrix * &other.matrix,
            n: self.n,
        }
    }

    /// Inverse via the form: M^{-1} = J M^T J.
    pub fn inverse(&self) -> Isometry {
        let j = form_matrix(self.n);
        Isometry {
            matrix: &j * self.matrix.transpose() * &j,
            n: self.n,
        }
    }
}

/// An element of the Lie algebra so(2,n+1): M^T J + J M = 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LieElement {
    pub matrix: DMatrix<f64>,
    pub n: usize,
}

impl LieElement {
    pub fn new(matrix: DMatrix<f64>, n: usize, tol: f64) -> Result<Self> {
        let j = form_matrix(n);
        let defect = inf_norm(&(matrix.transpose() * &j + &j * &matrix));
        if defect > tol {
            return Err(Error::NotTangent { defect });
        }
        Ok(LieElement { matrix, n })
    }
}

/// Max-norm of M^T J M - J.
pub fn isometry_defect(m: &DMatrix<f64>, n: usize) -> f64 {
    let j = form_matrix(n);
    inf_norm(&(m.transpose() * &j * m - &j))
}

/// True iff ||M^T J M - J||_inf <= tol.
pub fn is_isometry(m: &DMatrix<f64>, tol: f64) -> Result<bool> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if m.nrows() < 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: m.nrows(),
        });
    }
    let n = m.nrows() - 3;
    Ok(isometry_defect(m, n) <= tol)
}

/// Membership in the identity component SO_0(2,n+1).
///
/// Characterized by det M = +1 together with a positive determinant of the
/// upper-left 2x2 block (the projection of the image of the positive plane
/// back onto the positive plane preserves orientation).
pub fn is_identity_component(m: &Isometry) -> bool {
    let det = m.matrix.clone().determinant();
    let ul = m.matrix[(0, 0)] * m.matrix[(1, 1)] - m.matrix[(0, 1)] * m.matrix[(1, 0)];
    det > 0.0 && ul > 0.0
}

/// Indefinite Gram-Schmidt with pivoting.
///
/// Returns a basis of the span with Gram matrix diag(+1...,-1...), positive
/// vectors first. The input must span a nondegenerate subspace of the
/// requested signature.
pub fn orthonormalize(
    vectors: &[Vector],
    target: (usize, usize),
    tol: f64,
) -> Result<Vec<Vector>> {
    let (p, q) = target;
    if vectors.len() != p + q {
        return Err(Error::DimensionMismatch {
            expected: p + q,
            got: vectors.len(),
        });
    }
    let scale = vectors
        .iter()
        .map(|v| v.coords.norm_squared())
        .fold(0.0f64, f64::max)
        .max(1.0);
    let mut remaining: Vec<Vector> = vectors.to_vec();
    let mut basis: Vec<(Vector, f64)> = Vec::new();
    while !remaining.is_empty() {
        // Pivot on the largest |q| among the residuals.
        let (idx, _) = remaining
            .iter()
            .enumerate()
            .map(|(i, v)| (i, q_eval(v).abs()))
            .fold((0, -1.0), |acc, it| if it.1 > acc.1 { it } else { acc });
        let v = remaining.swap_remove(idx);
        let qv = q_eval(&v);
        if qv.abs() <= tol * scale {
            return Err(Error::Degenerate {
                pivot: qv.abs(),
                tol: tol * scale,
            });
        }
        let sign = qv.signum();
        let u = v.scale(1.0 / qv.abs().sqrt());
        // Project the rest off u (with the indefinite form).
        for w in remaining.iter_mut() {
            let c = inner_unchecked(w, &u) / sign;
            *w = w.sub(&u.scale(c));
        }
        basis.push((u, sign));
    }
    let found_p = basis.iter().filter(|(_, s)| *s > 0.0).count();
    let found_q = basis.len() - found_p;
    if found_p != p || found_q != q {
        return Err(Error::Signature {
            p,
            q,
            found_p,
            found_q,
        });
    }
    let mut out: Vec<Vector> = basis
        .iter()
        .filter(|(_, s)| *s > 0.0)
        .map(|(v, _)| v.clone())
        .collect();
    out.extend(basis.iter().filter(|(_, s)| *s < 0.0).map(|(v, _)| v.clone()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn v(coords: &[f64], n: usize) -> Vector {
        Vector::from_slice(coords, n).unwrap()
    }

    #[test]
    fn q_on_basis_vectors() {
        assert_eq!(q_eval(&v(&[1.0, 0.0, 0.0, 0.0, 0.0], 2)), 1.0);
        assert_eq!(q_eval(&v(&[0.0, 0.0, 1.0, 0.0, 0.0], 2)), -1.0);
        assert_eq!(q_eval(&v(&[3.0, 4.0, 5.0, 0.0, 0.0], 2)), 0.0);
    }

    #[test]
    fn inner_polarizes_q() {
        let x = v(&[0.3, -1.2, 0.8, 0.1, 2.0], 2);
        let y = v(&[1.1, 0.4, -0.3, 0.9, -0.7], 2);
        let lhs = q_eval(&x.add(&y));
        let rhs = q_eval(&x) + 2.0 * inner(&x, &y).unwrap() + q_eval(&y);
        assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
    }

    #[test]
    fn inner_closed_form_cosh() {
        // x = (0,0,cosh 1, sinh 1, 0), y = (0,0,1,0,0): inner = -cosh 1.
        let x = v(&[0.0, 0.0, 1f64.cosh(), 1f64.sinh(), 0.0], 2);
        let y = v(&[0.0, 0.0, 1.0, 0.0, 0.0], 2);
        assert_abs_diff_eq!(inner(&x, &y).unwrap(), -(1f64.cosh()), epsilon = 1e-12);
    }

    #[test]
    fn inner_dimension_mismatch() {
        let x = v(&[1.0, 0.0, 0.0, 0.0, 0.0], 2);
        let y = v(&[1.0, 0.0, 0.0, 0.0], 1);
        assert!(inner(&x, &y).is_err());
    }

    #[test]
    fn identity_is_isometry() {
        let m = DMatrix::identity(5, 5);
        assert!(is_isometry(&m, 1e-12).unwrap());
    }

    #[test]
    fn single_sign_flip_is_not_isometry_of_wrong_kind() {
        // diag(1,1,-1,1,1) sends J to a different form.
        let m = DMatrix::from_diagonal(&DVector::from_row_slice(&[1.0, 1.0, -1.0, 1.0, 1.0]));
        // This IS an isometry (diagonal signs square away); the spec's example
        // means the matrix that fails M^T J M = J, i.e. a non-orthogonal mix.
        assert!(is_isometry(&m, 1e-12).unwrap());
        let bad = DMatrix::from_row_slice(
            5,
            5,
            &[
                1.0, 0.5, 0.0, 0.0, 0.0, //
                0.0, 1.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, 0.0, //
                0.0, 0.0, 0.0, 0.0, 1.0,
            ],
        );
        assert!(!is_isometry(&bad, 1e-9).unwrap());
    }

    #[test]
    fn rotation_block_is_in_identity_component() {
        let th = 0.37f64;
        let mut m = DMatrix::identity(5, 5);
        m[(0, 0)] = th.cos();
        m[(0, 1)] = -th.sin();
        m[(1, 0)] = th.sin();
        m[(1, 1)] = th.cos();
        assert!(is_isometry(&m, 1e-12).unwrap());
        let iso = Isometry::new(m, 2, 1e-9).unwrap();
        assert!(is_identity_component(&iso));
    }

    #[test]
    fn double_flip_stays_in_identity_component() {
        // diag(-1,-1,1,...) has det +1 and upper-left det +1.
        let m = DMatrix::from_diagonal(&DVector::from_row_slice(&[-1.0, -1.0, 1.0, 1.0, 1.0]));
        let iso = Isometry::new(m, 2, 1e-9).unwrap();
        assert!(is_identity_component(&iso));
        // diag(1,-1,-1,1,...) flips the orientation of the positive plane.
        let m = DMatrix::from_diagonal(&DVector::from_row_slice(&[1.0, -1.0, -1.0, 1.0, 1.0]));
        let iso = Isometry::new(m, 2, 1e-9).unwrap();
        assert!(!is_identity_component(&iso));
    }

    #[test]
    fn identity_component_is_multiplicative() {
        let th = 0.9f64;
        let mut r = DMatrix::identity(5, 5);
        r[(0, 0)] = th.cos();
        r[(0, 1)] = -th.sin();
        r[(1, 0)] = th.sin();
        r[(1, 1)] = th.cos();
        let t = 0.6f64;
        let mut b = DMatrix::identity(5, 5);
        b[(0, 0)] = t.cosh();
        b[(0, 2)] = t.sinh();
        b[(2, 0)] = t.sinh();
        b[(2, 2)] = t.cosh();
        let r = Isometry::new(r, 2, 1e-9).unwrap();
        let b = Isometry::new(b, 2, 1e-9).unwrap();
        assert!(is_identity_component(&r));
        assert!(is_identity_component(&b));
        assert!(is_identity_component(&r.compose(&b)));
    }

    #[test]
    fn orthonormalize_keeps_standard_pair() {
        let e1 = Vector::basis(0, 2);
        let e2 = Vector::basis(1, 2);
        let out = orthonormalize(&[e1.clone(), e2.clone()], (2, 0), 1e-12).unwrap();
        assert_abs_diff_eq!((out[0].coords.clone() - e1.coords).norm(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!((out[1].coords.clone() - e2.coords).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn orthonormalize_mixed_signature_pair() {
        // (e1 + e3, e3) spans a (1,1) plane.
        let a = v(&[1.0, 0.0, 1.0, 0.0, 0.0], 2);
        let b = v(&[0.0, 0.0, 1.0, 0.0, 0.0], 2);
        let out = orthonormalize(&[a, b], (1, 1), 1e-12).unwrap();
        assert_abs_diff_eq!(q_eval(&out[0]), 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(q_eval(&out[1]), -1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(inner_unchecked(&out[0], &out[1]), 0.0, epsilon = 1e-10);
        // Same span: both outputs have zero components outside coords 1,3.
        for u in &out {
            assert_abs_diff_eq!(u.coords[1], 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(u.coords[3], 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn orthonormalize_detects_rank_deficiency() {
        let a = Vector::basis(0, 2);
        let mut b = Vector::basis(0, 2);
        b.coords[1] = 1e-15;
        assert!(matches!(
            orthonormalize(&[a, b], (2, 0), 1e-12),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn isometries_preserve_inner() {
        let t = 1.1f64;
        let mut b = DMatrix::identity(5, 5);
        b[(0, 0)] = t.cosh();
        b[(0, 3)] = t.sinh();
        b[(3, 0)] = t.sinh();
        b[(3, 3)] = t.cosh();
        let m = Isometry::new(b, 2, 1e-9).unwrap();
        let x = v(&[0.3, -1.2, 0.8, 0.1, 2.0], 2);
        let y = v(&[1.1, 0.4, -0.3, 0.9, -0.7], 2);
        let before = inner(&x, &y).unwrap();
        let after = inner(&m.apply(&x), &m.apply(&y)).unwrap();
        assert_abs_diff_eq!(before, after, epsilon = 1e-10 * before.abs().max(1.0));
    }
}
