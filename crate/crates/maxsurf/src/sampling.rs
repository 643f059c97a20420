//! Seeded random samplers for points, tangents and isometries.
//!
//! Used by the uniqueness probes and throughout the test suite; everything
//! takes an explicit RNG so runs are reproducible from a seed.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::indefinite::{inner_unchecked, q_eval, Isometry, Vector};
use crate::matfun::expm;
use crate::pseudohyp::{HPoint, HTangent};

/// Gaussian ambient vector in R^{2,n+1}.
pub fn random_ambient<R: Rng>(n: usize, rng: &mut R) -> Vector {
    let coords: Vec<f64> = (0..n + 3).map(|_| rng.sample(StandardNormal)).collect();
    Vector::from_slice(&coords, n).expect("length is n + 3 by construction")
}

/// Random element of so(2,n+1) with entries of size ~`scale`.
///
/// so(2,n+1) = J * (skew-symmetric): A^T J + J A = 0 follows directly.
pub fn random_so_element<R: Rng>(n: usize, scale: f64, rng: &mut R) -> DMatrix<f64> {
    let d = n + 3;
    let raw = DMatrix::from_fn(d, d, |_, _| {
        let g: f64 = rng.sample(StandardNormal);
        g * scale
    });
    let skew = (&raw - raw.transpose()) * 0.5;
    let j = crate::indefinite::form_matrix(n);
    j * skew
}

/// Random element of SO_0(2,n+1): the exponential of a random algebra element.
pub fn random_so_isometry<R: Rng>(n: usize, scale: f64, rng: &mut R) -> Isometry {
    Isometry {
        matrix: expm(&random_so_element(n, scale, rng)),
        n,
    }
}

/// Random quadric point: a random isometry applied to the base point,
/// with `scale` controlling how far it strays.
pub fn random_point<R: Rng>(n: usize, scale: f64, rng: &mut R) -> HPoint {
    HPoint::base(n).apply(&random_so_isometry(n, scale, rng))
}

/// Random tangent vector at p (Gaussian ambient vector projected).
pub fn random_tangent<R: Rng>(p: &HPoint, rng: &mut R) -> HTangent {
    HTangent::project(p, &random_ambient(p.n(), rng))
}

/// Random unit tangent at p: q(v) = +1 or -1, whichever sign the Gaussian
/// draw lands on. Draws whose q is nearly null are rejected.
pub fn random_unit_tangent<R: Rng>(p: &HPoint, rng: &mut R) -> HTangent {
    loop {
        let t = random_tangent(p, rng);
        let q = q_eval(&t.dir);
        if q.abs() > 0.05 {
            return HTangent {
                base: p.clone(),
                dir: t.dir.scale(1.0 / q.abs().sqrt()),
            };
        }
    }
}

/// Random unit space-like tangent at p.
pub fn random_spacelike_tangent<R: Rng>(p: &HPoint, rng: &mut R) -> HTangent {
    loop {
        let t = random_unit_tangent(p, rng);
        if q_eval(&t.dir) > 0.0 {
            return t;
        }
    }
}

/// Random unit time-like tangent at p.
pub fn random_timelike_tangent<R: Rng>(p: &HPoint, rng: &mut R) -> HTangent {
    loop {
        let t = random_unit_tangent(p, rng);
        if q_eval(&t.dir) < 0.0 {
            return t;
        }
    }
}

/// A second unit tangent orthogonal to `v` at the same base point.
pub fn random_orthogonal_unit_tangent<R: Rng>(
    p: &HPoint,
    v: &HTangent,
    rng: &mut R,
) -> HTangent {
    let qv = q_eval(&v.dir);
    loop {
        let t = random_tangent(p, rng);
        let c = inner_unchecked(&t.dir, &v.dir) / qv;
        let res = t.dir.sub(&v.dir.scale(c));
        let q = q_eval(&res);
        if q.abs() > 0.05 {
            return HTangent {
                base: p.clone(),
                dir: res.scale(1.0 / q.abs().sqrt()),
            };
        }
    }
}
