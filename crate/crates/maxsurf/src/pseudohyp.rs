//! The quadric model of the pseudo-hyperbolic space.
//!
//! We work throughout on the double cover, the quadric {q(x) = -1} in
//! R^{2,n+1}; projection to H^{2,n} happens only at export time. Geodesics,
//! the exponential/logarithm pair, parallel transport and the causal
//! distance all have closed forms here.

use crate::error::{Error, Result};
use crate::indefinite::{inner_unchecked, q_eval, Isometry, Vector};

/// A point of the quadric: q(vec) = -1.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoint {
    pub vec: Vector,
}

impl HPoint {
    pub fn new(vec: Vector, tol: f64) -> Result<Self> {
        let q = q_eval(&vec);
        if (q + 1.0).abs() > tol {
            return Err(Error::NotUnit { q });
        }
        Ok(HPoint { vec })
    }

    /// Radial projection x -> x / sqrt(-q(x)) onto the quadric.
    pub fn project(vec: Vector) -> Result<Self> {
        let q = q_eval(&vec);
        if q >= -1e-14 {
            return Err(Error::NotUnit { q });
        }
        Ok(HPoint {
            vec: vec.scale(1.0 / (-q).sqrt()),
        })
    }

    /// Base point p0 = (0,0,1,0,...,0).
    pub fn base(n: usize) -> Self {
        HPoint {
            vec: Vector::basis(2, n),
        }
    }

    pub fn n(&self) -> usize {
        self.vec.n
    }

    pub fn apply(&self, m: &Isometry) -> Self {
        HPoint {
            vec: m.apply(&self.vec),
        }
    }
}

/// A tangent vector of the quadric: inner(base, dir) = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct HTangent {
    pub base: HPoint,
    pub dir: Vector,
}

impl HTangent {
    pub fn new(base: HPoint, dir: Vector, tol: f64) -> Result<Self> {
        let defect = inner_unchecked(&base.vec, &dir).abs();
        if defect > tol {
            return Err(Error::NotTangent { defect });
        }
        Ok(HTangent { base, dir })
    }

    /// Project an ambient vector onto the tangent space at `base`.
    pub fn project(base: &HPoint, ambient: &Vector) -> Self {
        // q(base) = -1, so the projection is u + <u,p> p.
        let c = inner_unchecked(&base.vec, ambient);
        HTangent {
            base: base.clone(),
            dir: ambient.add(&base.vec.scale(c)),
        }
    }

    pub fn q(&self) -> f64 {
        q_eval(&self.dir)
    }

    /// |v| = sqrt(|q(v)|).
    pub fn norm(&self) -> f64 {
        self.q().abs().sqrt()
    }
}

/// Trichotomy class of a chord between two quadric points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordClass {
    Spacelike,
    Lightlike,
    Timelike,
    Coincident,
    Antipodal,
}

impl ChordClass {
    pub fn name(&self) -> &'static str {
        match self {
            ChordClass::Spacelike => "spacelike",
            ChordClass::Lightlike => "lightlike",
            ChordClass::Timelike => "timelike",
            ChordClass::Coincident => "coincident",
            ChordClass::Antipodal => "antipodal",
        }
    }
}

/// Classify the chord between x and y from s = <x,y>.
pub fn classify_pair(x: &HPoint, y: &HPoint, tol: f64) -> ChordClass {
    let s = inner_unchecked(&x.vec, &y.vec);
    let same = x.vec.sub(&y.vec).euclidean_norm() <= tol * (1.0 + x.vec.euclidean_norm());
    let opposite = x.vec.add(&y.vec).euclidean_norm() <= tol * (1.0 + x.vec.euclidean_norm());
    if (s + 1.0).abs() <= tol && same {
        ChordClass::Coincident
    } else if (s - 1.0).abs() <= tol && opposite {
        ChordClass::Antipodal
    } else if (s.abs() - 1.0).abs() <= tol {
        ChordClass::Lightlike
    } else if s.abs() > 1.0 {
        ChordClass::Spacelike
    } else {
        ChordClass::Timelike
    }
}

/// Geodesic through p with initial direction v, evaluated at parameter t.
///
/// v must be unit space-like (q = +1), unit time-like (q = -1), or null
/// (q = 0); normalize first otherwise.
pub fn geodesic(p: &HPoint, v: &HTangent, t: f64) -> Result<HPoint> {
    let defect = inner_unchecked(&p.vec, &v.dir).abs();
    if defect > 1e-7 {
        return Err(Error::NotTangent { defect });
    }
    let qv = q_eval(&v.dir);
    let tol = 1e-7;
    let vec = if (qv - 1.0).abs() <= tol {
        p.vec.scale(t.cosh()).add(&v.dir.scale(t.sinh()))
    } else if (qv + 1.0).abs() <= tol {
        p.vec.scale(t.cos()).add(&v.dir.scale(t.sin()))
    } else if qv.abs() <= tol {
        p.vec.add(&v.dir.scale(t))
    } else {
        return Err(Error::NotUnit { q: qv });
    };
    // Renormalize to kill accumulated rounding for large |t|.
    HPoint::project(vec)
}

/// Inverse of the geodesic map: the tangent v with exp_p(v) = y.
///
/// Only the same-sheet space-like chord (inner < -1) and the time-like
/// chord are invertible; light-like and antipodal pairs have no logarithm.
pub fn log_map(p: &HPoint, y: &HPoint, tol: f64) -> Result<HTangent> {
    let s = inner_unchecked(&p.vec, &y.vec);
    match classify_pair(p, y, tol) {
        ChordClass::Coincident => Ok(HTangent {
            base: p.clone(),
            dir: Vector::zeros(p.n()),
        }),
        ChordClass::Spacelike => {
            if s > 1.0 {
                return Err(Error::OppositeBranch { inner: s });
            }
            let t = (-s).acosh();
            // y = cosh(t) p + sinh(t) v_hat
            let v_hat = y.vec.sub(&p.vec.scale(t.cosh())).scale(1.0 / t.sinh());
            Ok(HTangent {
                base: p.clone(),
                dir: v_hat.scale(t),
            })
        }
        ChordClass::Timelike => {
            let t = (-s).clamp(-1.0, 1.0).acos();
            let v_hat = y.vec.sub(&p.vec.scale(t.cos())).scale(1.0 / t.sin());
            Ok(HTangent {
                base: p.clone(),
                dir: v_hat.scale(t),
            })
        }
        ChordClass::Lightlike => Err(Error::NoLogarithm { class: "lightlike" }),
        ChordClass::Antipodal => Err(Error::NoLogarithm { class: "antipodal" }),
    }
}

/// Levi-Civita parallel transport of w along the geodesic exp_p(t v).
///
/// v must be unit space-like or unit time-like.
pub fn parallel_transport(p: &HPoint, v: &HTangent, w: &HTangent, t: f64) -> Result<HTangent> {
    let qv = q_eval(&v.dir);
    let tol = 1e-7;
    let (end, v_t) = if (qv - 1.0).abs() <= tol {
        let end = p.vec.scale(t.cosh()).add(&v.dir.scale(t.sinh()));
        let vt = p.vec.scale(t.sinh()).add(&v.dir.scale(t.cosh()));
        (end, vt)
    } else if (qv + 1.0).abs() <= tol {
        let end = p.vec.scale(t.cos()).add(&v.dir.scale(t.sin()));
        let vt = p.vec.scale(-t.sin()).add(&v.dir.scale(t.cos()));
        (end, vt)
    } else {
        return Err(Error::NotUnit { q: qv });
    };
    // Split w into its component along v (rotates with the geodesic frame)
    // and the rest (ambient-constant, orthogonal to the geodesic 2-plane).
    let a = inner_unchecked(&w.dir, &v.dir) / qv;
    let w_perp = w.dir.sub(&v.dir.scale(a));
    let dir = v_t.scale(a).add(&w_perp);
    Ok(HTangent {
        base: HPoint::project(end)?,
        dir,
    })
}

/// Causal distance arccos(-<x,y>) in [0, pi); defined for time-like or
/// coincident pairs only.
pub fn causal_distance(x: &HPoint, y: &HPoint, tol: f64) -> Result<f64> {
    match classify_pair(x, y, tol) {
        ChordClass::Coincident => Ok(0.0),
        ChordClass::Timelike => {
            let s = inner_unchecked(&x.vec, &y.vec);
            Ok((-s).clamp(-1.0, 1.0).acos())
        }
        c => Err(Error::Causality { class: c.name() }),
    }
}

/// Sectional curvature of the tangent plane span(v, w) from the
/// constant-curvature tensor R(X,Y)Z = -(<Y,Z> X - <X,Z> Y).
pub fn sectional_curvature(_p: &HPoint, v: &HTangent, w: &HTangent) -> Result<f64> {
    let qv = q_eval(&v.dir);
    let qw = q_eval(&w.dir);
    let vw = inner_unchecked(&v.dir, &w.dir);
    let denom = qv * qw - vw * vw;
    let scale = (qv.abs() + vw.abs()).max(qw.abs()).max(1e-30);
    if denom.abs() < 1e-10 * scale * scale {
        return Err(Error::DegeneratePlane);
    }
    // R(v,w)w = -(<w,w> v - <v,w> w)
    let rvww = v.dir.scale(-qw).add(&w.dir.scale(vw));
    let num = inner_unchecked(&rvww, &v.dir);
    Ok(num / denom)
}

/// Finite-difference sectional curvature: parallel-transport holonomy around
/// a small geodesic quadrilateral with sides h in the plane of (v, w).
///
/// Traversing the identical quadrilateral both ways cancels the odd error
/// terms, leaving an O(h^2) estimate.
pub fn sectional_curvature_fd(p: &HPoint, v: &HTangent, w: &HTangent, h: f64) -> Result<f64> {
    // Orthonormalize (v, w) within the plane.
    let qv = q_eval(&v.dir);
    if qv.abs() < 1e-12 {
        return Err(Error::DegeneratePlane);
    }
    let s1 = qv.signum();
    let e1 = HTangent {
        base: p.clone(),
        dir: v.dir.scale(1.0 / qv.abs().sqrt()),
    };
    let c = inner_unchecked(&w.dir, &e1.dir) / s1;
    let w_res = w.dir.sub(&e1.dir.scale(c));
    let qw = q_eval(&w_res);
    if qw.abs() < 1e-12 * w.dir.euclidean_norm().powi(2).max(1e-12) {
        return Err(Error::DegeneratePlane);
    }
    let s2 = qw.signum();
    let e2 = HTangent {
        base: p.clone(),
        dir: w_res.scale(1.0 / qw.abs().sqrt()),
    };

    let forward = transport_around_quadrilateral(p, &e1, &e2, h, false)?;
    let backward = transport_around_quadrilateral(p, &e1, &e2, h, true)?;
    // (H - H^{-1})/2 applied to e2, compared against R(e1,e2)e2.
    let d = forward.dir.sub(&backward.dir).scale(0.5);
    let num = inner_unchecked(&d, &e1.dir) / (h * h);
    Ok(num / (s1 * s2))
}

/// Transport e2 around the geodesic quadrilateral spanned by (e1, e2) at
/// side length h, in the given orientation; returns the result at p.
fn transport_around_quadrilateral(
    p: &HPoint,
    e1: &HTangent,
    e2: &HTangent,
    h: f64,
    reverse: bool,
) -> Result<HTangent> {
    // Build the four corner points.
    let p0 = p.clone();
    let p1 = geodesic(&p0, e1, h)?;
    let e2_at_p1 = parallel_transport(&p0, e1, e2, h)?;
    let p2 = geodesic(&p1, &e2_at_p1, h)?;
    let e1_at_p1 = parallel_transport(&p0, e1, e1, h)?;
    let e1_at_p2 = transport_along_chord(&p1, &p2, &e1_at_p1)?;
    let neg_e1_at_p2 = HTangent {
        base: p2.clone(),
        dir: e1_at_p2.dir.scale(-1.0),
    };
    let p3 = geodesic(&p2, &neg_e1_at_p2, h)?;

    let corners = [p0.clone(), p1, p2, p3];
    let mut u = HTangent {
        base: p0.clone(),
        dir: e2.dir.clone(),
    };
    let order: Vec<usize> = if reverse {
        vec![0, 3, 2, 1]
    } else {
        vec![0, 1, 2, 3]
    };
    for k in 0..4 {
        let from = &corners[order[k]];
        let to = &corners[order[(k + 1) % 4]];
        u = transport_along_chord(from, to, &u)?;
    }
    Ok(u)
}

/// Transport a tangent vector along the geodesic chord from `from` to `to`.
pub fn transport_along_chord(from: &HPoint, to: &HPoint, u: &HTangent) -> Result<HTangent> {
    let l = log_map(from, to, 1e-12)?;
    let len = l.norm();
    if len < 1e-15 {
        return Ok(HTangent {
            base: to.clone(),
            dir: u.dir.clone(),
        });
    }
    let unit = HTangent {
        base: from.clone(),
        dir: l.dir.scale(1.0 / len),
    };
    parallel_transport(from, &unit, &HTangent {
        base: from.clone(),
        dir: u.dir.clone(),
    }, len)
}

/// Endpoints at infinity of a space-like geodesic: the isotropic lines
/// through p + v and p - v, normalized to unit Euclidean norm.
pub fn endpoints_at_infinity(p: &HPoint, v: &HTangent) -> Result<(Vector, Vector)> {
    let qv = q_eval(&v.dir);
    if (qv - 1.0).abs() > 1e-7 {
        return Err(Error::NotSpacelike { q: qv });
    }
    let plus = p.vec.add(&v.dir);
    let minus = p.vec.sub(&v.dir);
    let np = plus.euclidean_norm();
    let nm = minus.euclidean_norm();
    Ok((plus.scale(1.0 / np), minus.scale(1.0 / nm)))
}
