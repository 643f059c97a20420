//! Numerical geometry of maximal space-like surfaces in the pseudo-hyperbolic
//! space H^{2,n}.
//!
//! The crate provides:
//! - exact-signature linear algebra over R^{2,n+1} ([`indefinite`]),
//! - the quadric model of H^{2,n} with geodesics, transport and causal
//!   distance ([`pseudohyp`]),
//! - the Riemannian symmetric space of SO_0(2,n+1) in the involution model
//!   ([`symspace`]),
//! - surface-group representations with Euler and Toledo invariants
//!   ([`surface_rep`]),
//! - equivariant triangulated space-like surfaces and their curvature data
//!   ([`eqmesh`]),
//! - a variational solver for equivariant maximal surfaces plus the causal
//!   uniqueness probes ([`maxsolver`]),
//! - the Gauss map to the symmetric space ([`gaussmap`]),
//! - fiberwise Higgs-bundle algebra ([`higgs`]),
//! - CLI plumbing and serialization ([`cli`], [`io`]).

pub mod cli;
pub mod context;
pub mod eqmesh;
pub mod error;
pub mod gaussmap;
pub mod higgs;
pub mod indefinite;
pub mod io;
pub mod matfun;
pub mod maxsolver;
pub mod pseudohyp;
pub mod sampling;
pub mod surface_rep;
pub mod symspace;

pub use context::Context;
pub use error::{Error, Result};
