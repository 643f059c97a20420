//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not an isometry of the indefinite form (defect {defect:.3e})")]
    NotIsometry { defect: f64 },

    #[error("degenerate span: pivot {pivot:.3e} below tolerance {tol:.3e}")]
    Degenerate { pivot: f64, tol: f64 },

    #[error("signature mismatch: requested ({p},{q}), found ({found_p},{found_q})")]
    Signature {
        p: usize,
        q: usize,
        found_p: usize,
        found_q: usize,
    },

    #[error("vector is not tangent at the base point (defect {defect:.3e})")]
    NotTangent { defect: f64 },

    #[error("tangent vector is not unit (q = {q:.6})")]
    NotUnit { q: f64 },

    #[error("no logarithm for a {class} pair")]
    NoLogarithm { class: &'static str },

    #[error("spacelike chord lies on the opposite branch (inner product {inner:.6})")]
    OppositeBranch { inner: f64 },

    #[error("pair is not causally related (class {class})")]
    Causality { class: &'static str },

    #[error("degenerate tangent plane")]
    DegeneratePlane,

    #[error("direction is not spacelike (q = {q:.6})")]
    NotSpacelike { q: f64 },

    #[error("matrix logarithm out of principal branch (eigenvalue near negative real axis)")]
    OutOfInjectivity,

    #[error("base point mismatch between tangent vectors")]
    BaseMismatch,

    #[error("relator violated: residual {residual:.3e}")]
    Relator { residual: f64 },

    #[error("numerical lift defect {defect:.3e} exceeds threshold")]
    NumericalLift { defect: f64 },

    #[error("quadrature did not converge: delta {delta:.3e} between refinement levels")]
    Accuracy { delta: f64 },

    #[error("calibration failed: residual {residual:.3e}")]
    Calibration { residual: f64 },

    #[error("signature parameter n = {n} out of range (need n >= {min})")]
    BadSignatureParam { n: usize, min: usize },

    #[error("genus {g} out of range (need g >= 2)")]
    BadGenus { g: usize },

    #[error("chord between mesh vertices is not space-like")]
    Chord,

    #[error("degenerate triangle (repeated vertex {v})")]
    DegenerateTriangle { v: usize },

    #[error("rank-deficient least-squares fit at vertex {vertex}")]
    RankDeficientFit { vertex: usize },

    #[error("vertex star too small ({got} neighbors, need {need})")]
    StarTooSmall { got: usize, need: usize },

    #[error("rounding defect {defect:.3e} too large; refine the mesh")]
    RefinementNeeded { defect: f64 },

    #[error("solver stalled: space-likeness unrecoverable at minimal step")]
    SolverStall,

    #[error("deck-translate window too small (maximizer on the boundary)")]
    EnlargeWindow,

    #[error("finite-difference stencil error: defect {defect:.3e} not O(h^2)")]
    Stencil { defect: f64 },

    #[error("matrix {what} is singular")]
    Singular { what: &'static str },

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("config error at {path}: {message}")]
    Config { path: String, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Other(String),
}

impl Error {
    /// Process exit code per the CLI contract: 2 validation, 3 numerical, 4 internal.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            DimensionMismatch { .. } | NotSquare { .. } | BadSignatureParam { .. }
            | BadGenus { .. } | Config { .. } | Json(_) | Io(_) | Signature { .. } => 2,
            Accuracy { .. } | Calibration { .. } | SolverStall | RefinementNeeded { .. }
            | NumericalLift { .. } | EnlargeWindow | Stencil { .. } => 3,
            _ => 4,
        }
    }
}
