//! Shared numerical context threaded through operations.

/// Tolerances and calibration constants shared across modules.
///
/// `tol` is the default relative tolerance for invariant checks and
/// classification bands. Calibration constants (`kappa_g`, `kappa_tau`) are
/// filled in lazily by the probes that determine them and default to `None`.
#[derive(Debug, Clone)]
pub struct Context {
    pub tol: f64,
    /// Symmetric-space metric normalization; see `symspace::kappa_g`.
    pub kappa_g: Option<f64>,
    /// Toledo normalization; see `surface_rep::calibrate_toledo`.
    pub kappa_tau: Option<f64>,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            tol: 1e-9,
            kappa_g: None,
            kappa_tau: None,
        }
    }
}

impl Context {
    pub fn with_tol(tol: f64) -> Self {
        Context {
            tol,
            ..Context::default()
        }
    }
}
