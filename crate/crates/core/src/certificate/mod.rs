//! Scalar certificate excluding spurious local maxima for dense graphs.
//!
//! Given a minimum-degree fraction `μ`, an antipodal-defect parameter `α`
//! and coefficients `ε`, `δ`, three inequalities are evaluated. When all hold,
//! no non-synchronized local maximum can exist on any graph with those
//! parameters. [`sweep_certificate`] checks them on a grid in floating point;
//! [`verify_hardened`] proves them on whole boxes in interval arithmetic.

mod bounds;
mod evaluate;
mod hardened;
pub mod interval;
mod optimize;
mod sweep;

use thiserror::Error;

pub use bounds::{
    alpha_branch_threshold, contradiction_condition, gamma1_zero_branch, lxb_r_lower_bound, lxb_threshold,
    s_delta, CONJECTURED_CRITICAL_DENSITY, TAYLOR_THRESHOLD,
};
pub use evaluate::{
    evaluate_certificate, evaluate_with_margins, CertificateEvaluation, CertificateParams, MarginTargets, Verdict,
    STRICT_SLACK,
};
pub use hardened::{enclose, verify_hardened, BoxEnclosure, BoxVerdict, CellReport, HardenedConfig, HardenedReport};
pub use optimize::{
    best_parameters, optimize_parameters, OptimizeOptions, OptimizeReport, ScoredParams, REFERENCE_DELTA,
    REFERENCE_EPSILON,
};
pub use sweep::{sweep_certificate, Extremum, GridPoint, SweepConfig, SweepReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertificateError {
    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("regime violation: {0}")]
    RegimeViolation(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
}
