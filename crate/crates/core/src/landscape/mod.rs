//! Energy landscape of `f(θ) = Σ_{i,j} a_ij cos(θ_i − θ_j)` on a fixed graph.
//!
//! Everything here is a pure function of an immutable [`Graph`] and
//! [`PhaseState`], evaluated densely in O(n²).

mod diagnostics;
mod functional;
mod order;
mod phase;

pub use diagnostics::{
    antipodal_defect, cone_decomposition, empirical_alpha, good_vertices, non_neighbor_defects, ConeDecomposition,
    ConeSide,
};
pub use functional::{energy, gradient_flow_rhs, gradient_residual, hessian_matrix, hessian_quadratic_form};
pub use order::{order_parameter, OrderParameter};
pub use phase::{normalize_angle, wrap_difference, PhaseState};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LandscapeError {
    #[error("dimension mismatch: expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("phase state is empty")]
    Empty,
    #[error("angle {0} is not finite")]
    NonFinite(usize),
    #[error("graph is complete: the non-edge sums are undefined")]
    CompleteGraph,
    #[error("order parameter vanishes: no reference direction")]
    UndefinedOrientation,
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("malformed phase state: {0}")]
    Parse(String),
}

pub(crate) fn check_dims(g: &Graph, s: &PhaseState) -> Result<(), LandscapeError> {
    if g.n() != s.len() {
        return Err(LandscapeError::DimensionMismatch {
            expected: g.n(),
            found: s.len(),
        });
    }
    Ok(())
}
