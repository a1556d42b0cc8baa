//! Gradient flow on the torus and the equilibria it reaches.

mod census;
mod classify;
mod flow;
mod newton;
mod probe;

pub use census::{multistart_search, rotation_aligned_distance, Census, CensusEntry, CensusOptions};
pub use classify::{classify, default_zero_tol, Classification, ClassifyOptions, EquilibriumReport};
pub use flow::{integrate, stable_step, FlowField, IntegrateOptions, Trajectory, TrajectorySample};
pub use newton::{newton_basin_radius, refine_equilibrium, RefineOptions, Refinement};
pub use probe::{cone_probe_vector, probe_outlier_weight};

use crate::landscape::LandscapeError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DynamicsError {
    #[error(transparent)]
    Landscape(#[from] LandscapeError),
    #[error("numerical blow-up: non-finite state after step {step}")]
    NumericalBlowup { step: usize },
    #[error("refinement failed: {0}")]
    RefinementFailed(String),
    #[error("not an equilibrium: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotAnEquilibrium { residual: f64, tol: f64 },
    #[error("probe vector undefined: both cones are empty")]
    UndefinedProbe,
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}
