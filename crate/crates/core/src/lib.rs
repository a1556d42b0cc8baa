//! Synchronization landscape of homogeneous Kuramoto oscillators on dense
//! graphs.
//!
//! * [`graph`]: dense simple graphs, generators and the edge-list format.
//! * [`landscape`]: energy, gradient, Hessian, order parameter and the
//!   per-state diagnostics (`α`, ε-good vertices, cone decomposition).
//! * [`dynamics`]: RK4 gradient flow, Newton refinement, equilibrium
//!   classification and multistart censuses.
//! * [`certificate`]: the closed-form bounds behind the `μ ≥ 0.7889`
//!   threshold, grid sweeps (floating and interval-verified) and parameter
//!   optimisation.
//! * [`cli`]: the `kuramoto` command-line driver.

pub mod certificate;
pub mod cli;
pub mod dynamics;
pub mod graph;
pub mod landscape;
