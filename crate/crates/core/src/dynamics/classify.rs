use std::f64::consts::FRAC_PI_6;

use nalgebra::SymmetricEigen;
use serde::{Deserialize, Serialize};

use super::DynamicsError;
use crate::graph::Graph;
use crate::landscape::{
    cone_decomposition, energy, gradient_residual, hessian_matrix, order_parameter, ConeDecomposition, PhaseState,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// The synchronized state.
    GlobalMax,
    SpuriousLocalMax,
    SaddleOrUnstable,
    /// Degenerate spectrum or failed refinement.
    Inconclusive,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::GlobalMax => "global-max",
            Self::SpuriousLocalMax => "spurious-local-max",
            Self::SaddleOrUnstable => "saddle-or-unstable",
            Self::Inconclusive => "inconclusive",
        }
    }

    pub fn is_local_max(self) -> bool {
        matches!(self, Self::GlobalMax | Self::SpuriousLocalMax)
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Eigenvalues within `±zero_tol` count as symmetry modes. `None` uses
    /// `1e−7·max(max|λ|, 1)`.
    pub zero_tol: Option<f64>,
    /// Largest residual accepted as an equilibrium.
    pub equilibrium_tol: f64,
    /// Angular spread below which a local max counts as synchronized.
    pub sync_spread: f64,
    /// Half-angle of the reported cone decomposition.
    pub cone_phi: Option<f64>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            zero_tol: None,
            equilibrium_tol: 1e-8,
            sync_spread: 1e-6,
            cone_phi: Some(FRAC_PI_6),
        }
    }
}

pub fn default_zero_tol(eigenvalues: &[f64]) -> f64 {
    let scale = eigenvalues.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    1e-7 * scale
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub state: PhaseState,
    pub gradient_residual: f64,
    pub energy: f64,
    /// Ascending.
    pub hessian_eigenvalues: Vec<f64>,
    pub zero_tol: f64,
    pub near_zero_eigenvalues: usize,
    pub classification: Classification,
    /// `‖r‖ / n`.
    pub order_magnitude: f64,
    pub cone: Option<ConeDecomposition>,
    /// Eigenvector of the largest eigenvalue when that eigenvalue is positive.
    #[serde(skip)]
    pub unstable_direction: Option<Vec<f64>>,
}

impl EquilibriumReport {
    /// Largest eigenvalue outside the symmetry band, if any.
    pub fn top_nonzero_eigenvalue(&self) -> Option<f64> {
        self.hessian_eigenvalues
            .iter()
            .rev()
            .copied()
            .find(|v| v.abs() > self.zero_tol)
    }
}

fn decide(eigenvalues: &[f64], zero_tol: f64, spread: f64, sync_spread: f64) -> (usize, Classification) {
    let near_zero = eigenvalues.iter().filter(|v| v.abs() <= zero_tol).count();
    let positive = eigenvalues.iter().any(|&v| v > zero_tol);
    let class = if positive {
        Classification::SaddleOrUnstable
    } else if near_zero > 1 {
        Classification::Inconclusive
    } else if spread < sync_spread {
        Classification::GlobalMax
    } else {
        Classification::SpuriousLocalMax
    };
    (near_zero, class)
}

/// Builds the report for `s` without checking the residual; used for
/// inconclusive census entries.
pub(crate) fn report_unchecked(
    g: &Graph,
    s: &PhaseState,
    opts: &ClassifyOptions,
    force_inconclusive: bool,
) -> Result<EquilibriumReport, DynamicsError> {
    let residual = gradient_residual(g, s)?;
    let eig = SymmetricEigen::new(hessian_matrix(g, s)?);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let zero_tol = opts.zero_tol.unwrap_or_else(|| default_zero_tol(&eigenvalues));
    let (near_zero, mut classification) = decide(&eigenvalues, zero_tol, s.angular_spread(), opts.sync_spread);
    if force_inconclusive {
        classification = Classification::Inconclusive;
    }
    let top = *order.last().expect("n ≥ 2");
    let unstable_direction =
        (eig.eigenvalues[top] > zero_tol).then(|| eig.eigenvectors.column(top).iter().copied().collect());
    let r = order_parameter(s);
    let cone = match (opts.cone_phi, r.phase) {
        (Some(phi), Some(_)) => Some(cone_decomposition(s, phi, None)?),
        _ => None,
    };
    Ok(EquilibriumReport {
        state: s.clone(),
        gradient_residual: residual,
        energy: energy(g, s)?,
        hessian_eigenvalues: eigenvalues,
        zero_tol,
        near_zero_eigenvalues: near_zero,
        classification,
        order_magnitude: r.normalized(s.len()),
        cone,
        unstable_direction,
    })
}

/// Classifies an equilibrium by the spectrum of the Hessian of `f`.
///
/// Exactly one near-zero eigenvalue (the rotation mode) and all others
/// negative makes a strict local max, which is global when the state is
/// synchronized. Any positive eigenvalue makes a saddle; extra near-zero
/// eigenvalues make the point degenerate and the verdict inconclusive.
pub fn classify(g: &Graph, s: &PhaseState, opts: &ClassifyOptions) -> Result<EquilibriumReport, DynamicsError> {
    let residual = gradient_residual(g, s)?;
    if !(residual < opts.equilibrium_tol) {
        return Err(DynamicsError::NotAnEquilibrium {
            residual,
            tol: opts.equilibrium_tol,
        });
    }
    report_unchecked(g, s, opts, false)
}
