//! The energy `f(θ) = Σ_{i,j} a_ij cos(θ_i − θ_j)` and its derivatives.
//!
//! Sums run over ordered pairs, so every undirected edge contributes twice.

use nalgebra::DMatrix;

use super::{check_dims, LandscapeError, PhaseState};
use crate::graph::Graph;

pub fn energy(g: &Graph, s: &PhaseState) -> Result<f64, LandscapeError> {
    check_dims(g, s)?;
    let t = s.angles();
    let total: f64 = g.edges().map(|(i, j)| (t[i] - t[j]).cos()).sum();
    Ok(2.0 * total)
}

/// Right-hand side of the gradient flow `dθ_i/dt = −Σ_j a_ij sin(θ_i − θ_j)`,
/// which equals `½ ∂f/∂θ_i`.
pub fn gradient_flow_rhs(g: &Graph, s: &PhaseState) -> Result<Vec<f64>, LandscapeError> {
    check_dims(g, s)?;
    let t = s.angles();
    let mut rhs = vec![0.0; g.n()];
    for (i, j) in g.edges() {
        let sn = (t[i] - t[j]).sin();
        rhs[i] -= sn;
        rhs[j] += sn;
    }
    Ok(rhs)
}

/// `max_i |dθ_i/dt|`.
pub fn gradient_residual(g: &Graph, s: &PhaseState) -> Result<f64, LandscapeError> {
    Ok(gradient_flow_rhs(g, s)?.iter().fold(0.0, |m, v| m.max(v.abs())))
}

/// `Q(w) = Σ_{i,j} a_ij cos(θ_i − θ_j)(w_i − w_j)²`, which equals `−wᵀHw`.
/// Non-negative for every `w` at a local maximum of `f`.
pub fn hessian_quadratic_form(g: &Graph, s: &PhaseState, w: &[f64]) -> Result<f64, LandscapeError> {
    check_dims(g, s)?;
    if w.len() != g.n() {
        return Err(LandscapeError::DimensionMismatch {
            expected: g.n(),
            found: w.len(),
        });
    }
    let t = s.angles();
    let total: f64 = g
        .edges()
        .map(|(i, j)| {
            let dw = w[i] - w[j];
            (t[i] - t[j]).cos() * dw * dw
        })
        .sum();
    Ok(2.0 * total)
}

/// Hessian of `f`: `H_ij = 2 a_ij cos(θ_i − θ_j)` off the diagonal and
/// `H_ii = −Σ_{j≠i} H_ij`, so every row sums to zero.
pub fn hessian_matrix(g: &Graph, s: &PhaseState) -> Result<DMatrix<f64>, LandscapeError> {
    check_dims(g, s)?;
    let n = g.n();
    let t = s.angles();
    let mut h = DMatrix::zeros(n, n);
    for (i, j) in g.edges() {
        let c = 2.0 * (t[i] - t[j]).cos();
        h[(i, j)] = c;
        h[(j, i)] = c;
        h[(i, i)] -= c;
        h[(j, j)] -= c;
    }
    Ok(h)
}
