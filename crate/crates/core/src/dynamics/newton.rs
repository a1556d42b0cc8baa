//! Damped Newton polish of near-equilibria.
//!
//! The rotation gauge is fixed by pinning `θ_0`: the unknowns are
//! `θ_1, …, θ_{n−1}` and the equations are components `1..n` of the flow
//! field (component 0 follows because the components sum to zero).

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::DynamicsError;
use crate::graph::Graph;
use crate::landscape::{gradient_flow_rhs, hessian_matrix, PhaseState};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefineOptions {
    /// Target max-norm residual.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RefineOptions {
    fn default() -> Self {
        Self { tol: 1e-12, max_iter: 50 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Refinement {
    pub state: PhaseState,
    pub residual: f64,
    pub iterations: usize,
}

fn norms(v: &[f64]) -> (f64, f64) {
    let max = v.iter().fold(0.0, |m: f64, x| m.max(x.abs()));
    let l2 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (max, l2)
}

/// Basin precondition for [`refine_equilibrium`]: residual below `1e−2·n`.
pub fn newton_basin_radius(n: usize) -> f64 {
    1e-2 * n as f64
}

pub fn refine_equilibrium(g: &Graph, s: &PhaseState, opts: &RefineOptions) -> Result<Refinement, DynamicsError> {
    let n = g.n();
    let mut theta = s.angles().to_vec();
    let mut rhs = gradient_flow_rhs(g, s)?;
    let (mut res_max, mut res_l2) = norms(&rhs);
    if res_max >= newton_basin_radius(n) {
        return Err(DynamicsError::RefinementFailed(format!(
            "starting residual {res_max:.3e} is outside the Newton basin ({:.3e})",
            newton_basin_radius(n)
        )));
    }
    let mut iterations = 0;
    while res_max >= opts.tol {
        if iterations == opts.max_iter {
            return Err(DynamicsError::RefinementFailed(format!(
                "no convergence after {iterations} iterations (residual {res_max:.3e})"
            )));
        }
        iterations += 1;
        let current = PhaseState::new(theta.clone())?;
        // Jacobian of the flow field is H/2.
        let hess = hessian_matrix(g, &current)?;
        let jac = DMatrix::from_fn(n - 1, n - 1, |i, j| 0.5 * hess[(i + 1, j + 1)]);
        let b = DVector::from_iterator(n - 1, rhs[1..].iter().map(|v| -v));
        let step = jac
            .lu()
            .solve(&b)
            .ok_or_else(|| DynamicsError::RefinementFailed("reduced Hessian is singular".into()))?;
        if step.iter().any(|x| !x.is_finite()) {
            return Err(DynamicsError::RefinementFailed("non-finite Newton step".into()));
        }

        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let mut trial = theta.clone();
            for (t, d) in trial[1..].iter_mut().zip(step.iter()) {
                *t += lambda * d;
            }
            let trial_state = PhaseState::new(trial)?;
            let trial_rhs = gradient_flow_rhs(g, &trial_state)?;
            let (m, l2) = norms(&trial_rhs);
            if l2 < res_l2 || m < opts.tol {
                theta = trial_state.angles().to_vec();
                rhs = trial_rhs;
                res_max = m;
                res_l2 = l2;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return Err(DynamicsError::RefinementFailed(format!(
                "line search stalled at residual {res_max:.3e}"
            )));
        }
    }
    Ok(Refinement {
        state: PhaseState::new(theta)?,
        residual: res_max,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{circulant_graph, complete_graph};
    use crate::landscape::{gradient_residual, wrap_difference};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn perturbed(s: &PhaseState, amp: f64, seed: u64) -> PhaseState {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        PhaseState::new(s.angles().iter().map(|t| t + amp * rng.random_range(-1.0..1.0)).collect()).unwrap()
    }

    #[test]
    fn constant_state_is_untouched() {
        let g = complete_graph(6).unwrap();
        let s = PhaseState::constant(6, 1.0);
        let r = refine_equilibrium(&g, &s, &RefineOptions::default()).unwrap();
        assert_eq!(r.state, s);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn sync_converges_quadratically() {
        let g = complete_graph(10).unwrap();
        let s = perturbed(&PhaseState::constant(10, 0.5), 1e-4, 1);
        let r = refine_equilibrium(&g, &s, &RefineOptions::default()).unwrap();
        assert!(r.residual < 1e-12);
        assert!(r.iterations <= 5, "took {} iterations", r.iterations);
        assert!(r.state.angular_spread() < 1e-10);
    }

    #[test]
    fn twisted_state_is_recovered() {
        let g = circulant_graph(60, 6).unwrap();
        let twisted = PhaseState::twisted(60, 1);
        let s = perturbed(&twisted, 1e-5, 2);
        let r = refine_equilibrium(&g, &s, &RefineOptions::default()).unwrap();
        assert!(r.residual < 1e-12);
        assert!(gradient_residual(&g, &r.state).unwrap() < 1e-12);
        // Same state up to the global rotation.
        let a = r.state.pinned();
        let b = twisted.pinned();
        let dist = a
            .angles()
            .iter()
            .zip(b.angles())
            .fold(0.0f64, |m, (x, y)| m.max(wrap_difference(*x, *y).abs()));
        assert!(dist < 1e-4);
    }

    #[test]
    fn far_states_are_refused() {
        let g = complete_graph(4).unwrap();
        let s = PhaseState::new(vec![0.0, 0.3, 0.6, 2.0]).unwrap();
        assert!(matches!(
            refine_equilibrium(&g, &s, &RefineOptions::default()),
            Err(DynamicsError::RefinementFailed(_))
        ));
    }
}
