//! Choice of the free coefficients `(ε, δ)`.
//!
//! The objective at `(ε, δ)` is the worst slack `min(½ − c₁, −c₂, c₃)` over
//! sampled `α ∈ [0, α_max]`. A coarse grid over `α_max < ε < δ < 1` picks a
//! start; a compass search then refines it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{evaluate_certificate, CertificateError, CertificateParams, STRICT_SLACK};

pub const REFERENCE_EPSILON: f64 = 0.5;
pub const REFERENCE_DELTA: f64 = 0.88;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizeOptions {
    /// α samples, endpoints included.
    pub alpha_samples: usize,
    pub epsilon_steps: usize,
    pub delta_steps: usize,
    /// Compass search stops once the step is below this.
    pub refine_tol: f64,
    /// Resolution of the smallest feasible μ.
    pub mu_tol: f64,
    /// Lower end of the μ search.
    pub mu_floor: f64,
    /// Distance (max-norm) counted as "near" a local optimum.
    pub near_tol: f64,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        Self {
            alpha_samples: 33,
            epsilon_steps: 40,
            delta_steps: 40,
            refine_tol: 1e-7,
            mu_tol: 1e-6,
            mu_floor: 0.75,
            near_tol: 1e-2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoredParams {
    pub epsilon: f64,
    pub delta: f64,
    /// Worst slack over the α samples; `−∞` where undefined.
    pub objective: f64,
    /// α attaining the worst slack.
    pub worst_alpha: f64,
}

impl ScoredParams {
    pub fn passes(&self) -> bool {
        self.objective > STRICT_SLACK
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizeReport {
    pub mu: f64,
    pub alpha_max: f64,
    pub options: OptimizeOptions,
    pub best: ScoredParams,
    pub reference: ScoredParams,
    /// Local optimum reached by compass search started at the reference.
    pub reference_local_optimum: ScoredParams,
    pub reference_distance: f64,
    pub reference_near_local_optimum: bool,
    /// Smallest μ at which some `(ε, δ)` passes, to `mu_tol`.
    pub min_feasible_mu: f64,
    pub min_feasible_params: ScoredParams,
    /// `max(alpha_branch_threshold(α_max), min_feasible_mu)`.
    pub combined_threshold: f64,
}

fn alpha_grid(alpha_max: f64, samples: usize) -> Vec<f64> {
    (0..samples)
        .map(|i| {
            if i + 1 == samples {
                alpha_max
            } else {
                alpha_max * i as f64 / (samples - 1) as f64
            }
        })
        .collect()
}

fn score(mu: f64, alphas: &[f64], epsilon: f64, delta: f64) -> ScoredParams {
    let mut out = ScoredParams {
        epsilon,
        delta,
        objective: f64::INFINITY,
        worst_alpha: f64::NAN,
    };
    for &alpha in alphas {
        let slack = CertificateParams::new(mu, alpha, epsilon, delta)
            .and_then(|p| evaluate_certificate(&p))
            .map_or(f64::NEG_INFINITY, |e| e.worst_slack());
        if slack < out.objective || out.worst_alpha.is_nan() {
            out.objective = slack;
            out.worst_alpha = alpha;
        }
        if slack == f64::NEG_INFINITY {
            break;
        }
    }
    out
}

fn admissible(alpha_max: f64, epsilon: f64, delta: f64) -> bool {
    alpha_max < epsilon && epsilon < delta && delta < 1.0
}

fn compass(mu: f64, alphas: &[f64], alpha_max: f64, start: ScoredParams, step0: f64, tol: f64) -> ScoredParams {
    let mut cur = start;
    let mut step = step0;
    while step >= tol {
        let mut moved = false;
        for (de, dd) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step), (step, step), (-step, -step)] {
            let (e, d) = (cur.epsilon + de, cur.delta + dd);
            if !admissible(alpha_max, e, d) {
                continue;
            }
            let cand = score(mu, alphas, e, d);
            if cand.objective > cur.objective {
                cur = cand;
                moved = true;
                break;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    cur
}

/// Best `(ε, δ)` at one μ: coarse grid, then compass refinement.
pub fn best_parameters(mu: f64, alpha_max: f64, opts: &OptimizeOptions) -> ScoredParams {
    let alphas = alpha_grid(alpha_max, opts.alpha_samples);
    let span = 1.0 - alpha_max;
    let at = |k: usize, steps: usize| alpha_max + span * (k as f64 + 0.5) / steps as f64;
    let candidates: Vec<(f64, f64)> = (0..opts.epsilon_steps)
        .flat_map(|i| (0..opts.delta_steps).map(move |j| (i, j)))
        .map(|(i, j)| (at(i, opts.epsilon_steps), at(j, opts.delta_steps)))
        .filter(|&(e, d)| admissible(alpha_max, e, d))
        .collect();
    let scored: Vec<ScoredParams> = candidates
        .par_iter()
        .map(|&(e, d)| score(mu, &alphas, e, d))
        .collect();
    let mut best = score(mu, &alphas, REFERENCE_EPSILON.max(alpha_max + 1e-6), REFERENCE_DELTA);
    for s in scored {
        if s.objective > best.objective {
            best = s;
        }
    }
    let step = span / opts.epsilon_steps.max(opts.delta_steps) as f64;
    if best.objective.is_finite() {
        best = compass(mu, &alphas, alpha_max, best, step, opts.refine_tol);
    }
    best
}

/// Optimizes `(ε, δ)` at `mu`, compares with the reference choice and
/// locates the smallest μ for which the certificate can pass.
pub fn optimize_parameters(mu: f64, alpha_max: f64, opts: &OptimizeOptions) -> Result<OptimizeReport, CertificateError> {
    if !(alpha_max > 0.0 && alpha_max < 2.0) {
        return Err(CertificateError::InvalidParameter {
            name: "alpha_max",
            reason: format!("must lie in (0, 2), got {alpha_max}"),
        });
    }
    if !(mu > 0.0 && mu <= 1.0) {
        return Err(CertificateError::InvalidParameter {
            name: "mu",
            reason: format!("must lie in (0, 1], got {mu}"),
        });
    }
    if opts.alpha_samples < 2 || opts.epsilon_steps == 0 || opts.delta_steps == 0 {
        return Err(CertificateError::InvalidParameter {
            name: "grid",
            reason: "need at least 2 α samples and one (ε, δ) step".into(),
        });
    }
    if !(opts.refine_tol > 0.0 && opts.mu_tol > 0.0) {
        return Err(CertificateError::InvalidParameter {
            name: "tolerance",
            reason: "refinement tolerances must be positive".into(),
        });
    }

    let best = best_parameters(mu, alpha_max, opts);
    if !best.passes() {
        return Err(CertificateError::Infeasible(format!(
            "no (ε, δ) with α_max < ε < δ < 1 passes at μ = {mu}, α_max = {alpha_max}; best worst slack {:e}",
            best.objective
        )));
    }

    let alphas = alpha_grid(alpha_max, opts.alpha_samples);
    let reference = if admissible(alpha_max, REFERENCE_EPSILON, REFERENCE_DELTA) {
        score(mu, &alphas, REFERENCE_EPSILON, REFERENCE_DELTA)
    } else {
        ScoredParams {
            epsilon: REFERENCE_EPSILON,
            delta: REFERENCE_DELTA,
            objective: f64::NEG_INFINITY,
            worst_alpha: f64::NAN,
        }
    };
    let local = if reference.objective.is_finite() {
        compass(mu, &alphas, alpha_max, reference, 1e-2, opts.refine_tol)
    } else {
        reference
    };
    let distance = (local.epsilon - reference.epsilon)
        .abs()
        .max((local.delta - reference.delta).abs());

    let (mut lo, mut hi) = (opts.mu_floor.min(mu), mu);
    let mut at_hi = best;
    while hi - lo > opts.mu_tol {
        let mid = 0.5 * (lo + hi);
        let b = best_parameters(mid, alpha_max, opts);
        if b.passes() {
            hi = mid;
            at_hi = b;
        } else {
            lo = mid;
        }
    }
    let branch = super::alpha_branch_threshold(alpha_max)?;

    Ok(OptimizeReport {
        mu,
        alpha_max,
        options: *opts,
        best,
        reference,
        reference_local_optimum: local,
        reference_distance: distance,
        reference_near_local_optimum: reference.objective.is_finite() && distance <= opts.near_tol,
        min_feasible_mu: hi,
        min_feasible_params: at_hi,
        combined_threshold: branch.max(hi),
    })
}
