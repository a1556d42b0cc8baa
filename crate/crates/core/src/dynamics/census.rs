//! Multistart census of the equilibria reached by the gradient flow.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classify::report_unchecked;
use super::{
    classify, integrate, refine_equilibrium, Classification, ClassifyOptions, DynamicsError, EquilibriumReport,
    IntegrateOptions, RefineOptions,
};
use crate::graph::Graph;
use crate::landscape::{wrap_difference, PhaseState};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CensusOptions {
    pub trials: usize,
    pub seed: u64,
    /// Integration stops at a loose residual; Newton takes over from there.
    pub integrate: IntegrateOptions,
    pub refine: RefineOptions,
    pub classify: ClassifyOptions,
    /// How many times a trial that lands on a saddle is kicked along the
    /// unstable eigenvector and re-integrated.
    pub max_escapes: usize,
    pub escape_kick: f64,
    /// Rotation-aligned max-norm distance below which two states coincide.
    pub dedup_tol: f64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            trials: 100,
            seed: 0,
            integrate: IntegrateOptions {
                residual_tol: 1e-3,
                t_max: 500.0,
                ..IntegrateOptions::default()
            },
            refine: RefineOptions::default(),
            classify: ClassifyOptions::default(),
            max_escapes: 5,
            escape_kick: 0.05,
            dedup_tol: 1e-4,
        }
    }
}

/// One equivalence class of equilibria together with how many trials hit it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub report: EquilibriumReport,
    pub hits: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Census {
    pub trials: usize,
    /// Sorted by decreasing energy, then by the pinned state.
    pub classes: Vec<CensusEntry>,
}

impl Census {
    pub fn count(&self, class: Classification) -> usize {
        self.classes.iter().filter(|e| e.report.classification == class).count()
    }

    pub fn only(&self, class: Classification) -> bool {
        self.classes.iter().all(|e| e.report.classification == class)
    }
}

/// `min over rotations c of max_i |θ_i + c − φ_i|`, approximated by aligning
/// the first coordinates (the pinned gauge).
pub fn rotation_aligned_distance(a: &PhaseState, b: &PhaseState) -> f64 {
    let (a, b) = (a.pinned(), b.pinned());
    a.angles()
        .iter()
        .zip(b.angles())
        .fold(0.0, |m: f64, (x, y)| m.max(wrap_difference(*x, *y).abs()))
}

fn run_trial(g: &Graph, opts: &CensusOptions, trial: usize) -> Result<EquilibriumReport, DynamicsError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(trial as u64);
    let mut state = PhaseState::random(g.n(), &mut rng);
    let mut integ = opts.integrate;
    for attempt in 0..=opts.max_escapes {
        let traj = match integrate(g, &state, &integ) {
            Ok(t) => t,
            Err(DynamicsError::NumericalBlowup { .. }) => return report_unchecked(g, &state, &opts.classify, true),
            Err(e) => return Err(e),
        };
        let refined = match refine_equilibrium(g, &traj.state, &opts.refine) {
            Ok(r) => r.state,
            Err(DynamicsError::RefinementFailed(_)) if attempt < opts.max_escapes => {
                // Keep flowing with a tighter stopping rule.
                state = traj.state;
                integ.residual_tol *= 1e-2;
                continue;
            }
            Err(DynamicsError::RefinementFailed(_)) => {
                return report_unchecked(g, &traj.state, &opts.classify, true);
            }
            Err(e) => return Err(e),
        };
        let report = match classify(g, &refined, &opts.classify) {
            Ok(r) => r,
            Err(DynamicsError::NotAnEquilibrium { .. }) => return report_unchecked(g, &refined, &opts.classify, true),
            Err(e) => return Err(e),
        };
        match (&report.classification, &report.unstable_direction) {
            (Classification::SaddleOrUnstable, Some(dir)) if attempt < opts.max_escapes => {
                let scale = dir.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                let kick = sign * opts.escape_kick / scale;
                state = PhaseState::new(refined.angles().iter().zip(dir).map(|(t, d)| t + kick * d).collect())?;
                integ = opts.integrate;
            }
            _ => return Ok(report),
        }
    }
    unreachable!("the final attempt always returns")
}

/// Integrates `trials` uniform random initial states, refines and classifies
/// each endpoint, and merges the results into rotation classes.
///
/// Trials are independent and run in parallel; trial `k` draws from stream
/// `k` of a ChaCha8 generator keyed by `seed`, so the output depends only on
/// `(g, opts)`.
pub fn multistart_search(g: &Graph, opts: &CensusOptions) -> Result<Census, DynamicsError> {
    if opts.trials == 0 {
        return Err(DynamicsError::InvalidParameter {
            name: "trials",
            reason: "need at least one trial".into(),
        });
    }
    let reports: Vec<EquilibriumReport> = (0..opts.trials)
        .into_par_iter()
        .map(|k| run_trial(g, opts, k))
        .collect::<Result<_, _>>()?;

    let mut classes: Vec<CensusEntry> = Vec::new();
    for report in reports {
        let existing = classes.iter_mut().find(|e| {
            e.report.classification == report.classification
                && rotation_aligned_distance(&e.report.state, &report.state) < opts.dedup_tol
        });
        match existing {
            Some(entry) => entry.hits += 1,
            None => classes.push(CensusEntry { report, hits: 1 }),
        }
    }
    for entry in &mut classes {
        entry.report.state = entry.report.state.pinned();
    }
    classes.sort_by(|a, b| {
        b.report.energy.total_cmp(&a.report.energy).then_with(|| {
            let (x, y) = (a.report.state.angles(), b.report.state.angles());
            x.iter()
                .zip(y)
                .map(|(p, q)| p.total_cmp(q))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    Ok(Census {
        trials: opts.trials,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn complete_graph_has_single_class() {
        let g = complete_graph(8).unwrap();
        let census = multistart_search(
            &g,
            &CensusOptions {
                trials: 20,
                seed: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(census.classes.len(), 1);
        assert_eq!(census.classes[0].report.classification, Classification::GlobalMax);
        assert_eq!(census.classes[0].hits, 20);
        assert_eq!(census.classes[0].report.state.angles()[0], 0.0);
    }

    #[test]
    fn deterministic_given_seed() {
        let g = crate::graph::circulant_graph(30, 8).unwrap();
        let opts = CensusOptions {
            trials: 12,
            seed: 11,
            ..Default::default()
        };
        assert_eq!(multistart_search(&g, &opts).unwrap(), multistart_search(&g, &opts).unwrap());
    }

    #[test]
    fn zero_trials_rejected() {
        let g = complete_graph(3).unwrap();
        let opts = CensusOptions {
            trials: 0,
            ..Default::default()
        };
        assert!(multistart_search(&g, &opts).is_err());
    }

    #[test]
    fn alignment_distance_ignores_rotation() {
        let s = PhaseState::twisted(10, 2);
        assert!(rotation_aligned_distance(&s, &s.rotated(2.5)) < 1e-12);
        assert!(rotation_aligned_distance(&s, &PhaseState::twisted(10, 1)) > 0.1);
    }
}
