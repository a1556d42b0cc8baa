//! Grid verification of the three conditions over an `(α, μ)` rectangle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{evaluate_with_margins, CertificateError, CertificateEvaluation, CertificateParams, MarginTargets};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub mu_min: f64,
    pub mu_max: f64,
    pub epsilon: f64,
    pub delta: f64,
    pub alpha_steps: usize,
    pub mu_steps: usize,
    pub margins: MarginTargets,
}

impl Default for SweepConfig {
    /// The verified range `0 ≤ α ≤ 0.0537`, `0.788897 ≤ μ ≤ 0.794` with
    /// `ε = 0.5`, `δ = 0.88` on a 500×500 grid.
    fn default() -> Self {
        Self {
            alpha_min: 0.0,
            alpha_max: 0.0537,
            mu_min: 0.788897,
            mu_max: 0.794,
            epsilon: 0.5,
            delta: 0.88,
            alpha_steps: 500,
            mu_steps: 500,
            margins: MarginTargets::default(),
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CertificateError> {
        let bad = |name, reason: String| Err(CertificateError::InvalidParameter { name, reason });
        if self.alpha_steps < 2 || self.mu_steps < 2 {
            return bad("grid", format!("need at least 2 steps per axis, got {}×{}", self.alpha_steps, self.mu_steps));
        }
        if !(self.alpha_min <= self.alpha_max) || !(self.mu_min <= self.mu_max) {
            return bad("range", "empty α or μ range".into());
        }
        // Corner checks cover every grid point since the constraints are boxes.
        CertificateParams::new(self.mu_min, self.alpha_min, self.epsilon, self.delta)?;
        CertificateParams::new(self.mu_max, self.alpha_max, self.epsilon, self.delta)?;
        Ok(())
    }

    pub fn alpha_at(&self, i: usize) -> f64 {
        grid_value(self.alpha_min, self.alpha_max, i, self.alpha_steps)
    }

    pub fn mu_at(&self, j: usize) -> f64 {
        grid_value(self.mu_min, self.mu_max, j, self.mu_steps)
    }
}

pub(crate) fn grid_value(lo: f64, hi: f64, i: usize, steps: usize) -> f64 {
    if i + 1 == steps {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (steps - 1) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub alpha: f64,
    pub mu: f64,
    pub cond1: Option<f64>,
    pub cond2: Option<f64>,
    pub cond3_margin: Option<f64>,
    pub pass: bool,
    pub margins_met: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub value: f64,
    pub alpha: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub grid_shape: [usize; 2],
    pub points: usize,
    pub passed: usize,
    pub failed: usize,
    pub regime_violations: usize,
    /// Largest condition-1 value.
    pub worst_cond1: Option<Extremum>,
    /// Largest condition-2 value.
    pub worst_cond2: Option<Extremum>,
    /// Smallest condition-3 margin.
    pub worst_cond3_margin: Option<Extremum>,
    pub pass: bool,
    pub margins_met: bool,
    pub margin_violations: usize,
    /// First few points (grid order) where a margin target is missed.
    pub margin_violation_samples: Vec<GridPoint>,
    #[serde(skip)]
    pub grid: Vec<GridPoint>,
}

impl SweepReport {
    /// `alpha,mu,cond1,cond2,cond3_margin,pass` for every grid point.
    pub fn grid_csv(&self) -> String {
        let fmt = |v: Option<f64>| v.map(|x| format!("{x:.17e}")).unwrap_or_default();
        let mut out = String::from("alpha,mu,cond1,cond2,cond3_margin,pass\n");
        for p in &self.grid {
            out.push_str(&format!(
                "{:.17e},{:.17e},{},{},{},{}\n",
                p.alpha,
                p.mu,
                fmt(p.cond1),
                fmt(p.cond2),
                fmt(p.cond3_margin),
                p.pass
            ));
        }
        out
    }
}

const VIOLATION_SAMPLES: usize = 20;

fn grid_point(alpha: f64, mu: f64, eval: Option<&CertificateEvaluation>) -> GridPoint {
    match eval {
        Some(e) => GridPoint {
            alpha,
            mu,
            cond1: Some(e.cond1_value),
            cond2: e.cond2_value,
            cond3_margin: e.cond3_margin,
            pass: e.verdict.pass,
            margins_met: e.margins_met,
        },
        None => GridPoint {
            alpha,
            mu,
            cond1: None,
            cond2: None,
            cond3_margin: None,
            pass: false,
            margins_met: false,
        },
    }
}

fn track(slot: &mut Option<Extremum>, value: f64, alpha: f64, mu: f64, larger_is_worse: bool) {
    let worse = match slot {
        None => true,
        Some(e) if larger_is_worse => value > e.value,
        Some(e) => value < e.value,
    };
    if worse {
        *slot = Some(Extremum { value, alpha, mu });
    }
}

/// Evaluates the certificate on every grid point. Grid rows are computed in
/// parallel; the reduction runs in fixed grid order (μ-major), so reported
/// extremum locations are the first in that order.
pub fn sweep_certificate(config: &SweepConfig) -> Result<SweepReport, CertificateError> {
    config.validate()?;
    let rows: Vec<Vec<GridPoint>> = (0..config.mu_steps)
        .into_par_iter()
        .map(|j| {
            let mu = config.mu_at(j);
            (0..config.alpha_steps)
                .map(|i| {
                    let alpha = config.alpha_at(i);
                    let params = CertificateParams {
                        mu,
                        alpha,
                        epsilon: config.epsilon,
                        delta: config.delta,
                    };
                    let eval = evaluate_with_margins(&params, &config.margins).ok();
                    grid_point(alpha, mu, eval.as_ref())
                })
                .collect()
        })
        .collect();
    let grid: Vec<GridPoint> = rows.into_iter().flatten().collect();

    let mut report = SweepReport {
        config: *config,
        grid_shape: [config.alpha_steps, config.mu_steps],
        points: grid.len(),
        passed: 0,
        failed: 0,
        regime_violations: 0,
        worst_cond1: None,
        worst_cond2: None,
        worst_cond3_margin: None,
        pass: false,
        margins_met: false,
        margin_violations: 0,
        margin_violation_samples: Vec::new(),
        grid: Vec::new(),
    };
    for p in &grid {
        if p.pass {
            report.passed += 1;
        } else {
            report.failed += 1;
        }
        match p.cond1 {
            None => report.regime_violations += 1,
            Some(c1) => track(&mut report.worst_cond1, c1, p.alpha, p.mu, true),
        }
        if let Some(c2) = p.cond2 {
            track(&mut report.worst_cond2, c2, p.alpha, p.mu, true);
        }
        if let Some(c3) = p.cond3_margin {
            track(&mut report.worst_cond3_margin, c3, p.alpha, p.mu, false);
        }
        if !p.margins_met {
            report.margin_violations += 1;
            if report.margin_violation_samples.len() < VIOLATION_SAMPLES {
                report.margin_violation_samples.push(*p);
            }
        }
    }
    report.pass = report.failed == 0;
    report.margins_met = report.margin_violations == 0;
    report.grid = grid;
    Ok(report)
}
