//! Rigorous verification of the three conditions over whole parameter boxes.
//!
//! The `(α, μ)` rectangle is tiled into cells; each cell is evaluated in
//! interval arithmetic and bisected until every sub-box is decided. A PASS
//! therefore covers the continuum of parameters, not just grid points. The
//! inputs (range endpoints, `ε`, `δ`) are taken as the exact binary values of
//! their `f64` representations.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::interval::Interval;
use super::sweep::grid_value;
use super::{CertificateError, CertificateParams, MarginTargets, SweepConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HardenedConfig {
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub mu_min: f64,
    pub mu_max: f64,
    pub epsilon: f64,
    pub delta: f64,
    pub alpha_cells: usize,
    pub mu_cells: usize,
    /// Bisection depth per cell before a box is declared inconclusive.
    pub max_depth: usize,
    /// When set, the stronger margin targets must also be proved.
    pub margins: Option<MarginTargets>,
}

impl HardenedConfig {
    pub fn from_sweep(sweep: &SweepConfig, alpha_cells: usize, mu_cells: usize) -> Self {
        Self {
            alpha_min: sweep.alpha_min,
            alpha_max: sweep.alpha_max,
            mu_min: sweep.mu_min,
            mu_max: sweep.mu_max,
            epsilon: sweep.epsilon,
            delta: sweep.delta,
            alpha_cells,
            mu_cells,
            max_depth: 16,
            margins: Some(sweep.margins),
        }
    }
}

impl Default for HardenedConfig {
    fn default() -> Self {
        Self::from_sweep(&SweepConfig::default(), 50, 50)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxVerdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Interval enclosures of the condition values over one box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxEnclosure {
    pub cond1: Interval,
    pub cond2: Option<Interval>,
    pub cond3_margin: Option<Interval>,
}

/// Encloses the three condition values for all `(α, μ)` in the box.
/// Returns `None` when the box touches the region `½ − (2−α)(1−μ) ≤ 0`.
pub fn enclose(alpha: Interval, mu: Interval, epsilon: f64, delta: f64) -> Option<BoxEnclosure> {
    let one = Interval::point(1.0);
    let two = Interval::point(2.0);
    let half = Interval::point(0.5);
    let eps = Interval::point(epsilon);
    let del = Interval::point(delta);

    let co_mu = one - mu;
    let floor = half - (two - alpha) * co_mu;
    if floor.lo() <= 0.0 {
        return None;
    }
    let inner = (Interval::point(9.0) - Interval::point(4.0) * del).sqrt()? - Interval::point(3.0) + two * del;
    let s = (inner * half).sqrt()?;
    let ratio = eps.checked_div(del)?;
    let good_sine = s + ratio * (one - s);
    let sin2 = (good_sine.sqr() * co_mu.sqr()).checked_div(floor)?;
    if sin2.hi() > 1.0 {
        return Some(BoxEnclosure {
            cond1: sin2,
            cond2: None,
            cond3_margin: None,
        });
    }
    let cos2 = two * sin2 - one;
    let outlier = alpha.checked_div(eps - alpha)?;
    let cond2 = cos2 + outlier;
    let cos_phi = (one - sin2).sqrt()?;
    let root = floor.sqrt()?;
    let lhs = one - alpha.checked_div(eps)? - (one - root).checked_div(one + cos_phi)?;
    let margin = (co_mu * cos2).checked_div(cond2).map(|rhs| lhs - rhs);
    Some(BoxEnclosure {
        cond1: sin2,
        cond2: Some(cond2),
        cond3_margin: margin,
    })
}

fn judge(e: &BoxEnclosure, targets: Option<&MarginTargets>) -> BoxVerdict {
    let (c1_max, c2_max, c3_min) = match targets {
        Some(t) => (t.cond1_max, t.cond2_max, t.cond3_min),
        None => (0.5, 0.0, 0.0),
    };
    if e.cond1.lo() >= c1_max
        || e.cond2.is_some_and(|c| c.lo() >= c2_max)
        || e.cond3_margin.is_some_and(|m| m.hi() <= c3_min)
    {
        return BoxVerdict::Fail;
    }
    match (e.cond2, e.cond3_margin) {
        (Some(c2), Some(m)) if e.cond1.hi() < c1_max && c2.hi() < c2_max && m.lo() > c3_min => BoxVerdict::Pass,
        _ => BoxVerdict::Inconclusive,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub alpha: [f64; 2],
    pub mu: [f64; 2],
    pub verdict: BoxVerdict,
    pub boxes: usize,
    pub depth: usize,
    /// Rigorous bounds over the cell, valid when the verdict is PASS.
    pub cond1_sup: f64,
    pub cond2_sup: f64,
    pub cond3_margin_inf: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HardenedReport {
    pub config: HardenedConfig,
    pub cells: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub boxes_evaluated: usize,
    pub max_depth_used: usize,
    pub cond1_sup: f64,
    pub cond2_sup: f64,
    pub cond3_margin_inf: f64,
    /// Every cell proved.
    pub pass: bool,
    /// Cells that did not pass, in grid order.
    pub unresolved: Vec<CellReport>,
}

fn verify_cell(cfg: &HardenedConfig, alpha: Interval, mu: Interval) -> CellReport {
    let mut report = CellReport {
        alpha: [alpha.lo(), alpha.hi()],
        mu: [mu.lo(), mu.hi()],
        verdict: BoxVerdict::Pass,
        boxes: 0,
        depth: 0,
        cond1_sup: f64::NEG_INFINITY,
        cond2_sup: f64::NEG_INFINITY,
        cond3_margin_inf: f64::INFINITY,
    };
    let mut stack = vec![(alpha, mu, 0usize)];
    while let Some((a, m, depth)) = stack.pop() {
        report.boxes += 1;
        report.depth = report.depth.max(depth);
        let verdict = match enclose(a, m, cfg.epsilon, cfg.delta) {
            Some(e) => {
                let v = judge(&e, cfg.margins.as_ref());
                if v == BoxVerdict::Pass {
                    report.cond1_sup = report.cond1_sup.max(e.cond1.hi());
                    report.cond2_sup = report.cond2_sup.max(e.cond2.map_or(f64::INFINITY, |c| c.hi()));
                    report.cond3_margin_inf = report
                        .cond3_margin_inf
                        .min(e.cond3_margin.map_or(f64::NEG_INFINITY, |c| c.lo()));
                }
                v
            }
            None => BoxVerdict::Inconclusive,
        };
        match verdict {
            BoxVerdict::Pass => {}
            BoxVerdict::Fail => {
                report.verdict = BoxVerdict::Fail;
                return report;
            }
            BoxVerdict::Inconclusive if depth >= cfg.max_depth => {
                report.verdict = BoxVerdict::Inconclusive;
                return report;
            }
            BoxVerdict::Inconclusive => {
                let (a0, a1) = a.bisect();
                let (m0, m1) = m.bisect();
                for (sa, sm) in [(a1, m1), (a0, m1), (a1, m0), (a0, m0)] {
                    stack.push((sa, sm, depth + 1));
                }
            }
        }
    }
    report
}

/// Proves (or fails to prove) the conditions on every cell of the grid.
pub fn verify_hardened(cfg: &HardenedConfig) -> Result<HardenedReport, CertificateError> {
    if cfg.alpha_cells == 0 || cfg.mu_cells == 0 {
        return Err(CertificateError::InvalidParameter {
            name: "cells",
            reason: "need at least one cell per axis".into(),
        });
    }
    if !(cfg.alpha_min <= cfg.alpha_max && cfg.mu_min <= cfg.mu_max) {
        return Err(CertificateError::InvalidParameter {
            name: "range",
            reason: "empty α or μ range".into(),
        });
    }
    CertificateParams::new(cfg.mu_min, cfg.alpha_min, cfg.epsilon, cfg.delta)?;
    CertificateParams::new(cfg.mu_max, cfg.alpha_max, cfg.epsilon, cfg.delta)?;

    let edge = |lo, hi, i, cells: usize| grid_value(lo, hi, i, cells + 1);
    let cells: Vec<CellReport> = (0..cfg.mu_cells)
        .into_par_iter()
        .flat_map_iter(|j| {
            let mu = Interval::new(
                edge(cfg.mu_min, cfg.mu_max, j, cfg.mu_cells),
                edge(cfg.mu_min, cfg.mu_max, j + 1, cfg.mu_cells),
            );
            (0..cfg.alpha_cells).map(move |i| {
                let alpha = Interval::new(
                    edge(cfg.alpha_min, cfg.alpha_max, i, cfg.alpha_cells),
                    edge(cfg.alpha_min, cfg.alpha_max, i + 1, cfg.alpha_cells),
                );
                verify_cell(cfg, alpha, mu)
            })
        })
        .collect();

    let mut report = HardenedReport {
        config: *cfg,
        cells: cells.len(),
        passed: 0,
        failed: 0,
        inconclusive: 0,
        boxes_evaluated: 0,
        max_depth_used: 0,
        cond1_sup: f64::NEG_INFINITY,
        cond2_sup: f64::NEG_INFINITY,
        cond3_margin_inf: f64::INFINITY,
        pass: false,
        unresolved: Vec::new(),
    };
    for c in cells {
        report.boxes_evaluated += c.boxes;
        report.max_depth_used = report.max_depth_used.max(c.depth);
        match c.verdict {
            BoxVerdict::Pass => {
                report.passed += 1;
                report.cond1_sup = report.cond1_sup.max(c.cond1_sup);
                report.cond2_sup = report.cond2_sup.max(c.cond2_sup);
                report.cond3_margin_inf = report.cond3_margin_inf.min(c.cond3_margin_inf);
            }
            BoxVerdict::Fail => report.failed += 1,
            BoxVerdict::Inconclusive => report.inconclusive += 1,
        }
        if c.verdict != BoxVerdict::Pass {
            report.unresolved.push(c);
        }
    }
    report.pass = report.passed == report.cells;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{evaluate_certificate, CertificateParams};

    #[test]
    fn point_box_encloses_float_evaluation() {
        for (mu, alpha) in [(0.7889, 0.0537), (0.79, 0.01), (0.794, 0.0)] {
            let e = evaluate_certificate(&CertificateParams::new(mu, alpha, 0.5, 0.88).unwrap()).unwrap();
            let b = enclose(Interval::point(alpha), Interval::point(mu), 0.5, 0.88).unwrap();
            assert!(b.cond1.contains(e.cond1_value));
            assert!(b.cond2.unwrap().contains(e.cond2_value.unwrap()));
            assert!(b.cond3_margin.unwrap().contains(e.cond3_margin.unwrap()));
            assert!(b.cond3_margin.unwrap().width() < 1e-12);
        }
    }

    #[test]
    fn regime_boundary_is_never_passed() {
        assert!(enclose(Interval::point(0.0), Interval::new(0.74, 0.76), 0.5, 0.88).is_none());
    }

    #[test]
    fn small_grid_passes() {
        let cfg = HardenedConfig::from_sweep(&SweepConfig::default(), 8, 8);
        let r = verify_hardened(&cfg).unwrap();
        assert!(r.pass, "{:?}", r.unresolved);
        assert!(r.cond1_sup < 0.46);
        assert!(r.cond2_sup < -0.05);
        assert!(r.cond3_margin_inf > 0.004);
    }

    #[test]
    fn range_below_threshold_is_not_proved() {
        let sweep = SweepConfig {
            mu_min: 0.78,
            ..Default::default()
        };
        let mut cfg = HardenedConfig::from_sweep(&sweep, 6, 6);
        cfg.margins = None;
        cfg.max_depth = 6;
        let r = verify_hardened(&cfg).unwrap();
        assert!(!r.pass);
        assert!(r.failed + r.inconclusive > 0);
    }
}
