//! The three scalar conditions that, together, exclude every non-synchronized
//! local maximum for a given `(μ, α)` once `ε` and `δ` are fixed.

use serde::{Deserialize, Serialize};

use super::{s_delta, CertificateError};

/// Slack required before a strict floating-point inequality counts as met.
pub const STRICT_SLACK: f64 = 1e-9;

/// Safety margins claimed over the verified range: condition 1 stays below
/// 0.46, condition 2 below −0.05, and condition 3 holds with room 0.004.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarginTargets {
    pub cond1_max: f64,
    pub cond2_max: f64,
    pub cond3_min: f64,
}

impl Default for MarginTargets {
    fn default() -> Self {
        Self {
            cond1_max: 0.46,
            cond2_max: -0.05,
            cond3_min: 0.004,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertificateParams {
    pub mu: f64,
    pub alpha: f64,
    pub epsilon: f64,
    pub delta: f64,
}

impl CertificateParams {
    /// Checks `0 < μ ≤ 1`, `0 ≤ α ≤ 2` and `α < ε < δ < 1`.
    pub fn new(mu: f64, alpha: f64, epsilon: f64, delta: f64) -> Result<Self, CertificateError> {
        let bad = |name, reason: String| Err(CertificateError::InvalidParameter { name, reason });
        if !(mu > 0.0 && mu <= 1.0) {
            return bad("mu", format!("must lie in (0, 1], got {mu}"));
        }
        if !(0.0..=2.0).contains(&alpha) {
            return bad("alpha", format!("must lie in [0, 2], got {alpha}"));
        }
        if !(alpha < epsilon) {
            return bad("epsilon", format!("need α < ε, got α = {alpha}, ε = {epsilon}"));
        }
        if !(epsilon < delta && delta < 1.0) {
            return bad("delta", format!("need ε < δ < 1, got ε = {epsilon}, δ = {delta}"));
        }
        Ok(Self {
            mu,
            alpha,
            epsilon,
            delta,
        })
    }

    /// `½ − (2 − α)(1 − μ)`, the normalized lower bound on `‖r‖²/n²`.
    pub fn r_squared_floor(&self) -> f64 {
        0.5 - (2.0 - self.alpha) * (1.0 - self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertificateEvaluation {
    pub params: CertificateParams,
    pub s_delta: f64,
    /// `½ − (2 − α)(1 − μ)`.
    pub r_squared_floor: f64,
    /// `sin²φ`; condition 1 asks for `< ½`.
    pub sin2_phi: f64,
    /// Principal branch, `None` when `sin²φ > 1`.
    pub phi: Option<f64>,
    /// `cos(π − 2φ) = 2 sin²φ − 1`.
    pub cos_pi_minus_2phi: f64,
    pub cond1_value: f64,
    /// `cos(π − 2φ) + α/(ε − α)`; condition 2 asks for `< 0`.
    pub cond2_value: Option<f64>,
    pub cond3_lhs: Option<f64>,
    pub cond3_rhs: Option<f64>,
    /// `cond3_lhs − cond3_rhs`; condition 3 asks for `> 0`.
    pub cond3_margin: Option<f64>,
    /// Lower bound on `γ₂` forced by the size of `‖r‖`.
    pub gamma2_lower_bound: Option<f64>,
    pub verdict: Verdict,
    /// Whether the stronger [`MarginTargets`] also hold here.
    pub margins_met: bool,
}

impl CertificateEvaluation {
    /// Minimal room left across the three conditions, `min(½ − c₁, −c₂, c₃)`;
    /// positive iff all three hold (before slack).
    pub fn worst_slack(&self) -> f64 {
        match (self.cond2_value, self.cond3_margin) {
            (Some(c2), Some(c3)) => (0.5 - self.cond1_value).min(-c2).min(c3),
            _ => f64::NEG_INFINITY,
        }
    }
}

/// Evaluates conditions 1–3 at one parameter point.
///
/// Fails with [`CertificateError::RegimeViolation`] when
/// `½ − (2 − α)(1 − μ) ≤ 0`: the lower bound on `‖r‖` is then vacuous and the
/// argument does not apply.
pub fn evaluate_certificate(p: &CertificateParams) -> Result<CertificateEvaluation, CertificateError> {
    evaluate_with_margins(p, &MarginTargets::default())
}

pub fn evaluate_with_margins(
    p: &CertificateParams,
    targets: &MarginTargets,
) -> Result<CertificateEvaluation, CertificateError> {
    let CertificateParams {
        mu,
        alpha,
        epsilon,
        delta,
    } = *p;
    let floor = p.r_squared_floor();
    if !(floor > 0.0) {
        return Err(CertificateError::RegimeViolation(format!(
            "½ − (2−α)(1−μ) = {floor} ≤ 0 at μ = {mu}, α = {alpha}"
        )));
    }
    let s = s_delta(delta)?;
    let good_sine = s + epsilon / delta * (1.0 - s);
    let sin2 = good_sine * good_sine * (1.0 - mu) * (1.0 - mu) / floor;
    let cos2 = 2.0 * sin2 - 1.0;
    let outlier_ratio = alpha / (epsilon - alpha);

    let (phi, cond2, lhs, rhs, gamma2_lb) = if sin2 <= 1.0 {
        let cos_phi = (1.0 - sin2).sqrt();
        let root = floor.sqrt();
        let cond2 = cos2 + outlier_ratio;
        let lhs = 1.0 - alpha / epsilon - (1.0 - root) / (1.0 + cos_phi);
        let rhs = (1.0 - mu) * cos2 / cond2;
        let gamma2_lb = (cos_phi + root) / (1.0 + cos_phi) - alpha / epsilon;
        (Some(sin2.sqrt().asin()), Some(cond2), Some(lhs), Some(rhs), Some(gamma2_lb))
    } else {
        (None, None, None, None, None)
    };
    let margin = lhs.zip(rhs).map(|(l, r)| l - r);

    let c1 = sin2 < 0.5 - STRICT_SLACK;
    let c2 = cond2.is_some_and(|v| v < -STRICT_SLACK);
    let c3 = margin.is_some_and(|v| v > STRICT_SLACK);
    let margins_met = sin2 < targets.cond1_max - STRICT_SLACK
        && cond2.is_some_and(|v| v < targets.cond2_max - STRICT_SLACK)
        && margin.is_some_and(|v| v > targets.cond3_min + STRICT_SLACK);

    Ok(CertificateEvaluation {
        params: *p,
        s_delta: s,
        r_squared_floor: floor,
        sin2_phi: sin2,
        phi,
        cos_pi_minus_2phi: cos2,
        cond1_value: sin2,
        cond2_value: cond2,
        cond3_lhs: lhs,
        cond3_rhs: rhs,
        cond3_margin: margin,
        gamma2_lower_bound: gamma2_lb,
        verdict: Verdict {
            cond1: c1,
            cond2: c2,
            cond3: c3,
            pass: c1 && c2 && c3,
        },
        margins_met,
    })
}
