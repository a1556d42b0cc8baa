//! Closed-form scalar bounds.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use super::CertificateError;

/// Density threshold of the cruder earlier argument, kept as a reference.
pub const TAYLOR_THRESHOLD: f64 = 0.9395;
/// Conjectured critical density.
pub const CONJECTURED_CRITICAL_DENSITY: f64 = 0.75;

/// `s_δ = (1/√2)·√(√(9 − 4δ) − 3 + 2δ)`: if `|cos x − cos² x| ≥ 2 − δ` then
/// `|sin x| ≤ s_δ`. Valid for `0 ≤ δ < 7/4`.
pub fn s_delta(delta: f64) -> Result<f64, CertificateError> {
    if !(0.0..1.75).contains(&delta) {
        return Err(CertificateError::InvalidParameter {
            name: "delta",
            reason: format!("s_delta needs 0 ≤ δ < 7/4, got {delta}"),
        });
    }
    let inner = (9.0 - 4.0 * delta).sqrt() - 3.0 + 2.0 * delta;
    Ok(FRAC_1_SQRT_2 * inner.max(0.0).sqrt())
}

/// Lower bound `(2μ − 3/2)n² + 2(1 − μ)n` on `‖r‖²` at any critical point.
/// May be negative, in which case it says nothing.
pub fn lxb_r_lower_bound(mu: f64, n: f64) -> f64 {
    (2.0 * mu - 1.5) * n * n + 2.0 * (1.0 - mu) * n
}

/// Positive root `x = 1 − μ` of `2x² + bx − ½ = 0`, written to avoid
/// cancellation.
fn positive_root(b: f64) -> f64 {
    1.0 / ((b * b + 4.0).sqrt() + b)
}

/// Asymptotic threshold from `‖r‖² ≥ (2μ − 3/2)n²` and
/// `|sin(θ_i − θ_r)| ≤ (1 − μ)n/‖r‖ < 1/√2`: the root of
/// `2(1 − μ)² = 2μ − 3/2`, i.e. `μ = 1 − (√2 − 1)/2`.
pub fn lxb_threshold() -> f64 {
    1.0 - positive_root(2.0)
}

/// Threshold reached when the non-edge defect sum is at most
/// `(2 − α)(1 − μ)(n − 1)n`: solves `2(1 − μ)² = ½ − (2 − α)(1 − μ)`.
/// Decreasing in `α`; `α = 0` recovers [`lxb_threshold`].
pub fn alpha_branch_threshold(alpha: f64) -> Result<f64, CertificateError> {
    if !(0.0..=2.0).contains(&alpha) {
        return Err(CertificateError::InvalidParameter {
            name: "alpha",
            reason: format!("must lie in [0, 2], got {alpha}"),
        });
    }
    Ok(1.0 - positive_root(2.0 - alpha))
}

/// Sine bound `√2(1 − μ)/(1 − (1 + √2)α/ε)` available when no good point lies
/// in the left cone. Values below `1/√2` close that case.
pub fn gamma1_zero_branch(mu: f64, alpha: f64, epsilon: f64) -> Result<f64, CertificateError> {
    let den = 1.0 - (1.0 + SQRT_2) * alpha / epsilon;
    if !(den > 0.0) {
        return Err(CertificateError::RegimeViolation(format!(
            "1 − (1+√2)α/ε = {den} is not positive (α = {alpha}, ε = {epsilon})"
        )));
    }
    Ok(SQRT_2 * (1.0 - mu) / den)
}

/// `γ₁(γ₂ − (1 − μ))cos(π − 2φ) + γ₁γ₂α/(ε − α)`, with
/// `cos(π − 2φ) = 2 sin²φ − 1`. A negative value means the cone probe
/// vector makes the Hessian quadratic form negative.
pub fn contradiction_condition(gamma1: f64, gamma2: f64, mu: f64, alpha: f64, epsilon: f64, sin2_phi: f64) -> f64 {
    let cos_pi_minus_2phi = 2.0 * sin2_phi - 1.0;
    gamma1 * (gamma2 - (1.0 - mu)) * cos_pi_minus_2phi + gamma1 * gamma2 * alpha / (epsilon - alpha)
}
