use serde::{Deserialize, Serialize};

use super::{normalize_angle, PhaseState};

/// The Kuramoto sum `r = ‖r‖ e^{iθ_r} = Σ_j e^{iθ_j}` (not divided by `n`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderParameter {
    pub re: f64,
    pub im: f64,
    pub magnitude: f64,
    /// `θ_r ∈ [0, 2π)`; `None` when `‖r‖ < 1e−12·n`.
    pub phase: Option<f64>,
}

impl OrderParameter {
    /// Magnitude relative to `n`, in `[0, 1]`.
    pub fn normalized(&self, n: usize) -> f64 {
        self.magnitude / n as f64
    }
}

pub fn order_parameter(s: &PhaseState) -> OrderParameter {
    let (re, im) = s
        .angles()
        .iter()
        .fold((0.0, 0.0), |(re, im), t| (re + t.cos(), im + t.sin()));
    let magnitude = re.hypot(im);
    let phase = (magnitude >= 1e-12 * s.len() as f64).then(|| normalize_angle(im.atan2(re)));
    OrderParameter { re, im, magnitude, phase }
}
