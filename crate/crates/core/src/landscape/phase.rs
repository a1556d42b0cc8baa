use std::f64::consts::{PI, TAU};

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::LandscapeError;

/// Reduces an angle into `[0, 2π)`.
pub fn normalize_angle(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    if y >= TAU {
        0.0
    } else {
        y
    }
}

/// Signed angular difference `a - b` wrapped into `(-π, π]`.
pub fn wrap_difference(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

/// A point on the torus `Tⁿ`; every angle is stored reduced to `[0, 2π)`.
///
/// Serializes as a bare JSON array of radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct PhaseState {
    theta: Vec<f64>,
}

impl TryFrom<Vec<f64>> for PhaseState {
    type Error = LandscapeError;

    fn try_from(value: Vec<f64>) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<PhaseState> for Vec<f64> {
    fn from(s: PhaseState) -> Self {
        s.theta
    }
}

impl PhaseState {
    pub fn new(mut theta: Vec<f64>) -> Result<Self, LandscapeError> {
        if theta.is_empty() {
            return Err(LandscapeError::Empty);
        }
        for (i, t) in theta.iter_mut().enumerate() {
            if !t.is_finite() {
                return Err(LandscapeError::NonFinite(i));
            }
            *t = normalize_angle(*t);
        }
        Ok(Self { theta })
    }

    /// Every angle equal to `c`.
    pub fn constant(n: usize, c: f64) -> Self {
        Self {
            theta: vec![normalize_angle(c); n],
        }
    }

    /// The `q`-twisted state `θ_j = 2πqj/n`.
    pub fn twisted(n: usize, q: i64) -> Self {
        let theta = (0..n)
            .map(|j| normalize_angle(TAU * (q as f64) * (j as f64) / n as f64))
            .collect();
        Self { theta }
    }

    /// Independent uniform angles on `[0, 2π)`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let theta = (0..n).map(|_| rng.random_range(0.0..TAU)).collect();
        Self { theta }
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn angles(&self) -> &[f64] {
        &self.theta
    }

    /// Shifts every angle by `c` (the rotation gauge).
    pub fn rotated(&self, c: f64) -> Self {
        Self {
            theta: self.theta.iter().map(|t| normalize_angle(t + c)).collect(),
        }
    }

    /// Rotates so that the first angle is zero.
    pub fn pinned(&self) -> Self {
        self.rotated(-self.theta[0])
    }

    /// Largest angular deviation of any entry from the first one.
    pub fn angular_spread(&self) -> f64 {
        let t0 = self.theta[0];
        self.theta.iter().map(|&t| wrap_difference(t, t0).abs()).fold(0.0, f64::max)
    }

    pub fn from_json(text: &str) -> Result<Self, LandscapeError> {
        serde_json::from_str(text).map_err(|e| LandscapeError::Parse(e.to_string()))
    }
}
