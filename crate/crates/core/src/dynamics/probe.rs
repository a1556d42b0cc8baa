//! The destabilizing test direction built from a cone decomposition.

use super::DynamicsError;
use crate::landscape::{ConeDecomposition, ConeSide};

/// Weight `v = (γ₁ − γ₂)/(γ₁ + γ₂)` given to outliers; it minimizes the
/// bound on the outliers' contribution to the quadratic form.
pub fn probe_outlier_weight(gamma1: f64, gamma2: f64) -> Result<f64, DynamicsError> {
    let total = gamma1 + gamma2;
    if !(total > 0.0) {
        return Err(DynamicsError::UndefinedProbe);
    }
    Ok((gamma1 - gamma2) / total)
}

/// `w_i = 1` on the left cone, `−1` on the right cone and `v` on outliers.
/// Feed it to [`hessian_quadratic_form`](crate::landscape::hessian_quadratic_form);
/// a negative value rules out a local maximum.
pub fn cone_probe_vector(decomp: &ConeDecomposition) -> Result<Vec<f64>, DynamicsError> {
    let v = probe_outlier_weight(decomp.gamma1, decomp.gamma2)?;
    Ok(decomp
        .labels
        .iter()
        .map(|side| match side {
            ConeSide::Left => 1.0,
            ConeSide::Right => -1.0,
            ConeSide::Outlier => v,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::graph::complete_graph;
    use crate::landscape::{cone_decomposition, hessian_quadratic_form, PhaseState};

    #[test]
    fn outlier_weights() {
        assert_eq!(probe_outlier_weight(0.3, 0.3).unwrap(), 0.0);
        assert_eq!(probe_outlier_weight(0.0, 0.7).unwrap(), -1.0);
        assert!((probe_outlier_weight(0.2, 0.6).unwrap() + 0.5).abs() < 1e-15);
        assert!(matches!(probe_outlier_weight(0.0, 0.0), Err(DynamicsError::UndefinedProbe)));
    }

    #[test]
    fn probe_destabilizes_split_state() {
        // Two antipodal clusters plus one stray phase on K_7.
        let s = PhaseState::new(vec![0.0, 0.0, 0.0, 0.0, PI, PI, 1.6]).unwrap();
        let d = cone_decomposition(&s, 0.3, Some(0.0)).unwrap();
        assert_eq!((d.right_count, d.left_count, d.outlier_count), (4, 2, 1));
        let w = cone_probe_vector(&d).unwrap();
        assert_eq!(&w[..6], &[-1.0, -1.0, -1.0, -1.0, 1.0, 1.0]);
        assert!((w[6] + 1.0 / 3.0).abs() < 1e-15);
        let q = hessian_quadratic_form(&complete_graph(7).unwrap(), &s, &w).unwrap();
        assert!(q < 0.0);
    }
}
