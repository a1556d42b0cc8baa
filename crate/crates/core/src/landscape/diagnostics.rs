//! Per-configuration quantities used by the threshold argument: the
//! non-edge defect `α`, ε-good vertices, and the two-cone decomposition
//! around the order-parameter direction.

use std::f64::consts::FRAC_PI_4;

use serde::{Deserialize, Serialize};

use super::{check_dims, normalize_angle, order_parameter, LandscapeError, PhaseState};
use crate::graph::Graph;

/// `|cos x − cos² x|`; equals its maximum 2 exactly at `x ≡ π`.
#[inline]
pub fn antipodal_defect(x: f64) -> f64 {
    let c = x.cos();
    (c - c * c).abs()
}

/// For each vertex `i`, `Σ_{j≠i} (1 − a_ij) |cos(θ_i−θ_j) − cos²(θ_i−θ_j)|`.
pub fn non_neighbor_defects(g: &Graph, s: &PhaseState) -> Result<Vec<f64>, LandscapeError> {
    check_dims(g, s)?;
    let t = s.angles();
    let n = g.n();
    let mut sums = vec![0.0; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.has_edge(i, j) {
                let d = antipodal_defect(t[i] - t[j]);
                sums[i] += d;
                sums[j] += d;
            }
        }
    }
    Ok(sums)
}

fn complement_capacity(g: &Graph) -> Result<usize, LandscapeError> {
    match g.max_non_neighbors() {
        0 => Err(LandscapeError::CompleteGraph),
        k => Ok(k),
    }
}

/// Solves `Σ_{i≠j}(1 − a_ij)|cos − cos²| = (2 − α)(1 − μ)(n − 1)n` for `α`,
/// with `μ` the graph's own minimum-degree fraction.
///
/// Always `α ≤ 2`; the value can be negative on states far from the regime
/// the bound cares about, and is reported raw.
pub fn empirical_alpha(g: &Graph, s: &PhaseState) -> Result<f64, LandscapeError> {
    let capacity = complement_capacity(g)?;
    let total: f64 = non_neighbor_defects(g, s)?.iter().sum();
    Ok(2.0 - total / (capacity * g.n()) as f64)
}

/// Vertices whose non-neighbor defect sum is at least `(2 − ε)(1 − μ)(n − 1)`.
pub fn good_vertices(g: &Graph, s: &PhaseState, epsilon: f64) -> Result<Vec<usize>, LandscapeError> {
    if !(epsilon > 0.0 && epsilon <= 2.0) {
        return Err(LandscapeError::InvalidParameter {
            name: "epsilon",
            reason: format!("must lie in (0, 2], got {epsilon}"),
        });
    }
    let capacity = complement_capacity(g)? as f64;
    let threshold = (2.0 - epsilon) * capacity;
    Ok(non_neighbor_defects(g, s)?
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= threshold)
        .map(|(i, _)| i)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeSide {
    /// `cos(θ_i − θ_r) > 0`.
    Right,
    /// `cos(θ_i − θ_r) < 0`.
    Left,
    Outlier,
}

impl ConeSide {
    fn mirrored(self) -> Self {
        match self {
            Self::Right => Self::Left,
            Self::Left => Self::Right,
            Self::Outlier => Self::Outlier,
        }
    }
}

/// Split of the phases into the two antipodal cones of half-opening `phi`
/// around the reference direction, plus everything else.
///
/// The picture is mirrored if needed so that the right cone is the more
/// populated one (`γ₂ ≥ γ₁`); `reference_phase` is the direction after that
/// mirroring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConeDecomposition {
    pub phi: f64,
    pub reference_phase: f64,
    pub reflected: bool,
    pub right_count: usize,
    pub left_count: usize,
    pub outlier_count: usize,
    /// `left_count / n`.
    pub gamma1: f64,
    /// `right_count / n`.
    pub gamma2: f64,
    pub labels: Vec<ConeSide>,
}

/// Classifies each phase by `|sin(θ_i − θ_r)| ≤ sin φ` (boundary inclusive)
/// and the sign of `cos(θ_i − θ_r)`.
///
/// `reference` overrides `θ_r`; without it the order parameter must not
/// vanish.
pub fn cone_decomposition(
    s: &PhaseState,
    phi: f64,
    reference: Option<f64>,
) -> Result<ConeDecomposition, LandscapeError> {
    if !(phi > 0.0 && phi < FRAC_PI_4) {
        return Err(LandscapeError::InvalidParameter {
            name: "phi",
            reason: format!("cone half-angle must lie in (0, π/4), got {phi}"),
        });
    }
    let reference = match reference {
        Some(r) => normalize_angle(r),
        None => order_parameter(s)
            .phase
            .ok_or(LandscapeError::UndefinedOrientation)?,
    };
    let sin_phi = phi.sin();
    let mut labels: Vec<ConeSide> = s
        .angles()
        .iter()
        .map(|&t| {
            let d = t - reference;
            if d.sin().abs() > sin_phi {
                ConeSide::Outlier
            } else if d.cos() > 0.0 {
                ConeSide::Right
            } else {
                ConeSide::Left
            }
        })
        .collect();
    let count = |labels: &[ConeSide], side| labels.iter().filter(|&&l| l == side).count();
    let mut right = count(&labels, ConeSide::Right);
    let mut left = count(&labels, ConeSide::Left);
    let reflected = left > right;
    let reference_phase = if reflected {
        labels.iter_mut().for_each(|l| *l = l.mirrored());
        std::mem::swap(&mut left, &mut right);
        normalize_angle(reference + std::f64::consts::PI)
    } else {
        reference
    };
    let n = s.len() as f64;
    Ok(ConeDecomposition {
        phi,
        reference_phase,
        reflected,
        right_count: right,
        left_count: left,
        outlier_count: s.len() - right - left,
        gamma1: left as f64 / n,
        gamma2: right as f64 / n,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

    use super::*;
    use crate::graph::{circulant_graph, complete_graph, Graph};

    fn st(v: Vec<f64>) -> PhaseState {
        PhaseState::new(v).unwrap()
    }

    #[test]
    fn constant_state_has_alpha_two() {
        let g = circulant_graph(20, 6).unwrap();
        let s = PhaseState::constant(20, 1.1);
        assert_eq!(empirical_alpha(&g, &s).unwrap(), 2.0);
        assert!(good_vertices(&g, &s, 1.99).unwrap().is_empty());
    }

    #[test]
    fn four_cycle_enumeration() {
        // Cycle 0-1-2-3-0; the non-edges are {0,2} and {1,3}.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = st(vec![0.0, 0.0, PI, PI]);
        let t = s.angles();
        let mut total = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                if i != j && !g.has_edge(i, j) {
                    let c = (t[i] - t[j]).cos();
                    total += (c - c * c).abs();
                }
            }
        }
        assert!((total - 8.0).abs() < 1e-12);
        let mu = 2.0 / 3.0;
        let expected = 2.0 - total / ((1.0 - mu) * 3.0 * 4.0);
        assert!((empirical_alpha(&g, &s).unwrap() - expected).abs() < 1e-12);
        assert!(empirical_alpha(&g, &s).unwrap().abs() < 1e-12);
    }

    #[test]
    fn complete_graph_has_no_alpha() {
        let g = complete_graph(5).unwrap();
        let s = PhaseState::constant(5, 0.0);
        assert!(matches!(empirical_alpha(&g, &s), Err(LandscapeError::CompleteGraph)));
        assert!(matches!(good_vertices(&g, &s, 0.5), Err(LandscapeError::CompleteGraph)));
    }

    #[test]
    fn antipodal_non_neighbors_make_vertex_good() {
        // Vertex 0 sits opposite every vertex it is not joined to.
        let g = circulant_graph(9, 2).unwrap();
        let theta: Vec<f64> = (0..9).map(|j| if g.has_edge(0, j) || j == 0 { 0.0 } else { PI }).collect();
        let s = st(theta);
        for eps in [1e-6, 0.3, 1.0, 2.0] {
            assert!(good_vertices(&g, &s, eps).unwrap().contains(&0));
        }
        assert!(good_vertices(&g, &s, 0.0).is_err());
        assert!(good_vertices(&g, &s, 2.5).is_err());
    }

    #[test]
    fn cones_all_right() {
        let s = PhaseState::constant(6, 2.0);
        let c = cone_decomposition(&s, 0.3, None).unwrap();
        assert_eq!((c.right_count, c.left_count, c.outlier_count), (6, 0, 0));
        assert_eq!(c.gamma1, 0.0);
    }

    #[test]
    fn cones_antipodal_with_reference() {
        let s = st(vec![0.4, 0.4, 0.4 + PI, 0.4 + PI]);
        assert!(matches!(
            cone_decomposition(&s, FRAC_PI_6, None),
            Err(LandscapeError::UndefinedOrientation)
        ));
        let c = cone_decomposition(&s, FRAC_PI_6, Some(0.4)).unwrap();
        assert_eq!((c.gamma1, c.gamma2, c.outlier_count), (0.5, 0.5, 0));
    }

    #[test]
    fn cones_mixed_example() {
        let mut theta = vec![0.1; 10];
        theta.extend([PI - 0.1; 3]);
        theta.extend([FRAC_PI_2; 2]);
        let s = st(theta);
        let c = cone_decomposition(&s, PI / 5.0, None).unwrap();
        assert_eq!((c.right_count, c.left_count, c.outlier_count), (10, 3, 2));
        assert!(!c.reflected);
    }

    #[test]
    fn cones_reflect_when_left_heavier() {
        let s = st(vec![0.0, PI, PI, PI + 0.05]);
        let c = cone_decomposition(&s, 0.2, Some(0.0)).unwrap();
        assert!(c.reflected);
        assert_eq!((c.right_count, c.left_count), (3, 1));
        assert!(c.gamma2 >= c.gamma1);
        assert_eq!(c.labels[0], ConeSide::Left);
        assert!((c.reference_phase - PI).abs() < 1e-15);
    }

    #[test]
    fn cone_boundary_is_inclusive() {
        let phi = 0.5;
        // |sin(θ − 0)| == sin(φ) exactly for θ = φ.
        let s = st(vec![0.0, 0.0, 0.0, phi]);
        let c = cone_decomposition(&s, phi, Some(0.0)).unwrap();
        assert_eq!(c.outlier_count, 0);
        assert!(cone_decomposition(&s, FRAC_PI_4, Some(0.0)).is_err());
        assert!(cone_decomposition(&s, 0.0, Some(0.0)).is_err());
    }
}
