mod common;

use common::{bipolar_state, planted_bipolar, brute_energy, fd_gradient, fd_hessian, random_pair};
use kuramoto_landscape::graph::{random_min_degree_graph, Graph};
use kuramoto_landscape::landscape::{
    empirical_alpha, energy, good_vertices, gradient_flow_rhs, hessian_matrix, hessian_quadratic_form,
    non_neighbor_defects, order_parameter, PhaseState,
};
use nalgebra::DVector;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_and_state() -> impl Strategy<Value = (Graph, PhaseState)> {
    any::<u64>().prop_map(|seed| random_pair(seed, 25))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn energy_is_rotation_invariant((g, s) in graph_and_state(), c in -10.0f64..10.0) {
        let f = energy(&g, &s).unwrap();
        let fr = energy(&g, &s.rotated(c)).unwrap();
        prop_assert!((f - fr).abs() <= 1e-9 * (g.n() * g.n()) as f64);
        prop_assert!((f - brute_energy(&g, s.angles())).abs() <= 1e-10 * (g.n() * g.n()) as f64);
    }

    #[test]
    fn flow_is_half_the_energy_gradient((g, s) in graph_and_state()) {
        let rhs = gradient_flow_rhs(&g, &s).unwrap();
        let fd = fd_gradient(&g, s.angles(), 1e-5);
        let scale = rhs.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (a, b) in rhs.iter().zip(&fd) {
            prop_assert!((a - 0.5 * b).abs() <= 1e-6 * scale);
        }
        let total: f64 = rhs.iter().sum();
        prop_assert!(total.abs() <= 1e-10 * (g.n() * g.n()) as f64);
    }

    #[test]
    fn hessian_annihilates_constants_and_matches_quadratic_form(
        (g, s) in graph_and_state(),
        wseed in any::<u64>(),
    ) {
        let h = hessian_matrix(&g, &s).unwrap();
        let n = g.n();
        prop_assert!((h.clone() - h.transpose()).amax() == 0.0);
        let ones = DVector::from_element(n, 1.0);
        prop_assert!((&h * ones).amax() <= 1e-12 * n as f64);
        let mut rng = ChaCha8Rng::seed_from_u64(wseed);
        let w: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let wv = DVector::from_vec(w.clone());
        let q = hessian_quadratic_form(&g, &s, &w).unwrap();
        prop_assert!((q + wv.dot(&(&h * &wv))).abs() <= 1e-10);
    }
}

#[test]
fn hessian_matches_second_differences() {
    for seed in 0..6 {
        let (g, s) = random_pair(1000 + seed, 14);
        let h = hessian_matrix(&g, &s).unwrap();
        let fd = fd_hessian(&g, s.angles(), 1e-3);
        for i in 0..g.n() {
            for j in 0..g.n() {
                assert!((h[(i, j)] - fd[i][j]).abs() < 1e-5, "seed {seed} entry ({i},{j})");
            }
        }
    }
}

#[test]
fn synchronized_hessian_is_minus_twice_the_laplacian() {
    for seed in 0..5 {
        let g = random_min_degree_graph(30, 0.5, seed).unwrap();
        let s = PhaseState::constant(30, 1.3);
        let h = hessian_matrix(&g, &s).unwrap();
        for i in 0..30 {
            for j in 0..30 {
                let lap = if i == j { g.degree(i) as f64 } else { -g.weight(i, j) };
                assert!((h[(i, j)] + 2.0 * lap).abs() < 1e-12);
            }
        }
        let eig = h.symmetric_eigenvalues();
        assert!(eig.iter().all(|&l| l <= 1e-9));
        assert_eq!(eig.iter().filter(|l| l.abs() < 1e-9).count(), 1);
    }
}

#[test]
fn order_parameter_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [2, 7, 40] {
        let s = PhaseState::random(n, &mut rng);
        let r = order_parameter(&s);
        assert!(r.magnitude <= n as f64 + 1e-12);
        assert!((order_parameter(&s.rotated(0.7)).magnitude - r.magnitude).abs() < 1e-12);
        assert!((order_parameter(&PhaseState::constant(n, 2.0)).magnitude - n as f64).abs() < 1e-12);
    }
}

#[test]
fn good_vertex_count_bound_holds() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut nonvacuous = 0;
    for k in 0..60 {
        let n = rng.random_range(10..50);
        let (g, s) = match k % 3 {
            0 => {
                let g = random_min_degree_graph(n, rng.random_range(0.6..0.95), rng.random()).unwrap();
                let s = PhaseState::random(n, &mut rng);
                (g, s)
            }
            1 => {
                let g = random_min_degree_graph(n, rng.random_range(0.6..0.95), rng.random()).unwrap();
                let s = bipolar_state(n, 0.02 * k as f64, &mut rng);
                (g, s)
            }
            _ => {
                let n = 2 * (n / 2).max(10);
                planted_bipolar(n, rng.random_range(1..n / 8), rng.random_range(0.0..0.2), rng.random_range(0.0..0.5), &mut rng)
            }
        };
        if g.is_complete() {
            continue;
        }
        let n = g.n();
        let alpha = empirical_alpha(&g, &s).unwrap();
        let defects = non_neighbor_defects(&g, &s).unwrap();
        let k_max = g.max_non_neighbors() as f64;
        for &d in &defects {
            assert!(d <= 2.0 * k_max + 1e-12);
        }
        for eps in [0.3, 0.5, 1.0] {
            let good = good_vertices(&g, &s, eps).unwrap().len();
            if (0.0..=eps).contains(&alpha) {
                nonvacuous += 1;
                let need = ((1.0 - alpha / eps) * n as f64 - 1e-9).ceil().max(0.0) as usize;
                assert!(good >= need, "n {n} α {alpha} ε {eps}: {good} < {need}");
            }
        }
    }
    assert!(nonvacuous > 20, "{nonvacuous}");
}
