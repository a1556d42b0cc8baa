#![allow(dead_code)]

use kuramoto_landscape::graph::{random_min_degree_graph, Graph};
use kuramoto_landscape::landscape::PhaseState;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Energy straight from the definition, summing over ordered pairs.
pub fn brute_energy(g: &Graph, theta: &[f64]) -> f64 {
    let n = theta.len();
    let mut f = 0.0;
    for i in 0..n {
        for j in 0..n {
            if g.has_edge(i, j) {
                f += (theta[i] - theta[j]).cos();
            }
        }
    }
    f
}

pub fn fd_gradient(g: &Graph, theta: &[f64], h: f64) -> Vec<f64> {
    let mut x = theta.to_vec();
    (0..theta.len())
        .map(|i| {
            x[i] = theta[i] + h;
            let up = brute_energy(g, &x);
            x[i] = theta[i] - h;
            let down = brute_energy(g, &x);
            x[i] = theta[i];
            (up - down) / (2.0 * h)
        })
        .collect()
}

fn second_difference(g: &Graph, theta: &[f64], i: usize, j: usize, h: f64) -> f64 {
    let mut x = theta.to_vec();
    let mut at = |di: f64, dj: f64| {
        x.copy_from_slice(theta);
        x[i] += di;
        x[j] += dj;
        brute_energy(g, &x)
    };
    if i == j {
        (at(h, 0.0) - 2.0 * at(0.0, 0.0) + at(-h, 0.0)) / (h * h)
    } else {
        (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h)
    }
}

/// Second differences at `h` and `2h` combined by Richardson extrapolation.
pub fn fd_hessian(g: &Graph, theta: &[f64], h: f64) -> Vec<Vec<f64>> {
    let n = theta.len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let d1 = second_difference(g, theta, i, j, h);
            let d2 = second_difference(g, theta, i, j, 2.0 * h);
            let v = (4.0 * d1 - d2) / 3.0;
            out[i][j] = v;
            out[j][i] = v;
        }
    }
    out
}

/// A random dense graph and a random state, `n ≤ max_n`.
pub fn random_pair(seed: u64, max_n: usize) -> (Graph, PhaseState) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(3..=max_n);
    let mu = rng.random_range(0.3..1.0);
    let g = random_min_degree_graph(n, mu, rng.random()).unwrap();
    let s = PhaseState::random(n, &mut rng);
    (g, s)
}

/// Two antipodal clusters with Gaussian-ish noise of width `spread`.
pub fn bipolar_state(n: usize, spread: f64, rng: &mut ChaCha8Rng) -> PhaseState {
    let theta = (0..n)
        .map(|_| {
            let base = if rng.random_bool(0.5) { 0.0 } else { std::f64::consts::PI };
            let noise: f64 = (0..4).map(|_| rng.random_range(-1.0..1.0)).sum::<f64>() * 0.5;
            base + spread * noise
        })
        .collect();
    PhaseState::new(theta).unwrap()
}

/// A dense graph whose missing edges all cross the even/odd bipartition
/// (odd circulant offsets, a fraction `refill` of them put back), with a noisy
/// two-cluster state aligned to that bipartition. These are the states with
/// small `α`.
pub fn planted_bipolar(n: usize, offsets: usize, refill: f64, spread: f64, rng: &mut ChaCha8Rng) -> (Graph, PhaseState) {
    assert!(n % 2 == 0 && 2 * offsets < n / 2);
    let cross = |i: usize, j: usize| {
        let d = (j + n - i) % n;
        let d = d.min(n - d);
        d % 2 == 1 && d < 2 * offsets
    };
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !cross(i, j) || rng.random_bool(refill) {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    let theta = (0..n)
        .map(|i| {
            let noise: f64 = (0..4).map(|_| rng.random_range(-1.0..1.0)).sum::<f64>() * 0.5;
            (if i % 2 == 1 { std::f64::consts::PI } else { 0.0 }) + spread * noise
        })
        .collect();
    (g, PhaseState::new(theta).unwrap())
}
