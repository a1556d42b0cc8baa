//! Energy, gradient, Hessian and per-state diagnostics at a few states.

use kuramoto_landscape::graph::circulant_graph;
use kuramoto_landscape::landscape::{
    cone_decomposition, empirical_alpha, energy, good_vertices, gradient_residual, hessian_matrix, order_parameter,
    PhaseState,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = circulant_graph(40, 12)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let states = [
        ("synchronized", PhaseState::constant(40, 0.0)),
        ("1-twisted", PhaseState::twisted(40, 1)),
        ("random", PhaseState::random(40, &mut rng)),
    ];
    for (name, s) in &states {
        let eig = hessian_matrix(&g, s)?.symmetric_eigenvalues();
        let top = eig.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let r = order_parameter(s).normalized(40);
        println!(
            "{name:<13} f = {:>9.3}  residual = {:.2e}  max eigenvalue = {top:>8.3}  |r|/n = {:.3}",
            energy(&g, s)?,
            gradient_residual(&g, s)?,
            r
        );
        let alpha = empirical_alpha(&g, s)?;
        println!("              alpha = {alpha:.4}, 0.5-good vertices: {}", good_vertices(&g, s, 0.5)?.len());
        if let Ok(c) = cone_decomposition(s, std::f64::consts::FRAC_PI_6, None) {
            println!(
                "              cones: left {} right {} outliers {}",
                c.left_count, c.right_count, c.outlier_count
            );
        }
    }
    Ok(())
}
