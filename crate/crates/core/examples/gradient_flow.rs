//! Integrate the gradient flow from a random state and print the energy trace.

use kuramoto_landscape::dynamics::{integrate, IntegrateOptions};
use kuramoto_landscape::graph::random_min_degree_graph;
use kuramoto_landscape::landscape::PhaseState;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = random_min_degree_graph(50, 0.8, 3)?;
    let s0 = PhaseState::random(50, &mut ChaCha8Rng::seed_from_u64(3));
    let opts = IntegrateOptions {
        sample_every: 4,
        ..Default::default()
    };
    let t = integrate(&g, &s0, &opts)?;
    for s in &t.samples {
        println!("t = {:>7.3}  f = {:>10.4}  |r|/n = {:.6}", s.t, s.energy, s.order);
    }
    println!(
        "converged = {} after {} steps (dt = {:.4}), residual {:.2e}, spread {:.2e}",
        t.converged,
        t.steps,
        t.dt,
        t.residual,
        t.state.angular_spread()
    );
    Ok(())
}
