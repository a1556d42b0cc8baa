//! Refine and classify twisted states on circulant graphs of varying density.

use kuramoto_landscape::dynamics::{classify, refine_equilibrium, ClassifyOptions, RefineOptions};
use kuramoto_landscape::graph::circulant_graph;
use kuramoto_landscape::landscape::PhaseState;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 100;
    for k in [10, 20, 30, 34, 40] {
        let g = circulant_graph(n, k)?;
        for q in [0, 1, 2] {
            let s = refine_equilibrium(&g, &PhaseState::twisted(n, q), &RefineOptions::default())?.state;
            let r = classify(&g, &s, &ClassifyOptions::default())?;
            println!(
                "circulant({n}, {k:>2}) mu = {:.3}  q = {q}: {:<20} top nonzero eigenvalue {:>9.4}",
                g.min_degree_fraction(),
                r.classification.to_string(),
                r.top_nonzero_eigenvalue().unwrap_or(f64::NAN)
            );
        }
    }
    Ok(())
}
