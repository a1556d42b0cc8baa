//! Multistart census on a dense random graph and on a moderate circulant.
//!
//! `cargo run --release --example landscape_census -- 5000` raises the trial
//! count on the circulant, where twisted states have small basins.

use kuramoto_landscape::dynamics::{multistart_search, CensusOptions};
use kuramoto_landscape::graph::{circulant_graph, random_min_degree_graph, Graph};

fn show(name: &str, g: &Graph, trials: usize) -> Result<(), Box<dyn std::error::Error>> {
    let c = multistart_search(
        g,
        &CensusOptions {
            trials,
            seed: 42,
            ..Default::default()
        },
    )?;
    println!("{name}: {} classes from {trials} trials", c.classes.len());
    for e in &c.classes {
        let r = &e.report;
        println!(
            "  {:<20} hits {:>5}  f = {:>9.3}  |r|/n = {:.3}  near-zero eigenvalues {}",
            r.classification.to_string(),
            e.hits,
            r.energy,
            r.order_magnitude,
            r.near_zero_eigenvalues
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trials = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2000);
    show("random(60, 0.79, 0)", &random_min_degree_graph(60, 0.79, 0)?, 200)?;
    show("circulant(100, 30)", &circulant_graph(100, 30)?, trials)?;
    Ok(())
}
