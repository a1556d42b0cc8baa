//! Search for the best (epsilon, delta) and the smallest certifiable density.

use kuramoto_landscape::certificate::{optimize_parameters, OptimizeOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = OptimizeOptions::default();
    for mu in [0.7889, 0.794] {
        let r = optimize_parameters(mu, 0.0537, &opts)?;
        println!("mu = {mu}");
        println!("  best      eps {:.5} delta {:.5} slack {:.6}", r.best.epsilon, r.best.delta, r.best.objective);
        println!("  (0.5, 0.88)                     slack {:.6}", r.reference.objective);
        println!(
            "  local optimum from (0.5, 0.88) at distance {:.4} (near: {})",
            r.reference_distance, r.reference_near_local_optimum
        );
        println!("  smallest feasible mu {:.6}, combined threshold {:.6}", r.min_feasible_mu, r.combined_threshold);
    }
    match optimize_parameters(0.75, 0.0537, &opts) {
        Err(e) => println!("mu = 0.75: {e}"),
        Ok(_) => println!("mu = 0.75 unexpectedly feasible"),
    }
    Ok(())
}
