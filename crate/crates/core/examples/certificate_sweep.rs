//! Evaluate the certificate at the corner of the verified range and sweep it.

use kuramoto_landscape::certificate::{evaluate_certificate, sweep_certificate, CertificateParams, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = evaluate_certificate(&CertificateParams::new(0.7889, 0.0537, 0.5, 0.88)?)?;
    println!("corner (mu 0.7889, alpha 0.0537):");
    println!("  sin^2 phi          {:.6}", e.sin2_phi);
    println!("  cond2              {:.6}", e.cond2_value.unwrap());
    println!("  cond3 margin       {:.6}", e.cond3_margin.unwrap());
    println!("  gamma2 lower bound {:.6}", e.gamma2_lower_bound.unwrap());

    let r = sweep_certificate(&SweepConfig::default())?;
    println!("\n{}x{} grid: {} pass, {} fail", r.grid_shape[0], r.grid_shape[1], r.passed, r.failed);
    for (name, x) in [("max cond1", r.worst_cond1), ("max cond2", r.worst_cond2), ("min cond3 margin", r.worst_cond3_margin)] {
        let x = x.unwrap();
        println!("  {name:<17} {:>9.6} at alpha {:.5}, mu {:.6}", x.value, x.alpha, x.mu);
    }

    let below = sweep_certificate(&SweepConfig {
        mu_min: 0.78,
        alpha_steps: 50,
        mu_steps: 50,
        ..Default::default()
    })?;
    println!("\nextended to mu >= 0.78: {} of {} points fail", below.failed, below.points);
    Ok(())
}
