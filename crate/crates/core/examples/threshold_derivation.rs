//! The closed-form density thresholds and the side bounds they rest on.

use kuramoto_landscape::certificate::{
    alpha_branch_threshold, gamma1_zero_branch, lxb_r_lower_bound, lxb_threshold, s_delta,
    CONJECTURED_CRITICAL_DENSITY, TAYLOR_THRESHOLD,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("earlier bound            {TAYLOR_THRESHOLD}");
    println!("order-parameter bound    {:.7}", lxb_threshold());
    for alpha in [0.0, 0.02, 0.0537, 0.1] {
        println!("alpha branch, alpha={alpha:<6} {:.7}", alpha_branch_threshold(alpha)?);
    }
    println!("conjectured              {CONJECTURED_CRITICAL_DENSITY}");
    println!();
    for d in [0.5, 0.88, 1.0] {
        println!("s_delta({d}) = {:.10}", s_delta(d)?);
    }
    println!("gamma1 = 0 branch at (0.78, 0.0537, 0.5): {:.5}", gamma1_zero_branch(0.78, 0.0537, 0.5)?);
    println!("||r||^2 bound, n = 1000, mu = 0.8: {:.1}", lxb_r_lower_bound(0.8, 1000.0));
    Ok(())
}
