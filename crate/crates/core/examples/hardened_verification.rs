//! Prove the three conditions on every box of the range in interval arithmetic.

use kuramoto_landscape::certificate::{verify_hardened, HardenedConfig, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = verify_hardened(&HardenedConfig::default())?;
    println!(
        "{} cells: {} proved, {} failed, {} inconclusive ({} boxes, max depth {})",
        r.cells, r.passed, r.failed, r.inconclusive, r.boxes_evaluated, r.max_depth_used
    );
    println!("sup cond1 {:.6}  sup cond2 {:.6}  inf cond3 margin {:.6}", r.cond1_sup, r.cond2_sup, r.cond3_margin_inf);

    // Below the threshold some boxes cannot be proved.
    let mut cfg = HardenedConfig::from_sweep(
        &SweepConfig {
            mu_min: 0.785,
            ..Default::default()
        },
        20,
        20,
    );
    cfg.max_depth = 8;
    let r = verify_hardened(&cfg)?;
    println!("mu >= 0.785: {} proved, {} failed, {} inconclusive of {}", r.passed, r.failed, r.inconclusive, r.cells);
    if let Some(c) = r.unresolved.first() {
        println!("  first unresolved cell: alpha {:?}, mu {:?}", c.alpha, c.mu);
    }
    Ok(())
}
