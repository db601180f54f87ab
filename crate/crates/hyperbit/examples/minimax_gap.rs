//! The no-go gap: outside D no fixed convex strategy can match the target
//! t = y + xz across the admissible z interval. The exact minimizer is
//! checked against a dense grid search.
//!
//! ```bash
//! cargo run -p hyperbit --example minimax_gap
//! ```

use std::f64::consts::FRAC_1_SQRT_2;

use hyperbit::protocol::strategy_expectation;
use hyperbit::region::{minimax_gap, minimax_gap_grid};
use hyperbit::Result;

fn main() -> Result<()> {
    println!("minimax gap = min over strategies of the worst |t - g| over admissible z\n");

    println!("  (x, y)              gap        grid oracle");
    for &(x, y) in &[
        (0.3, 0.3),
        (1.0, 0.0),
        (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        (0.95, 0.25),
        (-0.8, 0.55),
        (0.3, -0.9),
    ] {
        let report = minimax_gap(x, y)?;
        let oracle = minimax_gap_grid(x, y, 2000)?;
        println!(
            "  ({x:+.4}, {y:+.4})   {:.6}   {:.6}   {}",
            report.gap,
            oracle,
            if report.gap == 0.0 {
                "feasible (inside D)"
            } else {
                "no-go (C\\D)"
            }
        );
    }

    let report = minimax_gap(FRAC_1_SQRT_2, FRAC_1_SQRT_2)?;
    println!("\nanchor point (1/√2, 1/√2):");
    println!(
        "  admissible z interval: [{:.6}, {:.6}]",
        report.admissible_z.lo, report.admissible_z.hi
    );
    println!(
        "  gap: {:.6}  (analytically (3-√2)/7 = {:.6})",
        report.gap,
        (3.0 - 2f64.sqrt()) / 7.0
    );
    println!(
        "  best fixed weights: ({:.4}, {:.4}, {:.4}, {:.4})",
        report.best_weights.k1(),
        report.best_weights.k2(),
        report.best_weights.k3(),
        report.best_weights.k4()
    );
    let t = |z: f64| FRAC_1_SQRT_2 + FRAC_1_SQRT_2 * z;
    for z in [report.admissible_z.lo, report.admissible_z.hi] {
        let g = strategy_expectation(&report.best_weights, z);
        println!(
            "  at z = {z:+.4}: t = {:+.5}, g = {:+.5}, |t - g| = {:.5}",
            t(z),
            g,
            (t(z) - g).abs()
        );
    }
    println!("  the best strategy equioscillates: it misses by the gap at both ends.");
    Ok(())
}
