//! The PW discard/flip protocol: where its flip probability is a real
//! probability (region D), how it fails outside, and the tetrahedron
//! weights realizing each protocol.
//!
//! ```bash
//! cargo run -p hyperbit --example pw_protocol
//! ```

use hyperbit::error::Error;
use hyperbit::protocol::{pw_expectation, pw_q, pw_to_weights, strategy_expectation};
use hyperbit::Result;

fn main() -> Result<()> {
    println!("q = (1 - x/(1-|y|))/2 along the x axis at fixed y = 0.4:");
    println!("  x      |x|+|y|   q");
    for step in 0..=10 {
        let x = 0.1 * step as f64;
        match pw_q(x, 0.4) {
            Ok(q) => println!("  {x:.1}    {:.1}      {q:.4}", x + 0.4),
            Err(Error::InvalidFlipProbability { q }) => {
                println!(
                    "  {x:.1}    {:.1}      {q:.4}  <- not a probability",
                    x + 0.4
                )
            }
            Err(e) => return Err(e),
        }
    }
    println!("\nvalidity flips exactly where |x| + |y| crosses 1 (the D boundary).\n");

    // a protocol as a point of the tetrahedron
    let (y, q) = (0.3, 0.2);
    let k = pw_to_weights(y, q)?;
    println!("PW protocol at y = {y}, q = {q} as tetrahedron weights:");
    println!(
        "  k = ({}, {}, {}, {})  [discard+ / discard- / keep / flip]",
        k.k1(),
        k.k2(),
        k.k3(),
        k.k4()
    );
    println!(
        "  checks: k1-k2 = {} (= y), k3+k4 = {} (= 1-|y|)",
        k.k1() - k.k2(),
        k.k3() + k.k4()
    );

    println!("\nthe two routes agree for every z:");
    println!("  z      protocol   weights");
    for step in 0..=8 {
        let z = -1.0 + 0.25 * step as f64;
        let direct = pw_expectation(y, q, z)?;
        let via_weights = strategy_expectation(&k, z);
        println!("  {z:+.2}   {direct:+.5}   {via_weights:+.5}");
        assert!((direct - via_weights).abs() < 1e-12);
    }

    // inside D the protocol reproduces the target exactly
    let (x, y) = (0.5, 0.3);
    let q = pw_q(x, y)?;
    println!("\ninside D at (x, y) = ({x}, {y}): q = {q:.4}");
    for step in 0..=4 {
        let z = -1.0 + 0.5 * step as f64;
        let value = pw_expectation(y, q, z)?;
        println!(
            "  z = {z:+.1}: pw = {value:+.4}, target y + xz = {:+.4}",
            y + x * z
        );
    }
    Ok(())
}
