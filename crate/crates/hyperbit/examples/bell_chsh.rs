//! The worked CHSH anchor end to end: Born-rule expectations, steering,
//! the correlation-vector image, branch coordinates, and the PW protocol
//! reproducing every branch exactly.
//!
//! ```bash
//! cargo run -p hyperbit --example bell_chsh
//! ```

use hyperbit::harness::bell_chsh_instance;
use hyperbit::protocol::{pw_expectation, pw_q};
use hyperbit::tsirelson::TsirelsonImage;
use hyperbit::{Result, Sign};

fn main() -> Result<()> {
    let inst = bell_chsh_instance();
    println!("Bell state, Alice ∈ {{Z, X}}, Bob ∈ {{(Z+X)/√2, (Z-X)/√2}}\n");

    println!("Born correlations Tr(A ⊗ B ρ):");
    for a in inst.alice_settings() {
        for (b, outcome) in inst.bob_settings() {
            if outcome == Sign::Minus {
                continue; // Bob's observable here does not depend on A
            }
            let corr =
                inst.born_correlation(inst.alice_observable(a)?, inst.bob_observable(b, outcome)?)?;
            println!("  A_{a} x B_{b} = {corr:+.6}");
        }
    }

    println!("\nConditional expectations on the steered state:");
    for a in inst.alice_settings() {
        for outcome in Sign::BOTH {
            let value = inst.bob_quantum_expectation(a, "0", outcome)?;
            println!("  a={a}, A={outcome}, b=0: <B> = {value:+.6}");
        }
    }

    let image = TsirelsonImage::from_instance(&inst)?;
    println!(
        "\nCorrelation-vector image lives in dimension {}",
        image.dimension()
    );

    println!("\nBranch coordinates and the PW protocol:");
    println!("  a b A     x       y       z        t     q      pw value");
    for a in inst.alice_settings() {
        for (b, outcome) in inst.bob_settings() {
            let p = image.coordinates(a, b, outcome)?;
            let q = pw_q(p.x, p.y)?;
            let pw = pw_expectation(p.y, q, p.z)?;
            let quantum = inst.bob_quantum_expectation(a, b, outcome)?;
            assert!((pw - quantum).abs() < 1e-8);
            println!(
                "  {a} {b} {outcome} {:+.4} {:+.4} {:+.4}  {:+.4}  {q:.3}  {pw:+.6}",
                p.x,
                p.y,
                p.z,
                p.target()
            );
        }
    }
    println!("\nEvery branch sits at (x, y) = (1, 0) — the boundary of D, where q = 0");
    println!("and the protocol passes Bob's raw outcome through untouched.");
    Ok(())
}
