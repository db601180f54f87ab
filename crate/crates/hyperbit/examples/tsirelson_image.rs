//! Map a random bipartite instance to its correlation-vector image and
//! check the isomorphism invariants: unit identity vector, projector sums,
//! unbiasedness, the ½ projection, and Born-rule reconstruction.
//!
//! ```bash
//! cargo run -p hyperbit --example tsirelson_image
//! ```

use hyperbit::harness::random_instance;
use hyperbit::tsirelson::{
    build_gram, factorize_to_image, CorrelationVector, OperatorLabel, TsirelsonImage,
};
use hyperbit::{Result, Sign};

fn vector_of(image: &TsirelsonImage, label: &OperatorLabel) -> CorrelationVector {
    match label {
        OperatorLabel::Identity => image.identity_vector().clone(),
        OperatorLabel::Alice(a) => image.alice_vector(a).unwrap().clone(),
        OperatorLabel::AliceProjector(a, s) => image.alice_projector_vector(a, *s).unwrap().clone(),
        OperatorLabel::Bob(b, s) => image.bob_vector(b, *s).unwrap().clone(),
    }
}

fn main() -> Result<()> {
    let inst = random_instance(2, 3, 2, 2, 7)?;
    println!(
        "random instance: {}x{} state, {} Alice settings, {} Bob effects",
        inst.dim_alice(),
        inst.dim_bob(),
        inst.alice_settings().count(),
        inst.bob_settings().count()
    );

    let gram = build_gram(&inst)?;
    println!("operator family size: {}", gram.labels().len());

    let image = factorize_to_image(&gram)?;
    println!(
        "embedding dimension (numerical rank): {}",
        image.dimension()
    );

    let x1 = image.identity_vector();
    println!("\ninvariants:");
    println!("  |x_1| - 1                = {:+.3e}", x1.norm() - 1.0);
    for a in inst.alice_settings() {
        let xa = image.alice_vector(a)?;
        let xp = image.alice_projector_vector(a, Sign::Plus)?;
        let xm = image.alice_projector_vector(a, Sign::Minus)?;
        println!("  a={a}:");
        println!(
            "    |x_a+ + x_a- - x_1|    = {:.3e}",
            xp.add(xm).sub(x1).norm()
        );
        println!("    <x_a, x_1>             = {:+.3e}", xa.dot(x1));
        println!("    <x_a+, x_1> - 1/2      = {:+.3e}", xp.dot(x1) - 0.5);
        println!(
            "    |x_1 + x_a|^2          = {:.6} (> 1: not itself a hyperbit)",
            {
                let shifted = x1.add(xa);
                shifted.dot(&shifted)
            }
        );
    }

    let mut max_dev = 0.0f64;
    for (i, li) in gram.labels().iter().enumerate() {
        for (j, lj) in gram.labels().iter().enumerate() {
            let dot = vector_of(&image, li).dot(&vector_of(&image, lj));
            max_dev = max_dev.max((dot - gram.entry(i, j)).abs());
        }
    }
    println!("\nBorn-rule reconstruction: max |<v_i, v_j> - G_ij| = {max_dev:.3e}");

    println!("\nimage as JSON (for replay):\n{}", image.to_json()?);
    Ok(())
}
