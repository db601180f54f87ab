//! Numerical laboratory for the equivalence between entanglement-assisted
//! one-bit quantum communication and one-hyperbit communication.
//!
//! Both sides of the claim are implemented end to end: the quantum side
//! (bipartite states, projective dichotomic measurements, steering,
//! Born-rule expectations), the isomorphism that maps operator families to
//! Euclidean correlation vectors, and the hyperbit side (the PW
//! discard/flip protocol, general convex post-processing strategies, and
//! z-aware strategies). The region analysis shows exactly where the
//! equivalence holds — the parallelepiped D — and certifies its failure on
//! the rest of the quantum region C via a minimax gap.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`bell_chsh`** — the worked CHSH anchor end to end: Born expectations,
//!   correlation vectors, branch coordinates, PW match.
//! - **`tsirelson_image`** — random instances, the isomorphism invariants,
//!   JSON export of the vector image.
//! - **`pw_protocol`** — the flip probability `q`, its validity region, and
//!   the tetrahedron weights realizing each protocol.
//! - **`monte_carlo`** — seeded protocol simulation against the analytic
//!   expectation.
//! - **`region_map`** — scan C and D on a grid, emit CSV, estimate the
//!   volume fraction.
//! - **`minimax_gap`** — the no-go gap on C\D, exact solver vs grid oracle.
//! - **`equivalence`** — full verification in all three modes plus a
//!   certified counterexample.
//!
//! ```bash
//! cargo run -p hyperbit --example bell_chsh
//! cargo run -p hyperbit --example equivalence
//! ```
//!
//! A thin CLI wraps the same machinery for batch use:
//!
//! ```bash
//! cargo run -p hyperbit -- scan --grid 41,41,41 --out scan.csv
//! cargo run -p hyperbit -- gap --point 0.7071,0.7071
//! ```

pub mod cli;
pub mod error;
pub mod harness;
pub mod protocol;
pub mod quantum;
pub mod region;
pub mod sign;
pub mod tsirelson;

pub use error::{Error, Result};
pub use sign::Sign;

/// Default numerical tolerance for Hermiticity, positivity and bias gates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A steering branch with probability below this threshold is an error,
/// not a NaN.
pub const ZERO_PROB_TOL: f64 = 1e-12;
