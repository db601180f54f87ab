//! The hyperbit side of the equivalence: raw expectations from a
//! hyperbit/effect pair, outcome sampling, the four deterministic
//! post-processings and their convex combinations, the PW discard/flip
//! protocol, and a reproducible Monte Carlo simulator.
//!
//! All randomness is counter-based: draw `i` on a named channel is a pure
//! function of `(seed, i, channel)`, so results are independent of
//! execution order and bit-identical across runs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::region::RegionPoint;
use crate::sign::Sign;
use crate::tsirelson::CorrelationVector;
use crate::DEFAULT_TOL;

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stateless counter-based RNG.
#[derive(Clone, Copy, Debug)]
pub struct CounterRng {
    seed: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed: splitmix64(seed ^ 0xA076_1D64_78BD_642F),
        }
    }

    fn word(&self, index: u64, channel: u64) -> u64 {
        splitmix64(splitmix64(self.seed ^ channel) ^ index)
    }

    /// Uniform draw in `[0, 1)` for `(index, channel)`.
    pub fn uniform(&self, index: u64, channel: u64) -> f64 {
        (self.word(index, channel) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fair ±1 draw.
    pub fn fair_sign(&self, index: u64, channel: u64) -> Sign {
        if self.word(index, channel) >> 63 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

// simulation channels
const CH_SHARED_BIT: u64 = 0;
const CH_RAW_OUTCOME: u64 = 1;
const CH_DISCARD: u64 = 2;
const CH_FLIP: u64 = 3;
const CH_PICK: u64 = 4;

/// A copied classical bit shared by both parties; over many draws its
/// empirical mean vanishes, so it carries no information.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SharedRandomBit {
    pub value: Sign,
    pub source_seed: u64,
}

/// Draw the shared bit for one protocol round.
pub fn shared_bit(seed: u64, index: u64) -> SharedRandomBit {
    SharedRandomBit {
        value: CounterRng::new(seed).fair_sign(index, CH_SHARED_BIT),
        source_seed: seed,
    }
}

/// A state vector inside the unit hyperball.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hyperbit {
    vector: CorrelationVector,
}

impl Hyperbit {
    /// Enforces hyperball membership at construction.
    pub fn new(vector: CorrelationVector) -> Result<Self> {
        let norm = vector.norm();
        if norm > 1.0 + DEFAULT_TOL {
            return Err(Error::NormViolation { norm });
        }
        Ok(Self { vector })
    }

    pub fn vector(&self) -> &CorrelationVector {
        &self.vector
    }
}

/// Expectation of a dichotomic measurement of `effect` on the hyperbit:
/// the Euclidean inner product.
pub fn raw_expectation(h: &Hyperbit, effect: &CorrelationVector) -> Result<f64> {
    let norm = effect.norm();
    if norm > 1.0 + DEFAULT_TOL {
        return Err(Error::NormViolation { norm });
    }
    Ok(h.vector().dot(effect))
}

/// Sample `±1` with `P(+1) = (1 + E)/2` from a uniform draw `u ∈ [0, 1)`.
pub fn sample_outcome(expectation: f64, u: f64) -> Result<Sign> {
    if expectation.abs() > 1.0 + DEFAULT_TOL {
        return Err(Error::ExpectationOutOfRange { value: expectation });
    }
    let p_plus = (1.0 + expectation.clamp(-1.0, 1.0)) / 2.0;
    Ok(if u < p_plus { Sign::Plus } else { Sign::Minus })
}

/// The four deterministic post-processings of a ±1 outcome: the two
/// discards, do-nothing, and flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeterministicMap {
    ToPlus,
    ToMinus,
    Identity,
    Flip,
}

impl DeterministicMap {
    /// Maps are conventionally numbered 1..=4 in that order.
    pub fn from_index(which: usize) -> Result<Self> {
        match which {
            1 => Ok(Self::ToPlus),
            2 => Ok(Self::ToMinus),
            3 => Ok(Self::Identity),
            4 => Ok(Self::Flip),
            other => Err(Error::InvalidArgument(format!(
                "deterministic map index {other} not in 1..=4"
            ))),
        }
    }

    pub fn apply(self, s: Sign) -> Sign {
        match self {
            Self::ToPlus => Sign::Plus,
            Self::ToMinus => Sign::Minus,
            Self::Identity => s,
            Self::Flip => s.flip(),
        }
    }
}

/// Apply the `which`-th deterministic post-processing (1..=4) to `s`.
pub fn apply_deterministic(which: usize, s: Sign) -> Result<Sign> {
    Ok(DeterministicMap::from_index(which)?.apply(s))
}

/// A point of the post-processing tetrahedron: convex weights over the four
/// deterministic maps.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrategyWeights {
    k1: f64,
    k2: f64,
    k3: f64,
    k4: f64,
}

impl StrategyWeights {
    /// Validates `k_i ≥ 0` and `Σk_i = 1` within 1e−12; negative roundoff
    /// below that threshold is clamped to zero.
    pub fn new(k1: f64, k2: f64, k3: f64, k4: f64) -> Result<Self> {
        let ks = [k1, k2, k3, k4];
        if let Some(bad) = ks.iter().find(|k| **k < -1e-12 || !k.is_finite()) {
            return Err(Error::InvalidWeights(format!("weight {bad} is negative")));
        }
        let [k1, k2, k3, k4] = ks.map(|k| k.max(0.0));
        let sum = k1 + k2 + k3 + k4;
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {sum}, not 1"
            )));
        }
        Ok(Self { k1, k2, k3, k4 })
    }

    pub fn uniform() -> Self {
        Self {
            k1: 0.25,
            k2: 0.25,
            k3: 0.25,
            k4: 0.25,
        }
    }

    pub fn k1(&self) -> f64 {
        self.k1
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    pub fn k3(&self) -> f64 {
        self.k3
    }

    pub fn k4(&self) -> f64 {
        self.k4
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.k1, self.k2, self.k3, self.k4]
    }

    /// Categorical draw over the four maps with probabilities `k_i`.
    fn pick(&self, u: f64) -> DeterministicMap {
        if u < self.k1 {
            DeterministicMap::ToPlus
        } else if u < self.k1 + self.k2 {
            DeterministicMap::ToMinus
        } else if u < self.k1 + self.k2 + self.k3 {
            DeterministicMap::Identity
        } else {
            DeterministicMap::Flip
        }
    }
}

impl std::fmt::Display for StrategyWeights {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "k({},{},{},{})", self.k1, self.k2, self.k3, self.k4)
    }
}

/// Convex-strategy expectation `g = k1 − k2 + (k3 − k4)·z`.
pub fn strategy_expectation(k: &StrategyWeights, z: f64) -> f64 {
    k.k1 - k.k2 + (k.k3 - k.k4) * z
}

/// Roundoff band at the D boundary: a computed q this close to [0, 1] is
/// the boundary itself, not a protocol violation.
const Q_ROUNDOFF: f64 = 1e-12;

/// PW flip probability `q = ½(1 − x/(1 − |y|))`; an out-of-range value is
/// an error carrying the raw `q` — never clamped, since the failure of
/// `q ∈ [0, 1]` is the observable of interest. Only last-ulp roundoff at
/// the exact boundary is absorbed (genuine violations are orders of
/// magnitude larger).
pub fn pw_q(x: f64, y: f64) -> Result<f64> {
    if (1.0 - y.abs()).abs() < 1e-12 {
        return Err(Error::DegenerateDiscard);
    }
    if y.abs() > 1.0 {
        return Err(Error::ExpectationOutOfRange { value: y });
    }
    let q = 0.5 * (1.0 - x / (1.0 - y.abs()));
    if (-Q_ROUNDOFF..=1.0 + Q_ROUNDOFF).contains(&q) {
        Ok(q.clamp(0.0, 1.0))
    } else {
        Err(Error::InvalidFlipProbability { q })
    }
}

/// PW protocol output `y + (1 − |y|)·z·(1 − 2q)`; equals `y + xz` when
/// `q = pw_q(x, y)`.
pub fn pw_expectation(y: f64, q: f64, z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidFlipProbability { q });
    }
    if y.abs() > 1.0 + DEFAULT_TOL {
        return Err(Error::ExpectationOutOfRange { value: y });
    }
    if z.abs() > 1.0 + DEFAULT_TOL {
        return Err(Error::ExpectationOutOfRange { value: z });
    }
    Ok(y + (1.0 - y.abs()) * z * (1.0 - 2.0 * q))
}

/// The tetrahedron point realizing a PW protocol: `k1−k2 = y`,
/// `k1+k2 = |y|`, `k3+k4 = 1−|y|`, `k3−k4 = (1−|y|)(1−2q)`.
pub fn pw_to_weights(y: f64, q: f64) -> Result<StrategyWeights> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidFlipProbability { q });
    }
    if y.abs() > 1.0 + DEFAULT_TOL {
        return Err(Error::ExpectationOutOfRange { value: y });
    }
    let y = y.clamp(-1.0, 1.0);
    let k1 = (y.abs() + y) / 2.0;
    let k2 = (y.abs() - y) / 2.0;
    let rest = 1.0 - y.abs();
    StrategyWeights::new(k1, k2, rest * (1.0 - q), rest * q)
}

/// The PW post-processing: probabilistic discard (probability `|c|`,
/// output `sign(c)`), then probabilistic flip with probability `q`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PwStrategy {
    discard_prob: f64,
    discard_sign: Sign,
    flip_prob: f64,
}

impl PwStrategy {
    pub fn new(discard_prob: f64, discard_sign: Sign, flip_prob: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&discard_prob) {
            return Err(Error::InvalidArgument(format!(
                "discard probability {discard_prob} not in [0, 1]"
            )));
        }
        if !(0.0..=1.0).contains(&flip_prob) {
            return Err(Error::InvalidFlipProbability { q: flip_prob });
        }
        Ok(Self {
            discard_prob,
            discard_sign,
            flip_prob,
        })
    }

    /// The PW protocol matched to a branch at `(x, y)`: discard with
    /// probability `|y|` toward `sign(y)`, flip with `q = pw_q(x, y)`.
    pub fn for_point(x: f64, y: f64) -> Result<Self> {
        let q = pw_q(x, y)?;
        Self::new(y.abs(), Sign::of(y), q)
    }

    pub fn discard_prob(&self) -> f64 {
        self.discard_prob
    }

    pub fn discard_sign(&self) -> Sign {
        self.discard_sign
    }

    pub fn flip_prob(&self) -> f64 {
        self.flip_prob
    }

    /// Closed-form output expectation given the raw expectation `z`.
    pub fn analytic(&self, z: f64) -> f64 {
        self.discard_sign.value() * self.discard_prob
            + (1.0 - self.discard_prob) * z * (1.0 - 2.0 * self.flip_prob)
    }
}

impl std::fmt::Display for PwStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "pw(c={},q={})",
            self.discard_sign.value() * self.discard_prob,
            self.flip_prob
        )
    }
}

/// Bob's post-processing for a simulation run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Strategy {
    Fixed(StrategyWeights),
    Pw(PwStrategy),
}

impl Strategy {
    pub fn analytic(&self, z: f64) -> f64 {
        match self {
            Strategy::Fixed(k) => strategy_expectation(k, z),
            Strategy::Pw(pw) => pw.analytic(z),
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strategy::Fixed(k) => k.fmt(f),
            Strategy::Pw(pw) => pw.fmt(f),
        }
    }
}

/// How the copied random bit is sourced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SharedBitMode {
    /// `r = A`: the branch coordinate `z` already carries Alice's outcome.
    AliceOutcome,
    /// An independent fair bit; Bob undoes it with his copy, so the
    /// analytic expectation is unchanged (`r` enters as `r² = 1`).
    IndependentFair,
}

/// Empirical result of a simulation against its analytic expectation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SimulationReport {
    pub empirical_mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub analytic: f64,
}

impl SimulationReport {
    /// Whether the empirical mean lies within `n_sigma` standard errors of
    /// the analytic value.
    pub fn passes(&self, n_sigma: f64) -> bool {
        (self.empirical_mean - self.analytic).abs() <= n_sigma * self.std_error
    }

    pub fn csv_header() -> &'static str {
        "point,strategy,samples,seed,empirical,stderr,analytic,pass"
    }

    pub fn to_csv(&self, point: &RegionPoint, strategy: &Strategy) -> String {
        format!(
            "\"{},{},{}\",\"{}\",{},{},{},{},{},{}",
            point.x,
            point.y,
            point.z,
            strategy,
            self.samples,
            self.seed,
            self.empirical_mean,
            self.std_error,
            self.analytic,
            u8::from(self.passes(5.0))
        )
    }
}

/// Run the protocol pipeline: draw the shared bit, sample Bob's raw outcome
/// from the effect expectation, post-process, average. Discard is applied
/// before flip, matching the protocol's operation order.
pub fn simulate_protocol(
    point: RegionPoint,
    strategy: &Strategy,
    samples: u64,
    seed: u64,
    mode: SharedBitMode,
) -> Result<SimulationReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if point.z.abs() > 1.0 + DEFAULT_TOL {
        return Err(Error::ExpectationOutOfRange { value: point.z });
    }
    let rng = CounterRng::new(seed);
    let z = point.z.clamp(-1.0, 1.0);
    let mut sum = 0.0f64;
    for i in 0..samples {
        let r = match mode {
            SharedBitMode::AliceOutcome => Sign::Plus,
            SharedBitMode::IndependentFair => rng.fair_sign(i, CH_SHARED_BIT),
        };
        let raw = sample_outcome(r.value() * z, rng.uniform(i, CH_RAW_OUTCOME))?;
        // Bob multiplies by his copy of r; with r = A this is a no-op
        let s = if r == Sign::Minus { raw.flip() } else { raw };
        let out = match strategy {
            Strategy::Fixed(k) => k.pick(rng.uniform(i, CH_PICK)).apply(s),
            Strategy::Pw(pw) => {
                if rng.uniform(i, CH_DISCARD) < pw.discard_prob {
                    pw.discard_sign
                } else if rng.uniform(i, CH_FLIP) < pw.flip_prob {
                    s.flip()
                } else {
                    s
                }
            }
        };
        sum += out.value();
    }
    let n = samples as f64;
    let mean = sum / n;
    // outcomes are ±1, so the sample variance is n(1 − mean²)/(n − 1)
    let std_error = if samples > 1 {
        ((1.0 - mean * mean).max(0.0) / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(SimulationReport {
        empirical_mean: mean,
        std_error,
        samples,
        seed,
        analytic: strategy.analytic(z),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    // shadow proptest's `Strategy` trait with the post-processing enum
    use super::Strategy;

    #[test]
    fn pw_weights_equivalence_over_seeded_pairs() {
        // 1000 random (y, q) pairs against a z grid
        let rng = CounterRng::new(314);
        for i in 0..1000u64 {
            let y = 2.0 * rng.uniform(i, 1) - 1.0;
            let q = rng.uniform(i, 2);
            let k = pw_to_weights(y, q).unwrap();
            for step in 0..=10 {
                let z = -1.0 + 0.2 * step as f64;
                let via_weights = strategy_expectation(&k, z);
                let via_pw = pw_expectation(y, q, z).unwrap();
                assert!((via_weights - via_pw).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn bell_hyperbit_raw_expectation() {
        // the hyperbit A·x_a measured against ŷ_⊥ reproduces the branch's z
        let inst = crate::harness::bell_chsh_instance();
        let image = crate::tsirelson::TsirelsonImage::from_instance(&inst).unwrap();
        let x_a = image.alice_vector("0").unwrap();
        let dec = image.decompose_bob_effect("0", Sign::Plus).unwrap();
        let h = Hyperbit::new(x_a.scale(Sign::Plus.value())).unwrap();
        let e = raw_expectation(&h, &dec.y_perp_hat).unwrap();
        assert!((e - FRAC_1_SQRT_2).abs() < 1e-8);
        let h_minus = Hyperbit::new(x_a.scale(Sign::Minus.value())).unwrap();
        let e_minus = raw_expectation(&h_minus, &dec.y_perp_hat).unwrap();
        assert!((e_minus + FRAC_1_SQRT_2).abs() < 1e-8);
    }

    #[test]
    fn counter_rng_is_order_independent() {
        let rng = CounterRng::new(42);
        let forward: Vec<f64> = (0..8).map(|i| rng.uniform(i, 1)).collect();
        let backward: Vec<f64> = (0..8).rev().map(|i| rng.uniform(i, 1)).collect();
        let mut reversed = backward.clone();
        reversed.reverse();
        assert_eq!(forward, reversed);
        // channels decorrelate
        assert_ne!(rng.uniform(0, 1), rng.uniform(0, 2));
    }

    #[test]
    fn shared_bit_mean_vanishes() {
        let n = 1_000_000u64;
        let sum: f64 = (0..n).map(|i| shared_bit(11, i).value.value()).sum();
        let mean = sum / n as f64;
        assert!(mean.abs() < 4.0 / (n as f64).sqrt());
    }

    #[test]
    fn raw_expectation_cases() {
        let unit = CorrelationVector::new(vec![1.0, 0.0]);
        let h = Hyperbit::new(unit.clone()).unwrap();
        assert_eq!(raw_expectation(&h, &unit).unwrap(), 1.0);
        let ortho = CorrelationVector::new(vec![0.0, 1.0]);
        assert_eq!(raw_expectation(&h, &ortho).unwrap(), 0.0);
        let too_big = CorrelationVector::new(vec![1.2, 0.0]);
        assert!(matches!(
            raw_expectation(&h, &too_big),
            Err(Error::NormViolation { .. })
        ));
        assert!(Hyperbit::new(CorrelationVector::new(vec![0.9, 0.9])).is_err());
    }

    #[test]
    fn sample_outcome_boundaries_and_stats() {
        let rng = CounterRng::new(3);
        for i in 0..1000u64 {
            assert_eq!(sample_outcome(1.0, rng.uniform(i, 0)).unwrap(), Sign::Plus);
        }
        assert!(matches!(
            sample_outcome(1.5, 0.3),
            Err(Error::ExpectationOutOfRange { .. })
        ));

        let n = 1_000_000u64;
        let mean_zero: f64 = (0..n)
            .map(|i| sample_outcome(0.0, rng.uniform(i, 1)).unwrap().value())
            .sum::<f64>()
            / n as f64;
        assert!(mean_zero.abs() < 4.0 / (n as f64).sqrt());

        // binomial band around E = 0.5: stddev of the mean is √((1−E²)/N)
        let mean_half: f64 = (0..n)
            .map(|i| sample_outcome(0.5, rng.uniform(i, 2)).unwrap().value())
            .sum::<f64>()
            / n as f64;
        let band = 4.0 * ((1.0 - 0.25) / n as f64).sqrt();
        assert!((mean_half - 0.5).abs() < band);
    }

    #[test]
    fn deterministic_maps() {
        assert_eq!(apply_deterministic(1, Sign::Minus).unwrap(), Sign::Plus);
        assert_eq!(apply_deterministic(2, Sign::Plus).unwrap(), Sign::Minus);
        assert_eq!(apply_deterministic(3, Sign::Minus).unwrap(), Sign::Minus);
        assert_eq!(apply_deterministic(4, Sign::Plus).unwrap(), Sign::Minus);
        assert!(apply_deterministic(5, Sign::Plus).is_err());
    }

    #[test]
    fn strategy_expectation_examples() {
        let k = StrategyWeights::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(strategy_expectation(&k, -0.4), 1.0);
        let k = StrategyWeights::new(0.0, 0.0, 1.0, 0.0).unwrap();
        assert_eq!(strategy_expectation(&k, 0.3), 0.3);
        let k = StrategyWeights::new(0.5, 0.0, 0.5, 0.0).unwrap();
        assert!((strategy_expectation(&k, 0.4) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn weights_validation() {
        assert!(StrategyWeights::new(0.5, 0.5, 0.1, 0.0).is_err());
        assert!(StrategyWeights::new(-0.1, 0.6, 0.3, 0.2).is_err());
        assert!(StrategyWeights::new(0.25, 0.25, 0.25, 0.25).is_ok());
    }

    #[test]
    fn pw_q_examples() {
        assert!((pw_q(0.0, 0.0).unwrap() - 0.5).abs() < 1e-15);
        let q = pw_q(FRAC_1_SQRT_2, 0.0).unwrap();
        assert!((q - (1.0 - FRAC_1_SQRT_2) / 2.0).abs() < 1e-15);
        match pw_q(0.9, 0.5) {
            Err(Error::InvalidFlipProbability { q }) => assert!((q + 0.4).abs() < 1e-12),
            other => panic!("expected InvalidFlipProbability, got {other:?}"),
        }
        assert!(matches!(pw_q(0.0, 1.0), Err(Error::DegenerateDiscard)));
    }

    #[test]
    fn pw_expectation_examples() {
        assert!((pw_expectation(0.2, 0.5, 0.9).unwrap() - 0.2).abs() < 1e-15);
        assert!((pw_expectation(0.0, 0.0, 0.8).unwrap() - 0.8).abs() < 1e-15);
        let q = pw_q(0.5, 0.3).unwrap();
        assert!((pw_expectation(0.3, q, 0.6).unwrap() - 0.6).abs() < 1e-15);
        assert!(pw_expectation(0.3, 1.2, 0.0).is_err());
    }

    #[test]
    fn pw_to_weights_examples() {
        let k = pw_to_weights(0.0, 0.0).unwrap();
        assert_eq!(k.as_array(), [0.0, 0.0, 1.0, 0.0]);
        let k = pw_to_weights(1.0, 0.7).unwrap();
        assert_eq!(k.as_array(), [1.0, 0.0, 0.0, 0.0]);
        let k = pw_to_weights(0.3, 0.2).unwrap();
        assert!((k.k1() - 0.3).abs() < 1e-15);
        assert!(k.k2().abs() < 1e-15);
        assert!((k.k3() - 0.56).abs() < 1e-15);
        assert!((k.k4() - 0.14).abs() < 1e-15);
    }

    #[test]
    fn simulate_do_nothing_at_origin() {
        let k = Strategy::Fixed(StrategyWeights::new(0.0, 0.0, 1.0, 0.0).unwrap());
        let report = simulate_protocol(
            RegionPoint::new(0.0, 0.0, 0.0),
            &k,
            1_000_000,
            21,
            SharedBitMode::AliceOutcome,
        )
        .unwrap();
        assert!(report.empirical_mean.abs() < 4e-3);
        assert!(report.passes(5.0));
    }

    #[test]
    fn simulate_pw_at_bell_point() {
        let pw = Strategy::Pw(PwStrategy::for_point(1.0, 0.0).unwrap());
        if let Strategy::Pw(p) = &pw {
            assert_eq!(p.flip_prob(), 0.0);
        }
        let report = simulate_protocol(
            RegionPoint::new(1.0, 0.0, FRAC_1_SQRT_2),
            &pw,
            1_000_000,
            5,
            SharedBitMode::AliceOutcome,
        )
        .unwrap();
        assert!((report.analytic - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!(report.passes(5.0));
    }

    #[test]
    fn simulate_pure_discard_is_exact() {
        let k = Strategy::Fixed(StrategyWeights::new(1.0, 0.0, 0.0, 0.0).unwrap());
        let report = simulate_protocol(
            RegionPoint::new(0.2, 0.4, -0.6),
            &k,
            1000,
            9,
            SharedBitMode::AliceOutcome,
        )
        .unwrap();
        assert_eq!(report.empirical_mean, 1.0);
        assert_eq!(report.std_error, 0.0);
        assert!(report.passes(5.0));
    }

    #[test]
    fn shared_bit_neutrality() {
        // the independent-fair-bit mode leaves the analytic expectation
        // unchanged and still matches empirically
        let k = Strategy::Fixed(StrategyWeights::new(0.1, 0.2, 0.6, 0.1).unwrap());
        let point = RegionPoint::new(0.5, 0.1, 0.8);
        let a = simulate_protocol(point, &k, 500_000, 77, SharedBitMode::AliceOutcome).unwrap();
        let b = simulate_protocol(point, &k, 500_000, 77, SharedBitMode::IndependentFair).unwrap();
        assert_eq!(a.analytic, b.analytic);
        assert!(a.passes(5.0));
        assert!(b.passes(5.0));
    }

    #[test]
    fn simulate_rejects_bad_input() {
        let k = Strategy::Fixed(StrategyWeights::uniform());
        assert!(simulate_protocol(
            RegionPoint::new(0.0, 0.0, 1.5),
            &k,
            10,
            0,
            SharedBitMode::AliceOutcome
        )
        .is_err());
        assert!(simulate_protocol(
            RegionPoint::new(0.0, 0.0, 0.0),
            &k,
            0,
            0,
            SharedBitMode::AliceOutcome
        )
        .is_err());
    }

    proptest! {
        #[test]
        fn tetrahedron_closure(raw in prop::array::uniform4(0.0f64..1.0), z in -1.0f64..=1.0) {
            let sum: f64 = raw.iter().sum();
            prop_assume!(sum > 1e-6);
            let k = StrategyWeights::new(raw[0]/sum, raw[1]/sum, raw[2]/sum, raw[3]/sum).unwrap();
            let g = strategy_expectation(&k, z);
            prop_assert!(g.abs() <= 1.0 + 1e-12);
        }

        #[test]
        fn pw_weights_equivalence(y in -1.0f64..=1.0, q in 0.0f64..=1.0, z in -1.0f64..=1.0) {
            let k = pw_to_weights(y, q).unwrap();
            let via_weights = strategy_expectation(&k, z);
            let via_pw = pw_expectation(y, q, z).unwrap();
            prop_assert!((via_weights - via_pw).abs() < 1e-12);
        }

        #[test]
        fn pw_identity_inside_d(x in -1.0f64..=1.0, y in -0.999f64..=0.999, z in -1.0f64..=1.0) {
            prop_assume!(x.abs() + y.abs() <= 1.0);
            let q = pw_q(x, y).unwrap();
            let value = pw_expectation(y, q, z).unwrap();
            prop_assert!((value - (y + x * z)).abs() < 1e-12);
        }
    }
}
