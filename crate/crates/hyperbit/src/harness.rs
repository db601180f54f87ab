//! End-to-end verification: generate or load bipartite instances, push them
//! through the quantum core and the isomorphism, run the hyperbit side, and
//! compare branch by branch. Also locates certified counterexamples in C\D.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::protocol::{pw_expectation, pw_q, strategy_expectation, CounterRng, StrategyWeights};
use crate::quantum::{
    tensor_product, BipartiteInstance, ComplexMatrix, DichotomicObservable, QuantumState, C64,
};
use crate::region::{grid_1d, in_d, minimax_gap, weights_for, z_aware_weights, RegionPoint};
use crate::sign::Sign;
use crate::tsirelson::TsirelsonImage;

/// Branch-matching tolerance between the quantum and hyperbit sides.
pub const EQUIV_TOL: f64 = 1e-8;

/// Hard cap on either local dimension; the theory allows any amount of
/// entanglement, the desk-scale artifact does not.
pub const DIM_CAP: usize = 16;

/// Generator bias gate: constructed instances must come out unbiased to
/// well below the isomorphism tolerance.
const BIAS_GATE: f64 = 1e-10;
const REJECTION_BUDGET: usize = 100;

// generator RNG channel
const CH_GEN: u64 = 32;

struct GenStream {
    rng: CounterRng,
    counter: u64,
}

impl GenStream {
    fn new(seed: u64) -> Self {
        Self {
            rng: CounterRng::new(seed),
            counter: 0,
        }
    }

    fn uniform(&mut self) -> f64 {
        let u = self.rng.uniform(self.counter, CH_GEN);
        self.counter += 1;
        u
    }

    fn gaussian(&mut self) -> f64 {
        // Box-Muller; 1 - u keeps the log argument in (0, 1]
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    fn complex_gaussian(&mut self) -> C64 {
        C64::new(self.gaussian(), self.gaussian())
    }

    fn gaussian_matrix(&mut self, rows: usize, cols: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, self.complex_gaussian());
            }
        }
        m
    }

    fn unitary(&mut self, n: usize) -> ComplexMatrix {
        self.gaussian_matrix(n, n).orthonormal_columns()
    }

    /// `rows × cols` isometry, `rows ≥ cols`.
    fn isometry(&mut self, rows: usize, cols: usize) -> ComplexMatrix {
        self.gaussian_matrix(rows, cols).orthonormal_columns()
    }
}

/// Hermitian matrix with the given ±1 spectrum pattern in a random
/// orthonormal frame.
fn observable_from_signs(stream: &mut GenStream, signs: &[Sign]) -> ComplexMatrix {
    let n = signs.len();
    let u = stream.unitary(n);
    let mut d = ComplexMatrix::zeros(n, n);
    for (j, s) in signs.iter().enumerate() {
        d.set(j, j, C64::new(s.value(), 0.0));
    }
    let a = u.matmul(&d).matmul(&u.adjoint());
    a.add(&a.adjoint()).scale(0.5)
}

fn setting_labels(count: usize) -> Vec<String> {
    let width = if count <= 2 {
        1
    } else {
        (usize::BITS - (count - 1).leading_zeros()) as usize
    };
    (0..count).map(|i| format!("{i:0width$b}")).collect()
}

/// Seeded random instance with exactly unbiased Alice measurements.
///
/// The state is a mixture of pure states `(1 ⊗ V_k)|Φ+⟩` with random
/// isometries `V_k`, so Alice's marginal is `𝟙/d_A` to machine precision;
/// Alice observables have balanced ±1 spectrum (traceless) in random
/// frames, hence `Tr((A_a ⊗ 1) ρ) ≈ 0` by construction. A residual-bias
/// filter rejects (never repairs) anything beyond the gate.
///
/// Requires `2 ≤ dim_alice ≤ dim_bob ≤ 16` with `dim_alice` even.
pub fn random_instance(
    dim_alice: usize,
    dim_bob: usize,
    n_alice_settings: usize,
    n_bob_settings: usize,
    seed: u64,
) -> Result<BipartiteInstance> {
    if dim_alice < 2 || dim_bob < 2 || dim_alice > DIM_CAP || dim_bob > DIM_CAP {
        return Err(Error::InvalidArgument(format!(
            "dimensions {dim_alice}x{dim_bob} outside 2..={DIM_CAP}"
        )));
    }
    if !dim_alice.is_multiple_of(2) {
        return Err(Error::InvalidArgument(
            "dim_alice must be even for an exactly unbiased ±1 spectrum".into(),
        ));
    }
    if dim_bob < dim_alice {
        return Err(Error::InvalidArgument(
            "dim_bob must be at least dim_alice".into(),
        ));
    }
    if n_alice_settings == 0 || n_bob_settings == 0 {
        return Err(Error::InvalidArgument(
            "need at least one setting per party".into(),
        ));
    }

    let mut stream = GenStream::new(seed);
    let joint = dim_alice * dim_bob;

    // state: mixture of Alice-maximally-entangled pure states
    let components = dim_alice * dim_bob;
    let mut weights: Vec<f64> = (0..components).map(|_| stream.uniform() + 0.1).collect();
    let total: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= total);

    let mut rho = ComplexMatrix::zeros(joint, joint);
    let amp = 1.0 / (dim_alice as f64).sqrt();
    for &w in &weights {
        let v = stream.isometry(dim_bob, dim_alice);
        let mut psi = ComplexMatrix::zeros(joint, 1);
        for i in 0..dim_alice {
            for j in 0..dim_bob {
                psi.set(i * dim_bob + j, 0, v.get(j, i) * amp);
            }
        }
        rho = rho.add(&psi.matmul(&psi.adjoint()).scale(w));
    }
    let rho = rho.add(&rho.adjoint()).scale(0.5);
    let rho = rho.scale(1.0 / rho.trace().re);
    let state = QuantumState::new(dim_alice, dim_bob, rho)?;

    // Alice: balanced spectrum, filtered on residual bias
    let balanced: Vec<Sign> = (0..dim_alice)
        .map(|i| {
            if i < dim_alice / 2 {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .collect();
    let id_b = ComplexMatrix::identity(dim_bob);
    let mut alice = BTreeMap::new();
    for label in setting_labels(n_alice_settings) {
        let mut accepted = None;
        for _ in 0..REJECTION_BUDGET {
            let m = observable_from_signs(&mut stream, &balanced);
            let bias = tensor_product(&m, &id_b).trace_product(state.rho())?.re;
            if bias.abs() <= BIAS_GATE {
                accepted = Some(m);
                break;
            }
        }
        let m = accepted.ok_or(Error::RejectionBudgetExceeded {
            attempts: REJECTION_BUDGET,
        })?;
        alice.insert(label.clone(), DichotomicObservable::new(label, m)?);
    }

    // Bob: unconstrained random ±1 spectrum per (setting, Alice outcome)
    let mut bob = BTreeMap::new();
    for label in setting_labels(n_bob_settings) {
        for outcome in Sign::BOTH {
            let signs: Vec<Sign> = (0..dim_bob)
                .map(|_| {
                    if stream.uniform() < 0.5 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            let m = observable_from_signs(&mut stream, &signs);
            let key = format!("{label}|{outcome}");
            bob.insert((label.clone(), outcome), DichotomicObservable::new(key, m)?);
        }
    }

    BipartiteInstance::new(state, alice, bob)
}

fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]).unwrap()
}

fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
}

fn bell_rho() -> ComplexMatrix {
    let mut rho = ComplexMatrix::zeros(4, 4);
    for &r in &[0usize, 3] {
        for &c in &[0usize, 3] {
            rho.set(r, c, C64::new(0.5, 0.0));
        }
    }
    rho
}

/// The worked CHSH anchor: `ρ = |Φ+⟩⟨Φ+|`, Alice measures Z or X, Bob
/// measures `(Z ± X)/√2`. Every branch has coordinates `(1, 0, ±1/√2)`.
pub fn bell_chsh_instance() -> BipartiteInstance {
    let state = QuantumState::new(2, 2, bell_rho()).expect("Bell state is valid");
    let mut alice = BTreeMap::new();
    alice.insert(
        "0".to_owned(),
        DichotomicObservable::new("0", pauli_z()).expect("Z is dichotomic"),
    );
    alice.insert(
        "1".to_owned(),
        DichotomicObservable::new("1", pauli_x()).expect("X is dichotomic"),
    );
    let diag_plus = pauli_z()
        .add(&pauli_x())
        .scale(std::f64::consts::FRAC_1_SQRT_2);
    let diag_minus = pauli_z()
        .sub(&pauli_x())
        .scale(std::f64::consts::FRAC_1_SQRT_2);
    let mut bob = BTreeMap::new();
    for outcome in Sign::BOTH {
        bob.insert(
            ("0".to_owned(), outcome),
            DichotomicObservable::new(format!("0|{outcome}"), diag_plus.clone())
                .expect("(Z+X)/√2 is dichotomic"),
        );
        bob.insert(
            ("1".to_owned(), outcome),
            DichotomicObservable::new(format!("1|{outcome}"), diag_minus.clone())
                .expect("(Z-X)/√2 is dichotomic"),
        );
    }
    BipartiteInstance::new(state, alice, bob).expect("Bell/CHSH instance is valid")
}

/// Instance whose Bob marginal is biased while Alice stays exactly
/// unbiased: `ρ = w|Φ+⟩⟨Φ+| + (1−w)(𝟙/2 ⊗ |0⟩⟨0|)` with Bob measuring Z on
/// setting "0" and X on setting "1". Setting "0" branches land at
/// `(x, y) = (√(1−(1−w)²), 1−w)` — outside D for every `w ∈ (0, 1)`.
pub fn biased_bob_instance(w: f64) -> Result<BipartiteInstance> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::InvalidArgument(format!(
            "mixture weight {w} not in [0, 1]"
        )));
    }
    let mut ground = ComplexMatrix::zeros(4, 4);
    ground.set(0, 0, C64::new(0.5, 0.0));
    ground.set(2, 2, C64::new(0.5, 0.0));
    let rho = bell_rho().scale(w).add(&ground.scale(1.0 - w));
    let state = QuantumState::new(2, 2, rho)?;
    let mut alice = BTreeMap::new();
    alice.insert("0".to_owned(), DichotomicObservable::new("0", pauli_z())?);
    alice.insert("1".to_owned(), DichotomicObservable::new("1", pauli_x())?);
    let mut bob = BTreeMap::new();
    for outcome in Sign::BOTH {
        bob.insert(
            ("0".to_owned(), outcome),
            DichotomicObservable::new(format!("0|{outcome}"), pauli_z())?,
        );
        bob.insert(
            ("1".to_owned(), outcome),
            DichotomicObservable::new(format!("1|{outcome}"), pauli_x())?,
        );
    }
    BipartiteInstance::new(state, alice, bob)
}

/// Which hyperbit-side strategy family the verification compares against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerifyMode {
    /// PW discard/flip protocol; invalid q is a reported failure.
    Pw,
    /// Fixed z-independent weights; infeasibility is a reported failure.
    FixedWeights,
    /// Weights chosen knowing the branch's z; matches everywhere on C.
    ZAware,
}

impl std::fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyMode::Pw => write!(f, "pw"),
            VerifyMode::FixedWeights => write!(f, "fixed"),
            VerifyMode::ZAware => write!(f, "z-aware"),
        }
    }
}

/// One `(a, b, A)` branch of an equivalence check.
#[derive(Clone, Debug, Serialize)]
pub struct BranchRecord {
    pub a: String,
    pub b: String,
    pub outcome: Sign,
    pub quantum: f64,
    pub point: RegionPoint,
    pub target: f64,
    pub q: Option<f64>,
    pub q_valid: bool,
    pub hyperbit: Option<f64>,
    pub failure: Option<String>,
    pub abs_difference: Option<f64>,
    pub in_d: bool,
    pub pass: bool,
}

/// Per-branch comparison of the two theories plus an overall verdict.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub mode: VerifyMode,
    pub tolerance: f64,
    pub branches: Vec<BranchRecord>,
    pub all_matched: bool,
    pub failures: usize,
}

impl EquivalenceReport {
    pub fn csv_header() -> &'static str {
        "a,b,A,x,y,z,t,q,q_valid,hyperbit_value,diff,pass"
    }

    pub fn to_csv_rows(&self) -> Vec<String> {
        let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
        self.branches
            .iter()
            .map(|r| {
                format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.a,
                    r.b,
                    r.outcome,
                    r.point.x,
                    r.point.y,
                    r.point.z,
                    r.target,
                    opt(r.q),
                    u8::from(r.q_valid),
                    opt(r.hyperbit),
                    opt(r.abs_difference),
                    u8::from(r.pass)
                )
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Compare `⟨B⟩_Q` against the hyperbit-side value on every branch.
/// In `Pw` and `FixedWeights` modes a branch outside D fails by prediction
/// (invalid q / infeasible weights) — reported, not an error.
pub fn verify_equivalence(inst: &BipartiteInstance, mode: VerifyMode) -> Result<EquivalenceReport> {
    let image = TsirelsonImage::from_instance(inst)?;
    let alice: Vec<String> = inst.alice_settings().map(str::to_owned).collect();
    let bob: Vec<(String, Sign)> = inst
        .bob_settings()
        .map(|(b, s)| (b.to_owned(), s))
        .collect();

    let mut branches = Vec::new();
    for a in &alice {
        for (b, outcome) in &bob {
            let quantum = inst.bob_quantum_expectation(a, b, *outcome)?;
            let point = image.coordinates(a, b, *outcome)?;
            let target = point.target();

            let (q, q_valid, hyperbit, failure) = match mode {
                VerifyMode::Pw => match pw_q(point.x, point.y) {
                    Ok(q) => (
                        Some(q),
                        true,
                        Some(pw_expectation(point.y, q, point.z)?),
                        None,
                    ),
                    Err(Error::InvalidFlipProbability { q }) => (
                        Some(q),
                        false,
                        None,
                        Some(format!("flip probability {q} outside [0, 1]")),
                    ),
                    // |y| = 1: the discard step fires with probability 1 and
                    // reproduces t = y on its own; q never matters
                    Err(Error::DegenerateDiscard) => (None, true, Some(point.y), None),
                    Err(e) => return Err(e),
                },
                VerifyMode::FixedWeights => match weights_for(point.x, point.y) {
                    Ok(k) => (None, true, Some(strategy_expectation(&k, point.z)), None),
                    Err(Error::Infeasible { excess }) => (
                        None,
                        false,
                        None,
                        Some(format!(
                            "no fixed weights: |x|+|y| exceeds 1 by {excess:.3e}"
                        )),
                    ),
                    Err(e) => return Err(e),
                },
                VerifyMode::ZAware => {
                    let k = z_aware_weights(point.x, point.y, point.z)?;
                    (None, true, Some(strategy_expectation(&k, point.z)), None)
                }
            };

            let abs_difference = hyperbit.map(|h| (quantum - h).abs());
            let pass = abs_difference.is_some_and(|d| d <= EQUIV_TOL);
            branches.push(BranchRecord {
                a: a.clone(),
                b: b.clone(),
                outcome: *outcome,
                quantum,
                point,
                target,
                q,
                q_valid,
                hyperbit,
                failure,
                abs_difference,
                in_d: in_d(point),
                pass,
            });
        }
    }

    let failures = branches.iter().filter(|b| !b.pass).count();
    Ok(EquivalenceReport {
        mode,
        tolerance: EQUIV_TOL,
        branches,
        all_matched: failures == 0,
        failures,
    })
}

/// A certified equivalence failure at a point of C\D.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleRecord {
    /// The offending point, with z at the worst admissible endpoint.
    pub point: RegionPoint,
    /// Strategies that were tried (z-aware fits at the two witness z values
    /// and the minimax-optimal fixed strategy).
    pub candidate_weights: Vec<StrategyWeights>,
    /// Certified lower bound: every fixed strategy misses `t` by at least
    /// this much at one of the witness z values.
    pub max_violation: f64,
    /// Two admissible z values no single fixed strategy fits.
    pub witness_z_pair: (f64, f64),
}

/// Grid over the `(x, y)` square used to hunt for counterexamples.
#[derive(Clone, Copy, Debug)]
pub struct CounterexampleGrid {
    pub nx: usize,
    pub ny: usize,
    /// Restrict the search to `|x| ≤ bound`, `|y| ≤ bound`.
    pub bound: f64,
}

impl Default for CounterexampleGrid {
    fn default() -> Self {
        Self {
            nx: 41,
            ny: 41,
            bound: 1.0,
        }
    }
}

/// Scan the grid for the point of C\D with the largest minimax gap; the gap
/// being positive certifies that no single fixed strategy reproduces `t` at
/// both witness z values.
pub fn find_counterexample(grid: &CounterexampleGrid) -> Result<CounterexampleRecord> {
    let mut best: Option<crate::region::GapReport> = None;
    for &gx in &grid_1d(grid.nx) {
        let x = gx * grid.bound;
        for &gy in &grid_1d(grid.ny) {
            let y = gy * grid.bound;
            if x * x + y * y > 1.0 || x.abs() + y.abs() <= 1.0 {
                continue;
            }
            let report = minimax_gap(x, y)?;
            if best.as_ref().is_none_or(|b| report.gap > b.gap) {
                best = Some(report);
            }
        }
    }
    let report = best.ok_or(Error::CounterexampleNotFound)?;
    let (x, y) = report.point_xy;
    let (z1, z2) = (report.admissible_z.lo, report.admissible_z.hi);
    let candidate_weights = vec![
        z_aware_weights(x, y, z1)?,
        z_aware_weights(x, y, z2)?,
        report.best_weights,
    ];
    Ok(CounterexampleRecord {
        point: RegionPoint::new(x, y, report.worst_z),
        candidate_weights,
        max_violation: report.gap,
        witness_z_pair: (z1, z2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn generator_is_deterministic() {
        let a = random_instance(2, 2, 2, 2, 42).unwrap();
        let b = random_instance(2, 2, 2, 2, 42).unwrap();
        assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
        let c = random_instance(2, 2, 2, 2, 43).unwrap();
        assert_ne!(a.to_json().unwrap(), c.to_json().unwrap());
    }

    #[test]
    fn generator_meets_instance_invariants() {
        for seed in 0..5 {
            let inst = random_instance(2, 3, 2, 2, seed).unwrap();
            assert!((inst.state().rho().trace().re - 1.0).abs() < 1e-12);
            for a in inst.alice_settings() {
                assert!(inst.alice_bias(a).unwrap().abs() < 1e-10);
                assert!(inst.alice_observable(a).unwrap().is_projective());
            }
            for (b, s) in inst.bob_settings() {
                assert!(inst.bob_observable(b, s).unwrap().is_projective());
            }
        }
    }

    #[test]
    fn generator_rejects_bad_dimensions() {
        assert!(random_instance(3, 3, 1, 1, 0).is_err()); // odd Alice dim
        assert!(random_instance(4, 2, 1, 1, 0).is_err()); // Bob smaller than Alice
        assert!(random_instance(2, 32, 1, 1, 0).is_err()); // beyond the cap
        assert!(random_instance(2, 2, 0, 1, 0).is_err());
    }

    #[test]
    fn bell_chsh_pw_mode_all_match() {
        let report = verify_equivalence(&bell_chsh_instance(), VerifyMode::Pw).unwrap();
        assert_eq!(report.branches.len(), 8);
        assert!(report.all_matched, "{report:?}");
        for branch in &report.branches {
            assert!((branch.point.x - 1.0).abs() < 1e-8);
            assert!(branch.point.y.abs() < 1e-8);
            assert!((branch.point.z.abs() - FRAC_1_SQRT_2).abs() < 1e-8);
        }
    }

    #[test]
    fn z_aware_mode_matches_on_random_instances() {
        for seed in [1u64, 2, 3] {
            let inst = random_instance(2, 3, 2, 2, seed).unwrap();
            let report = verify_equivalence(&inst, VerifyMode::ZAware).unwrap();
            assert!(report.all_matched, "seed {seed}: {report:?}");
        }
    }

    #[test]
    fn monte_carlo_closes_the_loop() {
        // simulating the PW protocol on a matched branch lands within five
        // standard errors of the quantum expectation
        use crate::protocol::{simulate_protocol, PwStrategy, SharedBitMode, Strategy};
        let inst = bell_chsh_instance();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        let point = image.coordinates("0", "0", Sign::Plus).unwrap();
        let quantum = inst.bob_quantum_expectation("0", "0", Sign::Plus).unwrap();
        let strategy = Strategy::Pw(PwStrategy::for_point(point.x, point.y).unwrap());
        let report =
            simulate_protocol(point, &strategy, 400_000, 55, SharedBitMode::AliceOutcome).unwrap();
        assert!((report.analytic - quantum).abs() < 1e-8);
        assert!((report.empirical_mean - quantum).abs() <= 5.0 * report.std_error);
    }

    #[test]
    fn biased_bob_fails_pw_outside_d() {
        let inst = biased_bob_instance(0.5).unwrap();
        let report = verify_equivalence(&inst, VerifyMode::Pw).unwrap();
        let invalid: Vec<_> = report.branches.iter().filter(|b| !b.q_valid).collect();
        assert!(!invalid.is_empty());
        for branch in &invalid {
            assert!(!branch.in_d);
            assert!(branch.failure.is_some());
        }
        // the same branches are infeasible for any fixed weights
        let fixed = verify_equivalence(&inst, VerifyMode::FixedWeights).unwrap();
        assert!(fixed.failures > 0);
        // and z-aware strategies rescue all of them
        let aware = verify_equivalence(&inst, VerifyMode::ZAware).unwrap();
        assert!(aware.all_matched);
    }

    #[test]
    fn branches_inside_d_always_match() {
        let inst = biased_bob_instance(0.5).unwrap();
        for mode in [VerifyMode::Pw, VerifyMode::FixedWeights] {
            let report = verify_equivalence(&inst, mode).unwrap();
            for branch in &report.branches {
                if branch.in_d {
                    assert!(branch.pass, "in-D branch failed in {mode}: {branch:?}");
                }
            }
        }
    }

    #[test]
    fn z_recovery_from_chosen_weights() {
        // solving the z-aware constraint for z returns the branch's z
        // whenever k3 - k4 != x
        let inst = biased_bob_instance(0.5).unwrap();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        for a in inst.alice_settings() {
            for (b, outcome) in inst.bob_settings() {
                let p = image.coordinates(a, b, outcome).unwrap();
                let k = z_aware_weights(p.x, p.y, p.z).unwrap();
                let denom = k.k3() - k.k4() - p.x;
                if denom.abs() > 1e-6 {
                    let z_rec = (p.y - (k.k1() - k.k2())) / denom;
                    assert!(
                        (z_rec - p.z).abs() < 1e-8,
                        "branch ({a},{b},{outcome}): {z_rec} vs {}",
                        p.z
                    );
                }
            }
        }
    }

    #[test]
    fn counterexample_found_on_default_grid() {
        let record = find_counterexample(&CounterexampleGrid::default()).unwrap();
        assert!(record.max_violation > 0.2);
        assert!(record.point.x.abs() + record.point.y.abs() > 1.0);
        assert!(record.witness_z_pair.0 < record.witness_z_pair.1);
        assert_eq!(record.candidate_weights.len(), 3);
    }

    #[test]
    fn counterexample_not_found_inside_d() {
        let grid = CounterexampleGrid {
            nx: 11,
            ny: 11,
            bound: 0.4,
        };
        assert!(matches!(
            find_counterexample(&grid),
            Err(Error::CounterexampleNotFound)
        ));
    }
}
