//! Bipartite states, dichotomic projective measurements, Born-rule
//! correlations and steering states.
//!
//! Index convention: joint operators act on `H_A ⊗ H_B` with the Alice factor
//! major, i.e. joint index `i·dim_bob + j` for Alice index `i` and Bob index
//! `j`. This is fixed once here and exercised by the tests.

mod matrix;

pub use matrix::{ComplexMatrix, C64};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sign::Sign;
use crate::{DEFAULT_TOL, ZERO_PROB_TOL};

/// Kronecker product with the Alice factor first.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

/// Trace out the Alice factor of a `(dim_alice·dim_bob)`-dimensional square
/// matrix, leaving a `dim_bob`-dimensional one. Preserves the trace.
pub fn partial_trace_alice(
    m: &ComplexMatrix,
    dim_alice: usize,
    dim_bob: usize,
) -> Result<ComplexMatrix> {
    let joint = dim_alice * dim_bob;
    if !m.is_square() || m.rows() != joint {
        return Err(Error::DimensionMismatch(format!(
            "partial trace expects a {joint}x{joint} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(ComplexMatrix::from_fn(dim_bob, dim_bob, |j, l| {
        (0..dim_alice)
            .map(|i| m.get(i * dim_bob + j, i * dim_bob + l))
            .sum()
    }))
}

/// A bipartite density operator on `H_A ⊗ H_B`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumState {
    dim_alice: usize,
    dim_bob: usize,
    rho: ComplexMatrix,
}

impl QuantumState {
    /// Validate with the default tolerance.
    pub fn new(dim_alice: usize, dim_bob: usize, rho: ComplexMatrix) -> Result<Self> {
        Self::with_tol(dim_alice, dim_bob, rho, DEFAULT_TOL)
    }

    /// Validate Hermiticity, unit trace and positive semidefiniteness
    /// within `tol`.
    pub fn with_tol(
        dim_alice: usize,
        dim_bob: usize,
        rho: ComplexMatrix,
        tol: f64,
    ) -> Result<Self> {
        let joint = dim_alice * dim_bob;
        if joint == 0 {
            return Err(Error::InvalidState("zero-dimensional factor".into()));
        }
        if !rho.is_square() || rho.rows() != joint {
            return Err(Error::DimensionMismatch(format!(
                "state needs a {joint}x{joint} density matrix, got {}x{}",
                rho.rows(),
                rho.cols()
            )));
        }
        if !rho.is_hermitian(tol) {
            return Err(Error::InvalidState(format!(
                "density matrix not Hermitian within {tol:.1e}"
            )));
        }
        let tr = rho.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::InvalidState(format!(
                "trace {tr} deviates from 1 beyond {tol:.1e}"
            )));
        }
        let min_eig = rho.hermitian_eigenvalues().first().copied().unwrap_or(0.0);
        if min_eig < -tol {
            return Err(Error::InvalidState(format!(
                "density matrix not PSD: min eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(Self {
            dim_alice,
            dim_bob,
            rho,
        })
    }

    pub fn dim_alice(&self) -> usize {
        self.dim_alice
    }

    pub fn dim_bob(&self) -> usize {
        self.dim_bob
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    /// Bob's reduced state.
    pub fn reduced_bob(&self) -> Result<ComplexMatrix> {
        partial_trace_alice(&self.rho, self.dim_alice, self.dim_bob)
    }
}

/// Hermitian observable with spectrum inside `[-1, 1]`; `projective` marks
/// `A² = 1` (PVM pair), the only kind the protocol branches accept.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DichotomicObservable {
    label: String,
    matrix: ComplexMatrix,
    projective: bool,
}

impl DichotomicObservable {
    pub fn new(label: impl Into<String>, matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tol(label, matrix, DEFAULT_TOL)
    }

    pub fn with_tol(label: impl Into<String>, matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        let label = label.into();
        if !matrix.is_square() {
            return Err(Error::InvalidObservable {
                label,
                reason: "matrix not square".into(),
            });
        }
        if !matrix.is_hermitian(tol) {
            return Err(Error::InvalidObservable {
                label,
                reason: format!("not Hermitian within {tol:.1e}"),
            });
        }
        let eigs = matrix.hermitian_eigenvalues();
        if eigs.iter().any(|e| e.abs() > 1.0 + tol) {
            return Err(Error::InvalidObservable {
                label,
                reason: format!(
                    "spectrum leaves [-1, 1]: extreme eigenvalue {:.6}",
                    eigs.iter()
                        .cloned()
                        .fold(0.0, |m: f64, e| if e.abs() > m.abs() { e } else { m })
                ),
            });
        }
        let projective = matrix
            .matmul(&matrix)
            .max_abs_diff(&ComplexMatrix::identity(matrix.rows()))
            <= tol;
        Ok(Self {
            label,
            matrix,
            projective,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }
}

/// PVM pair `P± = (1 ± A)/2` of a projective dichotomic observable.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectorPair {
    pub p_plus: ComplexMatrix,
    pub p_minus: ComplexMatrix,
}

impl ProjectorPair {
    pub fn select(&self, outcome: Sign) -> &ComplexMatrix {
        match outcome {
            Sign::Plus => &self.p_plus,
            Sign::Minus => &self.p_minus,
        }
    }
}

/// Split a projective observable into its PVM pair. Rejects non-projective
/// input instead of coercing it.
pub fn projectors_from_observable(obs: &DichotomicObservable) -> Result<ProjectorPair> {
    let id = ComplexMatrix::identity(obs.dim());
    let deviation = obs.matrix().matmul(obs.matrix()).max_abs_diff(&id);
    if !obs.is_projective() {
        return Err(Error::NotProjective { deviation });
    }
    Ok(ProjectorPair {
        p_plus: id.add(obs.matrix()).scale(0.5),
        p_minus: id.sub(obs.matrix()).scale(0.5),
    })
}

/// Shared state plus the indexed families of Alice and Bob dichotomic
/// observables. Bob's choice may depend on Alice's communicated outcome,
/// hence the `(setting, outcome)` key.
#[derive(Clone, Debug)]
pub struct BipartiteInstance {
    state: QuantumState,
    alice: BTreeMap<String, DichotomicObservable>,
    bob: BTreeMap<(String, Sign), DichotomicObservable>,
    tol: f64,
}

impl BipartiteInstance {
    pub fn new(
        state: QuantumState,
        alice: BTreeMap<String, DichotomicObservable>,
        bob: BTreeMap<(String, Sign), DichotomicObservable>,
    ) -> Result<Self> {
        Self::with_tol(state, alice, bob, DEFAULT_TOL)
    }

    pub fn with_tol(
        state: QuantumState,
        alice: BTreeMap<String, DichotomicObservable>,
        bob: BTreeMap<(String, Sign), DichotomicObservable>,
        tol: f64,
    ) -> Result<Self> {
        for obs in alice.values() {
            if obs.dim() != state.dim_alice() {
                return Err(Error::DimensionMismatch(format!(
                    "Alice observable `{}` has dim {}, state has dim_alice {}",
                    obs.label(),
                    obs.dim(),
                    state.dim_alice()
                )));
            }
        }
        for obs in bob.values() {
            if obs.dim() != state.dim_bob() {
                return Err(Error::DimensionMismatch(format!(
                    "Bob observable `{}` has dim {}, state has dim_bob {}",
                    obs.label(),
                    obs.dim(),
                    state.dim_bob()
                )));
            }
        }
        Ok(Self {
            state,
            alice,
            bob,
            tol,
        })
    }

    pub fn state(&self) -> &QuantumState {
        &self.state
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn dim_alice(&self) -> usize {
        self.state.dim_alice()
    }

    pub fn dim_bob(&self) -> usize {
        self.state.dim_bob()
    }

    pub fn alice_settings(&self) -> impl Iterator<Item = &str> {
        self.alice.keys().map(String::as_str)
    }

    pub fn bob_settings(&self) -> impl Iterator<Item = (&str, Sign)> {
        self.bob.keys().map(|(b, s)| (b.as_str(), *s))
    }

    pub fn alice_observable(&self, a: &str) -> Result<&DichotomicObservable> {
        self.alice
            .get(a)
            .ok_or_else(|| Error::UnknownSetting(format!("alice:{a}")))
    }

    pub fn bob_observable(&self, b: &str, outcome: Sign) -> Result<&DichotomicObservable> {
        self.bob
            .get(&(b.to_owned(), outcome))
            .ok_or_else(|| Error::UnknownSetting(format!("bob:{b}|{outcome}")))
    }

    /// `Tr(A ⊗ B ρ)`, checked real within tolerance.
    pub fn born_correlation(
        &self,
        a_obs: &DichotomicObservable,
        b_obs: &DichotomicObservable,
    ) -> Result<f64> {
        if a_obs.dim() != self.dim_alice() || b_obs.dim() != self.dim_bob() {
            return Err(Error::DimensionMismatch(
                "observable dimensions do not match the instance".into(),
            ));
        }
        let joint = tensor_product(a_obs.matrix(), b_obs.matrix());
        let val = joint.trace_product(self.state.rho())?;
        if val.im.abs() > self.tol {
            return Err(Error::NonRealCorrelation { imag: val.im });
        }
        Ok(val.re)
    }

    /// `Tr((A_a ⊗ 1) ρ)` — the unbiasedness gate for protocol use.
    pub fn alice_bias(&self, a: &str) -> Result<f64> {
        let obs = self.alice_observable(a)?;
        let joint = tensor_product(obs.matrix(), &ComplexMatrix::identity(self.dim_bob()));
        let val = joint.trace_product(self.state.rho())?;
        if val.im.abs() > self.tol {
            return Err(Error::NonRealCorrelation { imag: val.im });
        }
        Ok(val.re)
    }

    /// Bob's conditional state after Alice's projective outcome on setting
    /// `a`. The factor-2 shortcut is applied only after checking that the
    /// branch probability is ½ within tolerance.
    pub fn steering_state(&self, a: &str, outcome: Sign) -> Result<QuantumState> {
        let obs = self.alice_observable(a)?;
        let pair = projectors_from_observable(obs)?;
        let projector = pair.select(outcome);
        let joint = tensor_product(projector, &ComplexMatrix::identity(self.dim_bob()));
        let prob = joint.trace_product(self.state.rho())?.re;
        if prob < ZERO_PROB_TOL {
            return Err(Error::ZeroProbabilityBranch { probability: prob });
        }
        if (prob - 0.5).abs() > self.tol {
            return Err(Error::BiasedAlice {
                setting: a.to_owned(),
                bias: outcome.value() * (2.0 * prob - 1.0),
            });
        }
        let numerator = joint.matmul(self.state.rho());
        let sigma = partial_trace_alice(&numerator, self.dim_alice(), self.dim_bob())?.scale(2.0);
        QuantumState::with_tol(1, self.dim_bob(), sigma, self.tol)
    }

    /// `Tr_B(B_{b,A} ρ_{a,A})`, cross-checked against the doubled joint trace
    /// `2 Tr(P_a^A ⊗ B_{b,A} ρ)`.
    pub fn bob_quantum_expectation(&self, a: &str, b: &str, outcome: Sign) -> Result<f64> {
        let b_obs = self.bob_observable(b, outcome)?;
        let steered = self.steering_state(a, outcome)?;
        let val = b_obs.matrix().trace_product(steered.rho())?;
        if val.im.abs() > self.tol {
            return Err(Error::NonRealCorrelation { imag: val.im });
        }
        #[cfg(debug_assertions)]
        {
            let a_obs = self.alice_observable(a)?;
            let pair = projectors_from_observable(a_obs)?;
            let joint = tensor_product(pair.select(outcome), b_obs.matrix());
            let doubled = 2.0 * joint.trace_product(self.state.rho())?.re;
            debug_assert!(
                (val.re - doubled).abs() <= 1e-10,
                "steering route {} vs doubled joint trace {}",
                val.re,
                doubled
            );
        }
        Ok(val.re)
    }

    pub fn to_data(&self) -> InstanceData {
        InstanceData {
            dim_alice: self.dim_alice(),
            dim_bob: self.dim_bob(),
            rho: self.state.rho().clone(),
            alice: self
                .alice
                .iter()
                .map(|(k, v)| (k.clone(), v.matrix().clone()))
                .collect(),
            bob: self
                .bob
                .iter()
                .map(|((b, s), v)| (format!("{b}|{s}"), v.matrix().clone()))
                .collect(),
        }
    }

    pub fn from_data(data: InstanceData, tol: f64) -> Result<Self> {
        let state = QuantumState::with_tol(data.dim_alice, data.dim_bob, data.rho, tol)?;
        let mut alice = BTreeMap::new();
        for (label, m) in data.alice {
            let obs = DichotomicObservable::with_tol(label.clone(), m, tol)?;
            alice.insert(label, obs);
        }
        let mut bob = BTreeMap::new();
        for (key, m) in data.bob {
            let (b, sign) = key
                .rsplit_once('|')
                .and_then(|(b, s)| Sign::parse(s).map(|s| (b.to_owned(), s)))
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "bob key `{key}` is not of the form `<bitstring>|±1`"
                    ))
                })?;
            let obs = DichotomicObservable::with_tol(key, m, tol)?;
            bob.insert((b, sign), obs);
        }
        Self::with_tol(state, alice, bob, tol)
    }

    pub fn from_json(json: &str, tol: f64) -> Result<Self> {
        Self::from_data(serde_json::from_str(json)?, tol)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_data())?)
    }
}

/// On-disk form of a [`BipartiteInstance`]: matrices as row-major nested
/// `[re, im]` arrays, Bob keyed by `"<bitstring>|±1"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceData {
    pub dim_alice: usize,
    pub dim_bob: usize,
    pub rho: ComplexMatrix,
    pub alice: BTreeMap<String, ComplexMatrix>,
    pub bob: BTreeMap<String, ComplexMatrix>,
}
