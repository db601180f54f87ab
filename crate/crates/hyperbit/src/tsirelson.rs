//! The Tsirelson isomorphism: map the operator family of a bipartite
//! instance to real Euclidean vectors whose inner products reproduce the
//! Born correlations, and extract the `(x, y, z)` coordinates of a branch.
//!
//! The state inner product `⟨X, Y⟩_ρ = Re Tr(X†Y ρ)` is symmetric and
//! positive semidefinite on the real span of Hermitian operators, so the
//! family's Gram matrix factorizes into vectors `v_i` with
//! `⟨v_i, v_j⟩ = G[i][j]`. For commuting Hermitian factors `A ⊗ 1` and
//! `1 ⊗ B` the inner product is exactly the Born correlation, which is what
//! makes the vectors a faithful hyperbit-side image of the instance.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::{tensor_product, BipartiteInstance, ComplexMatrix};
use crate::region::RegionPoint;
use crate::sign::Sign;
use crate::DEFAULT_TOL;

/// Relative eigenvalue cutoff for the numerical rank of a Gram matrix.
pub const RANK_CUTOFF: f64 = 1e-10;

/// A real Euclidean vector in the correlation space; operators of norm ≤ 1
/// map to vectors inside the unit hyperball.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorrelationVector(Vec<f64>);

impl CorrelationVector {
    pub fn new(components: Vec<f64>) -> Self {
        Self(components)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self(self.0.iter().map(|a| a * s).collect())
    }
}

/// Which operator a Gram row/column stands for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OperatorLabel {
    /// `1 ⊗ 1`
    Identity,
    /// `A_a ⊗ 1`
    Alice(String),
    /// `P_a^± ⊗ 1`
    AliceProjector(String, Sign),
    /// `1 ⊗ B_{b,A}`
    Bob(String, Sign),
}

impl std::fmt::Display for OperatorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperatorLabel::Identity => write!(f, "1"),
            OperatorLabel::Alice(a) => write!(f, "A[{a}]"),
            OperatorLabel::AliceProjector(a, s) => write!(f, "P[{a}|{s}]"),
            OperatorLabel::Bob(b, s) => write!(f, "B[{b}|{s}]"),
        }
    }
}

/// Gram matrix of the operator family under the state inner product,
/// together with the labels routing rows to image fields.
#[derive(Clone, Debug)]
pub struct Gram {
    matrix: DMatrix<f64>,
    labels: Vec<OperatorLabel>,
}

impl Gram {
    /// Wrap an externally computed Gram; the matrix must be square and match
    /// the label count.
    pub fn new(matrix: DMatrix<f64>, labels: Vec<OperatorLabel>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() != labels.len() {
            return Err(Error::DimensionMismatch(format!(
                "gram is {}x{} with {} labels",
                matrix.nrows(),
                matrix.ncols(),
                labels.len()
            )));
        }
        Ok(Self { matrix, labels })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn labels(&self) -> &[OperatorLabel] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }

    pub fn index_of(&self, label: &OperatorLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Assemble the Gram matrix of `{1⊗1, A_a⊗1, P_a^±⊗1, 1⊗B_{b,A}}` under
/// `⟨X, Y⟩_ρ = Re Tr(X†Y ρ)`. Requires projective Alice observables (the
/// projector rows come from their PVM split).
pub fn build_gram(inst: &BipartiteInstance) -> Result<Gram> {
    let id_a = ComplexMatrix::identity(inst.dim_alice());
    let id_b = ComplexMatrix::identity(inst.dim_bob());

    let mut family: Vec<(OperatorLabel, ComplexMatrix)> =
        vec![(OperatorLabel::Identity, tensor_product(&id_a, &id_b))];
    for a in inst.alice_settings() {
        let obs = inst.alice_observable(a)?;
        family.push((
            OperatorLabel::Alice(a.to_owned()),
            tensor_product(obs.matrix(), &id_b),
        ));
        let pair = crate::quantum::projectors_from_observable(obs)?;
        family.push((
            OperatorLabel::AliceProjector(a.to_owned(), Sign::Plus),
            tensor_product(&pair.p_plus, &id_b),
        ));
        family.push((
            OperatorLabel::AliceProjector(a.to_owned(), Sign::Minus),
            tensor_product(&pair.p_minus, &id_b),
        ));
    }
    for (b, outcome) in inst.bob_settings() {
        let obs = inst.bob_observable(b, outcome)?;
        family.push((
            OperatorLabel::Bob(b.to_owned(), outcome),
            tensor_product(&id_a, obs.matrix()),
        ));
    }

    let n = family.len();
    // right factors X_j ρ computed once; entry (i, j) = Re tr(X_i · X_j ρ)
    let right: Vec<ComplexMatrix> = family
        .iter()
        .map(|(_, op)| op.matmul(inst.state().rho()))
        .collect();
    let mut gram = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = family[i].1.trace_product(&right[j])?.re;
        }
    }
    // symmetrize away the last-bit asymmetry of the two trace orders
    let gram = (&gram + gram.transpose()) * 0.5;

    let min_eig = SymmetricEigen::new(gram.clone())
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    let scale = gram.iter().fold(0.0f64, |m, &v| m.max(v.abs())).max(1.0);
    if min_eig < -DEFAULT_TOL * scale {
        return Err(Error::NonPsdGram {
            min_eigenvalue: min_eig,
        });
    }

    Gram::new(gram, family.into_iter().map(|(l, _)| l).collect())
}

/// The image of an instance under the isomorphism: one vector per operator,
/// living in a space of dimension equal to the Gram's numerical rank.
#[derive(Clone, Debug)]
pub struct TsirelsonImage {
    dimension: usize,
    identity_vector: CorrelationVector,
    alice_vectors: BTreeMap<String, CorrelationVector>,
    alice_projector_vectors: BTreeMap<(String, Sign), CorrelationVector>,
    bob_vectors: BTreeMap<(String, Sign), CorrelationVector>,
}

/// Factorize a PSD Gram into vectors `V` with `VᵀV = G` and route the rows
/// into a [`TsirelsonImage`]. Eigenvalues are clamped at `-tol → 0` and
/// those below `RANK_CUTOFF · λ_max` are dropped, so the embedding dimension
/// is the numerical rank.
pub fn factorize_to_image(gram: &Gram) -> Result<TsirelsonImage> {
    let eig = SymmetricEigen::new(gram.matrix().clone());
    let max_eig = eig.eigenvalues.iter().copied().fold(0.0f64, f64::max);
    let min_eig = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if min_eig < -DEFAULT_TOL * max_eig.max(1.0) {
        return Err(Error::NonPsdGram {
            min_eigenvalue: min_eig,
        });
    }

    // keep eigenpairs above the rank cutoff, largest first for a
    // reproducible coordinate order
    let mut kept: Vec<(f64, usize)> = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .filter_map(|(idx, ev)| (ev.max(0.0) > RANK_CUTOFF * max_eig).then_some((ev, idx)))
        .collect();
    kept.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
    let dimension = kept.len();

    let vector_for = |row: usize| -> CorrelationVector {
        CorrelationVector::new(
            kept.iter()
                .map(|&(ev, col)| ev.sqrt() * eig.eigenvectors[(row, col)])
                .collect(),
        )
    };

    let mut identity_vector = None;
    let mut alice_vectors = BTreeMap::new();
    let mut alice_projector_vectors = BTreeMap::new();
    let mut bob_vectors = BTreeMap::new();
    for (row, label) in gram.labels().iter().enumerate() {
        let v = vector_for(row);
        match label {
            OperatorLabel::Identity => identity_vector = Some(v),
            OperatorLabel::Alice(a) => {
                alice_vectors.insert(a.clone(), v);
            }
            OperatorLabel::AliceProjector(a, s) => {
                alice_projector_vectors.insert((a.clone(), *s), v);
            }
            OperatorLabel::Bob(b, s) => {
                bob_vectors.insert((b.clone(), *s), v);
            }
        }
    }
    let identity_vector = identity_vector.ok_or_else(|| {
        Error::InvalidArgument("gram has no identity row to anchor the image".into())
    })?;

    Ok(TsirelsonImage {
        dimension,
        identity_vector,
        alice_vectors,
        alice_projector_vectors,
        bob_vectors,
    })
}

/// Decomposition of a Bob effect vector along `y_1` and its orthogonal
/// complement: `y_{b,A} = c·y_1 + n·ŷ_⊥`.
#[derive(Clone, Debug)]
pub struct BobEffectDecomposition {
    /// Component along the identity vector.
    pub c: f64,
    /// Norm of the orthogonal part.
    pub n: f64,
    /// Unit vector orthogonal to `y_1`; the zero vector when degenerate.
    pub y_perp_hat: CorrelationVector,
    /// Set when `y_{b,A}` is parallel to `y_1` within tolerance (n ≈ 0).
    pub degenerate: bool,
}

impl TsirelsonImage {
    /// Build the image directly from an instance (Gram + factorization).
    pub fn from_instance(inst: &BipartiteInstance) -> Result<Self> {
        factorize_to_image(&build_gram(inst)?)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn identity_vector(&self) -> &CorrelationVector {
        &self.identity_vector
    }

    pub fn alice_vector(&self, a: &str) -> Result<&CorrelationVector> {
        self.alice_vectors
            .get(a)
            .ok_or_else(|| Error::UnknownSetting(format!("alice:{a}")))
    }

    pub fn alice_projector_vector(&self, a: &str, outcome: Sign) -> Result<&CorrelationVector> {
        self.alice_projector_vectors
            .get(&(a.to_owned(), outcome))
            .ok_or_else(|| Error::UnknownSetting(format!("alice projector:{a}|{outcome}")))
    }

    pub fn bob_vector(&self, b: &str, outcome: Sign) -> Result<&CorrelationVector> {
        self.bob_vectors
            .get(&(b.to_owned(), outcome))
            .ok_or_else(|| Error::UnknownSetting(format!("bob:{b}|{outcome}")))
    }

    pub fn alice_settings(&self) -> impl Iterator<Item = &str> {
        self.alice_vectors.keys().map(String::as_str)
    }

    pub fn bob_settings(&self) -> impl Iterator<Item = (&str, Sign)> {
        self.bob_vectors.keys().map(|(b, s)| (b.as_str(), *s))
    }

    /// Split `y_{b,A}` into its `y_1` component `c` and orthogonal part of
    /// norm `n`. When the orthogonal part vanishes the decomposition is
    /// flagged degenerate and `ŷ_⊥` is the zero vector.
    pub fn decompose_bob_effect(&self, b: &str, outcome: Sign) -> Result<BobEffectDecomposition> {
        let y = self.bob_vector(b, outcome)?;
        let y_one = &self.identity_vector;
        let c = y.dot(y_one);
        let perp = y.sub(&y_one.scale(c));
        let n = perp.norm();
        if n < DEFAULT_TOL {
            Ok(BobEffectDecomposition {
                c,
                n: 0.0,
                y_perp_hat: CorrelationVector::zeros(y.dim()),
                degenerate: true,
            })
        } else {
            Ok(BobEffectDecomposition {
                c,
                n,
                y_perp_hat: perp.scale(1.0 / n),
                degenerate: false,
            })
        }
    }

    /// The branch coordinates `x = n`, `y = c`, `z = A·⟨x_a, ŷ_⊥⟩`.
    /// Requires the Alice setting to be unbiased (`⟨x_a, y_1⟩ = 0`); a
    /// degenerate Bob decomposition yields `z = 0` by convention.
    pub fn coordinates(&self, a: &str, b: &str, outcome: Sign) -> Result<RegionPoint> {
        let x_a = self.alice_vector(a)?;
        let bias = x_a.dot(&self.identity_vector);
        if bias.abs() > DEFAULT_TOL {
            return Err(Error::BiasedAlice {
                setting: a.to_owned(),
                bias,
            });
        }
        let dec = self.decompose_bob_effect(b, outcome)?;
        let z = if dec.degenerate {
            0.0
        } else {
            outcome.value() * x_a.dot(&dec.y_perp_hat)
        };
        Ok(RegionPoint::new(dec.n, dec.c, z))
    }

    pub fn to_data(&self) -> ImageData {
        ImageData {
            dimension: self.dimension,
            identity: self.identity_vector.clone(),
            alice: self.alice_vectors.clone(),
            alice_projectors: self
                .alice_projector_vectors
                .iter()
                .map(|((a, s), v)| (format!("{a}|{s}"), v.clone()))
                .collect(),
            bob: self
                .bob_vectors
                .iter()
                .map(|((b, s), v)| (format!("{b}|{s}"), v.clone()))
                .collect(),
        }
    }

    /// Rebuild an image from its serialized form (for replay).
    pub fn from_data(data: ImageData) -> Result<Self> {
        let parse_key = |key: &str| -> Result<(String, Sign)> {
            key.rsplit_once('|')
                .and_then(|(head, s)| Sign::parse(s).map(|s| (head.to_owned(), s)))
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("key `{key}` is not `<bitstring>|±1`"))
                })
        };
        let mut alice_projector_vectors = BTreeMap::new();
        for (k, v) in data.alice_projectors {
            alice_projector_vectors.insert(parse_key(&k)?, v);
        }
        let mut bob_vectors = BTreeMap::new();
        for (k, v) in data.bob {
            bob_vectors.insert(parse_key(&k)?, v);
        }
        Ok(Self {
            dimension: data.dimension,
            identity_vector: data.identity,
            alice_vectors: data.alice,
            alice_projector_vectors,
            bob_vectors,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_data())?)
    }
}

/// Serialized form of a [`TsirelsonImage`]: labeled vectors, tuple keys
/// flattened to `"<bitstring>|±1"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ImageData {
    pub dimension: usize,
    pub identity: CorrelationVector,
    pub alice: BTreeMap<String, CorrelationVector>,
    pub alice_projectors: BTreeMap<String, CorrelationVector>,
    pub bob: BTreeMap<String, CorrelationVector>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{bell_chsh_instance, biased_bob_instance, random_instance};
    use crate::quantum::{DichotomicObservable, QuantumState};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn bell_state() -> QuantumState {
        let mut rho = ComplexMatrix::zeros(4, 4);
        for &r in &[0usize, 3] {
            for &c in &[0usize, 3] {
                rho.set(r, c, num_complex::Complex::new(0.5, 0.0));
            }
        }
        QuantumState::new(2, 2, rho).unwrap()
    }

    fn pauli_z() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, -1.0]]).unwrap()
    }

    #[test]
    fn gram_of_bare_state_is_identity_row() {
        let inst =
            crate::quantum::BipartiteInstance::new(bell_state(), BTreeMap::new(), BTreeMap::new())
                .unwrap();
        let gram = build_gram(&inst).unwrap();
        assert_eq!(gram.labels(), &[OperatorLabel::Identity]);
        assert!((gram.entry(0, 0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gram_bell_z_entries() {
        let mut alice = BTreeMap::new();
        alice.insert(
            "0".to_owned(),
            DichotomicObservable::new("0", pauli_z()).unwrap(),
        );
        let mut bob = BTreeMap::new();
        bob.insert(
            ("0".to_owned(), Sign::Plus),
            DichotomicObservable::new("0|+1", pauli_z()).unwrap(),
        );
        let inst = crate::quantum::BipartiteInstance::new(bell_state(), alice, bob).unwrap();
        let gram = build_gram(&inst).unwrap();
        let id = gram.index_of(&OperatorLabel::Identity).unwrap();
        let az = gram.index_of(&OperatorLabel::Alice("0".into())).unwrap();
        let bz = gram
            .index_of(&OperatorLabel::Bob("0".into(), Sign::Plus))
            .unwrap();
        assert!((gram.entry(id, id) - 1.0).abs() < 1e-12);
        assert!(gram.entry(id, az).abs() < 1e-12);
        assert!(gram.entry(id, bz).abs() < 1e-12);
        assert!((gram.entry(az, az) - 1.0).abs() < 1e-12);
        assert!((gram.entry(az, bz) - 1.0).abs() < 1e-12);
        assert!((gram.entry(bz, bz) - 1.0).abs() < 1e-12);
        // operator norm bound on the diagonal
        for i in 0..gram.labels().len() {
            assert!(gram.entry(i, i) <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn factorize_unit_gram() {
        let gram = Gram::new(DMatrix::identity(1, 1), vec![OperatorLabel::Identity]).unwrap();
        let image = factorize_to_image(&gram).unwrap();
        assert_eq!(image.dimension(), 1);
        assert!((image.identity_vector().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn factorize_orthogonal_pair() {
        let gram = Gram::new(
            DMatrix::identity(2, 2),
            vec![OperatorLabel::Identity, OperatorLabel::Alice("0".into())],
        )
        .unwrap();
        let image = factorize_to_image(&gram).unwrap();
        assert_eq!(image.dimension(), 2);
        let x1 = image.identity_vector();
        let xa = image.alice_vector("0").unwrap();
        assert!((x1.norm() - 1.0).abs() < 1e-10);
        assert!((xa.norm() - 1.0).abs() < 1e-10);
        assert!(x1.dot(xa).abs() < 1e-10);
    }

    #[test]
    fn factorize_rejects_non_psd() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        let gram = Gram::new(
            m,
            vec![OperatorLabel::Identity, OperatorLabel::Alice("0".into())],
        )
        .unwrap();
        assert!(matches!(
            factorize_to_image(&gram),
            Err(Error::NonPsdGram { .. })
        ));
    }

    #[test]
    fn bell_chsh_reconstruction() {
        let inst = bell_chsh_instance();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        let x_z = image.alice_vector("0").unwrap();
        let y = image.bob_vector("0", Sign::Plus).unwrap();
        assert!((x_z.dot(y) - FRAC_1_SQRT_2).abs() < 1e-8);
    }

    #[test]
    fn gram_reconstruction_on_random_instances() {
        for seed in 0..5 {
            let inst = random_instance(2, 2, 2, 2, seed).unwrap();
            let gram = build_gram(&inst).unwrap();
            let image = factorize_to_image(&gram).unwrap();
            let vector_of = |label: &OperatorLabel| -> CorrelationVector {
                match label {
                    OperatorLabel::Identity => image.identity_vector().clone(),
                    OperatorLabel::Alice(a) => image.alice_vector(a).unwrap().clone(),
                    OperatorLabel::AliceProjector(a, s) => {
                        image.alice_projector_vector(a, *s).unwrap().clone()
                    }
                    OperatorLabel::Bob(b, s) => image.bob_vector(b, *s).unwrap().clone(),
                }
            };
            for (i, li) in gram.labels().iter().enumerate() {
                for (j, lj) in gram.labels().iter().enumerate() {
                    let dot = vector_of(li).dot(&vector_of(lj));
                    assert!(
                        (dot - gram.entry(i, j)).abs() < 1e-8,
                        "seed {seed}: ⟨{li},{lj}⟩ = {dot} vs {}",
                        gram.entry(i, j)
                    );
                }
            }
        }
    }

    #[test]
    fn isomorphism_invariants_on_random_instances() {
        for seed in 0..10 {
            let inst = random_instance(2, 2, 2, 2, seed).unwrap();
            let image = TsirelsonImage::from_instance(&inst).unwrap();
            let x1 = image.identity_vector();
            assert!((x1.norm() - 1.0).abs() < 1e-8);
            for a in inst.alice_settings() {
                let xa = image.alice_vector(a).unwrap();
                let xp = image.alice_projector_vector(a, Sign::Plus).unwrap();
                let xm = image.alice_projector_vector(a, Sign::Minus).unwrap();
                assert!(xp.add(xm).sub(x1).norm() < 1e-8);
                assert!(xa.dot(x1).abs() < 1e-8);
                assert!((xp.dot(x1) - 0.5).abs() < 1e-8);
                assert!((xm.dot(x1) - 0.5).abs() < 1e-8);
                // x_1 + A·x_a leaves the hyperball whenever |x_a| > 0
                let shifted = x1.add(xa);
                let expected_sq = 1.0 + xa.dot(xa);
                assert!((shifted.dot(&shifted) - expected_sq).abs() < 1e-8);
                // the image vectors themselves stay inside it
                assert!(xa.norm() <= 1.0 + 1e-8);
            }
            for (b, s) in inst.bob_settings() {
                assert!(image.bob_vector(b, s).unwrap().norm() <= 1.0 + 1e-8);
            }
        }
    }

    #[test]
    fn decompose_unit_effect_is_degenerate() {
        let mut alice = BTreeMap::new();
        alice.insert(
            "0".to_owned(),
            DichotomicObservable::new("0", pauli_z()).unwrap(),
        );
        let mut bob = BTreeMap::new();
        bob.insert(
            ("0".to_owned(), Sign::Plus),
            DichotomicObservable::new("0|+1", ComplexMatrix::identity(2)).unwrap(),
        );
        let inst = crate::quantum::BipartiteInstance::new(bell_state(), alice, bob).unwrap();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        let dec = image.decompose_bob_effect("0", Sign::Plus).unwrap();
        assert!(dec.degenerate);
        assert!((dec.c - 1.0).abs() < 1e-8);
        assert_eq!(dec.n, 0.0);
        // degenerate decomposition yields the unit-effect branch (0, 1, 0)
        let pt = image.coordinates("0", "0", Sign::Plus).unwrap();
        assert_eq!(pt.z, 0.0);
        assert!(pt.x.abs() < 1e-8);
        assert!((pt.y - 1.0).abs() < 1e-8);
        assert!((pt.target() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn decompose_unbiased_effect() {
        let inst = bell_chsh_instance();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        let dec = image.decompose_bob_effect("0", Sign::Plus).unwrap();
        assert!(dec.c.abs() < 1e-8);
        assert!((dec.n - 1.0).abs() < 1e-8);
        assert!(dec.y_perp_hat.dot(image.identity_vector()).abs() < 1e-8);
    }

    #[test]
    fn decompose_pythagorean_effect() {
        // biased Bob marginal: c = 0.6, |y| = 1, so n = 0.8
        let inst = biased_bob_instance(0.4).unwrap();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        let dec = image.decompose_bob_effect("0", Sign::Plus).unwrap();
        assert!((dec.c - 0.6).abs() < 1e-8);
        assert!((dec.n - 0.8).abs() < 1e-8);
        let y = image.bob_vector("0", Sign::Plus).unwrap();
        let rebuilt = image
            .identity_vector()
            .scale(dec.c)
            .add(&dec.y_perp_hat.scale(dec.n));
        assert!(rebuilt.sub(y).norm() < 1e-8);
        assert!(dec.c * dec.c + dec.n * dec.n <= 1.0 + 1e-8);
    }

    #[test]
    fn coordinates_bell_anchor() {
        let inst = bell_chsh_instance();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        let pt = image.coordinates("0", "0", Sign::Plus).unwrap();
        assert!((pt.x - 1.0).abs() < 1e-8);
        assert!(pt.y.abs() < 1e-8);
        assert!((pt.z - FRAC_1_SQRT_2).abs() < 1e-8);
        assert!((pt.target() - FRAC_1_SQRT_2).abs() < 1e-8);

        let pt_minus = image.coordinates("0", "0", Sign::Minus).unwrap();
        assert!((pt_minus.z + FRAC_1_SQRT_2).abs() < 1e-8);
        assert!((pt_minus.target() + FRAC_1_SQRT_2).abs() < 1e-8);
    }

    #[test]
    fn coordinates_match_quantum_expectation() {
        for seed in [3u64, 17, 40] {
            let inst = random_instance(2, 2, 2, 2, seed).unwrap();
            let image = TsirelsonImage::from_instance(&inst).unwrap();
            for a in inst.alice_settings() {
                for (b, outcome) in inst.bob_settings() {
                    let t = image.coordinates(a, b, outcome).unwrap().target();
                    let eq = inst.bob_quantum_expectation(a, b, outcome).unwrap();
                    assert!((t - eq).abs() < 1e-8, "branch ({a},{b},{outcome})");
                }
            }
        }
    }

    #[test]
    fn coordinates_reject_biased_alice() {
        // |00><00| is biased for A = Z; bias gate must fire
        let mut rho = ComplexMatrix::zeros(4, 4);
        rho.set(0, 0, num_complex::Complex::new(1.0, 0.0));
        let mut alice = BTreeMap::new();
        alice.insert(
            "0".to_owned(),
            DichotomicObservable::new("0", pauli_z()).unwrap(),
        );
        let mut bob = BTreeMap::new();
        bob.insert(
            ("0".to_owned(), Sign::Plus),
            DichotomicObservable::new("0|+1", pauli_z()).unwrap(),
        );
        let inst = crate::quantum::BipartiteInstance::new(
            QuantumState::new(2, 2, rho).unwrap(),
            alice,
            bob,
        )
        .unwrap();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        assert!(matches!(
            image.coordinates("0", "0", Sign::Plus),
            Err(Error::BiasedAlice { .. })
        ));
    }

    #[test]
    fn hyperball_membership() {
        let inst = bell_chsh_instance();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        for (b, s) in image.bob_settings().collect::<Vec<_>>() {
            assert!(image.bob_vector(b, s).unwrap().norm() <= 1.0 + 1e-8);
        }
        for a in image.alice_settings().collect::<Vec<_>>() {
            assert!(image.alice_vector(a).unwrap().norm() <= 1.0 + 1e-8);
        }
    }

    #[test]
    fn image_json_roundtrip() {
        let inst = bell_chsh_instance();
        let image = TsirelsonImage::from_instance(&inst).unwrap();
        let json = image.to_json().unwrap();
        let back = TsirelsonImage::from_data(serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.dimension(), image.dimension());
        let pt = back.coordinates("0", "0", Sign::Plus).unwrap();
        assert!((pt.x - 1.0).abs() < 1e-8);
    }
}
