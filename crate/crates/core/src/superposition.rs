//! Density matrices for discrete events, superposition events, and
//! partitions, together with the trace-formula probabilities and the Born
//! rule identity they satisfy.
//!
//! A discrete event S keeps its outcomes distinguished and is represented by
//! the diagonal matrix with entries p_i / Pr(S) on S. The superposition event
//! over the same S blends its outcomes together; it is represented by the
//! rank-1 outer product of the amplitude vector whose i-th entry is
//! sqrt(p_i / Pr(S)) on S. Both matrices assign the same probabilities
//! through tr[P_T rho]; they differ in their off-diagonal structure, purity,
//! and spectra.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{mat_mul, sym_eigen, Spectrum, SymMatrix, Vector};
use crate::prob::{Event, OutcomeSpace, Partition};

/// Default max-norm tolerance on rho^2 - rho for purity decisions.
pub const PURITY_TOL: f64 = 1e-10;
/// Allowed deviation of the top eigenvalue from 1 when recovering an
/// amplitude vector from a pure density matrix.
pub const RECOVERY_EIGENVALUE_TOL: f64 = 1e-8;
/// Recovered entries above this threshold count as support members; entries
/// below its negation are flagged (they cannot arise from a genuine
/// superposition-event matrix).
pub const RECOVERY_SUPPORT_TOL: f64 = 1e-9;

/// A binary relation on the outcomes of one space, as a set of ordered index
/// pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryRelation {
    space: OutcomeSpace,
    pairs: BTreeSet<(usize, usize)>,
}

impl BinaryRelation {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(
        space: &OutcomeSpace,
        pairs: I,
    ) -> Result<Self> {
        let n = space.n();
        let mut set = BTreeSet::new();
        for (j, k) in pairs {
            if j >= n {
                return Err(Error::IndexOutOfRange { index: j, len: n });
            }
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, len: n });
            }
            set.insert((j, k));
        }
        Ok(Self {
            space: space.clone(),
            pairs: set,
        })
    }

    /// The diagonal relation of an event: pairs (i,i) for members i.
    pub fn diagonal(event: &Event) -> Self {
        Self {
            space: event.space().clone(),
            pairs: event.members().map(|i| (i, i)).collect(),
        }
    }

    /// The full product relation S x S of an event.
    pub fn product(event: &Event) -> Self {
        Self {
            space: event.space().clone(),
            pairs: event
                .members()
                .flat_map(|j| event.members().map(move |k| (j, k)))
                .collect(),
        }
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The 0/1 incidence matrix. Only relations closed under pair swap fit in
    /// symmetric storage; others are rejected.
    pub fn incidence_matrix(&self) -> Result<SymMatrix> {
        for &(j, k) in &self.pairs {
            if !self.pairs.contains(&(k, j)) {
                return Err(Error::AsymmetricRelation { j, k });
            }
        }
        let mut m = SymMatrix::zeros(self.space.n());
        for &(j, k) in &self.pairs {
            m.set(j, k, 1.0);
        }
        Ok(m)
    }
}

/// The diagonal projection matrix with entries chi_S(u_i). Idempotent exactly.
pub fn projection(event: &Event) -> SymMatrix {
    let chi = event.characteristic_vector();
    SymMatrix::from_diagonal(chi.as_slice()).expect("indicator entries are finite")
}

/// The normalized amplitude vector of a non-empty event: entry i is
/// sqrt(p_i / Pr(S)) for members, 0 elsewhere. Squared entries are the
/// conditional probabilities Pr({u_i} | S).
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeVector {
    support: Event,
    entries: Vector,
}

impl AmplitudeVector {
    pub fn new(event: &Event) -> Result<Self> {
        if event.is_empty() {
            return Err(Error::EmptyConditioningEvent);
        }
        let space = event.space();
        let total = event.probability();
        let entries = Vector::new(
            (0..space.n())
                .map(|i| {
                    if event.contains(i) {
                        (space.prob(i) / total).sqrt()
                    } else {
                        0.0
                    }
                })
                .collect(),
        )?;
        Ok(Self {
            support: event.clone(),
            entries,
        })
    }

    pub fn space(&self) -> &OutcomeSpace {
        self.support.space()
    }

    pub fn support(&self) -> &Event {
        &self.support
    }

    pub fn entries(&self) -> &Vector {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> f64 {
        self.entries[i]
    }

    /// The squared i-th entry: the probability of outcome i conditioned on
    /// the superposition event over the support.
    pub fn born_probability(&self, i: usize) -> Result<f64> {
        if i >= self.entries.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.entries.len(),
            });
        }
        Ok(self.entries[i] * self.entries[i])
    }
}

/// Which construction produced a density matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityKind {
    DiscreteEvent,
    SuperpositionEvent,
    Partition,
}

impl DensityKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DensityKind::DiscreteEvent => "discrete-event",
            DensityKind::SuperpositionEvent => "superposition-event",
            DensityKind::Partition => "partition",
        }
    }
}

/// The event or partition a density matrix was built from. Metadata only;
/// it never affects the numerics.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    DiscreteEvent(Event),
    SuperpositionEvent(Event),
    Partition(Partition),
}

/// A symmetric, trace-1, positive-semidefinite real matrix tagged with the
/// construction that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    space: OutcomeSpace,
    matrix: SymMatrix,
    provenance: Provenance,
}

impl DensityMatrix {
    /// rho(S): the diagonal matrix with entries p_i / Pr(S) on S. A mixture
    /// unless S is a singleton.
    pub fn discrete(event: &Event) -> Result<Self> {
        if event.is_empty() {
            return Err(Error::EmptyConditioningEvent);
        }
        let space = event.space();
        let total = event.probability();
        let diagonal: Vec<f64> = (0..space.n())
            .map(|i| {
                if event.contains(i) {
                    space.prob(i) / total
                } else {
                    0.0
                }
            })
            .collect();
        Ok(Self {
            space: space.clone(),
            matrix: SymMatrix::from_diagonal(&diagonal)?,
            provenance: Provenance::DiscreteEvent(event.clone()),
        })
    }

    /// rho(sum S): the rank-1 outer product of the amplitude vector with
    /// itself. Always pure.
    pub fn superposition(event: &Event) -> Result<Self> {
        let amplitude = AmplitudeVector::new(event)?;
        Ok(Self {
            space: event.space().clone(),
            matrix: amplitude.entries().symmetric_outer(),
            provenance: Provenance::SuperpositionEvent(event.clone()),
        })
    }

    /// rho(pi): the probability-weighted sum of the superposition matrices of
    /// the blocks, accumulated term by term.
    pub fn partition(partition: &Partition) -> Self {
        let space = partition.space();
        let mut matrix = SymMatrix::zeros(space.n());
        for block in partition.blocks() {
            let amplitude = AmplitudeVector::new(block).expect("partition blocks are non-empty");
            matrix
                .add_scaled(&amplitude.entries().symmetric_outer(), block.probability())
                .expect("blocks share the partition's space");
        }
        Self {
            space: space.clone(),
            matrix,
            provenance: Provenance::Partition(partition.clone()),
        }
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn diagonal(&self) -> Vec<f64> {
        self.matrix.diagonal()
    }

    pub fn kind(&self) -> DensityKind {
        match &self.provenance {
            Provenance::DiscreteEvent(_) => DensityKind::DiscreteEvent,
            Provenance::SuperpositionEvent(_) => DensityKind::SuperpositionEvent,
            Provenance::Partition(_) => DensityKind::Partition,
        }
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The trace formula: tr[P_T rho].
    pub fn prob_trace(&self, event: &Event) -> Result<f64> {
        if event.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(mat_mul(&projection(event), &self.matrix)?.trace())
    }

    /// True iff rho^2 = rho within `PURITY_TOL` in the max-norm.
    pub fn is_pure(&self) -> bool {
        self.is_pure_with_tolerance(PURITY_TOL)
    }

    pub fn is_pure_with_tolerance(&self, tol: f64) -> bool {
        self.purity_deviation() <= tol
    }

    /// Max-norm of rho^2 - rho.
    pub fn purity_deviation(&self) -> f64 {
        let squared = mat_mul(&self.matrix, &self.matrix).expect("square matrix");
        squared
            .max_abs_diff(&self.matrix.to_matrix())
            .expect("same dimensions")
    }

    /// Eigendecomposition of the matrix.
    pub fn spectrum(&self) -> Result<Spectrum> {
        sym_eigen(&self.matrix)
    }

    /// The eigenvalue multiset this construction is expected to have, sorted
    /// descending: conditional probabilities for a discrete event, a single 1
    /// for a superposition event, block probabilities for a partition.
    pub fn predicted_spectrum(&self) -> Vec<f64> {
        let n = self.space.n();
        let mut values = match &self.provenance {
            Provenance::DiscreteEvent(event) => {
                let total = event.probability();
                event.members().map(|i| self.space.prob(i) / total).collect()
            }
            Provenance::SuperpositionEvent(_) => vec![1.0],
            Provenance::Partition(partition) => partition
                .blocks()
                .iter()
                .map(|block| block.probability())
                .collect(),
        };
        values.resize(n, 0.0);
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }

    /// Recovers the amplitude vector of a pure matrix as the eigenvector of
    /// the eigenvalue 1, sign-normalized so the entry sum is non-negative.
    pub fn recover_amplitude(&self) -> Result<RecoveredAmplitude> {
        let spectrum = self.spectrum()?;
        let top = spectrum.eigenvalues()[0];
        if (top - 1.0).abs() > RECOVERY_EIGENVALUE_TOL {
            return Err(Error::NotPure {
                top_eigenvalue: top,
            });
        }
        let raw = spectrum.eigenvector(0);
        let sum: f64 = raw.as_slice().iter().sum();
        let sign = if sum < 0.0 { -1.0 } else { 1.0 };
        let entries =
            Vector::new(raw.as_slice().iter().map(|&v| sign * v).collect()).expect("finite");

        let support_indices: Vec<usize> = entries
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > RECOVERY_SUPPORT_TOL)
            .map(|(i, _)| i)
            .collect();
        let negative_entries: Vec<usize> = entries
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < -RECOVERY_SUPPORT_TOL)
            .map(|(i, _)| i)
            .collect();
        let support = self.space.event(support_indices)?;

        Ok(RecoveredAmplitude {
            support,
            entries,
            negative_entries,
        })
    }
}

/// Result of amplitude recovery from a pure density matrix.
///
/// `negative_entries` lists indices whose entry falls below the negated
/// support threshold; a genuine superposition-event matrix never produces
/// them, so they are surfaced as data rather than an error.
#[derive(Debug, Clone, PartialEq)]
pub struct RecoveredAmplitude {
    support: Event,
    entries: Vector,
    negative_entries: Vec<usize>,
}

impl RecoveredAmplitude {
    pub fn support(&self) -> &Event {
        &self.support
    }

    pub fn entries(&self) -> &Vector {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> f64 {
        self.entries[i]
    }

    pub fn negative_entries(&self) -> &[usize] {
        &self.negative_entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn coin() -> OutcomeSpace {
        OutcomeSpace::new(labels(&["H", "T"]), vec![0.5, 0.5]).unwrap()
    }

    fn cards() -> OutcomeSpace {
        OutcomeSpace::uniform(labels(&["club", "diamond", "heart", "spade"])).unwrap()
    }

    fn weighted() -> OutcomeSpace {
        OutcomeSpace::new(labels(&["u1", "u2", "u3", "u4"]), vec![0.1, 0.2, 0.3, 0.4]).unwrap()
    }

    fn red_suits(space: &OutcomeSpace) -> Event {
        space.event([1, 2]).unwrap()
    }

    #[test]
    fn diagonal_relation_examples() {
        let space = cards();
        let rel = BinaryRelation::diagonal(&red_suits(&space));
        assert_eq!(
            rel.pairs().iter().copied().collect::<Vec<_>>(),
            vec![(1, 1), (2, 2)]
        );
        assert!(BinaryRelation::diagonal(&space.empty_event()).is_empty());

        let coin = coin();
        let rel = BinaryRelation::diagonal(&coin.full_event());
        assert_eq!(
            rel.pairs().iter().copied().collect::<Vec<_>>(),
            vec![(0, 0), (1, 1)]
        );
    }

    #[test]
    fn product_relation_examples() {
        let space = cards();
        let rel = BinaryRelation::product(&red_suits(&space));
        assert_eq!(rel.len(), 4);
        assert!(rel.pairs().contains(&(1, 2)));
        assert!(rel.pairs().contains(&(2, 1)));

        let three = space.event([0, 1, 3]).unwrap();
        assert_eq!(BinaryRelation::product(&three).len(), 9);

        let single = space.singleton(2).unwrap();
        assert_eq!(BinaryRelation::product(&single).len(), 1);
    }

    #[test]
    fn incidence_matrix_product_block() {
        let space = cards();
        let m = BinaryRelation::product(&red_suits(&space))
            .incidence_matrix()
            .unwrap();
        for j in 0..4 {
            for k in 0..4 {
                let expected = if (1..=2).contains(&j) && (1..=2).contains(&k) {
                    1.0
                } else {
                    0.0
                };
                assert_eq!(m.get(j, k), expected);
            }
        }
    }

    #[test]
    fn incidence_matrix_diagonal_and_empty() {
        let space = cards();
        let m = BinaryRelation::diagonal(&space.full_event())
            .incidence_matrix()
            .unwrap();
        assert_eq!(m, SymMatrix::identity(4));
        let m = BinaryRelation::new(&space, [])
            .unwrap()
            .incidence_matrix()
            .unwrap();
        assert_eq!(m, SymMatrix::zeros(4));
    }

    #[test]
    fn incidence_matrix_rejects_asymmetric_relation() {
        let space = coin();
        let rel = BinaryRelation::new(&space, [(0, 1)]).unwrap();
        assert_eq!(
            rel.incidence_matrix(),
            Err(Error::AsymmetricRelation { j: 0, k: 1 })
        );
    }

    #[test]
    fn relation_rejects_out_of_range() {
        let space = coin();
        assert!(matches!(
            BinaryRelation::new(&space, [(0, 5)]),
            Err(Error::IndexOutOfRange { index: 5, .. })
        ));
    }

    #[test]
    fn projection_examples() {
        let space = coin();
        let p = projection(&space.event([0]).unwrap());
        assert_eq!(p.to_rows(), vec![vec![1.0, 0.0], vec![0.0, 0.0]]);
        assert_eq!(projection(&space.full_event()), SymMatrix::identity(2));
        assert_eq!(projection(&space.empty_event()), SymMatrix::zeros(2));
    }

    #[test]
    fn projection_is_idempotent_exactly() {
        let space = weighted();
        let p = projection(&space.event([0, 2]).unwrap());
        let squared = mat_mul(&p, &p).unwrap();
        assert_eq!(squared.max_abs_diff(&p.to_matrix()).unwrap(), 0.0);
    }

    #[test]
    fn amplitude_vector_equiprobable_block() {
        let space = cards();
        let amp = AmplitudeVector::new(&red_suits(&space)).unwrap();
        let x = std::f64::consts::FRAC_1_SQRT_2;
        for (i, expected) in [0.0, x, x, 0.0].into_iter().enumerate() {
            assert!((amp.entry(i) - expected).abs() <= 1e-15);
        }
    }

    #[test]
    fn amplitude_vector_singleton_is_basis_vector() {
        let space = weighted();
        let amp = AmplitudeVector::new(&space.singleton(2).unwrap()).unwrap();
        assert_eq!(amp.entries().as_slice(), &[0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn amplitude_vector_weighted_entries() {
        // squared entries must match the classical conditional probabilities
        let space = weighted();
        let s = space.event([1, 3]).unwrap();
        let amp = AmplitudeVector::new(&s).unwrap();
        assert!((amp.entry(1) - (1.0f64 / 3.0).sqrt()).abs() <= 1e-15);
        assert!((amp.entry(3) - (2.0f64 / 3.0).sqrt()).abs() <= 1e-15);
        assert_eq!(amp.entry(0), 0.0);
        for i in 0..4 {
            let t = space.singleton(i).unwrap();
            let oracle = crate::prob::conditional_probability(&t, &s).unwrap();
            assert!((amp.born_probability(i).unwrap() - oracle).abs() <= 1e-15);
        }
    }

    #[test]
    fn amplitude_vector_is_normalized() {
        let space = weighted();
        let amp = AmplitudeVector::new(&space.event([0, 1, 2]).unwrap()).unwrap();
        let norm = amp.entries().inner(amp.entries()).unwrap();
        assert!((norm - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn amplitude_vector_rejects_empty_event() {
        let space = coin();
        assert_eq!(
            AmplitudeVector::new(&space.empty_event()),
            Err(Error::EmptyConditioningEvent)
        );
    }

    #[test]
    fn born_probability_index_out_of_range() {
        let space = coin();
        let amp = AmplitudeVector::new(&space.full_event()).unwrap();
        assert_eq!(
            amp.born_probability(2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn rho_discrete_examples() {
        let coin = coin();
        let rho = DensityMatrix::discrete(&coin.full_event()).unwrap();
        assert_eq!(rho.diagonal(), vec![0.5, 0.5]);
        assert_eq!(rho.matrix().get(0, 1), 0.0);
        assert_eq!(rho.kind(), DensityKind::DiscreteEvent);

        let cards = cards();
        let rho = DensityMatrix::discrete(&red_suits(&cards)).unwrap();
        assert_eq!(rho.diagonal(), vec![0.0, 0.5, 0.5, 0.0]);

        let single = DensityMatrix::discrete(&cards.singleton(1).unwrap()).unwrap();
        assert_eq!(
            single.matrix(),
            &projection(&cards.singleton(1).unwrap())
        );
        assert!(single.is_pure());
    }

    #[test]
    fn rho_superposition_card_block() {
        let space = cards();
        let rho = DensityMatrix::superposition(&red_suits(&space)).unwrap();
        for j in 0..4 {
            for k in 0..4 {
                let expected = if (1..=2).contains(&j) && (1..=2).contains(&k) {
                    0.5
                } else {
                    0.0
                };
                assert!((rho.matrix().get(j, k) - expected).abs() <= 1e-15);
            }
        }
        assert_eq!(rho.kind(), DensityKind::SuperpositionEvent);
    }

    #[test]
    fn rho_superposition_coin_full() {
        let space = coin();
        let rho = DensityMatrix::superposition(&space.full_event()).unwrap();
        for j in 0..2 {
            for k in 0..2 {
                assert!((rho.matrix().get(j, k) - 0.5).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn rho_superposition_weighted_entries() {
        // entry (j,k) = sqrt(p_j p_k) / Pr(S); cross-checked against the
        // outer product of the amplitude vector
        let space = weighted();
        let s = space.event([1, 3]).unwrap();
        let rho = DensityMatrix::superposition(&s).unwrap();
        assert!((rho.matrix().get(1, 1) - 1.0 / 3.0).abs() <= 1e-15);
        assert!((rho.matrix().get(3, 3) - 2.0 / 3.0).abs() <= 1e-15);
        let expected = (0.2f64 * 0.4).sqrt() / 0.6;
        assert!((expected - 0.4714045207910317).abs() <= 1e-15);
        assert!((rho.matrix().get(1, 3) - expected).abs() <= 1e-15);

        let amp = AmplitudeVector::new(&s).unwrap();
        let outer = amp.entries().symmetric_outer();
        assert_eq!(rho.matrix().max_abs_diff(&outer).unwrap(), 0.0);
    }

    #[test]
    fn rho_rejects_empty_event() {
        let space = coin();
        assert!(matches!(
            DensityMatrix::discrete(&space.empty_event()),
            Err(Error::EmptyConditioningEvent)
        ));
        assert!(matches!(
            DensityMatrix::superposition(&space.empty_event()),
            Err(Error::EmptyConditioningEvent)
        ));
    }

    #[test]
    fn rho_partition_endpoints() {
        let space = weighted();
        let top = DensityMatrix::partition(&Partition::discrete(&space));
        let discrete_full = DensityMatrix::discrete(&space.full_event()).unwrap();
        assert!(top.matrix().max_abs_diff(discrete_full.matrix()).unwrap() <= 1e-12);

        let bottom = DensityMatrix::partition(&Partition::indiscrete(&space));
        let superposed_full = DensityMatrix::superposition(&space.full_event()).unwrap();
        assert!(
            bottom
                .matrix()
                .max_abs_diff(superposed_full.matrix())
                .unwrap()
                <= 1e-12
        );
    }

    #[test]
    fn rho_partition_card_blocks() {
        // hand expansion: each 2x2 block is Pr(B) * 1/2 = 1/4
        let space = cards();
        let pi = Partition::new(
            &space,
            vec![space.event([1, 2]).unwrap(), space.event([0, 3]).unwrap()],
        )
        .unwrap();
        let rho = DensityMatrix::partition(&pi);
        for j in 0..4 {
            for k in 0..4 {
                let in_b1 = [1, 2].contains(&j) && [1, 2].contains(&k);
                let in_b2 = [0, 3].contains(&j) && [0, 3].contains(&k);
                let expected = if in_b1 || in_b2 { 0.25 } else { 0.0 };
                assert!(
                    (rho.matrix().get(j, k) - expected).abs() <= 1e-15,
                    "entry ({j},{k})"
                );
            }
        }
        assert_eq!(rho.kind(), DensityKind::Partition);
    }

    #[test]
    fn prob_trace_coin_examples() {
        let space = coin();
        let heads = space.event([0]).unwrap();
        let discrete = DensityMatrix::discrete(&space.full_event()).unwrap();
        let superposed = DensityMatrix::superposition(&space.full_event()).unwrap();
        assert!((discrete.prob_trace(&heads).unwrap() - 0.5).abs() <= 1e-15);
        assert!((superposed.prob_trace(&heads).unwrap() - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn prob_trace_full_event_is_trace() {
        let space = weighted();
        let s = space.event([1, 3]).unwrap();
        for rho in [
            DensityMatrix::discrete(&s).unwrap(),
            DensityMatrix::superposition(&s).unwrap(),
            DensityMatrix::partition(&Partition::discrete(&space)),
        ] {
            assert!((rho.prob_trace(&space.full_event()).unwrap() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn prob_trace_space_mismatch() {
        let rho = DensityMatrix::superposition(&coin().full_event()).unwrap();
        let other = cards().event([0]).unwrap();
        assert_eq!(rho.prob_trace(&other), Err(Error::SpaceMismatch));
    }

    #[test]
    fn purity_examples() {
        let space = cards();
        let b1 = red_suits(&space);
        assert!(DensityMatrix::superposition(&b1).unwrap().is_pure());
        assert!(!DensityMatrix::discrete(&b1).unwrap().is_pure());

        // a singleton's discrete and superposition matrices coincide
        let single = space.singleton(3).unwrap();
        let d = DensityMatrix::discrete(&single).unwrap();
        let s = DensityMatrix::superposition(&single).unwrap();
        assert!(d.is_pure());
        assert!(s.is_pure());
        assert_eq!(d.matrix(), s.matrix());
    }

    #[test]
    fn recover_amplitude_round_trip_coin() {
        let space = coin();
        let rho = DensityMatrix::superposition(&space.full_event()).unwrap();
        let recovered = rho.recover_amplitude().unwrap();
        let x = std::f64::consts::FRAC_1_SQRT_2;
        assert!((recovered.entry(0) - x).abs() <= 1e-12);
        assert!((recovered.entry(1) - x).abs() <= 1e-12);
        assert_eq!(recovered.support().len(), 2);
        assert!(recovered.negative_entries().is_empty());
    }

    #[test]
    fn recover_amplitude_weighted_round_trip() {
        let space = weighted();
        let s = space.event([0, 2, 3]).unwrap();
        let rho = DensityMatrix::superposition(&s).unwrap();
        let amp = AmplitudeVector::new(&s).unwrap();
        let recovered = rho.recover_amplitude().unwrap();
        for i in 0..4 {
            assert!((recovered.entry(i) - amp.entry(i)).abs() <= 1e-8);
        }
        assert_eq!(recovered.support(), &s);
    }

    #[test]
    fn recover_amplitude_rejects_mixtures() {
        let space = weighted();
        let s = space.event([1, 3]).unwrap();
        let rho = DensityMatrix::discrete(&s).unwrap();
        match rho.recover_amplitude() {
            Err(Error::NotPure { top_eigenvalue }) => {
                assert!((top_eigenvalue - 2.0 / 3.0).abs() <= 1e-9);
            }
            other => panic!("expected NotPure, got {other:?}"),
        }
    }

    #[test]
    fn spectrum_of_discrete_event() {
        let space = weighted();
        let s = space.event([1, 3]).unwrap();
        let rho = DensityMatrix::discrete(&s).unwrap();
        let eig = rho.spectrum().unwrap().eigenvalues().to_vec();
        let predicted = rho.predicted_spectrum();
        assert_eq!(predicted, vec![2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0]);
        for (a, b) in eig.iter().zip(&predicted) {
            assert!((a - b).abs() <= 1e-9);
        }
    }

    #[test]
    fn spectrum_of_superposition_event() {
        let space = weighted();
        let rho = DensityMatrix::superposition(&space.event([0, 1, 2]).unwrap()).unwrap();
        let eig = rho.spectrum().unwrap().eigenvalues().to_vec();
        assert!((eig[0] - 1.0).abs() <= 1e-9);
        for &v in &eig[1..] {
            assert!(v.abs() <= 1e-9);
        }
        assert_eq!(rho.predicted_spectrum(), vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn spectrum_of_card_partition() {
        let space = cards();
        let pi = Partition::new(
            &space,
            vec![space.event([1, 2]).unwrap(), space.event([0, 3]).unwrap()],
        )
        .unwrap();
        let rho = DensityMatrix::partition(&pi);
        let eig = rho.spectrum().unwrap().eigenvalues().to_vec();
        let predicted = rho.predicted_spectrum();
        assert_eq!(predicted, vec![0.5, 0.5, 0.0, 0.0]);
        for (a, b) in eig.iter().zip(&predicted) {
            assert!((a - b).abs() <= 1e-9);
        }
    }
}
