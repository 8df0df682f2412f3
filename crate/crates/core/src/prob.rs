//! Outcome spaces, events, and partitions with classical set-based
//! probability. This layer is the oracle that every matrix-based probability
//! elsewhere in the crate is checked against.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Vector;

/// Ingestion tolerance on |sum(p) - 1|.
pub const PROB_SUM_TOL: f64 = 1e-9;

#[derive(Debug)]
struct SpaceInner {
    labels: Vec<String>,
    probs: Vec<f64>,
}

/// A finite outcome space: distinct labels with strictly positive point
/// probabilities summing to 1.
///
/// Outcome identity is the index; labels are presentation-only. Cloning is
/// cheap and clones refer to the same underlying space.
#[derive(Debug, Clone)]
pub struct OutcomeSpace {
    inner: Arc<SpaceInner>,
}

impl PartialEq for OutcomeSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.labels == other.inner.labels && self.inner.probs == other.inner.probs)
    }
}

impl Eq for OutcomeSpace {}

impl OutcomeSpace {
    pub fn new(labels: Vec<String>, probs: Vec<f64>) -> Result<Self> {
        if labels.len() != probs.len() {
            return Err(Error::LengthMismatch {
                labels: labels.len(),
                probs: probs.len(),
            });
        }
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        for (index, &value) in probs.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFiniteEntry { index, value });
            }
            if value <= 0.0 {
                return Err(Error::NonPositiveProbability { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self {
            inner: Arc::new(SpaceInner { labels, probs }),
        })
    }

    /// Equiprobable space over the given labels.
    pub fn uniform(labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptySpace);
        }
        Self::new(labels, vec![1.0 / n as f64; n])
    }

    pub fn n(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.inner.probs
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn prob(&self, i: usize) -> f64 {
        self.inner.probs[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    /// Event from outcome indices.
    pub fn event<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<Event> {
        let mut members = BTreeSet::new();
        for index in indices {
            if index >= self.n() {
                return Err(Error::IndexOutOfRange {
                    index,
                    len: self.n(),
                });
            }
            members.insert(index);
        }
        Ok(Event {
            space: self.clone(),
            members,
        })
    }

    /// Event from outcome labels.
    pub fn event_from_labels<S: AsRef<str>, I: IntoIterator<Item = S>>(
        &self,
        labels: I,
    ) -> Result<Event> {
        let mut members = BTreeSet::new();
        for label in labels {
            let label = label.as_ref();
            match self.index_of(label) {
                Some(i) => {
                    members.insert(i);
                }
                None => {
                    return Err(Error::UnknownLabel {
                        label: label.to_string(),
                    })
                }
            }
        }
        Ok(Event {
            space: self.clone(),
            members,
        })
    }

    pub fn singleton(&self, index: usize) -> Result<Event> {
        self.event([index])
    }

    /// The full event U.
    pub fn full_event(&self) -> Event {
        self.event(0..self.n()).expect("indices in range")
    }

    pub fn empty_event(&self) -> Event {
        Event {
            space: self.clone(),
            members: BTreeSet::new(),
        }
    }
}

/// A subset of outcomes of one space.
///
/// Empty events are permitted as values (intersections produce them); every
/// conditioning operation rejects them.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    space: OutcomeSpace,
    members: BTreeSet<usize>,
}

impl Event {
    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn member_set(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(&index)
    }

    /// Pr(S): the sum of its members' point probabilities. 0 for the empty event.
    pub fn probability(&self) -> f64 {
        self.members().map(|i| self.space.prob(i)).sum()
    }

    /// Set intersection; may be empty.
    pub fn intersect(&self, other: &Event) -> Result<Event> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(Event {
            space: self.space.clone(),
            members: self.members.intersection(&other.members).copied().collect(),
        })
    }

    /// The 0/1 indicator vector of membership, in outcome order.
    pub fn characteristic_vector(&self) -> Vector {
        Vector::new(
            (0..self.space.n())
                .map(|i| if self.contains(i) { 1.0 } else { 0.0 })
                .collect(),
        )
        .expect("indicator entries are finite")
    }

    pub fn member_labels(&self) -> Vec<&str> {
        self.members().map(|i| self.space.label(i)).collect()
    }
}

/// Classical conditional probability Pr(T|S) = Pr(T n S) / Pr(S).
///
/// The conditioning event must be non-empty; point probabilities are strictly
/// positive, so Pr(S) > 0 follows.
pub fn conditional_probability(t: &Event, s: &Event) -> Result<f64> {
    if t.space != s.space {
        return Err(Error::SpaceMismatch);
    }
    if s.is_empty() {
        return Err(Error::ZeroProbabilityCondition);
    }
    Ok(t.intersect(s)?.probability() / s.probability())
}

/// Disjoint non-empty blocks covering the whole space.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    space: OutcomeSpace,
    blocks: Vec<Event>,
}

impl Partition {
    pub fn new(space: &OutcomeSpace, blocks: Vec<Event>) -> Result<Self> {
        let mut seen: Vec<Option<usize>> = vec![None; space.n()];
        let mut covered = 0usize;
        for (position, block) in blocks.iter().enumerate() {
            if block.space() != space {
                return Err(Error::SpaceMismatch);
            }
            if block.is_empty() {
                return Err(Error::EmptyBlock { position });
            }
            for i in block.members() {
                if let Some(first) = seen[i] {
                    return Err(Error::OverlappingBlocks {
                        first,
                        second: position,
                    });
                }
                seen[i] = Some(position);
                covered += 1;
            }
        }
        if covered != space.n() {
            return Err(Error::IncompleteCover);
        }
        Ok(Self {
            space: space.clone(),
            blocks,
        })
    }

    /// The all-singletons partition (top of the refinement order).
    pub fn discrete(space: &OutcomeSpace) -> Self {
        let blocks = (0..space.n())
            .map(|i| space.singleton(i).expect("index in range"))
            .collect();
        Self {
            space: space.clone(),
            blocks,
        }
    }

    /// The single-block partition {U} (bottom of the refinement order).
    pub fn indiscrete(space: &OutcomeSpace) -> Self {
        Self {
            space: space.clone(),
            blocks: vec![space.full_event()],
        }
    }

    pub fn space(&self) -> &OutcomeSpace {
        &self.space
    }

    pub fn blocks(&self) -> &[Event] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// True iff every block of `self` is contained in some block of `coarse`.
    pub fn refines(&self, coarse: &Partition) -> Result<bool> {
        if self.space != coarse.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(self.blocks.iter().all(|fine_block| {
            coarse
                .blocks
                .iter()
                .any(|coarse_block| fine_block.member_set().is_subset(coarse_block.member_set()))
        }))
    }
}
