//! Seeded generators for randomized verification: spaces, events,
//! partitions, refinements, and symmetric matrices. Used by the CLI's
//! `verify` command and by the test suites.

use crate::linalg::SymMatrix;
use crate::prob::{Event, OutcomeSpace, Partition};
use crate::sampler::SplitMix64;

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("u{i}")).collect()
}

/// Equiprobable space with labels u1..un.
pub fn uniform_space(n: usize) -> OutcomeSpace {
    OutcomeSpace::uniform(numbered_labels(n)).expect("n >= 1")
}

/// Space with strictly positive random probabilities, bounded away from zero
/// and normalized.
pub fn random_space(n: usize, rng: &mut SplitMix64) -> OutcomeSpace {
    let weights: Vec<f64> = (0..n).map(|_| 0.05 + rng.next_f64()).collect();
    let total: f64 = weights.iter().sum();
    let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
    OutcomeSpace::new(numbered_labels(n), probs).expect("normalized positive weights")
}

/// Non-empty random event: each outcome joins with probability 1/2, rerolled
/// until the result is non-empty.
pub fn random_event(space: &OutcomeSpace, rng: &mut SplitMix64) -> Event {
    loop {
        let members: Vec<usize> = (0..space.n()).filter(|_| rng.next_f64() < 0.5).collect();
        if !members.is_empty() {
            return space.event(members).expect("indices in range");
        }
    }
}

/// Non-empty random event with at least `min_len` members.
pub fn random_event_at_least(
    space: &OutcomeSpace,
    min_len: usize,
    rng: &mut SplitMix64,
) -> Event {
    assert!(min_len <= space.n(), "min_len exceeds space size");
    loop {
        let event = random_event(space, rng);
        if event.len() >= min_len {
            return event;
        }
    }
}

/// Uniform-ish random partition built from a restricted growth string:
/// outcome 0 opens block 0, each later outcome joins an existing block or
/// opens a new one.
pub fn random_partition(space: &OutcomeSpace, rng: &mut SplitMix64) -> Partition {
    let n = space.n();
    let mut assignment = vec![0usize; n];
    let mut blocks_so_far = 1usize;
    for slot in assignment.iter_mut().skip(1) {
        let choice = rng.next_below(blocks_so_far as u64 + 1) as usize;
        *slot = choice;
        if choice == blocks_so_far {
            blocks_so_far += 1;
        }
    }
    partition_from_assignment(space, &assignment, blocks_so_far)
}

/// Randomly splits each block of `coarse` into sub-blocks. The result always
/// refines the input.
pub fn random_refinement(coarse: &Partition, rng: &mut SplitMix64) -> Partition {
    let space = coarse.space();
    let mut blocks = Vec::new();
    for block in coarse.blocks() {
        let members: Vec<usize> = block.members().collect();
        let mut sub_assignment = vec![0usize; members.len()];
        let mut sub_blocks = 1usize;
        for slot in sub_assignment.iter_mut().skip(1) {
            let choice = rng.next_below(sub_blocks as u64 + 1) as usize;
            *slot = choice;
            if choice == sub_blocks {
                sub_blocks += 1;
            }
        }
        for sub in 0..sub_blocks {
            let indices: Vec<usize> = members
                .iter()
                .zip(&sub_assignment)
                .filter(|(_, &a)| a == sub)
                .map(|(&m, _)| m)
                .collect();
            blocks.push(space.event(indices).expect("indices in range"));
        }
    }
    Partition::new(space, blocks).expect("splitting blocks preserves partition validity")
}

fn partition_from_assignment(
    space: &OutcomeSpace,
    assignment: &[usize],
    num_blocks: usize,
) -> Partition {
    let blocks: Vec<Event> = (0..num_blocks)
        .map(|b| {
            let indices: Vec<usize> = assignment
                .iter()
                .enumerate()
                .filter(|(_, &a)| a == b)
                .map(|(i, _)| i)
                .collect();
            space.event(indices).expect("indices in range")
        })
        .collect();
    Partition::new(space, blocks).expect("growth strings yield valid partitions")
}

/// Symmetric matrix with entries uniform in [-1, 1].
pub fn random_symmetric_matrix(n: usize, rng: &mut SplitMix64) -> SymMatrix {
    SymMatrix::from_fn(n, |_, _| 2.0 * rng.next_f64() - 1.0)
}
