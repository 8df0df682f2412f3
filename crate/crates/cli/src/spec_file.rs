//! Input file handling. A space file is a JSON document:
//!
//! ```json
//! {
//!   "outcomes": ["club", "diamond", "heart", "spade"],
//!   "probs": ["1/4", "1/4", "1/4", "1/4"],
//!   "events": { "B1": ["diamond", "heart"] },
//!   "partitions": { "pi": [["diamond", "heart"], ["club", "spade"]] }
//! }
//! ```
//!
//! Probabilities may be JSON numbers, decimal strings, or exact fractions
//! "a/b". The event name "U" and the partition names "1U" (all singletons)
//! and "0U" (one block) are predefined unless the file overrides them.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};
use superprob::{Event, OutcomeSpace, Partition};

use crate::error::CliError;

/// Largest accepted outcome count; keeps every eigensolve trivial.
pub const MAX_OUTCOMES: usize = 64;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceSpecFile {
    outcomes: Vec<String>,
    probs: Vec<ProbEntry>,
    #[serde(default)]
    events: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    partitions: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ProbEntry {
    Number(f64),
    Text(String),
}

impl ProbEntry {
    fn value(&self) -> Result<f64, CliError> {
        match self {
            ProbEntry::Number(x) => Ok(*x),
            ProbEntry::Text(s) => parse_prob_text(s),
        }
    }
}

fn parse_prob_text(s: &str) -> Result<f64, CliError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("invalid fraction numerator in {s:?}")))?;
        let den: u64 = den
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("invalid fraction denominator in {s:?}")))?;
        if den == 0 {
            return Err(CliError::Input(format!("zero denominator in {s:?}")));
        }
        Ok(num as f64 / den as f64)
    } else {
        s.parse::<f64>()
            .map_err(|_| CliError::Input(format!("invalid probability {s:?}")))
    }
}

/// A parsed and validated space file, with resolved events and partitions.
#[derive(Debug)]
pub struct LoadedSpec {
    pub space: OutcomeSpace,
    pub events: BTreeMap<String, Event>,
    pub partitions: BTreeMap<String, Partition>,
    pub path: String,
    pub sha256: String,
}

impl LoadedSpec {
    pub fn event(&self, name: &str) -> Result<&Event, CliError> {
        self.events
            .get(name)
            .ok_or_else(|| CliError::UnknownName(name.to_string()))
    }

    pub fn partition(&self, name: &str) -> Result<&Partition, CliError> {
        self.partitions
            .get(name)
            .ok_or_else(|| CliError::UnknownName(name.to_string()))
    }
}

pub fn load(path: &Path, normalize: bool) -> Result<LoadedSpec, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));

    let parsed: SpaceSpecFile = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;

    if parsed.outcomes.len() > MAX_OUTCOMES {
        return Err(CliError::Input(format!(
            "{} outcomes exceed the cap of {MAX_OUTCOMES}",
            parsed.outcomes.len()
        )));
    }

    let mut probs = parsed
        .probs
        .iter()
        .map(ProbEntry::value)
        .collect::<Result<Vec<f64>, CliError>>()?;
    if normalize {
        for (i, &w) in probs.iter().enumerate() {
            if !w.is_finite() || w < 0.0 {
                return Err(CliError::Input(format!(
                    "--normalize requires nonnegative weights, found {w} at index {i}"
                )));
            }
        }
        let total: f64 = probs.iter().sum();
        if total <= 0.0 {
            return Err(CliError::Input(
                "--normalize requires a positive weight sum".to_string(),
            ));
        }
        for w in probs.iter_mut() {
            *w /= total;
        }
    }

    let space = OutcomeSpace::new(parsed.outcomes, probs)?;

    let mut events = BTreeMap::new();
    for (name, labels) in &parsed.events {
        let event = space
            .event_from_labels(labels)
            .map_err(|e| CliError::Input(format!("event {name:?}: {e}")))?;
        events.insert(name.clone(), event);
    }
    events
        .entry("U".to_string())
        .or_insert_with(|| space.full_event());

    let mut partitions = BTreeMap::new();
    for (name, blocks) in &parsed.partitions {
        let blocks = blocks
            .iter()
            .map(|labels| space.event_from_labels(labels))
            .collect::<Result<Vec<Event>, _>>()
            .map_err(|e| CliError::Input(format!("partition {name:?}: {e}")))?;
        let partition = Partition::new(&space, blocks)
            .map_err(|e| CliError::Input(format!("partition {name:?}: {e}")))?;
        partitions.insert(name.clone(), partition);
    }
    partitions
        .entry("1U".to_string())
        .or_insert_with(|| Partition::discrete(&space));
    partitions
        .entry("0U".to_string())
        .or_insert_with(|| Partition::indiscrete(&space));

    Ok(LoadedSpec {
        space,
        events,
        partitions,
        path: path.display().to_string(),
        sha256,
    })
}
