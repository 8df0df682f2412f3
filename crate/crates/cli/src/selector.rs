//! Density-matrix target selectors: `discrete:EVENT`, `superposition:EVENT`,
//! or `partition:NAME`, where the name refers to a definition in the input
//! file (or a predefined one).

use std::fmt;
use std::str::FromStr;

use superprob::DensityMatrix;

use crate::error::CliError;
use crate::spec_file::LoadedSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhoSelector {
    Discrete(String),
    Superposition(String),
    Partition(String),
}

impl FromStr for RhoSelector {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.split_once(':') {
            Some(("discrete", name)) if !name.is_empty() => {
                Ok(RhoSelector::Discrete(name.to_string()))
            }
            Some(("superposition", name)) if !name.is_empty() => {
                Ok(RhoSelector::Superposition(name.to_string()))
            }
            Some(("partition", name)) if !name.is_empty() => {
                Ok(RhoSelector::Partition(name.to_string()))
            }
            _ => Err(CliError::Input(format!(
                "invalid target {s:?}; expected discrete:EVENT, superposition:EVENT, or partition:NAME"
            ))),
        }
    }
}

impl fmt::Display for RhoSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoSelector::Discrete(name) => write!(f, "discrete:{name}"),
            RhoSelector::Superposition(name) => write!(f, "superposition:{name}"),
            RhoSelector::Partition(name) => write!(f, "partition:{name}"),
        }
    }
}

impl RhoSelector {
    /// The event name this selector conditions on, if it is event-based.
    pub fn event_name(&self) -> Option<&str> {
        match self {
            RhoSelector::Discrete(name) | RhoSelector::Superposition(name) => Some(name),
            RhoSelector::Partition(_) => None,
        }
    }

    pub fn resolve(&self, spec: &LoadedSpec) -> Result<DensityMatrix, CliError> {
        match self {
            RhoSelector::Discrete(name) => Ok(DensityMatrix::discrete(spec.event(name)?)?),
            RhoSelector::Superposition(name) => {
                Ok(DensityMatrix::superposition(spec.event(name)?)?)
            }
            RhoSelector::Partition(name) => Ok(DensityMatrix::partition(spec.partition(name)?)),
        }
    }
}
