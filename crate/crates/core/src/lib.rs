//! Finite probability spaces extended with superposition events.
//!
//! An ordinary event keeps its outcomes distinguished; a superposition event
//! blends them together, staying definite only on what they share. Both kinds
//! are represented by density matrices, probabilities come from the trace
//! formula `Pr(T|S) = tr[P_T rho(S)]`, and the squared amplitude rule for
//! outcome probabilities falls out of the rank-1 structure of the
//! superposition matrices as an identity.
//!
//! ```
//! use superprob::{DensityMatrix, OutcomeSpace};
//!
//! let coin = OutcomeSpace::new(vec!["H".into(), "T".into()], vec![0.5, 0.5])?;
//! let blended = DensityMatrix::superposition(&coin.full_event())?;
//! let heads = coin.event([0])?;
//!
//! assert!(blended.is_pure());
//! assert!((blended.prob_trace(&heads)? - 0.5).abs() < 1e-15);
//!
//! let amplitude = blended.recover_amplitude()?;
//! assert!((amplitude.entry(0) - 0.5f64.sqrt()).abs() < 1e-12);
//! # Ok::<(), superprob::Error>(())
//! ```

pub mod error;
pub mod linalg;
pub mod prob;
pub mod random;
pub mod sampler;
pub mod superposition;

pub use error::{Error, Result};
pub use linalg::{mat_mul, sym_eigen, Matrix, Spectrum, SymMatrix, Vector};
pub use prob::{conditional_probability, Event, OutcomeSpace, Partition};
pub use sampler::{
    deviation_bound, indistinguishability_report, measure_once, run_experiment,
    run_experiment_sharded, EmpiricalResult, IndistinguishabilityReport, SplitMix64, TrialConfig,
    Verdict,
};
pub use superposition::{
    projection, AmplitudeVector, BinaryRelation, DensityKind, DensityMatrix, Provenance,
    RecoveredAmplitude,
};
