use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "superprob",
    version,
    about = "Density matrices for finite probability spaces with superposition events"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Single JSON document on stdout.
    Machine,
    /// Aligned human-readable tables.
    Table,
}

#[derive(Debug, Args)]
pub struct CommonOpts {
    /// Input space file (JSON).
    pub input: PathBuf,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Machine)]
    pub format: Format,

    /// Rescale nonnegative weights to sum to 1 before validation.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a density matrix; report its entries, trace, purity, and spectrum.
    Density {
        #[command(flatten)]
        common: CommonOpts,

        /// Density-matrix target: discrete:EVENT, superposition:EVENT, or partition:NAME.
        target: String,
    },

    /// Probability of an event by the trace formula, with the classical oracle.
    Prob {
        #[command(flatten)]
        common: CommonOpts,

        /// Density-matrix target to condition on.
        target: String,

        /// Named event whose probability is computed.
        #[arg(long)]
        event: String,
    },

    /// Run the identity/property suite against the space in the input file.
    Verify {
        #[command(flatten)]
        common: CommonOpts,

        /// Random events/partitions generated per property.
        #[arg(long, default_value_t = 200)]
        trials_per_property: u32,

        /// Worst-deviation threshold for each property.
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,

        /// Seed for the random instances.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },

    /// Sample outcomes from a density matrix's measurement distribution.
    Sample {
        #[command(flatten)]
        common: CommonOpts,

        /// Density-matrix target to sample from.
        target: String,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(long, default_value_t = 10_000)]
        trials: u64,

        /// Split trials across worker shards with derived per-shard seeds.
        #[arg(long)]
        shards: Option<u32>,

        /// Run the paired mixture-vs-superposition experiment for the target event.
        #[arg(long)]
        compare_superposition: bool,
    },

    /// Eigenvalues of a density matrix against the predicted multiset.
    Spectrum {
        #[command(flatten)]
        common: CommonOpts,

        /// Density-matrix target to decompose.
        target: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Density { .. } => "density",
            Command::Prob { .. } => "prob",
            Command::Verify { .. } => "verify",
            Command::Sample { .. } => "sample",
            Command::Spectrum { .. } => "spectrum",
        }
    }

    pub fn common(&self) -> &CommonOpts {
        match self {
            Command::Density { common, .. }
            | Command::Prob { common, .. }
            | Command::Verify { common, .. }
            | Command::Sample { common, .. }
            | Command::Spectrum { common, .. } => common,
        }
    }
}
