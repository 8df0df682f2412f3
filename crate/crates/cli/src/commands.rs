use std::collections::BTreeMap;

use superprob::sampler::{
    deviation_bound, indistinguishability_report, run_experiment, run_experiment_sharded,
    EmpiricalResult, TrialConfig,
};
use superprob::superposition::PURITY_TOL;
use superprob::{conditional_probability, DensityMatrix};

use crate::cli::{Cli, Command, Format};
use crate::error::CliError;
use crate::report::{
    ComparePayload, DensityPayload, InputInfo, Payload, ProbPayload, Report, SamplePayload,
    SampleSide, SpectrumPayload,
};
use crate::selector::RhoSelector;
use crate::spec_file::{self, LoadedSpec};
use crate::verify;

pub struct RunOutcome {
    pub report: Report,
    pub format: Format,
    pub exit_code: i32,
}

/// Dispatches a parsed command line to its command, producing the report and
/// the process exit code.
pub fn run(cli: &Cli, invocation: Vec<String>) -> Result<RunOutcome, CliError> {
    let common = cli.command.common();
    let spec = spec_file::load(&common.input, common.normalize)?;

    let mut tolerances = BTreeMap::new();
    let mut exit_code = 0;
    let payload = match &cli.command {
        Command::Density { target, .. } => {
            tolerances.insert("purity".to_string(), PURITY_TOL);
            Payload::Density(density(&spec, target)?)
        }
        Command::Prob { target, event, .. } => Payload::Prob(prob(&spec, target, event)?),
        Command::Spectrum { target, .. } => Payload::Spectrum(spectrum(&spec, target)?),
        Command::Sample {
            target,
            seed,
            trials,
            shards,
            compare_superposition,
            ..
        } => {
            tolerances.insert("deviation_bound".to_string(), deviation_bound(*trials));
            if *compare_superposition {
                Payload::SampleCompare(sample_compare(&spec, target, *seed, *trials)?)
            } else {
                Payload::Sample(sample(&spec, target, *seed, *trials, *shards)?)
            }
        }
        Command::Verify {
            trials_per_property,
            tolerance,
            seed,
            ..
        } => {
            tolerances.insert("verify".to_string(), *tolerance);
            let payload = verify::run(&spec, *trials_per_property, *tolerance, *seed);
            if !payload.all_passed {
                exit_code = 1;
            }
            Payload::Verify(payload)
        }
    };

    Ok(RunOutcome {
        report: Report {
            command: cli.command.name().to_string(),
            invocation,
            input: InputInfo {
                path: spec.path.clone(),
                sha256: spec.sha256.clone(),
            },
            tolerances,
            payload,
        },
        format: common.format,
        exit_code,
    })
}

fn resolve(spec: &LoadedSpec, target: &str) -> Result<(RhoSelector, DensityMatrix), CliError> {
    let selector: RhoSelector = target.parse()?;
    let rho = selector.resolve(spec)?;
    Ok((selector, rho))
}

fn density(spec: &LoadedSpec, target: &str) -> Result<DensityPayload, CliError> {
    let (selector, rho) = resolve(spec, target)?;
    let spectrum = rho.spectrum()?;
    Ok(DensityPayload {
        target: selector.to_string(),
        kind: rho.kind().as_str().to_string(),
        outcome_labels: spec.space.labels().to_vec(),
        matrix: rho.matrix().to_rows(),
        trace: rho.matrix().trace(),
        pure: rho.is_pure(),
        purity_deviation: rho.purity_deviation(),
        spectrum: spectrum.eigenvalues().to_vec(),
    })
}

fn prob(spec: &LoadedSpec, target: &str, event_name: &str) -> Result<ProbPayload, CliError> {
    let (selector, rho) = resolve(spec, target)?;
    let event = spec.event(event_name)?;
    let trace_value = rho.prob_trace(event)?;
    // classical counterpart: Pr(T|S) for event targets; for a partition the
    // trace telescopes to the unconditional Pr(T) by total probability
    let classical_oracle = match selector.event_name() {
        Some(name) => conditional_probability(event, spec.event(name)?)?,
        None => event.probability(),
    };
    Ok(ProbPayload {
        target: selector.to_string(),
        event: event_name.to_string(),
        trace_value,
        classical_oracle,
        absolute_difference: (trace_value - classical_oracle).abs(),
    })
}

pub(crate) fn multiset_deviation(actual: &[f64], predicted: &[f64]) -> f64 {
    let mut a = actual.to_vec();
    let mut b = predicted.to_vec();
    a.sort_by(|x, y| y.total_cmp(x));
    b.sort_by(|x, y| y.total_cmp(x));
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn spectrum(spec: &LoadedSpec, target: &str) -> Result<SpectrumPayload, CliError> {
    let (selector, rho) = resolve(spec, target)?;
    let eigenvalues = rho.spectrum()?.eigenvalues().to_vec();
    let predicted = rho.predicted_spectrum();
    let max_multiset_deviation = multiset_deviation(&eigenvalues, &predicted);
    Ok(SpectrumPayload {
        target: selector.to_string(),
        kind: rho.kind().as_str().to_string(),
        eigenvalues,
        predicted,
        max_multiset_deviation,
    })
}

fn sample(
    spec: &LoadedSpec,
    target: &str,
    seed: u64,
    trials: u64,
    shards: Option<u32>,
) -> Result<SamplePayload, CliError> {
    let (selector, rho) = resolve(spec, target)?;
    let cfg = TrialConfig::new(seed, trials)?;
    let result = match shards {
        Some(shards) => run_experiment_sharded(&rho, &cfg, shards),
        None => run_experiment(&rho, &cfg),
    };
    Ok(SamplePayload {
        target: selector.to_string(),
        seed,
        trials,
        shards,
        outcome_labels: spec.space.labels().to_vec(),
        counts: result.counts,
        frequencies: result.frequencies,
        expected: result.expected,
        max_abs_deviation: result.max_abs_deviation,
        deviation_bound: deviation_bound(trials),
    })
}

fn side(result: &EmpiricalResult) -> SampleSide {
    SampleSide {
        counts: result.counts.clone(),
        frequencies: result.frequencies.clone(),
        expected: result.expected.clone(),
        max_abs_deviation: result.max_abs_deviation,
    }
}

fn sample_compare(
    spec: &LoadedSpec,
    target: &str,
    seed: u64,
    trials: u64,
) -> Result<ComparePayload, CliError> {
    let selector: RhoSelector = target.parse()?;
    let event_name = selector.event_name().ok_or_else(|| {
        CliError::Input("--compare-superposition requires an event target".to_string())
    })?;
    let event = spec.event(event_name)?;
    let cfg = TrialConfig::new(seed, trials)?;
    let report = indistinguishability_report(event, &cfg)?;
    Ok(ComparePayload {
        event: event_name.to_string(),
        seed,
        trials,
        outcome_labels: spec.space.labels().to_vec(),
        discrete: side(&report.discrete),
        superposition: side(&report.superposition),
        max_frequency_gap: report.max_frequency_gap,
        single_bound: report.single_bound,
        pair_bound: report.pair_bound,
        verdict: report.verdict.as_str().to_string(),
    })
}
