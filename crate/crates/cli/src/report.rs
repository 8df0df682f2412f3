//! Structured reports. Machine format is one JSON document per invocation;
//! floats print in shortest round-trip form, so reparsing reproduces every
//! value exactly. Table format renders the same payload for reading.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Echo of the argv that produced this report.
    pub invocation: Vec<String>,
    pub input: InputInfo,
    /// Tolerance and bound settings the command applied.
    pub tolerances: BTreeMap<String, f64>,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Density(DensityPayload),
    Prob(ProbPayload),
    Spectrum(SpectrumPayload),
    Sample(SamplePayload),
    SampleCompare(ComparePayload),
    Verify(VerifyPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityPayload {
    pub target: String,
    pub kind: String,
    pub outcome_labels: Vec<String>,
    /// Row-major matrix entries.
    pub matrix: Vec<Vec<f64>>,
    pub trace: f64,
    pub pure: bool,
    /// Max-norm of rho^2 - rho.
    pub purity_deviation: f64,
    /// Eigenvalues, descending.
    pub spectrum: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbPayload {
    pub target: String,
    pub event: String,
    /// tr[P_T rho].
    pub trace_value: f64,
    /// Classical set-based value for the same question.
    pub classical_oracle: f64,
    pub absolute_difference: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPayload {
    pub target: String,
    pub kind: String,
    pub eigenvalues: Vec<f64>,
    /// The multiset this construction is expected to have.
    pub predicted: Vec<f64>,
    /// Max deviation between the sorted multisets.
    pub max_multiset_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplePayload {
    pub target: String,
    pub seed: u64,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shards: Option<u32>,
    pub outcome_labels: Vec<String>,
    pub counts: Vec<u64>,
    pub frequencies: Vec<f64>,
    /// The diagonal of rho: the exact measurement distribution.
    pub expected: Vec<f64>,
    pub max_abs_deviation: f64,
    /// 4-sigma binomial bound for this trial count.
    pub deviation_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSide {
    pub counts: Vec<u64>,
    pub frequencies: Vec<f64>,
    pub expected: Vec<f64>,
    pub max_abs_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparePayload {
    pub event: String,
    pub seed: u64,
    pub trials: u64,
    pub outcome_labels: Vec<String>,
    pub discrete: SampleSide,
    pub superposition: SampleSide,
    pub max_frequency_gap: f64,
    pub single_bound: f64,
    pub pair_bound: f64,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub passed: bool,
    pub worst_deviation: f64,
    /// Individual comparisons that fed the worst-case figure.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub trials_per_property: u32,
    pub tolerance: f64,
    pub seed: u64,
    pub properties: Vec<PropertyReport>,
    pub all_passed: bool,
}

impl Report {
    pub fn to_machine_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: &str| {
            out.push_str(line);
            out.push('\n');
        };
        push(&mut out, &format!("command : {}", self.command));
        push(
            &mut out,
            &format!("input   : {} (sha256 {})", self.input.path, &self.input.sha256[..12]),
        );
        match &self.payload {
            Payload::Density(p) => {
                push(&mut out, &format!("target  : {} ({})", p.target, p.kind));
                push(
                    &mut out,
                    &format!(
                        "trace   : {:.12}   pure: {}   |rho^2-rho|: {:.3e}",
                        p.trace, p.pure, p.purity_deviation
                    ),
                );
                push(&mut out, "matrix  :");
                push(&mut out, &render_matrix(&p.outcome_labels, &p.matrix));
                push(&mut out, &format!("spectrum: {}", render_row(&p.spectrum)));
            }
            Payload::Prob(p) => {
                push(&mut out, &format!("target  : {}", p.target));
                push(&mut out, &format!("event   : {}", p.event));
                push(&mut out, &format!("trace formula     : {:.17}", p.trace_value));
                push(&mut out, &format!("classical oracle  : {:.17}", p.classical_oracle));
                push(
                    &mut out,
                    &format!("abs difference    : {:.3e}", p.absolute_difference),
                );
            }
            Payload::Spectrum(p) => {
                push(&mut out, &format!("target    : {} ({})", p.target, p.kind));
                push(&mut out, &format!("eigenvalues: {}", render_row(&p.eigenvalues)));
                push(&mut out, &format!("predicted  : {}", render_row(&p.predicted)));
                push(
                    &mut out,
                    &format!("max multiset deviation: {:.3e}", p.max_multiset_deviation),
                );
            }
            Payload::Sample(p) => {
                push(
                    &mut out,
                    &format!(
                        "target  : {}   seed: {}   trials: {}{}",
                        p.target,
                        p.seed,
                        p.trials,
                        p.shards
                            .map(|s| format!("   shards: {s}"))
                            .unwrap_or_default()
                    ),
                );
                push(&mut out, &render_sample_table(&p.outcome_labels, &p.counts, &p.frequencies, &p.expected));
                push(
                    &mut out,
                    &format!(
                        "max |freq - expected| = {:.6e} (bound {:.6e})",
                        p.max_abs_deviation, p.deviation_bound
                    ),
                );
            }
            Payload::SampleCompare(p) => {
                push(
                    &mut out,
                    &format!("event   : {}   seed: {}   trials: {}", p.event, p.seed, p.trials),
                );
                push(&mut out, "discrete run:");
                push(&mut out, &render_sample_table(&p.outcome_labels, &p.discrete.counts, &p.discrete.frequencies, &p.discrete.expected));
                push(&mut out, "superposition run:");
                push(&mut out, &render_sample_table(&p.outcome_labels, &p.superposition.counts, &p.superposition.frequencies, &p.superposition.expected));
                push(
                    &mut out,
                    &format!(
                        "max frequency gap = {:.6e} (bounds: single {:.6e}, pair {:.6e})",
                        p.max_frequency_gap, p.single_bound, p.pair_bound
                    ),
                );
                push(&mut out, &format!("verdict : {}", p.verdict));
            }
            Payload::Verify(p) => {
                push(
                    &mut out,
                    &format!(
                        "trials/property: {}   tolerance: {:.1e}   seed: {}",
                        p.trials_per_property, p.tolerance, p.seed
                    ),
                );
                push(
                    &mut out,
                    &format!("{:<34} {:>6}  {:>13}  {:>8}", "property", "status", "worst dev", "cases"),
                );
                for prop in &p.properties {
                    push(
                        &mut out,
                        &format!(
                            "{:<34} {:>6}  {:>13.3e}  {:>8}",
                            prop.name,
                            if prop.passed { "pass" } else { "FAIL" },
                            prop.worst_deviation,
                            prop.cases
                        ),
                    );
                }
                push(
                    &mut out,
                    &format!("overall : {}", if p.all_passed { "pass" } else { "FAIL" }),
                );
            }
        }
        out
    }
}

fn render_row(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:>12.9}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_matrix(labels: &[String], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for (label, row) in labels.iter().zip(rows) {
        out.push_str(&format!("  {label:>8} [{}]\n", render_row(row)));
    }
    out.pop();
    out
}

fn render_sample_table(
    labels: &[String],
    counts: &[u64],
    frequencies: &[f64],
    expected: &[f64],
) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "  {:>8} {:>12} {:>14} {:>14}\n",
        "outcome", "count", "frequency", "expected"
    ));
    for i in 0..labels.len() {
        out.push_str(&format!(
            "  {:>8} {:>12} {:>14.9} {:>14.9}\n",
            labels[i], counts[i], frequencies[i], expected[i]
        ));
    }
    out.pop();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_report_round_trips_exactly() {
        let report = Report {
            command: "prob".to_string(),
            invocation: vec!["superprob".to_string(), "prob".to_string()],
            input: InputInfo {
                path: "coin.json".to_string(),
                sha256: "ab".repeat(32),
            },
            tolerances: BTreeMap::new(),
            payload: Payload::Prob(ProbPayload {
                target: "superposition:U".to_string(),
                event: "H".to_string(),
                trace_value: 1.0 / 3.0,
                classical_oracle: 0.1 + 0.2,
                absolute_difference: 5.551115123125783e-17,
            }),
        };
        let text = report.to_machine_string();
        let parsed: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, report);
    }
}
