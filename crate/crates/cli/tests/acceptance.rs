//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test -p superprob-cli --test acceptance -- --nocapture`.

use std::process::Command;

use superprob::linalg::sym_eigen;
use superprob::prob::{Partition, conditional_probability};
use superprob::random::{
    random_event, random_event_at_least, random_partition, random_space, random_symmetric_matrix,
    uniform_space,
};
use superprob::sampler::SplitMix64;
use superprob::superposition::{AmplitudeVector, BinaryRelation, DensityMatrix};
use superprob::Error;
use superprob_cli::report::{Payload, Report};

fn criterion(number: u32, name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(body) {
        Ok(()) => println!("criterion {number} ({name}): PASS"),
        Err(panic) => {
            println!("criterion {number} ({name}): FAIL");
            std::panic::resume_unwind(panic);
        }
    }
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_superprob"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().expect("exit code"),
        String::from_utf8(output.stdout).expect("utf-8 stdout"),
    )
}

fn density_payload(file: &str, target: &str) -> superprob_cli::report::DensityPayload {
    let (code, stdout) = run_cli(&["density", &fixture(file), target]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&stdout).unwrap();
    match report.payload {
        Payload::Density(p) => p,
        other => panic!("expected density payload, got {other:?}"),
    }
}

#[test]
fn acceptance_1_card_example() {
    criterion(1, "card example", || {
        let superposed = density_payload("card.json", "superposition:B1");
        for j in 0..4 {
            for k in 0..4 {
                let expected = if (1..=2).contains(&j) && (1..=2).contains(&k) {
                    0.5
                } else {
                    0.0
                };
                assert!(
                    (superposed.matrix[j][k] - expected).abs() <= 1e-15,
                    "rho(sum B1) entry ({j},{k}) = {}",
                    superposed.matrix[j][k]
                );
            }
        }
        assert!(superposed.pure);

        let discrete = density_payload("card.json", "discrete:B1");
        for j in 0..4 {
            for k in 0..4 {
                let expected = if j == k && (1..=2).contains(&j) { 0.5 } else { 0.0 };
                assert!(
                    (discrete.matrix[j][k] - expected).abs() <= 1e-15,
                    "rho(B1) entry ({j},{k}) = {}",
                    discrete.matrix[j][k]
                );
            }
        }
        assert!(!discrete.pure);
    });
}

#[test]
fn acceptance_2_coin_example() {
    criterion(2, "coin example", || {
        let discrete = density_payload("coin.json", "discrete:U");
        assert_eq!(discrete.matrix, vec![vec![0.5, 0.0], vec![0.0, 0.5]]);

        let superposed = density_payload("coin.json", "superposition:U");
        for j in 0..2 {
            for k in 0..2 {
                assert!((superposed.matrix[j][k] - 0.5).abs() <= 1e-15);
            }
        }

        for target in ["discrete:U", "superposition:U"] {
            let (code, stdout) =
                run_cli(&["prob", &fixture("coin.json"), target, "--event", "H"]);
            assert_eq!(code, 0);
            let report: Report = serde_json::from_str(&stdout).unwrap();
            let Payload::Prob(p) = report.payload else {
                panic!("wrong payload");
            };
            assert!((p.trace_value - 0.5).abs() <= 1e-15, "{target}");
        }
    });
}

#[test]
fn acceptance_3_born_identity() {
    criterion(3, "Born identity", || {
        let mut rng = SplitMix64::new(0xB0B1);
        for round in 0..1000 {
            let n = 1 + rng.next_below(12) as usize;
            let space = random_space(n, &mut rng);
            let s = random_event(&space, &mut rng);
            let amplitude = AmplitudeVector::new(&s).unwrap();
            let rho = DensityMatrix::superposition(&s).unwrap();
            let total = s.probability();
            for i in 0..n {
                let born = amplitude.born_probability(i).unwrap();
                let trace = rho.prob_trace(&space.singleton(i).unwrap()).unwrap();
                let formula = if s.contains(i) {
                    space.prob(i) / total
                } else {
                    0.0
                };
                assert!((born - trace).abs() <= 1e-12, "round {round}, outcome {i}");
                assert!((born - formula).abs() <= 1e-12, "round {round}, outcome {i}");
                assert!((trace - formula).abs() <= 1e-12, "round {round}, outcome {i}");
            }
        }
    });
}

#[test]
fn acceptance_4_spectrum_claims() {
    criterion(4, "spectrum claims", || {
        let mut rng = SplitMix64::new(0x54EC);
        for round in 0..500 {
            let n = 1 + rng.next_below(12) as usize;
            let space = random_space(n, &mut rng);
            let s = random_event(&space, &mut rng);
            let pi = random_partition(&space, &mut rng);
            for rho in [
                DensityMatrix::discrete(&s).unwrap(),
                DensityMatrix::superposition(&s).unwrap(),
                DensityMatrix::partition(&pi),
            ] {
                let mut actual = rho.spectrum().unwrap().eigenvalues().to_vec();
                actual.sort_by(|a, b| b.total_cmp(a));
                let predicted = rho.predicted_spectrum();
                for (a, p) in actual.iter().zip(&predicted) {
                    assert!(
                        (a - p).abs() <= 1e-9,
                        "round {round}, kind {:?}: {actual:?} vs {predicted:?}",
                        rho.kind()
                    );
                }
            }
        }
    });
}

#[test]
fn acceptance_5_amplitude_recovery() {
    criterion(5, "amplitude recovery", || {
        let mut rng = SplitMix64::new(0x4EC0);
        for round in 0..500 {
            let n = 1 + rng.next_below(12) as usize;
            let space = random_space(n, &mut rng);
            let s = random_event(&space, &mut rng);
            let amplitude = AmplitudeVector::new(&s).unwrap();
            let recovered = DensityMatrix::superposition(&s)
                .unwrap()
                .recover_amplitude()
                .unwrap();
            for i in 0..n {
                assert!(
                    (recovered.entry(i) - amplitude.entry(i)).abs() <= 1e-8,
                    "round {round}, entry {i}"
                );
            }
        }
        for round in 0..500 {
            let n = 2 + rng.next_below(11) as usize;
            let space = random_space(n, &mut rng);
            let s = random_event_at_least(&space, 2, &mut rng);
            let result = DensityMatrix::discrete(&s).unwrap().recover_amplitude();
            assert!(
                matches!(result, Err(Error::NotPure { .. })),
                "round {round}: mixture recovery returned {result:?}"
            );
        }
    });
}

#[test]
fn acceptance_6_partition_endpoints() {
    criterion(6, "partition endpoints", || {
        let mut rng = SplitMix64::new(0xE4D5);
        for _ in 0..100 {
            let n = 1 + rng.next_below(12) as usize;
            let space = random_space(n, &mut rng);
            let top = DensityMatrix::partition(&Partition::discrete(&space));
            let bottom = DensityMatrix::partition(&Partition::indiscrete(&space));
            let discrete = DensityMatrix::discrete(&space.full_event()).unwrap();
            let superposed = DensityMatrix::superposition(&space.full_event()).unwrap();
            assert!(top.matrix().max_abs_diff(discrete.matrix()).unwrap() <= 1e-12);
            assert!(bottom.matrix().max_abs_diff(superposed.matrix()).unwrap() <= 1e-12);
        }
    });
}

#[test]
fn acceptance_7_equiprobable_incidence_identity() {
    criterion(7, "equiprobable incidence identity", || {
        for n in 1..=8usize {
            let space = uniform_space(n);
            for mask in 1u32..(1 << n) {
                let members = (0..n).filter(|i| mask & (1 << i) != 0);
                let s = space.event(members).unwrap();
                let mut scaled = DensityMatrix::superposition(&s).unwrap().matrix().clone();
                scaled.scale(s.len() as f64);
                let incidence = BinaryRelation::product(&s).incidence_matrix().unwrap();
                assert!(
                    scaled.max_abs_diff(&incidence).unwrap() <= 1e-12,
                    "n={n}, mask={mask:#b}"
                );
            }
        }
    });
}

#[test]
fn acceptance_8_indistinguishability_experiment() {
    criterion(8, "indistinguishability experiment", || {
        let (code, stdout) = run_cli(&[
            "sample",
            &fixture("coin.json"),
            "superposition:U",
            "--seed",
            "1",
            "--trials",
            "1000000",
            "--compare-superposition",
        ]);
        assert_eq!(code, 0);
        let report: Report = serde_json::from_str(&stdout).unwrap();
        let Payload::SampleCompare(p) = report.payload else {
            panic!("wrong payload");
        };
        for run in [&p.discrete, &p.superposition] {
            for i in 0..2 {
                assert!(
                    (run.frequencies[i] - 0.5).abs() <= 0.002,
                    "frequency {} off by more than 0.002",
                    run.frequencies[i]
                );
            }
        }
        assert_eq!(p.verdict, "indistinguishable");
    });
}

#[test]
fn acceptance_9_eigensolver_quality_gate() {
    criterion(9, "eigensolver quality gate", || {
        let mut rng = SplitMix64::new(0xE16E);
        for round in 0..1000 {
            let n = 1 + (round % 16);
            let m = random_symmetric_matrix(n, &mut rng);
            let spectrum = sym_eigen(&m).unwrap();
            assert!(
                spectrum.reconstruction_error(&m) <= 1e-10,
                "reconstruction residual at round {round}"
            );
            assert!(
                spectrum.orthonormality_error() <= 1e-10,
                "orthonormality residual at round {round}"
            );
        }
    });
}

#[test]
fn acceptance_classical_oracle_cross_check() {
    // belt-and-braces: the classical layer agrees with the matrix layer on
    // the fixtures the criteria above exercise
    let mut rng = SplitMix64::new(0x0AC1);
    for _ in 0..200 {
        let n = 1 + rng.next_below(10) as usize;
        let space = random_space(n, &mut rng);
        let s = random_event(&space, &mut rng);
        let t = random_event(&space, &mut rng);
        let classical = conditional_probability(&t, &s).unwrap();
        let rho = DensityMatrix::discrete(&s).unwrap();
        assert!((rho.prob_trace(&t).unwrap() - classical).abs() <= 1e-12);
    }
}
