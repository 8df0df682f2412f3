//! The `verify` command: replays the crate's identity suite against the
//! space in the input file, on its named events and partitions plus freshly
//! generated random ones, and reports the worst deviation per property.

use superprob::prob::{conditional_probability, Event, Partition};
use superprob::random::{random_event, random_partition, random_refinement, uniform_space};
use superprob::sampler::SplitMix64;
use superprob::superposition::{AmplitudeVector, BinaryRelation, DensityMatrix};

use crate::commands::multiset_deviation;
use crate::report::{PropertyReport, VerifyPayload};
use crate::spec_file::LoadedSpec;

struct Check {
    name: &'static str,
    worst: f64,
    cases: u64,
    structural_failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            worst: 0.0,
            cases: 0,
            structural_failure: None,
        }
    }

    fn observe(&mut self, deviation: f64) {
        self.worst = self.worst.max(deviation);
        self.cases += 1;
    }

    fn fail(&mut self, message: String) {
        if self.structural_failure.is_none() {
            self.structural_failure = Some(message);
        }
        self.cases += 1;
    }

    fn into_report(self, tolerance: f64) -> PropertyReport {
        PropertyReport {
            name: self.name.to_string(),
            passed: self.structural_failure.is_none() && self.worst <= tolerance,
            worst_deviation: self.worst,
            cases: self.cases,
            detail: self.structural_failure,
        }
    }
}

pub fn run(spec: &LoadedSpec, trials_per_property: u32, tolerance: f64, seed: u64) -> VerifyPayload {
    let mut rng = SplitMix64::new(seed);
    let space = &spec.space;
    let n = space.n();

    let mut events: Vec<Event> = spec.events.values().cloned().collect();
    for _ in 0..trials_per_property {
        events.push(random_event(space, &mut rng));
    }
    let mut partitions: Vec<Partition> = spec.partitions.values().cloned().collect();
    for _ in 0..trials_per_property {
        partitions.push(random_partition(space, &mut rng));
    }

    let mut properties = Vec::new();

    // squared amplitude = trace formula = classical conditional, per outcome
    let mut check = Check::new("born_identity");
    for s in &events {
        if s.is_empty() {
            continue;
        }
        let amplitude = AmplitudeVector::new(s).expect("non-empty");
        let rho = DensityMatrix::superposition(s).expect("non-empty");
        for i in 0..n {
            let singleton = space.singleton(i).expect("index in range");
            let born = amplitude.born_probability(i).expect("index in range");
            let trace = rho.prob_trace(&singleton).expect("same space");
            let classical = conditional_probability(&singleton, s).expect("non-empty");
            check.observe((born - trace).abs());
            check.observe((trace - classical).abs());
            check.observe((born - classical).abs());
        }
    }
    properties.push(check.into_report(tolerance));

    // discrete and superposition matrices assign every event the classical value
    let mut check = Check::new("probability_agreement");
    for s in &events {
        if s.is_empty() {
            continue;
        }
        let discrete = DensityMatrix::discrete(s).expect("non-empty");
        let superposed = DensityMatrix::superposition(s).expect("non-empty");
        for _ in 0..3 {
            let t = random_event(space, &mut rng);
            let classical = conditional_probability(&t, s).expect("non-empty");
            check.observe((discrete.prob_trace(&t).expect("same space") - classical).abs());
            check.observe((superposed.prob_trace(&t).expect("same space") - classical).abs());
        }
    }
    properties.push(check.into_report(tolerance));

    // conditioning a superposition only sees the intersection
    let mut check = Check::new("sharpening");
    for s in &events {
        if s.is_empty() {
            continue;
        }
        let rho = DensityMatrix::superposition(s).expect("non-empty");
        for _ in 0..3 {
            let t = random_event(space, &mut rng);
            let direct = rho.prob_trace(&t).expect("same space");
            let sharpened = rho
                .prob_trace(&t.intersect(s).expect("same space"))
                .expect("same space");
            check.observe((direct - sharpened).abs());
        }
    }
    properties.push(check.into_report(tolerance));

    // superposition matrices are pure; discrete ones only for singletons
    let mut check = Check::new("purity_dichotomy");
    for s in &events {
        if s.is_empty() {
            continue;
        }
        let superposed = DensityMatrix::superposition(s).expect("non-empty");
        check.observe(superposed.purity_deviation());
        let discrete = DensityMatrix::discrete(s).expect("non-empty");
        if discrete.is_pure() != (s.len() == 1) {
            check.fail(format!(
                "discrete event of size {} has purity {}",
                s.len(),
                discrete.is_pure()
            ));
        }
    }
    properties.push(check.into_report(tolerance));

    // |S| * rho(sum S) is the 0/1 incidence matrix of S x S when p is uniform;
    // checked on the equiprobable counterpart of the input space
    let mut check = Check::new("incidence_identity_uniform");
    let uniform = uniform_space(n);
    for s in &events {
        if s.is_empty() {
            continue;
        }
        let on_uniform = uniform.event(s.members()).expect("indices in range");
        let mut scaled = DensityMatrix::superposition(&on_uniform)
            .expect("non-empty")
            .matrix()
            .clone();
        scaled.scale(on_uniform.len() as f64);
        let incidence = BinaryRelation::product(&on_uniform)
            .incidence_matrix()
            .expect("product relations are symmetric");
        check.observe(scaled.max_abs_diff(&incidence).expect("same size"));
    }
    properties.push(check.into_report(tolerance));

    // eigenvalue multisets match the predicted ones for all three families
    let mut check = Check::new("spectrum_claims");
    for s in &events {
        if s.is_empty() {
            continue;
        }
        for rho in [
            DensityMatrix::discrete(s).expect("non-empty"),
            DensityMatrix::superposition(s).expect("non-empty"),
        ] {
            match rho.spectrum() {
                Ok(spectrum) => check.observe(multiset_deviation(
                    spectrum.eigenvalues(),
                    &rho.predicted_spectrum(),
                )),
                Err(e) => check.fail(format!("eigensolver failed: {e}")),
            }
        }
    }
    for pi in &partitions {
        let rho = DensityMatrix::partition(pi);
        match rho.spectrum() {
            Ok(spectrum) => check.observe(multiset_deviation(
                spectrum.eigenvalues(),
                &rho.predicted_spectrum(),
            )),
            Err(e) => check.fail(format!("eigensolver failed: {e}")),
        }
    }
    properties.push(check.into_report(tolerance));

    // tr[P_S rho(U)] reproduces the direct summation Pr(S)
    let mut check = Check::new("trace_formula_vs_summation");
    let rho_full = DensityMatrix::discrete(&space.full_event()).expect("non-empty");
    for t in &events {
        let trace = rho_full.prob_trace(t).expect("same space");
        check.observe((trace - t.probability()).abs());
    }
    properties.push(check.into_report(tolerance));

    // rho(1_U) = rho(U) and rho(0_U) = rho(sum U)
    let mut check = Check::new("partition_endpoints");
    let top = DensityMatrix::partition(&Partition::discrete(space));
    let bottom = DensityMatrix::partition(&Partition::indiscrete(space));
    let discrete_full = DensityMatrix::discrete(&space.full_event()).expect("non-empty");
    let superposed_full = DensityMatrix::superposition(&space.full_event()).expect("non-empty");
    check.observe(
        top.matrix()
            .max_abs_diff(discrete_full.matrix())
            .expect("same size"),
    );
    check.observe(
        bottom
            .matrix()
            .max_abs_diff(superposed_full.matrix())
            .expect("same size"),
    );
    properties.push(check.into_report(tolerance));

    // refining a partition can only erase off-diagonal support
    let mut check = Check::new("refinement_support_monotonicity");
    for _ in 0..trials_per_property.max(1) {
        let coarse = random_partition(space, &mut rng);
        let fine = random_refinement(&coarse, &mut rng);
        if !fine.refines(&coarse).expect("same space") {
            check.fail("generated refinement does not refine its source".to_string());
            continue;
        }
        let rho_coarse = DensityMatrix::partition(&coarse);
        let rho_fine = DensityMatrix::partition(&fine);
        let mut worst = 0.0f64;
        for j in 0..n {
            for k in 0..n {
                if j != k && rho_coarse.matrix().get(j, k) == 0.0 {
                    worst = worst.max(rho_fine.matrix().get(j, k).abs());
                }
            }
        }
        check.observe(worst);
    }
    properties.push(check.into_report(tolerance));

    let all_passed = properties.iter().all(|p| p.passed);
    VerifyPayload {
        trials_per_property,
        tolerance,
        seed,
        properties,
        all_passed,
    }
}
