//! Seeded Monte Carlo measurement harness.
//!
//! A trial samples one outcome index from a density matrix's measurement
//! distribution, which is its diagonal: Pr(u_i) = rho_ii = tr[P_{u_i} rho].
//! The sampler therefore depends on rho only through its diagonal — two
//! matrices with equal diagonals produce identical draw sequences under the
//! same seed, which is the mixture-vs-superposition indistinguishability
//! stated at the level where it is literally true.
//!
//! The PRNG is SplitMix64 (Steele, Lea & Flood's 64-bit mixer, as in Vigna's
//! reference `splitmix64.c`). It is an implementation constant, not
//! user-configurable, so counts are bit-reproducible across platforms and
//! implementations. Reference outputs for seed 0:
//! 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f, ...

use crate::error::{Error, Result};
use crate::prob::Event;
use crate::superposition::DensityMatrix;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64: state advances by the golden-ratio increment, outputs pass
/// through a 64-bit finalizer. Streams are split by seeding a child from the
/// parent's next output.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Unbiased uniform integer in [0, bound) by rejection.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Derives an independent child stream, advancing this one.
    pub fn split(&mut self) -> SplitMix64 {
        SplitMix64::new(self.next_u64())
    }
}

/// Seed and trial count for one experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialConfig {
    seed: u64,
    trials: u64,
}

impl TrialConfig {
    pub fn new(seed: u64, trials: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::ZeroTrials);
        }
        Ok(Self { seed, trials })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }
}

/// Tabulated outcome frequencies against the exact diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalResult {
    pub counts: Vec<u64>,
    pub frequencies: Vec<f64>,
    /// The diagonal of rho, copied rather than estimated.
    pub expected: Vec<f64>,
    pub max_abs_deviation: f64,
}

impl EmpiricalResult {
    fn tabulate(counts: Vec<u64>, trials: u64, expected: Vec<f64>) -> Self {
        let frequencies: Vec<f64> = counts.iter().map(|&c| c as f64 / trials as f64).collect();
        let max_abs_deviation = frequencies
            .iter()
            .zip(&expected)
            .map(|(f, e)| (f - e).abs())
            .fold(0.0, f64::max);
        Self {
            counts,
            frequencies,
            expected,
            max_abs_deviation,
        }
    }

    pub fn trials(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Inverse-CDF table over a density matrix's diagonal, in index order.
struct DiagonalCdf {
    cumulative: Vec<f64>,
    last_positive: usize,
}

impl DiagonalCdf {
    fn new(diagonal: &[f64]) -> Self {
        let mut cumulative = Vec::with_capacity(diagonal.len());
        let mut sum = 0.0;
        let mut last_positive = 0;
        for (i, &d) in diagonal.iter().enumerate() {
            sum += d;
            cumulative.push(sum);
            if d > 0.0 {
                last_positive = i;
            }
        }
        Self {
            cumulative,
            last_positive,
        }
    }

    fn draw(&self, rng: &mut SplitMix64) -> usize {
        let u = rng.next_f64();
        for (i, &c) in self.cumulative.iter().enumerate() {
            if u < c {
                return i;
            }
        }
        // u fell into the round-off gap above the final cumulative value
        self.last_positive
    }
}

/// One measurement: returns index i with probability rho_ii.
pub fn measure_once(rho: &DensityMatrix, rng: &mut SplitMix64) -> usize {
    DiagonalCdf::new(&rho.diagonal()).draw(rng)
}

/// 4-sigma binomial bound on the worst-case frequency deviation.
pub fn deviation_bound(trials: u64) -> f64 {
    4.0 * (0.25 / trials as f64).sqrt()
}

/// Runs `cfg.trials` independent draws from a generator seeded with
/// `cfg.seed` and tabulates the outcome counts.
pub fn run_experiment(rho: &DensityMatrix, cfg: &TrialConfig) -> EmpiricalResult {
    let diagonal = rho.diagonal();
    let cdf = DiagonalCdf::new(&diagonal);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut counts = vec![0u64; diagonal.len()];
    for _ in 0..cfg.trials {
        counts[cdf.draw(&mut rng)] += 1;
    }
    EmpiricalResult::tabulate(counts, cfg.trials, diagonal)
}

/// Sharded variant: shard k draws from its own stream seeded by the k-th
/// output of a SplitMix64 root stream seeded with `cfg.seed`; trials are
/// split evenly with the remainder on the first shards, and the merged
/// counts are the per-shard sums. Deterministic for a fixed shard count,
/// but not count-equal to the unsharded run.
pub fn run_experiment_sharded(
    rho: &DensityMatrix,
    cfg: &TrialConfig,
    shards: u32,
) -> EmpiricalResult {
    let shards = shards.max(1) as u64;
    let diagonal = rho.diagonal();
    let mut root = SplitMix64::new(cfg.seed);
    let plan: Vec<(u64, u64)> = (0..shards)
        .map(|k| {
            let trials = cfg.trials / shards + u64::from(k < cfg.trials % shards);
            (root.next_u64(), trials)
        })
        .collect();

    let shard_counts: Vec<Vec<u64>> = std::thread::scope(|scope| {
        let handles: Vec<_> = plan
            .iter()
            .map(|&(seed, trials)| {
                let diagonal = &diagonal;
                scope.spawn(move || {
                    let cdf = DiagonalCdf::new(diagonal);
                    let mut rng = SplitMix64::new(seed);
                    let mut counts = vec![0u64; diagonal.len()];
                    for _ in 0..trials {
                        counts[cdf.draw(&mut rng)] += 1;
                    }
                    counts
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut counts = vec![0u64; diagonal.len()];
    for shard in shard_counts {
        for (total, c) in counts.iter_mut().zip(shard) {
            *total += c;
        }
    }
    EmpiricalResult::tabulate(counts, cfg.trials, diagonal)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Indistinguishable,
    Distinguishable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Indistinguishable => "indistinguishable",
            Verdict::Distinguishable => "distinguishable",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Paired experiment on rho(S) and rho(sum S) with derived seeds, plus the
/// statistical verdict on whether the two runs could be told apart.
#[derive(Debug, Clone, PartialEq)]
pub struct IndistinguishabilityReport {
    pub discrete: EmpiricalResult,
    pub superposition: EmpiricalResult,
    /// Largest per-coordinate gap between the two frequency vectors.
    pub max_frequency_gap: f64,
    /// 4-sigma bound each run's deviation must stay under.
    pub single_bound: f64,
    /// 8-sigma bound the per-coordinate gap must stay under.
    pub pair_bound: f64,
    pub verdict: Verdict,
}

/// Runs the mixture-vs-superposition experiment for a non-empty event: the
/// discrete matrix samples with `cfg.seed`, the superposition matrix with
/// `cfg.seed + 1`.
pub fn indistinguishability_report(
    event: &Event,
    cfg: &TrialConfig,
) -> Result<IndistinguishabilityReport> {
    let rho_discrete = DensityMatrix::discrete(event)?;
    let rho_superposed = DensityMatrix::superposition(event)?;

    let discrete = run_experiment(&rho_discrete, cfg);
    let shifted = TrialConfig::new(cfg.seed.wrapping_add(1), cfg.trials)?;
    let superposition = run_experiment(&rho_superposed, &shifted);

    let max_frequency_gap = discrete
        .frequencies
        .iter()
        .zip(&superposition.frequencies)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let single_bound = deviation_bound(cfg.trials);
    let pair_bound = 2.0 * single_bound;
    let verdict = if discrete.max_abs_deviation < single_bound
        && superposition.max_abs_deviation < single_bound
        && max_frequency_gap < pair_bound
    {
        Verdict::Indistinguishable
    } else {
        Verdict::Distinguishable
    };

    Ok(IndistinguishabilityReport {
        discrete,
        superposition,
        max_frequency_gap,
        single_bound,
        pair_bound,
        verdict,
    })
}
