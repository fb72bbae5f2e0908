//! Wall-clock and memory measurement of both pipelines.
//!
//! Each run is gated on correctness: a proof that fails verification, or
//! proof bytes that differ between iterations, aborts the run instead of
//! producing timings.

use std::time::{Duration, Instant};

use zkbench_core::algebra::{Fr, PrimeField};
use zkbench_core::snark::{
    build_cubic_circuit, generate_witness, prove, r1cs_to_qap, serialize_snark_proof,
    trusted_setup, verify_snark, SnarkError, ToxicWaste,
};
use zkbench_core::stark::{
    serialize_stark_proof, stark_prove_with, stark_verify, PhaseHook, StarkError, StarkParams,
    StarkPhase, DEFAULT_NUM_QUERIES,
};

use crate::report::ReportRow;

/// Private input used for every SNARK benchmark run; the public output is 35.
pub const BENCH_X: u64 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub iterations: usize,
    pub warmup_iterations: usize,
    pub seed: u64,
    pub stark_queries: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            iterations: 5,
            warmup_iterations: 1,
            seed: 0,
            stark_queries: DEFAULT_NUM_QUERIES,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(&'static str),
    #[error("{0} proof failed verification during the benchmark")]
    VerificationFailed(&'static str),
    #[error("{0} proof bytes changed between iterations")]
    Nondeterministic(&'static str),
    #[error(transparent)]
    Snark(#[from] SnarkError),
    #[error(transparent)]
    Stark(#[from] StarkError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhaseTiming {
    pub label: &'static str,
    pub median: Duration,
    pub max: Duration,
    /// Share of the summed phase medians.
    pub percent: f64,
}

/// Resident set size in kilobytes before and after one pipeline run;
/// `None` where the platform does not expose it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MemorySample {
    pub before_kb: Option<u64>,
    pub after_kb: Option<u64>,
}

/// Current resident set size in kilobytes, read from `/proc/self/status`.
pub fn sample_memory() -> Option<u64> {
    std::fs::read_to_string("/proc/self/status")
        .ok()
        .as_deref()
        .and_then(parse_vm_rss)
}

fn parse_vm_rss(status: &str) -> Option<u64> {
    let line = status.lines().find(|l| l.starts_with("VmRSS:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchResult {
    pub row: ReportRow,
    pub phases: Vec<PhaseTiming>,
    pub memory: MemorySample,
    pub proof_bytes: Vec<u8>,
    /// Every measured and warmup proof verified.
    pub verified: bool,
}

fn median(samples: &mut [Duration]) -> Duration {
    samples.sort_unstable();
    let n = samples.len();
    if n % 2 == 1 {
        samples[n / 2]
    } else {
        (samples[n / 2 - 1] + samples[n / 2]) / 2
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Per-phase samples collected across iterations, in pipeline order.
struct PhaseSamples {
    labels: Vec<&'static str>,
    samples: Vec<Vec<Duration>>,
}

impl PhaseSamples {
    fn new(labels: &[&'static str]) -> Self {
        PhaseSamples {
            labels: labels.to_vec(),
            samples: vec![Vec::new(); labels.len()],
        }
    }

    fn push(&mut self, durations: &[Duration]) {
        for (s, d) in self.samples.iter_mut().zip(durations) {
            s.push(*d);
        }
    }

    fn summarize(mut self) -> Vec<PhaseTiming> {
        let medians: Vec<Duration> = self.samples.iter_mut().map(|s| median(s)).collect();
        let total: f64 = medians.iter().map(|d| d.as_secs_f64()).sum();
        self.labels
            .iter()
            .zip(&medians)
            .zip(&self.samples)
            .map(|((&label, &median), s)| PhaseTiming {
                label,
                median,
                max: s.iter().copied().max().unwrap_or_default(),
                percent: if total > 0.0 {
                    100.0 * median.as_secs_f64() / total
                } else {
                    0.0
                },
            })
            .collect()
    }
}

/// Runs `once` for the warmup and measured iterations, checking that every
/// run produced identical proof bytes. Returns the bytes, memory around the
/// first measured run, and each measured run's output.
fn repeat<T>(
    cfg: &BenchConfig,
    system: &'static str,
    mut once: impl FnMut() -> Result<(Vec<u8>, T), BenchError>,
) -> Result<(Vec<u8>, MemorySample, Vec<T>), BenchError> {
    if cfg.iterations == 0 {
        return Err(BenchError::Config("iterations must be at least 1"));
    }
    let mut reference: Option<Vec<u8>> = None;
    let mut memory = MemorySample::default();
    let mut measured = Vec::with_capacity(cfg.iterations);
    for i in 0..cfg.warmup_iterations + cfg.iterations {
        let first_measured = i == cfg.warmup_iterations;
        if first_measured {
            memory.before_kb = sample_memory();
        }
        let (bytes, out) = once()?;
        if first_measured {
            memory.after_kb = sample_memory();
        }
        match &reference {
            Some(r) if *r != bytes => return Err(BenchError::Nondeterministic(system)),
            Some(_) => {}
            None => reference = Some(bytes),
        }
        if i >= cfg.warmup_iterations {
            measured.push(out);
        }
    }
    Ok((reference.expect("at least one iteration"), memory, measured))
}

const SNARK_PHASES: [&str; 5] = [
    "qap",
    "setup",
    "witness",
    "prove-commitments",
    "verify-pairings",
];

/// Times compile-to-QAP, setup, witness generation, proving and pairing
/// verification. Generation time counts witness and proving only; the QAP
/// and setup are one-time preprocessing.
pub fn run_snark_bench(cfg: &BenchConfig) -> Result<BenchResult, BenchError> {
    let x = Fr::from_u64(BENCH_X);
    let y = Fr::from_u64(BENCH_X.pow(3) + BENCH_X + 5);
    let (proof_bytes, memory, runs) = repeat(cfg, "SNARK", || {
        let t0 = Instant::now();
        let circuit = build_cubic_circuit();
        let qap = r1cs_to_qap(&circuit)?;
        let t1 = Instant::now();
        let waste = ToxicWaste::from_seed(cfg.seed, &qap);
        let (pk, vk) = trusted_setup(&qap, waste)?;
        let t2 = Instant::now();
        let witness = generate_witness(&circuit, &x)?;
        let t3 = Instant::now();
        let proof = prove(&pk, &witness, &qap)?;
        let t4 = Instant::now();
        let ok = verify_snark(&vk, &proof, std::slice::from_ref(&y));
        let t5 = Instant::now();
        if !ok {
            return Err(BenchError::VerificationFailed("SNARK"));
        }
        Ok((
            serialize_snark_proof(&proof),
            [t1 - t0, t2 - t1, t3 - t2, t4 - t3, t5 - t4],
        ))
    })?;

    let mut phases = PhaseSamples::new(&SNARK_PHASES);
    let mut gen: Vec<Duration> = Vec::new();
    let mut ver: Vec<Duration> = Vec::new();
    for d in &runs {
        phases.push(d);
        gen.push(d[2] + d[3]);
        ver.push(d[4]);
    }
    Ok(BenchResult {
        row: ReportRow {
            system: "SNARK".into(),
            proof_gen_ms: ms(median(&mut gen)),
            proof_verify_ms: ms(median(&mut ver)),
            proof_size_bytes: proof_bytes.len(),
            mem_before_kb: memory.before_kb,
            mem_after_kb: memory.after_kb,
            trusted_setup: true,
            security: "EC".into(),
        },
        phases: phases.summarize(),
        memory,
        proof_bytes,
        verified: true,
    })
}

/// Records the instant each prover phase starts.
struct PhaseClock {
    marks: Vec<Instant>,
}

impl PhaseHook for PhaseClock {
    fn enter(&mut self, _: StarkPhase) {
        self.marks.push(Instant::now());
    }

    fn finish(&mut self) {
        self.marks.push(Instant::now());
    }
}

/// Times the seven prover phases and verification.
pub fn run_stark_bench(cfg: &BenchConfig) -> Result<BenchResult, BenchError> {
    let params = StarkParams {
        num_queries: cfg.stark_queries,
    };
    let (proof_bytes, memory, runs) = repeat(cfg, "STARK", || {
        let mut clock = PhaseClock {
            marks: Vec::with_capacity(StarkPhase::ALL.len() + 1),
        };
        let (proof, _) = stark_prove_with(&params, &mut clock)?;
        let t = Instant::now();
        let ok = stark_verify(&proof);
        let verify = t.elapsed();
        if !ok {
            return Err(BenchError::VerificationFailed("STARK"));
        }
        let mut d: Vec<Duration> = clock.marks.windows(2).map(|w| w[1] - w[0]).collect();
        d.push(verify);
        Ok((serialize_stark_proof(&proof), d))
    })?;

    let labels: Vec<&'static str> = StarkPhase::ALL
        .iter()
        .map(|p| p.label())
        .chain(["verify"])
        .collect();
    let mut phases = PhaseSamples::new(&labels);
    let mut gen: Vec<Duration> = Vec::new();
    let mut ver: Vec<Duration> = Vec::new();
    for d in &runs {
        phases.push(d);
        let (prover, verify) = d.split_at(d.len() - 1);
        gen.push(prover.iter().sum());
        ver.push(verify[0]);
    }
    Ok(BenchResult {
        row: ReportRow {
            system: "STARK".into(),
            proof_gen_ms: ms(median(&mut gen)),
            proof_verify_ms: ms(median(&mut ver)),
            proof_size_bytes: proof_bytes.len(),
            mem_before_kb: memory.before_kb,
            mem_after_kb: memory.after_kb,
            trusted_setup: false,
            security: "Hash".into(),
        },
        phases: phases.summarize(),
        memory,
        proof_bytes,
        verified: true,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub snark: BenchResult,
    pub stark: BenchResult,
}

impl BenchReport {
    /// Runs the SNARK pipeline to completion before the STARK one so their
    /// timing windows never overlap.
    pub fn run(cfg: &BenchConfig) -> Result<Self, BenchError> {
        let snark = run_snark_bench(cfg)?;
        let stark = run_stark_bench(cfg)?;
        Ok(BenchReport { snark, stark })
    }

    pub fn size_ratio(&self) -> f64 {
        self.stark.row.proof_size_bytes as f64 / self.snark.row.proof_size_bytes as f64
    }

    pub fn results(&self) -> [&BenchResult; 2] {
        [&self.snark, &self.stark]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rss_line_parsing() {
        let status = "Name:\tzkbench\nVmPeak:\t  9000 kB\nVmRSS:\t    4321 kB\nThreads:\t1\n";
        assert_eq!(parse_vm_rss(status), Some(4321));
        assert_eq!(parse_vm_rss("Name:\tx\n"), None);
    }

    #[test]
    fn median_of_odd_and_even() {
        let mut odd = [5, 1, 3].map(Duration::from_millis);
        assert_eq!(median(&mut odd), Duration::from_millis(3));
        let mut even = [4, 1, 3, 2].map(Duration::from_millis);
        assert_eq!(median(&mut even), Duration::from_micros(2500));
    }

    #[test]
    fn percentages_sum_to_hundred() {
        let mut p = PhaseSamples::new(&["a", "b", "c"]);
        p.push(&[1, 2, 3].map(Duration::from_millis));
        p.push(&[3, 2, 1].map(Duration::from_millis));
        let s = p.summarize();
        let total: f64 = s.iter().map(|t| t.percent).sum();
        assert!((total - 100.0).abs() < 0.5);
        assert!(s.iter().all(|t| t.median <= t.max));
    }

    #[test]
    fn zero_iterations_rejected() {
        let cfg = BenchConfig {
            iterations: 0,
            ..BenchConfig::default()
        };
        assert!(matches!(run_stark_bench(&cfg), Err(BenchError::Config(_))));
    }
}
