//! Command-line front end.
//!
//! Exit codes: 0 success or valid proof, 1 invalid proof or failed
//! benchmark gate, 2 usage error, 3 I/O or malformed key file.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use zkbench_core::algebra::{Fr, PrimeField};
use zkbench_core::snark::{
    build_cubic_circuit, deserialize_snark_proof, generate_witness, prove, r1cs_to_qap,
    serialize_snark_proof, trusted_setup, verify_snark, ProvingKey, ToxicWaste, VerificationKey,
};
use zkbench_core::stark::{
    check_stark, deserialize_stark_proof, serialize_stark_proof, stark_prove, StarkParams,
};

use crate::bench::{BenchConfig, BenchReport};
use crate::report::{emit_report, parse_csv, render_markdown, ReportFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zkbench",
    version,
    about = "Prove, verify and benchmark a pairing SNARK and a FRI STARK"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate proving and verification keys for x^3 + x + 5 = y.
    SnarkSetup {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out_pk: PathBuf,
        #[arg(long)]
        out_vk: PathBuf,
    },
    /// Prove knowledge of x; prints the public y.
    SnarkProve {
        #[arg(long, value_parser = parse_fr)]
        x: Fr,
        #[arg(long)]
        pk: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    SnarkVerify {
        #[arg(long)]
        vk: PathBuf,
        #[arg(long)]
        proof: PathBuf,
        #[arg(long, value_parser = parse_fr)]
        public_y: Fr,
    },
    /// Prove the fixed FibonacciSq statement.
    StarkProve {
        #[arg(long, default_value_t = StarkParams::default().num_queries)]
        queries: usize,
        #[arg(long)]
        out: PathBuf,
    },
    StarkVerify {
        #[arg(long)]
        proof: PathBuf,
    },
    /// Time both pipelines and write CSV and/or Markdown reports.
    Bench {
        #[arg(long, default_value_t = BenchConfig::default().iterations)]
        iterations: usize,
        #[arg(long, default_value_t = BenchConfig::default().warmup_iterations)]
        warmup: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = BenchConfig::default().stark_queries)]
        queries: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        markdown: Option<PathBuf>,
    },
    /// Render a Markdown table from a CSV written by `bench`.
    Report {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        markdown: Option<PathBuf>,
    },
}

/// Decimal integer reduced into `F_r`; values at or above `r` are refused
/// rather than silently wrapped.
fn parse_fr(s: &str) -> Result<Fr, String> {
    let v = BigUint::from_str(s).map_err(|e| format!("not a non-negative integer: {e}"))?;
    if &v >= Fr::modulus() {
        return Err("value must be below the scalar field modulus".into());
    }
    Ok(Fr::from_biguint(&v))
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn io(path: &Path, e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("{}: {e}", path.display()),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::io(path, e))
}

fn seed_or_random(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = rand::random();
        eprintln!("seed: {s}");
        s
    })
}

/// Runs one parsed command, returning the text to print on success.
pub fn execute(command: Command) -> Result<String, Failure> {
    match command {
        Command::SnarkSetup {
            seed,
            out_pk,
            out_vk,
        } => {
            let seed = seed_or_random(seed);
            let qap =
                r1cs_to_qap(&build_cubic_circuit()).map_err(|e| Failure::invalid(e.to_string()))?;
            let waste = ToxicWaste::from_seed(seed, &qap);
            let (pk, vk) =
                trusted_setup(&qap, waste).map_err(|e| Failure::invalid(e.to_string()))?;
            write(&out_pk, &pk.to_bytes())?;
            write(&out_vk, &vk.to_bytes())?;
            Ok(format!(
                "wrote {} and {}",
                out_pk.display(),
                out_vk.display()
            ))
        }
        Command::SnarkProve { x, pk, out } => {
            let pk = ProvingKey::from_bytes(&read(&pk)?).map_err(|e| Failure::io(&pk, e))?;
            let circuit = build_cubic_circuit();
            let qap = r1cs_to_qap(&circuit).map_err(|e| Failure::invalid(e.to_string()))?;
            let witness =
                generate_witness(&circuit, &x).map_err(|e| Failure::invalid(e.to_string()))?;
            let proof = prove(&pk, &witness, &qap).map_err(|e| Failure::invalid(e.to_string()))?;
            let bytes = serialize_snark_proof(&proof);
            write(&out, &bytes)?;
            let y = &witness.values[zkbench_core::snark::var::Y];
            Ok(format!(
                "wrote {} ({} bytes); public y = {y}",
                out.display(),
                bytes.len()
            ))
        }
        Command::SnarkVerify {
            vk,
            proof,
            public_y,
        } => {
            let vk = VerificationKey::from_bytes(&read(&vk)?).map_err(|e| Failure::io(&vk, e))?;
            let proof = deserialize_snark_proof(&read(&proof)?)
                .map_err(|e| Failure::invalid(format!("invalid: {e}")))?;
            if verify_snark(&vk, &proof, &[public_y]) {
                Ok("valid".into())
            } else {
                Err(Failure::invalid("invalid"))
            }
        }
        Command::StarkProve { queries, out } => {
            let proof = stark_prove(&StarkParams {
                num_queries: queries,
            })
            .map_err(|e| Failure {
                code: EXIT_USAGE,
                message: e.to_string(),
            })?;
            let bytes = serialize_stark_proof(&proof);
            write(&out, &bytes)?;
            Ok(format!("wrote {} ({} bytes)", out.display(), bytes.len()))
        }
        Command::StarkVerify { proof } => {
            let proof = deserialize_stark_proof(&read(&proof)?)
                .map_err(|e| Failure::invalid(format!("invalid: {e}")))?;
            check_stark(&proof).map_err(|e| Failure::invalid(format!("invalid: {e}")))?;
            Ok("valid".into())
        }
        Command::Bench {
            iterations,
            warmup,
            seed,
            queries,
            csv,
            markdown,
        } => {
            let cfg = BenchConfig {
                iterations,
                warmup_iterations: warmup,
                seed: seed_or_random(seed),
                stark_queries: queries,
            };
            let report = BenchReport::run(&cfg).map_err(|e| Failure::invalid(e.to_string()))?;
            let results = report.results();
            let md = emit_report(&results, ReportFormat::Markdown)
                .map_err(|e| Failure::invalid(e.to_string()))?;
            if let Some(path) = &csv {
                let text = emit_report(&results, ReportFormat::Csv)
                    .map_err(|e| Failure::invalid(e.to_string()))?;
                write(path, text.as_bytes())?;
            }
            if let Some(path) = &markdown {
                write(path, md.as_bytes())?;
            }
            Ok(md)
        }
        Command::Report { csv, markdown } => {
            let text = String::from_utf8(read(&csv)?).map_err(|e| Failure::io(&csv, e))?;
            let rows = parse_csv(&text).map_err(|e| Failure::io(&csv, e))?;
            let md = render_markdown(&rows, &[]).map_err(|e| Failure::io(&csv, e))?;
            if let Some(path) = &markdown {
                write(path, md.as_bytes())?;
            }
            Ok(md)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Output goes to stdout, diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(out) => {
            println!("{out}");
            EXIT_OK
        }
        Err(f) => {
            eprintln!("{}", f.message);
            f.code
        }
    }
}
