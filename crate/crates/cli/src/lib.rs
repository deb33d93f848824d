//! Front end for the `mmisr` binary: instance generation, solving,
//! validation and benchmarking.

pub mod algos;
pub mod bench;
pub mod gen;

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use mmisr::format::{parse_instance, parse_sequence, parse_td, write_sequence};
use mmisr::oracle::OracleLimits;
use mmisr::{validate_sequence, Instance};

use crate::algos::{Algo, Options};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

/// Bad flag values that clap cannot see.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser, Debug)]
#[command(name = "mmisr", version, about = "MaxMin independent set reconfiguration under token addition/removal")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct LimitArgs {
    /// Vertex cap for exhaustive search.
    #[arg(long, default_value_t = OracleLimits::default().max_vertices)]
    pub max_vertices: usize,
    /// State cap for exhaustive search.
    #[arg(long, default_value_t = OracleLimits::default().max_states)]
    pub max_states: usize,
}

impl LimitArgs {
    fn limits(self) -> OracleLimits {
        OracleLimits {
            max_vertices: self.max_vertices,
            max_states: self.max_states,
        }
    }
}

fn positive_f64(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        Ok(x) => Err(format!("must be a positive real, got {x}")),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve an instance and write the reconfiguration sequence.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Tree decomposition for the treewidth family.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, default_value_t = 1.0, value_parser = positive_f64, allow_negative_numbers = true)]
        eps: f64,
        /// Output path; defaults to the instance path with a `.seq` extension.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Check a sequence against an instance.
    Validate { instance: PathBuf, sequence: PathBuf },
    /// Write a generated graph or instance.
    Gen {
        #[command(subcommand)]
        kind: gen::GenKind,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run algorithms over a suite and write a CSV report.
    Bench {
        /// `small-exhaustive`, `trees-200`, or a glob of instance files.
        #[arg(long)]
        suite: String,
        /// Comma-separated algorithms; defaults depend on the suite.
        #[arg(long, value_enum, value_delimiter = ',')]
        algos: Vec<Algo>,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0, value_parser = positive_f64, allow_negative_numbers = true)]
        eps: f64,
        /// Fill the runtime column, which makes reruns differ.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_instance(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn fmt_bound(b: Option<f64>) -> String {
    match b {
        Some(x) if x.fract() == 0.0 => format!("{}", x as i64),
        Some(x) => format!("{x:.4}"),
        None => "none".into(),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Solve {
            instance,
            algo,
            td,
            eps,
            output,
            limits,
        } => {
            let inst = load_instance(&instance)?;
            let td = match td {
                Some(p) => Some(parse_td(&read(&p)?).with_context(|| format!("parsing {}", p.display()))?),
                None => None,
            };
            let opts = Options {
                eps,
                td,
                limits: limits.limits(),
            };
            let out = algos::run(&inst, algo, &opts)?;
            let value = out.value();
            let path = output.unwrap_or_else(|| instance.with_extension("seq"));
            write_output(Some(&path), &write_sequence(&out.seq))?;
            println!(
                "algo={} value={value} bound={}",
                out.algo.name(),
                fmt_bound(out.guarantee.bound(value, None))
            );
            Ok(EXIT_OK)
        }
        Command::Validate { instance, sequence } => {
            let inst = load_instance(&instance)?;
            let seq = parse_sequence(&read(&sequence)?).with_context(|| format!("parsing {}", sequence.display()))?;
            match validate_sequence(&inst, &seq).first_violation {
                None => {
                    println!("value={}", seq.value()?);
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    println!("{v}");
                    Ok(EXIT_INVALID)
                }
            }
        }
        Command::Gen { kind, output } => {
            write_output(output.as_deref(), &gen::generate(&kind)?)?;
            Ok(EXIT_OK)
        }
        Command::Bench {
            suite,
            algos,
            csv,
            seed,
            eps,
            timing,
            limits,
        } => {
            let instances = bench::suite(&suite, seed)?;
            let algos = if algos.is_empty() { bench::default_algos(&suite) } else { algos };
            let opts = Options {
                eps,
                td: None,
                limits: limits.limits(),
            };
            let rows = bench::run_rows(&instances, &algos, &opts, timing);
            write_output(Some(&csv), &bench::to_csv(&rows)?)?;
            println!("rows={}", rows.len());
            Ok(EXIT_OK)
        }
    }
}

/// Maps an error to the process exit code.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if cause.is::<UsageError>() {
            return EXIT_USAGE;
        }
        if let Some(e) = cause.downcast_ref::<mmisr::Error>() {
            return match e {
                mmisr::Error::Capacity { .. } => EXIT_CAPACITY,
                mmisr::Error::InvalidInput(_) | mmisr::Error::NotBipartite => EXIT_USAGE,
                _ => EXIT_DATA,
            };
        }
    }
    EXIT_DATA
}

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
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code(&e)
        }
    }
}
