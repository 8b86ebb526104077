//! Command-line front end.
//!
//! Machine output (JSON, CSV) goes to `--out`/`--csv` files or stdout; the
//! human summary goes to stderr. Exit codes: 0 success, 1 a verification
//! report failed, 2 invalid input or parameters.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::claims::{
    growth_table, verify_claim_2_1, verify_claim_2_2, verify_claims_3, verify_thm1_size,
    write_growth_csv, Family,
};
use crate::constructions::{glue_chain, squares, thm1_set, thm2_matching, thm3_set, thm4_matching};
use crate::exact::{gen_convex_random, RealSet};
use crate::oracles::{
    lcs_convex, max_convex_matching, max_weakly_convex_no4ap, CM_GUARD, NO4AP_GUARD,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "convexdiff",
    version,
    about = "Exact constructions and oracles for convex subsets of difference sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a set and write it as JSON.
    Construct(ConstructArgs),
    /// Glue the difference blocks of the cubic construction.
    Glue(GlueArgs),
    /// Build a matching on a convex set read from JSON.
    Match(MatchArgs),
    /// Run an exact search oracle.
    Oracle(OracleArgs),
    /// Run a claim checker and print its report.
    Verify(VerifyArgs),
    /// Emit growth tables.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SetKind {
    Thm1,
    Thm3,
    Squares,
    Random,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    kind: SetKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    strict: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct GlueArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatchKind {
    Thm2,
    Thm4,
}

#[derive(Debug, Args)]
struct MatchArgs {
    kind: MatchKind,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleKind {
    Lcs,
    Cm,
    No4ap,
}

#[derive(Debug, Args)]
struct OracleArgs {
    kind: OracleKind,
    #[arg(long = "in", conflicts_with = "n")]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClaimKind {
    Claim21,
    Claim22,
    Thm1size,
    Claims3,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    kind: ClaimKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 10_000)]
    sample_cap: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BenchKind {
    Growth,
}

#[derive(Debug, Args)]
struct BenchArgs {
    kind: BenchKind,
    #[arg(long)]
    family: String,
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long)]
    csv: PathBuf,
    #[arg(long)]
    threads: Option<usize>,
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("{line}");
            return 2;
        }
    };
    match dispatch(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn read_set(path: &Path) -> Result<RealSet> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Returns whether the command succeeded (false only for failed reports).
fn dispatch(command: Command) -> Result<bool> {
    match command {
        Command::Construct(args) => {
            let set = match args.kind {
                SetKind::Thm1 => thm1_set(args.n, args.strict)?,
                SetKind::Thm3 => thm3_set(args.n)?,
                SetKind::Squares => {
                    if args.n == 0 {
                        return Err(Error::InvalidParams("n must be at least 1".into()));
                    }
                    squares(args.n)
                }
                SetKind::Random => gen_convex_random(args.n, args.seed)?,
            };
            write_json(&args.out, &set)?;
            eprintln!(
                "construct {:?}: {} elements -> {}",
                args.kind,
                set.len(),
                args.out.display()
            );
        }
        Command::Glue(args) => {
            let (set, trace) = glue_chain(args.n, args.strict)?;
            write_json(&args.out, &set)?;
            if let Some(path) = &args.trace {
                write_json(path, &trace)?;
            }
            eprintln!(
                "glue n={}: |S| = {}, {} splices",
                args.n,
                set.len(),
                trace.splices.len()
            );
        }
        Command::Match(args) => {
            let set = read_set(&args.input)?;
            let m = match args.kind {
                MatchKind::Thm2 => thm2_matching(&set)?,
                MatchKind::Thm4 => thm4_matching(&set)?,
            };
            write_json(&args.out, &m)?;
            eprintln!(
                "match {:?}: {} pairs on {} elements",
                args.kind,
                m.len(),
                set.len()
            );
        }
        Command::Oracle(args) => {
            let result = with_threads(args.threads, || -> Result<_> {
                match args.kind {
                    OracleKind::Lcs => {
                        let set = read_set(args.input.as_deref().ok_or_else(|| {
                            Error::InvalidParams("oracle lcs needs --in".into())
                        })?)?;
                        lcs_convex(&set)
                    }
                    OracleKind::Cm => {
                        let set =
                            read_set(args.input.as_deref().ok_or_else(|| {
                                Error::InvalidParams("oracle cm needs --in".into())
                            })?)?;
                        max_convex_matching(&set, args.limit.unwrap_or(CM_GUARD))
                    }
                    OracleKind::No4ap => {
                        let n = args
                            .n
                            .ok_or_else(|| Error::InvalidParams("oracle no4ap needs --n".into()))?;
                        Ok(max_weakly_convex_no4ap(
                            n,
                            args.limit.unwrap_or(NO4AP_GUARD),
                        ))
                    }
                }
            })??;
            print_json(&result)?;
            eprintln!(
                "oracle {:?}: value {} (exhaustive: {})",
                args.kind, result.value, result.exhaustive
            );
        }
        Command::Verify(args) => {
            let report = match args.kind {
                ClaimKind::Claim21 => verify_claim_2_1(args.n)?,
                ClaimKind::Claim22 => verify_claim_2_2(args.n)?,
                ClaimKind::Thm1size => verify_thm1_size(args.n)?,
                ClaimKind::Claims3 => verify_claims_3(args.n, args.sample_cap)?,
            };
            print_json(&report)?;
            eprintln!(
                "verify {}: {}",
                report.claim_id,
                if report.passed { "passed" } else { "FAILED" }
            );
            return Ok(report.passed);
        }
        Command::Bench(args) => {
            let BenchKind::Growth = args.kind;
            let family: Family = args.family.parse()?;
            let rows = with_threads(args.threads, || growth_table(family, &args.n_list))??;
            write_growth_csv(&rows, fs::File::create(&args.csv)?)?;
            eprintln!(
                "bench growth {family}: {} rows -> {}",
                rows.len(),
                args.csv.display()
            );
        }
    }
    Ok(true)
}
