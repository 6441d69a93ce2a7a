use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ospq::tmat::Reading;
use ospq_cli::emit::{self, Emitted};
use ospq_cli::{criteria, encode, suites, SuiteConfig, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, TRUNC_ENV};

#[derive(Debug, Parser)]
#[command(name = "ospq", version, about = "Build and verify objects of U_q[osp(1/2)] and its dual supergroup")]
struct Cli {
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReadingArg {
    Printed,
    PrintedAlt,
    Corrected,
}

impl From<ReadingArg> for Reading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::Printed => Reading::Printed,
            ReadingArg::PrintedAlt => Reading::PrintedAlt,
            ReadingArg::Corrected => Reading::Corrected,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites and write a case report.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_l: Option<i64>,
        /// Truncation order of the coalgebra maps.
        #[arg(long, env = TRUNC_ENV, default_value_t = ospq_cli::DEFAULT_TRUNC)]
        trunc: u32,
        /// Numeric sample point in (0, 1); repeatable.
        #[arg(long = "q-sample")]
        q_sample: Vec<f64>,
        /// Index bound `n,r,s` for the pairing and f-constant suites.
        #[arg(long, value_parser = parse_bounds)]
        bounds: Option<(u32, u32, u32)>,
        /// Reading of the recurrence coefficients.
        #[arg(long, value_enum, default_value_t = ReadingArg::Printed)]
        reading: ReadingArg,
    },
    /// Evaluate the acceptance criteria and print one line each.
    Acceptance,
    /// Representation matrix T^l over A.
    Tmat {
        #[arg(long)]
        l: i64,
        #[arg(long, default_value_t = 0)]
        lambda: u32,
    },
    /// Generator matrices of the irrep.
    Rep {
        #[arg(long)]
        l: i64,
        #[arg(long, default_value_t = 0)]
        lambda: u32,
    },
    /// Clebsch-Gordan coefficients.
    Cgc {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
        #[arg(long, default_value_t = 0)]
        lambda: u32,
    },
    /// R-matrix on a tensor product of irreps.
    Rmatrix {
        #[arg(long)]
        l1: i64,
        #[arg(long)]
        l2: i64,
        #[arg(long, default_value_t = 0)]
        lambda1: u32,
        #[arg(long, default_value_t = 0)]
        lambda2: u32,
    },
    /// zeta-polynomial of T^l against its little Q-Jacobi polynomial.
    Jacobi {
        #[arg(long)]
        l: i64,
        #[arg(long)]
        mp: i64,
        #[arg(long)]
        m: i64,
    },
}

fn parse_bounds(s: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<u32> = s.split(',').map(|p| p.trim().parse::<u32>()).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    match parts[..] {
        [n, r, t] => Ok((n, r, t)),
        _ => Err(format!("expected three comma-separated integers, got `{s}`")),
    }
}

fn write_out(out: &Option<PathBuf>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(bytes).context("writing to stdout"),
    }
}

fn emitted(cli: &Cli, e: Emitted) -> Result<u8> {
    let bytes = match cli.format {
        Format::Json => encode::to_bytes(&e.json)?,
        Format::Csv => encode::table_csv(&e.header, &e.rows)?,
    };
    write_out(&cli.out, &bytes)?;
    Ok(if e.verdict == Some(false) { EXIT_FAIL } else { EXIT_PASS })
}

fn verify(cli: &Cli, cfg: SuiteConfig) -> Result<u8> {
    cfg.validate()?;
    let reports = suites::run(&cfg)?;
    let bytes = match cli.format {
        Format::Json => encode::to_bytes(&encode::report_json(&reports))?,
        Format::Csv => encode::report_csv(&reports)?,
    };
    write_out(&cli.out, &bytes)?;
    let mut ok = true;
    for r in &reports {
        eprintln!("{:<18} {:>5}/{:<5} {}", r.suite, r.num_passed(), r.cases.len(), if r.passed() { "PASS" } else { "FAIL" });
        ok &= r.passed();
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

fn acceptance(cli: &Cli) -> Result<u8> {
    let mut text = String::new();
    let mut ok = true;
    for c in criteria::all() {
        let o = c.evaluate()?;
        ok &= o.passed();
        text.push_str(&format!("{o}\n"));
    }
    write_out(&cli.out, text.as_bytes())?;
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

fn dispatch(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Verify { suite, max_l, trunc, q_sample, bounds, reading } => {
            let mut cfg = SuiteConfig { suite: suite.clone(), max_l: *max_l, trunc: *trunc, bounds: *bounds, reading: (*reading).into(), ..Default::default() };
            if !q_sample.is_empty() {
                cfg.samples = q_sample.clone();
            }
            verify(cli, cfg)
        }
        Command::Acceptance => acceptance(cli),
        Command::Tmat { l, lambda } => emitted(cli, emit::tmat(*l, *lambda)?),
        Command::Rep { l, lambda } => emitted(cli, emit::rep(*l, *lambda)?),
        Command::Cgc { l1, l2, lambda } => emitted(cli, emit::cgc(*l1, *l2, *lambda)?),
        Command::Rmatrix { l1, l2, lambda1, lambda2 } => emitted(cli, emit::rmatrix(*l1, *l2, *lambda1, *lambda2)?),
        Command::Jacobi { l, mp, m } => emitted(cli, emit::jacobi(*l, *mp, *m)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS });
        }
    };
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(ospq_cli::exit_code(&e))
        }
    }
}
