//! Command-line front end. Every subcommand writes JSON lines (or TSV for
//! `gtable --format tsv`) to stdout or `--out`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cohomology::{cohomology_json, dirac_cohomology_general, has_nonzero_dirac, SpinChoice};
use crate::error::Error;
use crate::oracle::battery::{check_bound, run_battery, BatteryOptions, TaskFilter};
use crate::spin::classify_spin_types;
use crate::symfunc::g_matrix;
use crate::unitary::{enumerate_speh_modules, validate_unitary, UnitaryModule};

/// Largest `n` accepted by `enumerate`.
pub const ENUMERATE_MAX_N: usize = 20;

/// Largest `n` accepted by `gtable` and `spintypes`.
pub const TABLE_MAX_N: usize = 14;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hecke-dirac", version, about = "Dirac cohomology of unitary graded Hecke algebra modules of gl(n)")]
pub struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateFilter {
    All,
    Nonzero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyFilter {
    All,
    #[value(name = "d2-only")]
    D2Only,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every multiset of Speh factors of size n, with the nonvanishing decision.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: EnumerateFilter,
    },
    /// Dirac cohomology of one module, e.g. "a(2,2)" or "a(2,1)*cs(a(1,1),1/4)".
    Cohomology {
        #[arg(long)]
        module: String,
        /// Spin module for odd n: + or -.
        #[arg(long, allow_hyphen_values = true)]
        spin: Option<String>,
    },
    /// The integer matrix g = K(-1)^{-1}.
    Gtable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
    },
    /// Genuine irreducible types of the pin cover with their dimensions.
    Spintypes {
        #[arg(long)]
        n: usize,
    },
    /// Runs the exact oracle battery up to max-n.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "all")]
        filter: VerifyFilter,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("{failed} of {total} verification tasks failed")]
    Verification { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Verification { .. } => EXIT_VERIFY_FAILED,
        }
    }
}

fn bounded(what: &'static str, n: usize, max: usize) -> Result<usize, Error> {
    if n == 0 {
        Err(Error::ZeroSize)
    } else if n > max {
        Err(Error::BoundExceeded { what, value: n, max })
    } else {
        Ok(n)
    }
}

fn line(out: &mut dyn Write, v: &serde_json::Value) -> io::Result<()> {
    writeln!(out, "{v}")
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Enumerate { n, filter } => {
            let n = bounded("n", *n, ENUMERATE_MAX_N)?;
            for x in enumerate_speh_modules(n) {
                let (nonzero, witness) = has_nonzero_dirac(&x);
                if *filter == EnumerateFilter::Nonzero && !nonzero {
                    continue;
                }
                let w = witness.map(|w| w.parts().to_vec());
                line(out, &json!({"module": x.to_string(), "n": n, "nonzero": nonzero, "witness": w}))?;
            }
        }
        Command::Cohomology { module, spin } => {
            let x: UnitaryModule = module.parse()?;
            let report = validate_unitary(&x);
            if !report.is_ok() {
                return Err(Error::Unsupported(format!("{x} is not in the unitary range: {report}")).into());
            }
            let requested = spin.as_deref().map(str::parse::<SpinChoice>).transpose()?;
            let choice = SpinChoice::resolve(x.n(), requested);
            let r = dirac_cohomology_general(&x, choice)?;
            line(out, &cohomology_json(&x, &r))?;
        }
        Command::Gtable { n, format } => {
            let g = g_matrix(bounded("n", *n, TABLE_MAX_N)?)?;
            match format {
                TableFormat::Tsv => write!(out, "{}", g.to_tsv())?,
                TableFormat::Json => {
                    for (p, row) in g.partitions().iter().zip(g.rows()) {
                        line(out, &json!({"lambda": p.parts(), "row": row}))?;
                    }
                }
            }
        }
        Command::Spintypes { n } => {
            for t in classify_spin_types(bounded("n", *n, TABLE_MAX_N)?) {
                let assoc = match t.associate_label() {
                    crate::spin::Associate::SelfAssociate => "self",
                    crate::spin::Associate::Plus => "+",
                    crate::spin::Associate::Minus => "-",
                };
                line(out, &json!({"type": t.to_string(), "lambda": t.lambda().parts(), "associate": assoc, "dimension": t.dimension()}))?;
            }
        }
        Command::Verify { max_n, filter, jobs } => {
            let max_n = check_bound(bounded("max_n", *max_n, usize::MAX)?)?;
            let filter = match filter {
                VerifyFilter::All => TaskFilter::All,
                VerifyFilter::D2Only => TaskFilter::D2Only,
            };
            let records = run_battery(&BatteryOptions { max_n, filter, jobs: *jobs })?;
            let failed = records.iter().filter(|r| !r.passed()).count();
            for r in &records {
                line(out, &serde_json::to_value(r).expect("serializable"))?;
            }
            if failed > 0 {
                return Err(CliError::Verification { failed, total: records.len() });
            }
        }
    }
    Ok(())
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(CliError::from).and_then(|f| {
            let mut w = BufWriter::new(f);
            execute(&cli.command, &mut w)?;
            w.flush().map_err(CliError::from)
        }),
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            execute(&cli.command, &mut w)
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
