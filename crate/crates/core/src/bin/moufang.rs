//! `moufang`: table checks, residual scans, identity ledgers and the
//! acceptance suite. Exit codes: 0 pass, 1 a required check failed, 2 bad
//! input or configuration.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use moufang_core::acceptance::selftest;
use moufang_core::birep::Algebra;
use moufang_core::commands::{
    charge_ledger_report, check_table, lie_cartan_report, EXIT_FAIL, EXIT_INPUT, EXIT_PASS,
};
use moufang_core::config::{
    OutputFormat, RunConfig, DEFAULT_LEDGER_SAMPLES, DEFAULT_LIE_CARTAN_SAMPLES, DEFAULT_LIE_CARTAN_TOL,
    DEFAULT_RADIUS, DEFAULT_SEED,
};
use moufang_core::numdiff::DiffConfig;
use moufang_core::report::Report;
use moufang_core::{Error, MulTable};

#[derive(Parser)]
#[command(name = "moufang", version, about = "Octonion loop, Malcev algebra and charge-algebra checks")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Octonion,
    Quaternion,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a Cayley table file and check the birepresentation axioms.
    CheckTable { path: PathBuf },
    /// Scan the Lie–Cartan relations at random chart points.
    LieCartan {
        #[arg(long, default_value_t = DEFAULT_LIE_CARTAN_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_LIE_CARTAN_TOL)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the charge-algebra identity ledger at one chart point.
    ChargeLedger {
        /// Chart coordinates (7 for octonions, 3 for quaternions).
        #[arg(long = "g", num_args = 1.., allow_negative_numbers = true, conflicts_with = "random")]
        g: Option<Vec<f64>>,
        /// Draw the point from the seeded generator (the default).
        #[arg(long)]
        random: bool,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Octonion)]
        algebra: AlgebraArg,
        /// Sampled index tuples per identity at the Fock level.
        #[arg(long, default_value_t = DEFAULT_LEDGER_SAMPLES)]
        samples: usize,
        /// Tolerance override, `NAME=VALUE`; repeatable.
        #[arg(long = "tol", value_parser = parse_override)]
        tol: Vec<(String, f64)>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance suite.
    Selftest {
        #[command(flatten)]
        common: Common,
        #[arg(long, hide = true)]
        perturb_sign_table: bool,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Radius of the chart ball random points are drawn from.
    #[arg(long, default_value_t = DEFAULT_RADIUS)]
    radius: f64,
    #[arg(long, default_value_t = DiffConfig::default().step)]
    fd_step: f64,
    #[arg(long, default_value_t = DiffConfig::default().levels)]
    fd_levels: usize,
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let value: f64 = value.parse().map_err(|e| format!("bad tolerance {value:?}: {e}"))?;
    Ok((name.to_string(), value))
}

fn base_config(command: &str, common: &Common, format: OutputFormat) -> RunConfig {
    RunConfig {
        command: command.into(),
        seed: common.seed,
        radius: common.radius,
        fd_step: common.fd_step,
        fd_levels: common.fd_levels,
        format,
        ..RunConfig::default()
    }
}

fn emit(report: &Report, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Text => print!("{}", report.to_text()),
    }
}

fn verdict(pass: bool) -> u8 {
    (if pass { EXIT_PASS } else { EXIT_FAIL }) as u8
}

fn run(cli: Cli) -> Result<u8, Error> {
    let format = match cli.format {
        Format::Json => OutputFormat::Json,
        Format::Text => OutputFormat::Text,
    };
    match cli.command {
        Command::CheckTable { path } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let report = check_table(&text)?;
            match format {
                OutputFormat::Json => println!("{}", report.to_json()),
                OutputFormat::Text => print!("{}", report.to_text()),
            }
            Ok(EXIT_PASS as u8)
        }
        Command::LieCartan { samples, tol, common } => {
            let mut cfg = base_config("lie-cartan", &common, format);
            cfg.samples = samples;
            cfg.tolerances = BTreeMap::from([("lie_cartan".to_string(), tol)]);
            let report = lie_cartan_report(&cfg)?;
            emit(&report, format);
            Ok(verdict(report.required_pass()))
        }
        Command::ChargeLedger {
            g,
            random: _,
            algebra,
            samples,
            tol,
            common,
        } => {
            let mut cfg = base_config("charge-ledger", &common, format);
            cfg.samples = samples;
            cfg.algebra = match algebra {
                AlgebraArg::Octonion => Algebra::Octonion,
                AlgebraArg::Quaternion => Algebra::Quaternion,
            };
            cfg.point = g;
            cfg.tolerances = tol.into_iter().collect();
            let report = charge_ledger_report(&cfg)?;
            emit(&report, format);
            if let Some(failed) = report.first_required_failure() {
                eprintln!("required entry failed: {}", failed.name);
            }
            Ok(verdict(report.required_pass()))
        }
        Command::Selftest {
            common,
            perturb_sign_table,
        } => {
            let cfg = base_config("selftest", &common, format);
            let table = if perturb_sign_table {
                MulTable::perturbed()
            } else {
                MulTable::STANDARD
            };
            let (report, results) = selftest(&cfg, table)?;
            match format {
                OutputFormat::Json => println!("{}", report.to_json()),
                OutputFormat::Text => {
                    for r in &results {
                        println!("{}", r.summary_line());
                    }
                }
            }
            if let Some(failed) = results.iter().find(|r| !r.pass) {
                let check = failed.first_failure().map(|c| c.name.as_str()).unwrap_or("");
                eprintln!("first failing criterion: {} {} ({check})", failed.id, failed.name);
            }
            Ok(verdict(report.pass()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { EXIT_PASS as u8 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
