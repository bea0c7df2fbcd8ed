//! `arthur`: packets, component groups, endoscopic data and c-Levi subgroups
//! of real classical groups from the command line.

mod pretty;
mod view;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use arthur_core::checks::{run, run_all, CheckConfig, CHECK_COUNT};
use arthur_core::compgroup::component_group;
use arthur_core::dsl::{parse_group, parse_param};
use arthur_core::endoscopy::elliptic_endoscopic_data;
use arthur_core::packets::build_packet;
use arthur_core::params::decompose;
use arthur_core::{Error, ErrorClass};

#[derive(Parser)]
#[command(name = "arthur", version, about = "Exact Arthur packet calculator for real classical groups")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Packet table of a good-parity parameter.
    Packet {
        #[arg(long)]
        group: String,
        #[arg(long)]
        param: String,
    },
    /// Presentation, s_psi and characters of the component group.
    Compgroup {
        #[arg(long)]
        group: String,
        #[arg(long)]
        param: String,
    },
    /// Elliptic endoscopic data of the quasi-split inner form.
    Endoscopy {
        #[arg(long)]
        group: String,
        /// Also list the c-Levi subgroups of each datum.
        #[arg(long)]
        c: Option<u32>,
    },
    /// c-Levi representatives, induction degrees and the superpacket distribution.
    Levi {
        #[arg(long)]
        group: String,
        #[arg(long)]
        c: u32,
    },
    /// Parity decomposition of a parameter.
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long)]
        param: String,
    },
    /// Run the oracle checks.
    Check {
        #[arg(long)]
        max_rank: Option<u32>,
        #[arg(long, default_value_t = CheckConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = CheckConfig::default().samples)]
        samples: usize,
        /// Run a single check by number.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=CHECK_COUNT as i64))]
        only: Option<u8>,
    },
}

enum Failure {
    Core(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit<T: Serialize>(format: Format, v: &T) {
    let value = serde_json::to_value(v).expect("views serialize");
    match format {
        Format::Json => out(&format!("{}\n", serde_json::to_string_pretty(&value).expect("views serialize"))),
        Format::Pretty => out(&pretty::render(&value)),
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Packet { group, param } => {
            let g = parse_group(&group)?;
            let psi = parse_param(&param, &g)?;
            let table = build_packet(&psi)?;
            let v = view::packet(&psi, &table);
            match format {
                Format::Json => emit(format, &v),
                Format::Pretty => out(&pretty::packet(&v)),
            }
        }
        Command::Compgroup { group, param } => {
            let g = parse_group(&group)?;
            let psi = parse_param(&param, &g)?;
            let cg = component_group(&decompose(&psi)?)?;
            emit(format, &view::compgroup(&psi, &cg));
        }
        Command::Endoscopy { group, c } => {
            let g = parse_group(&group)?;
            let data = elliptic_endoscopic_data(&g.quasi_split_form())?;
            emit(format, &view::endoscopy(&g, &data, c)?);
        }
        Command::Levi { group, c } => {
            let g = parse_group(&group)?;
            emit(format, &view::levi(&g, c)?);
        }
        Command::Decompose { group, param } => {
            let g = parse_group(&group)?;
            let psi = parse_param(&param, &g)?;
            let d = decompose(&psi)?;
            emit(format, &view::decompose(&psi, &d));
        }
        Command::Check { max_rank, seed, samples, only } => {
            let cfg = CheckConfig { seed, max_rank, samples };
            let outcomes = match only {
                Some(id) => run(id, &cfg).into_iter().collect(),
                None => run_all(&cfg),
            };
            match format {
                Format::Json => emit(format, &view::checks(seed, max_rank, samples, &outcomes)),
                Format::Pretty => {
                    for o in &outcomes {
                        let tag = if o.passed() { "PASS" } else { "FAIL" };
                        out(&format!("{tag} {:>2} {:<24} {}\n", o.id, o.name, o.summary()));
                    }
                }
            }
            if !outcomes.iter().all(|o| o.passed()) {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => {
            eprintln!("error: some checks failed");
            ExitCode::from(4)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Parse => 1,
                ErrorClass::Invalid => 2,
                ErrorClass::Unsupported => 3,
            })
        }
    }
}
