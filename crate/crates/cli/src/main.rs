//! `ccv`: batch front end for capped-color-code construction,
//! verification, table emission, and protocol simulation.
//!
//! Exit codes: 0 = all verdicts pass, 1 = invalid invocation or
//! configuration, 2 = a verification failure (witness printed),
//! 3 = a resource ceiling was hit (partial verdict printed).

mod code_cmd;
mod config;
mod sim_cmd;
mod table_cmd;
mod verify_cmd;

use clap::{Parser, Subcommand};
use std::process::ExitCode;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAIL: u8 = 2;
pub const EXIT_CEILING: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ccv",
    about = "Construction, verification and simulation of capped color codes",
    version
)]
struct Cli {
    /// Optional TOML config file supplying defaults for omitted flags.
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and report its parameters.
    Code(code_cmd::CodeArgs),
    /// Run distinguishability and ordering-condition checkers.
    Verify(verify_cmd::VerifyArgs),
    /// Emit reference tables (single-fault errors, fault classes, qubit counts).
    Table(table_cmd::TableArgs),
    /// Run exhaustive audits or Monte Carlo simulations.
    Sim(sim_cmd::SimArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match config::JobConfig::load(cli.config.as_deref()) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    config::init_workers(&cfg);
    let code = match cli.command {
        Command::Code(args) => code_cmd::run(args, &cfg),
        Command::Verify(args) => verify_cmd::run(args, &cfg),
        Command::Table(args) => table_cmd::run(args, &cfg),
        Command::Sim(args) => sim_cmd::run(args, &cfg),
    };
    match code {
        Ok(exit) => ExitCode::from(exit),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
