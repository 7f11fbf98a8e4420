//! `holonomy-forge`: presets, grid reconstructions, axiom audits and round trips.
//!
//! Exit status: 0 on success, 2 when results miss their tolerances, 1 on bad input.

mod args;
mod run;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use holonomy_core::par;

use args::{Cli, Command, PresetsAction};
use run::Verdict;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    par::init_threads(par::thread_cap_from_env());

    let outcome = match &cli.command {
        Command::Reconstruct(a) => run::reconstruct(a),
        Command::Audit(a) => run::audit(a),
        Command::Roundtrip(a) => run::roundtrip(a),
        Command::Presets {
            action: PresetsAction::List,
        } => {
            run::list_presets();
            Ok(Verdict::Pass)
        }
    };
    match outcome {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::ToleranceFailure) => {
            eprintln!("error: results exceed tolerance");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
