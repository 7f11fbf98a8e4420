use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "holonomy-forge", version, about = "Reconstruct gauge potentials from holonomy maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reconstruct the potential on a grid and write it as CSV plus a JSON summary.
    Reconstruct(RunArgs),
    /// Check the holonomy axioms on seeded random loops.
    Audit(RunArgs),
    /// Rebuild a connection from its own holonomy and compare.
    Roundtrip(RunArgs),
    /// Inspect the compiled-in presets.
    Presets {
        #[command(subcommand)]
        action: PresetsAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum PresetsAction {
    List,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Preset name (see `presets list`).
    #[arg(long, conflicts_with = "input")]
    pub preset: Option<String>,

    /// Polynomial connection file (JSON) instead of a preset.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Grid nodes per axis.
    #[arg(long, value_name = "N", default_value_t = 9)]
    pub grid: usize,

    /// Domain box as `lo,hi`; defaults to the preset's box.
    #[arg(long = "box", value_name = "LO,HI", value_parser = parse_box, allow_hyphen_values = true)]
    pub bbox: Option<(f64, f64)>,

    /// Finite-difference step for the potential.
    #[arg(long, value_name = "X")]
    pub fd_h: Option<f64>,

    /// RK4 steps per path segment for transport-based holonomy.
    #[arg(long, value_name = "N")]
    pub steps: Option<usize>,

    /// Seed for randomized loops and sample paths.
    #[arg(long, value_name = "N", default_value_t = 0)]
    pub seed: u64,

    /// Number of random loop pairs for `audit`.
    #[arg(long, value_name = "N", default_value_t = 100)]
    pub samples: usize,

    /// Output directory.
    #[arg(long, value_name = "DIR", default_value = ".")]
    pub out: PathBuf,
}

fn parse_box(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `lo,hi`, got `{s}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if !(lo < hi) {
        return Err(format!("empty box [{lo}, {hi}]"));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_parsing() {
        assert_eq!(parse_box("-2,2"), Ok((-2.0, 2.0)));
        assert_eq!(parse_box(" -1.5 , 0.5"), Ok((-1.5, 0.5)));
        assert!(parse_box("2,-2").is_err());
        assert!(parse_box("2").is_err());
    }

    #[test]
    fn negative_box_is_accepted_on_the_command_line() {
        let cli = Cli::try_parse_from(["holonomy-forge", "reconstruct", "--preset", "paper-sec6", "--box", "-2,2"]).unwrap();
        let Command::Reconstruct(args) = cli.command else { panic!() };
        assert_eq!(args.bbox, Some((-2.0, 2.0)));
        assert_eq!(args.grid, 9);
    }
}
