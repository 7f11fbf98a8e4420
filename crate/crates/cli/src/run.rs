use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use holonomy_core::holonomy::{run_audit, AuditConfig, ConnectionField, GaugeField, HolonomyMap, PolynomialConnection};
use holonomy_core::output::{potential_csv, to_json};
use holonomy_core::par::ExecMode;
use holonomy_core::path::{reconstruction_loop, LoopAtBase, PathFamily};
use holonomy_core::presets::{preset, presets, ExpectedPotential, PresetBackend};
use holonomy_core::reconstruction::{
    round_trip_report, FdConfig, Grid, PotentialField, RoundTripConfig, RoundTripTolerances,
};
use serde::Serialize;

use crate::args::RunArgs;

/// Whether the computed numbers met their tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    ToleranceFailure,
}

impl Verdict {
    fn from_pass(pass: bool) -> Self {
        if pass { Verdict::Pass } else { Verdict::ToleranceFailure }
    }
}

/// What a run operates on: a preset or a user connection file.
struct Source {
    name: String,
    connection: ConnectionField,
    holonomy: HolonomyMap,
    steps: usize,
    frame: PathFamily,
    domain: (f64, f64),
    expected: Option<ExpectedPotential>,
    reconstruct_tol: f64,
    audit: AuditConfig,
}

const DEFAULT_STEPS: usize = 64;

fn resolve(args: &RunArgs) -> Result<Source> {
    if let Some(steps) = args.steps {
        if steps == 0 {
            bail!("--steps must be positive");
        }
    }
    if args.grid < 2 {
        bail!("--grid must be at least 2, got {}", args.grid);
    }
    match (&args.preset, &args.input) {
        (Some(name), None) => {
            let p = preset(name)?;
            let steps = match p.backend {
                PresetBackend::Transport { steps } => args.steps.unwrap_or(steps),
                PresetBackend::Analytic => args.steps.unwrap_or(DEFAULT_STEPS),
            };
            Ok(Source {
                name: p.name.to_string(),
                holonomy: p.holonomy(args.steps)?,
                connection: p.connection.clone(),
                steps,
                frame: p.frame.clone(),
                domain: args.bbox.unwrap_or(p.domain),
                expected: p.expected.clone(),
                reconstruct_tol: p.reconstruct_tol,
                audit: p.audit_config(args.samples, args.seed),
            })
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let poly: PolynomialConnection =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            let connection = poly.to_field()?;
            let steps = args.steps.unwrap_or(DEFAULT_STEPS);
            let origin = vec![0.0; poly.dim];
            Ok(Source {
                name: path.display().to_string(),
                holonomy: HolonomyMap::transport(connection.clone(), steps, &origin)?,
                connection,
                steps,
                frame: PathFamily::radial(&origin),
                domain: args.bbox.unwrap_or((-1.0, 1.0)),
                expected: None,
                reconstruct_tol: 0.0,
                audit: AuditConfig {
                    samples: args.samples,
                    seed: args.seed,
                    axiom1_tol: 1e-6,
                    ..Default::default()
                },
            })
        }
        (None, None) => bail!("give either --preset or --input"),
        (Some(_), Some(_)) => bail!("--preset and --input are mutually exclusive"),
    }
}

fn fd_config(args: &RunArgs) -> Result<FdConfig> {
    let mut cfg = FdConfig::default();
    if let Some(h) = args.fd_h {
        cfg.h = h;
        cfg.curvature_h = cfg.curvature_h.max(h);
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Writes `contents` to `dir/name` via a temporary file and rename.
fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    let target = dir.join(name);
    tmp.persist(&target)
        .with_context(|| format!("writing {}", target.display()))?;
    Ok(())
}

#[derive(Serialize)]
struct ReconstructSummary<'a> {
    source: &'a str,
    grid: Grid,
    fd: FdConfig,
    steps: Option<usize>,
    rows: usize,
    max_abs_error: Option<f64>,
    tolerance: Option<f64>,
    pass: bool,
}

pub fn reconstruct(args: &RunArgs) -> Result<Verdict> {
    let src = resolve(args)?;
    let cfg = fd_config(args)?;
    let grid = Grid::new(src.connection.dim(), args.grid, src.domain.0, src.domain.1)?;
    let field = PotentialField::reconstructed(src.holonomy.clone(), src.frame.clone(), cfg)?;
    let csv = potential_csv(&field, &grid, ExecMode::Parallel)?;

    // every value is cached by now, so the comparison is cheap
    let (max_err, tol) = match &src.expected {
        Some(expected) => {
            let mut worst = 0.0f64;
            for x in grid.points() {
                for mu in 0..grid.dim {
                    worst = worst.max((field.component(&x, mu)? - expected(&x, mu)).norm());
                }
            }
            (Some(worst), Some(src.reconstruct_tol))
        }
        None => (None, None),
    };
    let pass = match (max_err, tol) {
        (Some(e), Some(t)) => e <= t,
        _ => true,
    };
    let transport = matches!(
        src.holonomy.backend(),
        holonomy_core::holonomy::Backend::TransportDerived { .. }
    );
    let summary = ReconstructSummary {
        source: &src.name,
        grid,
        fd: cfg,
        steps: transport.then_some(src.steps),
        rows: grid.len() * grid.dim,
        max_abs_error: max_err,
        tolerance: tol,
        pass,
    };
    write_atomic(&args.out, "potential.csv", &csv)?;
    write_atomic(&args.out, "reconstruct_summary.json", &to_json(&summary)?)?;
    match max_err {
        Some(e) => println!("{}: {} rows, max error {e:.3e}", src.name, summary.rows),
        None => println!("{}: {} rows, no closed form to compare against", src.name, summary.rows),
    }
    Ok(Verdict::from_pass(pass))
}

pub fn audit(args: &RunArgs) -> Result<Verdict> {
    let src = resolve(args)?;
    let dim = src.connection.dim();
    let frame = src.frame.clone();
    let family = move |u: &[f64]| -> holonomy_core::Result<LoopAtBase> {
        let x = vec![1.0; dim];
        let mut y = x.clone();
        y[0] += u[0];
        reconstruction_loop(&frame, &x, &y)
    };
    let report = run_audit(&src.holonomy, Some((&family, 1)), &src.audit, ExecMode::Parallel)?;
    write_atomic(&args.out, "axiom_report.json", &to_json(&report)?)?;
    println!(
        "{}: axiom 1 {:.3e}, axiom 2 {:.3e}, axiom 3 {:.3e}, pass {:?}",
        src.name,
        report.axiom1_max_defect,
        report.axiom2_max_defect,
        report.axiom3_max_second_difference,
        report.pass
    );
    Ok(Verdict::from_pass(report.all_pass()))
}

pub fn roundtrip(args: &RunArgs) -> Result<Verdict> {
    let src = resolve(args)?;
    let fd = fd_config(args)?;
    let grid = Grid::new(src.connection.dim(), args.grid, src.domain.0, src.domain.1)?;
    let tolerances = if src.connection.spec().is_abelian() {
        RoundTripTolerances::default()
    } else {
        RoundTripTolerances {
            curvature: 1e-3,
            gauge: 1e-4,
            transport: 1e-4,
        }
    };
    let cfg = RoundTripConfig {
        fd,
        steps: src.steps,
        seed: args.seed,
        tolerances,
        mode: ExecMode::Parallel,
        ..Default::default()
    };
    let report = round_trip_report(&src.connection, &src.frame, &grid, &cfg)?;
    write_atomic(&args.out, "roundtrip_report.json", &to_json(&report)?)?;
    println!(
        "{}: curvature {:.3e}, gauge {:.3e}, transport {:.3e}, {} failures",
        src.name,
        report.max_curvature_defect,
        report.max_gauge_defect,
        report.max_transport_defect,
        report.failures.len()
    );
    for f in &report.failures {
        eprintln!("  {f}");
    }
    Ok(Verdict::from_pass(report.pass()))
}

pub fn list_presets() {
    for p in presets() {
        let backend = match p.backend {
            PresetBackend::Analytic => "analytic".to_string(),
            PresetBackend::Transport { steps } => format!("transport/{steps}"),
        };
        println!(
            "{:<16} {:<6} {:<14} [{}, {}]  {}",
            p.name, p.group.to_string(), backend, p.domain.0, p.domain.1, p.description
        );
    }
}
