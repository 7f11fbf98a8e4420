//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use holonomy_core::holonomy::{run_audit, ConnectionField, GaugeField, HolonomyMap};
use holonomy_core::lie::GroupElement;
use holonomy_core::par::{self, ExecMode};
use holonomy_core::path::{LoopAtBase, PathFamily, PathNd};
use holonomy_core::presets::preset;
use holonomy_core::reconstruction::{
    connection_form_action, curvature, gauge_transform_potential, reconstruct_potential,
    round_trip_report, transition_function, FdConfig, Grid, PotentialField, RoundTripConfig,
    RoundTripTolerances, TrivializedCurve,
};
use holonomy_core::Result;

const STAR: [f64; 2] = [0.0, 0.0];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn max_of(values: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    let mut m = 0.0f64;
    for v in values {
        m = m.max(v?);
    }
    Ok(m)
}

fn unit_square() -> LoopAtBase {
    let p = PathNd::polyline(&[
        vec![0.0, 0.0],
        vec![1.0, 0.0],
        vec![1.0, 1.0],
        vec![0.0, 1.0],
        vec![0.0, 0.0],
    ])
    .unwrap();
    LoopAtBase::new(p).unwrap()
}

/// Reconstructed potential on a 9×9 grid over [-2, 2]² against y/2, -x/2.
fn criterion1() -> Result<Outcome> {
    let start = Instant::now();
    let p = preset("paper-sec6")?;
    let expected = p.expected.clone().unwrap();
    let field = PotentialField::reconstructed(p.holonomy(None)?, p.frame.clone(), FdConfig::default())?;
    let grid = Grid::new(2, 9, -2.0, 2.0)?;
    let points = grid.points();
    let err = max_of(par::map(ExecMode::Parallel, &points, |x| {
        let mut e = 0.0f64;
        for mu in 0..2 {
            e = e.max((field.component(x, mu)? - expected(x, mu)).norm());
        }
        Ok(e)
    }))?;
    let secs = start.elapsed().as_secs_f64();
    Ok(outcome(
        err <= 1e-6 && secs <= 5.0,
        format!("max error {err:.3e} (tol 1e-6), {secs:.3} s (limit 5 s)"),
    ))
}

/// Vertical tangent at fiber value z = 2.
fn criterion2() -> Result<Outcome> {
    let p = preset("paper-sec6")?;
    let h = p.holonomy(None)?;
    let z = 2.0;
    let curve = TrivializedCurve::in_frame(&p.frame, PathNd::constant(&[1.0, 1.0]), (-1.0, 1.0), move |i| {
        GroupElement::real(z + i)
    })?;
    let w = connection_form_action(&h, &curve, 0.0, &FdConfig::default())?.scalar().re;
    let err = (w - 0.5).abs();
    Ok(outcome(err <= 1e-8, format!("value {w:.12} (want 0.5 +- 1e-8)")))
}

/// Curvature of the reconstruction against the input and against F12 = -1.
fn criterion3() -> Result<Outcome> {
    let p = preset("paper-sec6")?;
    let cfg = FdConfig::default();
    let rec = PotentialField::reconstructed(p.holonomy(None)?, p.frame.clone(), cfg)?;
    let input = PotentialField::closed_form(p.connection.clone());
    let grid = Grid::new(2, 9, -2.0, 2.0)?;
    let points = grid.points();
    let err = max_of(par::map(ExecMode::Parallel, &points, |x| {
        let fr = curvature(&rec, x, 0, 1, &cfg)?;
        let fi = curvature(&input, x, 0, 1, &cfg)?;
        Ok((fr - fi).norm().max((fi.scalar().re + 1.0).abs()))
    }))?;
    Ok(outcome(err <= 1e-4, format!("max curvature defect {err:.3e} (tol 1e-4)")))
}

/// Transport-built holonomy of y dx, reconstructed and compared.
fn criterion4() -> Result<Outcome> {
    let start = Instant::now();
    let p = preset("abelian-ydx")?;
    let h = p.holonomy(Some(64))?;
    let square = h.eval(&unit_square())?.scalar().re;
    let square_err = (square - (-1f64).exp()).abs();
    let grid = Grid::new(2, 9, -1.0, 1.0)?;
    let cfg = RoundTripConfig {
        steps: 64,
        ..Default::default()
    };
    let report = round_trip_report(&p.connection, &p.frame, &grid, &cfg)?;
    let secs = start.elapsed().as_secs_f64();
    let pass = report.max_curvature_defect <= 1e-4
        && report.failures.is_empty()
        && square_err <= 1e-8
        && secs <= 30.0;
    Ok(outcome(
        pass,
        format!(
            "curvature defect {:.3e} (tol 1e-4), unit square {square:.10} (err {square_err:.2e}, tol 1e-8), {secs:.2} s (limit 30 s)",
            report.max_curvature_defect
        ),
    ))
}

/// Seeded audits of all three axioms.
fn criterion5() -> Result<Outcome> {
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, a1_tol) in [("paper-sec6", 1e-10), ("su2-shear", 1e-6), ("su2-twist", 1e-6)] {
        let p = preset(name)?;
        let h = p.holonomy(None)?;
        let mut audit = p.audit_config(100, 2024);
        audit.axiom1_tol = a1_tol;
        let family = p.axiom3_family();
        let r = run_audit(&h, Some((&family, 1)), &audit, ExecMode::Parallel)?;
        let bound = 2.0 * p.axiom3_reference;
        pass &= r.axiom1_max_defect <= a1_tol
            && r.axiom2_max_defect <= 1e-8
            && r.axiom3_max_second_difference <= bound;
        parts.push(format!(
            "{name}: a1 {:.1e} (tol {a1_tol:.0e}), a2 {:.1e}, a3 {:.3e} (bound {bound:.3e})",
            r.axiom1_max_defect, r.axiom2_max_defect, r.axiom3_max_second_difference
        ));
    }
    Ok(outcome(pass, parts.join("; ")))
}

/// SU(2) shear round trip.
fn criterion6() -> Result<Outcome> {
    let p = preset("su2-shear")?;
    let grid = Grid::new(2, 5, -1.0, 1.0)?;
    let cfg = RoundTripConfig {
        steps: 128,
        transport_paths: 10,
        tolerances: RoundTripTolerances {
            curvature: 1e-3,
            gauge: 1e-4,
            transport: 1e-4,
        },
        seed: 7,
        ..Default::default()
    };
    let r = round_trip_report(&p.connection, &p.frame, &grid, &cfg)?;
    let pass = r.max_curvature_defect <= 1e-3 && r.max_transport_defect <= 1e-4 && r.failures.is_empty();
    Ok(outcome(
        pass,
        format!(
            "curvature-norm defect {:.3e} (tol 1e-3), transport defect {:.3e} over 10 paths (tol 1e-4)",
            r.max_curvature_defect, r.max_transport_defect
        ),
    ))
}

/// Radial and dogleg frames related by the transition function.
fn criterion7() -> Result<Outcome> {
    let p = preset("paper-sec6")?;
    let h = p.holonomy(None)?;
    let cfg = FdConfig::default();
    let radial = p.frame.clone();
    let dogleg = PathFamily::dogleg(&STAR);
    let a_rad = PotentialField::reconstructed(h.clone(), radial.clone(), cfg)?;
    let a_dog = PotentialField::reconstructed(h.clone(), dogleg.clone(), cfg)?;
    let g = |y: &[f64]| transition_function(&h, &radial, &dogleg, y);
    let grid = Grid::new(2, 9, -2.0, 2.0)?;
    let points = grid.points();
    let cov = max_of(par::map(ExecMode::Parallel, &points, |x| {
        let mut e = 0.0f64;
        for mu in 0..2 {
            let moved = gauge_transform_potential(&a_rad, g, x, mu, &cfg)?;
            e = e.max((moved - a_dog.component(x, mu)?).norm());
        }
        Ok(e)
    }))?;
    let back = transition_function(&h, &dogleg, &radial, &[1.0, 1.0])?;
    let forth = transition_function(&h, &radial, &dogleg, &[1.0, 1.0])?;
    let t_err = (back.scalar().re - (-0.5f64).exp()).abs();
    let cocycle = (forth * back).distance_to_identity();
    Ok(outcome(
        cov <= 1e-5 && t_err <= 1e-9 && cocycle <= 1e-10,
        format!(
            "covariance defect {cov:.3e} (tol 1e-5), transition {:.12} (err {t_err:.1e}, tol 1e-9), cocycle {cocycle:.1e}",
            back.scalar().re
        ),
    ))
}

/// Least-squares slope of log2(error) against log2(1/step).
fn observed_order(steps: &[f64], errors: &[f64]) -> f64 {
    let xs: Vec<f64> = steps.iter().map(|s| -s.log2()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.log2()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    -num / den
}

/// Radial-gauge potential of an abelian field strength, by composite Simpson in t.
fn radial_gauge_oracle(f12: impl Fn(f64, f64) -> f64, x: [f64; 2], mu: usize) -> f64 {
    let n = 2000;
    let integrand = |t: f64| {
        let f = f12(t * x[0], t * x[1]);
        // A_μ = ∫ t x^ν F_νμ(tx) dt with F_21 = -F_12
        if mu == 0 { -t * x[1] * f } else { t * x[0] * f }
    };
    let h = 1.0 / n as f64;
    let mut s = integrand(0.0) + integrand(1.0);
    for k in 1..n {
        s += integrand(k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

fn criterion8() -> Result<Outcome> {
    // transport against the exact abelian value on the unit square
    let ydx = preset("paper-sec6")?.connection;
    let exact = (-1f64).exp();
    let step_counts = [4usize, 8, 16, 32];
    let mut errs = Vec::new();
    for &s in &step_counts {
        let h = HolonomyMap::transport(ydx.clone(), s, &STAR)?;
        errs.push((h.eval(&unit_square())?.scalar().re - exact).abs());
    }
    let widths: Vec<f64> = step_counts.iter().map(|&s| 1.0 / s as f64).collect();
    let transport_order = observed_order(&widths, &errs);

    // reconstruction against the radial-gauge oracle for a non-polynomial field
    let field = ConnectionField::real_abelian(2, |x, mu| {
        if mu == 0 { (x[0] + 2.0 * x[1]).sin() } else { (x[0] * x[1]).cos() }
    });
    let f12 = |x: f64, y: f64| -y * (x * y).sin() - 2.0 * (x + 2.0 * y).cos();
    let h = HolonomyMap::analytic(field, &STAR)?;
    let psi = PathFamily::radial(&STAR);
    let x = [0.6, -0.4];
    let fd_steps = [0.08, 0.04, 0.02, 0.01];
    let mut fd_orders = Vec::new();
    for mu in 0..2 {
        let want = radial_gauge_oracle(f12, x, mu);
        let mut e = Vec::new();
        for &step in &fd_steps {
            let cfg = FdConfig {
                h: step,
                richardson: true,
                curvature_h: step,
            };
            e.push((reconstruct_potential(&h, &psi, &x, mu, &cfg)?.scalar().re - want).abs());
        }
        fd_orders.push(observed_order(&fd_steps, &e));
    }
    let fd_order = fd_orders.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(outcome(
        transport_order >= 3.5 && fd_order >= 3.0,
        format!(
            "transport order {transport_order:.2} (need 3.5, errors {:.2e}..{:.2e}), potential order {fd_order:.2} with extrapolation (need 3)",
            errs[0],
            errs[errs.len() - 1]
        ),
    ))
}

fn main() -> ExitCode {
    if let Some(n) = par::thread_cap_from_env() {
        par::init_threads(Some(n));
    }
    let criteria: [(u32, &str, fn() -> Result<Outcome>); 8] = [
        (1, "reconstructed potential on the 9x9 grid", criterion1),
        (2, "vertical connection-form value", criterion2),
        (3, "curvature equivalence", criterion3),
        (4, "abelian round trip from transport", criterion4),
        (5, "axiom audits", criterion5),
        (6, "non-abelian round trip", criterion6),
        (7, "frame covariance and transition value", criterion7),
        (8, "convergence orders", criterion8),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let (pass, detail) = match run() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!("criterion {n} {}: {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
