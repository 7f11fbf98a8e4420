//! Seeded randomized audits of the axioms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::par::{self, ExecMode};
use crate::path::{LoopAtBase, PathNd, Segment};

use super::axioms::{check_axiom1, check_axiom2, check_axiom3, AxiomReport};
use super::map::HolonomyMap;

/// A parametrized family of loops `[0, 1]^k → ΩM`.
pub type LoopFamily<'a> = &'a (dyn Fn(&[f64]) -> Result<LoopAtBase> + Sync);

#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub samples: usize,
    pub seed: u64,
    /// Random vertices are drawn from `* + [-radius, radius]ⁿ`.
    pub radius: f64,
    pub axiom1_tol: f64,
    pub axiom2_tol: f64,
    /// Pass bound for the second-difference proxy; `None` always passes.
    pub axiom3_bound: Option<f64>,
    pub axiom3_grid: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            samples: 100,
            seed: 0,
            radius: 1.0,
            axiom1_tol: 1e-10,
            axiom2_tol: 1e-8,
            axiom3_bound: None,
            axiom3_grid: 21,
        }
    }
}

/// Loops drawn for one audit sample.
#[derive(Debug, Clone)]
pub struct AuditSample {
    pub alpha: LoopAtBase,
    pub beta: LoopAtBase,
    /// `p⁻¹ ∘ p` for a random polyline `p` leaving the basepoint.
    pub thin: LoopAtBase,
    /// `thin` with the first half reparametrized by `i ↦ 4i³`.
    pub thin_warped: LoopAtBase,
}

/// Warp that is `4i³` on `[0, ½]` and the identity on `[½, 1]`.
pub fn half_cubic_warp() -> PathNd {
    PathNd::new(
        vec![
            Segment::cubic(&[0.0], &[0.0], &[0.0], &[0.5]),
            Segment::line(&[0.5], &[1.0]),
        ],
        vec![0.0, 0.5, 1.0],
    )
    .expect("warp is a valid path")
}

fn random_point(rng: &mut ChaCha8Rng, center: &[f64], radius: f64) -> Vec<f64> {
    center
        .iter()
        .map(|c| c + rng.gen_range(-radius..=radius))
        .collect()
}

fn random_loop(rng: &mut ChaCha8Rng, base: &[f64], radius: f64) -> Result<LoopAtBase> {
    let n = rng.gen_range(2..=4);
    let mut pts = vec![base.to_vec()];
    pts.extend((0..n).map(|_| random_point(rng, base, radius)));
    pts.push(base.to_vec());
    LoopAtBase::new(PathNd::polyline(&pts)?)
}

/// Deterministic sample set for `seed`.
pub fn draw_samples(base: &[f64], cfg: &AuditConfig) -> Result<Vec<AuditSample>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let warp = half_cubic_warp();
    let mut out = Vec::with_capacity(cfg.samples);
    for _ in 0..cfg.samples {
        let alpha = random_loop(&mut rng, base, cfg.radius)?;
        let beta = random_loop(&mut rng, base, cfg.radius)?;
        let legs = rng.gen_range(1..=3);
        let mut pts = vec![base.to_vec()];
        pts.extend((0..legs).map(|_| random_point(&mut rng, base, cfg.radius)));
        let p = PathNd::polyline(&pts)?;
        let thin = LoopAtBase::new(crate::path::compose_paths(&p.invert(), &p)?)?;
        let thin_warped = thin.reparametrize(&warp)?;
        out.push(AuditSample {
            alpha,
            beta,
            thin,
            thin_warped,
        });
    }
    Ok(out)
}

/// Runs the three checks. `family` (with its parameter count) feeds the Axiom 3 proxy.
pub fn run_audit(
    h: &HolonomyMap,
    family: Option<(LoopFamily<'_>, usize)>,
    cfg: &AuditConfig,
    mode: ExecMode,
) -> Result<AxiomReport> {
    let samples = draw_samples(h.basepoint(), cfg)?;
    let defects = par::map(mode, &samples, |s| -> Result<(f64, f64)> {
        let a1 = check_axiom1(h, &s.alpha, &s.beta)?;
        let a2 = check_axiom2(h, &s.thin)?.max(check_axiom2(h, &s.thin_warped)?);
        Ok((a1, a2))
    });
    let (mut a1, mut a2) = (0.0f64, 0.0f64);
    for d in defects {
        let (x, y) = d?;
        a1 = a1.max(x);
        a2 = a2.max(y);
    }
    let a3 = match family {
        Some((f, k)) => check_axiom3(h, f, k, cfg.axiom3_grid)?,
        None => 0.0,
    };
    Ok(AxiomReport {
        axiom1_max_defect: a1,
        axiom2_max_defect: a2,
        axiom3_max_second_difference: a3,
        samples: cfg.samples,
        pass: [
            a1 <= cfg.axiom1_tol,
            a2 <= cfg.axiom2_tol,
            cfg.axiom3_bound.is_none_or(|b| a3 <= b),
        ],
    })
}
