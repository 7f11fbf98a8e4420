use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holonomy::{line_integral, transport, ConnectionField, GaugeField, HolonomyMap};
use crate::lie::{exp_map, group_distance, AlgebraElement, GroupElement};
use crate::par::{self, ExecMode};
use crate::path::{PathFamily, PathNd};

use super::fd::FdConfig;
use super::frames::{curvature, gauge_transform_potential, horizontal_transport};
use super::potential::PotentialField;

/// Tensor lattice `[lo, hi]^dim` with `resolution` nodes per axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub dim: usize,
    pub resolution: usize,
    pub lo: f64,
    pub hi: f64,
}

impl Grid {
    pub fn new(dim: usize, resolution: usize, lo: f64, hi: f64) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::InvalidConfig(format!("grid resolution {resolution} < 2")));
        }
        if dim == 0 || !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidConfig(format!("bad grid box [{lo}, {hi}]^{dim}")));
        }
        Ok(Self {
            dim,
            resolution,
            lo,
            hi,
        })
    }

    pub fn len(&self) -> usize {
        self.resolution.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node coordinate `k` along one axis.
    pub fn coordinate(&self, k: usize) -> f64 {
        if k + 1 == self.resolution {
            return self.hi;
        }
        self.lo + (self.hi - self.lo) * k as f64 / (self.resolution - 1) as f64
    }

    /// Nodes with the first coordinate varying slowest.
    pub fn points(&self) -> Vec<Vec<f64>> {
        let n = self.resolution;
        (0..self.len())
            .map(|flat| {
                let mut r = flat;
                let mut x = vec![0.0; self.dim];
                for c in (0..self.dim).rev() {
                    x[c] = self.coordinate(r % n);
                    r /= n;
                }
                x
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RoundTripTolerances {
    pub curvature: f64,
    pub gauge: f64,
    pub transport: f64,
}

impl Default for RoundTripTolerances {
    fn default() -> Self {
        Self {
            curvature: 1e-4,
            gauge: 1e-5,
            transport: 1e-4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoundTripReport {
    pub grid: Grid,
    pub max_curvature_defect: f64,
    pub max_gauge_defect: f64,
    pub max_transport_defect: f64,
    pub tolerances: RoundTripTolerances,
    /// Grid points or sample paths where a computation failed, with the reason.
    pub failures: Vec<String>,
}

impl RoundTripReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
            && self.max_curvature_defect <= self.tolerances.curvature
            && self.max_gauge_defect <= self.tolerances.gauge
            && self.max_transport_defect <= self.tolerances.transport
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoundTripConfig {
    pub fd: FdConfig,
    /// RK4 steps per segment for the holonomy built from the input connection.
    pub steps: usize,
    pub transport_paths: usize,
    /// RK4 steps per segment when transporting with the reconstructed potential.
    pub ode_steps: usize,
    pub seed: u64,
    pub tolerances: RoundTripTolerances,
    pub mode: ExecMode,
}

impl Default for RoundTripConfig {
    fn default() -> Self {
        Self {
            fd: FdConfig::default(),
            steps: 64,
            transport_paths: 10,
            ode_steps: 32,
            seed: 0,
            tolerances: RoundTripTolerances::default(),
            mode: ExecMode::Parallel,
        }
    }
}

/// The gauge function relating the input potential to the one reconstructed in frame
/// `psi`: transport along `ψ[x]`, i.e. `u(1)` with `u' = −A(ψ̇)u`. Abelian inputs use
/// `exp(−∫_{ψ[x]} A)` directly.
pub fn frame_gauge(
    a_in: &ConnectionField,
    psi: &PathFamily,
    steps: usize,
    x: &[f64],
) -> Result<GroupElement> {
    let path = psi.path_to(x)?.thin_reduce();
    if a_in.spec().is_abelian() {
        let integral = line_integral(a_in, &path)?;
        Ok(exp_map(&AlgebraElement::projected(a_in.spec(), integral.scale(-1.0))))
    } else {
        transport(a_in, &path, steps)
    }
}

fn sample_paths(grid: &Grid, count: usize, seed: u64) -> Result<Vec<PathNd>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // keep sample paths inside the grid box, away from its faces
    let margin = 0.1 * (grid.hi - grid.lo);
    let (lo, hi) = (grid.lo + margin, grid.hi - margin);
    (0..count)
        .map(|_| {
            let pts: Vec<Vec<f64>> = (0..3)
                .map(|_| (0..grid.dim).map(|_| rng.gen_range(lo..=hi)).collect())
                .collect();
            PathNd::polyline(&pts)
        })
        .collect()
}

/// Builds the transport holonomy of `a_in`, reconstructs the potential in frame `psi`
/// and compares curvature, the gauge relation and horizontal transport.
pub fn round_trip_report(
    a_in: &ConnectionField,
    psi: &PathFamily,
    grid: &Grid,
    cfg: &RoundTripConfig,
) -> Result<RoundTripReport> {
    cfg.fd.validate()?;
    if grid.dim != a_in.dim() {
        return Err(Error::DimMismatch {
            expected: a_in.dim(),
            got: grid.dim,
        });
    }
    let h = HolonomyMap::transport(a_in.clone(), cfg.steps, psi.basepoint())?;
    let a_rec = PotentialField::reconstructed(h.clone(), psi.clone(), cfg.fd)?;
    let a_ref = PotentialField::closed_form(a_in.clone());
    let abelian = a_in.spec().is_abelian();
    let n = grid.dim;

    let per_point = |x: &Vec<f64>| -> Result<(f64, f64)> {
        let mut curv = 0.0f64;
        for mu in 0..n {
            for nu in (mu + 1)..n {
                let f_rec = curvature(&a_rec, x, mu, nu, &cfg.fd)?;
                let f_in = curvature(&a_ref, x, mu, nu, &cfg.fd)?;
                let d = if abelian {
                    (f_rec - f_in).norm()
                } else {
                    (f_rec.norm() - f_in.norm()).abs()
                };
                curv = curv.max(d);
            }
        }
        let mut gauge = 0.0f64;
        let w = |y: &[f64]| frame_gauge(a_in, psi, cfg.steps, y);
        for mu in 0..n {
            let predicted = gauge_transform_potential(&a_ref, w, x, mu, &cfg.fd)?;
            gauge = gauge.max((predicted - a_rec.component(x, mu)?).norm());
        }
        Ok((curv, gauge))
    };

    let points = grid.points();
    let results = par::map(cfg.mode, &points, per_point);
    let mut failures = Vec::new();
    let (mut max_curv, mut max_gauge) = (0.0f64, 0.0f64);
    for (x, r) in points.iter().zip(results) {
        match r {
            Ok((c, g)) => {
                max_curv = max_curv.max(c);
                max_gauge = max_gauge.max(g);
            }
            Err(e) => failures.push(format!("point {x:?}: {e}")),
        }
    }

    let paths = sample_paths(grid, cfg.transport_paths, cfg.seed)?;
    let e = GroupElement::identity(a_in.spec());
    let transported = par::map(cfg.mode, &paths, |p| -> Result<f64> {
        let lifted = horizontal_transport(&h, psi, p, &e, 1.0)?;
        let ode = transport(&a_rec, p, cfg.ode_steps)?;
        group_distance(&lifted, &ode)
    });
    let mut max_transport = 0.0f64;
    for (k, r) in transported.into_iter().enumerate() {
        match r {
            Ok(d) => max_transport = max_transport.max(d),
            Err(e) => failures.push(format!("sample path {k}: {e}")),
        }
    }

    Ok(RoundTripReport {
        grid: *grid,
        max_curvature_defect: max_curv,
        max_gauge_defect: max_gauge,
        max_transport_defect: max_transport,
        tolerances: cfg.tolerances,
        failures,
    })
}
