//! Compiled-in registry of example connections.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::holonomy::{AuditConfig, ConnectionField, GaugeField, HolonomyMap};
use crate::lie::{AlgebraElement, GroupSpec};
use crate::path::{reconstruction_loop, LoopAtBase, PathFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetBackend {
    Analytic,
    Transport { steps: usize },
}

/// The closed-form potential the reconstruction should return in the preset's frame.
pub type ExpectedPotential = Arc<dyn Fn(&[f64], usize) -> AlgebraElement + Send + Sync>;

#[derive(Clone)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub group: GroupSpec,
    pub connection: ConnectionField,
    pub backend: PresetBackend,
    pub frame: PathFamily,
    /// Default box `[lo, hi]^dim`.
    pub domain: (f64, f64),
    pub expected: Option<ExpectedPotential>,
    /// Max abs error allowed against `expected` by the reconstruct driver.
    pub reconstruct_tol: f64,
    /// Reference value of the Axiom 3 second-difference proxy on [`Preset::axiom3_family`].
    pub axiom3_reference: f64,
}

impl std::fmt::Debug for Preset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Preset")
            .field("name", &self.name)
            .field("group", &self.group)
            .field("backend", &self.backend)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

const ORIGIN: [f64; 2] = [0.0, 0.0];

impl Preset {
    pub fn dim(&self) -> usize {
        self.connection.dim()
    }

    /// The preset's holonomy map. `steps` overrides the transport step count.
    pub fn holonomy(&self, steps: Option<usize>) -> Result<HolonomyMap> {
        let base = self.frame.basepoint();
        match self.backend {
            PresetBackend::Analytic => HolonomyMap::analytic(self.connection.clone(), base),
            PresetBackend::Transport { steps: s } => {
                HolonomyMap::transport(self.connection.clone(), steps.unwrap_or(s), base)
            }
        }
    }

    /// `u ↦ ψ[(1,1)+u·e₁]⁻¹ ∘ T ∘ ψ[(1,1)]`, a one-parameter family with fixed segment
    /// structure.
    pub fn axiom3_family(&self) -> impl Fn(&[f64]) -> Result<LoopAtBase> + Sync + '_ {
        move |u: &[f64]| {
            let x = vec![1.0; self.dim()];
            let mut y = x.clone();
            y[0] += u[0];
            reconstruction_loop(&self.frame, &x, &y)
        }
    }

    /// Audit thresholds: exact backends get the tight axiom-1 bound, integrators the
    /// looser one; the Axiom 3 proxy may reach twice the recorded reference.
    pub fn audit_config(&self, samples: usize, seed: u64) -> AuditConfig {
        let axiom1_tol = match self.backend {
            PresetBackend::Analytic => 1e-10,
            PresetBackend::Transport { .. } => 1e-6,
        };
        AuditConfig {
            samples,
            seed,
            radius: 1.0,
            axiom1_tol,
            axiom2_tol: 1e-8,
            axiom3_bound: Some(2.0 * self.axiom3_reference + 1e-12),
            axiom3_grid: 21,
        }
    }
}

fn real(v: f64) -> AlgebraElement {
    AlgebraElement::real(v)
}

fn ydx() -> ConnectionField {
    ConnectionField::real_abelian(2, |x, mu| if mu == 0 { x[1] } else { 0.0 })
}

/// `½(y dx − x dy)`, the radial-gauge form of `y dx`.
fn half_ydx_radial() -> ExpectedPotential {
    Arc::new(|x, mu| if mu == 0 { real(0.5 * x[1]) } else { real(-0.5 * x[0]) })
}

fn su2_coords(v: [f64; 3]) -> AlgebraElement {
    AlgebraElement::from_coordinates(GroupSpec::su2(), &v).expect("three coordinates")
}

pub fn presets() -> Vec<Preset> {
    let radial = PathFamily::radial(&ORIGIN);
    let quarter_sqrt_e = 0.25 * 0.5f64.exp();
    vec![
        Preset {
            name: "paper-sec6",
            description: "R*, H = exp of the loop integral of y dx (analytic), radial frame at 0",
            group: GroupSpec::multiplicative_reals(),
            connection: ydx(),
            backend: PresetBackend::Analytic,
            frame: radial.clone(),
            domain: (-2.0, 2.0),
            expected: Some(half_ydx_radial()),
            reconstruct_tol: 1e-6,
            axiom3_reference: quarter_sqrt_e,
        },
        Preset {
            name: "abelian-ydx",
            description: "R*, A = y dx, holonomy by RK4 transport (64 steps per segment)",
            group: GroupSpec::multiplicative_reals(),
            connection: ydx(),
            backend: PresetBackend::Transport { steps: 64 },
            frame: radial.clone(),
            domain: (-2.0, 2.0),
            expected: Some(half_ydx_radial()),
            reconstruct_tol: 1e-6,
            axiom3_reference: quarter_sqrt_e,
        },
        Preset {
            name: "zero-connection",
            description: "R*, A = 0, so H is the identity on every loop",
            group: GroupSpec::multiplicative_reals(),
            connection: ConnectionField::zero(2, GroupSpec::multiplicative_reals()),
            backend: PresetBackend::Analytic,
            frame: radial.clone(),
            domain: (-2.0, 2.0),
            expected: Some(Arc::new(|_, _| real(0.0))),
            reconstruct_tol: 1e-12,
            axiom3_reference: 0.0,
        },
        Preset {
            name: "u1-uniform",
            description: "U(1), uniform field A = i(-y dx + x dy)/2, analytic",
            group: GroupSpec::u1(),
            connection: ConnectionField::from_coordinates(2, GroupSpec::u1(), |x, mu| {
                vec![if mu == 0 { -0.5 * x[1] } else { 0.5 * x[0] }]
            }),
            backend: PresetBackend::Analytic,
            frame: radial.clone(),
            domain: (-2.0, 2.0),
            expected: Some(Arc::new(|x, mu| {
                let c = if mu == 0 { -0.5 * x[1] } else { 0.5 * x[0] };
                AlgebraElement::from_coordinates(GroupSpec::u1(), &[c]).expect("one coordinate")
            })),
            reconstruct_tol: 1e-6,
            // H(u) = exp(-iu/2): second derivative 1/4
            axiom3_reference: 0.25,
        },
        Preset {
            name: "su2-shear",
            description: "SU(2), A = x1 X3 dx2 with X3 = i sigma3/2, RK4 transport (128 steps)",
            group: GroupSpec::su2(),
            connection: ConnectionField::from_coordinates(2, GroupSpec::su2(), |x, mu| {
                if mu == 0 { vec![0.0; 3] } else { vec![0.0, 0.0, x[0]] }
            }),
            backend: PresetBackend::Transport { steps: 128 },
            frame: radial.clone(),
            domain: (-1.0, 1.0),
            expected: Some(Arc::new(|x, mu| {
                if mu == 0 {
                    su2_coords([0.0, 0.0, -0.5 * x[1]])
                } else {
                    su2_coords([0.0, 0.0, 0.5 * x[0]])
                }
            })),
            reconstruct_tol: 1e-6,
            axiom3_reference: SU2_SHEAR_AXIOM3,
        },
        Preset {
            name: "su2-twist",
            description: "SU(2), A = x2 X1 dx1 + x1 X2 dx2 (non-commuting components), RK4 (128 steps)",
            group: GroupSpec::su2(),
            connection: ConnectionField::from_coordinates(2, GroupSpec::su2(), |x, mu| {
                if mu == 0 { vec![x[1], 0.0, 0.0] } else { vec![0.0, x[0], 0.0] }
            }),
            backend: PresetBackend::Transport { steps: 128 },
            frame: radial,
            domain: (-1.0, 1.0),
            expected: None,
            reconstruct_tol: 0.0,
            axiom3_reference: SU2_TWIST_AXIOM3,
        },
    ]
}

/// The shear holonomy of the family is `exp(-u/4 · iσ₃)`, whose second derivative has
/// Frobenius norm `√2/16`.
const SU2_SHEAR_AXIOM3: f64 = std::f64::consts::SQRT_2 / 16.0;
/// Recorded from a reference run of [`Preset::axiom3_family`] at grid 21 (128 steps).
const SU2_TWIST_AXIOM3: f64 = 0.395225;

pub fn preset(name: &str) -> Result<Preset> {
    presets()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::InvalidConfig(format!("unknown preset `{name}`")))
}
