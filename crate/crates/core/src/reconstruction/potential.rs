use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::holonomy::{ConnectionField, GaugeField, HolonomyMap};
use crate::lie::{AlgebraElement, GroupSpec};
use crate::path::{reconstruction_loop, PathFamily};

use super::fd::{central_derivative, log_at_step, FdConfig};

pub(crate) fn check_basepoints(h: &HolonomyMap, psi: &PathFamily) -> Result<()> {
    if h.basepoint() != psi.basepoint() {
        return Err(Error::BasepointMismatch {
            expected: h.basepoint().to_vec(),
            got: psi.basepoint().to_vec(),
        });
    }
    Ok(())
}

/// `A_μ(x)` read off from the holonomy map: the derivative in `y` at `y = x` of
/// `log H(ψ[y]⁻¹ ∘ T_{y,x} ∘ ψ[x])` along `e_μ`.
pub fn reconstruct_potential(
    h: &HolonomyMap,
    psi: &PathFamily,
    x: &[f64],
    mu: usize,
    cfg: &FdConfig,
) -> Result<AlgebraElement> {
    cfg.validate()?;
    check_basepoints(h, psi)?;
    if x.len() != h.dim() {
        return Err(Error::DimMismatch {
            expected: h.dim(),
            got: x.len(),
        });
    }
    if mu >= x.len() {
        return Err(Error::InvalidConfig(format!("direction {mu} out of range")));
    }
    let spec = h.spec();
    let d = central_derivative(
        |s| {
            let mut y = x.to_vec();
            y[mu] += s;
            let lp = reconstruction_loop(psi, x, &y)?.thin_reduce();
            Ok(*log_at_step(&h.eval(&lp)?, s.abs())?.matrix())
        },
        cfg.h,
        cfg.richardson,
    )?;
    Ok(AlgebraElement::projected(spec, d))
}

#[derive(Debug)]
enum Source {
    ClosedForm(ConnectionField),
    Reconstructed {
        holonomy: HolonomyMap,
        psi: PathFamily,
        cfg: FdConfig,
    },
}

/// Gauge potential `A_μ(x)`, either given in closed form or reconstructed lazily from a
/// holonomy map with per-point memoization.
#[derive(Debug)]
pub struct PotentialField {
    dim: usize,
    spec: GroupSpec,
    source: Source,
    cache: DashMap<(Vec<u64>, usize), AlgebraElement>,
}

impl PotentialField {
    pub fn closed_form(field: ConnectionField) -> Self {
        Self {
            dim: field.dim(),
            spec: field.spec(),
            source: Source::ClosedForm(field),
            cache: DashMap::new(),
        }
    }

    pub fn reconstructed(holonomy: HolonomyMap, psi: PathFamily, cfg: FdConfig) -> Result<Self> {
        cfg.validate()?;
        check_basepoints(&holonomy, &psi)?;
        Ok(Self {
            dim: holonomy.dim(),
            spec: holonomy.spec(),
            source: Source::Reconstructed { holonomy, psi, cfg },
            cache: DashMap::new(),
        })
    }

    pub fn is_reconstructed(&self) -> bool {
        matches!(self.source, Source::Reconstructed { .. })
    }

    /// Number of memoized values.
    pub fn cached(&self) -> usize {
        self.cache.len()
    }
}

impl GaugeField for PotentialField {
    fn spec(&self) -> GroupSpec {
        self.spec
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn component(&self, x: &[f64], mu: usize) -> Result<AlgebraElement> {
        match &self.source {
            Source::ClosedForm(f) => f.component(x, mu),
            Source::Reconstructed { holonomy, psi, cfg } => {
                let key = (x.iter().map(|v| v.to_bits()).collect::<Vec<_>>(), mu);
                if let Some(v) = self.cache.get(&key) {
                    return Ok(*v);
                }
                let v = reconstruct_potential(holonomy, psi, x, mu, cfg)?;
                // values are deterministic, so racing writers store the same thing
                self.cache.insert(key, v);
                Ok(v)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::radial_family;

    fn sec6() -> HolonomyMap {
        let f = ConnectionField::real_abelian(2, |x, mu| if mu == 0 { x[1] } else { 0.0 });
        HolonomyMap::analytic(f, &[0.0, 0.0]).unwrap()
    }

    #[test]
    fn sec6_values() {
        let h = sec6();
        let psi = radial_family(&[0.0, 0.0]);
        let cfg = FdConfig::default();
        let a1 = reconstruct_potential(&h, &psi, &[1.0, 2.0], 0, &cfg).unwrap();
        let a2 = reconstruct_potential(&h, &psi, &[1.0, 2.0], 1, &cfg).unwrap();
        assert!((a1.scalar().re - 1.0).abs() < 1e-6);
        assert!((a2.scalar().re + 0.5).abs() < 1e-6);
    }

    #[test]
    fn at_the_basepoint() {
        let h = sec6();
        let psi = radial_family(&[0.0, 0.0]);
        for mu in 0..2 {
            let a = reconstruct_potential(&h, &psi, &[0.0, 0.0], mu, &FdConfig::default()).unwrap();
            assert!(a.norm() < 1e-10);
        }
    }

    #[test]
    fn zero_connection_gives_exact_zero() {
        let f = ConnectionField::zero(2, GroupSpec::multiplicative_reals());
        let h = HolonomyMap::analytic(f, &[0.0, 0.0]).unwrap();
        let psi = radial_family(&[0.0, 0.0]);
        let a = reconstruct_potential(&h, &psi, &[0.7, -1.3], 1, &FdConfig::default()).unwrap();
        assert_eq!(a.norm(), 0.0);
    }

    #[test]
    fn mismatched_frame_is_rejected() {
        let psi = radial_family(&[1.0, 0.0]);
        let r = reconstruct_potential(&sec6(), &psi, &[0.5, 0.5], 0, &FdConfig::default());
        assert!(matches!(r, Err(Error::BasepointMismatch { .. })));
    }

    #[test]
    fn step_too_large_for_su2() {
        let f = ConnectionField::from_coordinates(2, GroupSpec::su2(), |x, mu| {
            if mu == 0 { vec![0.0, 0.0, 0.0] } else { vec![50.0 * x[0], 0.0, 0.0] }
        });
        let h = HolonomyMap::transport(f, 16, &[0.0, 0.0]).unwrap();
        let psi = radial_family(&[0.0, 0.0]);
        let cfg = FdConfig {
            h: 0.09,
            richardson: false,
            curvature_h: 0.09,
        };
        let r = reconstruct_potential(&h, &psi, &[2.0, 2.0], 0, &cfg);
        assert!(matches!(r, Err(Error::StepTooLarge(_))), "{r:?}");
    }

    #[test]
    fn memoized_field_matches_direct_call() {
        let psi = radial_family(&[0.0, 0.0]);
        let cfg = FdConfig::default();
        let field = PotentialField::reconstructed(sec6(), psi.clone(), cfg).unwrap();
        let a = field.component(&[0.3, 0.4], 0).unwrap();
        let b = field.component(&[0.3, 0.4], 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(field.cached(), 1);
        assert_eq!(a, reconstruct_potential(&sec6(), &psi, &[0.3, 0.4], 0, &cfg).unwrap());
    }
}
