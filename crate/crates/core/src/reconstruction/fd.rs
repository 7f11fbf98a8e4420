use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{log_map, AlgebraElement, CMat, GroupElement};

/// Finite-difference settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FdConfig {
    /// Step for potentials and connection-form values.
    pub h: f64,
    /// One Richardson step `(4 D(h/2) − D(h)) / 3` on top of the central difference.
    pub richardson: bool,
    /// Step for curvature stencils.
    pub curvature_h: f64,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self {
            h: 1e-4,
            richardson: true,
            curvature_h: 1e-3,
        }
    }
}

impl FdConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.h > 0.0 && self.h < 0.1) {
            return Err(Error::InvalidConfig(format!("h = {} must lie in (0, 0.1)", self.h)));
        }
        if !(self.curvature_h >= self.h) || !self.curvature_h.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "curvature_h = {} must be finite and at least h = {}",
                self.curvature_h, self.h
            )));
        }
        Ok(())
    }
}

/// Derivative at 0 of `s ↦ f(s)` by central differences, optionally extrapolated.
pub(crate) fn central_derivative<F>(f: F, h: f64, richardson: bool) -> Result<CMat>
where
    F: Fn(f64) -> Result<CMat>,
{
    let d = |h: f64| -> Result<CMat> { Ok((f(h)? - f(-h)?).scale(0.5 / h)) };
    let coarse = d(h)?;
    if !richardson {
        return Ok(coarse);
    }
    let fine = d(0.5 * h)?;
    Ok((fine.scale(4.0) - coarse).scale(1.0 / 3.0))
}

/// Logarithm whose failure means the difference step was too coarse.
pub(crate) fn log_at_step(g: &GroupElement, h: f64) -> Result<AlgebraElement> {
    log_map(g).map_err(|e| match e {
        Error::FarFromIdentity { distance } => Error::StepTooLarge(format!(
            "holonomy at step {h:e} is {distance:.3} from the identity"
        )),
        other => other,
    })
}
