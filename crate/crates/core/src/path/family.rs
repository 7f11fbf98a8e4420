//! Frames: a choice of reference path from the basepoint to every point.

use std::fmt;
use std::sync::Arc;

use super::pathnd::{compose_paths, straight_segment, LoopAtBase, PathNd, POINT_TOL};
use super::segment::Segment;
use crate::error::{Error, Result};

type Rule = Arc<dyn Fn(&[f64]) -> PathNd + Send + Sync>;

#[derive(Clone)]
enum FamilyRule {
    /// `ψ[x](i) = * + i(x − *)`.
    Radial,
    /// Axis-parallel legs from `*`, adjusting coordinate 1, then 2, ... in turn.
    Dogleg,
    Custom(Rule),
}

/// Path family `x ↦ ψ[x]` with `ψ[x](0) = *` and `ψ[x](1) = x`.
#[derive(Clone)]
pub struct PathFamily {
    basepoint: Vec<f64>,
    rule: FamilyRule,
}

impl fmt::Debug for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.rule {
            FamilyRule::Radial => "radial",
            FamilyRule::Dogleg => "dogleg",
            FamilyRule::Custom(_) => "custom",
        };
        f.debug_struct("PathFamily")
            .field("kind", &kind)
            .field("basepoint", &self.basepoint)
            .finish()
    }
}

impl PathFamily {
    pub fn radial(basepoint: &[f64]) -> Self {
        Self {
            basepoint: basepoint.to_vec(),
            rule: FamilyRule::Radial,
        }
    }

    pub fn dogleg(basepoint: &[f64]) -> Self {
        Self {
            basepoint: basepoint.to_vec(),
            rule: FamilyRule::Dogleg,
        }
    }

    /// A user rule; it must be a pure function of `x`. Endpoints are checked on every call.
    pub fn custom(
        basepoint: &[f64],
        rule: impl Fn(&[f64]) -> PathNd + Send + Sync + 'static,
    ) -> Self {
        Self {
            basepoint: basepoint.to_vec(),
            rule: FamilyRule::Custom(Arc::new(rule)),
        }
    }

    pub fn basepoint(&self) -> &[f64] {
        &self.basepoint
    }

    pub fn dim(&self) -> usize {
        self.basepoint.len()
    }

    pub fn name(&self) -> &'static str {
        match self.rule {
            FamilyRule::Radial => "radial",
            FamilyRule::Dogleg => "dogleg",
            FamilyRule::Custom(_) => "custom",
        }
    }

    /// `ψ[x]`.
    pub fn path_to(&self, x: &[f64]) -> Result<PathNd> {
        if x.len() != self.dim() {
            return Err(Error::DimMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        let star = &self.basepoint;
        match &self.rule {
            FamilyRule::Radial => Ok(straight_segment(star, x)),
            FamilyRule::Dogleg => {
                let mut corner = star.clone();
                let mut legs = Vec::new();
                for c in 0..x.len() {
                    if x[c] == corner[c] {
                        continue;
                    }
                    let mut next = corner.clone();
                    next[c] = x[c];
                    legs.push(Segment::line(&corner, &next));
                    corner = next;
                }
                if legs.is_empty() {
                    return Ok(PathNd::constant(star));
                }
                PathNd::from_segments(legs)
            }
            FamilyRule::Custom(rule) => {
                let p = rule(x);
                let ok = |a: &[f64], b: &[f64]| {
                    a.iter().zip(b).all(|(u, v)| (u - v).abs() <= POINT_TOL * (1.0 + u.abs()))
                };
                if p.dim() != x.len() || !ok(p.start(), star) || !ok(p.end(), x) {
                    return Err(Error::InvalidPath(format!(
                        "frame path for {x:?} runs from {:?} to {:?}",
                        p.start(),
                        p.end()
                    )));
                }
                Ok(p)
            }
        }
    }
}

pub fn radial_family(basepoint: &[f64]) -> PathFamily {
    PathFamily::radial(basepoint)
}

/// The loop `ψ[y]⁻¹ ∘ T_{y,x} ∘ ψ[x]` at the family's basepoint.
pub fn reconstruction_loop(psi: &PathFamily, x: &[f64], y: &[f64]) -> Result<LoopAtBase> {
    let to_x = psi.path_to(x)?;
    let back_from_y = psi.path_to(y)?.invert();
    let step = straight_segment(x, y);
    let path = compose_paths(&back_from_y, &compose_paths(&step, &to_x)?)?;
    LoopAtBase::new(path)
}
