use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::holonomy::HolonomyMap;
use crate::lie::{AlgebraElement, GroupElement};
use crate::path::{compose_paths, LoopAtBase, PathFamily, PathNd};

use super::fd::{central_derivative, log_at_step, FdConfig};

type ChiRule = Arc<dyn Fn(f64) -> Result<PathNd> + Send + Sync>;
type GRule = Arc<dyn Fn(f64) -> Result<GroupElement> + Send + Sync>;

/// A curve in a trivialized bundle: paths `χ[i]` from the basepoint to `p(i)` paired with
/// fiber values `g(i)`, for `i` in `[a, b]`.
///
/// The base curve `p` is stored as a path on `[0, 1]`; parameter `i` maps to
/// `(i − a) / (b − a)`.
#[derive(Clone)]
pub struct TrivializedCurve {
    interval: (f64, f64),
    base: PathNd,
    chi: ChiRule,
    g: GRule,
}

impl fmt::Debug for TrivializedCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TrivializedCurve")
            .field("interval", &self.interval)
            .field("base", &self.base)
            .finish_non_exhaustive()
    }
}

impl TrivializedCurve {
    pub fn new(
        interval: (f64, f64),
        base: PathNd,
        chi: impl Fn(f64) -> Result<PathNd> + Send + Sync + 'static,
        g: impl Fn(f64) -> Result<GroupElement> + Send + Sync + 'static,
    ) -> Result<Self> {
        let (a, b) = interval;
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidConfig(format!("bad parameter interval [{a}, {b}]")));
        }
        Ok(Self {
            interval,
            base,
            chi: Arc::new(chi),
            g: Arc::new(g),
        })
    }

    /// `χ[i] = ψ[p(i)]`.
    pub fn in_frame(
        psi: &PathFamily,
        base: PathNd,
        interval: (f64, f64),
        g: impl Fn(f64) -> Result<GroupElement> + Send + Sync + 'static,
    ) -> Result<Self> {
        let (a, b) = interval;
        let psi = psi.clone();
        let p = base.clone();
        Self::new(
            interval,
            base,
            move |i| psi.path_to(&p.eval((i - a) / (b - a))),
            g,
        )
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn base(&self) -> &PathNd {
        &self.base
    }

    fn local(&self, i: f64) -> f64 {
        let (a, b) = self.interval;
        (i - a) / (b - a)
    }

    /// `p(i)`.
    pub fn point(&self, i: f64) -> Vec<f64> {
        self.base.eval(self.local(i))
    }

    pub fn chi(&self, i: f64) -> Result<PathNd> {
        (self.chi)(i)
    }

    pub fn g(&self, i: f64) -> Result<GroupElement> {
        (self.g)(i)
    }

    /// A copy with `g(i)` replaced by `g(i)·g0`.
    pub fn right_translated(&self, g0: GroupElement) -> Self {
        let g = self.g.clone();
        Self {
            g: Arc::new(move |i| g(i)?.try_mul(&g0)),
            ..self.clone()
        }
    }

    /// `χ[i]⁻¹ ∘ (p from j to i) ∘ χ[j]`, thin-reduced.
    fn comparison_loop(&self, j: f64, i: f64, star: &[f64]) -> Result<LoopAtBase> {
        let chi_j = self.chi(j)?;
        let chi_i = self.chi(i)?;
        for (k, c) in [(j, &chi_j), (i, &chi_i)] {
            let p = self.point(k);
            let ok = |u: &[f64], v: &[f64]| u.iter().zip(v).all(|(a, b)| (a - b).abs() <= 1e-10);
            if !ok(c.start(), star) || !ok(c.end(), &p) {
                return Err(Error::InvalidPath(format!(
                    "chi[{k}] runs from {:?} to {:?}, expected {star:?} to {p:?}",
                    c.start(),
                    c.end()
                )));
            }
        }
        let arc = self.base.sub_arc(self.local(j), self.local(i));
        let path = compose_paths(&chi_i.invert(), &compose_paths(&arc, &chi_j)?)?;
        Ok(LoopAtBase::new(path)?.thin_reduce())
    }
}

/// Connection form on the tangent of `curve` at `j`: the derivative at `i = j` of
/// `log(g(j)⁻¹ · H(χ[i]⁻¹ ∘ p|_{j→i} ∘ χ[j]) · g(i))`.
pub fn connection_form_action(
    h: &HolonomyMap,
    curve: &TrivializedCurve,
    j: f64,
    cfg: &FdConfig,
) -> Result<AlgebraElement> {
    cfg.validate()?;
    let (a, b) = curve.interval();
    if j - cfg.h < a || j + cfg.h > b {
        return Err(Error::StepTooLarge(format!(
            "stencil [{}, {}] leaves the interval [{a}, {b}]",
            j - cfg.h,
            j + cfg.h
        )));
    }
    let gj_inv = curve.g(j)?.inverse();
    let d = central_derivative(
        |s| {
            let i = j + s;
            let lp = curve.comparison_loop(j, i, h.basepoint())?;
            let val = gj_inv.try_mul(&h.eval(&lp)?)?.try_mul(&curve.g(i)?)?;
            Ok(*log_at_step(&val, s.abs())?.matrix())
        },
        cfg.h,
        cfg.richardson,
    )?;
    Ok(AlgebraElement::projected(h.spec(), d))
}
