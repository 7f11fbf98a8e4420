//! Horizontal lifts, transition functions, gauge transformations and curvature.

use crate::error::{Error, Result};
use crate::holonomy::{GaugeField, HolonomyMap};
use crate::lie::{AlgebraElement, CMat, GroupElement};
use crate::path::{compose_paths, LoopAtBase, PathFamily, PathNd};

use super::fd::{central_derivative, FdConfig};
use super::potential::check_basepoints;

/// Horizontal lift of `p` through `g0`, evaluated at `i`, using only the holonomy map:
/// `g(i) = H((K(p, i) ∘ ψ[p(0)])⁻¹ ∘ ψ[p(i)]) · g0`.
pub fn horizontal_transport(
    h: &HolonomyMap,
    psi: &PathFamily,
    p: &PathNd,
    g0: &GroupElement,
    i: f64,
) -> Result<GroupElement> {
    check_basepoints(h, psi)?;
    let i = i.clamp(0.0, 1.0);
    let head = compose_paths(&p.contract(i), &psi.path_to(p.start())?)?;
    let end = head.end().to_vec();
    let lp = LoopAtBase::new(compose_paths(&head.invert(), &psi.path_to(&end)?)?)?;
    h.eval(&lp.thin_reduce())?.try_mul(g0)
}

/// `g(x) = H(ψ2[x]⁻¹ ∘ ψ[x])`, relating the trivializations of `psi` and `psi2`.
pub fn transition_function(
    h: &HolonomyMap,
    psi: &PathFamily,
    psi2: &PathFamily,
    x: &[f64],
) -> Result<GroupElement> {
    if psi.basepoint() != psi2.basepoint() {
        return Err(Error::BasepointMismatch {
            expected: psi.basepoint().to_vec(),
            got: psi2.basepoint().to_vec(),
        });
    }
    check_basepoints(h, psi)?;
    let path = compose_paths(&psi2.path_to(x)?.invert(), &psi.path_to(x)?)?;
    h.eval(&LoopAtBase::new(path)?.thin_reduce())
}

/// `g⁻¹ A_μ g + g⁻¹ ∂_μ g` at `x`, with `∂_μ g` by central differences.
pub fn gauge_transform_potential<A, G>(
    a: &A,
    gfield: G,
    x: &[f64],
    mu: usize,
    cfg: &FdConfig,
) -> Result<AlgebraElement>
where
    A: GaugeField + ?Sized,
    G: Fn(&[f64]) -> Result<GroupElement>,
{
    cfg.validate()?;
    let g = gfield(x)?;
    let g_inv = *g.inverse().matrix();
    let dg = central_derivative(
        |s| {
            let mut y = x.to_vec();
            y[mu] += s;
            Ok(*gfield(&y)?.matrix())
        },
        cfg.h,
        cfg.richardson,
    )?;
    let am = *a.component(x, mu)?.matrix();
    Ok(AlgebraElement::projected(a.spec(), g_inv * am * *g.matrix() + g_inv * dg))
}

/// `F_{μν} = ∂_μ A_ν − ∂_ν A_μ + [A_μ, A_ν]` with stencil step `cfg.curvature_h`.
/// Exactly antisymmetric: `(ν, μ)` is computed as the negative of `(μ, ν)`.
pub fn curvature<A: GaugeField + ?Sized>(
    a: &A,
    x: &[f64],
    mu: usize,
    nu: usize,
    cfg: &FdConfig,
) -> Result<AlgebraElement> {
    cfg.validate()?;
    let spec = a.spec();
    if mu >= a.dim() || nu >= a.dim() {
        return Err(Error::InvalidConfig(format!("index pair ({mu}, {nu}) out of range")));
    }
    if mu == nu {
        return Ok(AlgebraElement::zero(spec));
    }
    if mu > nu {
        return Ok(curvature(a, x, nu, mu, cfg)?.scale(-1.0));
    }
    let partial = |dir: usize, comp: usize| {
        central_derivative(
            |s| {
                let mut y = x.to_vec();
                y[dir] += s;
                Ok(*a.component(&y, comp)?.matrix())
            },
            cfg.curvature_h,
            cfg.richardson,
        )
    };
    let am = *a.component(x, mu)?.matrix();
    let an = *a.component(x, nu)?.matrix();
    let f: CMat = partial(mu, nu)? - partial(nu, mu)? + am.commutator(&an);
    Ok(AlgebraElement::projected(spec, f))
}
