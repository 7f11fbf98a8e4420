//! Connection fields `x ↦ A_μ(x)` and RK4 parallel transport along paths.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{AlgebraElement, CMat, GroupElement, GroupSpec};
use crate::path::PathNd;

/// Anything that assigns algebra-valued components `A_μ(x)` to points of ℝⁿ.
pub trait GaugeField: Send + Sync {
    fn spec(&self) -> GroupSpec;
    fn dim(&self) -> usize;
    fn component(&self, x: &[f64], mu: usize) -> Result<AlgebraElement>;

    /// `Σ_μ A_μ(x) v^μ` as a raw matrix.
    fn contract(&self, x: &[f64], v: &[f64]) -> Result<CMat> {
        let mut acc = CMat::zeros(self.spec().matrix_dim);
        for (mu, &vm) in v.iter().enumerate() {
            if vm != 0.0 {
                acc += self.component(x, mu)?.matrix().scale(vm);
            }
        }
        Ok(acc)
    }
}

type ComponentRule = Arc<dyn Fn(&[f64], usize) -> AlgebraElement + Send + Sync>;

/// Local gauge potential given by a closed-form rule.
#[derive(Clone)]
pub struct ConnectionField {
    dim: usize,
    spec: GroupSpec,
    rule: ComponentRule,
}

impl fmt::Debug for ConnectionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConnectionField")
            .field("dim", &self.dim)
            .field("spec", &self.spec)
            .finish_non_exhaustive()
    }
}

impl ConnectionField {
    /// The rule must be pure and return elements of `spec`'s algebra.
    pub fn new(
        dim: usize,
        spec: GroupSpec,
        rule: impl Fn(&[f64], usize) -> AlgebraElement + Send + Sync + 'static,
    ) -> Self {
        Self {
            dim,
            spec,
            rule: Arc::new(rule),
        }
    }

    pub fn zero(dim: usize, spec: GroupSpec) -> Self {
        Self::new(dim, spec, move |_, _| AlgebraElement::zero(spec))
    }

    /// Real-valued abelian potential, `A_μ(x) = f(x, μ)` in the multiplicative reals.
    pub fn real_abelian(dim: usize, f: impl Fn(&[f64], usize) -> f64 + Send + Sync + 'static) -> Self {
        Self::new(dim, GroupSpec::multiplicative_reals(), move |x, mu| {
            AlgebraElement::real(f(x, mu))
        })
    }

    /// Components as coordinates in the spec's algebra basis.
    pub fn from_coordinates(
        dim: usize,
        spec: GroupSpec,
        f: impl Fn(&[f64], usize) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        let basis = spec.algebra_basis();
        Self::new(dim, spec, move |x, mu| {
            let coords = f(x, mu);
            let mut m = CMat::zeros(spec.matrix_dim);
            for (b, c) in basis.iter().zip(coords) {
                m += b.scale(c);
            }
            AlgebraElement::projected(spec, m)
        })
    }
}

impl GaugeField for ConnectionField {
    fn spec(&self) -> GroupSpec {
        self.spec
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn component(&self, x: &[f64], mu: usize) -> Result<AlgebraElement> {
        if x.len() != self.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok((self.rule)(x, mu))
    }
}

/// One monomial `coeff · Π x_k^{powers[k]}` times basis generator `generator`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialTerm {
    pub coeff: f64,
    pub powers: Vec<u32>,
    pub generator: usize,
}

/// Restricted expression format for user connections: polynomial coefficients per
/// component, one list of terms per direction μ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialConnection {
    pub group: GroupSpec,
    pub dim: usize,
    pub components: Vec<Vec<PolynomialTerm>>,
}

impl PolynomialConnection {
    pub fn validate(&self) -> Result<()> {
        if self.components.len() != self.dim {
            return Err(Error::InvalidConfig(format!(
                "{} components given for dimension {}",
                self.components.len(),
                self.dim
            )));
        }
        for term in self.components.iter().flatten() {
            if term.powers.len() != self.dim {
                return Err(Error::InvalidConfig(format!(
                    "term has {} exponents, expected {}",
                    term.powers.len(),
                    self.dim
                )));
            }
            if term.generator >= self.group.algebra_dim {
                return Err(Error::InvalidConfig(format!(
                    "generator {} out of range for {}",
                    term.generator, self.group
                )));
            }
            if !term.coeff.is_finite() {
                return Err(Error::InvalidConfig("non-finite coefficient".into()));
            }
        }
        Ok(())
    }

    pub fn to_field(&self) -> Result<ConnectionField> {
        self.validate()?;
        let this = self.clone();
        let n = self.group.algebra_dim;
        Ok(ConnectionField::from_coordinates(self.dim, self.group, move |x, mu| {
            let mut coords = vec![0.0; n];
            for term in &this.components[mu] {
                let mono: f64 = x
                    .iter()
                    .zip(&term.powers)
                    .map(|(xi, &p)| xi.powi(p as i32))
                    .product();
                coords[term.generator] += term.coeff * mono;
            }
            coords
        }))
    }
}

/// Classical RK4 for `u' = −A(ṗ) u`, `u(0) = e`, with group projection after every step.
/// Returns `u(1)`.
pub fn transport<F: GaugeField + ?Sized>(
    field: &F,
    path: &PathNd,
    steps_per_segment: usize,
) -> Result<GroupElement> {
    let spec = field.spec();
    if path.dim() != field.dim() {
        return Err(Error::DimMismatch {
            expected: field.dim(),
            got: path.dim(),
        });
    }
    let steps = steps_per_segment.max(1);
    let dim = path.dim();
    let mut x = vec![0.0; dim];
    let mut v = vec![0.0; dim];
    let mut u = CMat::identity(spec.matrix_dim);
    let mut generator = |seg: &crate::path::Segment, s: f64| -> Result<CMat> {
        seg.eval_into(s, &mut x);
        seg.deriv_into(s, &mut v);
        Ok(-field.contract(&x, &v)?)
    };
    for seg in path.segments() {
        if seg.is_degenerate(0.0) {
            continue;
        }
        let ds = 1.0 / steps as f64;
        for k in 0..steps {
            let s = k as f64 * ds;
            let m0 = generator(seg, s)?;
            let mh = generator(seg, s + 0.5 * ds)?;
            let m1 = generator(seg, s + ds)?;
            let k1 = m0 * u;
            let k2 = mh * (u + k1.scale(0.5 * ds));
            let k3 = mh * (u + k2.scale(0.5 * ds));
            let k4 = m1 * (u + k3.scale(ds));
            u += (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(ds / 6.0);
            u = *GroupElement::projected(spec, u).matrix();
        }
    }
    GroupElement::new(spec, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::straight_segment;

    #[test]
    fn transport_along_constant_path_is_identity() {
        let a = ConnectionField::real_abelian(2, |x, mu| if mu == 0 { x[1] } else { 0.0 });
        let u = transport(&a, &PathNd::constant(&[0.3, 0.4]), 16).unwrap();
        assert_eq!(u, GroupElement::identity(a.spec()));
    }

    #[test]
    fn abelian_transport_is_exp_of_minus_integral() {
        // A = y dx along y = 1, x: 1 → 0 gives ∫A = −1, so u = e.
        let a = ConnectionField::real_abelian(2, |x, mu| if mu == 0 { x[1] } else { 0.0 });
        let u = transport(&a, &straight_segment(&[1.0, 1.0], &[0.0, 1.0]), 64).unwrap();
        assert!((u.scalar().re - 1f64.exp()).abs() < 1e-8, "{u:?}");
    }

    #[test]
    fn polynomial_connection_file() {
        let json = serde_json::json!({
            "group": {"name": "SU2"},
            "dim": 2,
            "components": [[], [{"coeff": 1.0, "powers": [1, 0], "generator": 2}]]
        });
        let poly: PolynomialConnection = serde_json::from_value(json).unwrap();
        let field = poly.to_field().unwrap();
        let a2 = field.component(&[0.5, 3.0], 1).unwrap();
        let want = AlgebraElement::from_coordinates(GroupSpec::su2(), &[0.0, 0.0, 0.5]).unwrap();
        assert!((*a2.matrix() - *want.matrix()).frobenius_norm() < 1e-15);
        assert_eq!(field.component(&[0.5, 3.0], 0).unwrap().norm(), 0.0);

        let mut bad = poly.clone();
        bad.components[1][0].generator = 3;
        assert!(bad.to_field().is_err());
    }
}
