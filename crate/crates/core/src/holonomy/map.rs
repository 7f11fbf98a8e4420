use crate::error::{Error, Result};
use crate::lie::{exp_map, AlgebraElement, CMat, GroupElement, GroupSpec};
use crate::path::{LoopAtBase, PathNd, POINT_TOL};

use super::connection::{transport, ConnectionField, GaugeField};
use super::quadrature::default_rule;

#[derive(Debug, Clone)]
pub enum Backend {
    /// `exp ∮ A` by Gauss-Legendre quadrature; abelian groups only.
    AnalyticAbelian(ConnectionField),
    /// `u(1)⁻¹` from RK4 transport.
    TransportDerived {
        field: ConnectionField,
        steps_per_segment: usize,
    },
}

/// Evaluatable map from loops at `basepoint` to the group.
#[derive(Debug, Clone)]
pub struct HolonomyMap {
    backend: Backend,
    spec: GroupSpec,
    basepoint: Vec<f64>,
}

impl HolonomyMap {
    pub fn analytic(field: ConnectionField, basepoint: &[f64]) -> Result<Self> {
        let spec = field.spec();
        if !spec.is_abelian() {
            return Err(Error::NonAbelian(spec.to_string()));
        }
        check_dim(&field, basepoint)?;
        Ok(Self {
            backend: Backend::AnalyticAbelian(field),
            spec,
            basepoint: basepoint.to_vec(),
        })
    }

    pub fn transport(field: ConnectionField, steps_per_segment: usize, basepoint: &[f64]) -> Result<Self> {
        if steps_per_segment == 0 {
            return Err(Error::InvalidConfig("steps per segment must be positive".into()));
        }
        check_dim(&field, basepoint)?;
        Ok(Self {
            spec: field.spec(),
            backend: Backend::TransportDerived {
                field,
                steps_per_segment,
            },
            basepoint: basepoint.to_vec(),
        })
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn basepoint(&self) -> &[f64] {
        &self.basepoint
    }

    pub fn dim(&self) -> usize {
        self.basepoint.len()
    }

    /// The connection the map was built from.
    pub fn field(&self) -> &ConnectionField {
        match &self.backend {
            Backend::AnalyticAbelian(f) => f,
            Backend::TransportDerived { field, .. } => field,
        }
    }

    pub fn eval(&self, lp: &LoopAtBase) -> Result<GroupElement> {
        if lp.dim() != self.dim() {
            return Err(Error::DimMismatch {
                expected: self.dim(),
                got: lp.dim(),
            });
        }
        let same = lp
            .basepoint()
            .iter()
            .zip(&self.basepoint)
            .all(|(a, b)| (a - b).abs() <= 1e-10 * (1.0 + b.abs()));
        if !same {
            return Err(Error::BasepointMismatch {
                expected: self.basepoint.clone(),
                got: lp.basepoint().to_vec(),
            });
        }
        match &self.backend {
            Backend::AnalyticAbelian(field) => {
                let integral = line_integral(field, lp.path())?;
                Ok(exp_map(&AlgebraElement::projected(self.spec, integral)))
            }
            Backend::TransportDerived {
                field,
                steps_per_segment,
            } => Ok(transport(field, lp.path(), *steps_per_segment)?.inverse()),
        }
    }
}

fn check_dim(field: &ConnectionField, basepoint: &[f64]) -> Result<()> {
    if field.dim() != basepoint.len() {
        return Err(Error::DimMismatch {
            expected: field.dim(),
            got: basepoint.len(),
        });
    }
    Ok(())
}

/// `∫_p Σ_μ A_μ dx^μ`, segment by segment.
pub fn line_integral<F: GaugeField + ?Sized>(field: &F, p: &PathNd) -> Result<CMat> {
    let dim = p.dim();
    let mut x = vec![0.0; dim];
    let mut v = vec![0.0; dim];
    let mut acc = CMat::zeros(field.spec().matrix_dim);
    for seg in p.segments() {
        if seg.is_degenerate(POINT_TOL) {
            continue;
        }
        for &(t, w) in default_rule() {
            seg.eval_into(t, &mut x);
            seg.deriv_into(t, &mut v);
            acc += field.contract(&x, &v)?.scale(w);
        }
    }
    Ok(acc)
}

/// `H(α)` for the loop `α`.
pub fn eval_holonomy(h: &HolonomyMap, lp: &LoopAtBase) -> Result<GroupElement> {
    h.eval(lp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::group_distance;

    fn ydx() -> ConnectionField {
        ConnectionField::real_abelian(2, |x, mu| if mu == 0 { x[1] } else { 0.0 })
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

    #[test]
    fn unit_square_analytic() {
        let h = HolonomyMap::analytic(ydx(), &[0.0, 0.0]).unwrap();
        let g = h.eval(&unit_square()).unwrap();
        assert!((g.scalar().re - (-1f64).exp()).abs() < 1e-15);
        assert!((g.scalar().re - 0.367879).abs() < 1e-6);
    }

    #[test]
    fn unit_square_transport() {
        let h = HolonomyMap::transport(ydx(), 64, &[0.0, 0.0]).unwrap();
        let g = h.eval(&unit_square()).unwrap();
        assert!((g.scalar().re - (-1f64).exp()).abs() < 1e-8);
    }

    #[test]
    fn constant_loop_is_identity() {
        let lp = LoopAtBase::constant(&[0.0, 0.0]);
        let a = HolonomyMap::analytic(ydx(), &[0.0, 0.0]).unwrap();
        assert_eq!(a.eval(&lp).unwrap(), GroupElement::identity(a.spec()));
        let t = HolonomyMap::transport(ydx(), 8, &[0.0, 0.0]).unwrap();
        assert!(t.eval(&lp).unwrap().distance_to_identity() <= 1e-12);
    }

    #[test]
    fn basepoint_and_dimension_are_checked() {
        let h = HolonomyMap::analytic(ydx(), &[0.0, 0.0]).unwrap();
        let off = LoopAtBase::constant(&[1.0, 0.0]);
        assert!(matches!(h.eval(&off), Err(Error::BasepointMismatch { .. })));
        let wrong_dim = LoopAtBase::constant(&[0.0, 0.0, 0.0]);
        assert!(matches!(h.eval(&wrong_dim), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn analytic_backend_rejects_su2() {
        let f = ConnectionField::zero(2, GroupSpec::su2());
        assert!(matches!(HolonomyMap::analytic(f, &[0.0, 0.0]), Err(Error::NonAbelian(_))));
    }

    #[test]
    fn inverse_loop_gives_inverse_element() {
        let f = ConnectionField::from_coordinates(2, GroupSpec::su2(), |x, mu| {
            if mu == 0 {
                vec![x[1], 0.0, 0.3]
            } else {
                vec![0.0, x[0] * x[0], -x[1]]
            }
        });
        let h = HolonomyMap::transport(f, 128, &[0.0, 0.0]).unwrap();
        let lp = unit_square();
        let g = h.eval(&lp).unwrap();
        let gi = h.eval(&lp.invert()).unwrap();
        assert!(group_distance(&gi, &g.inverse()).unwrap() < 1e-8);
        assert!(g.distance_to_identity() > 0.1);
    }
}
