//! Group specifications, group elements and algebra elements.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::expm;
use super::matrix::{CMat, MAX_DIM};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupName {
    MultiplicativeReals,
    U1,
    SU2,
    GLn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complex,
}

/// Which matrix group the elements live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct GroupSpec {
    pub name: GroupName,
    pub matrix_dim: usize,
    pub scalar_field: ScalarField,
    pub algebra_dim: usize,
}

#[derive(Deserialize)]
struct RawSpec {
    name: GroupName,
    matrix_dim: Option<usize>,
    scalar_field: Option<ScalarField>,
}

impl TryFrom<RawSpec> for GroupSpec {
    type Error = Error;
    fn try_from(raw: RawSpec) -> Result<Self> {
        match raw.name {
            GroupName::MultiplicativeReals => Ok(GroupSpec::multiplicative_reals()),
            GroupName::U1 => Ok(GroupSpec::u1()),
            GroupName::SU2 => Ok(GroupSpec::su2()),
            GroupName::GLn => GroupSpec::gl(
                raw.matrix_dim
                    .ok_or_else(|| Error::InvalidConfig("GLn needs matrix_dim".into()))?,
                raw.scalar_field.unwrap_or(ScalarField::Real),
            ),
        }
    }
}

impl GroupSpec {
    pub const fn multiplicative_reals() -> Self {
        Self {
            name: GroupName::MultiplicativeReals,
            matrix_dim: 1,
            scalar_field: ScalarField::Real,
            algebra_dim: 1,
        }
    }

    pub const fn u1() -> Self {
        Self {
            name: GroupName::U1,
            matrix_dim: 1,
            scalar_field: ScalarField::Complex,
            algebra_dim: 1,
        }
    }

    pub const fn su2() -> Self {
        Self {
            name: GroupName::SU2,
            matrix_dim: 2,
            scalar_field: ScalarField::Complex,
            algebra_dim: 3,
        }
    }

    pub fn gl(n: usize, field: ScalarField) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&n) {
            return Err(Error::InvalidConfig(format!(
                "GL(n) supports 1 <= n <= {MAX_DIM}, got {n}"
            )));
        }
        let algebra_dim = match field {
            ScalarField::Real => n * n,
            ScalarField::Complex => 2 * n * n,
        };
        Ok(Self {
            name: GroupName::GLn,
            matrix_dim: n,
            scalar_field: field,
            algebra_dim,
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.matrix_dim == 1
    }

    /// Real basis of the Lie algebra. For su(2) this is `i σ_k / 2`.
    pub fn algebra_basis(&self) -> Vec<CMat> {
        let i = Complex64::i();
        match self.name {
            GroupName::MultiplicativeReals => vec![CMat::identity(1)],
            GroupName::U1 => vec![CMat::scalar(i)],
            GroupName::SU2 => pauli().iter().map(|s| s.scale_c(i * 0.5)).collect(),
            GroupName::GLn => {
                let n = self.matrix_dim;
                let mut basis = Vec::with_capacity(self.algebra_dim);
                let units: &[Complex64] = match self.scalar_field {
                    ScalarField::Real => &[Complex64::new(1.0, 0.0)],
                    ScalarField::Complex => &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)],
                };
                for &u in units {
                    for r in 0..n {
                        for c in 0..n {
                            let mut m = CMat::zeros(n);
                            m.set(r, c, u);
                            basis.push(m);
                        }
                    }
                }
                basis
            }
        }
    }

    /// Nearest group element (Frobenius sense for the compact groups).
    pub(crate) fn project_group(&self, m: &CMat) -> CMat {
        match self.name {
            GroupName::MultiplicativeReals => {
                let re = m.get(0, 0).re;
                CMat::scalar(Complex64::new(re.max(f64::MIN_POSITIVE), 0.0))
            }
            GroupName::U1 => {
                let z = m.get(0, 0);
                let r = z.norm();
                if r == 0.0 {
                    CMat::identity(1)
                } else {
                    CMat::scalar(z / r)
                }
            }
            GroupName::SU2 => {
                // SU(2) = {[[a, b], [-conj b, conj a]] : |a|^2 + |b|^2 = 1}; project onto the
                // quaternion subspace, then normalize.
                let a = (m.get(0, 0) + m.get(1, 1).conj()) * 0.5;
                let b = (m.get(0, 1) - m.get(1, 0).conj()) * 0.5;
                let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
                if norm == 0.0 {
                    return CMat::identity(2);
                }
                let (a, b) = (a / norm, b / norm);
                CMat::from_row_major(&[a, b, -b.conj(), a.conj()]).unwrap()
            }
            GroupName::GLn => match self.scalar_field {
                ScalarField::Real => real_part(m),
                ScalarField::Complex => *m,
            },
        }
    }

    pub(crate) fn project_algebra(&self, m: &CMat) -> CMat {
        match self.name {
            GroupName::MultiplicativeReals => CMat::scalar(Complex64::new(m.get(0, 0).re, 0.0)),
            GroupName::U1 => CMat::scalar(Complex64::new(0.0, m.get(0, 0).im)),
            GroupName::SU2 => {
                let skew = (*m - m.adjoint()).scale(0.5);
                let tr = skew.trace() * 0.5;
                skew - CMat::identity(2).scale_c(tr)
            }
            GroupName::GLn => match self.scalar_field {
                ScalarField::Real => real_part(m),
                ScalarField::Complex => *m,
            },
        }
    }

    fn check_group(&self, m: &CMat) -> Result<()> {
        if m.dim() != self.matrix_dim {
            return Err(Error::DimMismatch {
                expected: self.matrix_dim,
                got: m.dim(),
            });
        }
        if !m.is_finite() {
            return Err(Error::InvalidElement("non-finite entry".into()));
        }
        if m.det().norm() <= 1e-12 {
            return Err(Error::InvalidElement("matrix is not invertible".into()));
        }
        match self.name {
            GroupName::MultiplicativeReals => {
                let z = m.get(0, 0);
                if z.im.abs() > 1e-12 || z.re <= 0.0 {
                    return Err(Error::InvalidElement(format!("{z} is not a positive real")));
                }
            }
            GroupName::U1 => {
                let r = m.get(0, 0).norm();
                if (r - 1.0).abs() > 1e-10 {
                    return Err(Error::InvalidElement(format!("|z| = {r} is not 1")));
                }
            }
            GroupName::SU2 => {
                let unitarity = (m.adjoint() * *m - CMat::identity(2)).frobenius_norm();
                let det = (m.det() - Complex64::new(1.0, 0.0)).norm();
                if unitarity > 1e-10 || det > 1e-10 {
                    return Err(Error::InvalidElement(format!(
                        "not in SU(2): unitarity defect {unitarity:.2e}, det defect {det:.2e}"
                    )));
                }
            }
            GroupName::GLn => {
                if self.scalar_field == ScalarField::Real && max_imag(m) > 1e-12 {
                    return Err(Error::InvalidElement("complex entry in GL(n, R)".into()));
                }
            }
        }
        Ok(())
    }

    fn check_algebra(&self, m: &CMat) -> Result<()> {
        if m.dim() != self.matrix_dim {
            return Err(Error::DimMismatch {
                expected: self.matrix_dim,
                got: m.dim(),
            });
        }
        if !m.is_finite() {
            return Err(Error::InvalidAlgebra("non-finite entry".into()));
        }
        let tol = 1e-12 * (1.0 + m.frobenius_norm());
        match self.name {
            GroupName::MultiplicativeReals if m.get(0, 0).im.abs() > tol => {
                Err(Error::InvalidAlgebra("entry is not real".into()))
            }
            GroupName::U1 if m.get(0, 0).re.abs() > tol => {
                Err(Error::InvalidAlgebra("entry is not purely imaginary".into()))
            }
            GroupName::SU2 => {
                let herm = (*m + m.adjoint()).frobenius_norm();
                let tr = m.trace().norm();
                if herm > tol || tr > tol {
                    Err(Error::InvalidAlgebra(format!(
                        "not in su(2): hermitian part {herm:.2e}, trace {tr:.2e}"
                    )))
                } else {
                    Ok(())
                }
            }
            GroupName::GLn if self.scalar_field == ScalarField::Real && max_imag(m) > tol => {
                Err(Error::InvalidAlgebra("complex entry in gl(n, R)".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name {
            GroupName::MultiplicativeReals => write!(f, "R*"),
            GroupName::U1 => write!(f, "U(1)"),
            GroupName::SU2 => write!(f, "SU(2)"),
            GroupName::GLn => {
                let field = match self.scalar_field {
                    ScalarField::Real => "R",
                    ScalarField::Complex => "C",
                };
                write!(f, "GL({}, {field})", self.matrix_dim)
            }
        }
    }
}

fn real_part(m: &CMat) -> CMat {
    let n = m.dim();
    let mut out = CMat::zeros(n);
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, Complex64::new(m.get(r, c).re, 0.0));
        }
    }
    out
}

fn max_imag(m: &CMat) -> f64 {
    m.to_row_major().iter().map(|z| z.im.abs()).fold(0.0, f64::max)
}

/// Pauli matrices σ₁, σ₂, σ₃.
pub fn pauli() -> [CMat; 3] {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::i();
    [
        CMat::from_row_major(&[o, l, l, o]).unwrap(),
        CMat::from_row_major(&[o, -i, i, o]).unwrap(),
        CMat::from_row_major(&[l, o, o, -l]).unwrap(),
    ]
}

fn check_same(a: &GroupSpec, b: &GroupSpec) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SpecMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

/// Member of a matrix Lie group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct GroupElement {
    spec: GroupSpec,
    matrix: CMat,
}

/// Member of the Lie algebra of a matrix group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct AlgebraElement {
    spec: GroupSpec,
    matrix: CMat,
}

/// Wire form shared by group and algebra elements: row-major `(re, im)` pairs.
#[derive(Serialize, Deserialize)]
struct RawElement {
    spec: GroupSpec,
    matrix: Vec<(f64, f64)>,
}

fn raw_matrix(raw: &RawElement) -> Result<CMat> {
    let entries: Vec<Complex64> = raw
        .matrix
        .iter()
        .map(|&(re, im)| Complex64::new(re, im))
        .collect();
    CMat::from_row_major(&entries)
        .ok_or_else(|| Error::InvalidElement(format!("{} entries is not a square matrix", entries.len())))
}

fn to_raw(spec: GroupSpec, matrix: &CMat) -> RawElement {
    RawElement {
        spec,
        matrix: matrix.to_row_major().iter().map(|z| (z.re, z.im)).collect(),
    }
}

impl TryFrom<RawElement> for GroupElement {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        let m = raw_matrix(&raw)?;
        GroupElement::new(raw.spec, m)
    }
}

impl From<GroupElement> for RawElement {
    fn from(g: GroupElement) -> Self {
        to_raw(g.spec, &g.matrix)
    }
}

impl TryFrom<RawElement> for AlgebraElement {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        let m = raw_matrix(&raw)?;
        AlgebraElement::new(raw.spec, m)
    }
}

impl From<AlgebraElement> for RawElement {
    fn from(x: AlgebraElement) -> Self {
        to_raw(x.spec, &x.matrix)
    }
}

impl GroupElement {
    /// Validated constructor; rejects matrices outside the group.
    pub fn new(spec: GroupSpec, matrix: CMat) -> Result<Self> {
        spec.check_group(&matrix)?;
        Ok(Self { spec, matrix })
    }

    /// Projects `matrix` onto the group before wrapping it.
    pub fn projected(spec: GroupSpec, matrix: CMat) -> Self {
        Self {
            spec,
            matrix: spec.project_group(&matrix),
        }
    }

    pub fn identity(spec: GroupSpec) -> Self {
        Self {
            spec,
            matrix: CMat::identity(spec.matrix_dim),
        }
    }

    /// Positive real number as an element of the multiplicative group.
    pub fn real(value: f64) -> Result<Self> {
        Self::new(
            GroupSpec::multiplicative_reals(),
            CMat::scalar(Complex64::new(value, 0.0)),
        )
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    /// Scalar value of a one-dimensional element.
    pub fn scalar(&self) -> Complex64 {
        self.matrix.get(0, 0)
    }

    pub fn inverse(&self) -> Self {
        let m = match self.spec.name {
            GroupName::U1 | GroupName::SU2 => self.matrix.adjoint(),
            _ => self
                .matrix
                .inverse()
                .expect("group elements are invertible"),
        };
        Self::projected(self.spec, m)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.spec, &other.spec)?;
        Ok(Self::projected(self.spec, self.matrix * other.matrix))
    }

    /// Adjoint action `g X g⁻¹`.
    pub fn adjoint_action(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::projected(self.spec, self.matrix * *x.matrix() * self.inverse().matrix)
    }

    /// Frobenius distance to the identity.
    pub fn distance_to_identity(&self) -> f64 {
        (self.matrix - CMat::identity(self.spec.matrix_dim)).frobenius_norm()
    }
}

impl std::ops::Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        self.try_mul(&rhs).expect("group spec mismatch in product")
    }
}

impl AlgebraElement {
    pub fn new(spec: GroupSpec, matrix: CMat) -> Result<Self> {
        spec.check_algebra(&matrix)?;
        Ok(Self { spec, matrix })
    }

    pub fn projected(spec: GroupSpec, matrix: CMat) -> Self {
        Self {
            spec,
            matrix: spec.project_algebra(&matrix),
        }
    }

    pub fn zero(spec: GroupSpec) -> Self {
        Self {
            spec,
            matrix: CMat::zeros(spec.matrix_dim),
        }
    }

    /// Linear combination of the spec's real basis.
    pub fn from_coordinates(spec: GroupSpec, coords: &[f64]) -> Result<Self> {
        let basis = spec.algebra_basis();
        if coords.len() != basis.len() {
            return Err(Error::DimMismatch {
                expected: basis.len(),
                got: coords.len(),
            });
        }
        let mut m = CMat::zeros(spec.matrix_dim);
        for (b, &c) in basis.iter().zip(coords) {
            m += b.scale(c);
        }
        Ok(Self { spec, matrix: m })
    }

    pub fn real(value: f64) -> Self {
        Self {
            spec: GroupSpec::multiplicative_reals(),
            matrix: CMat::scalar(Complex64::new(value, 0.0)),
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    pub fn scalar(&self) -> Complex64 {
        self.matrix.get(0, 0)
    }

    pub fn norm(&self) -> f64 {
        self.matrix.frobenius_norm()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            spec: self.spec,
            matrix: self.matrix.scale(s),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_same(&self.spec, &other.spec)?;
        Ok(Self {
            spec: self.spec,
            matrix: self.matrix + other.matrix,
        })
    }

    pub fn bracket(&self, other: &Self) -> Self {
        Self::projected(self.spec, self.matrix.commutator(&other.matrix))
    }

    pub fn exp(&self) -> GroupElement {
        exp_map(self)
    }
}

impl std::ops::Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        self.try_add(&rhs).expect("group spec mismatch in sum")
    }
}

impl std::ops::Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        self + rhs.scale(-1.0)
    }
}

/// Group exponential, projected back onto the group.
pub fn exp_map(x: &AlgebraElement) -> GroupElement {
    GroupElement::projected(x.spec, expm::expm(&x.matrix))
}

/// Principal logarithm.
///
/// One-dimensional groups use the scalar principal logarithm, defined on the whole group
/// (except `-1` in U(1), where the branch cut is taken). Matrix groups require the
/// element to lie within Frobenius distance 0.5 of the identity.
pub fn log_map(g: &GroupElement) -> Result<AlgebraElement> {
    let spec = g.spec;
    let m = match spec.matrix_dim {
        1 => CMat::scalar(g.scalar().ln()),
        _ => {
            let distance = g.distance_to_identity();
            if distance >= 0.5 {
                return Err(Error::FarFromIdentity { distance });
            }
            expm::logm_near_identity(&g.matrix)
        }
    };
    Ok(AlgebraElement::projected(spec, m))
}

/// Frobenius distance between two elements of the same group.
pub fn group_distance(a: &GroupElement, b: &GroupElement) -> Result<f64> {
    check_same(&a.spec, &b.spec)?;
    Ok((a.matrix - b.matrix).frobenius_norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2_from(coords: [f64; 3]) -> AlgebraElement {
        AlgebraElement::from_coordinates(GroupSpec::su2(), &coords).unwrap()
    }

    #[test]
    fn spec_invariants() {
        let r = GroupSpec::multiplicative_reals();
        assert_eq!((r.matrix_dim, r.scalar_field, r.algebra_dim), (1, ScalarField::Real, 1));
        let u = GroupSpec::u1();
        assert_eq!((u.matrix_dim, u.scalar_field, u.algebra_dim), (1, ScalarField::Complex, 1));
        let s = GroupSpec::su2();
        assert_eq!((s.matrix_dim, s.scalar_field, s.algebra_dim), (2, ScalarField::Complex, 3));
        assert!(GroupSpec::gl(5, ScalarField::Real).is_err());
        assert_eq!(GroupSpec::gl(3, ScalarField::Complex).unwrap().algebra_dim, 18);
    }

    #[test]
    fn exp_zero_is_identity() {
        for spec in [
            GroupSpec::multiplicative_reals(),
            GroupSpec::u1(),
            GroupSpec::su2(),
            GroupSpec::gl(3, ScalarField::Real).unwrap(),
        ] {
            let g = exp_map(&AlgebraElement::zero(spec));
            assert_eq!(g, GroupElement::identity(spec));
        }
    }

    #[test]
    fn exp_of_minus_one_real() {
        let g = exp_map(&AlgebraElement::real(-1.0));
        assert!((g.scalar().re - (-1.0f64).exp()).abs() < 1e-16);
        assert!((g.scalar().re - 0.367879).abs() < 1e-6);
    }

    #[test]
    fn exp_su2_against_taylor_oracle() {
        // π·X₃ with X₃ = iσ₃/2 gives diag(e^{iπ/2}, e^{-iπ/2}) = diag(i, -i).
        let x = su2_from([0.0, 0.0, std::f64::consts::PI]);
        let g = exp_map(&x);
        let oracle = taylor_exp(x.matrix(), 20);
        assert!((*g.matrix() - oracle).frobenius_norm() < 1e-12);
        let i = Complex64::i();
        assert!((g.matrix().get(0, 0) - i).norm() < 1e-14);
        assert!((g.matrix().get(1, 1) + i).norm() < 1e-14);
    }

    // Plain truncated power series, no scaling.
    fn taylor_exp(x: &CMat, terms: usize) -> CMat {
        let mut sum = CMat::identity(x.dim());
        let mut term = CMat::identity(x.dim());
        for k in 1..terms {
            term = (term * *x).scale(1.0 / k as f64);
            sum += term;
        }
        sum
    }

    #[test]
    fn log_identity_is_zero() {
        for spec in [GroupSpec::multiplicative_reals(), GroupSpec::u1(), GroupSpec::su2()] {
            let x = log_map(&GroupElement::identity(spec)).unwrap();
            assert!(x.norm() < 1e-15);
        }
    }

    #[test]
    fn log_of_inverse_e() {
        let g = GroupElement::real(0.367879).unwrap();
        let x = log_map(&g).unwrap();
        assert!((x.scalar().re - 0.367879f64.ln()).abs() < 1e-15);
        // the input is e⁻¹ rounded to six digits
        assert!((x.scalar().re + 1.0).abs() < 2e-6);
        let exact = GroupElement::real((-1.0f64).exp()).unwrap();
        assert!((log_map(&exact).unwrap().scalar().re + 1.0).abs() < 1e-9);
    }

    #[test]
    fn log_far_from_identity_is_rejected() {
        let g = exp_map(&su2_from([0.0, 0.0, 2.0]));
        assert!(matches!(log_map(&g), Err(Error::FarFromIdentity { .. })));
    }

    #[test]
    fn distance_examples() {
        let a = GroupElement::real(1.0).unwrap();
        let b = GroupElement::real(2.0).unwrap();
        assert_eq!(group_distance(&a, &a).unwrap(), 0.0);
        assert_eq!(group_distance(&a, &b).unwrap(), 1.0);
        let s = GroupElement::identity(GroupSpec::su2());
        assert!(matches!(group_distance(&a, &s), Err(Error::SpecMismatch { .. })));
    }

    #[test]
    fn distance_first_order() {
        let g = exp_map(&su2_from([0.3, -0.2, 0.9]));
        let x = su2_from([1.0, 2.0, -0.5]);
        let eps = 1e-6;
        let h = g * exp_map(&x.scale(eps));
        let d = group_distance(&g, &h).unwrap();
        // ‖g(e^{εX} − 1)‖ = ε‖X‖ + O(ε²) since g is unitary
        assert!((d / eps - x.norm()).abs() < 1e-5);
    }

    #[test]
    fn element_validation() {
        assert!(GroupElement::real(-1.0).is_err());
        assert!(GroupElement::new(GroupSpec::u1(), CMat::scalar(Complex64::new(2.0, 0.0))).is_err());
        let not_su2 = CMat::from_real(2, &[1.0, 0.0, 0.0, 2.0]);
        assert!(GroupElement::new(GroupSpec::su2(), not_su2).is_err());
        let gl = GroupSpec::gl(2, ScalarField::Real).unwrap();
        assert!(GroupElement::new(gl, CMat::from_real(2, &[1.0, 2.0, 2.0, 4.0])).is_err());
        assert!(AlgebraElement::new(GroupSpec::u1(), CMat::scalar(Complex64::new(1.0, 0.0))).is_err());
        assert!(AlgebraElement::new(GroupSpec::su2(), CMat::identity(2)).is_err());
    }

    #[test]
    fn json_shape() {
        let g = exp_map(&su2_from([0.1, 0.2, 0.3]));
        let v = serde_json::to_value(g).unwrap();
        assert_eq!(v["spec"]["name"], "SU2");
        assert_eq!(v["matrix"].as_array().unwrap().len(), 4);
        assert_eq!(v["matrix"][0].as_array().unwrap().len(), 2);
        let back: GroupElement = serde_json::from_value(v).unwrap();
        assert!(group_distance(&g, &back).unwrap() < 1e-15);
        let bad = serde_json::json!({"spec": {"name": "MultiplicativeReals"}, "matrix": [[-2.0, 0.0]]});
        assert!(serde_json::from_value::<GroupElement>(bad).is_err());
    }
}
