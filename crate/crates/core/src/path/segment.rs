//! Bézier segments in ℝⁿ. Lines and cubics are the common cases; higher degrees only
//! arise from reparametrizing cubic pieces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentKind {
    Line,
    Cubic,
    /// Any other degree.
    Bezier,
}

/// Bézier map `[0, 1] → ℝⁿ`; control points are stored flat.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    dim: usize,
    points: Vec<f64>,
}

impl Segment {
    pub fn line(a: &[f64], b: &[f64]) -> Self {
        assert_eq!(a.len(), b.len(), "line endpoints differ in dimension");
        let mut points = a.to_vec();
        points.extend_from_slice(b);
        Self { dim: a.len(), points }
    }

    pub fn cubic(p0: &[f64], p1: &[f64], p2: &[f64], p3: &[f64]) -> Self {
        Self::bezier(&[p0, p1, p2, p3]).expect("cubic control points")
    }

    /// General Bézier from at least two control points of equal dimension.
    pub fn bezier(control: &[&[f64]]) -> Result<Self> {
        if control.len() < 2 {
            return Err(Error::InvalidPath("a segment needs at least two control points".into()));
        }
        let dim = control[0].len();
        if dim == 0 {
            return Err(Error::InvalidPath("zero-dimensional point".into()));
        }
        let mut points = Vec::with_capacity(dim * control.len());
        for p in control {
            if p.len() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            if p.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidPath("non-finite control point".into()));
            }
            points.extend_from_slice(p);
        }
        Ok(Self { dim, points })
    }

    pub(crate) fn from_flat(dim: usize, points: Vec<f64>) -> Self {
        debug_assert!(points.len() % dim == 0 && points.len() >= 2 * dim);
        Self { dim, points }
    }

    pub fn constant(x: &[f64]) -> Self {
        Self::line(x, x)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.points.len() / self.dim - 1
    }

    pub fn kind(&self) -> SegmentKind {
        match self.degree() {
            1 => SegmentKind::Line,
            3 => SegmentKind::Cubic,
            _ => SegmentKind::Bezier,
        }
    }

    pub fn control_point(&self, k: usize) -> &[f64] {
        &self.points[k * self.dim..(k + 1) * self.dim]
    }

    pub fn control_points(&self) -> impl Iterator<Item = &[f64]> {
        self.points.chunks_exact(self.dim)
    }

    pub fn start(&self) -> &[f64] {
        self.control_point(0)
    }

    pub fn end(&self) -> &[f64] {
        self.control_point(self.degree())
    }

    /// Bernstein sum; exact at `t = 0` and `t = 1`.
    pub fn eval_into(&self, t: f64, out: &mut [f64]) {
        let d = self.degree();
        out.iter_mut().for_each(|v| *v = 0.0);
        let s = 1.0 - t;
        let mut binom = 1.0;
        for k in 0..=d {
            let w = binom * t.powi(k as i32) * s.powi((d - k) as i32);
            for (o, p) in out.iter_mut().zip(self.control_point(k)) {
                *o += w * p;
            }
            binom = binom * (d - k) as f64 / (k + 1) as f64;
        }
    }

    pub fn eval(&self, t: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.eval_into(t, &mut out);
        out
    }

    /// Derivative with respect to the local parameter `t`.
    pub fn deriv_into(&self, t: f64, out: &mut [f64]) {
        let d = self.degree();
        out.iter_mut().for_each(|v| *v = 0.0);
        let s = 1.0 - t;
        let mut binom = 1.0;
        for k in 0..d {
            let w = d as f64 * binom * t.powi(k as i32) * s.powi((d - 1 - k) as i32);
            let (p, q) = (self.control_point(k), self.control_point(k + 1));
            for ((o, a), b) in out.iter_mut().zip(p).zip(q) {
                *o += w * (b - a);
            }
            binom = binom * (d - 1 - k) as f64 / (k + 1) as f64;
        }
    }

    pub fn deriv(&self, t: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.deriv_into(t, &mut out);
        out
    }

    pub fn reversed(&self) -> Self {
        let mut points = Vec::with_capacity(self.points.len());
        for p in self.points.chunks_exact(self.dim).rev() {
            points.extend_from_slice(p);
        }
        Self { dim: self.dim, points }
    }

    /// de Casteljau subdivision at `t`.
    pub fn split(&self, t: f64) -> (Self, Self) {
        let d = self.degree();
        let dim = self.dim;
        let mut work = self.points.clone();
        let mut left = Vec::with_capacity(self.points.len());
        let mut right = vec![0.0; self.points.len()];
        left.extend_from_slice(&work[0..dim]);
        right[d * dim..].copy_from_slice(&work[d * dim..]);
        for level in 1..=d {
            for k in 0..=(d - level) {
                for c in 0..dim {
                    let a = work[k * dim + c];
                    let b = work[(k + 1) * dim + c];
                    work[k * dim + c] = (1.0 - t) * a + t * b;
                }
            }
            left.extend_from_slice(&work[0..dim]);
            let slot = d - level;
            right[slot * dim..(slot + 1) * dim].copy_from_slice(&work[slot * dim..(slot + 1) * dim]);
        }
        (Self::from_flat(dim, left), Self::from_flat(dim, right))
    }

    /// Every control point coincides with the first one.
    pub fn is_degenerate(&self, tol: f64) -> bool {
        let first = self.start();
        self.control_points()
            .all(|p| p.iter().zip(first).all(|(a, b)| (a - b).abs() <= tol))
    }

    /// `other` traces this segment backwards, control point by control point.
    pub fn is_reverse_of(&self, other: &Segment, tol: f64) -> bool {
        if self.dim != other.dim || self.points.len() != other.points.len() {
            return false;
        }
        let d = self.degree();
        (0..=d).all(|k| {
            self.control_point(k)
                .iter()
                .zip(other.control_point(d - k))
                .all(|(a, b)| (a - b).abs() <= tol)
        })
    }

    pub(crate) fn set_start(&mut self, p: &[f64]) {
        let dim = self.dim;
        self.points[..dim].copy_from_slice(p);
    }

    pub(crate) fn set_end(&mut self, p: &[f64]) {
        let dim = self.dim;
        let n = self.points.len();
        self.points[n - dim..].copy_from_slice(p);
    }
}
