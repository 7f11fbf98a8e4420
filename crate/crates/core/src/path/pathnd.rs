//! Piecewise-smooth paths and based loops, with the groupoid operations on them.

use serde::{Deserialize, Serialize};

use super::poly::{bezier_to_power, elevate_quadratic, power_to_bezier, Poly};
use super::segment::{Segment, SegmentKind};
use crate::error::{Error, Result};

/// Absolute tolerance used for continuity, loop closure and retrace matching.
pub const POINT_TOL: f64 = 1e-12;

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter()
        .zip(b)
        .all(|(x, y)| (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs())))
}

/// Continuous, piecewise-Bézier curve `[0, 1] → ℝⁿ`.
///
/// Segment `m` occupies the parameter interval `[breaks[m], breaks[m + 1]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathNd {
    dim: usize,
    segments: Vec<Segment>,
    breaks: Vec<f64>,
}

impl PathNd {
    pub fn new(segments: Vec<Segment>, breaks: Vec<f64>) -> Result<Self> {
        let Some(first) = segments.first() else {
            return Err(Error::InvalidPath("a path needs at least one segment".into()));
        };
        let dim = first.dim();
        if breaks.len() != segments.len() + 1 {
            return Err(Error::InvalidPath(format!(
                "{} segments need {} breakpoints, got {}",
                segments.len(),
                segments.len() + 1,
                breaks.len()
            )));
        }
        if breaks[0] != 0.0 || *breaks.last().unwrap() != 1.0 {
            return Err(Error::InvalidPath("breakpoints must start at 0 and end at 1".into()));
        }
        if breaks.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidPath("breakpoints must be strictly increasing".into()));
        }
        for (m, pair) in segments.windows(2).enumerate() {
            if pair[1].dim() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    got: pair[1].dim(),
                });
            }
            if !close(pair[0].end(), pair[1].start(), POINT_TOL) {
                return Err(Error::InvalidPath(format!(
                    "segment {m} ends at {:?} but segment {} starts at {:?}",
                    pair[0].end(),
                    m + 1,
                    pair[1].start()
                )));
            }
        }
        Ok(Self {
            dim,
            segments,
            breaks,
        })
    }

    /// Segments on equally spaced breakpoints.
    pub fn from_segments(segments: Vec<Segment>) -> Result<Self> {
        let k = segments.len();
        let breaks = uniform_breaks(k);
        Self::new(segments, breaks)
    }

    /// Straight polygon through the given vertices.
    pub fn polyline(vertices: &[Vec<f64>]) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath("a polyline needs two vertices".into()));
        }
        Self::from_segments(vertices.windows(2).map(|w| Segment::line(&w[0], &w[1])).collect())
    }

    pub fn constant(x: &[f64]) -> Self {
        Self {
            dim: x.len(),
            segments: vec![Segment::constant(x)],
            breaks: vec![0.0, 1.0],
        }
    }

    pub(crate) fn from_parts_unchecked(dim: usize, segments: Vec<Segment>, breaks: Vec<f64>) -> Self {
        Self {
            dim,
            segments,
            breaks,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    pub fn start(&self) -> &[f64] {
        self.segments[0].start()
    }

    pub fn end(&self) -> &[f64] {
        self.segments.last().unwrap().end()
    }

    /// Segment index and local parameter; right-continuous at interior breakpoints.
    pub fn locate(&self, i: f64) -> (usize, f64) {
        let i = i.clamp(0.0, 1.0);
        let n = self.segments.len();
        let m = self.breaks.partition_point(|&b| b <= i).saturating_sub(1).min(n - 1);
        let (a, b) = (self.breaks[m], self.breaks[m + 1]);
        let t = ((i - a) / (b - a)).clamp(0.0, 1.0);
        (m, t)
    }

    pub fn eval(&self, i: f64) -> Vec<f64> {
        if i >= 1.0 {
            return self.end().to_vec();
        }
        let (m, t) = self.locate(i);
        self.segments[m].eval(t)
    }

    /// Right-hand derivative with respect to the global parameter.
    pub fn velocity(&self, i: f64) -> Vec<f64> {
        let (m, t) = self.locate(i);
        let width = self.breaks[m + 1] - self.breaks[m];
        self.segments[m].deriv(t).into_iter().map(|v| v / width).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.segments.iter().all(|s| s.is_degenerate(0.0)) && close(self.start(), self.end(), 0.0)
    }

    /// Piece of segment `m` between local parameters `ta < tb`.
    fn sub_segment(&self, m: usize, ta: f64, tb: f64) -> Segment {
        let seg = &self.segments[m];
        match (ta <= 0.0, tb >= 1.0) {
            (true, true) => seg.clone(),
            (true, false) => seg.split(tb).0,
            (false, true) => seg.split(ta).1,
            (false, false) => {
                let left = seg.split(tb).0;
                left.split(ta / tb).1
            }
        }
    }

    /// `p` restricted to `[a, b]` (`a < b`) and rescaled to `[0, 1]`.
    fn restrict(&self, a: f64, b: f64) -> PathNd {
        debug_assert!(a < b);
        let width = b - a;
        let mut segments = Vec::new();
        let mut breaks = vec![0.0];
        for m in 0..self.segments.len() {
            let (lo, hi) = (self.breaks[m], self.breaks[m + 1]);
            if hi <= a || lo >= b {
                continue;
            }
            let w = hi - lo;
            let ta = ((a - lo) / w).clamp(0.0, 1.0);
            let tb = ((b - lo) / w).clamp(0.0, 1.0);
            if tb <= ta {
                continue;
            }
            segments.push(self.sub_segment(m, ta, tb));
            breaks.push(if hi >= b { 1.0 } else { (hi - a) / width });
        }
        if segments.is_empty() {
            return PathNd::constant(&self.eval(a));
        }
        *breaks.last_mut().unwrap() = 1.0;
        PathNd::from_parts_unchecked(self.dim, segments, breaks)
    }

    /// Contraction `j ↦ p(i·j)`: the path truncated at `i` and rescaled.
    pub fn contract(&self, i: f64) -> PathNd {
        let i = i.clamp(0.0, 1.0);
        if i == 0.0 {
            return PathNd::constant(self.start());
        }
        if i == 1.0 {
            return self.clone();
        }
        self.restrict(0.0, i)
    }

    /// The part of the path from parameter `from` to parameter `to`, run backwards when
    /// `to < from`. Thin-equivalent to `contract(to) ∘ contract(from)⁻¹`.
    pub fn sub_arc(&self, from: f64, to: f64) -> PathNd {
        let (from, to) = (from.clamp(0.0, 1.0), to.clamp(0.0, 1.0));
        if from == to {
            PathNd::constant(&self.eval(from))
        } else if from < to {
            self.restrict(from, to)
        } else {
            self.restrict(to, from).invert()
        }
    }

    /// `r(i) = p(1 − i)`.
    pub fn invert(&self) -> PathNd {
        let segments = self.segments.iter().rev().map(Segment::reversed).collect();
        let breaks = self.breaks.iter().rev().map(|b| 1.0 - b).collect();
        PathNd::from_parts_unchecked(self.dim, segments, breaks)
    }

    /// Thin reduction: drop zero-length segments and cancel adjacent exact retracings,
    /// iterated to a fixed point. Surviving segments keep their relative parameter widths.
    pub fn thin_reduce(&self) -> PathNd {
        let mut kept: Vec<(Segment, f64)> = Vec::with_capacity(self.segments.len());
        let mut changed = false;
        for (m, seg) in self.segments.iter().enumerate() {
            if seg.is_degenerate(POINT_TOL) {
                changed = true;
                continue;
            }
            if let Some((top, _)) = kept.last() {
                if top.is_reverse_of(seg, POINT_TOL) {
                    kept.pop();
                    changed = true;
                    continue;
                }
            }
            kept.push((seg.clone(), self.breaks[m + 1] - self.breaks[m]));
        }
        if !changed {
            return self.clone();
        }
        if kept.is_empty() {
            return PathNd::constant(self.start());
        }
        let total: f64 = kept.iter().map(|(_, w)| w).sum();
        let mut breaks = Vec::with_capacity(kept.len() + 1);
        let mut acc = 0.0;
        breaks.push(0.0);
        for (_, w) in &kept[..kept.len() - 1] {
            acc += w;
            breaks.push(acc / total);
        }
        breaks.push(1.0);
        let segments = kept.into_iter().map(|(s, _)| s).collect();
        PathNd::from_parts_unchecked(self.dim, segments, breaks)
    }

    /// `r(i) = p(phi(i))` for a nondecreasing piecewise-polynomial `phi` given as a
    /// one-dimensional path from 0 to 1.
    pub fn reparametrize(&self, phi: &PathNd) -> Result<PathNd> {
        check_warp(phi)?;
        let mut segments = Vec::new();
        let mut breaks = vec![0.0];
        for (k, warp) in phi.segments.iter().enumerate() {
            let (c0, c1) = (phi.breaks[k], phi.breaks[k + 1]);
            let (u0, u1) = (warp.start()[0].clamp(0.0, 1.0), warp.end()[0].clamp(0.0, 1.0));
            // local parameters where the warp crosses interior breakpoints of `self`
            let mut cuts = vec![0.0];
            for &b in &self.breaks[1..self.breaks.len() - 1] {
                if b > u0 + 1e-15 && b < u1 - 1e-15 {
                    cuts.push(solve_monotone(warp, b));
                }
            }
            cuts.push(1.0);
            let warp_power = bezier_to_power(warp).remove(0);
            for w in cuts.windows(2) {
                let (sa, sb) = (w[0], w[1]);
                if sb <= sa {
                    continue;
                }
                let mid = warp.eval(0.5 * (sa + sb))[0];
                let (m, _) = self.locate(mid.clamp(0.0, 1.0));
                let (lo, hi) = (self.breaks[m], self.breaks[m + 1]);
                let seg = &self.segments[m];
                // local parameter of segment m as a polynomial in σ ∈ [0, 1]
                let u = warp_power.compose(&Poly::linear(sa, sb - sa));
                let t = Poly(
                    u.0.iter()
                        .enumerate()
                        .map(|(j, c)| if j == 0 { (c - lo) / (hi - lo) } else { c / (hi - lo) })
                        .collect(),
                );
                let coords: Vec<Poly> = bezier_to_power(seg).iter().map(|p| p.compose(&t)).collect();
                let mut piece = elevate_quadratic(power_to_bezier(&coords));
                piece.set_start(&seg.eval(t.0[0].clamp(0.0, 1.0)));
                piece.set_end(&seg.eval(t.0.iter().sum::<f64>().clamp(0.0, 1.0)));
                segments.push(piece);
                breaks.push(c0 + (c1 - c0) * sb);
            }
        }
        *breaks.last_mut().unwrap() = 1.0;
        // exact junctions: each piece starts where the previous one ends
        for m in 1..segments.len() {
            let prev_end = segments[m - 1].end().to_vec();
            segments[m].set_start(&prev_end);
        }
        let mut kept_breaks = vec![0.0];
        let mut kept = Vec::with_capacity(segments.len());
        for (m, seg) in segments.into_iter().enumerate() {
            if breaks[m + 1] > *kept_breaks.last().unwrap() {
                kept.push(seg);
                kept_breaks.push(breaks[m + 1]);
            }
        }
        PathNd::new(kept, kept_breaks)
    }
}

fn uniform_breaks(k: usize) -> Vec<f64> {
    let mut breaks: Vec<f64> = (0..=k).map(|m| m as f64 / k as f64).collect();
    breaks[k] = 1.0;
    breaks
}

fn check_warp(phi: &PathNd) -> Result<()> {
    if phi.dim != 1 {
        return Err(Error::NotMonotone(format!(
            "a reparametrization is a one-dimensional path, got dimension {}",
            phi.dim
        )));
    }
    if phi.start()[0].abs() > POINT_TOL || (phi.end()[0] - 1.0).abs() > POINT_TOL {
        return Err(Error::NotMonotone(format!(
            "reparametrization must map 0 to 0 and 1 to 1, got {} and {}",
            phi.start()[0],
            phi.end()[0]
        )));
    }
    const SAMPLES: usize = 64;
    for (m, seg) in phi.segments.iter().enumerate() {
        for k in 0..=SAMPLES {
            let t = k as f64 / SAMPLES as f64;
            let d = seg.deriv(t)[0];
            if d < -1e-12 {
                return Err(Error::NotMonotone(format!(
                    "derivative {d:.3e} < 0 in piece {m} at local parameter {t}"
                )));
            }
        }
    }
    Ok(())
}

/// Local parameter where a nondecreasing scalar segment reaches `target`.
fn solve_monotone(seg: &Segment, target: f64) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if seg.eval(mid)[0] < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `α ∘ β`: traverse `beta` on `[0, ½]`, then `alpha` on `[½, 1]`.
pub fn compose_paths(alpha: &PathNd, beta: &PathNd) -> Result<PathNd> {
    if alpha.dim != beta.dim {
        return Err(Error::DimMismatch {
            expected: beta.dim,
            got: alpha.dim,
        });
    }
    if !close(beta.end(), alpha.start(), 1e-10) {
        return Err(Error::EndpointMismatch {
            end: beta.end().to_vec(),
            start: alpha.start().to_vec(),
        });
    }
    let mut segments = beta.segments.clone();
    let mut breaks: Vec<f64> = beta.breaks.iter().map(|b| 0.5 * b).collect();
    let mut tail = alpha.segments.clone();
    tail[0].set_start(beta.end());
    segments.extend(tail);
    breaks.extend(alpha.breaks[1..].iter().map(|b| 0.5 + 0.5 * b));
    *breaks.last_mut().unwrap() = 1.0;
    Ok(PathNd::from_parts_unchecked(alpha.dim, segments, breaks))
}

pub fn invert_path(p: &PathNd) -> PathNd {
    p.invert()
}

pub fn contract(p: &PathNd, i: f64) -> PathNd {
    p.contract(i)
}

/// `T_{y,x}(i) = x + i(y − x)`.
pub fn straight_segment(x: &[f64], y: &[f64]) -> PathNd {
    PathNd::from_parts_unchecked(x.len(), vec![Segment::line(x, y)], vec![0.0, 1.0])
}

pub fn thin_reduce(p: &PathNd) -> PathNd {
    p.thin_reduce()
}

pub fn reparametrize(p: &PathNd, phi: &PathNd) -> Result<PathNd> {
    p.reparametrize(phi)
}

/// The warp `i ↦ i^k` as a single Bézier piece.
pub fn monomial_warp(k: usize) -> PathNd {
    let k = k.max(1);
    let mut points: Vec<Vec<f64>> = vec![vec![0.0]; k];
    points.push(vec![1.0]);
    let refs: Vec<&[f64]> = points.iter().map(|p| p.as_slice()).collect();
    let seg = elevate_quadratic(Segment::bezier(&refs).unwrap());
    PathNd::from_parts_unchecked(1, vec![seg], vec![0.0, 1.0])
}

/// Closed path pinned at its basepoint.
#[derive(Debug, Clone, PartialEq)]
pub struct LoopAtBase {
    path: PathNd,
    basepoint: Vec<f64>,
}

impl LoopAtBase {
    pub fn new(path: PathNd) -> Result<Self> {
        if !close(path.start(), path.end(), POINT_TOL) {
            return Err(Error::InvalidPath(format!(
                "loop is not closed: starts at {:?}, ends at {:?}",
                path.start(),
                path.end()
            )));
        }
        let basepoint = path.start().to_vec();
        Ok(Self { path, basepoint })
    }

    pub fn constant(basepoint: &[f64]) -> Self {
        Self {
            path: PathNd::constant(basepoint),
            basepoint: basepoint.to_vec(),
        }
    }

    pub fn path(&self) -> &PathNd {
        &self.path
    }

    pub fn basepoint(&self) -> &[f64] {
        &self.basepoint
    }

    pub fn dim(&self) -> usize {
        self.path.dim
    }

    pub fn into_path(self) -> PathNd {
        self.path
    }

    /// `self ∘ other`: `other` first.
    pub fn compose(&self, other: &LoopAtBase) -> Result<LoopAtBase> {
        Ok(LoopAtBase {
            path: compose_paths(&self.path, &other.path)?,
            basepoint: self.basepoint.clone(),
        })
    }

    pub fn invert(&self) -> LoopAtBase {
        LoopAtBase {
            path: self.path.invert(),
            basepoint: self.basepoint.clone(),
        }
    }

    pub fn thin_reduce(&self) -> LoopAtBase {
        LoopAtBase {
            path: self.path.thin_reduce(),
            basepoint: self.basepoint.clone(),
        }
    }

    pub fn reparametrize(&self, phi: &PathNd) -> Result<LoopAtBase> {
        Ok(LoopAtBase {
            path: self.path.reparametrize(phi)?,
            basepoint: self.basepoint.clone(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct RawSegment {
    kind: SegmentKind,
    points: Vec<Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
struct RawPath {
    dim: usize,
    segments: Vec<RawSegment>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    breakpoints: Option<Vec<f64>>,
}

impl TryFrom<RawPath> for PathNd {
    type Error = Error;
    fn try_from(raw: RawPath) -> Result<Self> {
        let mut segments = Vec::with_capacity(raw.segments.len());
        for s in &raw.segments {
            let expected = match s.kind {
                SegmentKind::Line => Some(2),
                SegmentKind::Cubic => Some(4),
                SegmentKind::Bezier => None,
            };
            if let Some(n) = expected {
                if s.points.len() != n {
                    return Err(Error::InvalidPath(format!(
                        "{:?} segment needs {n} points, got {}",
                        s.kind,
                        s.points.len()
                    )));
                }
            }
            let refs: Vec<&[f64]> = s.points.iter().map(|p| p.as_slice()).collect();
            let seg = Segment::bezier(&refs)?;
            if seg.dim() != raw.dim {
                return Err(Error::DimMismatch {
                    expected: raw.dim,
                    got: seg.dim(),
                });
            }
            segments.push(seg);
        }
        let breaks = raw
            .breakpoints
            .unwrap_or_else(|| uniform_breaks(segments.len().max(1)));
        PathNd::new(segments, breaks)
    }
}

impl From<&PathNd> for RawPath {
    fn from(p: &PathNd) -> Self {
        RawPath {
            dim: p.dim,
            segments: p
                .segments
                .iter()
                .map(|s| RawSegment {
                    kind: s.kind(),
                    points: s.control_points().map(|c| c.to_vec()).collect(),
                })
                .collect(),
            breakpoints: Some(p.breaks.clone()),
        }
    }
}

impl Serialize for PathNd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPath::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PathNd {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPath::deserialize(d)?;
        PathNd::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RawLoop {
    #[serde(flatten)]
    path: RawPath,
    basepoint: Vec<f64>,
}

impl Serialize for LoopAtBase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawLoop {
            path: RawPath::from(&self.path),
            basepoint: self.basepoint.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LoopAtBase {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawLoop::deserialize(d)?;
        let path = PathNd::try_from(raw.path).map_err(serde::de::Error::custom)?;
        let lp = LoopAtBase::new(path).map_err(serde::de::Error::custom)?;
        if !close(lp.basepoint(), &raw.basepoint, POINT_TOL) {
            return Err(serde::de::Error::custom(format!(
                "loop starts at {:?}, declared basepoint {:?}",
                lp.basepoint(),
                raw.basepoint
            )));
        }
        Ok(lp)
    }
}
