//! Power-basis helpers for composing Bézier segments with polynomial reparametrizations.

use super::segment::Segment;

/// Scalar polynomial in the power basis, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Poly(pub Vec<f64>);

impl Poly {
    pub fn linear(c0: f64, c1: f64) -> Self {
        Poly(vec![c0, c1])
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    /// `self(inner(σ))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly(vec![*self.0.last().unwrap()]);
        for &c in self.0.iter().rev().skip(1) {
            acc = acc.mul(inner);
            acc.0[0] += c;
        }
        acc
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Per-coordinate power-basis coefficients of a Bézier segment.
pub(crate) fn bezier_to_power(seg: &Segment) -> Vec<Poly> {
    let d = seg.degree();
    (0..seg.dim())
        .map(|c| {
            let coeffs = (0..=d)
                .map(|j| {
                    let s: f64 = (0..=j)
                        .map(|k| {
                            let sign = if (j - k) % 2 == 0 { 1.0 } else { -1.0 };
                            sign * binomial(j, k) * seg.control_point(k)[c]
                        })
                        .sum();
                    binomial(d, j) * s
                })
                .collect();
            Poly(coeffs)
        })
        .collect()
}

/// Inverse of [`bezier_to_power`]; all coordinate polynomials must share a degree.
pub(crate) fn power_to_bezier(coords: &[Poly]) -> Segment {
    let dim = coords.len();
    let d = coords[0].0.len() - 1;
    let mut flat = vec![0.0; (d + 1) * dim];
    for (c, poly) in coords.iter().enumerate() {
        for k in 0..=d {
            flat[k * dim + c] = (0..=k)
                .map(|j| binomial(k, j) / binomial(d, j) * poly.0[j])
                .sum();
        }
    }
    Segment::from_flat(dim, flat)
}

/// Raise a quadratic to a cubic; other degrees pass through.
pub(crate) fn elevate_quadratic(seg: Segment) -> Segment {
    if seg.degree() != 2 {
        return seg;
    }
    let dim = seg.dim();
    let (p0, p1, p2) = (seg.control_point(0), seg.control_point(1), seg.control_point(2));
    let mut flat = Vec::with_capacity(4 * dim);
    flat.extend_from_slice(p0);
    flat.extend((0..dim).map(|c| (p0[c] + 2.0 * p1[c]) / 3.0));
    flat.extend((0..dim).map(|c| (2.0 * p1[c] + p2[c]) / 3.0));
    flat.extend_from_slice(p2);
    Segment::from_flat(dim, flat)
}
