//! Gauss-Legendre rules on `[0, 1]`.

use std::sync::OnceLock;

/// Points in the default rule used for line integrals.
pub const DEFAULT_POINTS: usize = 32;

/// Nodes and weights of the `n`-point Gauss-Legendre rule mapped to `[0, 1]`.
///
/// Nodes are the roots of `P_n`, found by Newton iteration from the Chebyshev guess.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut rule = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((0.5 * (1.0 - x), 0.5 * w));
    }
    rule.sort_by(|a, b| a.0.total_cmp(&b.0));
    rule
}

/// `P_n(x)` and `P_n'(x)` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

pub(crate) fn default_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(DEFAULT_POINTS))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        for n in [1, 2, 5, 32] {
            let s: f64 = gauss_legendre(n).iter().map(|(_, w)| w).sum();
            assert!((s - 1.0).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn exact_for_degree_2n_minus_1() {
        let rule = gauss_legendre(32);
        for deg in [0, 7, 31, 63] {
            let q: f64 = rule.iter().map(|(x, w)| w * x.powi(deg)).sum();
            assert!((q - 1.0 / (deg as f64 + 1.0)).abs() < 1e-14, "degree {deg}");
        }
    }

    #[test]
    fn five_point_nodes_match_tables() {
        let rule = gauss_legendre(5);
        let x = 2.0 * rule[4].0 - 1.0;
        assert!((x - 0.906_179_845_938_664).abs() < 1e-15);
        assert!((2.0 * rule[2].1 - 0.568_888_888_888_889).abs() < 1e-15);
    }
}
