//! Matrix exponential and near-identity logarithm for small dense matrices.

use super::matrix::CMat;

const TAYLOR_TERMS: usize = 18;

/// Scaling and squaring: scale so the 1-norm is at most 1/2, sum an 18-term Taylor
/// series (remainder below 1e-22), then square back up.
pub fn expm(x: &CMat) -> CMat {
    if x.dim() == 1 {
        return CMat::scalar(x.get(0, 0).exp());
    }
    let norm = x.norm_1();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = x.scale(0.5f64.powi(squarings));
    let mut result = taylor(&scaled);
    for _ in 0..squarings {
        result = result * result;
    }
    result
}

fn taylor(x: &CMat) -> CMat {
    // Horner form of sum_k x^k / k!
    let id = CMat::identity(x.dim());
    let mut acc = id;
    for k in (1..TAYLOR_TERMS).rev() {
        acc = id + (*x * acc).scale(1.0 / k as f64);
    }
    acc
}

/// Principal logarithm by inverse scaling and squaring.
///
/// Square roots are taken until `‖Y − I‖_F < 0.02`, then `log(I + Z)` is summed as a
/// Mercator series and multiplied back by `2^k`. Callers guarantee `‖g − I‖_F < 0.5`.
pub fn logm_near_identity(g: &CMat) -> CMat {
    let n = g.dim();
    let id = CMat::identity(n);
    let mut y = *g;
    let mut roots = 0;
    while (y - id).frobenius_norm() >= 0.02 && roots < 30 {
        y = sqrtm(&y);
        roots += 1;
    }
    let z = y - id;
    let mut sum = CMat::zeros(n);
    let mut power = id;
    for k in 1..=40 {
        power = power * z;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += power.scale(sign / k as f64);
    }
    sum.scale(2f64.powi(roots))
}

/// Principal square root by the Denman-Beavers iteration.
fn sqrtm(a: &CMat) -> CMat {
    let mut y = *a;
    let mut z = CMat::identity(a.dim());
    for _ in 0..50 {
        let y_inv = y.inverse().expect("square-root iterate stays invertible near identity");
        let z_inv = z.inverse().expect("square-root iterate stays invertible near identity");
        let y_next = (y + z_inv).scale(0.5);
        let z_next = (z + y_inv).scale(0.5);
        let change = (y_next - y).frobenius_norm();
        y = y_next;
        z = z_next;
        if change <= 1e-16 * y.frobenius_norm() {
            break;
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn exp_of_nilpotent() {
        // exp([[0, 1], [0, 0]]) = [[1, 1], [0, 1]]
        let x = CMat::from_real(2, &[0.0, 1.0, 0.0, 0.0]);
        let e = expm(&x);
        assert!((e - CMat::from_real(2, &[1.0, 1.0, 0.0, 1.0])).frobenius_norm() < 1e-15);
    }

    #[test]
    fn exp_of_large_rotation_generator() {
        // exp(θ J) is a rotation by θ for J = [[0, -1], [1, 0]]
        let theta = 7.3;
        let e = expm(&CMat::from_real(2, &[0.0, -theta, theta, 0.0]));
        let (s, c) = theta.sin_cos();
        let want = CMat::from_real(2, &[c, -s, s, c]);
        assert!((e - want).frobenius_norm() < 1e-13);
    }

    #[test]
    fn sqrt_squares_back() {
        let a = CMat::from_row_major(&[
            Complex64::new(1.1, 0.1),
            Complex64::new(0.2, 0.0),
            Complex64::new(-0.1, 0.05),
            Complex64::new(0.9, -0.2),
        ])
        .unwrap();
        let r = sqrtm(&a);
        assert!((r * r - a).frobenius_norm() < 1e-14);
    }

    #[test]
    fn log_inverts_exp_on_gl3() {
        let x = CMat::from_real(3, &[0.05, -0.1, 0.02, 0.1, 0.0, 0.07, -0.03, 0.04, -0.08]);
        let back = logm_near_identity(&expm(&x));
        assert!((back - x).frobenius_norm() < 1e-13);
    }
}
