//! Small dense complex matrices (dimension at most 4), stored inline.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 4;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square complex matrix of dimension `n <= 4`, row-major with a fixed stride of 4.
#[derive(Clone, Copy, PartialEq)]
pub struct CMat {
    n: usize,
    a: [Complex64; MAX_DIM * MAX_DIM],
}

impl std::fmt::Debug for CMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<Complex64>> = (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c)).collect())
            .collect();
        f.debug_struct("CMat").field("n", &self.n).field("rows", &rows).finish()
    }
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&n), "matrix dimension {n} out of range");
        Self {
            n,
            a: [ZERO; MAX_DIM * MAX_DIM],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m.set(k, k, ONE);
        }
        m
    }

    pub fn scalar(z: Complex64) -> Self {
        let mut m = Self::zeros(1);
        m.set(0, 0, z);
        m
    }

    /// Build from row-major entries; `entries.len()` must be a perfect square `<= 16`.
    pub fn from_row_major(entries: &[Complex64]) -> Option<Self> {
        let n = (entries.len() as f64).sqrt().round() as usize;
        if n == 0 || n > MAX_DIM || n * n != entries.len() {
            return None;
        }
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, entries[r * n + c]);
            }
        }
        Some(m)
    }

    pub fn from_real(n: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), n * n);
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, Complex64::new(entries[r * n + c], 0.0));
            }
        }
        m
    }

    pub fn to_row_major(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out.push(self.get(r, c));
            }
        }
        out
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.a[r * MAX_DIM + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.a[r * MAX_DIM + c] = v;
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_c(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut out = *self;
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(r, c, f(self.get(r, c)));
            }
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.n, other.n, "matrix dimension mismatch");
        let mut out = *self;
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(r, c, f(self.get(r, c), other.get(r, c)));
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|k| self.get(k, k)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn norm_1(&self) -> f64 {
        (0..self.n)
            .map(|c| (0..self.n).map(|r| self.get(r, c).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.a.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let n = self.n;
        let mut m = *self;
        let mut det = ONE;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| m.get(i, col).norm().total_cmp(&m.get(j, col).norm()))
                .unwrap();
            let p = m.get(pivot, col);
            if p.norm() == 0.0 {
                return ZERO;
            }
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            det *= p;
            for r in col + 1..n {
                let factor = m.get(r, col) / p;
                for c in col..n {
                    let v = m.get(r, c) - factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        if n == 1 {
            let z = self.get(0, 0);
            return (z.norm() > 0.0).then(|| Self::scalar(ONE / z));
        }
        let mut m = *self;
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| m.get(i, col).norm().total_cmp(&m.get(j, col).norm()))
                .unwrap();
            if m.get(pivot, col).norm() == 0.0 {
                return None;
            }
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = m.get(col, col);
            for c in 0..n {
                m.set(col, c, m.get(col, c) / p);
                inv.set(col, c, inv.get(col, c) / p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == ZERO {
                    continue;
                }
                for c in 0..n {
                    m.set(r, c, m.get(r, c) - factor * m.get(col, c));
                    inv.set(r, c, inv.get(r, c) - factor * inv.get(col, c));
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.n {
            self.a.swap(i * MAX_DIM + c, j * MAX_DIM + c);
        }
    }
}

impl Add for CMat {
    type Output = CMat;
    fn add(self, rhs: CMat) -> CMat {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl AddAssign for CMat {
    fn add_assign(&mut self, rhs: CMat) {
        *self = *self + rhs;
    }
}

impl Sub for CMat {
    type Output = CMat;
    fn sub(self, rhs: CMat) -> CMat {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Neg for CMat {
    type Output = CMat;
    fn neg(self) -> CMat {
        self.map(|z| -z)
    }
}

impl Mul for CMat {
    type Output = CMat;
    fn mul(self, rhs: CMat) -> CMat {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = CMat::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += self.get(r, k) * rhs.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}
