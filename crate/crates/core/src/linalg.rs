//! Closed-form 2×2 complex linear algebra.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::real::{ci, cr, Real};

/// Row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat2<T> {
    pub m: [[Complex<T>; 2]; 2],
}

pub type Vec2<T> = [Complex<T>; 2];

impl<T: Real> Mat2<T> {
    pub fn new(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn zero() -> Self {
        let z = cr(T::zero());
        Self::new(z, z, z, z)
    }

    pub fn identity() -> Self {
        Self::diag(cr(T::one()), cr(T::one()))
    }

    pub fn diag(a: Complex<T>, d: Complex<T>) -> Self {
        let z = cr(T::zero());
        Self::new(a, z, z, d)
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::new(self.m[0][0] * s, self.m[0][1] * s, self.m[1][0] * s, self.m[1][1] * s)
    }

    pub fn adjoint(&self) -> Self {
        Self::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    pub fn det(&self) -> Complex<T> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex<T> {
        self.m[0][0] + self.m[1][1]
    }

    /// `None` when the determinant is exactly zero; callers decide numerical rank first.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm_sqr() == T::zero() {
            return None;
        }
        Some(Self::new(
            self.m[1][1] / d,
            -self.m[0][1] / d,
            -self.m[1][0] / d,
            self.m[0][0] / d,
        ))
    }

    pub fn apply(&self, v: &Vec2<T>) -> Vec2<T> {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    pub fn frobenius(&self) -> T {
        self.m
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Largest absolute entry difference.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        worst
    }

    /// Singular values `(σ_max, σ_min)`.
    pub fn singular_values(&self) -> (T, T) {
        let f2 = self.frobenius().powi(2);
        let d = self.det().norm();
        // σ_max² + σ_min² = ‖M‖_F², σ_max·σ_min = |det M|
        let disc = (f2 * f2 - T::lit(4.0) * d * d).max(T::zero()).sqrt();
        let smax = ((f2 + disc) / T::lit(2.0)).sqrt();
        let smin = if smax > T::zero() { d / smax } else { T::zero() };
        (smax, smin)
    }

    /// Eigenpairs of a Hermitian matrix, ascending eigenvalues, orthonormal vectors.
    pub fn hermitian_eigen(&self) -> [(T, Vec2<T>); 2] {
        let a = self.m[0][0].re;
        let d = self.m[1][1].re;
        let b = self.m[0][1];
        let half = T::lit(0.5);
        let mean = (a + d) * half;
        let r = ((a - d) * (a - d) * T::lit(0.25) + b.norm_sqr()).sqrt();
        let lo = mean - r;
        let hi = mean + r;
        if b.norm() <= T::epsilon() * (a.abs() + d.abs() + T::min_positive_value()) {
            let e0: Vec2<T> = [cr(T::one()), cr(T::zero())];
            let e1: Vec2<T> = [cr(T::zero()), cr(T::one())];
            return if a <= d { [(a, e0), (d, e1)] } else { [(d, e1), (a, e0)] };
        }
        let vec_for = |lam: T| -> Vec2<T> {
            // (a − λ) x + b y = 0  ⇒  (b, λ − a) or (λ − d, conj b)
            let v1 = [b, cr(lam - a)];
            let v2 = [cr(lam - d), b.conj()];
            let n1 = (v1[0].norm_sqr() + v1[1].norm_sqr()).sqrt();
            let n2 = (v2[0].norm_sqr() + v2[1].norm_sqr()).sqrt();
            if n1 >= n2 {
                [v1[0] / n1, v1[1] / n1]
            } else {
                [v2[0] / n2, v2[1] / n2]
            }
        };
        [(lo, vec_for(lo)), (hi, vec_for(hi))]
    }

    /// Eigenvalues of a general 2×2 matrix.
    pub fn eigenvalues(&self) -> [Complex<T>; 2] {
        let half = cr(T::lit(0.5));
        let t = self.trace() * half;
        let disc = (t * t - self.det()).sqrt();
        [t + disc, t - disc]
    }

    /// Unit vector `v` minimizing `‖M v‖`, the right singular vector of `σ_min`.
    pub fn min_right_singular_vector(&self) -> Vec2<T> {
        let g = self.adjoint() * *self;
        g.hermitian_eigen()[0].1
    }

    /// Orthonormal basis of the numerical null space at relative threshold `rel`.
    pub fn null_space(&self, rel: T) -> Vec<Vec2<T>> {
        let (smax, smin) = self.singular_values();
        if smax == T::zero() {
            return vec![[cr(T::one()), cr(T::zero())], [cr(T::zero()), cr(T::one())]];
        }
        if smin <= rel * smax {
            vec![self.min_right_singular_vector()]
        } else {
            Vec::new()
        }
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }
}

impl<T: Real> Add for Mat2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.m[0][0] + o.m[0][0],
            self.m[0][1] + o.m[0][1],
            self.m[1][0] + o.m[1][0],
            self.m[1][1] + o.m[1][1],
        )
    }
}

impl<T: Real> Sub for Mat2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Real> Neg for Mat2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.m[0][0], -self.m[0][1], -self.m[1][0], -self.m[1][1])
    }
}

impl<T: Real> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let a = &self.m;
        let b = &o.m;
        Self::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

pub fn vnorm<T: Real>(v: &Vec2<T>) -> T {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

/// `i` as a matrix scalar, handy for Cayley transforms.
pub fn i_unit<T: Real>() -> Complex<T> {
    ci()
}
