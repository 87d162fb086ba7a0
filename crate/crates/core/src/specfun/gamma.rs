//! Gamma, reciprocal Gamma, log-Gamma and digamma on the complex plane.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::real::{c, cdiv, cl, cr, Real};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi<T: Real>(x: T) -> T {
    let n = (x * T::lit(2.0)).round();
    let r = (x - n * T::lit(0.5)) * T::PI();
    match quadrant(n) {
        0 => r.sin(),
        1 => r.cos(),
        2 => -r.sin(),
        _ => -r.cos(),
    }
}

/// cos(πx) with exact zeros at the half-integers.
pub fn cos_pi<T: Real>(x: T) -> T {
    let n = (x * T::lit(2.0)).round();
    let r = (x - n * T::lit(0.5)) * T::PI();
    match quadrant(n) {
        0 => r.cos(),
        1 => -r.sin(),
        2 => -r.cos(),
        _ => r.sin(),
    }
}

fn quadrant<T: Real>(n: T) -> i64 {
    let q = n - (n / T::lit(4.0)).floor() * T::lit(4.0);
    q.to_i64().unwrap_or(0).rem_euclid(4)
}

pub fn csin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let py = z.im * T::PI();
    c(sin_pi(z.re) * py.cosh(), cos_pi(z.re) * py.sinh())
}

pub fn ccos_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let py = z.im * T::PI();
    c(cos_pi(z.re) * py.cosh(), -sin_pi(z.re) * py.sinh())
}

/// True when `z` is (numerically exactly) a nonpositive integer.
pub fn is_nonpositive_integer<T: Real>(z: Complex<T>) -> bool {
    z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round()
}

/// Principal ln Γ(z) for Re z ≥ 1/2 (Lanczos, g = 7).
fn lgamma_right<T: Real>(z: Complex<T>) -> Complex<T> {
    let zm = z - cl::<T>(1.0);
    let mut x = cl::<T>(LANCZOS[0]);
    for (i, &ci) in LANCZOS.iter().enumerate().skip(1) {
        x = x + cl::<T>(ci) / (zm + cr(T::from_usize_lossy(i)));
    }
    let t = zm + cl::<T>(LANCZOS_G + 0.5);
    let half_ln_2pi = T::lit(0.918_938_533_204_672_7);
    cr::<T>(half_ln_2pi) + (zm + cl::<T>(0.5)) * t.ln() - t + x.ln()
}

/// Γ(z); poles at the nonpositive integers are errors.
pub fn gamma_c<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "gamma",
            at: format!("{}", z.re),
        });
    }
    if z.re < T::lit(0.5) {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let g1 = lgamma_right(cl::<T>(1.0) - z).exp();
        Ok(cdiv(cr::<T>(T::PI()), csin_pi(z) * g1))
    } else if z.im == T::zero() && z.re == z.re.round() && z.re <= T::lit(30.0) {
        // exact factorials for small positive integers
        let mut f = T::one();
        let mut k = T::lit(2.0);
        while k < z.re {
            f = f * k;
            k = k + T::one();
        }
        Ok(cr(f))
    } else {
        Ok(lgamma_right(z).exp())
    }
}

/// 1/Γ(z), entire; exactly zero at the nonpositive integers.
pub fn rgamma_c<T: Real>(z: Complex<T>) -> Complex<T> {
    if is_nonpositive_integer(z) {
        return cr(T::zero());
    }
    if z.re < T::lit(0.5) {
        csin_pi(z) * lgamma_right(cl::<T>(1.0) - z).exp() / cr::<T>(T::PI())
    } else {
        (-lgamma_right(z)).exp()
    }
}

/// ln Γ(z) for Re z > 0, principal branch of the Lanczos form.
pub fn lgamma_c<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if z.re <= T::zero() {
        return Err(Error::Domain(format!("log_gamma needs Re z > 0, got {}", z.re)));
    }
    if z.re < T::lit(0.5) {
        Ok(lgamma_right(z + cl::<T>(1.0)) - z.ln())
    } else {
        Ok(lgamma_right(z))
    }
}

/// ψ(z) = Γ′(z)/Γ(z).
pub fn digamma_c<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "digamma",
            at: format!("{}", z.re),
        });
    }
    if z.re < T::lit(0.5) {
        // ψ(1−z) − ψ(z) = π cot(πz)
        let cot = ccos_pi(z) / csin_pi(z);
        return Ok(digamma_right(cl::<T>(1.0) - z) - cot * T::PI());
    }
    Ok(digamma_right(z))
}

fn digamma_right<T: Real>(mut z: Complex<T>) -> Complex<T> {
    const B2K: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let mut acc = cr(T::zero());
    while z.norm() < T::lit(10.0) {
        acc = acc - z.inv();
        z = z + cl::<T>(1.0);
    }
    let zi2 = (z * z).inv();
    let mut pow = zi2;
    let mut tail = cr(T::zero());
    for (k, &b) in B2K.iter().enumerate() {
        tail = tail + pow * T::lit(b / (2.0 * (k as f64 + 1.0)));
        pow = pow * zi2;
    }
    acc + z.ln() - z.inv() * T::lit(0.5) - tail
}
