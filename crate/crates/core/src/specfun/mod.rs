//! Special functions: Gamma family, Kummer M, Whittaker 𝓜/𝓦, Airy Ai.

mod airy;
mod gamma;
mod kummer;
mod whittaker;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::{cr, Real};

pub use airy::{airy_ai, airy_ai_prime, airy_zero, AiryKind};
pub use gamma::{cos_pi, digamma_c, gamma_c, lgamma_c, rgamma_c, sin_pi};
pub use kummer::kummer_m_c;
pub use whittaker::{whittaker_m, whittaker_m_c, whittaker_w, whittaker_w_c};

/// A function value with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpecFunResult<T> {
    pub value: Complex<T>,
    pub abs_err: T,
}

impl<T: Real> SpecFunResult<T> {
    pub fn re(&self) -> T {
        self.value.re
    }
}

/// Real-argument entry points route through the complex kernel; the imaginary residue must be negligible.
fn real_part<T: Real>(name: &'static str, r: SpecFunResult<T>) -> Result<SpecFunResult<T>> {
    let bound = T::tol(1e-12, 64.0) * r.value.norm() + r.abs_err;
    if r.value.im.abs() > bound {
        return Err(Error::Convergence {
            what: name,
            detail: format!("imaginary residue {} on a real argument", r.value.im),
        });
    }
    Ok(SpecFunResult {
        value: cr(r.value.re),
        abs_err: r.abs_err + r.value.im.abs(),
    })
}

fn gamma_err<T: Real>(x: T, v: Complex<T>) -> T {
    let x = x.abs().max(T::one());
    v.norm() * T::epsilon() * T::lit(32.0) * (T::lit(8.0) + x * x.ln())
}

/// Γ(x); nonpositive integers are poles.
pub fn gamma_fn<T: Real>(x: T) -> Result<SpecFunResult<T>> {
    let v = gamma_c(cr(x))?;
    real_part(
        "gamma",
        SpecFunResult {
            value: v,
            abs_err: gamma_err(x, v),
        },
    )
}

/// ln Γ(x) for x > 0.
pub fn log_gamma<T: Real>(x: T) -> Result<SpecFunResult<T>> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("log_gamma needs x > 0, got {x}")));
    }
    let v = lgamma_c(cr(x))?;
    let err = T::epsilon() * T::lit(32.0) * (T::lit(4.0) + v.norm() + x.abs().ln().abs());
    real_part("log_gamma", SpecFunResult { value: v, abs_err: err })
}

/// ψ(x) = d/dx ln Γ(x).
pub fn digamma<T: Real>(x: T) -> Result<SpecFunResult<T>> {
    let v = digamma_c(cr(x))?;
    let cot_scale = if x < T::lit(0.5) {
        T::one() / sin_pi(x).abs().max(T::min_positive_value())
    } else {
        T::one()
    };
    let err = T::epsilon() * T::lit(32.0) * (T::lit(4.0) + v.norm() + cot_scale);
    real_part("digamma", SpecFunResult { value: v, abs_err: err })
}

/// M(a, b, z) for complex arguments.
pub fn kummer_m<T: Real>(a: Complex<T>, b: Complex<T>, z: Complex<T>) -> Result<SpecFunResult<T>> {
    kummer_m_c(a, b, z)
}
