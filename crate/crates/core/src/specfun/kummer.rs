//! Kummer's confluent hypergeometric function M(a, b, z).

use num_complex::Complex;

use super::gamma::{gamma_c, is_nonpositive_integer, rgamma_c};
use super::SpecFunResult;
use crate::error::{Error, Result};
use crate::real::{c, cl, cr, is_finite_c, Real};

/// Switch radius between power series and Poincaré asymptotics.
pub const SWITCH_RADIUS: f64 = 30.0;
const MAX_TERMS: usize = 20_000;

/// A partial sum with a bound on its own error.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Summed<T> {
    pub value: Complex<T>,
    pub err: T,
}

/// Power series Σ (a)_k z^k / ((b)_k k!), summed until the tail is negligible.
pub(crate) fn series<T: Real>(a: Complex<T>, b: Complex<T>, z: Complex<T>) -> Result<Summed<T>> {
    let mut term = cl::<T>(1.0);
    let mut sum = term;
    let mut abs_sum = T::one();
    let terminates = is_nonpositive_integer(a);
    for k in 0..MAX_TERMS {
        let kf = T::from_usize_lossy(k);
        let num = a + cr(kf);
        if terminates && num.norm() == T::zero() {
            return Ok(Summed {
                value: sum,
                err: T::epsilon() * abs_sum * T::lit(4.0),
            });
        }
        term = term * num * z / ((b + cr(kf)) * (kf + T::one()));
        sum = sum + term;
        abs_sum = abs_sum + term.norm();
        if !is_finite_c(sum) {
            return Err(Error::Convergence {
                what: "kummer series",
                detail: "overflow".into(),
            });
        }
        // past the peak the terms shrink at least geometrically
        let past_peak = T::from_usize_lossy(k) > z.norm() + a.norm();
        if past_peak && term.norm() <= T::epsilon() * sum.norm() * T::lit(0.01) {
            let err = T::epsilon() * abs_sum * T::lit(4.0) + term.norm();
            return Ok(Summed { value: sum, err });
        }
    }
    Err(Error::Convergence {
        what: "kummer series",
        detail: format!("{MAX_TERMS} terms"),
    })
}

/// Optimally truncated Σ (p)_s (q)_s / s! · w^s; error is the first omitted term.
pub(crate) fn asymptotic_sum<T: Real>(p: Complex<T>, q: Complex<T>, w: Complex<T>) -> Summed<T> {
    let mut term = cl::<T>(1.0);
    let mut sum = term;
    let mut abs_sum = T::one();
    let mut last = term.norm();
    for s in 0..500usize {
        let sf = T::from_usize_lossy(s);
        let next = term * (p + cr(sf)) * (q + cr(sf)) * w / (sf + T::one());
        let n = next.norm();
        if n == T::zero() {
            return Summed {
                value: sum,
                err: T::epsilon() * abs_sum * T::lit(4.0),
            };
        }
        if n > last {
            return Summed {
                value: sum,
                err: T::lit(2.0) * last + T::epsilon() * abs_sum * T::lit(4.0),
            };
        }
        term = next;
        sum = sum + term;
        abs_sum = abs_sum + n;
        last = n;
        if n <= T::epsilon() * sum.norm() * T::lit(0.01) {
            return Summed {
                value: sum,
                err: T::lit(2.0) * n + T::epsilon() * abs_sum * T::lit(4.0),
            };
        }
    }
    Summed {
        value: sum,
        err: T::lit(2.0) * last + T::epsilon() * abs_sum * T::lit(4.0),
    }
}

/// Poincaré expansion for Re z ≥ 0 (|z| large).
pub(crate) fn asymptotic<T: Real>(a: Complex<T>, b: Complex<T>, z: Complex<T>) -> Result<Summed<T>> {
    let one = cl::<T>(1.0);
    let gb = gamma_c(b)?;
    let zi = z.inv();
    let dom = asymptotic_sum(one - a, b - a, zi);
    let rec = asymptotic_sum(a, a - b + one, -zi);
    let dom_pref = gb * z.exp() * z.powc(a - b) * rgamma_c(a);
    // Stokes phase of the recessive part: e^{±iπa}, its average on the real axis
    let pi_a = a * T::PI();
    let phase = if z.im > T::zero() {
        (pi_a * c(T::zero(), T::one())).exp()
    } else if z.im < T::zero() {
        (pi_a * c(T::zero(), -T::one())).exp()
    } else {
        pi_a.cos()
    };
    let rec_pref = gb * phase * z.powc(-a) * rgamma_c(b - a);
    let value = dom_pref * dom.value + rec_pref * rec.value;
    // the prefactors carry relative rounding of order ε·|z|
    let pref_round = T::epsilon() * T::lit(8.0) * (z.norm() + a.norm() + b.norm() + T::one());
    let err = dom_pref.norm() * dom.err
        + rec_pref.norm() * rec.err
        + pref_round * (dom_pref * dom.value).norm()
        + pref_round * (rec_pref * rec.value).norm();
    if !is_finite_c(value) {
        return Err(Error::Convergence {
            what: "kummer asymptotic",
            detail: "overflow".into(),
        });
    }
    Ok(Summed { value, err })
}

/// M(a, b, z) with relative accuracy ~1e−10 for |z| ≤ 50 and an honest error estimate beyond.
pub fn kummer_m_c<T: Real>(a: Complex<T>, b: Complex<T>, z: Complex<T>) -> Result<SpecFunResult<T>> {
    if is_nonpositive_integer(b) {
        return Err(Error::Pole {
            function: "kummer_m",
            at: format!("b = {}", b.re),
        });
    }
    if is_nonpositive_integer(a) {
        let s = series(a, b, z)?;
        return Ok(SpecFunResult {
            value: s.value,
            abs_err: s.err,
        });
    }
    // Kummer transformation keeps the series free of sign cancellation
    let (pref, aa, zz) = if z.re < T::zero() && !is_nonpositive_integer(a) {
        (z.exp(), b - a, -z)
    } else {
        (cl::<T>(1.0), a, z)
    };
    let ser = series(aa, b, zz).ok().map(|s| Summed {
        value: s.value * pref,
        err: s.err * pref.norm(),
    });
    let asy = if zz.norm() >= T::lit(25.0) && !is_nonpositive_integer(aa) {
        asymptotic(aa, b, zz).ok().map(|s| Summed {
            value: s.value * pref,
            err: s.err * pref.norm(),
        })
    } else {
        None
    };
    let chosen = match (ser, asy) {
        // beyond the switch radius the asymptotic branch wins unless it is worse
        (Some(s), Some(a_)) => {
            let prefer_asy = zz.norm() >= T::lit(SWITCH_RADIUS);
            if (prefer_asy && a_.err <= s.err * T::lit(1e3)) || a_.err < s.err {
                a_
            } else {
                s
            }
        }
        (Some(s), None) => s,
        (None, Some(a_)) => a_,
        (None, None) => {
            return Err(Error::Convergence {
                what: "kummer_m",
                detail: "neither series nor asymptotics evaluated".into(),
            })
        }
    };
    let target = if z.norm() <= T::lit(50.0) {
        T::tol(1e-10, 64.0)
    } else {
        T::tol(1e-6, 64.0)
    };
    if chosen.err > target * chosen.value.norm().max(T::min_positive_value()) {
        return Err(Error::Convergence {
            what: "kummer_m",
            detail: format!(
                "relative error estimate {:.2e} at |z| = {:.3}",
                (chosen.err / chosen.value.norm()).to_f64_lossy(),
                z.norm().to_f64_lossy()
            ),
        });
    }
    Ok(SpecFunResult {
        value: chosen.value,
        abs_err: chosen.err,
    })
}
