//! Whittaker functions 𝓜_{τ,μ}(z) and 𝓦_{τ,μ}(z).
//!
//! 𝓜 comes straight from Kummer's M. 𝓦 is evaluated by, in order of preference,
//! the Poincaré expansion (|z| ≥ 30), the logarithmic connection formula when 2μ is
//! an integer (the Gamma combination otherwise), and Taylor-series integration of
//! Whittaker's equation inward from an asymptotic anchor when cancellation in the
//! connection formula eats too many digits.

use num_complex::Complex;

use super::gamma::{digamma_c, gamma_c, is_nonpositive_integer, rgamma_c};
use super::kummer::{asymptotic_sum, kummer_m_c, series};
use super::{real_part, SpecFunResult};
use crate::error::{Error, Result};
use crate::real::{cl, cr, is_finite_c, Real};

const ASYMPTOTIC_RADIUS: f64 = 30.0;
const MAX_ANCHOR: f64 = 5.0e3;

/// 𝓜_{τ,μ}(z) = e^{−z/2} z^{μ+1/2} M(μ−τ+1/2, 1+2μ, z), principal powers.
pub fn whittaker_m_c<T: Real>(tau: Complex<T>, mu: T, z: Complex<T>) -> Result<SpecFunResult<T>> {
    let b = cr(T::one() + T::lit(2.0) * mu);
    if is_nonpositive_integer(b) {
        return Err(Error::Pole {
            function: "whittaker_m",
            at: format!("1 + 2mu = {}", b.re),
        });
    }
    if z.norm() == T::zero() {
        return Err(Error::Domain("whittaker_m at z = 0".into()));
    }
    let a = cr(mu + T::lit(0.5)) - tau;
    let m = kummer_m_c(a, b, z)?;
    let pref = (-z * T::lit(0.5)).exp() * z.powc(cr(mu + T::lit(0.5)));
    Ok(SpecFunResult {
        value: m.value * pref,
        abs_err: m.abs_err * pref.norm(),
    })
}

/// 𝓦_{τ,μ}(z), the solution recessive as z → +∞, for Re z > 0.
pub fn whittaker_w_c<T: Real>(tau: Complex<T>, mu: T, z: Complex<T>) -> Result<SpecFunResult<T>> {
    if z.norm() == T::zero() {
        return Err(Error::Domain("whittaker_w at z = 0".into()));
    }
    if z.re <= T::zero() {
        return Err(Error::Domain("whittaker_w needs Re z > 0".into()));
    }
    let target = T::tol(1e-12, 256.0);
    if z.norm() >= T::lit(ASYMPTOTIC_RADIUS) {
        let asy = w_asymptotic(tau, mu, z);
        if asy.abs_err <= target * asy.value.norm() {
            return Ok(asy);
        }
    }
    let near = w_connection(tau, mu, z);
    if let Ok(r) = &near {
        if r.abs_err <= target * r.value.norm() || z.norm() < T::lit(1.0) {
            return near;
        }
    }
    match w_integrated(tau, mu, z) {
        Ok(r) => Ok(r),
        Err(e) => near.map_err(|_| e),
    }
}

/// e^{−z/2} z^τ Σ (1/2+μ−τ)_k (1/2−μ−τ)_k / k! (−z)^{−k}, optimally truncated.
pub(crate) fn w_asymptotic<T: Real>(tau: Complex<T>, mu: T, z: Complex<T>) -> SpecFunResult<T> {
    let half = T::lit(0.5);
    let s = asymptotic_sum(cr(half + mu) - tau, cr(half - mu) - tau, -z.inv());
    let pref = (-z * half + tau * z.ln()).exp();
    SpecFunResult {
        value: pref * s.value,
        abs_err: pref.norm() * s.err,
    }
}

/// ln 𝓦 and 𝓦′/𝓦 from the Poincaré expansion, with relative error.
fn w_asymptotic_log<T: Real>(tau: Complex<T>, mu: T, z: Complex<T>) -> (Complex<T>, Complex<T>, T) {
    let half = T::lit(0.5);
    let p = cr(half + mu) - tau;
    let q = cr(half - mu) - tau;
    let w = -z.inv();
    let s = asymptotic_sum(p, q, w);
    // S′(z): Σ k t_k (−z)^{−k} · (−1/z) … differentiate term by term
    let mut term = cl::<T>(1.0);
    let mut ds = cr(T::zero());
    let mut last = T::infinity();
    for k in 0..500usize {
        let kf = T::from_usize_lossy(k);
        let next = term * (p + cr(kf)) * (q + cr(kf)) * w / (kf + T::one());
        if next.norm() == T::zero() || next.norm() > last {
            break;
        }
        last = next.norm();
        term = next;
        ds = ds - term * (kf + T::one()) / z;
        if last <= T::epsilon() * s.value.norm() * T::lit(0.01) {
            break;
        }
    }
    let lnw = -z * half + tau * z.ln() + s.value.ln();
    let dlog = cr(-half) + tau / z + ds / s.value;
    (lnw, dlog, s.err / s.value.norm())
}

/// Connection formula through Tricomi's U; logarithmic when 2μ ∈ ℤ.
pub(crate) fn w_connection<T: Real>(tau: Complex<T>, mu: T, z: Complex<T>) -> Result<SpecFunResult<T>> {
    let half = T::lit(0.5);
    let a = cr(mu + half) - tau;
    let two_mu = T::lit(2.0) * mu;
    let pref = (-z * half).exp() * z.powc(cr(mu + half));
    let u = if is_nonpositive_integer(a) {
        u_polynomial(a, cr(T::one() + two_mu), z)?
    } else if two_mu == two_mu.round() && two_mu >= T::zero() {
        u_log(a, two_mu.to_usize().unwrap_or(0), z)?
    } else {
        u_gamma_combination(a, cr(T::one() + two_mu), z)?
    };
    Ok(SpecFunResult {
        value: u.value * pref,
        abs_err: u.abs_err * pref.norm(),
    })
}

/// U(−m, b, z) = (−1)^m (b)_m M(−m, b, z).
fn u_polynomial<T: Real>(a: Complex<T>, b: Complex<T>, z: Complex<T>) -> Result<SpecFunResult<T>> {
    let m = (-a.re).round().to_usize().unwrap_or(0);
    let mut poch = cl::<T>(1.0);
    for k in 0..m {
        poch = poch * (b + cr(T::from_usize_lossy(k)));
    }
    if m % 2 == 1 {
        poch = -poch;
    }
    let s = series(a, b, z)?;
    Ok(SpecFunResult {
        value: s.value * poch,
        abs_err: s.err * poch.norm(),
    })
}

/// U(a, n+1, z) by the logarithmic limit of the connection formula.
fn u_log<T: Real>(a: Complex<T>, n: usize, z: Complex<T>) -> Result<SpecFunResult<T>> {
    let one = cl::<T>(1.0);
    let nf = T::from_usize_lossy(n);
    let lnz = z.ln();
    let euler = T::lit(0.577_215_664_901_532_9);
    // ψ(1+k) and ψ(n+1+k) by harmonic sums from ψ(1) = −γ
    let mut psi_1k = -euler;
    let mut psi_n1k = -euler;
    for j in 1..=n {
        psi_n1k = psi_n1k + T::one() / T::from_usize_lossy(j);
    }
    let mut nfact = T::one();
    for j in 1..=n {
        nfact = nfact * T::from_usize_lossy(j);
    }
    let mut sign = if (n + 1).is_multiple_of(2) { T::one() } else { -T::one() };
    sign = sign / nfact;
    let lead = rgamma_c(a - cr(nf)) * sign;

    let mut coef = one; // (a)_k z^k / ((n+1)_k k!)
    let mut sum = cr(T::zero());
    let mut abs_sum = T::zero();
    let mut converged = lead.norm() == T::zero();
    if !converged {
        for k in 0..5_000usize {
            let kf = T::from_usize_lossy(k);
            let ak = a + cr(kf);
            let psi_ak = if is_nonpositive_integer(ak) {
                cr(T::zero())
            } else {
                digamma_c(ak)?
            };
            let term = coef * (lnz + psi_ak - cr(psi_1k) - cr(psi_n1k));
            sum = sum + term;
            abs_sum = abs_sum + term.norm() + coef.norm() * (lnz.norm() + psi_ak.norm());
            if !is_finite_c(sum) {
                return Err(Error::Convergence {
                    what: "tricomi U log series",
                    detail: "overflow".into(),
                });
            }
            if kf > z.norm() + a.norm() && term.norm() <= T::epsilon() * sum.norm() * T::lit(0.01) {
                converged = true;
                break;
            }
            coef = coef * ak * z / ((nf + T::one() + kf) * (kf + T::one()));
            psi_1k = psi_1k + T::one() / (kf + T::one());
            psi_n1k = psi_n1k + T::one() / (nf + kf + T::one());
        }
    }
    if !converged {
        return Err(Error::Convergence {
            what: "tricomi U log series",
            detail: "5000 terms".into(),
        });
    }
    let mut value = lead * sum;
    let mut abs_err = lead.norm() * abs_sum * T::epsilon() * T::lit(8.0);

    // finite part: (1/Γ(a)) Σ_{k=1}^{n} (k−1)! (1−a+k)_{n−k} / (n−k)! z^{−k}
    let ra = rgamma_c(a);
    if n > 0 && ra.norm() > T::zero() {
        let zi = z.inv();
        let mut fin = cr(T::zero());
        let mut fin_abs = T::zero();
        let mut zpow = one;
        let mut kfact = T::one(); // (k−1)!
        for k in 1..=n {
            zpow = zpow * zi;
            if k > 1 {
                kfact = kfact * T::from_usize_lossy(k - 1);
            }
            let mut poch = one;
            for j in 0..(n - k) {
                poch = poch * (one - a + cr(T::from_usize_lossy(k + j)));
            }
            let mut nk_fact = T::one();
            for j in 1..=(n - k) {
                nk_fact = nk_fact * T::from_usize_lossy(j);
            }
            let t = zpow * poch * kfact / nk_fact;
            fin = fin + t;
            fin_abs = fin_abs + t.norm();
        }
        value = value + ra * fin;
        abs_err = abs_err + ra.norm() * fin_abs * T::epsilon() * T::lit(8.0);
    }
    Ok(SpecFunResult { value, abs_err })
}

/// U(a, b, z) = Γ(1−b)/Γ(a−b+1) M(a,b,z) + Γ(b−1)/Γ(a) z^{1−b} M(a−b+1, 2−b, z).
fn u_gamma_combination<T: Real>(a: Complex<T>, b: Complex<T>, z: Complex<T>) -> Result<SpecFunResult<T>> {
    let one = cl::<T>(1.0);
    let two = cl::<T>(2.0);
    let c1 = gamma_c(one - b)? * rgamma_c(a - b + one);
    let c2 = gamma_c(b - one)? * rgamma_c(a) * z.powc(one - b);
    let m1 = series(a, b, z)?;
    let m2 = series(a - b + one, two - b, z)?;
    let value = c1 * m1.value + c2 * m2.value;
    let round = T::epsilon() * T::lit(16.0) * ((c1 * m1.value).norm() + (c2 * m2.value).norm());
    let abs_err = c1.norm() * m1.err + c2.norm() * m2.err + round;
    Ok(SpecFunResult { value, abs_err })
}

/// One Taylor step of z²w″ = (z²/4 − τz + μ² − 1/4) w from z0 by h.
fn taylor_step<T: Real>(
    tau: Complex<T>,
    nu: T,
    z0: Complex<T>,
    w0: Complex<T>,
    dw0: Complex<T>,
    h: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    let quarter = T::lit(0.25);
    let g0 = z0 * z0 * quarter - tau * z0 + cr(nu);
    let g1 = z0 * T::lit(0.5) - tau;
    let g2 = cr(quarter);
    let z02 = z0 * z0;
    let zero = cr(T::zero());
    let mut cs: Vec<Complex<T>> = vec![w0, dw0];
    let mut ds: Vec<Complex<T>> = Vec::new();
    let mut w = w0 + dw0 * h;
    let mut dw = dw0;
    let mut hp = h; // h^{k+1}
    let mut small = 0;
    for k in 0..400usize {
        let ck = cs[k];
        let ck1 = if k >= 1 { cs[k - 1] } else { zero };
        let ck2 = if k >= 2 { cs[k - 2] } else { zero };
        let dk1 = if k >= 1 { ds[k - 1] } else { zero };
        let dk2 = if k >= 2 { ds[k - 2] } else { zero };
        let dk = (g0 * ck + g1 * ck1 + g2 * ck2 - z0 * dk1 * T::lit(2.0) - dk2) / z02;
        ds.push(dk);
        let kk = T::from_usize_lossy(k);
        let cnext = dk / ((kk + T::lit(2.0)) * (kk + T::one()));
        cs.push(cnext);
        // term of index k+2
        let term = cnext * hp * h;
        let dterm = cnext * hp * (kk + T::lit(2.0));
        w = w + term;
        dw = dw + dterm;
        hp = hp * h;
        if term.norm() <= T::epsilon() * w.norm() * T::lit(0.01)
            && dterm.norm() <= T::epsilon() * dw.norm() * T::lit(0.01)
        {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    (w, dw)
}

/// 𝓦 by integrating Whittaker's equation inward from an asymptotic anchor on the ray of z.
pub(crate) fn w_integrated<T: Real>(tau: Complex<T>, mu: T, z: Complex<T>) -> Result<SpecFunResult<T>> {
    let dir = z / z.norm();
    let mut radius = T::lit(ASYMPTOTIC_RADIUS).max(z.norm());
    let target = T::tol(1e-14, 64.0);
    let (lnw, dlog) = loop {
        let anchor = dir * radius;
        let (lnw, dlog, rel) = w_asymptotic_log(tau, mu, anchor);
        if rel <= target {
            break (lnw, dlog);
        }
        radius = radius + T::lit(15.0);
        if radius > T::lit(MAX_ANCHOR) {
            return Err(Error::Convergence {
                what: "whittaker_w",
                detail: "no accurate asymptotic anchor below |z| = 5000".into(),
            });
        }
    };
    let nu = mu * mu - T::lit(0.25);
    let mut z0 = dir * radius;
    let mut w = cl::<T>(1.0);
    let mut dw = dlog;
    let mut log_scale = lnw;
    let mut steps = 0usize;
    while (z0 - z).norm() > T::zero() {
        let remaining = z - z0;
        let hmax = T::one().min(T::lit(0.4) * z0.norm());
        let h = if remaining.norm() <= hmax {
            remaining
        } else {
            remaining / remaining.norm() * hmax
        };
        let (w1, dw1) = taylor_step(tau, nu, z0, w, dw, h);
        z0 = if remaining.norm() <= hmax { z } else { z0 + h };
        let n = w1.norm();
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::Convergence {
                what: "whittaker_w",
                detail: "ODE integration broke down".into(),
            });
        }
        w = w1 / n;
        dw = dw1 / n;
        log_scale = log_scale + cr(n.ln());
        steps += 1;
    }
    let value = w * log_scale.exp();
    let abs_err = value.norm() * T::epsilon() * T::lit(16.0) * (T::from_usize_lossy(steps) + T::one());
    Ok(SpecFunResult { value, abs_err })
}

/// 𝓜_{τ,μ}(z) for real τ, μ and z > 0.
pub fn whittaker_m<T: Real>(tau: T, mu: T, z: T) -> Result<SpecFunResult<T>> {
    if !(z > T::zero()) {
        return Err(Error::Domain(format!("whittaker_m needs z > 0, got {z}")));
    }
    real_part("whittaker_m", whittaker_m_c(cr(tau), mu, cr(z))?)
}

/// 𝓦_{τ,μ}(z) for real τ, μ and z > 0.
pub fn whittaker_w<T: Real>(tau: T, mu: T, z: T) -> Result<SpecFunResult<T>> {
    if !(z > T::zero()) {
        return Err(Error::Domain(format!("whittaker_w needs z > 0, got {z}")));
    }
    real_part("whittaker_w", whittaker_w_c(cr(tau), mu, cr(z))?)
}
