//! Airy Ai, Ai′ and their negative zeros.

use serde::{Deserialize, Serialize};

use super::SpecFunResult;
use crate::error::{Error, Result};
use crate::real::{cr, Real};

const AI0: f64 = 0.355_028_053_887_817_2;
const AIP0: f64 = -0.258_819_403_792_806_8;
const ASYMPTOTIC_FROM: f64 = 8.0;
const MACLAURIN_RADIUS: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AiryKind {
    Ai,
    AiPrime,
}

/// Taylor step of w″ = t w from t0 by h.
fn step<T: Real>(t0: T, w: T, dw: T, h: T) -> (T, T) {
    let mut c = vec![w, dw, t0 * w * T::lit(0.5)];
    let mut val = w + dw * h;
    let mut der = dw;
    let mut hk = h; // h^{k-1} for index k
    let mut quiet = 0;
    for k in 2..300usize {
        if k >= 3 {
            let kk = T::from_usize_lossy(k);
            // k(k−1) c_k = t0 c_{k−2} + c_{k−3}
            let ck = (t0 * c[k - 2] + c[k - 3]) / (kk * (kk - T::one()));
            c.push(ck);
        }
        let kk = T::from_usize_lossy(k);
        let term = c[k] * hk * h;
        let dterm = c[k] * hk * kk;
        val = val + term;
        der = der + dterm;
        hk = hk * h;
        let tiny = T::epsilon() * T::lit(0.01);
        if term.abs() <= tiny * val.abs() && dterm.abs() <= tiny * der.abs() {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    (val, der)
}

fn u_coeffs<T: Real>(n: usize) -> Vec<T> {
    let mut u = vec![T::one()];
    for k in 1..n {
        let kf = k as f64;
        let r = (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        let prev = u[k - 1];
        u.push(prev * T::lit(r));
    }
    u
}

/// Sums Σ s_k c_k ζ^{−k} over the selected indices, stopping at the smallest term.
fn tail_sum<T: Real>(coef: &[T], zeta: T, start: usize, alternate_pairs: bool) -> (T, T) {
    let mut sum = T::zero();
    let mut last = T::infinity();
    let mut k = start;
    let mut j = 0usize;
    while k < coef.len() {
        let sign = if alternate_pairs {
            if j.is_multiple_of(2) {
                T::one()
            } else {
                -T::one()
            }
        } else if k.is_multiple_of(2) {
            T::one()
        } else {
            -T::one()
        };
        let term = sign * coef[k] * zeta.powi(-(k as i32));
        if term.abs() > last {
            break;
        }
        sum = sum + term;
        last = term.abs();
        if last <= T::epsilon() * T::lit(0.01) * sum.abs().max(T::epsilon()) {
            break;
        }
        k += if alternate_pairs { 2 } else { 1 };
        j += 1;
    }
    (sum, last)
}

/// (Ai, Ai′, relative error) from the large-|t| expansions.
fn asymptotic<T: Real>(t: T) -> (T, T, T) {
    let u = u_coeffs::<T>(60);
    let v: Vec<T> = u
        .iter()
        .enumerate()
        .map(|(k, &uk)| {
            let kf = k as f64;
            uk * T::lit(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0))
        })
        .collect();
    let x = t.abs();
    let zeta = T::lit(2.0 / 3.0) * x * x.sqrt();
    let rpi = T::one() / T::PI().sqrt();
    let q4 = x.sqrt().sqrt();
    if t > T::zero() {
        let (su, eu) = tail_sum(&u, zeta, 0, false);
        let (sv, ev) = tail_sum(&v, zeta, 0, false);
        let e = (-zeta).exp() * rpi * T::lit(0.5);
        (e / q4 * su, -e * q4 * sv, eu.max(ev))
    } else {
        let (pu, e1) = tail_sum(&u, zeta, 0, true);
        let (qu, e2) = tail_sum(&u, zeta, 1, true);
        let (pv, e3) = tail_sum(&v, zeta, 0, true);
        let (qv, e4) = tail_sum(&v, zeta, 1, true);
        let ph = zeta - T::FRAC_PI_4();
        let (s, c) = ph.sin_cos();
        let ai = rpi / q4 * (c * pu + s * qu);
        let aip = rpi * q4 * (s * pv - c * qv);
        (ai, aip, e1.max(e2).max(e3).max(e4))
    }
}

/// (Ai(t), Ai′(t), relative error estimate).
fn airy_pair<T: Real>(t: T) -> (T, T, T) {
    let big = T::lit(ASYMPTOTIC_FROM);
    let eps16 = T::epsilon() * T::lit(16.0);
    if t.abs() >= big {
        let (a, b, e) = asymptotic(t);
        return (a, b, e + eps16 * (T::one() + t.abs().powf(T::lit(1.5)) * T::lit(0.1)));
    }
    if t.abs() <= T::lit(MACLAURIN_RADIUS) {
        let (a, b) = step(T::zero(), T::lit(AI0), T::lit(AIP0), t);
        return (a, b, eps16 * T::lit(4.0));
    }
    if t > T::zero() {
        // inward from the anchor: Ai grows toward the origin, so this is stable
        let (mut w, mut dw, _) = asymptotic(big);
        let mut t0 = big;
        while t0 > t {
            let h = (t - t0).max(-T::one());
            let (w1, dw1) = step(t0, w, dw, h);
            w = w1;
            dw = dw1;
            t0 = if t0 + h <= t { t } else { t0 + h };
        }
        (w, dw, eps16 * T::lit(8.0))
    } else {
        let (mut w, mut dw) = (T::lit(AI0), T::lit(AIP0));
        let mut t0 = T::zero();
        while t0 > t {
            let h = (t - t0).max(-T::one());
            let (w1, dw1) = step(t0, w, dw, h);
            w = w1;
            dw = dw1;
            t0 = if t0 + h <= t { t } else { t0 + h };
        }
        (w, dw, eps16 * T::lit(8.0))
    }
}

pub fn airy_ai<T: Real>(t: T) -> Result<SpecFunResult<T>> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("airy_ai at {t}")));
    }
    let (a, b, rel) = airy_pair(t);
    // near a zero of Ai the relative bound is taken against the local slope scale
    let scale = a.abs().max(b.abs() * T::epsilon().sqrt());
    Ok(SpecFunResult {
        value: cr(a),
        abs_err: rel * scale,
    })
}

pub fn airy_ai_prime<T: Real>(t: T) -> Result<SpecFunResult<T>> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("airy_ai_prime at {t}")));
    }
    let (a, b, rel) = airy_pair(t);
    let scale = b.abs().max(a.abs() * t.abs() * T::epsilon().sqrt());
    Ok(SpecFunResult {
        value: cr(b),
        abs_err: rel * scale,
    })
}

fn zero_guess(n: usize, kind: AiryKind) -> f64 {
    let nf = n as f64;
    match kind {
        AiryKind::Ai => {
            let t = 3.0 * std::f64::consts::PI * (4.0 * nf - 1.0) / 8.0;
            let t2 = t.powi(-2);
            -t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 * t2 - 5.0 / 36.0 * t2 * t2 + 77125.0 / 82944.0 * t2 * t2 * t2)
        }
        AiryKind::AiPrime => {
            let t = 3.0 * std::f64::consts::PI * (4.0 * nf - 3.0) / 8.0;
            let t2 = t.powi(-2);
            -t.powf(2.0 / 3.0) * (1.0 - 7.0 / 48.0 * t2 + 35.0 / 288.0 * t2 * t2 - 181223.0 / 207360.0 * t2 * t2 * t2)
        }
    }
}

/// n-th negative zero of Ai (`a_n`) or of Ai′ (`a′_n`), n ≥ 1.
pub fn airy_zero<T: Real>(n: usize, kind: AiryKind) -> Result<T> {
    if n == 0 {
        return Err(Error::Domain("airy_zero index starts at 1".into()));
    }
    let f = |t: T| -> T {
        let (a, b, _) = airy_pair(t);
        match kind {
            AiryKind::Ai => a,
            AiryKind::AiPrime => b,
        }
    };
    let g = zero_guess(n, kind);
    let spacing = std::f64::consts::PI / g.abs().max(1.0).sqrt();
    for widen in [0.3, 0.45] {
        let mut lo = T::lit(g - widen * spacing);
        let mut hi = T::lit(g + widen * spacing);
        let mut flo = f(lo);
        let fhi = f(hi);
        if flo == T::zero() {
            return Ok(lo);
        }
        if fhi == T::zero() {
            return Ok(hi);
        }
        if (flo > T::zero()) == (fhi > T::zero()) {
            continue;
        }
        for _ in 0..200 {
            let mid = (lo + hi) * T::lit(0.5);
            if mid <= lo || mid >= hi || hi - lo <= T::epsilon() * T::lit(2.0) * mid.abs() {
                break;
            }
            let fm = f(mid);
            if fm == T::zero() {
                return Ok(mid);
            }
            if (fm > T::zero()) == (flo > T::zero()) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return Ok((lo + hi) * T::lit(0.5));
    }
    Err(Error::Convergence {
        what: "airy_zero",
        detail: format!("no sign change bracketing zero {n}"),
    })
}
