//! Independent checks of the closed-form results.
//!
//! Eigenvalues come from shooting on r ∈ [eps, L] in the variable s = ln r, with
//! φ = e^{s/2}v so that v″ = (ℓ_eff + 1/4 − p e^s − q e^{2s})v. The condition at
//! eps is imposed through the Frobenius series with prescribed regularized data
//! (φ(0⁺), φ̃(0⁺)); the logarithm in φ′ near the origin is what makes a plain
//! Robin condition fail. Square-integrability of the E = ±i solutions near 0 and
//! ∞ gives the limit-point/limit-circle split and hence the deficiency indices.

use gauss_quad::GaussLegendre;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::Unitary2;
use crate::linalg::Mat2;
use crate::params::PhysParams;
use crate::real::{c, Real};
use crate::specfun::{whittaker_m_c, whittaker_w_c};
use crate::spectral::{assemble_m, eigencondition_scale, energy_of_tau};

/// Default inner cutoff in units of ℏ²/(mκ).
pub const DEFAULT_EPS: f64 = 1e-6;
/// Coarsest log-grid step; the finer grids use h/2 and h/4.
pub const BASE_STEP: f64 = 2e-3;
/// Largest relative disagreement between the two Richardson extrapolants.
pub const GRID_TOL: f64 = 1e-6;

/// The Frobenius series carries the solution from eps out to this radius
/// (in units of ℏ²/(mκ)) before marching starts. Marching through the inner
/// decades would amplify errors in the subdominant constant mode by 1/eps.
pub const SERIES_RADIUS: f64 = 1e-2;

const SERIES_TERMS: usize = 16;

/// Condition imposed at the inner cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OriginCondition<T> {
    /// The solution regular at 0, r^{μ+1/2}(1 + O(r)); Dirichlet for ℓ_eff = 0.
    Regular,
    /// (φ(0⁺), φ̃(0⁺)) ∝ (phi0, phitilde0); only for channels with ℓ_eff = 0.
    Robin { phi0: T, phitilde0: T },
}

/// ℓ_eff with the radial equation φ″ = (ℓ_eff/r² − p/r − q)φ.
pub fn effective_centrifugal<T: Real>(dim: u8, l: u32) -> Result<T> {
    let lf = T::lit(l as f64);
    match dim {
        1 if l == 0 => Ok(T::zero()),
        1 => Err(Error::Domain("the line has only the l = 0 channel".into())),
        2 => Ok(lf * lf - T::lit(0.25)),
        3 => Ok(lf * (lf + T::one())),
        _ => Err(Error::Domain(format!("dimension must be 1, 2 or 3, got {dim}"))),
    }
}

/// Whittaker index μ with ℓ_eff = μ² − 1/4.
pub fn whittaker_mu<T: Real>(dim: u8, l: u32) -> Result<T> {
    let ell = effective_centrifugal::<T>(dim, l)?;
    Ok((ell + T::lit(0.25)).sqrt())
}

/// L = (80 + 8τ)/σ at the shallowest level of interest: the tail there is below e⁻⁴⁰.
pub fn default_box_radius<T: Real>(params: &PhysParams<T>, tau_hi: T) -> T {
    let sigma = params.p() / tau_hi;
    (T::lit(80.0) + T::lit(8.0) * tau_hi) / sigma
}

/// r^ν Σ cₙ rⁿ with ν(ν−1) = ℓ_eff: n(n + 2ν − 1)cₙ = −p cₙ₋₁ − q cₙ₋₂.
fn regular_series<T: Real>(nu: T, p: T, q: T, r: T) -> T {
    let mut prev2 = T::zero();
    let mut prev = T::one();
    let mut sum = T::one();
    let mut rn = T::one();
    for n in 1..SERIES_TERMS {
        let nf = T::lit(n as f64);
        let cn = (-p * prev - q * prev2) / (nf * (nf + T::lit(2.0) * nu - T::one()));
        rn = rn * r;
        sum = sum + cn * rn;
        prev2 = prev;
        prev = cn;
    }
    r.powf(nu) * sum
}

/// (u₂, u₁) with u₁ = r + O(r²) and u₂ = 1 − p r ln(κr) + p r + O(r² ln r).
///
/// φ = φ(0⁺)u₂ + φ̃(0⁺)u₁ has the prescribed regularized limits.
fn log_pair<T: Real>(p: T, q: T, kappa: T, r: T) -> (T, T) {
    let mut a = [T::zero(); SERIES_TERMS];
    let mut b = [T::zero(); SERIES_TERMS];
    a[1] = T::one();
    b[0] = T::one();
    b[1] = p;
    for n in 2..SERIES_TERMS {
        let nf = T::lit(n as f64);
        let d = nf * (nf - T::one());
        a[n] = (-p * a[n - 1] - q * a[n - 2]) / d;
        b[n] = (p * (T::lit(2.0) * nf - T::one()) * a[n] - p * b[n - 1] - q * b[n - 2]) / d;
    }
    let (mut u1, mut bsum, mut rn) = (T::zero(), T::zero(), T::one());
    for n in 0..SERIES_TERMS {
        u1 = u1 + a[n] * rn;
        bsum = bsum + b[n] * rn;
        rn = rn * r;
    }
    (bsum - p * u1 * (kappa * r).ln(), u1)
}

/// A log-uniform grid from eps to L.
#[derive(Debug, Clone, Copy)]
struct LogGrid<T> {
    s0: T,
    h: T,
    n: usize,
}

impl<T: Real> LogGrid<T> {
    fn new(start: T, box_radius: T, n: usize) -> Self {
        let s0 = start.ln();
        LogGrid {
            s0,
            h: (box_radius.ln() - s0) / T::from_usize_lossy(n),
            n,
        }
    }

    fn r(&self, k: usize) -> T {
        (self.s0 + self.h * T::from_usize_lossy(k)).exp()
    }
}

struct Channel<T> {
    p: T,
    kappa: T,
    ell: T,
    nu: T,
}

impl<T: Real> Channel<T> {
    fn initial(&self, q: T, bc: &OriginCondition<T>, r: T) -> T {
        let phi = match *bc {
            OriginCondition::Regular => regular_series(self.nu, self.p, q, r),
            OriginCondition::Robin { phi0, phitilde0 } => {
                let (u2, u1) = log_pair(self.p, q, self.kappa, r);
                phi0 * u2 + phitilde0 * u1
            }
        };
        phi / r.sqrt()
    }
}

/// Outward three-point march; returns (sign changes, final value).
fn march<T: Real>(ch: &Channel<T>, grid: &LogGrid<T>, q: T, bc: &OriginCondition<T>) -> (usize, T) {
    let h2 = grid.h * grid.h;
    let quarter = T::lit(0.25);
    let mut v0 = ch.initial(q, bc, grid.r(0));
    let mut v1 = ch.initial(q, bc, grid.r(1));
    let mut nodes = usize::from(v0 != T::zero() && v1 != T::zero() && (v0 < T::zero()) != (v1 < T::zero()));
    let big = T::lit(1e100);
    for k in 1..grid.n {
        let r = grid.r(k);
        let f = ch.ell + quarter - ch.p * r - q * r * r;
        let v2 = (T::lit(2.0) + h2 * f) * v1 - v0;
        if v2 != T::zero() && v1 != T::zero() && (v2 < T::zero()) != (v1 < T::zero()) {
            nodes += 1;
        }
        v0 = v1;
        v1 = v2;
        if v1.abs() > big {
            v0 = v0 / big;
            v1 = v1 / big;
        }
    }
    (nodes, v1)
}

/// One eigenvalue on each of the three grids and its extrapolation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShootingLevel<T> {
    pub energy: T,
    /// Raw eigenvalues at steps h, h/2, h/4.
    pub raw: [T; 3],
}

fn march_start<T: Real>(params: &PhysParams<T>, eps: T) -> T {
    eps.max(T::lit(SERIES_RADIUS) * params.length_unit())
}

fn validate_box<T: Real>(params: &PhysParams<T>, eps: T, box_radius: T) -> Result<()> {
    let unit = params.length_unit();
    if !(eps > T::zero() && eps <= T::lit(1e-4) * unit) {
        return Err(Error::Domain(format!(
            "eps must lie in (0, 1e-4 length units], got {eps}"
        )));
    }
    if !(box_radius > march_start(params, eps) * T::lit(10.0)) || !box_radius.is_finite() {
        return Err(Error::Domain(format!("box radius {box_radius} is too small")));
    }
    Ok(())
}

/// Eigenvalues in [e_lo, e_hi] of the half-line channel (dim, l) with `bc` at eps and φ(L) = 0.
pub fn shoot_eigenvalues_halfline<T: Real>(
    params: &PhysParams<T>,
    l: u32,
    dim: u8,
    bc: OriginCondition<T>,
    eps: T,
    box_radius: T,
    e_bracket: (T, T),
) -> Result<Vec<T>> {
    Ok(
        shoot_levels(params, l, dim, bc, eps, box_radius, e_bracket, T::lit(BASE_STEP))?
            .into_iter()
            .map(|lv| lv.energy)
            .collect(),
    )
}

/// As [`shoot_eigenvalues_halfline`], keeping the per-grid values.
#[allow(clippy::too_many_arguments)]
pub fn shoot_levels<T: Real>(
    params: &PhysParams<T>,
    l: u32,
    dim: u8,
    bc: OriginCondition<T>,
    eps: T,
    box_radius: T,
    e_bracket: (T, T),
    step: T,
) -> Result<Vec<ShootingLevel<T>>> {
    validate_box(params, eps, box_radius)?;
    let ell = effective_centrifugal::<T>(dim, l)?;
    if matches!(bc, OriginCondition::Robin { .. }) && ell != T::zero() {
        return Err(Error::Domain("a Robin condition needs a channel with l_eff = 0".into()));
    }
    let (e_lo, e_hi) = e_bracket;
    if !(e_lo < e_hi) {
        return Err(Error::Domain("energy bracket must be increasing".into()));
    }
    let ch = Channel {
        p: params.p(),
        kappa: params.kappa,
        ell,
        nu: T::lit(0.5) + (ell + T::lit(0.25)).sqrt(),
    };
    let k2 = params.two_m_over_hbar2();
    let start = march_start(params, eps);
    let n0 = ((box_radius / start).ln() / step).ceil().to_usize().unwrap_or(1).max(4);
    let grids = [n0, 2 * n0, 4 * n0].map(|n| LogGrid::new(start, box_radius, n));
    let count = |g: &LogGrid<T>, e: T| march(&ch, g, k2 * e, &bc).0;

    let per_grid: Vec<Vec<T>> = grids
        .iter()
        .map(|g| {
            let (lo_n, hi_n) = (count(g, e_lo), count(g, e_hi));
            (lo_n..hi_n)
                .map(|j| bisect_count(|e| count(g, e), j, e_lo, e_hi))
                .collect()
        })
        .collect();
    per_grid[0]
        .iter()
        .zip(&per_grid[1])
        .zip(&per_grid[2])
        .map(|((&a, &b), &c)| richardson([a, b, c]))
        .collect()
}

/// Smallest E in the bracket with more than j sign changes.
fn bisect_count<T: Real>(count: impl Fn(T) -> usize, j: usize, mut lo: T, mut hi: T) -> T {
    for _ in 0..200 {
        let mid = (lo + hi) * T::lit(0.5);
        if !(mid > lo && mid < hi) || hi - lo <= T::epsilon() * T::lit(4.0) * mid.abs() {
            break;
        }
        if count(mid) <= j {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * T::lit(0.5)
}

fn richardson<T: Real>(raw: [T; 3]) -> Result<ShootingLevel<T>> {
    let three = T::lit(3.0);
    let four = T::lit(4.0);
    let r1 = (four * raw[1] - raw[0]) / three;
    let r2 = (four * raw[2] - raw[1]) / three;
    let shift = (r2 - r1).abs() / r2.abs().max(T::min_positive_value());
    if shift > T::lit(GRID_TOL) {
        return Err(Error::Grid {
            shift: shift.to_f64_lossy(),
        });
    }
    Ok(ShootingLevel { energy: r2, raw })
}

/// An eigenvalue of the full-line problem found by the two-sided oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineLevel<T> {
    pub energy: T,
    pub tau: T,
    pub multiplicity: u32,
    pub raw: [T; 3],
}

/// Normalized (φ(0⁺), φ̃(0⁺)) of the half-line solution vanishing at L.
///
/// Marches the two series solutions u₂ (data (1, 0)) and u₁ (data (0, 1)) out
/// to L under a common scale; the combination D₁u₂ − D₂u₁ vanishes there.
fn decaying_data<T: Real>(ch: &Channel<T>, grid: &LogGrid<T>, q: T) -> (T, T) {
    let h2 = grid.h * grid.h;
    let quarter = T::lit(0.25);
    let (r0, r1) = (grid.r(0), grid.r(1));
    let (a0, b0) = log_pair(ch.p, q, ch.kappa, r0);
    let (a1, b1) = log_pair(ch.p, q, ch.kappa, r1);
    let mut x = [a0 / r0.sqrt(), b0 / r0.sqrt()];
    let mut y = [a1 / r1.sqrt(), b1 / r1.sqrt()];
    let big = T::lit(1e100);
    for k in 1..grid.n {
        let r = grid.r(k);
        let f = T::lit(2.0) + h2 * (ch.ell + quarter - ch.p * r - q * r * r);
        let next = [f * y[0] - x[0], f * y[1] - x[1]];
        x = y;
        y = next;
        if y[0].abs().max(y[1].abs()) > big {
            x = [x[0] / big, x[1] / big];
            y = [y[0] / big, y[1] / big];
        }
    }
    let (d2, d1) = (y[0], y[1]);
    let n = (d1 * d1 + d2 * d2).sqrt();
    (d1 / n, -d2 / n)
}

/// Eigenvalues of the line extension Û with τ ∈ [tau_lo, tau_hi].
///
/// Both half-lines are shot independently of the Whittaker closed forms; the
/// 2×2 boundary matrix built from their data is scanned for the zeros of its
/// smallest singular value, located by golden-section search on each grid and
/// Richardson-extrapolated.
pub fn line_eigenvalues<T: Real>(
    u: &Unitary2<T>,
    params: &PhysParams<T>,
    tau_range: (T, T),
    eps: T,
    box_radius: T,
) -> Result<Vec<LineLevel<T>>> {
    validate_box(params, eps, box_radius)?;
    let (tau_lo, tau_hi) = tau_range;
    if !(tau_lo > T::zero() && tau_lo < tau_hi) {
        return Err(Error::Domain("tau range must be positive and increasing".into()));
    }
    let ch = Channel {
        p: params.p(),
        kappa: params.kappa,
        ell: T::zero(),
        nu: T::one(),
    };
    let k2 = params.two_m_over_hbar2();
    let step = T::lit(BASE_STEP);
    let start = march_start(params, eps);
    let n0 = ((box_radius / start).ln() / step).ceil().to_usize().unwrap_or(1).max(4);
    let grids = [n0, 2 * n0, 4 * n0].map(|n| LogGrid::new(start, box_radius, n));
    let e_of = |t: T| energy_of_tau(params, t).map(|te| te.energy);
    let smin = |g: &LogGrid<T>, t: T| -> Result<(T, Mat2<T>)> {
        let (g0, g1) = decaying_data(&ch, g, k2 * e_of(t)?);
        let m = assemble_m(u, g0, g1);
        Ok((m.singular_values().1, m))
    };

    let dt = T::lit(0.01);
    let count = ((tau_hi - tau_lo) / dt).ceil().to_usize().unwrap_or(1);
    let taus: Vec<T> = (0..=count)
        .map(|k| tau_lo + (tau_hi - tau_lo) * T::from_usize_lossy(k) / T::from_usize_lossy(count))
        .collect();
    let vals: Vec<T> = taus
        .iter()
        .map(|&t| smin(&grids[0], t).map(|x| x.0))
        .collect::<Result<_>>()?;
    let accept = T::lit(1e-6) * eigencondition_scale::<T>();
    let mut out = Vec::new();
    for k in 1..taus.len() - 1 {
        if !(vals[k] <= vals[k - 1] && vals[k] < vals[k + 1]) {
            continue;
        }
        let mut raw = [T::zero(); 3];
        let mut mult = 0;
        for (gi, g) in grids.iter().enumerate() {
            let (t, v) = golden_min(|t| smin(g, t).map(|x| x.0), taus[k - 1], taus[k + 1])?;
            if v > accept {
                mult = 0;
                break;
            }
            raw[gi] = e_of(t)?;
            if gi == 2 {
                let (_, m) = smin(g, t)?;
                let (smax, _) = m.singular_values();
                mult = if smax < T::lit(1e-4) * eigencondition_scale::<T>() {
                    2
                } else {
                    1
                };
            }
        }
        if mult == 0 {
            continue;
        }
        let lv = richardson(raw)?;
        let tau = crate::spectral::tau_of_energy(params, lv.energy)?.tau;
        out.push(LineLevel {
            energy: lv.energy,
            tau,
            multiplicity: mult,
            raw,
        });
    }
    Ok(out)
}

/// Minimum of a unimodal function on [a, b] by golden-section search.
fn golden_min<T: Real>(f: impl Fn(T) -> Result<T>, mut a: T, mut b: T) -> Result<(T, T)> {
    let g = T::lit(0.618_033_988_749_894_8);
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..200 {
        if b - a <= T::epsilon() * T::lit(8.0) * b.abs() {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 < f2 { (x1, f1) } else { (x2, f2) })
}

/// Square-integrability verdict at one endpoint.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EndpointEvidence<T> {
    /// ∫|φ|² over successive shells (decades toward 0, fixed-width shells toward ∞).
    pub increments: Vec<T>,
    /// Successive increment ratios.
    pub ratios: Vec<T>,
    pub square_integrable: bool,
    /// Increments over the last four shells consistently shrink or consistently do not.
    pub monotone: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolutionEvidence<T> {
    /// "M" (regular at 0) or "W" (decaying at ∞).
    pub solution: &'static str,
    pub near_zero: EndpointEvidence<T>,
    pub near_infinity: EndpointEvidence<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegrabilityReport<T> {
    pub dim: u8,
    pub l: u32,
    pub mu: T,
    /// Sign of Im E (E = ±i energy units).
    pub energy_sign: i8,
    pub solutions: Vec<SolutionEvidence<T>>,
    pub limit_circle_at_zero: bool,
    pub limit_circle_at_infinity: bool,
    /// Number of independent L²(0, ∞) solutions of (h − E)φ = 0.
    pub index_contribution: u32,
}

const CONVERGENT_RATIO: f64 = 0.5;
const DIVERGENT_RATIO: f64 = 0.9;
const SHELLS: usize = 8;

fn classify_shells<T: Real>(increments: Vec<T>, what: &str) -> Result<EndpointEvidence<T>> {
    let ratios: Vec<T> = increments.windows(2).map(|w| w[1] / w[0]).collect();
    let tail = &ratios[ratios.len().saturating_sub(4)..];
    let conv = tail.iter().all(|&r| r <= T::lit(CONVERGENT_RATIO));
    let div = tail.iter().all(|&r| r >= T::lit(DIVERGENT_RATIO));
    // increments shrink (convergent) or do not shrink (divergent) over the last four shells
    let monotone = conv || div;
    if !monotone {
        let shown: Vec<f64> = tail.iter().map(|r| r.to_f64_lossy()).collect();
        return Err(Error::Inconclusive(format!("{what}: increment ratios {shown:?}")));
    }
    Ok(EndpointEvidence {
        increments,
        ratios,
        square_integrable: conv,
        monotone,
    })
}

/// L² evidence for the two Whittaker solutions of (h − E)φ = 0, E = ±i.
///
/// φ = 𝓜_{τ,μ}(σr) and 𝓦_{τ,μ}(σr) with complex τ, σ. Near 0 the integral is
/// split into decades [δ/10, δ] down from δ = 1/|σ|, each done by Gauss–Legendre
/// in ln r; near ∞ into shells of width 4/Re σ beyond r = 2/|σ|.
pub fn integrability_evidence<T: Real>(
    params: &PhysParams<T>,
    dim: u8,
    l: u32,
    energy_sign: i8,
) -> Result<IntegrabilityReport<T>> {
    let mu = whittaker_mu::<T>(dim, l)?;
    let sgn = if energy_sign >= 0 { T::one() } else { -T::one() };
    let energy = c(T::zero(), sgn * params.energy_unit());
    let sigma = (energy * (-T::lit(8.0) * params.mass)).sqrt() / params.hbar;
    let tau = c(params.p(), T::zero()) / sigma;
    let rule = GaussLegendre::new(20.try_into().expect("nonzero degree"));
    let pairs: Vec<(T, T)> = rule
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, w)| (T::lit(x), T::lit(w)))
        .collect();
    let quad = |f: &dyn Fn(T) -> Result<T>, a: T, b: T| -> Result<T> {
        let half = (b - a) * T::lit(0.5);
        let mid = (b + a) * T::lit(0.5);
        let mut acc = T::zero();
        for &(x, w) in &pairs {
            acc = acc + w * f(mid + half * x)?;
        }
        Ok(acc * half)
    };
    let r0 = T::one() / sigma.norm();
    let width = T::lit(4.0) / sigma.re;
    let ln10 = T::lit(10.0).ln();
    let mut solutions = Vec::new();
    for (name, which) in [("M", 0u8), ("W", 1u8)] {
        let density = |r: T| -> Result<T> {
            let z = sigma * r;
            let v = if which == 0 {
                whittaker_m_c(tau, mu, z)?
            } else {
                whittaker_w_c(tau, mu, z)?
            };
            Ok(v.value.norm_sqr())
        };
        let mut near0 = Vec::with_capacity(SHELLS);
        for k in 0..SHELLS {
            let hi = r0.ln() - ln10 * T::lit(k as f64);
            let lo = hi - ln10;
            near0.push(quad(&|s: T| density(s.exp()).map(|d| d * s.exp()), lo, hi)?);
        }
        let mut far = Vec::with_capacity(SHELLS);
        for k in 0..SHELLS {
            let a = r0 * T::lit(2.0) + width * T::lit(k as f64);
            far.push(quad(&density, a, a + width)?);
        }
        solutions.push(SolutionEvidence {
            solution: name,
            near_zero: classify_shells(near0, &format!("{name} near 0"))?,
            near_infinity: classify_shells(far, &format!("{name} near infinity"))?,
        });
    }
    let lc0 = solutions.iter().all(|s| s.near_zero.square_integrable);
    let lc_inf = solutions.iter().all(|s| s.near_infinity.square_integrable);
    Ok(IntegrabilityReport {
        dim,
        l,
        mu,
        energy_sign: if energy_sign >= 0 { 1 } else { -1 },
        solutions,
        limit_circle_at_zero: lc0,
        limit_circle_at_infinity: lc_inf,
        index_contribution: u32::from(lc0) + u32::from(lc_inf),
    })
}

/// Configuration-space settings whose deficiency indices are tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Setting {
    /// ℝ∖{0}: two half-lines.
    Line,
    /// ℝ²∖{0}.
    PlaneOriginRemoved,
    /// ℝ³∖{0}.
    SpaceOriginRemoved,
    /// ℝ³ with test functions allowed at the origin.
    SpaceOriginKept,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeficiencyReport<T> {
    pub setting: Setting,
    /// (n₊, n₋).
    pub indices: (u32, u32),
    /// False for settings reported as metadata only.
    pub computed: bool,
    pub channels: Vec<IntegrabilityReport<T>>,
}

/// Channels l ≤ this are examined; every higher one is limit point at 0 a fortiori.
pub const MAX_CHANNEL: u32 = 3;

/// Deficiency indices from channel-wise integrability evidence.
///
/// Each channel contributes its index times its angular degeneracy (2l + 1 in
/// 3D, 2 for l ≥ 1 in 2D) and the line counts both half-lines.
pub fn deficiency_indices<T: Real>(params: &PhysParams<T>, setting: Setting) -> Result<DeficiencyReport<T>> {
    let (dim, copies): (u8, Box<dyn Fn(u32) -> u32>) = match setting {
        Setting::SpaceOriginKept => {
            return Ok(DeficiencyReport {
                setting,
                indices: (0, 0),
                computed: false,
                channels: Vec::new(),
            });
        }
        Setting::Line => (1, Box::new(|_| 2)),
        Setting::PlaneOriginRemoved => (2, Box::new(|l| if l == 0 { 1 } else { 2 })),
        Setting::SpaceOriginRemoved => (3, Box::new(|l| 2 * l + 1)),
    };
    let max_l = if dim == 1 { 0 } else { MAX_CHANNEL };
    let mut channels = Vec::new();
    let mut idx = [0u32; 2];
    for (slot, sign) in [(0usize, 1i8), (1, -1)] {
        for l in 0..=max_l {
            let rep = integrability_evidence(params, dim, l, sign)?;
            idx[slot] += rep.index_contribution * copies(l);
            channels.push(rep);
        }
    }
    Ok(DeficiencyReport {
        setting,
        indices: (idx[0], idx[1]),
        computed: true,
        channels,
    })
}
