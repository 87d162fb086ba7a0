//! Bound states of the 1D and 3D Coulomb Hamiltonians.
//!
//! On each half-line the only L² solution at E < 0 is Θ(±x)·𝓦_{τ,1/2}(σ|x|),
//! σ = (−8mE)^{1/2}/ℏ, τ = p/σ. Inserting its regularized boundary values
//! (1/Γ(1−τ), ±ω(E)/Γ(1−τ)) into the boundary condition of Û gives a 2×2 matrix
//! M(E) whose null space is the eigenspace. Equivalently, E is an eigenvalue
//! iff (ω − i)/(ω + i) is an eigenvalue e^{iα} of Û, i.e. s₀cos(α/2) + s₁sin(α/2) = 0
//! with (s₀, s₁) = Γ(1−τ)⁻¹·(1, ω)/Γ(τ), a pair that stays finite through τ ∈ ℤ₊.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::{BoundaryData, ExtensionSpec, Lambda, Side, Unitary2};
use crate::linalg::{vnorm, Mat2, Vec2};
use crate::params::PhysParams;
use crate::real::{c, ci, cr, Real};
use crate::specfun::{cos_pi, digamma, gamma_fn, sin_pi, whittaker_m, whittaker_w};

/// Distance to ℤ₊ below which τ counts as a Dirichlet pole.
pub const POLE_TOL: f64 = 1e-8;
/// Relative singular-value threshold for counting null directions of M(E).
pub const MULTIPLICITY_TOL: f64 = 1e-8;
/// Grid points per unit τ-interval in the root scan.
pub const SCAN_POINTS_PER_UNIT: usize = 1000;

/// A negative energy together with its Whittaker index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TauEnergy<T> {
    pub energy: T,
    pub tau: T,
}

impl<T: Real> TauEnergy<T> {
    /// σ = (−4q)^{1/2}, q = 2mE/ℏ²: the Whittaker argument is σ|x|.
    pub fn scale(&self, params: &PhysParams<T>) -> T {
        params.p() / self.tau
    }
}

pub fn tau_of_energy<T: Real>(params: &PhysParams<T>, energy: T) -> Result<TauEnergy<T>> {
    if !(energy < T::zero()) || !energy.is_finite() {
        return Err(Error::Domain(format!(
            "bound-state energy must be negative, got {energy}"
        )));
    }
    let sigma = (-T::lit(8.0) * params.mass * energy).sqrt() / params.hbar;
    Ok(TauEnergy {
        energy,
        tau: params.p() / sigma,
    })
}

pub fn energy_of_tau<T: Real>(params: &PhysParams<T>, tau: T) -> Result<TauEnergy<T>> {
    if !(tau > T::zero()) || !tau.is_finite() {
        return Err(Error::Domain(format!("tau must be positive, got {tau}")));
    }
    let energy = -params.energy_unit() / (T::lit(2.0) * tau * tau);
    Ok(TauEnergy { energy, tau })
}

fn nearest_positive_integer<T: Real>(tau: T) -> u64 {
    tau.round().max(T::one()).to_u64().unwrap_or(1)
}

fn is_dirichlet_tau<T: Real>(tau: T) -> bool {
    tau.round() >= T::one() && (tau - tau.round()).abs() < T::tol(POLE_TOL, 64.0) * tau.max(T::one())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OmegaValue<T> {
    pub energy: T,
    pub omega: T,
    pub nearest_pole_tau: u64,
}

/// ω(E) = p[ln(ℏ²τ/2m) + 2ψ(1) − ψ(1−τ)] − (−2mE)^{1/2}/ℏ.
///
/// This is φ̃(0⁺)/φ(0⁺) for the decaying solution Θ(x)𝓦_{τ,1/2}(σx).
pub fn omega<T: Real>(params: &PhysParams<T>, energy: T) -> Result<OmegaValue<T>> {
    let te = tau_of_energy(params, energy)?;
    let tau = te.tau;
    if is_dirichlet_tau(tau) {
        return Err(Error::Pole {
            function: "omega",
            at: format!("tau = {tau}"),
        });
    }
    let p = params.p();
    let euler = T::lit(0.577_215_664_901_532_9);
    let log_term = (params.hbar * params.hbar * tau / (T::lit(2.0) * params.mass)).ln();
    let psi = digamma(T::one() - tau)?.re();
    let omega = p * (log_term - T::lit(2.0) * euler - psi) - te.scale(params) * T::lit(0.5);
    Ok(OmegaValue {
        energy,
        omega,
        nearest_pole_tau: nearest_positive_integer(tau),
    })
}

/// (s₀, s₁) = Γ(τ)⁻¹·(1/Γ(1−τ), ω/Γ(1−τ)), finite and smooth for all τ > 0.
pub fn scaled_boundary_values<T: Real>(params: &PhysParams<T>, tau: T) -> Result<(T, T)> {
    if !(tau > T::zero()) {
        return Err(Error::Domain(format!("tau must be positive, got {tau}")));
    }
    let p = params.p();
    let euler = T::lit(0.577_215_664_901_532_9);
    let s0 = sin_pi(tau) / T::PI();
    let log_term = (params.hbar * params.hbar * tau / (T::lit(2.0) * params.mass)).ln();
    // σ/2·s₀ written as (p/2)·sin(πτ)/(πτ) to stay finite as τ → 0
    let sinc = if tau < T::lit(1e-4) {
        T::one() - (T::PI() * tau).powi(2) / T::lit(6.0)
    } else {
        s0 / tau
    };
    let b_s0 = p * (log_term - T::lit(2.0) * euler) * s0 - p * T::lit(0.5) * sinc;
    // ψ(1−τ)/Γ(1−τ) = Γ(τ)[ψ(τ) sin(πτ)/π + cos(πτ)]
    let psi_tau = digamma(tau)?.re();
    let s1 = b_s0 - p * (psi_tau * s0 + cos_pi(tau));
    Ok((s0, s1))
}

/// Regularized boundary values of Θ(±x)𝓦_{τ,1/2}(σ|x|).
///
/// φ(0^±) = 1/Γ(1−τ), φ̃(0^±) = ±ω/Γ(1−τ); the other side is zero. At τ ∈ ℤ₊ the
/// values are the finite limits (φ = 0, φ̃ = ∓p(−1)^τ(τ−1)!).
pub fn w_boundary_data<T: Real>(params: &PhysParams<T>, energy: T, side: Side) -> Result<BoundaryData<T>> {
    let te = tau_of_energy(params, energy)?;
    let (s0, s1) = scaled_boundary_values(params, te.tau)?;
    let g = gamma_fn(te.tau)?.re();
    let (g0, g1) = (cr(s0 * g), cr(s1 * g));
    let z = cr(T::zero());
    Ok(match side {
        Side::Plus => BoundaryData::new(g0, z, g1, z),
        Side::Minus => BoundaryData::new(z, g0, z, -g1),
    })
}

/// Unit-normalized (s₀, s₁); M(E) is built from this pair.
fn normalized_pair<T: Real>(params: &PhysParams<T>, tau: T) -> Result<(T, T)> {
    let (s0, s1) = scaled_boundary_values(params, tau)?;
    let n = (s0 * s0 + s1 * s1).sqrt();
    Ok((s0 / n, s1 / n))
}

pub(crate) fn assemble_m<T: Real>(u: &Unitary2<T>, g0: T, g1: T) -> Mat2<T> {
    let a = c(g1, -g0);
    let b = c(g1, g0);
    let core = Mat2::identity().scale(a) - u.matrix().scale(b);
    // c = (c₁, c₂) ↦ d = (c₂, −c₁)
    let k = Mat2::new(cr(T::zero()), cr(T::one()), cr(-T::one()), cr(T::zero()));
    core * k
}

/// M(E) with M·c = 0 iff c₁Θ(−x)𝓦(σ|x|) + c₂Θ(x)𝓦(σx) ∈ dom H_Û.
///
/// Built from bc_residual applied to the boundary data of both half-line
/// solutions, divided by the positive factor Γ(τ)·|(φ(0⁺), φ̃(0⁺))| so that
/// it stays finite and O(1) through the Dirichlet energies. Its natural
/// scale is 2√2: each of the two terms has Frobenius norm 2.
pub fn eigencondition_matrix<T: Real>(u: &Unitary2<T>, params: &PhysParams<T>, energy: T) -> Result<Mat2<T>> {
    let te = tau_of_energy(params, energy)?;
    let (g0, g1) = normalized_pair(params, te.tau)?;
    Ok(assemble_m(u, g0, g1))
}

/// Reference scale of [`eigencondition_matrix`] used for the rank decision.
pub fn eigencondition_scale<T: Real>() -> T {
    T::lit(2.0 * std::f64::consts::SQRT_2)
}

/// Eigenfunction basis descriptors.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigenBasis<T> {
    /// Coefficients (c₁, c₂) of Θ(−x)𝓦_{τ,1/2}(σ|x|) and Θ(x)𝓦_{τ,1/2}(σx).
    Line { coefficients: Vec<Vec2<T>> },
    /// Angular channels l with their degeneracy 2l + 1.
    Radial { channels: Vec<(u32, u32)> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenRecord<T> {
    pub energy: T,
    pub tau: T,
    /// Whittaker argument scale σ = p/τ.
    pub scale: T,
    pub multiplicity: u32,
    pub basis: EigenBasis<T>,
    pub extension: ExtensionSpec<T>,
}

#[derive(Debug, Clone, Copy)]
pub struct SpectrumOptions<T> {
    /// Bisection stops once the τ-bracket is narrower than this (relative to max(1, τ)).
    pub tau_tol: T,
}

impl<T: Real> Default for SpectrumOptions<T> {
    fn default() -> Self {
        SpectrumOptions {
            tau_tol: T::tol(1e-13, 8.0),
        }
    }
}

/// Eigenphases α ∈ (−π, π] of Û with multiplicities.
fn eigenphases<T: Real>(u: &Unitary2<T>) -> Vec<(T, u32)> {
    let [l1, l2] = u.matrix().eigenvalues();
    if (l1 - l2).norm() < T::tol(1e-8, 64.0) {
        let mean = (l1 + l2) * T::lit(0.5);
        return vec![(mean.arg(), 2)];
    }
    let mut v = vec![(l1.arg(), 1), (l2.arg(), 1)];
    v.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    v
}

/// s₀cos(α/2) + s₁sin(α/2); vanishes iff e^{iα} = (ω−i)/(ω+i).
fn phase_function<T: Real>(params: &PhysParams<T>, alpha: T, tau: T) -> Result<T> {
    let (s0, s1) = scaled_boundary_values(params, tau)?;
    let h = alpha * T::lit(0.5);
    Ok(s0 * h.cos() + s1 * h.sin())
}

fn sign_of<T: Real>(x: T) -> i8 {
    if x > T::zero() {
        1
    } else if x < T::zero() {
        -1
    } else {
        0
    }
}

fn bisect_tau<T: Real>(f: &impl Fn(T) -> Result<T>, mut lo: T, mut hi: T, mut flo: T, tol: T) -> Result<T> {
    for _ in 0..400 {
        let width = hi - lo;
        if width <= tol * hi.max(T::one()) {
            return Ok((lo + hi) * T::lit(0.5));
        }
        // geometric midpoints while the bracket spans decades near τ = 0
        let mid = if hi > lo * T::lit(4.0) && lo > T::zero() {
            (lo * hi).sqrt()
        } else {
            (lo + hi) * T::lit(0.5)
        };
        if !(mid > lo && mid < hi) {
            break;
        }
        let fm = f(mid)?;
        if fm == T::zero() {
            return Ok(mid);
        }
        if sign_of(fm) == sign_of(flo) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let width = hi - lo;
    if width <= T::tol(1e-10, 64.0) * hi.max(T::one()) {
        return Ok((lo + hi) * T::lit(0.5));
    }
    Err(Error::Bracket {
        tau: hi.to_f64_lossy(),
        detail: format!("bracket width {} after bisection", width),
    })
}

/// Scan grid in τ: a log-spaced run toward 0, then SCAN_POINTS_PER_UNIT midpoints per unit interval.
fn scan_grid<T: Real>(tau_max: T) -> Vec<T> {
    let mut grid = Vec::new();
    let first = T::lit(0.5 / SCAN_POINTS_PER_UNIT as f64);
    let mut t = T::lit(1e-150);
    while t < first {
        grid.push(t);
        t = t * T::lit(1e6);
    }
    let units = tau_max.ceil().to_usize().unwrap_or(1);
    for n in 0..units {
        for j in 0..SCAN_POINTS_PER_UNIT {
            let v = T::from_usize_lossy(n) + T::lit((j as f64 + 0.5) / SCAN_POINTS_PER_UNIT as f64);
            if v > tau_max {
                break;
            }
            grid.push(v);
        }
    }
    grid.push(tau_max);
    grid
}

fn roots_of_phase<T: Real>(params: &PhysParams<T>, alpha: T, tau_max: T, tol: T) -> Result<Vec<T>> {
    let f = |t: T| phase_function(params, alpha, t);
    let grid = scan_grid(tau_max);
    let mut roots = Vec::new();
    let mut prev_t = grid[0];
    let mut prev_f = f(prev_t)?;
    if prev_f == T::zero() {
        roots.push(prev_t);
    }
    for &t in &grid[1..] {
        if t <= prev_t {
            continue;
        }
        let ft = f(t)?;
        if ft == T::zero() {
            roots.push(t);
        } else if prev_f != T::zero() && sign_of(ft) != sign_of(prev_f) {
            roots.push(bisect_tau(&f, prev_t, t, prev_f, tol)?);
        }
        prev_t = t;
        prev_f = ft;
    }
    Ok(roots)
}

/// Every E with τ(E) ∈ (0, tau_max] at which M(E) is singular, ascending.
pub fn solve_spectrum_1d<T: Real>(u: &Unitary2<T>, params: &PhysParams<T>, tau_max: T) -> Result<Vec<EigenRecord<T>>> {
    solve_spectrum_1d_with(u, params, tau_max, &SpectrumOptions::default())
}

pub fn solve_spectrum_1d_with<T: Real>(
    u: &Unitary2<T>,
    params: &PhysParams<T>,
    tau_max: T,
    opts: &SpectrumOptions<T>,
) -> Result<Vec<EigenRecord<T>>> {
    if !(tau_max >= T::one()) || !tau_max.is_finite() {
        return Err(Error::Domain(format!("tau_max must be at least 1, got {tau_max}")));
    }
    let mut taus: Vec<T> = Vec::new();
    for (alpha, _) in eigenphases(u) {
        taus.extend(roots_of_phase(params, alpha, tau_max, opts.tau_tol)?);
    }
    taus.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let mut merged: Vec<T> = Vec::new();
    for t in taus {
        match merged.last() {
            Some(&last) if (t - last).abs() <= T::tol(1e-9, 64.0) * t => {}
            _ => merged.push(t),
        }
    }
    let mut out = Vec::with_capacity(merged.len());
    for tau in merged {
        let te = energy_of_tau(params, tau)?;
        let m = eigencondition_matrix(u, params, te.energy)?;
        let (smax, smin) = m.singular_values();
        let thresh = T::tol(MULTIPLICITY_TOL, 64.0) * eigencondition_scale::<T>();
        let coefficients: Vec<Vec2<T>> = if smax < thresh {
            vec![[cr(T::one()), cr(T::zero())], [cr(T::zero()), cr(T::one())]]
        } else if smin < thresh {
            vec![m.min_right_singular_vector()]
        } else {
            return Err(Error::Bracket {
                tau: tau.to_f64_lossy(),
                detail: format!("M(E) not singular at refined root (smallest singular value {smin})"),
            });
        };
        out.push(EigenRecord {
            energy: te.energy,
            tau,
            scale: te.scale(params),
            multiplicity: coefficients.len() as u32,
            basis: EigenBasis::Line { coefficients },
            extension: ExtensionSpec::one_d(*u),
        });
    }
    Ok(out)
}

/// E_n = −mκ²/(2ℏ²n²) with multiplicity Σ_{l<n}(2l+1) = n².
pub fn dirichlet_spectrum_3d<T: Real>(params: &PhysParams<T>, n_max: u32) -> Result<Vec<EigenRecord<T>>> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let te = energy_of_tau(params, T::lit(n as f64))?;
        let channels: Vec<(u32, u32)> = (0..n).map(|l| (l, 2 * l + 1)).collect();
        let multiplicity: u32 = channels.iter().map(|c| c.1).sum();
        assert_eq!(multiplicity, n * n, "angular decomposition must give n^2 states");
        out.push(EigenRecord {
            energy: te.energy,
            tau: te.tau,
            scale: te.scale(params),
            multiplicity,
            basis: EigenBasis::Radial { channels },
            extension: ExtensionSpec::three_d(Lambda::Finite(T::zero())),
        });
    }
    Ok(out)
}

/// c₁Θ(−x)𝓦_{τ,1/2}(σ|x|) + c₂Θ(x)𝓦_{τ,1/2}(σx).
pub fn eigenfunction_eval<T: Real>(rec: &EigenRecord<T>, coeffs: &Vec2<T>, x: T) -> Result<Complex<T>> {
    if !matches!(rec.basis, EigenBasis::Line { .. }) {
        return Err(Error::Domain(
            "eigenfunction_eval needs a one-dimensional record".into(),
        ));
    }
    if x == T::zero() || !x.is_finite() {
        return Err(Error::Domain(format!("x must be finite and nonzero, got {x}")));
    }
    if vnorm(coeffs) == T::zero() {
        return Err(Error::Domain("coefficient vector is zero".into()));
    }
    let z = rec.scale * x.abs();
    let coef = if x < T::zero() { coeffs[0] } else { coeffs[1] };
    if coef == cr(T::zero()) {
        return Ok(cr(T::zero()));
    }
    let w = whittaker_w(rec.tau, T::lit(0.5), z)?.re();
    Ok(coef * w)
}

/// Kernel of (H_D − E)⁻¹ for the Dirichlet extension Û = I.
///
/// G(x, y) = Θ(xy)·(2m/ℏ²)·Γ(1−τ)/σ · 𝓦(σ·max(|x|,|y|))·𝓜(σ·min(|x|,|y|)),
/// with 𝓦 = 𝓦_{τ,1/2} decaying at infinity and 𝓜 = 𝓜_{τ,1/2} vanishing at 0.
pub fn greens_dirichlet<T: Real>(params: &PhysParams<T>, energy: T, x: T, y: T) -> Result<T> {
    let te = tau_of_energy(params, energy)?;
    if is_dirichlet_tau(te.tau) {
        return Err(Error::EigenvalueHit {
            tau: te.tau.to_f64_lossy(),
        });
    }
    if x == T::zero() || y == T::zero() || !x.is_finite() || !y.is_finite() {
        return Err(Error::Domain("greens_dirichlet needs finite nonzero x and y".into()));
    }
    if (x > T::zero()) != (y > T::zero()) {
        return Ok(T::zero());
    }
    let sigma = te.scale(params);
    let (big, small) = if x.abs() >= y.abs() {
        (x.abs(), y.abs())
    } else {
        (y.abs(), x.abs())
    };
    let half = T::lit(0.5);
    let w = whittaker_w(te.tau, half, sigma * big)?.re();
    let m = whittaker_m(te.tau, half, sigma * small)?.re();
    let g = gamma_fn(T::one() - te.tau)?.re();
    Ok(params.two_m_over_hbar2() * g / sigma * w * m)
}

/// i as used in the eigencondition; exposed for tests of the phase criterion.
pub fn phase_eigenvalue<T: Real>(omega: T) -> Complex<T> {
    (cr(omega) - ci()) / (cr(omega) + ci())
}
