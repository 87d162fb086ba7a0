//! Potentials that are fundamental solutions of the Laplacian: κ|x| on the
//! line, κ ln|x| on the plane and −κ/|x| in space.
//!
//! Only the linear one has a computed spectrum. Reflection symmetry splits it
//! into even states (φ′(0) = 0, zeros of Ai′) and odd states (φ(0) = 0, zeros
//! of Ai) of the half-line problem. After t = s(x − E/κ) with
//! s = (2mκ/ℏ²)^{1/3} both reduce to Ai(t), so E = −z·κ/s for a zero z.

use serde::Serialize;

use crate::error::Result;
use crate::oracle::Setting;
use crate::params::PhysParams;
use crate::real::Real;
use crate::specfun::{airy_zero, AiryKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// One level of −(ℏ²/2m)φ″ + κ|x|φ = Eφ. All levels are simple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParityEigen<T> {
    pub energy: T,
    pub parity: Parity,
    /// 1-based position in the combined, increasing list.
    pub index: usize,
}

/// s = (2mκ/ℏ²)^{1/3}, the inverse length of the Airy rescaling.
pub fn airy_scale<T: Real>(params: &PhysParams<T>) -> T {
    params.p().cbrt()
}

/// Energy of the k-th level in one parity class, k ≥ 1.
pub fn parity_level<T: Real>(params: &PhysParams<T>, parity: Parity, k: usize) -> Result<T> {
    let kind = match parity {
        Parity::Even => AiryKind::AiPrime,
        Parity::Odd => AiryKind::Ai,
    };
    let z: T = airy_zero(k, kind)?;
    Ok(-z * params.kappa / airy_scale(params))
}

/// The lowest `n_max` levels. Zeros of Ai′ and Ai interlace
/// (a′₁ > a₁ > a′₂ > a₂ …), so the list alternates even, odd, even, …
pub fn airy_spectrum_1d<T: Real>(params: &PhysParams<T>, n_max: usize) -> Result<Vec<ParityEigen<T>>> {
    (1..=n_max)
        .map(|index| {
            let parity = if index % 2 == 1 { Parity::Even } else { Parity::Odd };
            let energy = parity_level(params, parity, index.div_ceil(2))?;
            Ok(ParityEigen { energy, parity, index })
        })
        .collect()
}

/// E_n ∼ (ℏ²/2m)[(mκ/ℏ²)(3π/4)(4n − 3)]^{2/3}.
pub fn airy_asymptotic<T: Real>(params: &PhysParams<T>, n: usize) -> T {
    let PhysParams { hbar, mass, kappa } = *params;
    let h2 = hbar * hbar;
    let bracket = mass * kappa / h2 * T::lit(0.75) * T::PI() * T::lit(4.0 * n as f64 - 3.0);
    h2 / (T::lit(2.0) * mass) * bracket.powf(T::lit(2.0 / 3.0))
}

/// Which exact level the asymptotic index n is compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Counting {
    /// n-th level of the combined spectrum.
    Overall,
    /// n-th even level; the formula is the leading WKB term of a′_n.
    EvenClass,
}

impl Counting {
    pub const ALL: [Counting; 2] = [Counting::Overall, Counting::EvenClass];
}

/// |asymptotic − exact| / exact at index n under the given counting.
pub fn asymptotic_relative_error<T: Real>(params: &PhysParams<T>, n: usize, counting: Counting) -> Result<T> {
    let exact = match counting {
        Counting::Overall => {
            let parity = if n % 2 == 1 { Parity::Even } else { Parity::Odd };
            parity_level(params, parity, n.div_ceil(2))?
        }
        Counting::EvenClass => parity_level(params, Parity::Even, n)?,
    };
    Ok(((airy_asymptotic(params, n) - exact) / exact).abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Potential {
    /// κ|x|
    Linear,
    /// κ ln|x|
    Logarithmic,
    /// −κ/|x|
    Coulomb,
}

/// The set on which the minimal operator acts (test functions C₀^∞ of it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    Line,
    LineOriginRemoved,
    Plane,
    PlaneOriginRemoved,
    Space,
    SpaceOriginRemoved,
}

impl Region {
    pub fn dim(self) -> u8 {
        match self {
            Region::Line | Region::LineOriginRemoved => 1,
            Region::Plane | Region::PlaneOriginRemoved => 2,
            Region::Space | Region::SpaceOriginRemoved => 3,
        }
    }

    /// The matching setting of the numerical deficiency check, if any.
    pub fn oracle_setting(self) -> Option<Setting> {
        match self {
            Region::LineOriginRemoved => Some(Setting::Line),
            Region::PlaneOriginRemoved => Some(Setting::PlaneOriginRemoved),
            Region::SpaceOriginRemoved => Some(Setting::SpaceOriginRemoved),
            Region::Space => Some(Setting::SpaceOriginKept),
            Region::Line | Region::Plane => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumShape {
    PurelyDiscrete,
    EmptyEssential,
    DiscreteAndEssential,
    /// Depends on the chosen extension.
    ExtensionDependent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SelfAdjointnessEntry {
    pub potential: Potential,
    pub region: Region,
    pub dim: u8,
    /// Equal deficiency indices (n, n); zero means essentially self-adjoint.
    pub deficiency_index: u32,
    pub essentially_self_adjoint: bool,
    pub spectrum: SpectrumShape,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfAdjointnessReport {
    pub entries: Vec<SelfAdjointnessEntry>,
}

impl SelfAdjointnessReport {
    pub fn query(&self, potential: Potential, region: Region) -> Option<&SelfAdjointnessEntry> {
        self.entries
            .iter()
            .find(|e| e.potential == potential && e.region == region)
    }
}

/// Static table; nothing here is computed. The Coulomb rows can be checked
/// numerically with [`crate::oracle::deficiency_indices`].
pub fn selfadjointness_report() -> SelfAdjointnessReport {
    use Potential::*;
    use Region::*;
    use SpectrumShape::*;
    let row = |potential, region: Region, deficiency_index, spectrum| SelfAdjointnessEntry {
        potential,
        region,
        dim: region.dim(),
        deficiency_index,
        essentially_self_adjoint: deficiency_index == 0,
        spectrum,
    };
    SelfAdjointnessReport {
        entries: vec![
            row(Linear, Line, 0, PurelyDiscrete),
            row(Logarithmic, Plane, 0, EmptyEssential),
            row(Coulomb, Space, 0, DiscreteAndEssential),
            row(Coulomb, SpaceOriginRemoved, 1, ExtensionDependent),
            row(Coulomb, PlaneOriginRemoved, 1, ExtensionDependent),
            row(Coulomb, LineOriginRemoved, 2, ExtensionDependent),
        ],
    }
}
