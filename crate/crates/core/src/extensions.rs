//! Self-adjoint extensions: the U(2) family on the line, the λ-family of the
//! 3D s-wave and the θ-family of the 2D l = 0 channel, plus the translation
//! between a unitary Û, its boundary condition and its Cayley matrix.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Mat2, Vec2};
use crate::params::PhysParams;
use crate::real::{c, ci, cr, Real};

/// Relative threshold on the smaller singular value of I ∓ Û.
pub const INVERTIBILITY_TOL: f64 = 1e-10;

/// A 2×2 unitary matrix labelling an extension on ℝ∖{0}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Unitary2<T> {
    mat: Mat2<T>,
}

impl<T: Real> Unitary2<T> {
    /// Checks U U† = I to 1e−12 (floored at a few ε for narrow scalars).
    pub fn new(mat: Mat2<T>) -> Result<Self> {
        let dev = (mat * mat.adjoint()).max_abs_diff(&Mat2::identity());
        if !(dev <= T::tol(1e-12, 64.0)) {
            return Err(Error::Domain(format!("matrix is not unitary (|UU* - I| = {dev})")));
        }
        Ok(Unitary2 { mat })
    }

    /// Skips the unitarity check; the caller guarantees it.
    pub(crate) fn new_unchecked(mat: Mat2<T>) -> Self {
        Unitary2 { mat }
    }

    pub fn matrix(&self) -> &Mat2<T> {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        self.mat.m[i][j]
    }
}

impl<'de> Deserialize<'de> for Unitary2<f64> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mat = Mat2::<f64>::deserialize(d)?;
        Unitary2::new(mat).map_err(serde::de::Error::custom)
    }
}

/// The four extensions singled out on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedExtension {
    Dirichlet,
    NeumannLike,
    Periodic,
    Antiperiodic,
}

impl FromStr for NamedExtension {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['_', ' '], "-").as_str() {
            "dirichlet" => Ok(Self::Dirichlet),
            "neumann" | "neumann-like" | "neumannlike" => Ok(Self::NeumannLike),
            "periodic" => Ok(Self::Periodic),
            "antiperiodic" | "anti-periodic" => Ok(Self::Antiperiodic),
            other => Err(Error::Domain(format!(
                "unknown extension {other:?} (expected dirichlet, neumann-like, periodic, antiperiodic)"
            ))),
        }
    }
}

impl fmt::Display for NamedExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Dirichlet => "dirichlet",
            Self::NeumannLike => "neumann-like",
            Self::Periodic => "periodic",
            Self::Antiperiodic => "antiperiodic",
        })
    }
}

/// I, −I, ((0,1),(1,0)), ((0,−1),(−1,0)).
pub fn named_extension<T: Real>(name: NamedExtension) -> Unitary2<T> {
    let o = cr(T::one());
    let z = cr(T::zero());
    let mat = match name {
        NamedExtension::Dirichlet => Mat2::identity(),
        NamedExtension::NeumannLike => -Mat2::identity(),
        NamedExtension::Periodic => Mat2::new(z, o, o, z),
        NamedExtension::Antiperiodic => Mat2::new(z, -o, -o, z),
    };
    Unitary2::new_unchecked(mat)
}

/// e^{iθ}·((a, −b̄),(b, ā)) with |a|² + |b|² = 1.
pub fn unitary_from_params<T: Real>(theta: T, a: Complex<T>, b: Complex<T>) -> Result<Unitary2<T>> {
    let norm = a.norm_sqr() + b.norm_sqr();
    if !((norm - T::one()).abs() <= T::tol(1e-10, 64.0)) {
        return Err(Error::Normalization(format!("|a|^2 + |b|^2 = {norm}, expected 1")));
    }
    let phase = c(theta.cos(), theta.sin());
    let mat = Mat2::new(a, -b.conj(), b, a.conj()).scale(phase);
    Ok(Unitary2::new_unchecked(mat))
}

/// λ ∈ ℝ ∪ {∞} of the 3D s-wave condition ψ(0⁺) = λ ψ̃(0⁺).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lambda<T> {
    Finite(T),
    Infinite,
}

impl<T: Real> FromStr for Lambda<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if matches!(t.as_str(), "inf" | "infinity" | "∞") {
            return Ok(Lambda::Infinite);
        }
        let v: f64 = t
            .parse()
            .map_err(|_| Error::Domain(format!("lambda must be a real or 'inf', got {s:?}")))?;
        if v.is_infinite() {
            return Ok(Lambda::Infinite);
        }
        if v.is_nan() {
            return Err(Error::Domain("lambda is NaN".into()));
        }
        Ok(Lambda::Finite(T::lit(v)))
    }
}

impl<T: Serialize> Serialize for Lambda<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Lambda::Finite(v) => v.serialize(s),
            Lambda::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Lambda<f64> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Lambda::Finite(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// An extension tagged by dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "dim", rename_all = "snake_case")]
pub enum ExtensionSpec<T> {
    #[serde(rename = "1")]
    OneD { unitary: Unitary2<T> },
    #[serde(rename = "2")]
    TwoD { theta: T },
    #[serde(rename = "3")]
    ThreeD { lambda: Lambda<T> },
}

impl<T: Real> ExtensionSpec<T> {
    pub fn one_d(u: Unitary2<T>) -> Self {
        ExtensionSpec::OneD { unitary: u }
    }

    /// θ reduced to [0, 2π).
    pub fn two_d(theta: T) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::Domain(format!("theta must be finite, got {theta}")));
        }
        let two_pi = T::PI() * T::lit(2.0);
        let mut t = theta % two_pi;
        if t < T::zero() {
            t = t + two_pi;
        }
        if t >= two_pi {
            t = T::zero();
        }
        Ok(ExtensionSpec::TwoD { theta: t })
    }

    pub fn three_d(lambda: Lambda<T>) -> Self {
        ExtensionSpec::ThreeD { lambda }
    }

    pub fn dim(&self) -> u8 {
        match self {
            ExtensionSpec::OneD { .. } => 1,
            ExtensionSpec::TwoD { .. } => 2,
            ExtensionSpec::ThreeD { .. } => 3,
        }
    }
}

/// Regularized lateral limits (φ(0⁺), φ(0⁻), φ̃(0⁺), φ̃(0⁻)).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryData<T> {
    pub phi_plus: Complex<T>,
    pub phi_minus: Complex<T>,
    pub phitilde_plus: Complex<T>,
    pub phitilde_minus: Complex<T>,
}

impl<T: Real> BoundaryData<T> {
    pub fn new(
        phi_plus: Complex<T>,
        phi_minus: Complex<T>,
        phitilde_plus: Complex<T>,
        phitilde_minus: Complex<T>,
    ) -> Self {
        BoundaryData {
            phi_plus,
            phi_minus,
            phitilde_plus,
            phitilde_minus,
        }
    }

    pub fn zero() -> Self {
        let z = cr(T::zero());
        Self::new(z, z, z, z)
    }

    pub fn is_finite(&self) -> bool {
        self.as_array().iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn as_array(&self) -> [Complex<T>; 4] {
        [self.phi_plus, self.phi_minus, self.phitilde_plus, self.phitilde_minus]
    }

    pub fn norm(&self) -> T {
        self.as_array()
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self::new(
            self.phi_plus * s,
            self.phi_minus * s,
            self.phitilde_plus * s,
            self.phitilde_minus * s,
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.phi_plus + o.phi_plus,
            self.phi_minus + o.phi_minus,
            self.phitilde_plus + o.phitilde_plus,
            self.phitilde_minus + o.phitilde_minus,
        )
    }
}

/// (ψ(0⁺), ψ̃(0⁺)) of a radial s-wave function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialBoundaryData<T> {
    pub psi0: Complex<T>,
    pub psitilde0: Complex<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    /// I − Û invertible: A = −i(I−Û)⁻¹(I+Û).
    AMatrixFromIMinusU,
    /// Only I + Û invertible: A = i(I+Û)⁻¹(I−Û).
    AMatrixFromIPlusU,
    /// Neither is invertible: Û = ((−u, v),(v̄, u)).
    DoublyDegenerate,
}

/// Boundary condition in Cayley form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BCForm<T> {
    pub case_tag: CaseTag,
    pub a_matrix: Option<Mat2<T>>,
    pub uv_params: Option<(T, Complex<T>)>,
}

fn invertible<T: Real>(m: &Mat2<T>) -> bool {
    let (smax, smin) = m.singular_values();
    smax > T::zero() && smin > T::lit(INVERTIBILITY_TOL) * smax
}

fn i_minus<T: Real>(u: &Unitary2<T>) -> Mat2<T> {
    Mat2::identity() - *u.matrix()
}

fn i_plus<T: Real>(u: &Unitary2<T>) -> Mat2<T> {
    Mat2::identity() + *u.matrix()
}

/// A = −i(I−Û)⁻¹(I+Û), when I − Û is invertible.
pub fn cayley_minus<T: Real>(u: &Unitary2<T>) -> Option<Mat2<T>> {
    let m = i_minus(u);
    if !invertible(&m) {
        return None;
    }
    Some((m.inverse()? * i_plus(u)).scale(-ci::<T>()))
}

/// A′ = i(I+Û)⁻¹(I−Û), when I + Û is invertible.
pub fn cayley_plus<T: Real>(u: &Unitary2<T>) -> Option<Mat2<T>> {
    let m = i_plus(u);
    if !invertible(&m) {
        return None;
    }
    Some((m.inverse()? * i_minus(u)).scale(ci::<T>()))
}

/// Û = (iA − I)(iA + I)⁻¹, inverting [`cayley_minus`].
pub fn unitary_from_cayley_minus<T: Real>(a: &Mat2<T>) -> Option<Unitary2<T>> {
    let ia = a.scale(ci());
    let den = (ia + Mat2::identity()).inverse()?;
    Some(Unitary2::new_unchecked((ia - Mat2::identity()) * den))
}

/// Û = (I + iA′)(I − iA′)⁻¹, inverting [`cayley_plus`].
pub fn unitary_from_cayley_plus<T: Real>(a: &Mat2<T>) -> Option<Unitary2<T>> {
    let ia = a.scale(ci());
    let den = (Mat2::identity() - ia).inverse()?;
    Some(Unitary2::new_unchecked((Mat2::identity() + ia) * den))
}

/// Classifies Û by which of I ∓ Û is invertible, preferring I − Û.
pub fn cayley_to_bc<T: Real>(u: &Unitary2<T>) -> BCForm<T> {
    if let Some(a) = cayley_minus(u) {
        return BCForm {
            case_tag: CaseTag::AMatrixFromIMinusU,
            a_matrix: Some(hermitize(a)),
            uv_params: None,
        };
    }
    if let Some(a) = cayley_plus(u) {
        return BCForm {
            case_tag: CaseTag::AMatrixFromIPlusU,
            a_matrix: Some(hermitize(a)),
            uv_params: None,
        };
    }
    // both ±1 are eigenvalues: Û = ((−u, v),(v̄, u)) with u real
    let m = u.matrix();
    let uu = (m.m[1][1].re - m.m[0][0].re) * T::lit(0.5);
    BCForm {
        case_tag: CaseTag::DoublyDegenerate,
        a_matrix: None,
        uv_params: Some((uu, m.m[0][1])),
    }
}

fn hermitize<T: Real>(a: Mat2<T>) -> Mat2<T> {
    (a + a.adjoint()).scale(cr(T::lit(0.5)))
}

/// r = (I−Û)(φ̃(0⁺), φ̃(0⁻))ᵀ + i(I+Û)(−φ(0⁺), φ(0⁻))ᵀ; zero exactly on dom H_Û.
pub fn bc_residual<T: Real>(u: &Unitary2<T>, bd: &BoundaryData<T>) -> Vec2<T> {
    let left = i_minus(u).apply(&[bd.phitilde_plus, bd.phitilde_minus]);
    let right = i_plus(u).scale(ci()).apply(&[-bd.phi_plus, bd.phi_minus]);
    [left[0] + right[0], left[1] + right[1]]
}

/// The 2×4 system behind [`bc_residual`], acting on (φ̃⁺, φ̃⁻, φ⁺, φ⁻).
pub fn bc_system<T: Real>(u: &Unitary2<T>) -> [[Complex<T>; 4]; 2] {
    let a = i_minus(u);
    let b = i_plus(u).scale(ci());
    [
        [a.m[0][0], a.m[0][1], -b.m[0][0], b.m[0][1]],
        [a.m[1][0], a.m[1][1], -b.m[1][0], b.m[1][1]],
    ]
}

/// Element of dom H_Û with ρ₁ = w, ρ₂ = Û w.
pub fn domain_element<T: Real>(u: &Unitary2<T>, w: &Vec2<T>) -> BoundaryData<T> {
    let r2 = u.matrix().apply(w);
    let half = cr(T::lit(0.5));
    let two_i = c(T::zero(), T::lit(2.0));
    BoundaryData::new(
        (w[0] - r2[0]) / two_i,
        (r2[1] - w[1]) / two_i,
        (w[0] + r2[0]) * half,
        (w[1] + r2[1]) * half,
    )
}

/// ψ(0⁺) = λ ψ̃(0⁺) (λ = ∞: ψ̃(0⁺) = 0), relative tolerance 1e−10.
pub fn bc_3d<T: Real>(lambda: Lambda<T>, bd: &RadialBoundaryData<T>) -> bool {
    let scale = bd.psi0.norm().max(bd.psitilde0.norm());
    if scale == T::zero() {
        return true;
    }
    let tol = T::tol(1e-10, 64.0) * scale;
    match lambda {
        Lambda::Infinite => bd.psitilde0.norm() <= tol,
        Lambda::Finite(l) => {
            let t = tol * T::one().max(l.abs());
            (bd.psi0 - bd.psitilde0 * l).norm() <= t
        }
    }
}

/// Which half-line a one-sided limit is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Plus,
    Minus,
}

/// Extracts (φ(0^±), φ̃(0^±)) from samples of φ and φ′ near the origin.
///
/// φ̃(0^±) = lim φ′(x) ± p φ(x) ln(±κx). The 3D s-wave limit uses the plus form.
/// Both limits are extrapolated from |x| = x0·{1, 1/2, 1/4, 1/8} by fitting
/// a + b·r ln²r + c·r ln r + d·r, which removes the leading corrections
/// (the ln² term comes from φ·ln(κr)).
pub fn regularized_limits<T: Real>(
    params: &PhysParams<T>,
    side: Side,
    phi: impl Fn(T) -> Complex<T>,
    dphi: impl Fn(T) -> Complex<T>,
    x0: T,
) -> (Complex<T>, Complex<T>) {
    let p = params.p();
    let sgn = match side {
        Side::Plus => T::one(),
        Side::Minus => -T::one(),
    };
    let xs = [x0, x0 * T::lit(0.5), x0 * T::lit(0.25), x0 * T::lit(0.125)];
    let mut f = [cr(T::zero()); 4];
    let mut g = [cr(T::zero()); 4];
    for (k, &r) in xs.iter().enumerate() {
        let x = sgn * r;
        let v = phi(x);
        f[k] = v;
        g[k] = dphi(x) + v * (sgn * p * (params.kappa * r).ln());
    }
    (extrapolate(&xs, &f), extrapolate(&xs, &g))
}

/// Value at 0 of a + b·r ln²r + c·r ln r + d·r through four samples.
#[allow(clippy::needless_range_loop)]
fn extrapolate<T: Real>(rs: &[T; 4], vals: &[Complex<T>; 4]) -> Complex<T> {
    // columns scaled by the largest sample so the system stays O(1)
    let r0 = rs[0];
    let mut a = [[T::zero(); 5]; 4];
    for (i, &r) in rs.iter().enumerate() {
        let l = r.ln();
        let s = r / r0;
        a[i] = [T::one(), s * l * l, s * l, s, T::zero()];
    }
    let solve = |rhs: [T; 4]| -> T {
        let mut m = a;
        for i in 0..4 {
            m[i][4] = rhs[i];
        }
        for col in 0..4 {
            let piv = (col..4)
                .max_by(|&x, &y| m[x][col].abs().partial_cmp(&m[y][col].abs()).unwrap())
                .unwrap();
            m.swap(col, piv);
            for row in col + 1..4 {
                let f = m[row][col] / m[col][col];
                for k in col..5 {
                    m[row][k] = m[row][k] - f * m[col][k];
                }
            }
        }
        let mut x = [T::zero(); 4];
        for row in (0..4).rev() {
            let mut acc = m[row][4];
            for k in row + 1..4 {
                acc = acc - m[row][k] * x[k];
            }
            x[row] = acc / m[row][row];
        }
        x[0]
    };
    let re = solve([vals[0].re, vals[1].re, vals[2].re, vals[3].re]);
    let im = solve([vals[0].im, vals[1].im, vals[2].im, vals[3].im]);
    c(re, im)
}
