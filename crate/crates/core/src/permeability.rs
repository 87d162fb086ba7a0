//! Probability current through the origin and the permeable/impermeable split.
//!
//! j(0) = Im(φ̃(0⁺)·conj φ(0⁺)) = Im(φ̃(0⁻)·conj φ(0⁻)) for every element of the
//! domain of a self-adjoint extension. Writing such an element through
//! ρ₁ = w, ρ₂ = Ûw gives j(0) = (|w₀|² − |(Ûw)₀|²)/4, a Hermitian form in w
//! that vanishes identically iff Û is diagonal.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::{cayley_to_bc, domain_element, BoundaryData, CaseTag, Side, Unitary2};
use crate::linalg::{vnorm, Mat2, Vec2};
use crate::params::PhysParams;
use crate::real::{ci, cr, Real};
use crate::spectral::{eigencondition_matrix, eigencondition_scale, w_boundary_data};

/// Entries of the Cayley matrix below this are treated as zero when picking a formula.
pub const ENTRY_ZERO_TOL: f64 = 1e-10;
/// |j(0)| a unit-norm witness must exceed.
pub const WITNESS_TOL: f64 = 1e-10;
/// Relative residual ‖M c‖ allowed for an eigenpair.
pub const EIGENPAIR_TOL: f64 = 1e-8;

/// Im(φ̃(0⁺)·conj φ(0⁺)).
pub fn current_at_origin<T: Real>(bd: &BoundaryData<T>) -> T {
    (bd.phitilde_plus * bd.phi_plus.conj()).im
}

/// Im(φ̃(0⁻)·conj φ(0⁻)); equals [`current_at_origin`] on every extension domain.
pub fn current_at_origin_minus<T: Real>(bd: &BoundaryData<T>) -> T {
    (bd.phitilde_minus * bd.phi_minus.conj()).im
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Permeability {
    Impermeable,
    Permeable,
}

/// Which Cayley form describes the boundary condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Case {
    /// I − Û invertible.
    Case1,
    /// Only I + Û invertible.
    Case2,
    /// Û = ((−u, v),(v̄, u)).
    Case3,
}

impl From<CaseTag> for Case {
    fn from(t: CaseTag) -> Self {
        match t {
            CaseTag::AMatrixFromIMinusU => Case::Case1,
            CaseTag::AMatrixFromIPlusU => Case::Case2,
            CaseTag::DoublyDegenerate => Case::Case3,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Display for Permeability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PermeabilityVerdict<T> {
    pub verdict: Permeability,
    pub case_tag: Case,
    /// Domain element with the largest |j(0)| among unit-norm w; present iff permeable.
    pub witness: Option<BoundaryData<T>>,
    pub witness_current: Option<T>,
}

/// H with j(0) = w†Hw for the domain element built from w.
pub fn current_form<T: Real>(u: &Unitary2<T>) -> Mat2<T> {
    let m = u.matrix();
    let quarter = cr(T::lit(0.25));
    let mut h = Mat2::zero();
    for i in 0..2 {
        for j in 0..2 {
            let e00 = if i == 0 && j == 0 { cr(T::one()) } else { cr(T::zero()) };
            h.m[i][j] = (e00 - m.m[0][i].conj() * m.m[0][j]) * quarter;
        }
    }
    h
}

/// Impermeable iff j(0) = 0 on the whole domain; otherwise exhibits a witness.
pub fn classify_extension<T: Real>(u: &Unitary2<T>) -> PermeabilityVerdict<T> {
    let case_tag = Case::from(cayley_to_bc(u).case_tag);
    let [(lo, vlo), (hi, vhi)] = current_form(u).hermitian_eigen();
    let (lam, w) = if hi.abs() >= lo.abs() { (hi, vhi) } else { (lo, vlo) };
    if lam.abs() <= T::lit(WITNESS_TOL) {
        return PermeabilityVerdict {
            verdict: Permeability::Impermeable,
            case_tag,
            witness: None,
            witness_current: None,
        };
    }
    let bd = domain_element(u, &w);
    PermeabilityVerdict {
        verdict: Permeability::Permeable,
        case_tag,
        witness: Some(bd),
        witness_current: Some(current_at_origin(&bd)),
    }
}

/// Formula used by [`current_by_case`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CurrentFormula {
    /// Case 1: Im(z·φ(0⁻)·conj φ(0⁺)).
    OffDiagonalCoupling,
    /// Case 2 with z = 0.
    Decoupled,
    /// Case 2 with u = 0: Im(−(1/z)·φ(0⁺)·conj φ(0⁻)).
    UZero,
    /// Case 2 with v = 0: Im((1/z̄)·φ(0⁻)·conj φ(0⁺)).
    VZero,
    /// Case 2 generic: Im(−(z/u)·φ̃(0⁻)·conj φ(0⁺)).
    Generic,
    /// Case 3: the three-term expression in (u, v).
    Degenerate,
}

/// j(0) from the case-specific closed forms in the Cayley entries (u, z, v).
///
/// Case 2 picks the row matching the zero pattern of A′ instead of dividing by
/// a near-zero entry. Only meaningful when `bd` lies in the domain of Û.
pub fn current_by_case<T: Real>(u: &Unitary2<T>, bd: &BoundaryData<T>) -> (T, CurrentFormula) {
    let bc = cayley_to_bc(u);
    let zero = T::lit(ENTRY_ZERO_TOL);
    let (pp, pm, tm) = (bd.phi_plus, bd.phi_minus, bd.phitilde_minus);
    match bc.case_tag {
        CaseTag::AMatrixFromIMinusU => {
            let z = bc.a_matrix.expect("case 1 carries A").m[0][1];
            ((z * pm * pp.conj()).im, CurrentFormula::OffDiagonalCoupling)
        }
        CaseTag::AMatrixFromIPlusU => {
            let a = bc.a_matrix.expect("case 2 carries A");
            let (uu, z, vv) = (a.m[0][0].re, a.m[0][1], a.m[1][1].re);
            let scale = a.frobenius().max(T::one());
            if z.norm() <= zero * scale {
                (T::zero(), CurrentFormula::Decoupled)
            } else if uu.abs() <= zero * scale {
                ((-(pp * pm.conj()) / z).im, CurrentFormula::UZero)
            } else if vv.abs() <= zero * scale {
                ((pm * pp.conj() / z.conj()).im, CurrentFormula::VZero)
            } else {
                ((-(z / cr(uu)) * tm * pp.conj()).im, CurrentFormula::Generic)
            }
        }
        CaseTag::DoublyDegenerate => {
            let (uu, v) = bc.uv_params.expect("case 3 carries (u, v)");
            let one = T::one();
            let k = v / cr(one + uu);
            let t1 = k * tm * pp.conj();
            let t2 = ci::<T>() * k * pm * pp.conj();
            let t3 = ci::<T>() * cr((one - uu) / (one + uu) * pp.norm_sqr());
            ((t1 - t2 + t3).im, CurrentFormula::Degenerate)
        }
    }
}

/// j(0) of c₁Θ(−x)𝓦(σ|x|) + c₂Θ(x)𝓦(σx) at an eigenvalue E of H_Û.
pub fn j0_for_eigenstate<T: Real>(u: &Unitary2<T>, params: &PhysParams<T>, energy: T, c: &Vec2<T>) -> Result<T> {
    let m = eigencondition_matrix(u, params, energy)?;
    let r = m.apply(c);
    let residual = vnorm(&r);
    let bound = T::lit(EIGENPAIR_TOL) * eigencondition_scale::<T>() * vnorm(c);
    if !(residual <= bound) {
        return Err(Error::NotAnEigenpair {
            residual: (residual / (eigencondition_scale::<T>() * vnorm(c))).to_f64_lossy(),
        });
    }
    let plus = w_boundary_data(params, energy, Side::Plus)?;
    let minus = w_boundary_data(params, energy, Side::Minus)?;
    let bd = minus.scale(c[0]).add(&plus.scale(c[1]));
    Ok(current_at_origin(&bd))
}
