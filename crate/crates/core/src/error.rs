use thiserror::Error;

/// Every failure mode of the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: String },

    #[error("{what} did not converge: {detail}")]
    Convergence { what: &'static str, detail: String },

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("parameters not normalized: {0}")]
    Normalization(String),

    #[error("sign change near tau = {tau} could not be refined: {detail}")]
    Bracket { tau: f64, detail: String },

    #[error("energy coincides with a Dirichlet eigenvalue (tau = {tau})")]
    EigenvalueHit { tau: f64 },

    #[error("coefficients are not a null vector of the eigencondition (relative residual {residual:.3e})")]
    NotAnEigenpair { residual: f64 },

    #[error("grid refinement moved the eigenvalue by {shift:.3e} (relative)")]
    Grid { shift: f64 },

    #[error("convergence trend not monotone: {0}")]
    Inconclusive(String),
}

impl Error {
    /// Short machine-readable tag, stable across versions.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "pole",
            Error::Convergence { .. } => "convergence",
            Error::Domain(_) => "domain",
            Error::Normalization(_) => "normalization",
            Error::Bracket { .. } => "bracket",
            Error::EigenvalueHit { .. } => "eigenvalue_hit",
            Error::NotAnEigenpair { .. } => "not_an_eigenpair",
            Error::Grid { .. } => "grid",
            Error::Inconclusive(_) => "inconclusive",
        }
    }

    /// Errors caused by bad input rather than by numerics.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::Normalization(_) | Error::NotAnEigenpair { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
