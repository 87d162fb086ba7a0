//! Flag parsing into core types.

use coulomb_core::extensions::{named_extension, unitary_from_params, Lambda, NamedExtension, Unitary2};
use coulomb_core::linalg::Mat2;
use coulomb_core::{Error, PhysParams};
use num_complex::Complex;
use serde_json::Value;

use crate::{CliError, ExtensionArgs, Global};

pub fn params(g: &Global) -> Result<PhysParams<f64>, CliError> {
    Ok(PhysParams::new(g.hbar, g.mass, g.kappa)?)
}

/// The one-dimensional extension, or `None` when no flag names one.
pub fn unitary(ext: &ExtensionArgs) -> Result<Option<Unitary2<f64>>, CliError> {
    let given = [ext.named.is_some(), ext.unitary.is_some(), ext.uparams.is_some()];
    if given.iter().filter(|&&b| b).count() > 1 {
        return Err(CliError::Usage(
            "give at most one of --named, --unitary, --uparams".into(),
        ));
    }
    if let Some(name) = &ext.named {
        let n: NamedExtension = name.parse()?;
        return Ok(Some(named_extension(n)));
    }
    if let Some(text) = &ext.unitary {
        return Ok(Some(parse_unitary(text)?));
    }
    if let Some(text) = &ext.uparams {
        return Ok(Some(parse_uparams(text)?));
    }
    Ok(None)
}

pub fn unitary_or_dirichlet(ext: &ExtensionArgs) -> Result<Unitary2<f64>, CliError> {
    Ok(unitary(ext)?.unwrap_or_else(|| named_extension(NamedExtension::Dirichlet)))
}

pub fn lambda(ext: &ExtensionArgs) -> Result<Option<Lambda<f64>>, CliError> {
    ext.lambda
        .as_deref()
        .map(|s| s.parse::<Lambda<f64>>().map_err(CliError::from))
        .transpose()
}

fn parse_uparams(text: &str) -> Result<Unitary2<f64>, CliError> {
    let v: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("--uparams: {e}")))?;
    let [theta, ar, ai, br, bi] = v[..] else {
        return Err(CliError::Usage(format!("--uparams needs 5 numbers, got {}", v.len())));
    };
    Ok(unitary_from_params(theta, Complex::new(ar, ai), Complex::new(br, bi))?)
}

fn entry(v: &Value) -> Option<Complex<f64>> {
    match v {
        Value::Number(n) => Some(Complex::new(n.as_f64()?, 0.0)),
        Value::Array(a) if a.len() == 2 => Some(Complex::new(a[0].as_f64()?, a[1].as_f64()?)),
        _ => None,
    }
}

fn parse_unitary(text: &str) -> Result<Unitary2<f64>, CliError> {
    let bad = || CliError::Usage("--unitary must be [[u11, u12], [u21, u22]] with entries x or [re, im]".into());
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("--unitary: {e}")))?;
    let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
    let mut m = [[Complex::new(0.0, 0.0); 2]; 2];
    for (i, row) in rows.iter().enumerate() {
        let cols = row.as_array().filter(|c| c.len() == 2).ok_or_else(bad)?;
        for (j, x) in cols.iter().enumerate() {
            m[i][j] = entry(x).ok_or_else(bad)?;
        }
    }
    Ok(Unitary2::new(Mat2 { m })?)
}

pub fn require(name: &str, v: Option<f64>) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required here")))
}

pub fn domain(msg: impl Into<String>) -> CliError {
    CliError::Core(Error::Domain(msg.into()))
}
