use coulomb_core::extensions::{cayley_to_bc, ExtensionSpec, Lambda, Side, Unitary2};
use coulomb_core::laplace::{
    airy_asymptotic, airy_spectrum_1d, asymptotic_relative_error, selfadjointness_report, Counting, Parity, Potential,
    Region,
};
use coulomb_core::linalg::Mat2;
use coulomb_core::oracle::{
    default_box_radius, deficiency_indices, line_eigenvalues, shoot_eigenvalues_halfline, OriginCondition, DEFAULT_EPS,
};
use coulomb_core::permeability::{classify_extension, current_by_case, current_form};
use coulomb_core::specfun::{
    airy_ai, airy_ai_prime, airy_zero, digamma, gamma_fn, kummer_m, whittaker_m, whittaker_w, AiryKind, SpecFunResult,
};
use coulomb_core::spectral::{
    dirichlet_spectrum_3d, eigencondition_matrix, energy_of_tau, greens_dirichlet, omega, solve_spectrum_1d_with,
    tau_of_energy, w_boundary_data, EigenRecord, SpectrumOptions,
};
use coulomb_core::PhysParams;
use num_complex::Complex;
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{self, domain, require};
use crate::output::{Table, SCHEMA};
use crate::{Cli, CliError, Command, Function, PotentialArg, RegionArg};

/// A command result in both output shapes.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub json: Value,
    pub table: Table,
    /// (failed, total) for commands that report checks.
    pub failed_checks: Option<(usize, usize)>,
}

fn to_value<S: Serialize>(s: &S) -> Value {
    serde_json::to_value(s).expect("core types serialize to JSON")
}

fn envelope(command: &str, params: &PhysParams<f64>, body: Value) -> Value {
    let mut v = json!({
        "schema": SCHEMA,
        "command": command,
        "params": { "hbar": params.hbar, "mass": params.mass, "kappa": params.kappa },
    });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    v
}

fn done(json: Value, table: Table) -> Result<Rendered, CliError> {
    Ok(Rendered {
        json,
        table,
        failed_checks: None,
    })
}

pub fn dispatch(cli: &Cli) -> Result<Rendered, CliError> {
    let params = input::params(&cli.global)?;
    match &cli.command {
        Command::Spectrum { tau_max, n_max } => spectrum(cli, &params, *tau_max, *n_max),
        Command::Classify => classify(cli, &params),
        Command::Permeability => permeability(cli, &params),
        Command::Greens { energy, x, y } => greens(cli, &params, *energy, x, y),
        Command::Eval {
            function,
            energy,
            tau,
            mu,
            z,
            a,
            b,
            x,
            n,
        } => eval(
            cli,
            &params,
            *function,
            EvalArgs {
                energy: *energy,
                tau: *tau,
                mu: *mu,
                z: *z,
                a: *a,
                b: *b,
                x: *x,
                n: *n,
            },
        ),
        Command::Verify => verify(cli, &params),
        Command::LaplaceSpectrum { n_max } => laplace_spectrum(&params, *n_max),
        Command::Report {
            potential,
            region,
            computed,
        } => report(&params, *potential, *region, *computed),
    }
}

fn level_rows(records: &[EigenRecord<f64>]) -> (Vec<Value>, Table) {
    let mut table = Table::new(&["n", "energy", "multiplicity", "tau"]);
    let mut levels = Vec::new();
    for (i, r) in records.iter().enumerate() {
        let n = i + 1;
        table.push(vec![json!(n), json!(r.energy), json!(r.multiplicity), json!(r.tau)]);
        levels.push(json!({
            "n": n,
            "energy": r.energy,
            "tau": r.tau,
            "scale": r.scale,
            "multiplicity": r.multiplicity,
            "basis": to_value(&r.basis),
        }));
    }
    (levels, table)
}

fn spectrum(
    cli: &Cli,
    params: &PhysParams<f64>,
    tau_max: Option<f64>,
    n_max: Option<u32>,
) -> Result<Rendered, CliError> {
    let ext = &cli.ext;
    let (records, extension) = match ext.dim {
        1 => {
            let u = input::unitary_or_dirichlet(ext)?;
            let mut opts = SpectrumOptions::default();
            if let Some(t) = cli.global.tol {
                opts.tau_tol = t;
            }
            // every unit interval of tau holds at least one level
            let limit = tau_max.unwrap_or_else(|| n_max.map_or(6.5, |n| n as f64 + 1.0));
            let mut recs = solve_spectrum_1d_with(&u, params, limit, &opts)?;
            if let Some(n) = n_max {
                recs.truncate(n as usize);
            }
            (recs, ExtensionSpec::one_d(u))
        }
        3 => {
            if input::unitary(ext)?.is_some_and(|u| u.matrix().max_abs_diff(&Mat2::identity()) > 1e-12) {
                return Err(domain(
                    "in three dimensions only the Dirichlet s-wave condition (lambda = 0) has a closed-form spectrum",
                ));
            }
            match input::lambda(ext)? {
                None | Some(Lambda::Finite(0.0)) => {}
                Some(_) => return Err(domain("in three dimensions only lambda = 0 has a closed-form spectrum")),
            }
            let n = n_max.unwrap_or_else(|| tau_max.map_or(4, |t| t.floor().max(1.0) as u32));
            (
                dirichlet_spectrum_3d(params, n)?,
                ExtensionSpec::three_d(Lambda::Finite(0.0)),
            )
        }
        2 => return Err(domain("no closed-form spectrum is available in two dimensions")),
        d => return Err(domain(format!("dimension must be 1, 2 or 3, got {d}"))),
    };
    let (levels, table) = level_rows(&records);
    let json = envelope(
        "spectrum",
        params,
        json!({ "dim": ext.dim, "extension": to_value(&extension), "levels": levels }),
    );
    done(json, table)
}

fn classify(cli: &Cli, params: &PhysParams<f64>) -> Result<Rendered, CliError> {
    let ext = &cli.ext;
    let body = match ext.dim {
        1 => {
            let u = input::unitary_or_dirichlet(ext)?;
            json!({ "extension": to_value(&ExtensionSpec::one_d(u)), "bc": to_value(&cayley_to_bc(&u)) })
        }
        2 => {
            let theta = require("theta", ext.theta)?;
            json!({ "extension": to_value(&ExtensionSpec::two_d(theta)?) })
        }
        3 => {
            let lambda =
                input::lambda(ext)?.ok_or_else(|| CliError::Usage("--lambda is required with --dim 3".into()))?;
            json!({ "extension": to_value(&ExtensionSpec::three_d(lambda)) })
        }
        d => return Err(domain(format!("dimension must be 1, 2 or 3, got {d}"))),
    };
    let json = envelope("classify", params, body);
    let table = Table::flatten(&json);
    done(json, table)
}

fn one_d_only(cli: &Cli, what: &str) -> Result<(), CliError> {
    if cli.ext.dim != 1 {
        return Err(domain(format!("{what} is defined for the line only (--dim 1)")));
    }
    Ok(())
}

fn permeability(cli: &Cli, params: &PhysParams<f64>) -> Result<Rendered, CliError> {
    one_d_only(cli, "permeability")?;
    let u = input::unitary_or_dirichlet(&cli.ext)?;
    let v = classify_extension(&u);
    let formula = v.witness.map(|w| current_by_case(&u, &w));
    let body = json!({
        "extension": to_value(&ExtensionSpec::one_d(u)),
        "verdict": to_value(&v.verdict),
        "case": to_value(&v.case_tag),
        "witness": to_value(&v.witness),
        "witness_current": v.witness_current,
        "case_formula": formula.map(|(j, f)| json!({ "formula": to_value(&f), "current": j })),
        "current_form": to_value(&current_form(&u)),
    });
    let json = envelope("permeability", params, body);
    let table = Table::flatten(&json);
    done(json, table)
}

fn greens(cli: &Cli, params: &PhysParams<f64>, energy: f64, xs: &[f64], ys: &[f64]) -> Result<Rendered, CliError> {
    one_d_only(cli, "greens")?;
    if input::unitary(&cli.ext)?.is_some_and(|u| u.matrix().max_abs_diff(&Mat2::identity()) > 1e-12) {
        return Err(domain(
            "the resolvent kernel is implemented for the Dirichlet extension only",
        ));
    }
    let mut table = Table::new(&["x", "y", "g"]);
    let mut values = Vec::new();
    for &x in xs {
        for &y in ys {
            let g = greens_dirichlet(params, energy, x, y)?;
            table.push(vec![json!(x), json!(y), json!(g)]);
            values.push(json!({ "x": x, "y": y, "g": g }));
        }
    }
    let json = envelope("greens", params, json!({ "energy": energy, "values": values }));
    done(json, table)
}

pub struct EvalArgs {
    energy: Option<f64>,
    tau: Option<f64>,
    mu: Option<f64>,
    z: Option<f64>,
    a: Option<f64>,
    b: Option<f64>,
    x: Option<f64>,
    n: Option<usize>,
}

fn specfun_value(r: SpecFunResult<f64>) -> Value {
    json!({ "value": to_value(&r.value), "abs_err": r.abs_err })
}

fn eval(cli: &Cli, params: &PhysParams<f64>, f: Function, a: EvalArgs) -> Result<Rendered, CliError> {
    let real = |c: Complex<f64>| json!({ "value": to_value(&c) });
    let zero_index = || a.n.ok_or_else(|| CliError::Usage("--n is required here".into()));
    let (args, result) = match f {
        Function::Omega => {
            let e = require("energy", a.energy)?;
            (json!({ "energy": e }), to_value(&omega(params, e)?))
        }
        Function::Tau => {
            let e = require("energy", a.energy)?;
            (json!({ "energy": e }), to_value(&tau_of_energy(params, e)?))
        }
        Function::Gamma => {
            let x = require("x", a.x)?;
            (json!({ "x": x }), specfun_value(gamma_fn(x)?))
        }
        Function::Digamma => {
            let x = require("x", a.x)?;
            (json!({ "x": x }), specfun_value(digamma(x)?))
        }
        Function::WhittakerM | Function::WhittakerW => {
            let (t, m, z) = (require("tau", a.tau)?, require("mu", a.mu)?, require("z", a.z)?);
            let r = if f == Function::WhittakerM {
                whittaker_m(t, m, z)?
            } else {
                whittaker_w(t, m, z)?
            };
            (json!({ "tau": t, "mu": m, "z": z }), specfun_value(r))
        }
        Function::KummerM => {
            let (ka, kb, z) = (require("a", a.a)?, require("b", a.b)?, require("z", a.z)?);
            let c = |v: f64| Complex::new(v, 0.0);
            (
                json!({ "a": ka, "b": kb, "z": z }),
                specfun_value(kummer_m(c(ka), c(kb), c(z))?),
            )
        }
        Function::AiryAi | Function::AiryAiPrime => {
            let x = require("x", a.x)?;
            let r = if f == Function::AiryAi {
                airy_ai(x)?
            } else {
                airy_ai_prime(x)?
            };
            (json!({ "x": x }), specfun_value(r))
        }
        Function::AiryZero | Function::AiryPrimeZero => {
            let n = zero_index()?;
            let kind = if f == Function::AiryZero {
                AiryKind::Ai
            } else {
                AiryKind::AiPrime
            };
            (json!({ "n": n }), real(Complex::new(airy_zero::<f64>(n, kind)?, 0.0)))
        }
        Function::BoundaryData => {
            let e = require("energy", a.energy)?;
            let plus = w_boundary_data(params, e, Side::Plus)?;
            let minus = w_boundary_data(params, e, Side::Minus)?;
            (
                json!({ "energy": e }),
                json!({ "plus": to_value(&plus), "minus": to_value(&minus) }),
            )
        }
        Function::Eigencondition => {
            one_d_only(cli, "the eigencondition")?;
            let e = require("energy", a.energy)?;
            let u = input::unitary_or_dirichlet(&cli.ext)?;
            let m = eigencondition_matrix(&u, params, e)?;
            let (smax, smin) = m.singular_values();
            (
                json!({ "energy": e }),
                json!({ "matrix": to_value(&m), "singular_values": [smax, smin] }),
            )
        }
    };
    let name = to_value(&FunctionName(f));
    let json = envelope(
        "eval",
        params,
        json!({ "function": name, "args": args, "result": result }),
    );
    let table = Table::flatten(&json);
    done(json, table)
}

struct FunctionName(Function);

impl Serialize for FunctionName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use clap::ValueEnum;
        let pv = self.0.to_possible_value().expect("no skipped variants");
        s.serialize_str(pv.get_name())
    }
}

struct Check {
    name: &'static str,
    error: f64,
    tolerance: f64,
}

impl Check {
    /// NaN errors fail.
    fn passed(&self) -> bool {
        self.error <= self.tolerance
    }
}

fn max_rel(pairs: impl IntoIterator<Item = (f64, f64)>) -> f64 {
    pairs.into_iter().map(|(a, b)| ((a - b) / b).abs()).fold(0.0, f64::max)
}

/// Closed forms against the shooting oracles; counts that disagree count as infinite error.
fn verify(cli: &Cli, params: &PhysParams<f64>) -> Result<Rendered, CliError> {
    use coulomb_core::extensions::{named_extension, unitary_from_params, NamedExtension};
    let tol = |default: f64| cli.global.tol.unwrap_or(default);
    let mut checks = Vec::new();

    let dirichlet = named_extension::<f64>(NamedExtension::Dirichlet);
    let recs = solve_spectrum_1d_with(&dirichlet, params, 6.5, &SpectrumOptions::default())?;
    let mut err = if recs.len() == 6 && recs.iter().all(|r| r.multiplicity == 2) {
        0.0
    } else {
        f64::INFINITY
    };
    for (i, r) in recs.iter().enumerate() {
        err = err.max(max_rel([(r.energy, energy_of_tau(params, (i + 1) as f64)?.energy)]));
    }
    checks.push(Check {
        name: "dirichlet_line_closed_form",
        error: err,
        tolerance: tol(1e-10),
    });

    let box_r = default_box_radius(params, 4.5);
    let e_lo = energy_of_tau(params, 0.9)?.energy;
    let mut err: f64 = 0.0;
    for l in 0..3u32 {
        let top = energy_of_tau(params, 4.5)?.energy;
        let shot = shoot_eigenvalues_halfline(
            params,
            l,
            3,
            OriginCondition::Regular,
            DEFAULT_EPS * params.length_unit(),
            box_r,
            (e_lo, top),
        )?;
        let exact: Vec<f64> = ((l + 1)..=4)
            .map(|n| energy_of_tau(params, n as f64).map(|t| t.energy))
            .collect::<Result<_, _>>()?;
        err = if shot.len() == exact.len() {
            err.max(max_rel(shot.into_iter().zip(exact)))
        } else {
            f64::INFINITY
        };
    }
    checks.push(Check {
        name: "dirichlet_space_shooting_l012",
        error: err,
        tolerance: tol(1e-5),
    });

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let c = |re: f64, im: f64| Complex::new(re, im);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let examples: [(&'static str, Unitary2<f64>); 3] = [
        (
            "example_i_identity_line_oracle",
            unitary_from_params(half_pi, c(1.0, 0.0), c(0.0, 0.0))?,
        ),
        (
            "example_diag_minus_one_one_line_oracle",
            unitary_from_params(half_pi, c(0.0, 1.0), c(0.0, 0.0))?,
        ),
        (
            "example_i_rotation_line_oracle",
            Unitary2::new(Mat2::new(c(0.0, h), c(0.0, -h), c(0.0, h), c(0.0, h)))?,
        ),
    ];
    let line_box = default_box_radius(params, 3.0);
    for (name, u) in examples {
        let exact = solve_spectrum_1d_with(&u, params, 2.95, &SpectrumOptions::default())?;
        let lv = line_eigenvalues(&u, params, (0.3, 2.95), DEFAULT_EPS * params.length_unit(), line_box)?;
        let same_shape =
            lv.len() == exact.len() && lv.iter().zip(&exact).all(|(a, b)| a.multiplicity == b.multiplicity);
        let err = if same_shape {
            max_rel(lv.iter().zip(&exact).map(|(a, b)| (a.energy, b.energy)))
        } else {
            f64::INFINITY
        };
        checks.push(Check {
            name,
            error: err,
            tolerance: tol(1e-5),
        });
    }

    use coulomb_core::oracle::Setting;
    let mut err: f64 = 0.0;
    for (setting, n) in [
        (Setting::Line, 2u32),
        (Setting::PlaneOriginRemoved, 1),
        (Setting::SpaceOriginRemoved, 1),
    ] {
        let rep = deficiency_indices(params, setting)?;
        if rep.indices != (n, n) {
            err = f64::INFINITY;
        }
    }
    checks.push(Check {
        name: "deficiency_indices_2_1_1",
        error: err,
        tolerance: 0.0,
    });

    let err = asymptotic_relative_error(params, 20, Counting::EvenClass)?;
    checks.push(Check {
        name: "airy_asymptotic_even_class_n20",
        error: err,
        tolerance: tol(1e-2),
    });

    let failed = checks.iter().filter(|c| !c.passed()).count();
    let mut table = Table::new(&["check", "passed", "error", "tolerance"]);
    let mut rows = Vec::new();
    for c in &checks {
        let passed = c.passed();
        let err = if c.error.is_finite() {
            json!(c.error)
        } else {
            json!("inf")
        };
        table.push(vec![json!(c.name), json!(passed), err.clone(), json!(c.tolerance)]);
        rows.push(json!({ "check": c.name, "passed": passed, "error": err, "tolerance": c.tolerance }));
    }
    let json = envelope("verify", params, json!({ "passed": failed == 0, "checks": rows }));
    Ok(Rendered {
        json,
        table,
        failed_checks: (failed > 0).then_some((failed, checks.len())),
    })
}

fn laplace_spectrum(params: &PhysParams<f64>, n_max: usize) -> Result<Rendered, CliError> {
    if n_max == 0 {
        return Err(domain("--n-max must be at least 1"));
    }
    let levels = airy_spectrum_1d(params, n_max)?;
    let mut table = Table::new(&["index", "parity", "energy", "asymptotic"]);
    let mut rows = Vec::new();
    for lv in &levels {
        // the asymptotic law tracks the even class, indexed by k
        let asym = match lv.parity {
            Parity::Even => Some(airy_asymptotic(params, lv.index.div_ceil(2))),
            Parity::Odd => None,
        };
        table.push(vec![
            json!(lv.index),
            to_value(&lv.parity),
            json!(lv.energy),
            json!(asym),
        ]);
        rows.push(json!({ "index": lv.index, "parity": to_value(&lv.parity), "energy": lv.energy, "multiplicity": 1, "asymptotic": asym }));
    }
    let sample = [10usize, 20, 40, 80];
    let mut conventions = serde_json::Map::new();
    let mut matching = Vec::new();
    for counting in Counting::ALL {
        let errs: Vec<f64> = sample
            .iter()
            .map(|&n| asymptotic_relative_error(params, n, counting))
            .collect::<Result<_, _>>()?;
        let within = errs[1..].iter().all(|&e| e < 1e-2);
        if within {
            matching.push(to_value(&counting));
        }
        let key = to_value(&counting).as_str().unwrap_or_default().to_string();
        conventions.insert(
            key,
            json!({ "n": sample, "relative_error": errs, "below_one_percent_from_20": within }),
        );
    }
    let body = json!({ "levels": rows, "asymptotic": { "conventions": conventions, "matching": matching } });
    done(envelope("laplace-spectrum", params, body), table)
}

fn report(
    params: &PhysParams<f64>,
    potential: Option<PotentialArg>,
    region: Option<RegionArg>,
    computed: bool,
) -> Result<Rendered, CliError> {
    let pot = potential.map(|p| match p {
        PotentialArg::Linear => Potential::Linear,
        PotentialArg::Logarithmic => Potential::Logarithmic,
        PotentialArg::Coulomb => Potential::Coulomb,
    });
    let reg = region.map(|r| match r {
        RegionArg::Line => Region::Line,
        RegionArg::LineOriginRemoved => Region::LineOriginRemoved,
        RegionArg::Plane => Region::Plane,
        RegionArg::PlaneOriginRemoved => Region::PlaneOriginRemoved,
        RegionArg::Space => Region::Space,
        RegionArg::SpaceOriginRemoved => Region::SpaceOriginRemoved,
    });
    let full = selfadjointness_report();
    let entries: Vec<_> = full
        .entries
        .iter()
        .filter(|e| pot.is_none_or(|p| e.potential == p) && reg.is_none_or(|r| e.region == r))
        .collect();
    if entries.is_empty() {
        return Err(domain("no table entry for that potential and region"));
    }
    let mut table = Table::new(&[
        "potential",
        "region",
        "dim",
        "deficiency_index",
        "essentially_self_adjoint",
        "spectrum",
        "computed_index",
    ]);
    let mut rows = Vec::new();
    for e in entries {
        let numeric = match (computed, e.potential, e.region.oracle_setting()) {
            (true, Potential::Coulomb, Some(s)) => {
                let rep = deficiency_indices(params, s)?;
                rep.computed.then_some(rep.indices.0)
            }
            _ => None,
        };
        let mut row = to_value(e);
        row["computed_index"] = json!(numeric);
        table.push(vec![
            to_value(&e.potential),
            to_value(&e.region),
            json!(e.dim),
            json!(e.deficiency_index),
            json!(e.essentially_self_adjoint),
            to_value(&e.spectrum),
            json!(numeric),
        ]);
        rows.push(row);
    }
    done(envelope("report", params, json!({ "entries": rows })), table)
}
