//! One function per subcommand, each producing a [`RunReport`].

use serde::Serialize;
use serde_json::{json, Value};
use tritospec_core::applications::{
    accuracy_report, naive_eigenvalues, project, refine_spectral_factorization, RefineWarning,
};
use tritospec_core::conditioning::{condition_table, eig_condition, global_min_gap, min_gap};
use tritospec_core::lab::{sample_perturbation, verify_sin_theta_all, SampleSpace};
use tritospec_core::linalg::{eigen_decompose, qr_eigenvalues};
use tritospec_core::matrix::normalized;
use tritospec_core::structured::{
    structured_eig_condition, structured_pseudospectrum, worst_case_projection, PseudospectrumBoundary,
    PseudospectrumMode, Subspace,
};
use tritospec_core::toeplitz::Family;
use tritospec_core::{C64, TriToeplitz};

use crate::cli::{Command, MatrixArgs, ModeArg, SampleArg, SubspaceArg};
use crate::figures::{figure1, figure2, figure3, figure4, FigureData};
use crate::report::RunReport;
use crate::spec::{cx_vec, Cx, MatrixSpec};
use crate::CliError;

pub enum Output {
    Report(RunReport),
    Csv(String),
}

pub fn run(command: &Command, seed: u64) -> Result<Output, CliError> {
    let report = match command {
        Command::Spectrum { matrix, dense, vectors } => spectrum(matrix, *dense, *vectors, seed)?,
        Command::Cond { matrix, subspace } => cond(matrix, *subspace, seed)?,
        Command::Gaps { matrix } => gaps(matrix, seed)?,
        Command::Structured { matrix } => structured(matrix, seed)?,
        Command::Pseudospectrum { matrix, eps, mode, points } => pseudospectrum(matrix, *eps, *mode, *points, seed)?,
        Command::Project { matrix } => projection(matrix, seed)?,
        Command::Refine { matrix, exact } => refine(matrix, *exact, seed)?,
        Command::Lab { matrix, seeds, eps, subspace } => lab(matrix, *seeds, *eps, *subspace, seed)?,
        Command::Figure { id, csv, theta1, theta2, delta, sigma, .. } => {
            let data = figure(*id, *theta1, *theta2, delta.as_deref(), *sigma)?;
            if *csv {
                return Ok(Output::Csv(data.to_csv()?));
            }
            let input = json!({ "figure": id, "theta1": theta1, "theta2": theta2, "delta": delta, "sigma": sigma });
            RunReport::new("figure", input, data, seed)?
        }
    };
    Ok(Output::Report(report))
}

fn input(spec: &MatrixSpec, options: Value) -> Value {
    json!({ "matrix": spec, "options": options })
}

fn toeplitz_only(spec: &MatrixSpec, command: &str) -> Result<TriToeplitz, CliError> {
    match spec.require_closed_form(command)? {
        (t, Family::Toeplitz) => Ok(t),
        _ => Err(CliError::usage("--case", format!("{command} applies to plain tridiagonal Toeplitz matrices"))),
    }
}

#[derive(Serialize)]
struct SpectrumResult {
    method: &'static str,
    eigenvalues: Vec<Cx>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dense_eigenvalues: Option<Vec<Cx>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dense_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vectors: Option<Vec<Vec<Cx>>>,
}

pub fn spectrum(m: &MatrixArgs, dense: bool, vectors: bool, seed: u64) -> Result<RunReport, CliError> {
    let spec = m.resolve()?;
    let options = json!({ "dense": dense, "vectors": vectors });
    let mut warnings = Vec::new();
    let result = match spec.closed_form()? {
        Some((t, f)) => {
            let values = t.family_eigenvalues(f)?;
            let (dense_eigenvalues, dense_deviation) = if dense {
                let d = qr_eigenvalues(&t.family_matrix(f)?.to_dense())?;
                let dev = accuracy_report(&d, &values)?;
                (Some(cx_vec(&d)), Some(dev))
            } else {
                (None, None)
            };
            let vectors = if vectors {
                Some(
                    (1..=t.order())
                        .map(|h| Ok(cx_vec(&normalized(&t.family_right_eigenvector(f, h)?))))
                        .collect::<Result<_, CliError>>()?,
                )
            } else {
                None
            };
            SpectrumResult { method: "closed-form", eigenvalues: cx_vec(&values), dense_eigenvalues, dense_deviation, vectors }
        }
        None => {
            warnings.push("no closed form for a general tridiagonal matrix; dense QR used".to_string());
            let a = spec.tridiagonal()?.to_dense();
            let (values, vectors) = if vectors {
                let d = eigen_decompose(&a)?;
                let v = (0..d.order()).map(|h| cx_vec(&d.vector(h))).collect();
                (d.values, Some(v))
            } else {
                (qr_eigenvalues(&a)?, None)
            };
            SpectrumResult { method: "dense", eigenvalues: cx_vec(&values), dense_eigenvalues: None, dense_deviation: None, vectors }
        }
    };
    Ok(RunReport::new("spectrum", input(&spec, options), result, seed)?.with_warnings(warnings))
}

fn subspace(s: SubspaceArg) -> Option<Subspace> {
    match s {
        SubspaceArg::None => None,
        SubspaceArg::T => Some(Subspace::Toeplitz),
        SubspaceArg::St => Some(Subspace::Symmetric),
        SubspaceArg::At => Some(Subspace::Skew),
    }
}

#[derive(Serialize)]
struct ConditionRow {
    h: usize,
    lambda: Cx,
    min_gap: f64,
    kappa_eig: f64,
    kappa_vec: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa_structured: Option<f64>,
}

pub fn cond(m: &MatrixArgs, s: SubspaceArg, seed: u64) -> Result<RunReport, CliError> {
    let spec = m.resolve()?;
    let (t, f) = spec.require_closed_form("cond")?;
    let rows: Vec<ConditionRow> = condition_table(&t, f, subspace(s))?
        .into_iter()
        .map(|r| ConditionRow {
            h: r.h,
            lambda: r.lambda.into(),
            min_gap: r.min_gap,
            kappa_eig: r.kappa_eig,
            kappa_vec: r.kappa_vec,
            kappa_structured: r.kappa_structured,
        })
        .collect();
    let options = json!({ "subspace": subspace(s).map_or("none", |x| x.tag()) });
    RunReport::new("cond", input(&spec, options), json!({ "rows": rows }), seed)
}

pub fn gaps(m: &MatrixArgs, seed: u64) -> Result<RunReport, CliError> {
    let spec = m.resolve()?;
    let (t, f) = spec.require_closed_form("gaps")?;
    let rows = (1..=t.order())
        .map(|h| Ok(json!({ "h": h, "lambda": Cx::from(t.family_eigenvalue(f, h)?), "min_gap": min_gap(&t, f, h)? })))
        .collect::<Result<Vec<Value>, CliError>>()?;
    let results = json!({ "rows": rows, "global_min_gap": global_min_gap(&t, f)? });
    RunReport::new("gaps", input(&spec, json!({})), results, seed)
}

#[derive(Serialize)]
struct StructuredRow {
    h: usize,
    lambda: Cx,
    kappa: f64,
    kappa_t: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa_st: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa_at: Option<f64>,
    /// Unit worst-case perturbation in the Toeplitz subspace, as `[σ, δ, τ]`.
    worst_case_t: [Cx; 3],
}

pub fn structured(m: &MatrixArgs, seed: u64) -> Result<RunReport, CliError> {
    let spec = m.resolve()?;
    let t = toeplitz_only(&spec, "structured")?;
    let optional = |s: Subspace, h: usize| -> Result<Option<f64>, CliError> {
        Ok(if s.contains(&t) { Some(structured_eig_condition(&t, h, s)?) } else { None })
    };
    let rows = (1..=t.order())
        .map(|h| {
            let w = worst_case_projection(&t, h, Subspace::Toeplitz)?;
            Ok(StructuredRow {
                h,
                lambda: t.family_eigenvalue(Family::Toeplitz, h)?.into(),
                kappa: eig_condition(&t, Family::Toeplitz, h)?,
                kappa_t: structured_eig_condition(&t, h, Subspace::Toeplitz)?,
                kappa_st: optional(Subspace::Symmetric, h)?,
                kappa_at: optional(Subspace::Skew, h)?,
                worst_case_t: [w.sigma_h.into(), w.delta_h.into(), w.tau_h.into()],
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    RunReport::new("structured", input(&spec, json!({})), json!({ "rows": rows }), seed)
}

pub fn pseudospectrum(m: &MatrixArgs, eps: f64, mode: ModeArg, points: usize, seed: u64) -> Result<RunReport, CliError> {
    if !(eps.is_finite() && eps >= 0.0) {
        return Err(CliError::usage("--eps", "must be a finite nonnegative number"));
    }
    let spec = m.resolve()?;
    let t = toeplitz_only(&spec, "pseudospectrum")?;
    let mode = match mode {
        ModeArg::Sym => PseudospectrumMode::Symmetric,
        ModeArg::Skew => PseudospectrumMode::Skew,
        ModeArg::Ellipse => PseudospectrumMode::Ellipse { points },
        ModeArg::Auto if Subspace::Symmetric.contains(&t) => PseudospectrumMode::Symmetric,
        ModeArg::Auto if Subspace::Skew.contains(&t) => PseudospectrumMode::Skew,
        ModeArg::Auto => PseudospectrumMode::Ellipse { points },
    };
    let mut warnings = Vec::new();
    let (name, results) = match structured_pseudospectrum(&t, eps, mode)? {
        PseudospectrumBoundary::Intervals(v) => ("intervals", json!(v)),
        PseudospectrumBoundary::Segments(v) => {
            ("segments", json!(v.iter().map(|[a, b]| [Cx::from(*a), Cx::from(*b)]).collect::<Vec<_>>()))
        }
        PseudospectrumBoundary::Ellipse(v) => {
            warnings.push("the symbol curve is a reference only; no containment is claimed".to_string());
            ("ellipse", json!(cx_vec(&v)))
        }
    };
    let options = json!({ "eps": eps, "mode": name, "points": points });
    Ok(RunReport::new("pseudospectrum", input(&spec, options), json!({ "mode": name, "boundary": results }), seed)?
        .with_warnings(warnings))
}

fn toeplitz_json(t: &TriToeplitz) -> Value {
    json!({ "n": t.order(), "sigma": Cx::from(t.sigma()), "delta": Cx::from(t.delta()), "tau": Cx::from(t.tau()) })
}

pub fn projection(m: &MatrixArgs, seed: u64) -> Result<RunReport, CliError> {
    let spec = m.resolve()?;
    let p = project(&spec.tridiagonal()?)?;
    let results = json!({
        "nearest": toeplitz_json(&p.t),
        "distance": p.distance,
        "hw_lhs": p.hw_lhs,
        "hw_rhs": p.hw_rhs,
        "traceless": p.traceless,
        "kappa2": p.kappa2,
        "pd_check": p.pd_check,
    });
    RunReport::new("project", input(&spec, json!({})), results, seed)
}

fn describe(w: &RefineWarning) -> String {
    match w {
        RefineWarning::IllConditionedScaling { log10_condition } => format!(
            "IllConditionedScaling: the eigenvector scaling has log10 condition {log10_condition:.1}; eigenvector accuracy degrades"
        ),
    }
}

pub fn refine(m: &MatrixArgs, exact: bool, seed: u64) -> Result<RunReport, CliError> {
    let spec = m.resolve()?;
    let a = spec.tridiagonal()?;
    let r = refine_spectral_factorization(&a)?;
    let mut results = json!({
        "nearest": toeplitz_json(&r.nearest),
        "eigenvalues": cx_vec(&r.values),
        "residual": r.residual,
    });
    if exact {
        let (t, f) = spec.require_closed_form("refine --exact")?;
        let values: Vec<C64> = t.family_eigenvalues(f)?;
        let naive = naive_eigenvalues(&a)?;
        results["exact"] = json!(cx_vec(&values));
        results["refined_error"] = json!(accuracy_report(&r.values, &values)?);
        results["naive_eigenvalues"] = json!(cx_vec(&naive));
        results["naive_error"] = json!(accuracy_report(&naive, &values)?);
    }
    let warnings = r.warnings.iter().map(describe).collect();
    Ok(RunReport::new("refine", input(&spec, json!({ "exact": exact })), results, seed)?.with_warnings(warnings))
}

fn sample_space(s: SampleArg) -> SampleSpace {
    match s {
        SampleArg::General => SampleSpace::General,
        SampleArg::T => SampleSpace::Structured(Subspace::Toeplitz),
        SampleArg::St => SampleSpace::Structured(Subspace::Symmetric),
        SampleArg::At => SampleSpace::Structured(Subspace::Skew),
    }
}

const LISTED_FAILURES: usize = 20;

pub fn lab(m: &MatrixArgs, seeds: u64, eps: Option<f64>, s: SampleArg, seed: u64) -> Result<RunReport, CliError> {
    let spec = m.resolve()?;
    let (t, f) = spec.require_closed_form("lab")?;
    let eps = match eps {
        Some(e) if e.is_finite() && e >= 0.0 => e,
        Some(_) => return Err(CliError::usage("--eps", "must be a finite nonnegative number")),
        None => 1e-6 * global_min_gap(&t, f)?,
    };
    let space = sample_space(s);
    let (mut checks, mut passed, mut worst) = (0usize, 0usize, 0.0f64);
    let mut failures = Vec::new();
    let mut errors = Vec::new();
    for sample_seed in seed..seed.saturating_add(seeds) {
        let e = sample_perturbation(t.order(), space, sample_seed)?.e;
        match verify_sin_theta_all(&t, f, &e, eps) {
            Ok(rows) => {
                for c in rows {
                    checks += 1;
                    if c.bound > 0.0 {
                        worst = worst.max(c.measured / c.bound);
                    }
                    if c.pass {
                        passed += 1;
                    } else if failures.len() < LISTED_FAILURES {
                        failures.push(json!({ "seed": sample_seed, "h": c.h, "measured": c.measured, "bound": c.bound }));
                    }
                }
            }
            Err(err) => errors.push(json!({ "seed": sample_seed, "error": err.name(), "detail": err.to_string() })),
        }
    }
    let results = json!({
        "eps": eps,
        "checks": checks,
        "passed": passed,
        "all_passed": checks == passed && errors.is_empty(),
        "worst_ratio": worst,
        "failures": failures,
        "errors": errors,
    });
    let options = json!({ "seeds": seeds, "eps": eps, "subspace": space.tag() });
    RunReport::new("lab", input(&spec, options), results, seed)
}

pub fn figure(id: u8, theta1: f64, theta2: f64, delta: Option<&str>, sigma: f64) -> Result<FigureData, CliError> {
    let delta: C64 = match delta {
        Some(s) => s.trim().parse().map_err(|_| CliError::usage("--delta", format!("cannot parse '{s}' as a number")))?,
        None => C64::new(0.0, 0.0),
    };
    match id {
        1 => figure1(),
        2 => figure2(theta1, theta2, delta),
        3 => {
            if delta.im != 0.0 {
                return Err(CliError::usage("--delta", "figure 3 needs a real diagonal"));
            }
            figure3(sigma, delta.re)
        }
        4 => figure4(),
        _ => Err(CliError::usage("ID", "figure id must be 1, 2, 3 or 4")),
    }
}
