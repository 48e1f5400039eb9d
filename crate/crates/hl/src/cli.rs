//! The `hl` command line: `eval`, `verify`, `suite` and `table`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hl_core::kernels::sigma_divisor;
use hl_core::lommel::{lommel_big_s, lommel_big_s_special_detailed, lommel_c, lommel_s_small, EvalRoute, LommelOrder};
use hl_core::mellin::{i_s_line, ContourSpec};
use hl_core::quad::QuadratureSpec;
use hl_core::series::SeriesControl;
use hl_core::zeta::{hurwitz_rhs_fourier, hurwitz_zeta_em, hurwitz_zeta_hermite, phi, riemann_zeta, xi_completed};
use hl_core::Complex64;

use crate::report::{load_cases, render_evaluations, render_reports, Evaluation, Format};
use crate::verify::{default_suite, run_suite_with, IdentityCase, IdentityId, Param, RunOptions, Summary};
use crate::verify::Diagnostics;
use crate::{CliError, Result};

pub const FUNCTIONS: [&str; 14] = [
    "zeta",
    "hurwitz_em",
    "hurwitz_hermite",
    "hurwitz_fourier",
    "phi",
    "xi",
    "lommel_s",
    "lommel_S",
    "lommel_S_special",
    "lommel_C",
    "i_s",
    "sigma",
    "riemann_zeta",
    "hurwitz_zeta",
];

#[derive(Debug, Parser)]
#[command(name = "hl", version, about = "Hurwitz zeta, Lommel and Mellin–Barnes evaluation and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one special function.
    Eval {
        function: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one identity at one parameter point.
    Verify {
        identity: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        timing: bool,
    },
    /// Run a batch of identity checks.
    Suite {
        /// JSON file of cases; the built-in grid when omitted.
        file: Option<PathBuf>,
        /// Only run cases of this identity.
        #[arg(long)]
        identity: Option<String>,
        #[arg(long, short = 'j')]
        jobs: Option<usize>,
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long)]
        timing: bool,
    },
    /// Tabulate a function over a range of z or x.
    Table {
        function: String,
        #[command(flatten)]
        params: ParamArgs,
        /// start:stop:count
        #[arg(long, allow_hyphen_values = true)]
        z_range: Option<String>,
        /// start:stop:count
        #[arg(long, allow_hyphen_values = true)]
        x_range: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args, Default)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    /// Truncation of Lommel-type series.
    #[arg(long = "K", allow_hyphen_values = true)]
    big_k: Option<String>,
    /// Truncation of lattice sums.
    #[arg(long = "N", allow_hyphen_values = true)]
    big_n: Option<String>,
}

#[derive(Debug, Args, Default)]
struct TolArgs {
    #[arg(long)]
    tol_abs: Option<f64>,
    #[arg(long)]
    tol_rel: Option<f64>,
}

#[derive(Debug, Args, Default)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ParamArgs {
    fn collect(&self) -> Result<BTreeMap<String, Param>> {
        let fields = [
            ("s", &self.s),
            ("a", &self.a),
            ("k", &self.k),
            ("alpha", &self.alpha),
            ("m", &self.m),
            ("mu", &self.mu),
            ("nu", &self.nu),
            ("x", &self.x),
            ("z", &self.z),
            ("n", &self.n),
            ("K", &self.big_k),
            ("N", &self.big_n),
        ];
        let mut out = BTreeMap::new();
        for (name, v) in fields {
            if let Some(text) = v {
                let z = parse_complex(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))?;
                out.insert(name.to_string(), Param::from(z));
            }
        }
        Ok(out)
    }
}

/// Parses `1.5`, `-2+1.3i`, `0.5-14i`, `3i`, `-i`.
pub fn parse_complex(text: &str) -> std::result::Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty number".into());
    }
    let num = |s: &str| s.parse::<f64>().map_err(|_| format!("cannot parse '{text}' as a number"));
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return Ok(Complex64::new(num(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |s: &str| match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => num(s),
    };
    match split {
        Some(i) => Ok(Complex64::new(num(&body[..i])?, imag(&body[i..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

/// Parses `start:stop:count` into evenly spaced points.
pub fn parse_range(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || CliError::Usage(format!("range '{text}' must look like start:stop:count"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if !(start.is_finite() && stop.is_finite()) || count == 0 {
        return Err(bad());
    }
    if start > stop {
        return Err(CliError::Usage(format!("range '{text}' is reversed")));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let h = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|i| if i + 1 == count { stop } else { start + h * i as f64 }).collect())
}

fn need(params: &BTreeMap<String, Param>, name: &str, function: &str) -> Result<Complex64> {
    params
        .get(name)
        .map(Param::complex)
        .ok_or_else(|| CliError::Usage(format!("{function} needs --{name}")))
}

fn need_real(params: &BTreeMap<String, Param>, name: &str, function: &str) -> Result<f64> {
    let z = need(params, name, function)?;
    if z.im != 0.0 {
        return Err(CliError::Usage(format!("{function}: --{name} must be real")));
    }
    Ok(z.re)
}

fn need_count(params: &BTreeMap<String, Param>, name: &str, function: &str) -> Result<u64> {
    let x = need_real(params, name, function)?;
    if x < 1.0 || x.fract() != 0.0 {
        return Err(CliError::Usage(format!("{function}: --{name} must be a positive integer")));
    }
    Ok(x as u64)
}

fn series_control(params: &BTreeMap<String, Param>, function: &str) -> Result<SeriesControl> {
    let mut ctl = SeriesControl::default();
    if params.contains_key("K") {
        ctl = ctl.with_max_terms(need_count(params, "K", function)? as usize);
    }
    ctl.validate()?;
    Ok(ctl)
}

/// Evaluates `function` with named parameters.
pub fn evaluate_function(function: &str, params: &BTreeMap<String, Param>) -> Result<Evaluation> {
    let mut diag = Diagnostics::default();
    let f = function;
    let value = match function {
        "zeta" | "riemann_zeta" => riemann_zeta(need(params, "s", f)?)?,
        "hurwitz_em" | "hurwitz_zeta" => hurwitz_zeta_em(need(params, "s", f)?, need(params, "a", f)?)?,
        "hurwitz_hermite" => hurwitz_zeta_hermite(need(params, "s", f)?, need(params, "a", f)?, &QuadratureSpec::default())?,
        "hurwitz_fourier" => {
            let v = hurwitz_rhs_fourier(need(params, "s", f)?, need_real(params, "a", f)?, &series_control(params, f)?)?;
            diag.terms_used = Some(v.terms_used);
            diag.tail_estimate = Some(v.tail_estimate);
            v.value
        }
        "phi" => phi(need(params, "s", f)?, need_real(params, "x", f)?)?,
        "xi" => xi_completed(need(params, "s", f)?)?,
        "lommel_s" => {
            let order = LommelOrder::new(need(params, "mu", f)?, need(params, "nu", f)?);
            let v = lommel_s_small(order, need(params, "z", f)?, &series_control(params, f)?)?;
            diag.terms_used = Some(v.terms_used);
            diag.cancellation_digits = Some(v.cancellation_digits);
            v.value
        }
        "lommel_S" => {
            let order = LommelOrder::new(need(params, "mu", f)?, need(params, "nu", f)?);
            lommel_big_s(order, need(params, "z", f)?, &series_control(params, f)?)?
        }
        "lommel_S_special" => {
            let v = lommel_big_s_special_detailed(need(params, "s", f)?, need_real(params, "z", f)?, &EvalRoute::default())?;
            if v.terms_used > 0 {
                diag.terms_used = Some(v.terms_used);
                diag.cancellation_digits = Some(v.cancellation_digits);
            }
            if v.nodes_used > 0 {
                diag.nodes_used = Some(v.nodes_used);
            }
            v.value
        }
        "lommel_C" => lommel_c(need(params, "s", f)?, need_real(params, "z", f)?, &EvalRoute::default())?,
        "i_s" => {
            let v = i_s_line(need(params, "s", f)?, need(params, "z", f)?, &ContourSpec::default())?;
            diag.nodes_used = Some(v.nodes_used);
            diag.tail_estimate = Some(v.tail_bound);
            v.value
        }
        "sigma" => sigma_divisor(need(params, "s", f)?, need_count(params, "n", f)?),
        _ => {
            return Err(CliError::Usage(format!("unknown function '{function}'; expected one of {}", FUNCTIONS.join(", "))));
        }
    };
    Ok(Evaluation { function: function.to_string(), params: params.clone(), value: value.into(), diagnostics: diag })
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn apply_tolerances(mut case: IdentityCase, tol: &TolArgs) -> IdentityCase {
    if let Some(a) = tol.tol_abs {
        case.tol_abs = a;
    }
    if let Some(r) = tol.tol_rel {
        case.tol_rel = r;
    }
    case
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Eval { function, params, output } => {
            let e = evaluate_function(&function, &params.collect()?)?;
            emit(&render_evaluations(&[e], output.format.unwrap_or(Format::Text))?, &output.out)?;
            Ok(0)
        }
        Command::Verify { identity, params, tol, output, timing } => {
            let id: IdentityId = identity.parse().map_err(CliError::Usage)?;
            let mut case = IdentityCase::new(id);
            for (k, v) in params.collect()? {
                case = case.with(&k, v);
            }
            let case = apply_tolerances(case, &tol);
            let reports = run_suite_with(&[case], 1, &RunOptions { timing });
            emit(&render_reports(&reports, output.format.unwrap_or(Format::Text))?, &output.out)?;
            Ok(Summary::of(&reports).exit_code())
        }
        Command::Suite { file, identity, jobs, tol, output, timing } => {
            let mut cases = match &file {
                Some(path) => load_cases(&std::fs::read_to_string(path)?)?,
                None => default_suite(),
            };
            if let Some(name) = identity {
                let id: IdentityId = name.parse().map_err(CliError::Usage)?;
                cases.retain(|c| c.identity_id == id);
            }
            let cases: Vec<_> = cases.into_iter().map(|c| apply_tolerances(c, &tol)).collect();
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
            let reports = run_suite_with(&cases, jobs, &RunOptions { timing });
            emit(&render_reports(&reports, output.format.unwrap_or(Format::Text))?, &output.out)?;
            let s = Summary::of(&reports);
            eprintln!(
                "{} cases: {} passed, {} failed, {} errored, {} config errors, {} skipped",
                reports.len(),
                s.passed,
                s.failed,
                s.errored,
                s.config_error,
                s.skipped
            );
            Ok(s.exit_code())
        }
        Command::Table { function, params, z_range, x_range, output } => {
            let (name, range) = match (z_range, x_range) {
                (Some(r), None) => ("z", r),
                (None, Some(r)) => ("x", r),
                _ => return Err(CliError::Usage("table needs exactly one of --z-range or --x-range".into())),
            };
            let base = params.collect()?;
            let mut rows = Vec::new();
            for v in parse_range(&range)? {
                let mut p = base.clone();
                p.insert(name.to_string(), Param::Real(v));
                rows.push(evaluate_function(&function, &p)?);
            }
            emit(&render_evaluations(&rows, output.format.unwrap_or(Format::Csv))?, &output.out)?;
            Ok(0)
        }
    }
}

/// Runs the tool and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
