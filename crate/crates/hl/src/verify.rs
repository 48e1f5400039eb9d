//! Identity harness: each identity becomes a parameterized case that is
//! evaluated on both sides and compared.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use hl_core::kernels::{gamma, recip_gamma};
use hl_core::lommel::{
    half_order_small_lommel_series, lommel_big_s_special_detailed, masirevic_sum, masirevic_sum2,
    special_lommel_series, DirichletWeight, EvalRoute,
};
use hl_core::mellin::{i_s_closed, i_s_line, i_s_residue, lemma_lhs_integral, ContourSpec, LemmaIntegralParams};
use hl_core::quad::{gk21_adaptive, QuadratureSpec};
use hl_core::series::{Acceleration, SeriesControl, SeriesValue};
use hl_core::zeta::{hurwitz_rhs_fourier, hurwitz_zeta_em, hurwitz_zeta_hermite, phi_lattice_sum, riemann_zeta, xi_capital};
use hl_core::{Complex64, Error};
use serde::{Deserialize, Serialize};

/// Environment variable scaling every default tolerance.
pub const TOLERANCE_ENV: &str = "HL_DEFAULT_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    ExpArctanIntegral,
    HermiteVsEm,
    HurwitzFormula,
    FunctionalEquation,
    LommelHurwitzExpansion,
    HalfOrderSumClosedForm,
    HalfOrderSumAtOne,
    MasirevicSum,
    MasirevicSum2,
    ModularTransformation,
    PhiLatticeEquality,
    XiIntegralEquality,
    MellinTriple,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::ExpArctanIntegral,
        IdentityId::HermiteVsEm,
        IdentityId::HurwitzFormula,
        IdentityId::FunctionalEquation,
        IdentityId::LommelHurwitzExpansion,
        IdentityId::HalfOrderSumClosedForm,
        IdentityId::HalfOrderSumAtOne,
        IdentityId::MasirevicSum,
        IdentityId::MasirevicSum2,
        IdentityId::ModularTransformation,
        IdentityId::PhiLatticeEquality,
        IdentityId::XiIntegralEquality,
        IdentityId::MellinTriple,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::ExpArctanIntegral => "exp_arctan_integral",
            IdentityId::HermiteVsEm => "hermite_vs_em",
            IdentityId::HurwitzFormula => "hurwitz_formula",
            IdentityId::FunctionalEquation => "functional_equation",
            IdentityId::LommelHurwitzExpansion => "lommel_hurwitz_expansion",
            IdentityId::HalfOrderSumClosedForm => "half_order_sum_closed_form",
            IdentityId::HalfOrderSumAtOne => "half_order_sum_at_one",
            IdentityId::MasirevicSum => "masirevic_sum",
            IdentityId::MasirevicSum2 => "masirevic_sum2",
            IdentityId::ModularTransformation => "modular_transformation",
            IdentityId::PhiLatticeEquality => "phi_lattice_equality",
            IdentityId::XiIntegralEquality => "xi_integral_equality",
            IdentityId::MellinTriple => "mellin_triple",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown identity '{s}'"))
    }
}

/// A named parameter: a real number or a complex one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl Param {
    pub fn complex(&self) -> Complex64 {
        match *self {
            Param::Real(x) => Complex64::new(x, 0.0),
            Param::Complex { re, im } => Complex64::new(re, im),
        }
    }

    pub fn real(&self) -> Option<f64> {
        match *self {
            Param::Real(x) => Some(x),
            Param::Complex { re, im: 0.0 } => Some(re),
            Param::Complex { .. } => None,
        }
    }
}

impl From<f64> for Param {
    fn from(x: f64) -> Self {
        Param::Real(x)
    }
}

impl From<Complex64> for Param {
    fn from(z: Complex64) -> Self {
        if z.im == 0.0 {
            Param::Real(z.re)
        } else {
            Param::Complex { re: z.re, im: z.im }
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Param::Real(x) => write!(f, "{x}"),
            Param::Complex { re, im } if im < 0.0 => write!(f, "{re}{im}i"),
            Param::Complex { re, im } => write!(f, "{re}+{im}i"),
        }
    }
}

/// One parameterized instance of an identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "CaseRecord")]
pub struct IdentityCase {
    pub identity_id: IdentityId,
    pub params: BTreeMap<String, Param>,
    pub tol_abs: f64,
    pub tol_rel: f64,
}

#[derive(Deserialize)]
struct CaseRecord {
    identity_id: IdentityId,
    #[serde(default)]
    params: BTreeMap<String, Param>,
    tol_abs: Option<f64>,
    tol_rel: Option<f64>,
}

impl From<CaseRecord> for IdentityCase {
    fn from(r: CaseRecord) -> Self {
        let (abs, rel) = default_tolerances(r.identity_id, &r.params);
        IdentityCase {
            identity_id: r.identity_id,
            params: r.params,
            tol_abs: r.tol_abs.unwrap_or(abs),
            tol_rel: r.tol_rel.unwrap_or(rel),
        }
    }
}

impl IdentityCase {
    /// A case with no parameters and the default tolerance tier.
    pub fn new(identity_id: IdentityId) -> Self {
        let (tol_abs, tol_rel) = default_tolerances(identity_id, &BTreeMap::new());
        IdentityCase { identity_id, params: BTreeMap::new(), tol_abs, tol_rel }
    }

    /// Sets a parameter and re-derives the default tolerances.
    pub fn with(mut self, name: &str, value: impl Into<Param>) -> Self {
        self.params.insert(name.to_string(), value.into());
        let (a, r) = default_tolerances(self.identity_id, &self.params);
        self.tol_abs = a;
        self.tol_rel = r;
        self
    }

    pub fn with_tolerances(mut self, tol_abs: f64, tol_rel: f64) -> Self {
        self.tol_abs = tol_abs;
        self.tol_rel = tol_rel;
        self
    }

    pub fn label(&self) -> String {
        let mut out = String::from(self.identity_id.as_str());
        for (k, v) in &self.params {
            out.push_str(&format!(" {k}={v}"));
        }
        out
    }
}

/// Multiplier from `HL_DEFAULT_TOL`, 1 when unset or malformed.
pub fn tolerance_scale() -> f64 {
    std::env::var(TOLERANCE_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<f64>().ok())
        .filter(|x| *x > 0.0 && x.is_finite())
        .unwrap_or(1.0)
}

/// (tol_abs, tol_rel) of the tier an identity belongs to.
pub fn default_tolerances(id: IdentityId, params: &BTreeMap<String, Param>) -> (f64, f64) {
    let (abs, rel) = match id {
        IdentityId::ExpArctanIntegral => (1e-12, 1e-8),
        IdentityId::HermiteVsEm => (1e-9, 1e-9),
        IdentityId::HurwitzFormula => {
            let strip = params.get("s").map(|s| s.complex().re >= 0.0).unwrap_or(false);
            (1e-10, if strip { 1e-6 } else { 1e-9 })
        }
        IdentityId::FunctionalEquation => (1e-12, 1e-9),
        IdentityId::LommelHurwitzExpansion => (1e-12, 1e-7),
        IdentityId::HalfOrderSumClosedForm
        | IdentityId::HalfOrderSumAtOne
        | IdentityId::MasirevicSum
        | IdentityId::MasirevicSum2
        | IdentityId::PhiLatticeEquality => (1e-12, 1e-6),
        IdentityId::ModularTransformation => (1e-6, 1e-6),
        IdentityId::XiIntegralEquality => (1e-12, 1e-5),
        IdentityId::MellinTriple => (1e-14, 1e-7),
    };
    let k = tolerance_scale();
    (abs * k, rel * k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    Errored,
    ConfigError,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Passed => "passed",
            Status::Failed => "failed",
            Status::Errored => "errored",
            Status::ConfigError => "config_error",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for CValue {
    fn from(z: Complex64) -> Self {
        CValue { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terms_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nodes_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cancellation_digits: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tail_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<f64>,
}

impl Diagnostics {
    fn terms(&mut self, n: usize) {
        *self.terms_used.get_or_insert(0) += n;
    }

    fn nodes(&mut self, n: usize) {
        *self.nodes_used.get_or_insert(0) += n;
    }

    fn cancellation(&mut self, d: f64) {
        let c = self.cancellation_digits.get_or_insert(0.0);
        *c = c.max(d);
    }

    fn tail(&mut self, t: f64) {
        *self.tail_estimate.get_or_insert(0.0) += t;
    }

    fn series(&mut self, v: &SeriesValue) {
        self.terms(v.terms_used);
        self.tail(v.tail_estimate);
        if v.cancellation_digits > 0.0 {
            self.cancellation(v.cancellation_digits);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(flatten)]
    pub case: IdentityCase,
    pub lhs: Option<CValue>,
    pub rhs: Option<CValue>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub status: Status,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
    pub diagnostics: Diagnostics,
}

/// abs_err / max(|lhs|, |rhs|, 1e−300).
pub fn relative_error(lhs: Complex64, rhs: Complex64) -> (f64, f64) {
    let abs = (lhs - rhs).norm();
    (abs, abs / lhs.norm().max(rhs.norm()).max(1e-300))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Record wall time per case; reports then differ between runs.
    pub timing: bool,
}

enum Failure {
    Config(String),
    Skip(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

struct Outcome {
    lhs: Complex64,
    rhs: Complex64,
    diag: Diagnostics,
    message: Option<String>,
}

type Check = Result<Outcome, Failure>;

struct Params<'a>(&'a BTreeMap<String, Param>);

impl Params<'_> {
    fn get(&self, name: &str) -> Result<Param, Failure> {
        self.0.get(name).copied().ok_or_else(|| Failure::Config(format!("missing parameter '{name}'")))
    }

    fn complex(&self, name: &str) -> Result<Complex64, Failure> {
        Ok(self.get(name)?.complex())
    }

    fn real(&self, name: &str) -> Result<f64, Failure> {
        self.get(name)?.real().ok_or_else(|| Failure::Config(format!("parameter '{name}' must be real")))
    }

    fn count(&self, name: &str) -> Result<usize, Failure> {
        let x = self.real(name)?;
        if x >= 0.0 && x.fract() == 0.0 && x <= 1e9 {
            Ok(x as usize)
        } else {
            Err(Failure::Config(format!("parameter '{name}' must be a non-negative integer, got {x}")))
        }
    }

    fn count_or(&self, name: &str, default: usize) -> Result<usize, Failure> {
        if self.0.contains_key(name) {
            self.count(name)
        } else {
            Ok(default)
        }
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Config(msg()))
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn rpow(base: f64, e: Complex64) -> Complex64 {
    (e * base.ln()).exp()
}

fn truncation(k: usize) -> Result<SeriesControl, Failure> {
    require(k >= 8, || format!("truncation K = {k} must be at least 8"))?;
    Ok(SeriesControl::default().with_max_terms(k))
}

fn check_exp_arctan_integral(p: &Params) -> Check {
    let s = p.complex("s")?;
    let a = p.real("a")?;
    let k = p.count("k")?;
    require(a > 0.0, || format!("a = {a} must be positive"))?;
    require(k >= 1, || "k must be at least 1".into())?;
    let params = LemmaIntegralParams::new(s, a, k as u32)?;
    let lhs = lemma_lhs_integral(&params, &QuadratureSpec::default())?;
    let z = 2.0 * PI * a * k as f64;
    let big = lommel_big_s_special_detailed(s, z, &EvalRoute::default())?;
    let rhs = s * a.sqrt() * rpow(2.0 * PI * k as f64, s - 0.5) * big.value;
    let mut diag = Diagnostics::default();
    diag.nodes(lhs.nodes_used + big.nodes_used);
    diag.tail(lhs.tail_bound);
    if big.terms_used > 0 {
        diag.terms(big.terms_used);
        diag.cancellation(big.cancellation_digits);
    }
    Ok(Outcome { lhs: lhs.value, rhs, diag, message: Some(format!("S evaluated by {:?}", big.route)) })
}

fn check_hermite_vs_em(p: &Params) -> Check {
    let s = p.complex("s")?;
    let a = p.complex("a")?;
    require(a.re > 0.0, || format!("Hermite's formula needs Re(a) > 0, got {a}"))?;
    require(s != c(1.0), || "s = 1 is the pole".into())?;
    let lhs = hurwitz_zeta_hermite(s, a, &QuadratureSpec::default())?;
    let rhs = hurwitz_zeta_em(s, a)?;
    Ok(Outcome { lhs, rhs, diag: Diagnostics::default(), message: None })
}

fn check_hurwitz_formula(p: &Params) -> Check {
    let s = p.complex("s")?;
    let a = p.real("a")?;
    let valid = (a > 0.0 && a <= 1.0 && s.re < 0.0) || (a > 0.0 && a < 1.0 && s.re < 1.0);
    require(valid, || format!("Hurwitz's formula needs 0<a<=1, Re(s)<0 or 0<a<1, Re(s)<1 (got s = {s}, a = {a})"))?;
    let ctl = SeriesControl::default().with_acceleration(Acceleration::EulerTransform);
    let lhs = hurwitz_zeta_em(s, c(a))?;
    let rhs = hurwitz_rhs_fourier(s, a, &ctl)?;
    let mut diag = Diagnostics::default();
    diag.series(&rhs);
    Ok(Outcome { lhs, rhs: rhs.value, diag, message: None })
}

fn check_functional_equation(p: &Params) -> Check {
    let s = p.complex("s")?;
    let one = c(1.0);
    require(s != one, || "s = 1 is the pole".into())?;
    let reflected = one - s;
    require(!(reflected.im == 0.0 && reflected.re <= 0.0 && reflected.re.fract() == 0.0), || {
        format!("Gamma(1-s) has a pole at s = {s}")
    })?;
    // both sides by direct Euler–Maclaurin, without riemann_zeta's own reflection
    let lhs = hurwitz_zeta_em(s, one)?;
    let sine = hl_core::kernels::csin_pi(s * 0.5);
    let rhs = gamma(reflected)? * rpow(2.0 * PI, s - 1.0) * 2.0 * sine * hurwitz_zeta_em(reflected, one)?;
    Ok(Outcome { lhs, rhs, diag: Diagnostics::default(), message: None })
}

fn explicit_terms(s: Complex64, a: f64) -> Complex64 {
    rpow(a, -s) * 0.5 + rpow(a, c(1.0) - s) / (s - 1.0)
}

fn check_lommel_hurwitz(p: &Params) -> Check {
    let s = p.complex("s")?;
    let a = p.real("a")?;
    let k = p.count_or("K", 2000)?;
    require(a > 0.0, || format!("a = {a} must be positive"))?;
    require(s != c(1.0), || "s = 1 is the pole".into())?;
    let ctl = truncation(k)?;
    let lhs = hurwitz_zeta_em(s, c(a))?;
    let series = special_lommel_series(s, 2.0 * PI * a, c(0.5) - s, DirichletWeight::Unit, &ctl, &EvalRoute::default())?;
    let rhs = explicit_terms(s, a) + s * 2.0 * a.sqrt() * rpow(2.0 * PI, s - 0.5) * series.value;
    let mut diag = Diagnostics::default();
    diag.series(&series);
    Ok(Outcome { lhs, rhs, diag, message: None })
}

/// −(½a^{−s} + a^{1−s}/(s−1)) / (2s√a(2π)^{s−1/2}).
pub fn half_order_sum_rhs(s: f64, a: f64) -> f64 {
    -(0.5 * a.powf(-s) + a.powf(1.0 - s) / (s - 1.0)) / (2.0 * s * a.sqrt() * (2.0 * PI).powf(s - 0.5))
}

fn check_half_order_sum(p: &Params) -> Check {
    let s = p.real("s")?;
    let a = p.real("a")?;
    let k = p.count_or("K", 5000)?;
    require(s < 0.0, || format!("needs s < 0, got {s}"))?;
    require(a > 0.0 && a < 1.0, || format!("needs 0 < a < 1, got {a}"))?;
    let lhs = half_order_small_lommel_series(c(s), 2.0 * PI * a, c(0.5 - s), &truncation(k)?, &EvalRoute::default())?;
    let mut diag = Diagnostics::default();
    diag.series(&lhs);
    Ok(Outcome { lhs: lhs.value, rhs: c(half_order_sum_rhs(s, a)), diag, message: None })
}

fn check_half_order_sum_at_one(p: &Params) -> Check {
    let s = p.real("s")?;
    let k = p.count_or("K", 5000)?;
    require(s < -1.0, || format!("the a = 1 series needs s < -1, got {s}"))?;
    let lhs = half_order_small_lommel_series(c(s), 2.0 * PI, c(0.5 - s), &truncation(k)?, &EvalRoute::default())?;
    let mut diag = Diagnostics::default();
    diag.series(&lhs);
    Ok(Outcome { lhs: lhs.value, rhs: c(half_order_sum_rhs(s, 1.0)), diag, message: None })
}

fn check_masirevic_sum(p: &Params) -> Check {
    let m = p.count("m")?;
    let mu = p.real("mu")?;
    let nu = p.real("nu")?;
    let x = p.real("x")?;
    let k = p.count_or("K", 5000)?;
    require(x > 0.0 && x < 2.0 * PI, || format!("needs 0 < x < 2pi, got {x}"))?;
    let bound = (-nu - 1.0).max(nu - 2.0).max(-0.5);
    require(mu > bound, || format!("needs mu > {bound}, got {mu}"))?;
    require(nu.abs() == 0.5, || format!("only nu = +-1/2 is supported, got {nu}"))?;
    let (lhs, rhs) = masirevic_sum(m as u32, mu, nu, x, &truncation(k)?)?;
    let mut diag = Diagnostics::default();
    diag.series(&lhs);
    Ok(Outcome { lhs: lhs.value, rhs, diag, message: None })
}

fn check_masirevic_sum2(p: &Params) -> Check {
    let m = p.count("m")?;
    let mu = p.real("mu")?;
    let x = p.real("x")?;
    let k = p.count_or("K", 5000)?;
    require(m >= 1, || "needs m >= 1".into())?;
    require(mu > 0.0, || format!("needs mu > 0, got {mu}"))?;
    require((0.0..=2.0 * PI).contains(&x), || format!("needs 0 <= x <= 2pi, got {x}"))?;
    let (lhs, rhs) = masirevic_sum2(m as u32, mu, x, &truncation(k)?)?;
    let mut diag = Diagnostics::default();
    diag.series(&lhs);
    Ok(Outcome { lhs: lhs.value, rhs, diag, message: None })
}

/// Σ_m σ_{1−s}(m) m^{s−1/2} S_{−s−1/2,1/2}(2πmα), with K direct terms.
pub fn divisor_lommel_series(s: Complex64, alpha: f64, k: usize) -> hl_core::Result<SeriesValue> {
    let ctl = SeriesControl::default().with_max_terms(k);
    let weight = DirichletWeight::Divisor { exponent: c(1.0) - s };
    special_lommel_series(s, 2.0 * PI * alpha, c(0.5) - s, weight, &ctl, &EvalRoute::default())
}

/// F(α) = α^{s/2}(2s(2π)^{s−1/2}√α Σ_m σ_{1−s}(m) m^{s−1/2} S(2πmα) − ζ(s)/(2α^s) − ζ(s−1)/((s−1)α)).
pub fn modular_f(s: Complex64, alpha: f64, k: usize) -> hl_core::Result<(Complex64, SeriesValue)> {
    let series = divisor_lommel_series(s, alpha, k)?;
    let lattice = s * 2.0 * rpow(2.0 * PI, s - 0.5) * alpha.sqrt() * series.value;
    let zeta_terms = riemann_zeta(s)? / (rpow(alpha, s) * 2.0) + riemann_zeta(s - 1.0)? / ((s - 1.0) * alpha);
    Ok((rpow(alpha, s * 0.5) * (lattice - zeta_terms), series))
}

fn modular_region(s: Complex64, alpha: f64) -> Result<(), Failure> {
    require(s.re > 0.0 && s.re < 2.0, || format!("needs 0 < Re(s) < 2, got {s}"))?;
    require(s != c(1.0), || "s = 1 is the pole of zeta".into())?;
    require(alpha > 0.0, || format!("alpha = {alpha} must be positive"))
}

fn check_modular(p: &Params) -> Check {
    let s = p.complex("s")?;
    let alpha = p.real("alpha")?;
    let k = p.count_or("K", 5000)?;
    modular_region(s, alpha)?;
    truncation(k)?;
    let (lhs, a) = modular_f(s, alpha, k)?;
    let (rhs, b) = modular_f(s, 1.0 / alpha, k)?;
    let mut diag = Diagnostics::default();
    diag.series(&a);
    diag.series(&b);
    Ok(Outcome { lhs, rhs, diag, message: None })
}

fn check_phi_equality(p: &Params) -> Check {
    let s = p.complex("s")?;
    let alpha = p.real("alpha")?;
    let n = p.count_or("N", 2000)?;
    let k = p.count_or("K", 5000)?;
    modular_region(s, alpha)?;
    truncation(k)?;
    let lhs = phi_lattice_sum(s, alpha, n)?;
    let series = divisor_lommel_series(s, alpha, k)?;
    let rhs = s * 2.0 * rpow(2.0 * PI, s - 0.5) * alpha.sqrt() * series.value;
    let mut diag = Diagnostics::default();
    diag.series(&lhs);
    diag.series(&series);
    Ok(Outcome { lhs: lhs.value, rhs, diag, message: None })
}

/// (8(4π)^{(s−4)/2}/Γ(s)) ∫₀^∞ Γ((s−2+it)/4)Γ((s−2−it)/4) Ξ((t+i(s−1))/2) Ξ((t−i(s−1))/2)
/// cos(½t log α)/(s²+t²) dt.
pub fn xi_integral(s: Complex64, alpha: f64) -> hl_core::Result<(Complex64, usize)> {
    let i = Complex64::new(0.0, 1.0);
    let log_alpha = alpha.ln();
    let f = |t: f64| -> Complex64 {
        let g = gamma((s - 2.0 + i * t) / 4.0).and_then(|a| Ok(a * gamma((s - 2.0 - i * t) / 4.0)?));
        let x = xi_capital((i * (s - 1.0) + t) / 2.0).and_then(|a| Ok(a * xi_capital((c(t) - i * (s - 1.0)) / 2.0)?));
        match (g, x) {
            (Ok(g), Ok(x)) => g * x * (0.5 * t * log_alpha).cos() / (s * s + t * t),
            _ => Complex64::new(f64::NAN, f64::NAN),
        }
    };
    let points = [0.0, 2.0, 5.0, 10.0, 20.0, 40.0, 70.0, 100.0];
    let r = gk21_adaptive(f, &points, 1e-15, 1e-12, 2000)?;
    if !(r.value.re.is_finite() && r.value.im.is_finite()) {
        return Err(Error::QuadratureFailure("xi integrand is not finite".into()));
    }
    let pre = rpow(4.0 * PI, (s - 4.0) * 0.5) * 8.0 * recip_gamma(s)?;
    Ok((pre * r.value, r.nodes_used))
}

fn check_xi_integral(p: &Params) -> Check {
    let s = p.complex("s")?;
    let alpha = p.real("alpha")?;
    let k = p.count_or("K", 5000)?;
    modular_region(s, alpha)?;
    truncation(k)?;
    let (lhs, nodes) = xi_integral(s, alpha).map_err(|e| Failure::Skip(format!("xi integral unavailable: {e}")))?;
    let (rhs, series) = modular_f(s, alpha, k)?;
    let mut diag = Diagnostics::default();
    diag.nodes(nodes);
    diag.series(&series);
    Ok(Outcome { lhs, rhs, diag, message: None })
}

fn check_mellin_triple(p: &Params) -> Check {
    let s = p.complex("s")?;
    let z = p.complex("z")?;
    let n_terms = p.count_or("n", 400)?;
    require(!(z.im == 0.0 && z.re <= 0.0), || format!("z = {z} lies on the cut"))?;
    require(s.re < 0.0, || format!("the residue form needs Re(s) < 0, got {s}"))?;
    let line = i_s_line(s, z, &ContourSpec::default())?;
    let mut diag = Diagnostics::default();
    diag.nodes(line.nodes_used);
    diag.tail(line.tail_bound);
    let mut values = vec![("line", line.value)];
    match i_s_residue(s, z, n_terms) {
        Ok(r) => {
            diag.series(&r);
            values.push(("residue", r.value));
        }
        Err(Error::NoConvergence { .. }) => return Err(Failure::Skip("residue series did not converge".into())),
        Err(e) => return Err(e.into()),
    }
    if z.im == 0.0 {
        values.push(("closed", i_s_closed(s, z.re)?));
    }
    let mut worst = (0, 1, -1.0);
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let (_, rel) = relative_error(values[i].1, values[j].1);
            if rel > worst.2 {
                worst = (i, j, rel);
            }
        }
    }
    let (i, j, _) = worst;
    Ok(Outcome {
        lhs: values[i].1,
        rhs: values[j].1,
        diag,
        message: Some(format!("worst pair: {} vs {}", values[i].0, values[j].0)),
    })
}

fn evaluate(case: &IdentityCase) -> Check {
    let p = Params(&case.params);
    match case.identity_id {
        IdentityId::ExpArctanIntegral => check_exp_arctan_integral(&p),
        IdentityId::HermiteVsEm => check_hermite_vs_em(&p),
        IdentityId::HurwitzFormula => check_hurwitz_formula(&p),
        IdentityId::FunctionalEquation => check_functional_equation(&p),
        IdentityId::LommelHurwitzExpansion => check_lommel_hurwitz(&p),
        IdentityId::HalfOrderSumClosedForm => check_half_order_sum(&p),
        IdentityId::HalfOrderSumAtOne => check_half_order_sum_at_one(&p),
        IdentityId::MasirevicSum => check_masirevic_sum(&p),
        IdentityId::MasirevicSum2 => check_masirevic_sum2(&p),
        IdentityId::ModularTransformation => check_modular(&p),
        IdentityId::PhiLatticeEquality => check_phi_equality(&p),
        IdentityId::XiIntegralEquality => check_xi_integral(&p),
        IdentityId::MellinTriple => check_mellin_triple(&p),
    }
}

/// Evaluates one case; never panics on bad parameters.
pub fn verify_case(case: &IdentityCase, options: &RunOptions) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport {
        case: case.clone(),
        lhs: None,
        rhs: None,
        abs_err: None,
        rel_err: None,
        status: Status::Errored,
        passed: false,
        message: None,
        diagnostics: Diagnostics::default(),
    };
    let tol_ok = case.tol_abs >= 0.0 && case.tol_rel >= 0.0;
    let outcome = if tol_ok {
        evaluate(case)
    } else {
        Err(Failure::Config(format!("tolerances must be non-negative, got {} / {}", case.tol_abs, case.tol_rel)))
    };
    match outcome {
        Ok(o) => {
            let (abs, rel) = relative_error(o.lhs, o.rhs);
            let passed = abs <= case.tol_abs || rel <= case.tol_rel;
            report.lhs = Some(o.lhs.into());
            report.rhs = Some(o.rhs.into());
            report.abs_err = Some(abs);
            report.rel_err = Some(rel);
            report.status = if passed { Status::Passed } else { Status::Failed };
            report.passed = passed;
            report.message = o.message;
            report.diagnostics = o.diag;
        }
        Err(Failure::Config(m)) => {
            report.status = Status::ConfigError;
            report.message = Some(m);
        }
        Err(Failure::Skip(m)) => {
            report.status = Status::Skipped;
            report.message = Some(m);
        }
        Err(Failure::Core(e)) => {
            report.status = Status::Errored;
            report.message = Some(e.to_string());
        }
    }
    if options.timing {
        report.diagnostics.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    report
}

/// Evaluates every case on up to `parallelism` threads; reports keep input order.
pub fn run_suite(cases: &[IdentityCase], parallelism: usize) -> Vec<VerificationReport> {
    run_suite_with(cases, parallelism, &RunOptions::default())
}

pub fn run_suite_with(cases: &[IdentityCase], parallelism: usize, options: &RunOptions) -> Vec<VerificationReport> {
    let workers = parallelism.max(1).min(cases.len());
    if workers <= 1 {
        return cases.iter().map(|c| verify_case(c, options)).collect();
    }
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<VerificationReport>> = vec![None; cases.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= cases.len() {
                            break done;
                        }
                        done.push((i, verify_case(&cases[i], options)));
                    }
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("suite worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every case evaluated")).collect()
}

/// Counts by status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
    pub config_error: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Passed => s.passed += 1,
                Status::Failed => s.failed += 1,
                Status::Errored => s.errored += 1,
                Status::ConfigError => s.config_error += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    /// 0 when every non-skipped case passed, 2 on any configuration error,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.config_error > 0 {
            2
        } else if self.failed + self.errored > 0 {
            1
        } else {
            0
        }
    }
}

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// s values of the exponential–arctangent grid.
pub fn lemma_grid_s() -> Vec<Complex64> {
    vec![c(-3.0), c(-1.4), c(-0.5), c(0.5), c(1.5), c(2.7), cx(-2.0, 1.3), cx(0.25, -0.75)]
}

pub fn lemma_cases() -> Vec<IdentityCase> {
    let mut out = Vec::new();
    for s in lemma_grid_s() {
        for a in [0.25, 1.0, SQRT_2] {
            for k in [1.0, 2.0, 5.0] {
                out.push(IdentityCase::new(IdentityId::ExpArctanIntegral).with("s", s).with("a", a).with("k", k));
            }
        }
    }
    out
}

pub fn hurwitz_formula_cases() -> Vec<IdentityCase> {
    let pts = [(c(-0.5), 1.0 / 3.0), (c(-2.3), 0.25), (cx(-1.5, 1.0), 0.9), (c(-2.0), 1.0), (c(0.5), 0.9), (c(0.25), 0.25)];
    pts.iter().map(|&(s, a)| IdentityCase::new(IdentityId::HurwitzFormula).with("s", s).with("a", a)).collect()
}

pub fn functional_equation_cases() -> Vec<IdentityCase> {
    [-0.5, -2.5, -4.5].iter().map(|&s| IdentityCase::new(IdentityId::FunctionalEquation).with("s", s)).collect()
}

pub fn hermite_cases() -> Vec<IdentityCase> {
    let pts = [
        (c(2.0), c(1.0)),
        (c(-0.5), c(0.25)),
        (cx(3.0, 1.0), c(2.0)),
        (c(-2.5), c(1.0 / 3.0)),
        (c(-4.5), c(1.0)),
        (c(0.5), c(0.75)),
        (cx(0.5, 14.0), c(1.0)),
        (c(1.5), c(0.5)),
        (c(1.5), c(3.0)),
        (cx(-1.2, 0.7), c(0.6)),
        (c(2.7), c(SQRT_2)),
        (c(0.3), cx(1.0, 1.0)),
        (c(2.0), cx(1.0, 1.0)),
        (cx(-1.5, 2.0), cx(1.0, 1.0)),
        (c(-3.3), c(2.5)),
        (cx(1.5, -3.0), c(0.1)),
        (c(4.0), c(0.3)),
        (c(0.999), c(1.0)),
        (cx(-0.7, -0.4), cx(2.0, -0.5)),
        (c(6.5), c(5.0)),
    ];
    pts.iter().map(|&(s, a)| IdentityCase::new(IdentityId::HermiteVsEm).with("s", s).with("a", a)).collect()
}

pub fn lommel_hurwitz_cases() -> Vec<IdentityCase> {
    [(-1.5, 0.5), (2.5, 1.0), (1.3, SQRT_2)]
        .iter()
        .map(|&(s, a)| IdentityCase::new(IdentityId::LommelHurwitzExpansion).with("s", s).with("a", a).with("K", 2000.0))
        .collect()
}

pub fn masirevic_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(IdentityId::HalfOrderSumClosedForm).with("s", -2.0).with("a", 1.0 / 3.0).with("K", 5000.0),
        IdentityCase::new(IdentityId::HalfOrderSumAtOne).with("s", -3.0).with("K", 5000.0),
        IdentityCase::new(IdentityId::MasirevicSum2).with("m", 1.0).with("mu", 2.0).with("x", 2.0 * PI).with("K", 5000.0),
        IdentityCase::new(IdentityId::MasirevicSum2).with("m", 1.0).with("mu", 2.5).with("x", 2.0 * PI).with("K", 5000.0),
        IdentityCase::new(IdentityId::MasirevicSum).with("m", 0.0).with("mu", 1.5).with("nu", 0.5).with("x", PI).with("K", 5000.0),
        IdentityCase::new(IdentityId::MasirevicSum).with("m", 1.0).with("mu", 1.0).with("nu", 0.5).with("x", PI).with("K", 2000.0),
    ]
}

/// (s, z) points of the Mellin–Barnes grid.
pub fn mellin_grid() -> Vec<(Complex64, f64)> {
    vec![
        (c(-0.3), 0.2),
        (c(-0.5), 0.5),
        (c(-0.7), 0.9),
        (c(-1.2), 0.3),
        (c(-1.5), 0.5),
        (cx(-1.8, 0.4), 0.7),
        (c(-2.2), 0.45),
        (c(-2.5), 0.15),
        (c(-2.7), 0.9),
        (cx(-0.9, -1.1), 0.6),
        (c(-2.95), 0.35),
        (cx(-3.0, 0.5), 0.8),
    ]
}

pub fn mellin_cases() -> Vec<IdentityCase> {
    mellin_grid().iter().map(|&(s, z)| IdentityCase::new(IdentityId::MellinTriple).with("s", s).with("z", z)).collect()
}

pub fn modular_cases() -> Vec<IdentityCase> {
    let mut out: Vec<IdentityCase> = [(1.3, 2.0), (0.8, SQRT_2), (1.5, 3.0)]
        .iter()
        .map(|&(s, a)| IdentityCase::new(IdentityId::ModularTransformation).with("s", s).with("alpha", a).with("K", 5000.0))
        .collect();
    for (s, a) in [(1.5, 1.0), (1.2, 2.0)] {
        out.push(
            IdentityCase::new(IdentityId::PhiLatticeEquality).with("s", s).with("alpha", a).with("N", 2000.0).with("K", 5000.0),
        );
    }
    out
}

pub fn xi_cases() -> Vec<IdentityCase> {
    vec![
        IdentityCase::new(IdentityId::XiIntegralEquality).with("s", 1.5).with("alpha", 1.0).with("K", 5000.0),
        IdentityCase::new(IdentityId::XiIntegralEquality).with("s", 1.2).with("alpha", 2.0).with("K", 5000.0).with_tolerances(
            1e-12 * tolerance_scale(),
            1e-4 * tolerance_scale(),
        ),
    ]
}

/// The full acceptance grid.
pub fn default_suite() -> Vec<IdentityCase> {
    let mut out = lemma_cases();
    out.extend(hurwitz_formula_cases());
    out.extend(functional_equation_cases());
    out.extend(hermite_cases());
    out.extend(lommel_hurwitz_cases());
    out.extend(masirevic_cases());
    out.extend(mellin_cases());
    out.extend(modular_cases());
    out.extend(xi_cases());
    out
}
