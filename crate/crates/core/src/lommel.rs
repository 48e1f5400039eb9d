//! Lommel functions s_{μ,ν} and S_{μ,ν}, the half-order family
//! S_{−s−1/2,1/2}, Lewis's 𝒞_s, the contiguous relation and Maširević-type
//! series.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::kernels::{bessel_j, bessel_j_complex, ccos_pi, csin_pi, gamma, hyp1f2, recip_gamma, sigma_divisor};
use crate::quad::gk21_adaptive;
use crate::series::{cancellation_digits, CompensatedSum, SeriesControl, SeriesValue};
use crate::zeta::{exponential_tail_cutoff, hurwitz_zeta_em, periodic_dirichlet, riemann_zeta};
use crate::{c64, cpow, finite, is_nonpositive_integer, real, rpow, Error, Result};

/// Distance below which an order counts as integral or a gamma argument
/// as a pole.
pub const DEGENERACY_TOL: f64 = 1e-8;

/// Digits of ₁F₂ cancellation tolerated by [`lommel_s_small`].
pub const CANCELLATION_BUDGET: f64 = 8.0;

/// Inputs closer than this to a non-negative integer s skip the series route.
const SERIES_EXCLUSION: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LommelOrder {
    pub mu: Complex64,
    pub nu: Complex64,
}

impl LommelOrder {
    pub fn new(mu: Complex64, nu: Complex64) -> Self {
        Self { mu, nu }
    }

    /// (μ, ν) = (−s−1/2, 1/2).
    pub fn half(s: Complex64) -> Self {
        Self { mu: -s - 0.5, nu: real(0.5) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    SeriesSmallZ,
    IntegralLargeZ,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalRoute {
    pub route: Route,
    pub switch_radius: f64,
}

impl Default for EvalRoute {
    fn default() -> Self {
        Self { route: Route::Auto, switch_radius: 10.0 }
    }
}

impl EvalRoute {
    pub fn series() -> Self {
        Self { route: Route::SeriesSmallZ, ..Self::default() }
    }

    pub fn integral() -> Self {
        Self { route: Route::IntegralLargeZ, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.switch_radius > 0.0 && self.switch_radius.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidControl("switch_radius must be positive"))
        }
    }
}

/// Value of S_{−s−1/2,1/2} with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LommelValue {
    pub value: Complex64,
    pub route: Route,
    pub terms_used: usize,
    pub nodes_used: usize,
    pub cancellation_digits: f64,
}

fn near(a: Complex64, b: f64) -> bool {
    (a - b).norm() < DEGENERACY_TOL
}

fn near_nonpositive_integer(z: Complex64) -> bool {
    z.re < DEGENERACY_TOL && z.im.abs() < DEGENERACY_TOL && (z.re - z.re.round()).abs() < DEGENERACY_TOL
}

/// s_{μ,ν}(z) = z^{μ+1} / ((μ−ν+1)(μ+ν+1)) · ₁F₂(1; (μ−ν+3)/2, (μ+ν+3)/2; −z²/4).
pub fn lommel_s_small(order: LommelOrder, z: Complex64, ctl: &SeriesControl) -> Result<SeriesValue> {
    let LommelOrder { mu, nu } = order;
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Branch("lommel_s_small"));
    }
    let d1 = mu - nu + 1.0;
    let d2 = mu + nu + 1.0;
    if near(d1, 0.0) || near(d2, 0.0) {
        return Err(Error::DegenerateOrder(format!("s_{{mu,nu}} with mu = {mu}, nu = {nu}: (mu-nu+1)(mu+nu+1) = 0")));
    }
    if z == real(0.0) {
        return if (mu + 1.0).re > 0.0 {
            Ok(SeriesValue::exact(real(0.0)))
        } else {
            Err(Error::Overflow("lommel_s_small"))
        };
    }
    let h = hyp1f2(real(1.0), (d1 + 2.0) * 0.5, (d2 + 2.0) * 0.5, -(z * z) / 4.0, ctl)?;
    if h.cancellation_digits > CANCELLATION_BUDGET {
        return Err(Error::Cancellation {
            function: "lommel_s_small",
            digits: h.cancellation_digits,
            budget: CANCELLATION_BUDGET,
        });
    }
    let value = finite(cpow(z, mu + 1.0) / (d1 * d2) * h.value, "lommel_s_small")?;
    Ok(SeriesValue { value, ..h })
}

/// S_{μ,ν}(z) for non-integral ν, from s_{μ,ν} and J_{±ν}.
pub fn lommel_big_s(order: LommelOrder, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    let LommelOrder { mu, nu } = order;
    if nu.im == 0.0 && (nu.re - nu.re.round()).abs() < DEGENERACY_TOL {
        return Err(Error::DegenerateOrder(format!("S_{{mu,nu}} needs non-integral nu, got {nu}")));
    }
    let g1 = (mu - nu + 1.0) * 0.5;
    let g2 = (mu + nu + 1.0) * 0.5;
    for g in [g1, g2] {
        if near_nonpositive_integer(g) {
            return Err(Error::Pole { function: "lommel_big_s", at: g });
        }
    }
    Ok(lommel_big_s_series(order, z, ctl)?.value)
}

// S_{μ,ν} with the digits lost in ₁F₂ and in s_{μ,ν} + (Bessel part).
fn lommel_big_s_series(order: LommelOrder, z: Complex64, ctl: &SeriesControl) -> Result<SeriesValue> {
    let LommelOrder { mu, nu } = order;
    let small = lommel_s_small(order, z, ctl)?;
    let (jm, jp) = if nu.im == 0.0 {
        (bessel_j(-nu.re, z, ctl)?, bessel_j(nu.re, z, ctl)?)
    } else {
        (bessel_j_complex(-nu, z, ctl)?, bessel_j_complex(nu, z, ctl)?)
    };
    let pre = rpow(2.0, mu - 1.0) * gamma((mu - nu + 1.0) * 0.5)? * gamma((mu + nu + 1.0) * 0.5)? / csin_pi(nu);
    let bessel = pre * (ccos_pi((mu - nu) * 0.5) * jm - ccos_pi((mu + nu) * 0.5) * jp);
    let value = finite(small.value + bessel, "lommel_big_s")?;
    let digits = small.cancellation_digits + cancellation_digits(small.value.norm().max(bessel.norm()), value);
    if digits > CANCELLATION_BUDGET {
        return Err(Error::Cancellation { function: "lommel_big_s", digits, budget: CANCELLATION_BUDGET });
    }
    Ok(SeriesValue { value, cancellation_digits: digits, ..small })
}

/// Distance from s to the nearest non-negative integer.
fn dist_to_naturals(s: Complex64) -> f64 {
    let k = s.re.round().max(0.0);
    (s - k).norm()
}

/// S_{−s−1/2,1/2}(z) for every complex s and z > 0.
pub fn lommel_big_s_special(s: Complex64, z: f64, route: &EvalRoute) -> Result<Complex64> {
    Ok(lommel_big_s_special_detailed(s, z, route)?.value)
}

/// As [`lommel_big_s_special`], reporting the route taken.
///
/// `Auto` uses the series route for z ≤ `switch_radius` unless s lies
/// within 1e−3 of {0, 1, 2, …}, and the integral route otherwise.
pub fn lommel_big_s_special_detailed(s: Complex64, z: f64, route: &EvalRoute) -> Result<LommelValue> {
    route.validate()?;
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::Domain(format!("S_special: z = {z} must be positive")));
    }
    match route.route {
        Route::SeriesSmallZ => special_series(s, z),
        Route::IntegralLargeZ => special_integral(s, z),
        Route::Auto => {
            if z <= route.switch_radius && dist_to_naturals(s) >= SERIES_EXCLUSION {
                match special_series(s, z) {
                    Ok(v) => Ok(v),
                    Err(Error::Cancellation { .. }) | Err(Error::Pole { .. }) => special_integral(s, z),
                    Err(e) => Err(e),
                }
            } else {
                special_integral(s, z)
            }
        }
    }
}

fn special_series(s: Complex64, z: f64) -> Result<LommelValue> {
    let ctl = SeriesControl::default();
    let order = LommelOrder::half(s);
    if near_nonpositive_integer((order.mu + 0.5) * 0.5) || near_nonpositive_integer((order.mu + 1.5) * 0.5) {
        return Err(Error::Pole { function: "lommel_big_s", at: s });
    }
    let v = lommel_big_s_series(order, real(z), &ctl)?;
    Ok(LommelValue {
        value: v.value,
        route: Route::SeriesSmallZ,
        terms_used: v.terms_used,
        nodes_used: 0,
        cancellation_digits: v.cancellation_digits,
    })
}

// sin(sθ)/s, continuous through s = 0.
fn sinc_s(s: Complex64, theta: f64) -> Complex64 {
    let x = s * theta;
    if x.norm() < 1e-3 {
        let x2 = x * x;
        (real(1.0) - x2 / 6.0 + x2 * x2 / 120.0) * theta
    } else {
        x.sin() / s
    }
}

/// S_{−s−1/2,1/2}(z) = z^{−1/2−s} ∫₀^∞ e^{−t} g(t/z) dt with
/// g(u) = sin(s·arctan u)/s · (1+u²)^{−s/2}.
fn special_integral(s: Complex64, z: f64) -> Result<LommelValue> {
    let p = (-s.re).max(0.0);
    let (cut, _) = exponential_tail_cutoff(1.0, p, 1.0, 0.0, 1e-17)
        .ok_or_else(|| Error::QuadratureFailure(format!("S_special: no cutoff for s = {s}")))?;
    let t_max = cut.max(40.0);
    let f = |t: f64| -> Complex64 {
        let u = t / z;
        (-t).exp() * sinc_s(s, u.atan()) * rpow(1.0 + u * u, -s * 0.5)
    };
    let mut points: Vec<f64> = Vec::with_capacity(10);
    points.push(0.0);
    for b in [0.5 * z, z, 2.0 * z, 1.0, 5.0, 15.0, 40.0] {
        if b > 0.0 && b < t_max {
            points.push(b);
        }
    }
    points.push(t_max);
    points.sort_by(|a, b| a.total_cmp(b));
    points.dedup();
    let r = gk21_adaptive(f, &points, 1e-17, 1e-14, 4000)?;
    let value = finite(rpow(z, -s - 0.5) * r.value, "S_special")?;
    Ok(LommelValue {
        value,
        route: Route::IntegralLargeZ,
        terms_used: 0,
        nodes_used: r.nodes_used,
        cancellation_digits: 0.0,
    })
}

/// Lewis's 𝒞_s(z) = √z·Γ(2s+1)·S_{−2s−1/2,1/2}(z).
pub fn lommel_c(s: Complex64, z: f64, route: &EvalRoute) -> Result<Complex64> {
    let g_arg = s * 2.0 + 1.0;
    if is_nonpositive_integer(g_arg) {
        return Err(Error::Pole { function: "lommel_c", at: s });
    }
    let big = lommel_big_s_special(s * 2.0, z, route)?;
    finite(gamma(g_arg)? * big * z.sqrt(), "lommel_c")
}

/// s_{μ+2,ν}(z) = z^{μ+1} − ((μ+1)² − ν²)·s_{μ,ν}(z).
pub fn contiguous_step(mu: Complex64, nu: Complex64, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    let base = lommel_s_small(LommelOrder::new(mu, nu), z, ctl)?.value;
    let m1 = mu + 1.0;
    finite(cpow(z, m1) - (m1 * m1 - nu * nu) * base, "contiguous_step")
}

/// Coefficients w(k) of a Dirichlet-weighted Lommel series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DirichletWeight {
    /// w(k) = 1.
    Unit,
    /// w(k) = σ_e(k).
    Divisor { exponent: Complex64 },
}

impl DirichletWeight {
    fn at(&self, k: u64) -> Complex64 {
        match *self {
            DirichletWeight::Unit => real(1.0),
            DirichletWeight::Divisor { exponent } => sigma_divisor(exponent, k),
        }
    }
}

// Number of asymptotic terms of S used for the series tails.
const TAIL_TERMS: usize = 6;

/// Σ_{k≥1} w(k)·k^{−p}·S_{−s−1/2,1/2}(kx).
///
/// Terms k ≤ K (K = `ctl.max_terms`) are summed directly. The remainder
/// uses S(z) ~ Σ_j (−1)^j (s+1)_{2j} z^{−s−3/2−2j} and is summed in closed
/// form: Σ_{k>K} w(k) k^{−q} equals ζ(q, K+1) for unit weights and
/// ζ(q)ζ(q−e) minus the first K terms for σ_e weights.
pub fn special_lommel_series(
    s: Complex64,
    x: f64,
    p: Complex64,
    weight: DirichletWeight,
    ctl: &SeriesControl,
    route: &EvalRoute,
) -> Result<SeriesValue> {
    ctl.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("lommel series: x = {x} must be positive")));
    }
    let k_max = ctl.max_terms as u64;
    let w0 = p + s + 1.5;
    let conv = match weight {
        DirichletWeight::Unit => w0,
        DirichletWeight::Divisor { exponent } => w0 - exponent,
    };
    if conv.re <= 1.0 {
        return Err(Error::Domain(format!("lommel series diverges: Re(p + s + 3/2) = {}", conv.re)));
    }
    let exps: Vec<Complex64> = (0..TAIL_TERMS).map(|j| w0 + 2.0 * j as f64).collect();
    let mut partial = [CompensatedSum::new(); TAIL_TERMS];
    let mut acc = CompensatedSum::new();
    let mut nodes = 0;
    let mut terms = 0;
    for k in 1..=k_max {
        let wk = weight.at(k);
        let kf = k as f64;
        let v = lommel_big_s_special_detailed(s, kf * x, route)?;
        nodes += v.nodes_used;
        terms += v.terms_used;
        acc.add(wk * rpow(kf, -p) * v.value);
        if let DirichletWeight::Divisor { .. } = weight {
            for (j, e) in exps.iter().enumerate() {
                partial[j].add(wk * rpow(kf, -*e));
            }
        }
    }
    let mut tail = CompensatedSum::new();
    let mut coef = real(1.0);
    let mut last = 0.0;
    let start = real(k_max as f64 + 1.0);
    for (j, &e) in exps.iter().enumerate() {
        let d = match weight {
            DirichletWeight::Unit => hurwitz_zeta_em(e, start)?,
            DirichletWeight::Divisor { exponent } => {
                riemann_zeta(e)? * riemann_zeta(e - exponent)? - partial[j].value()
            }
        };
        let t = coef * rpow(x, -(s + 1.5 + 2.0 * j as f64)) * d;
        tail.add(t);
        last = t.norm();
        let jf = 2.0 * j as f64;
        coef = -coef * (s + 1.0 + jf) * (s + 2.0 + jf);
    }
    acc.add(tail.value());
    Ok(SeriesValue {
        value: finite(acc.value(), "lommel series")?,
        terms_used: k_max as usize + terms + nodes,
        tail_estimate: last,
        cancellation_digits: 0.0,
    })
}

/// Σ_{k≥1} k^{−p}·s_{−s−1/2,1/2}(kx).
///
/// Splits s = S + Γ(−s) z^{−1/2} sin(z + πs/2): the S part goes through
/// [`special_lommel_series`], the trigonometric part is the Dirichlet series
/// Γ(−s) x^{−1/2} Σ k^{−p−1/2} sin(kx + πs/2).
pub fn half_order_small_lommel_series(
    s: Complex64,
    x: f64,
    p: Complex64,
    ctl: &SeriesControl,
    route: &EvalRoute,
) -> Result<SeriesValue> {
    let big = special_lommel_series(s, x, p, DirichletWeight::Unit, ctl, route)?;
    let q = p + 0.5;
    let trig_ctl = SeriesControl { max_terms: ctl.max_terms.max(20_000), ..*ctl };
    let plus = periodic_dirichlet(q, x, &trig_ctl)?;
    let minus = if q.im == 0.0 {
        SeriesValue { value: plus.value.conj(), ..plus }
    } else {
        periodic_dirichlet(q, -x, &trig_ctl)?
    };
    let phase = c64(0.0, 1.0) * PI * s * 0.5;
    let sines = (phase.exp() * plus.value - (-phase).exp() * minus.value) / c64(0.0, 2.0);
    let trig = gamma(-s)? * x.powf(-0.5) * sines;
    Ok(SeriesValue {
        value: finite(big.value + trig, "small lommel series")?,
        terms_used: big.terms_used + plus.terms_used,
        tail_estimate: big.tail_estimate + plus.tail_estimate,
        cancellation_digits: 0.0,
    })
}

fn require_half_order(nu: f64) -> Result<()> {
    if (nu.abs() - 0.5).abs() > 0.0 {
        return Err(Error::Domain(format!("Masirevic sums are implemented for nu = +-1/2 only, got {nu}")));
    }
    Ok(())
}

/// Both sides of Σ_k s_{μ,ν}(kx)/k^{2m+μ+1} = (closed form), for ν = ±1/2.
///
/// Returns (left side, right side). The left side truncates at
/// K = `ctl.max_terms` direct terms plus closed-form tails.
pub fn masirevic_sum(
    m: u32,
    mu: f64,
    nu: f64,
    x: f64,
    ctl: &SeriesControl,
) -> Result<(SeriesValue, Complex64)> {
    require_half_order(nu)?;
    let nu = nu.abs();
    if !(x > 0.0 && x < 2.0 * PI) {
        return Err(Error::Domain(format!("masirevic_sum: x = {x} must lie in (0, 2pi)")));
    }
    let bound = (-nu - 1.0).max(nu - 2.0).max(-0.5);
    if !(mu > bound) {
        return Err(Error::Domain(format!("masirevic_sum: mu = {mu} must exceed {bound}")));
    }
    let mf = m as f64;
    let s_eff = real(-mu - 0.5);
    let p = real(2.0 * mf + mu + 1.0);
    let lhs = half_order_small_lommel_series(s_eff, x, p, ctl, &EvalRoute::default())?;

    let a = (1.0 + mu - nu) / 2.0;
    let b = (1.0 + mu + nu) / 2.0;
    let half_x = x / 2.0;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let first = real(sign * PI / 2.0)
        * recip_gamma(real(mf + 1.0 + (mu - nu) / 2.0))?
        * recip_gamma(real(mf + 1.0 + (mu + nu) / 2.0))?
        * half_x.powf(2.0 * mf - 1.0);
    let mut sum = CompensatedSum::new();
    for n in 0..=m {
        let nf = n as f64;
        let sgn = if n % 2 == 0 { 1.0 } else { -1.0 };
        let z = riemann_zeta(real(2.0 * mf - 2.0 * nf))?;
        sum.add(
            z * sgn
                * recip_gamma(real(nf + 1.0 + a))?
                * recip_gamma(real(nf + 1.0 + b))?
                * half_x.powf(2.0 * nf),
        );
    }
    let rhs = real(x.powf(mu + 1.0) / 4.0) * gamma(real(a))? * gamma(real(b))? * (first + sum.value());
    Ok((lhs, finite(rhs, "masirevic_sum")?))
}

/// Both sides of Σ_k s_{μ−3/2,1/2}(kx)/k^{2m+μ−1/2} = (closed form) for
/// 0 ≤ x ≤ 2π, m ≥ 1, μ > 0.
pub fn masirevic_sum2(m: u32, mu: f64, x: f64, ctl: &SeriesControl) -> Result<(SeriesValue, Complex64)> {
    if m < 1 {
        return Err(Error::Domain("masirevic_sum2: m must be at least 1".into()));
    }
    if !(mu > 0.0) {
        return Err(Error::Domain(format!("masirevic_sum2: mu = {mu} must be positive")));
    }
    if !(0.0..=2.0 * PI).contains(&x) {
        return Err(Error::Domain(format!("masirevic_sum2: x = {x} must lie in [0, 2pi]")));
    }
    if x == 0.0 {
        return if mu > 0.5 {
            Ok((SeriesValue::exact(real(0.0)), real(0.0)))
        } else {
            Err(Error::Domain(format!("masirevic_sum2: x = 0 needs mu > 1/2, got {mu}")))
        };
    }
    let mf = m as f64;
    let s_eff = real(1.0 - mu);
    let p = real(2.0 * mf + mu - 0.5);
    let lhs = half_order_small_lommel_series(s_eff, x, p, ctl, &EvalRoute::default())?;

    let big = 2.0 * mf + mu;
    let mut sum = CompensatedSum::new();
    for n in 0..=m {
        let nf = n as f64;
        let sgn = if n % 2 == 0 { -1.0 } else { 1.0 };
        let z = riemann_zeta(real(2.0 * nf))?;
        sum.add(z * sgn * recip_gamma(real(big + 1.0 - 2.0 * nf))? * x.powf(-2.0 * nf));
    }
    let inner = real(-PI / x) * recip_gamma(real(big))? + sum.value() * 2.0;
    let sign = if (m - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let rhs = real(0.5 * sign * x.powf(big - 0.5)) * gamma(real(mu - 1.0))? * inner;
    Ok((lhs, finite(rhs, "masirevic_sum2")?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
    }

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn small_lommel_leading_behaviour() {
        let (mu, nu, z) = (0.3, 0.5, 1e-4);
        let v = lommel_s_small(LommelOrder::new(real(mu), real(nu)), real(z), &ctl()).unwrap();
        let lead = v.value / z.powf(mu + 1.0);
        assert!((lead.re - 1.0 / ((mu - nu + 1.0) * (mu + nu + 1.0))).abs() < 1e-8);
    }

    #[test]
    fn small_lommel_reference() {
        // s_{3/2,1/2}(2π), 30-digit series
        let v = lommel_s_small(LommelOrder::half(real(-2.0)), real(2.0 * PI), &ctl()).unwrap();
        assert!(rel(v.value, real(2.5066282746310002)) < 1e-13, "{}", v.value);
    }

    #[test]
    fn degenerate_orders() {
        let r = lommel_s_small(LommelOrder::new(real(-1.0), real(0.0)), real(1.0), &ctl());
        assert!(matches!(r, Err(Error::DegenerateOrder(_))));
        let r = lommel_big_s(LommelOrder::new(real(0.3), real(2.0)), real(1.0), &ctl());
        assert!(matches!(r, Err(Error::DegenerateOrder(_))));
    }

    #[test]
    fn half_order_routes_agree() {
        for (s, z) in [(real(-1.5), PI / 2.0), (c64(0.7, -0.4), 3.0), (real(2.7), 6.0)] {
            let a = lommel_big_s_special(s, z, &EvalRoute::series()).unwrap();
            let b = lommel_big_s_special(s, z, &EvalRoute::integral()).unwrap();
            assert!(rel(a, b) < 1e-10, "s={s} z={z}: {a} vs {b}");
        }
        let v = lommel_big_s_special(real(-1.5), PI / 2.0, &EvalRoute::default()).unwrap();
        assert!(rel(v, real(1.0617408526096452)) < 1e-12);
    }

    #[test]
    fn removable_point_bracketed() {
        let mid = lommel_big_s_special(real(2.0), 3.0, &EvalRoute::default()).unwrap();
        let lo = lommel_big_s_special(real(2.0 - 1e-4), 3.0, &EvalRoute::series()).unwrap();
        let hi = lommel_big_s_special(real(2.0 + 1e-4), 3.0, &EvalRoute::series()).unwrap();
        assert!((mid - (lo + hi) * 0.5).norm() < 1e-5);
    }

    #[test]
    fn contiguous_relation_matches_series() {
        let s = real(-3.0);
        let z = real(5.0);
        let stepped = contiguous_step(-s - 2.5, real(0.5), z, &ctl()).unwrap();
        let direct = lommel_s_small(LommelOrder::half(s), z, &ctl()).unwrap().value;
        assert!(rel(stepped, direct) < 1e-9);
        assert!(matches!(contiguous_step(real(-1.0), real(0.0), real(1.0), &ctl()), Err(Error::DegenerateOrder(_))));
    }

    #[test]
    fn lewis_c_composition() {
        let r = EvalRoute::default();
        let (s, z) = (0.3, 5.0);
        let c = lommel_c(real(s), z, &r).unwrap();
        let direct = gamma(real(2.0 * s + 1.0)).unwrap() * lommel_big_s_special(real(2.0 * s), z, &r).unwrap() * z.sqrt();
        assert_eq!(c, direct);
        let c0 = lommel_c(real(0.0), 2.0, &r).unwrap();
        assert!(rel(c0, lommel_big_s_special(real(0.0), 2.0, &r).unwrap() * 2f64.sqrt()) < 1e-15);
    }

    #[test]
    fn masirevic_first_theorem() {
        let c = ctl().with_max_terms(200);
        let (lhs, rhs) = masirevic_sum(0, 1.5, 0.5, PI, &c).unwrap();
        assert!(rel(lhs.value, rhs) < 1e-9, "{} vs {}", lhs.value, rhs);
        let (lhs, rhs) = masirevic_sum(1, 1.0, 0.5, PI, &c).unwrap();
        assert!(rel(lhs.value, rhs) < 1e-9, "{} vs {}", lhs.value, rhs);
        assert!(matches!(masirevic_sum(0, 1.0, 0.3, 1.0, &c), Err(Error::Domain(_))));
        assert!(matches!(masirevic_sum(0, 1.0, 0.5, 7.0, &c), Err(Error::Domain(_))));
    }

    #[test]
    fn masirevic_second_theorem() {
        let c = ctl().with_max_terms(200);
        let (lhs, rhs) = masirevic_sum2(1, 2.5, 2.0 * PI, &c).unwrap();
        assert!(rel(lhs.value, rhs) < 1e-9, "{} vs {}", lhs.value, rhs);
        let (lhs, rhs) = masirevic_sum2(2, 0.7, 3.0, &c).unwrap();
        assert!(rel(lhs.value, rhs) < 1e-9, "{} vs {}", lhs.value, rhs);
        // s_{1/2,1/2}(2πk) = 0, and so is the closed form
        let (lhs, rhs) = masirevic_sum2(1, 2.0, 2.0 * PI, &c).unwrap();
        assert!(lhs.value.norm() < 1e-12 && rhs.norm() < 1e-12, "{} {}", lhs.value, rhs);
    }

    fn ode_residual<F: Fn(f64) -> Complex64>(y: F, z: f64, nu: f64, mu: f64) -> f64 {
        // central differences, h = 1e-3: truncation ~h²·|y⁗|, rounding ~ε|y|/h²
        let h = 1e-3;
        let (ym, y0, yp) = (y(z - h), y(z), y(z + h));
        let d1 = (yp - ym) / (2.0 * h);
        let d2 = (yp - y0 * 2.0 + ym) / (h * h);
        (d2 * z * z + d1 * z + y0 * (z * z - nu * nu) - z.powf(mu + 1.0)).norm()
    }

    #[test]
    fn inhomogeneous_bessel_equation() {
        let c = ctl();
        let (mu, nu) = (0.4, 0.25);
        let small = |z: f64| lommel_s_small(LommelOrder::new(real(mu), real(nu)), real(z), &c).unwrap().value;
        assert!(ode_residual(small, 1.7, nu, mu) < 1e-6);
        let (mu, nu) = (0.3, 0.25);
        let big = |z: f64| lommel_big_s(LommelOrder::new(real(mu), real(nu)), real(z), &c).unwrap();
        assert!(ode_residual(big, 2.0, nu, mu) < 1e-6);
        let half = |z: f64| lommel_big_s_special(real(1.3), z, &EvalRoute::integral()).unwrap();
        assert!(ode_residual(half, 12.0, 0.5, -1.8) < 1e-6);
    }

    #[test]
    fn bessel_part_is_homogeneous() {
        let c = ctl();
        let order = LommelOrder::new(real(0.3), real(0.25));
        let diff = |z: f64| {
            lommel_big_s(order, real(z), &c).unwrap() - lommel_s_small(order, real(z), &c).unwrap().value
        };
        let h = 1e-3;
        let z = 2.0;
        let (ym, y0, yp) = (diff(z - h), diff(z), diff(z + h));
        let r = (yp - y0 * 2.0 + ym) / (h * h) * z * z + (yp - ym) / (2.0 * h) * z + y0 * (z * z - 0.0625);
        assert!(r.norm() < 1e-6);
    }

    #[test]
    fn big_s_matches_integral_route() {
        // S_{-1,1/2} is the half-order family at s = 1/2
        let v = lommel_big_s(LommelOrder::new(real(-1.0), real(0.5)), real(3.0), &ctl()).unwrap();
        let w = lommel_big_s_special(real(0.5), 3.0, &EvalRoute::integral()).unwrap();
        assert!(rel(v, w) < 1e-9);
    }

    #[test]
    fn large_argument_decay() {
        let s = real(1.3);
        let r = EvalRoute::default();
        let scaled: Vec<f64> = [20.0, 40.0, 80.0]
            .iter()
            .map(|&z| (lommel_big_s_special(s, z, &r).unwrap() * rpow(z, s + 1.5)).norm())
            .collect();
        for v in &scaled {
            assert!((v - 1.0).abs() < 0.05, "{scaled:?}");
        }
        assert!((scaled[2] - 1.0).abs() < (scaled[0] - 1.0).abs());
    }

    #[test]
    fn continuous_through_naturals() {
        let r = EvalRoute::integral();
        for k in [1.0, 2.0, 3.0] {
            let vals: Vec<Complex64> =
                [-2e-4, -1e-4, 0.0, 1e-4, 2e-4].iter().map(|d| lommel_big_s_special(real(k + d), 4.0, &r).unwrap()).collect();
            for w in vals.windows(2) {
                assert!((w[1] - w[0]).norm() < 1e-3 * vals[2].norm());
            }
            let second = vals[0] - vals[2] * 2.0 + vals[4];
            assert!(second.norm() < 1e-6 * vals[2].norm().max(1.0));
        }
    }

    #[test]
    fn contiguous_twice() {
        let c = ctl();
        let (mu, nu, z) = (c64(0.3, 0.2), real(0.7), real(1.4));
        let once = |m: Complex64| contiguous_step(m, nu, z, &c).unwrap();
        let s2 = once(mu);
        let m1 = mu + 3.0;
        let s4 = cpow(z, m1) - (m1 * m1 - nu * nu) * s2;
        let direct = lommel_s_small(LommelOrder::new(mu + 4.0, nu), z, &c).unwrap().value;
        assert!(rel(s4, direct) < 1e-8);
    }

    #[test]
    fn contiguous_degenerate_base_via_series() {
        // s_{1,0}(z) = 1 − J_0(z); the μ = −1, ν = 0 base order has no series value
        let c = ctl();
        let v = lommel_s_small(LommelOrder::new(real(1.0), real(0.0)), real(1.0), &c).unwrap().value;
        let j0 = bessel_j(0.0, real(1.0), &c).unwrap();
        assert!(rel(v, real(1.0) - j0) < 1e-14);
    }

    #[test]
    fn masirevic_zero_order_closed_form() {
        // m = 0, μ = −s−1/2, ν = 1/2, x = 2πa at s = −2, a = 1/3
        let (s, a) = (-2.0, 1.0 / 3.0);
        let (_, rhs) = masirevic_sum(0, -s - 0.5, 0.5, 2.0 * PI * a, &ctl().with_max_terms(10)).unwrap();
        let expected = -(0.5 * a.powf(-s) + a.powf(1.0 - s) / (s - 1.0))
            / (2.0 * s * a.sqrt() * (2.0 * PI).powf(s - 0.5));
        assert!(rel(rhs, real(expected)) < 1e-12);
        let (_, rhs) = masirevic_sum(1, 1.0, -0.5, PI, &ctl().with_max_terms(10)).unwrap();
        assert!(rhs.is_finite());
    }

    #[test]
    fn masirevic_second_theorem_closed_form_instance() {
        // m = 1, μ = −s−1 at s = −3.5, x = 2π
        let s: f64 = -3.5;
        let (lhs, rhs) = masirevic_sum2(1, -s - 1.0, 2.0 * PI, &ctl().with_max_terms(400)).unwrap();
        let g = |x: f64| gamma(real(x)).unwrap().re;
        let expected = 0.5
            * (2.0 * PI).powf(0.5 - s)
            * g(-s - 2.0)
            * (-1.0 / (2.0 * g(1.0 - s)) + 1.0 / g(2.0 - s) + 1.0 / (12.0 * g(-s)));
        assert!(rel(rhs, real(expected)) < 1e-12);
        assert!(rel(lhs.value, rhs) < 1e-8, "{} vs {}", lhs.value, rhs);
    }

    #[test]
    fn masirevic_second_theorem_domain() {
        let c = ctl();
        assert_eq!(masirevic_sum2(1, 0.8, 0.0, &c).unwrap().1, real(0.0));
        assert!(matches!(masirevic_sum2(1, 0.3, 0.0, &c), Err(Error::Domain(_))));
        assert!(matches!(masirevic_sum2(0, 1.5, 1.0, &c), Err(Error::Domain(_))));
        assert!(matches!(masirevic_sum2(1, 1.5, 7.0, &c), Err(Error::Domain(_))));
        assert!(matches!(masirevic_sum2(1, 1.0, 1.0, &c), Err(Error::Pole { .. })));
    }

    #[test]
    fn weighted_series_agrees_with_longer_truncation() {
        let r = EvalRoute::default();
        let w = DirichletWeight::Divisor { exponent: real(-0.3) };
        let a = special_lommel_series(real(1.3), 2.0 * PI * 2.0, real(-0.8), w, &ctl().with_max_terms(200), &r).unwrap();
        let b = special_lommel_series(real(1.3), 2.0 * PI * 2.0, real(-0.8), w, &ctl().with_max_terms(800), &r).unwrap();
        assert!(rel(a.value, b.value) < 1e-9, "{} {}", a.value, b.value);
        let r2 = special_lommel_series(real(0.0), 1.0, real(-1.0), DirichletWeight::Unit, &ctl(), &r);
        assert!(matches!(r2, Err(Error::Domain(_))));
    }
}
