//! Quadrature rules: Gauss–Legendre panels, tanh–sinh, adaptive
//! Gauss–Kronrod (21 points) for complex-valued integrands on finite
//! intervals.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::series::CompensatedSum;
use crate::{real, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadScheme {
    GaussLegendrePanels,
    TanhSinh,
}

/// Node and panel policy for the semi-infinite integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub scheme: QuadScheme,
    /// Minimum number of panels on [0, x_max].
    pub panel_count: usize,
    pub nodes_per_panel: usize,
    /// Truncation point; `None` picks it from the integrand's tail bound.
    pub x_max: Option<f64>,
    pub abs_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            scheme: QuadScheme::GaussLegendrePanels,
            panel_count: 16,
            nodes_per_panel: 20,
            x_max: None,
            abs_tol: 1e-15,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.panel_count == 0 || self.nodes_per_panel < 2 || self.nodes_per_panel > 128 {
            return Err(Error::InvalidControl("panel_count >= 1 and 2 <= nodes_per_panel <= 128"));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidControl("abs_tol must be positive"));
        }
        if let Some(x) = self.x_max {
            if !(x > 0.0 && x.is_finite()) {
                return Err(Error::InvalidControl("x_max must be positive and finite"));
            }
        }
        Ok(())
    }

    /// ∫_a^b f using the configured scheme, with at least `min_panels`
    /// Gauss–Legendre panels.
    pub fn integrate<F>(&self, f: F, a: f64, b: f64, min_panels: usize) -> QuadResult
    where
        F: FnMut(f64) -> Complex64,
    {
        match self.scheme {
            QuadScheme::GaussLegendrePanels => {
                let rule = gauss_legendre(self.nodes_per_panel);
                let panels = min_panels.max(self.panel_count);
                QuadResult {
                    value: gl_panels(f, a, b, panels, &rule),
                    nodes_used: panels * rule.len(),
                    tail_bound: 0.0,
                }
            }
            QuadScheme::TanhSinh => tanh_sinh(f, a, b, self.abs_tol),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub nodes_used: usize,
    /// Bound on the truncated tail (or the discretization error estimate).
    pub tail_bound: f64,
}

/// Gauss–Legendre nodes and weights on [−1, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push((x, w));
    }
    rule
}

/// Composite Gauss–Legendre with equal panels, summed in a fixed order.
pub fn gl_panels<F>(mut f: F, a: f64, b: f64, panels: usize, rule: &[(f64, f64)]) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let h = (b - a) / panels as f64;
    let mut acc = CompensatedSum::new();
    for p in 0..panels {
        let lo = a + h * p as f64;
        let mid = lo + 0.5 * h;
        let mut panel = real(0.0);
        for &(x, w) in rule {
            panel += f(mid + 0.5 * h * x) * w;
        }
        acc.add(panel * (0.5 * h));
    }
    acc.value()
}

/// Gauss–Legendre on explicit breakpoints, `panels_per_gap` panels each.
pub fn gl_breakpoints<F>(mut f: F, points: &[f64], panels_per_gap: usize, rule: &[(f64, f64)]) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let mut acc = CompensatedSum::new();
    for w in points.windows(2) {
        acc.add(gl_panels(&mut f, w[0], w[1], panels_per_gap, rule));
    }
    acc.value()
}

/// Tanh–sinh on [a, b], halving the step until successive levels agree.
pub fn tanh_sinh<F>(mut f: F, a: f64, b: f64, abs_tol: f64) -> QuadResult
where
    F: FnMut(f64) -> Complex64,
{
    let c = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    let t_max = 6.0;
    let mut h = 0.5;
    let mut nodes = 0usize;
    let mut eval = |t: f64, nodes: &mut usize| -> Complex64 {
        let u = 0.5 * PI * t.sinh();
        let ch = u.cosh();
        let x = u.tanh();
        let w = 0.5 * PI * t.cosh() / (ch * ch);
        // distance to the nearer endpoint, kept exact near ±1
        let off = r / (u.abs().exp() * ch);
        let xx = if x >= 0.0 { b - off } else { a + off };
        if w == 0.0 || xx <= a || xx >= b {
            return real(0.0);
        }
        *nodes += 1;
        f(if x.abs() < 0.5 { c + r * x } else { xx }) * w
    };
    let mut sum = eval(0.0, &mut nodes);
    let mut k = 1;
    while k as f64 * h <= t_max {
        let t = k as f64 * h;
        sum += eval(t, &mut nodes) + eval(-t, &mut nodes);
        k += 1;
    }
    let mut prev = sum * h * r;
    let mut err = f64::INFINITY;
    for _ in 0..8 {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= t_max {
            let t = k as f64 * h;
            sum += eval(t, &mut nodes) + eval(-t, &mut nodes);
            k += 2;
        }
        let cur = sum * h * r;
        err = (cur - prev).norm();
        prev = cur;
        if err <= abs_tol.max(1e-15 * cur.norm()) {
            break;
        }
    }
    QuadResult { value: prev, nodes_used: nodes, tail_bound: err }
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

fn gk21<F>(f: &mut F, a: f64, b: f64) -> (Complex64, f64)
where
    F: FnMut(f64) -> Complex64,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[10];
    let mut gauss = real(0.0);
    for j in 0..10 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kron += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let kron = kron * h;
    let gauss = gauss * h;
    (kron, (kron - gauss).norm())
}

/// Adaptive Gauss–Kronrod on the initial intervals given by `points`.
///
/// Bisects the interval with the largest error estimate until the summed
/// estimate falls below `max(abs_tol, rel_tol·|I|)`.
pub fn gk21_adaptive<F>(
    mut f: F,
    points: &[f64],
    abs_tol: f64,
    rel_tol: f64,
    max_intervals: usize,
) -> Result<QuadResult>
where
    F: FnMut(f64) -> Complex64,
{
    let mut work: Vec<(f64, f64, Complex64, f64)> = Vec::new();
    for w in points.windows(2) {
        if w[1] > w[0] {
            let (v, e) = gk21(&mut f, w[0], w[1]);
            work.push((w[0], w[1], v, e));
        }
    }
    loop {
        let mut total = CompensatedSum::new();
        let mut err = 0.0;
        let mut worst = 0;
        for (i, iv) in work.iter().enumerate() {
            total.add(iv.2);
            err += iv.3;
            if iv.3 > work[worst].3 {
                worst = i;
            }
        }
        let value = total.value();
        if err <= abs_tol.max(rel_tol * value.norm()) || work.is_empty() {
            return Ok(QuadResult { value, nodes_used: 21 * work.len(), tail_bound: err });
        }
        if work.len() >= max_intervals {
            return Err(Error::QuadratureFailure(format!(
                "gk21: error estimate {err:e} after {max_intervals} intervals"
            )));
        }
        let (a, b, _, _) = work[worst];
        let m = 0.5 * (a + b);
        let left = gk21(&mut f, a, m);
        let right = gk21(&mut f, m, b);
        work[worst] = (a, m, left.0, left.1);
        work.push((m, b, right.0, right.1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_integrates_polynomials() {
        let rule = gauss_legendre(20);
        let w: f64 = rule.iter().map(|p| p.1).sum();
        assert!((w - 2.0).abs() < 1e-14);
        let v = gl_panels(|x| real(x.powi(38)), -1.0, 1.0, 1, &rule);
        assert!((v.re - 2.0 / 39.0).abs() < 1e-15);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        let r = tanh_sinh(|x| real(1.0 / x.sqrt()), 0.0, 1.0, 1e-14);
        assert!((r.value.re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn adaptive_oscillatory() {
        let r = gk21_adaptive(|x| Complex64::new(0.0, 30.0 * x).exp(), &[0.0, 1.0], 1e-14, 1e-14, 200)
            .unwrap();
        let exact = (Complex64::new(0.0, 30.0).exp() - 1.0) / Complex64::new(0.0, 30.0);
        assert!((r.value - exact).norm() < 1e-14);
    }

    #[test]
    fn adaptive_reports_failure() {
        let r = gk21_adaptive(|x| real((1.0 / x).sin()), &[1e-9, 1.0], 1e-15, 1e-15, 4);
        assert!(matches!(r, Err(Error::QuadratureFailure(_))));
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::default().validate().is_ok());
        let bad = QuadratureSpec { abs_tol: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
    }
}
