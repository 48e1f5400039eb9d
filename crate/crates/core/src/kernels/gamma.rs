use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{c64, finite, is_nonpositive_integer, real, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];
const LN_SQRT_2PI: f64 = 0.91893853320467274178;
const SQRT_2PI: f64 = 2.5066282746310005024;

// Beyond this modulus Γ is evaluated through its logarithm.
const DIRECT_LIMIT: f64 = 140.0;

/// sin(πx) with exact argument reduction; zero at every integer.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = (2.0 * x).round();
    let f = x - 0.5 * n;
    match (n as i64).rem_euclid(4) {
        0 => (PI * f).sin(),
        1 => (PI * f).cos(),
        2 => -(PI * f).sin(),
        _ => -(PI * f).cos(),
    }
}

/// cos(πx) with exact argument reduction; zero at every half-integer.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let n = (2.0 * x).round();
    let f = x - 0.5 * n;
    match (n as i64).rem_euclid(4) {
        0 => (PI * f).cos(),
        1 => -(PI * f).sin(),
        2 => -(PI * f).cos(),
        _ => (PI * f).sin(),
    }
}

/// sin(πz) for complex z.
pub fn csin_pi(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    c64(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

/// cos(πz) for complex z.
pub fn ccos_pi(z: Complex64) -> Complex64 {
    let y = PI * z.im;
    c64(cos_pi(z.re) * y.cosh(), -sin_pi(z.re) * y.sinh())
}

// log sin(πz), free of overflow for large |Im z|.
fn log_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 20.0 {
        return csin_pi(z).ln();
    }
    let i = c64(0.0, 1.0);
    if z.im > 0.0 {
        // sin(πz) = (i/2) e^{-iπz} (1 - e^{2iπz})
        c64(-core::f64::consts::LN_2, PI / 2.0) - i * PI * z
            + (real(1.0) - (i * 2.0 * PI * z).exp()).ln()
    } else {
        c64(-core::f64::consts::LN_2, -PI / 2.0) + i * PI * z
            + (real(1.0) - (-i * 2.0 * PI * z).exp()).ln()
    }
}

fn lanczos_sum(zm1: Complex64) -> Complex64 {
    let mut acc = real(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm1 + i as f64);
    }
    acc
}

// Γ(z) for Re z ≥ 1/2 and |z| ≤ DIRECT_LIMIT.
fn gamma_right(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        let x = z.re - 1.0;
        let mut a = LANCZOS[0];
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            a += c / (x + i as f64);
        }
        let t = x + LANCZOS_G + 0.5;
        let p = t.powf(0.5 * (x + 0.5));
        return real(SQRT_2PI * p * (p * (-t).exp()) * a);
    }
    let zm1 = z - 1.0;
    let t = zm1 + LANCZOS_G + 0.5;
    let a = lanczos_sum(zm1);
    ((zm1 + 0.5) * t.ln() - t).exp() * a * SQRT_2PI
}

fn log_gamma_right(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let t = zm1 + LANCZOS_G + 0.5;
    let a = lanczos_sum(zm1);
    if z.im == 0.0 {
        return real(LN_SQRT_2PI + (zm1.re + 0.5) * t.re.ln() - t.re + a.re.ln());
    }
    (zm1 + 0.5) * t.ln() - t + a.ln() + LN_SQRT_2PI
}

/// Γ(z).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "gamma", at: z });
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Overflow("gamma"));
    }
    if z.norm() > DIRECT_LIMIT || z.im.abs() > 100.0 {
        return finite(log_gamma(z)?.exp(), "gamma");
    }
    let v = if z.re < 0.5 {
        real(PI) / (csin_pi(z) * gamma_right(real(1.0) - z))
    } else {
        gamma_right(z)
    };
    finite(v, "gamma")
}

/// A branch of log Γ(z), continuous on the right half-plane.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { function: "log_gamma", at: z });
    }
    if z.re >= 0.5 {
        Ok(log_gamma_right(z))
    } else {
        Ok(real(PI.ln()) - log_sin_pi(z) - log_gamma_right(real(1.0) - z))
    }
}

/// 1/Γ(z), zero at the poles of Γ.
pub fn recip_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Ok(real(0.0));
    }
    if z.norm() > DIRECT_LIMIT || z.im.abs() > 100.0 {
        return finite((-log_gamma(z)?).exp(), "recip_gamma");
    }
    if z.re < 0.5 {
        finite(csin_pi(z) * gamma_right(real(1.0) - z) / PI, "recip_gamma")
    } else {
        finite(gamma_right(z).inv(), "recip_gamma")
    }
}

/// Rising factorial (s)_n.
pub fn pochhammer(s: Complex64, n: usize) -> Complex64 {
    let mut p = real(1.0);
    for k in 0..n {
        p *= s + k as f64;
    }
    p
}
