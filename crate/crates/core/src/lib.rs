//! Hurwitz zeta, Lommel functions and Mellin–Barnes kernels.
//!
//! Everything in this crate is pure arithmetic on [`Complex64`] values and
//! builds under `no_std` with an allocator. The std companion crate `hl`
//! carries the identity harness, report formats and the command-line tool.
//!
//! Layout:
//!
//! - [`kernels`]: gamma, log-gamma, ₁F₂, Bessel J/Y, divisor sums.
//! - [`zeta`]: Riemann and Hurwitz zeta (Euler–Maclaurin, Hermite integral,
//!   Hurwitz's Fourier expansion), φ(s,x), ξ and Ξ.
//! - [`lommel`]: s_{μ,ν}, S_{μ,ν}, the half-order family S_{−s−1/2,1/2},
//!   Lewis's 𝒞_s, the contiguous relation and Maširević-type sums.
//! - [`mellin`]: the Mellin–Barnes integral I_s(z) by line quadrature,
//!   residues and closed form, plus the exponential–arctangent integral.
//! - [`quad`] and [`series`]: quadrature rules and summation control.

#![no_std]
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod kernels;
pub mod lommel;
pub mod mellin;
pub mod quad;
pub mod series;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// Complex value at working (double) precision.
pub type ComplexValue = Complex64;

#[inline]
pub(crate) fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub(crate) fn real(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Rejects values with a NaN or infinite part.
pub(crate) fn finite(z: Complex64, function: &'static str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(function))
    }
}

/// `base^s` for a positive real base; exact real arithmetic when `s` is real.
#[inline]
pub(crate) fn rpow(base: f64, s: Complex64) -> Complex64 {
    if s.im == 0.0 {
        real(base.powf(s.re))
    } else {
        (s * base.ln()).exp()
    }
}

/// Principal `z^s`; uses real `powf` when both are real and `z > 0`.
#[inline]
pub(crate) fn cpow(z: Complex64, s: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re > 0.0 {
        rpow(z.re, s)
    } else if z == Complex64::new(0.0, 0.0) {
        if s.re > 0.0 {
            z
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        }
    } else {
        (s * z.ln()).exp()
    }
}

/// True when `z` is one of 0, −1, −2, ….
#[inline]
pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}
