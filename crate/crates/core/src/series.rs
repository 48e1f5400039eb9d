//! Truncation policy and summation helpers shared by every infinite sum in
//! the crate.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

/// How a slowly convergent series is finished off once the direct partial
/// sum stops being useful.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Acceleration {
    /// Plain partial sums; stop on the term-size criterion or fail.
    None,
    /// Euler's transformation for oscillatory Dirichlet series, combined with
    /// closed-form tails for the monotone parts of the Lommel series.
    EulerTransform,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub max_terms: usize,
    pub rel_tol: f64,
    /// Number of consecutive terms below `rel_tol` required before stopping.
    pub consecutive_small: usize,
    pub acceleration: Acceleration,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            max_terms: 20_000,
            rel_tol: 1e-16,
            consecutive_small: 3,
            acceleration: Acceleration::EulerTransform,
        }
    }
}

impl SeriesControl {
    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_acceleration(mut self, acceleration: Acceleration) -> Self {
        self.acceleration = acceleration;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidControl("rel_tol must lie in (0, 1)"));
        }
        if self.max_terms < 8 {
            return Err(Error::InvalidControl("max_terms must be at least 8"));
        }
        if self.consecutive_small < 2 {
            return Err(Error::InvalidControl("consecutive_small must be at least 2"));
        }
        Ok(())
    }
}

/// A summed value with the bookkeeping callers report as diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub terms_used: usize,
    /// Magnitude estimate of everything that was not summed explicitly.
    pub tail_estimate: f64,
    /// log10(max |partial sum| / |final value|).
    pub cancellation_digits: f64,
}

impl SeriesValue {
    pub(crate) fn exact(value: Complex64) -> Self {
        Self {
            value,
            terms_used: 0,
            tail_estimate: 0.0,
            cancellation_digits: 0.0,
        }
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: Complex64,
    comp: Complex64,
}

#[inline]
fn two_sum(sum: f64, comp: &mut f64, x: f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *comp += (sum - t) + x;
    } else {
        *comp += (x - t) + sum;
    }
    t
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: Complex64) {
        self.sum.re = two_sum(self.sum.re, &mut self.comp.re, x.re);
        self.sum.im = two_sum(self.sum.im, &mut self.comp.im, x.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

/// Fixed-order pairwise summation; the result depends only on the slice.
pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        n if n <= 8 => values.iter().fold(Complex64::new(0.0, 0.0), |acc, v| acc + v),
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

/// Counts consecutive small terms for the stopping rule.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SmallRun {
    needed: usize,
    run: usize,
}

impl SmallRun {
    pub(crate) fn new(needed: usize) -> Self {
        Self { needed, run: 0 }
    }

    /// Records one term; returns true once enough consecutive small terms
    /// have been seen.
    pub(crate) fn push(&mut self, small: bool) -> bool {
        if small {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= self.needed
    }
}

pub(crate) fn cancellation_digits(max_partial: f64, value: Complex64) -> f64 {
    let v = value.norm();
    if max_partial <= 0.0 {
        return 0.0;
    }
    let ratio = max_partial / v.max(f64::MIN_POSITIVE);
    if ratio <= 1.0 {
        0.0
    } else {
        ratio.log10()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn control_validation() {
        assert!(SeriesControl::default().validate().is_ok());
        let mut c = SeriesControl { rel_tol: 1.0, ..SeriesControl::default() };
        assert!(c.validate().is_err());
        c = SeriesControl::default().with_max_terms(4);
        assert!(c.validate().is_err());
        c = SeriesControl::default();
        c.consecutive_small = 1;
        assert!(c.validate().is_err());
    }

    #[test]
    fn compensated_sum_recovers_small_addends() {
        let mut s = CompensatedSum::new();
        s.add(Complex64::new(1e16, 0.0));
        for _ in 0..10 {
            s.add(Complex64::new(1.0, 1.0));
        }
        s.add(Complex64::new(-1e16, 0.0));
        assert_eq!(s.value(), Complex64::new(10.0, 10.0));
    }

    #[test]
    fn pairwise_is_order_fixed() {
        let v: Vec<Complex64> = (0..1000)
            .map(|k| Complex64::new(1.0 / (k as f64 + 1.0), (k as f64).sin()))
            .collect();
        assert_eq!(pairwise_sum(&v), pairwise_sum(&v.clone()));
    }
}
