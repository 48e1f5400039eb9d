use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::series::{cancellation_digits, CompensatedSum, SeriesControl, SeriesValue, SmallRun};
use crate::{is_nonpositive_integer, real, Error, Result};

/// ₁F₂(a1; b1, b2; z) by its term recurrence.
///
/// The returned [`SeriesValue::cancellation_digits`] is
/// log10(max |partial sum| / |result|); callers decide what is acceptable.
pub fn hyp1f2(
    a1: Complex64,
    b1: Complex64,
    b2: Complex64,
    z: Complex64,
    ctl: &SeriesControl,
) -> Result<SeriesValue> {
    ctl.validate()?;
    for b in [b1, b2] {
        if is_nonpositive_integer(b) {
            return Err(Error::Pole { function: "hyp1f2", at: b });
        }
    }
    if z == real(0.0) {
        return Ok(SeriesValue::exact(real(1.0)));
    }
    // terms only decrease once n exceeds roughly sqrt|z|
    let n_min = z.norm().sqrt().ceil() as usize + 2;
    let mut term = real(1.0);
    let mut sum = CompensatedSum::new();
    sum.add(term);
    let mut max_partial: f64 = 1.0;
    let mut max_term: f64 = 1.0;
    let mut run = SmallRun::new(ctl.consecutive_small);
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        term = term * (a1 + nf) * z / ((b1 + nf) * (b2 + nf) * (nf + 1.0));
        sum.add(term);
        let partial = sum.value();
        let mag = term.norm();
        max_partial = max_partial.max(partial.norm());
        max_term = max_term.max(mag);
        if !mag.is_finite() {
            return Err(Error::Overflow("hyp1f2"));
        }
        let small = mag == 0.0 || mag <= (ctl.rel_tol * partial.norm()).max(f64::EPSILON * max_term);
        if (run.push(small) && n + 1 >= n_min) || mag == 0.0 {
            return Ok(SeriesValue {
                value: partial,
                terms_used: n + 2,
                tail_estimate: mag,
                cancellation_digits: cancellation_digits(max_partial, partial),
            });
        }
    }
    Err(Error::NoConvergence { function: "hyp1f2", terms: ctl.max_terms })
}
