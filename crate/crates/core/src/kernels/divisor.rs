use num_complex::Complex64;

use crate::series::CompensatedSum;
use crate::{real, rpow};

/// σ_s(n) = Σ_{d | n} d^s by trial division up to √n.
///
/// Returns 0 for n = 0.
pub fn sigma_divisor(s: Complex64, n: u64) -> Complex64 {
    if n == 0 {
        return real(0.0);
    }
    let mut acc = CompensatedSum::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc.add(rpow(d as f64, s));
            let e = n / d;
            if e != d {
                acc.add(rpow(e as f64, s));
            }
        }
        d += 1;
    }
    acc.value()
}
