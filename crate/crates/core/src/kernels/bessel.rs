use alloc::format;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::{cos_pi, recip_gamma, sin_pi};
use crate::series::{CompensatedSum, SeriesControl, SmallRun};
use crate::{cpow, is_nonpositive_integer, real, Error, Result};

/// J_ν(z) for real order.
///
/// Orders ±1/2 use the trigonometric closed forms; everything else sums
/// the ascending series.
pub fn bessel_j(nu: f64, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Branch("bessel_j"));
    }
    if nu == 0.5 || nu == -0.5 {
        if z == real(0.0) {
            return if nu > 0.0 {
                Ok(real(0.0))
            } else {
                Err(Error::Overflow("bessel_j"))
            };
        }
        let pre = (real(2.0 / PI) / z).sqrt();
        return Ok(if nu > 0.0 { pre * z.sin() } else { pre * z.cos() });
    }
    bessel_j_complex(real(nu), z, ctl)
}

/// J_ν(z) for complex order by the ascending series.
pub(crate) fn bessel_j_complex(nu: Complex64, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    ctl.validate()?;
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Branch("bessel_j"));
    }
    // J_{-n} = (-1)^n J_n
    if is_nonpositive_integer(nu) && nu.re < 0.0 {
        let n = -nu.re;
        let v = bessel_j_complex(real(n), z, ctl)?;
        return Ok(if (n as i64) % 2 == 0 { v } else { -v });
    }
    if z == real(0.0) {
        return if nu == real(0.0) {
            Ok(real(1.0))
        } else if nu.re > 0.0 {
            Ok(real(0.0))
        } else {
            Err(Error::Overflow("bessel_j"))
        };
    }
    let w = -(z * z) / 4.0;
    let mut term = recip_gamma(nu + 1.0)?;
    let mut sum = CompensatedSum::new();
    sum.add(term);
    let mut run = SmallRun::new(ctl.consecutive_small);
    let k_min = z.norm().ceil() as usize + 2;
    let mut done = false;
    for k in 0..ctl.max_terms {
        let kf = k as f64 + 1.0;
        term = term * w / (kf * (nu + kf));
        sum.add(term);
        let mag = term.norm();
        let small = mag <= ctl.rel_tol * sum.value().norm() || mag == 0.0;
        if run.push(small) && k + 1 >= k_min {
            done = true;
            break;
        }
    }
    if !done {
        return Err(Error::NoConvergence { function: "bessel_j", terms: ctl.max_terms });
    }
    Ok(cpow(z / 2.0, nu) * sum.value())
}

/// Y_ν(z) for non-integer real order.
pub fn bessel_y(nu: f64, z: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if (nu - nu.round()).abs() < 1e-8 {
        return Err(Error::DegenerateOrder(format!("bessel_y needs non-integer order, got {nu}")));
    }
    let jp = bessel_j(nu, z, ctl)?;
    let jm = bessel_j(-nu, z, ctl)?;
    Ok((jp * cos_pi(nu) - jm) / sin_pi(nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn anchors() {
        assert_eq!(bessel_j(0.0, real(0.0), &ctl()).unwrap(), real(1.0));
        assert!(bessel_j(0.5, real(PI), &ctl()).unwrap().norm() < 1e-16);
        assert!(bessel_j(-0.5, real(PI / 2.0), &ctl()).unwrap().norm() < 1e-16);
        // Y_{1/2}(z) = −J_{−1/2}(z) = −√(2/(πz))·cos z
        let y = bessel_y(0.5, real(PI / 2.0), &ctl()).unwrap();
        assert!(y.norm() < 1e-16);
        let y = bessel_y(0.5, real(PI), &ctl()).unwrap();
        assert!((y.re - 2f64.sqrt() / PI).abs() < 1e-15);
        let z = c64(1.3, 0.4);
        assert_eq!(bessel_y(0.5, z, &ctl()).unwrap(), -bessel_j(-0.5, z, &ctl()).unwrap());
    }

    #[test]
    fn half_order_closed_form_matches_series() {
        for x in [0.5, 1.0, 2.0, 5.0, 8.0] {
            let z = real(x);
            let closed = bessel_j(0.5, z, &ctl()).unwrap();
            let series = bessel_j_complex(real(0.5), z, &ctl()).unwrap();
            assert!((closed - series).norm() <= 1e-12 * closed.norm().max(1e-3));
            let scaled = closed * (PI * x / 2.0).sqrt();
            assert!((scaled.re - x.sin()).abs() <= 1e-10 * x.sin().abs());
        }
    }

    #[test]
    fn reference_values() {
        let j = bessel_j(0.3, real(1.0), &ctl()).unwrap();
        assert!((j.re - 0.74022247928102045).abs() < 1e-15);
        let y = bessel_y(0.3, real(1.0), &ctl()).unwrap();
        assert!((y.re + 0.24570419535649944).abs() < 1e-10 * 0.2457);
        let j = bessel_j(2.7, c64(3.0, 1.0), &ctl()).unwrap();
        assert!((j - c64(0.43742543763767516, 0.18949169891831472)).norm() < 1e-14);
        let j = bessel_j(-1.3, real(2.0), &ctl()).unwrap();
        assert!((j.re + 0.54965214124572751).abs() < 1e-14);
    }

    #[test]
    fn negative_integer_order_reflection() {
        let a = bessel_j(-3.0, real(2.5), &ctl()).unwrap();
        let b = bessel_j(3.0, real(2.5), &ctl()).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn errors() {
        assert!(matches!(bessel_j(0.3, real(-1.0), &ctl()), Err(Error::Branch(_))));
        assert!(matches!(bessel_y(2.0 + 1e-9, real(1.0), &ctl()), Err(Error::DegenerateOrder(_))));
    }
}
