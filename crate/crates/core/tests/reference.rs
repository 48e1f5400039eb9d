//! Frozen high-precision values; regenerate with `oracle/reference_values.py`.

#![allow(clippy::excessive_precision)]

use std::f64::consts::SQRT_2;

use hl_core::kernels::gamma;
use hl_core::lommel::{lommel_big_s, lommel_big_s_special, lommel_s_small, EvalRoute, LommelOrder};
use hl_core::mellin::{i_s_closed, i_s_line, i_s_residue, lemma_lhs_integral, ContourSpec, LemmaIntegralParams};
use hl_core::quad::QuadratureSpec;
use hl_core::series::{Acceleration, SeriesControl};
use hl_core::zeta::{hurwitz_zeta_em, hurwitz_zeta_hermite, periodic_dirichlet, riemann_zeta};
use hl_core::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn r(re: f64) -> Complex64 {
    c(re, 0.0)
}

#[track_caller]
fn close(got: Complex64, want: Complex64, tol: f64) {
    let err = (got - want).norm() / want.norm().max(1e-300);
    assert!(err <= tol, "got {got}, want {want}, rel {err:e}");
}

#[test]
fn gamma_off_axis() {
    close(gamma(c(0.3, -2.1)).unwrap(), c(0.053019426201761702, 0.059829016981994705), 1e-13);
}

#[test]
fn riemann_zeta_values() {
    close(riemann_zeta(r(-3.7)).unwrap(), r(0.0025992549871493221), 1e-11);
    close(riemann_zeta(c(2.0, 10.0)).unwrap(), c(1.1979825006741846, -0.079170491720525747), 1e-13);
}

#[test]
fn hurwitz_values_by_two_routes() {
    let quad = QuadratureSpec::default();
    let want = r(0.0249640942195157);
    close(hurwitz_zeta_em(r(-1.2), r(0.7)).unwrap(), want, 1e-11);
    close(hurwitz_zeta_hermite(r(-1.2), r(0.7), &quad).unwrap(), want, 1e-11);
    let want = c(-0.71486313587525987, 0.044932274709826465);
    close(hurwitz_zeta_em(c(0.5, 2.0), r(2.5)).unwrap(), want, 1e-12);
    close(hurwitz_zeta_hermite(c(0.5, 2.0), r(2.5), &quad).unwrap(), want, 1e-12);
}

#[test]
fn periodic_series_accelerated() {
    let ctl = SeriesControl::default().with_acceleration(Acceleration::EulerTransform);
    let v = periodic_dirichlet(r(1.5), 2.0, &ctl).unwrap();
    close(v.value, c(-0.51078834603889137, 0.65943605356728363), 1e-12);
}

#[test]
fn lommel_values() {
    let ctl = SeriesControl::default();
    let v = lommel_s_small(LommelOrder::new(r(0.4), r(0.25)), r(1.7), &ctl).unwrap();
    close(v.value, r(0.85555770230792357), 1e-14);
    let v = lommel_big_s(LommelOrder::new(r(0.3), r(0.25)), r(2.0), &ctl).unwrap();
    close(v, r(0.58064110361863351), 1e-13);
}

#[test]
fn half_order_lommel_values() {
    let route = EvalRoute::default();
    close(lommel_big_s_special(r(2.0), 3.0, &route).unwrap(), r(0.011944113434908348), 1e-12);
    close(lommel_big_s_special(c(-2.0, 1.3), 7.0, &route).unwrap(), c(-2.2068643126667383, -1.6259174100003074), 1e-12);
    close(lommel_big_s_special(r(1.5), 40.0, &route).unwrap(), r(1.5540834193879697e-5), 1e-11);
}

#[test]
fn lemma_integral_values() {
    let quad = QuadratureSpec::default();
    let p = LemmaIntegralParams::new(r(-2.5), 0.25, 1).unwrap();
    close(lemma_lhs_integral(&p, &quad).unwrap().value, r(-0.0058000163064611402), 1e-12);
    let p = LemmaIntegralParams::new(c(2.0, 1.0), SQRT_2, 2).unwrap();
    close(lemma_lhs_integral(&p, &quad).unwrap().value, c(0.0048211578231741699, 0.00046899562662162783), 1e-12);
}

#[test]
fn mellin_barnes_values() {
    let want = r(9.0010512996048176);
    close(i_s_closed(r(-2.2), 0.45).unwrap(), want, 1e-12);
    close(i_s_residue(r(-2.2), r(0.45), 200).unwrap().value, want, 1e-12);
    close(i_s_line(r(-2.2), r(0.45), &ContourSpec::default()).unwrap().value, want, 1e-10);
}
