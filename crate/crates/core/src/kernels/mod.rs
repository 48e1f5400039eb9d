//! Elementary special functions composed by the rest of the crate.

mod bernoulli;
mod bessel;
mod divisor;
mod gamma;
mod hyp;

pub(crate) use bernoulli::B2J_OVER_FACTORIAL;
#[allow(unused_imports)]
pub(crate) use bessel::bessel_j_complex;
pub use bessel::{bessel_j, bessel_y};
pub use divisor::sigma_divisor;
pub use gamma::{ccos_pi, cos_pi, csin_pi, gamma, log_gamma, pochhammer, recip_gamma, sin_pi};
pub use hyp::hyp1f2;
