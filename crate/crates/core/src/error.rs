use alloc::string::String;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function}: pole at {at}")]
    Pole {
        function: &'static str,
        at: Complex64,
    },
    #[error("{0}: result exceeds the representable range")]
    Overflow(&'static str),
    #[error("{function}: no convergence after {terms} terms")]
    NoConvergence { function: &'static str, terms: usize },
    #[error("{0}: argument lies on the branch cut (-inf, 0]")]
    Branch(&'static str),
    #[error("degenerate order: {0}")]
    DegenerateOrder(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),
    #[error("{function}: cancellation of {digits:.1} digits exceeds the budget of {budget:.1}")]
    Cancellation {
        function: &'static str,
        digits: f64,
        budget: f64,
    },
    #[error("contour error: {0}")]
    Contour(String),
    #[error("truncation tail bound {bound:e} exceeds tolerance {tol:e}")]
    TailBoundExceeded { bound: f64, tol: f64 },
    #[error("s = {0} is too close to a double pole of the residue expansion")]
    DoublePoleProximity(Complex64),
    #[error("invalid control parameters: {0}")]
    InvalidControl(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
