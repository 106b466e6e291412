use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadrature order must be at least 2, got {0}")]
    QuadratureOrder(usize),
    #[error("invalid quadrature grid: {0}")]
    QuadratureGrid(String),
    #[error("finite-difference scheme needs step > 0 and order 2 or 4, got step {step}, order {order}")]
    FiniteDifference { step: f64, order: u8 },
    #[error("rapidity {0} is outside the supported range |eta| <= 20")]
    Rapidity(f64),
    #[error("velocity {0} must satisfy |beta| < 1")]
    Velocity(f64),
    #[error("integrand is not finite at x = {at}")]
    NonFinite { at: f64 },
    #[error("residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    Residual { residual: f64, tolerance: f64 },
    #[error("series tail bound {tail:.3e} exceeds tolerance {tolerance:.3e}; increase the truncation order")]
    Unconverged { tail: f64, tolerance: f64 },
    #[error("imaginary residue {0:.3e} of the Wigner integral indicates an unresolved quadrature")]
    ImaginaryResidue(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
