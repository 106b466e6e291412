//! Special functions, quadrature rules and finite-difference stencils.
//!
//! Everything here is independent of the oscillator formulas built on top of
//! it, so the quadrature and finite-difference routines can serve as oracles
//! for the closed forms in the other modules.

mod finite_difference;
mod hermite;
mod quadrature;

pub use finite_difference::{second_derivative, FiniteDifferenceScheme};
pub use hermite::{chi, chi_table, hermite};
pub use quadrature::{gauss_quadrature, integrate_1d, integrate_2d, integrate_2d_with, QuadratureRule, RuleKind};
