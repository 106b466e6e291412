//! Lorentz-covariant harmonic oscillator.
//!
//! Boosted oscillator wavefunctions in the longitudinal `(z, t)` plane, the
//! two-mode squeezed vacuum they share their mathematics with, the reduced
//! density obtained by integrating out the time separation `t`, its entropy
//! and purity, and the phase-space (Wigner) distribution of the result.
//!
//! Units are natural: oscillator frequency and the quantum of action are 1,
//! so `z`, `t`, `p` are dimensionless. Every closed form has a quadrature or
//! finite-difference counterpart built from [`numerics`], and [`verify`]
//! runs the full set of comparisons.

pub mod density;
pub mod error;
pub mod kinematics;
pub mod numerics;
pub mod oscillator;
pub mod separation;
pub mod squeezed;
pub mod verify;
pub mod wigner;

pub use error::{Error, Result};
pub use kinematics::{LightConePoint, Rapidity, SpaceTimePoint, TwoBodyCoords, Velocity};
pub use oscillator::{CartesianState, MassShell, OscillatorState};
pub use squeezed::SchmidtExpansion;
pub use density::ReducedDensityKernel;
pub use wigner::PhaseSpacePoint;

/// Library version recorded in output headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
