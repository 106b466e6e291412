//! Phase-space distribution of the reduced ground state,
//! `W(z, p) = int rho(z + y, z - y) exp(2ipy) dy`.
//!
//! The transform carries no `1/pi`, so `W` integrates to `pi` over phase
//! space; that mass is measured rather than normalised away.

use std::f64::consts::{E, PI};

use crate::density::{reduced_closed, ReducedDensityKernel};
use crate::error::{Error, Result};
use crate::kinematics::Rapidity;
use crate::numerics::{integrate_1d, integrate_2d, QuadratureRule};

/// Largest acceptable imaginary part of the Wigner integral.
pub const IMAGINARY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PhaseSpacePoint {
    pub z: f64,
    pub p: f64,
}

impl PhaseSpacePoint {
    pub const fn new(z: f64, p: f64) -> Self {
        Self { z, p }
    }
}

/// Real value of the Wigner integral and the imaginary residue left by the
/// quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerValue {
    pub value: f64,
    pub imag: f64,
}

/// `(1 / cosh 2eta) exp(-(z^2 + p^2) / cosh 2eta)`.
pub fn wigner_closed(eta: Rapidity, pt: PhaseSpacePoint) -> f64 {
    let c = eta.cosh_2eta();
    (-(pt.z * pt.z + pt.p * pt.p) / c).exp() / c
}

/// Uniform rule in the integration variable `y`: half-width
/// `8 sqrt(cosh 2eta)`, at least 40 nodes per period of `exp(2ipy)` at
/// `|p| = p_max`, and fine enough for the kernel width `1/sqrt(2 cosh 2eta)`.
pub fn wigner_rule(eta: Rapidity, p_max: f64) -> QuadratureRule {
    let c = eta.cosh_2eta();
    let mut spacing = 0.25 / c.sqrt();
    if p_max > 0.0 {
        spacing = spacing.min(PI / p_max.abs() / 40.0);
    }
    QuadratureRule::symmetric(8.0 * c.sqrt(), spacing).expect("positive extent")
}

/// The defining integral evaluated against the closed reduced kernel.
pub fn wigner_numeric(eta: Rapidity, pt: PhaseSpacePoint, rule: &QuadratureRule) -> Result<WignerValue> {
    let k = ReducedDensityKernel::new(eta);
    let rho = |y: f64| reduced_closed(&k, pt.z + y, pt.z - y);
    let value = integrate_1d(|y| rho(y) * (2.0 * pt.p * y).cos(), rule)?;
    let imag = integrate_1d(|y| rho(y) * (2.0 * pt.p * y).sin(), rule)?;
    if imag.abs() > IMAGINARY_TOLERANCE {
        return Err(Error::ImaginaryResidue(imag));
    }
    Ok(WignerValue { value, imag })
}

/// `int W(z, p) dp`; equals `pi rho(z, z)` under this normalisation.
pub fn wigner_marginal_position(eta: Rapidity, z: f64, rule: &QuadratureRule) -> Result<f64> {
    integrate_1d(|p| wigner_closed(eta, PhaseSpacePoint::new(z, p)), rule)
}

/// `int W(z, p) dp` at fixed `p`, the momentum distribution.
pub fn wigner_marginal_momentum(eta: Rapidity, p: f64, rule: &QuadratureRule) -> Result<f64> {
    integrate_1d(|z| wigner_closed(eta, PhaseSpacePoint::new(z, p)), rule)
}

/// `int int W dz dp`.
pub fn wigner_total_mass(eta: Rapidity, rule: &QuadratureRule) -> Result<f64> {
    integrate_2d(|z, p| wigner_closed(eta, PhaseSpacePoint::new(z, p)), rule)
}

/// `sqrt(cosh 2eta)`, the 1/e radius of the phase-space Gaussian.
pub fn phase_space_radius(eta: Rapidity) -> f64 {
    eta.cosh_2eta().sqrt()
}

/// Radius along direction `angle` where the numerically integrated `W`
/// falls to `1/e` of its central value, by bisection.
pub fn measured_radius(eta: Rapidity, angle: f64, tolerance: f64) -> Result<f64> {
    let (dz, dp) = (angle.cos(), angle.sin());
    let mut hi = 1.0;
    let mut rule = wigner_rule(eta, hi);
    let centre = wigner_numeric(eta, PhaseSpacePoint::default(), &rule)?.value;
    let ratio = |r: f64, rule: &QuadratureRule| -> Result<f64> {
        Ok(wigner_numeric(eta, PhaseSpacePoint::new(r * dz, r * dp), rule)?.value / centre - 1.0 / E)
    };
    while ratio(hi, &rule)? > 0.0 {
        hi *= 2.0;
        rule = wigner_rule(eta, hi);
    }
    let mut lo = 0.0;
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if ratio(mid, &rule)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
