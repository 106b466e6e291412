//! Covariant oscillator wavefunctions in the longitudinal `(z, t)` plane.
//!
//! The time-separation coordinate is always in its oscillator ground state;
//! [`OscillatorState`] carries no quantum number for it.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kinematics::{squeeze_light_cone, to_light_cone, from_light_cone, Rapidity, SpaceTimePoint};
use crate::numerics::{chi, second_derivative, FiniteDifferenceScheme};

/// Longitudinal excitation `n` of a hadron moving with rapidity `eta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorState {
    pub n: usize,
    pub eta: Rapidity,
}

impl OscillatorState {
    pub fn new(n: usize, eta: Rapidity) -> Self {
        Self { n, eta }
    }

    pub fn ground(eta: Rapidity) -> Self {
        Self { n: 0, eta }
    }

    pub fn at_rest(n: usize) -> Self {
        Self { n, eta: Rapidity::zero() }
    }
}

/// Excitations along `x`, `y` and `z`; `lambda = a + b + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CartesianState {
    pub a: usize,
    pub b: usize,
    pub n: usize,
}

impl CartesianState {
    pub fn new(a: usize, b: usize, n: usize) -> Self {
        Self { a, b, n }
    }

    pub fn lambda(&self) -> usize {
        self.a + self.b + self.n
    }
}

/// Bare mass squared and excitation level entering `-P^2 = m0^2 + (lambda + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassShell {
    pub m0_squared: f64,
    pub lambda: usize,
}

impl MassShell {
    pub fn new(m0_squared: f64, lambda: usize) -> Self {
        Self { m0_squared, lambda }
    }
}

/// The value of `-P^2` on the shell.
pub fn mass_squared(ms: &MassShell) -> f64 {
    ms.m0_squared + ms.lambda as f64 + 1.0
}

/// Rest-frame solution `(pi 2^n n!)^(-1/2) H_n(z) exp(-(z^2 + t^2)/2)`.
pub fn psi_rest(n: usize, z: f64, t: f64) -> f64 {
    chi(n, z) * chi(0, t)
}

/// Boosted solution. The Hermite argument `(e^-eta u + e^eta v)/sqrt 2` and
/// the Gaussian `exp(-(e^-2eta u^2 + e^2eta v^2)/2)` are evaluated on the
/// light-cone image of `(z, t)` squeezed by `-eta`, which is the rest-frame
/// solution at the inverse-boosted point.
pub fn psi_boosted(s: &OscillatorState, z: f64, t: f64) -> f64 {
    let lc = squeeze_light_cone(to_light_cone(SpaceTimePoint::new(z, t)), -s.eta);
    let rest = from_light_cone(lc);
    chi(s.n, rest.z) * chi(0, rest.t)
}

/// Full 3+1 Cartesian solution with the time coordinate in its ground
/// state: `chi_a(x) chi_b(y) chi_n(z) chi_0(t)`.
pub fn psi_cartesian(c: &CartesianState, x: f64, y: f64, z: f64, t: f64) -> f64 {
    chi(c.a, x) * chi(c.b, y) * chi(c.n, z) * chi(0, t)
}

/// Relative floor for residual denominators, as a fraction of the largest
/// `|psi|` on the grid.
pub const RESIDUAL_FLOOR: f64 = 1e-3;

/// Square grid of `points x points` on `[-half_width, half_width]^2`.
pub fn square_grid(half_width: f64, points: usize) -> Vec<SpaceTimePoint> {
    assert!(points >= 2, "grid needs at least two points per axis");
    let h = 2.0 * half_width / (points - 1) as f64;
    let mut grid = Vec::with_capacity(points * points);
    for i in 0..points {
        for j in 0..points {
            grid.push(SpaceTimePoint::new(-half_width + h * i as f64, -half_width + h * j as f64));
        }
    }
    grid
}

/// Maximum over the grid of `|L psi - n psi| / max(|psi|, floor)` where
/// `L = (1/2){[-d_z^2 + z^2] - [-d_t^2 + t^2]}` is applied by finite
/// differences.
pub fn reduced_equation_residual(s: &OscillatorState, grid: &[SpaceTimePoint], scheme: &FiniteDifferenceScheme) -> f64 {
    use rayon::prelude::*;
    let psi = |z: f64, t: f64| psi_boosted(s, z, t);
    let n = s.n as f64;
    let rows: Vec<(f64, f64)> = grid
        .par_iter()
        .map(|p| {
            let centre = psi(p.z, p.t);
            let dzz = second_derivative(|z| psi(z, p.t), p.z, scheme);
            let dtt = second_derivative(|t| psi(p.z, t), p.t, scheme);
            let applied = 0.5 * (-dzz + dtt + (p.z * p.z - p.t * p.t) * centre);
            ((applied - n * centre).abs(), centre.abs())
        })
        .collect();
    let peak = rows.iter().fold(0.0f64, |m, r| m.max(r.1));
    let floor = RESIDUAL_FLOOR * peak;
    rows.iter().fold(0.0f64, |m, &(diff, mag)| m.max(diff / mag.max(floor)))
}

/// [`reduced_equation_residual`], failing when it exceeds `tolerance`.
pub fn check_reduced_equation(
    s: &OscillatorState,
    grid: &[SpaceTimePoint],
    scheme: &FiniteDifferenceScheme,
    tolerance: f64,
) -> Result<f64> {
    let residual = reduced_equation_residual(s, grid, scheme);
    if residual <= tolerance {
        Ok(residual)
    } else {
        Err(Error::Residual { residual, tolerance })
    }
}

/// `1/sqrt(pi)`, the value of the ground state at the origin in any frame.
pub fn ground_peak() -> f64 {
    1.0 / PI.sqrt()
}
