//! Density kernels of the covariant ground state, the trace over the
//! unobserved time separation, and the resulting entropy and purity.
//!
//! Only the ground state `n = 0` is traced; the pure kernel accepts any `n`.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::kinematics::{Rapidity, SpaceTimePoint};
use crate::numerics::{integrate_1d, integrate_2d, QuadratureRule};
use crate::oscillator::{psi_boosted, OscillatorState};
use crate::squeezed::{expansion, schmidt_probabilities};

/// `rho(z, t; z', t') = psi(z, t) psi(z', t')`.
pub fn pure_density(s: &OscillatorState, z: f64, t: f64, zp: f64, tp: f64) -> f64 {
    psi_boosted(s, z, t) * psi_boosted(s, zp, tp)
}

/// `int rho(a; w) rho(w; b) dw` over the intermediate point `w = (z'', t'')`
/// by tensor quadrature. Equals `rho(a; b)` for a normalized state.
pub fn compose_pure_density(s: &OscillatorState, a: SpaceTimePoint, b: SpaceTimePoint, rule: &QuadratureRule) -> Result<f64> {
    integrate_2d(|z, t| pure_density(s, a.z, a.t, z, t) * pure_density(s, z, t, b.z, b.t), rule)
}

/// Ground-state density with the time separation traced out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedDensityKernel {
    pub eta: Rapidity,
}

impl ReducedDensityKernel {
    pub fn new(eta: Rapidity) -> Self {
        Self { eta }
    }

    pub fn eval(&self, z: f64, zp: f64) -> f64 {
        reduced_closed(self, z, zp)
    }
}

/// `(pi cosh 2eta)^(-1/2) exp{-[(z + z')^2 / cosh 2eta + (z - z')^2 cosh 2eta] / 4}`.
pub fn reduced_closed(k: &ReducedDensityKernel, z: f64, zp: f64) -> f64 {
    let c = k.eta.cosh_2eta();
    let sum = z + zp;
    let diff = z - zp;
    (-(sum * sum / c + diff * diff * c) / 4.0).exp() / (std::f64::consts::PI * c).sqrt()
}

/// `int psi(z, t) psi(z', t) dt` for the boosted ground state.
pub fn reduced_numeric(eta: Rapidity, z: f64, zp: f64, rule: &QuadratureRule) -> Result<f64> {
    let s = OscillatorState::ground(eta);
    integrate_1d(|t| psi_boosted(&s, z, t) * psi_boosted(&s, zp, t), rule)
}

/// Diagonal `rho(z, z) = (pi cosh 2eta)^(-1/2) exp(-z^2 / cosh 2eta)`.
pub fn quark_distribution(k: &ReducedDensityKernel, z: f64) -> f64 {
    let c = k.eta.cosh_2eta();
    (-z * z / c).exp() / (std::f64::consts::PI * c).sqrt()
}

/// `x ln x`, with the limit 0 at `x = 0`.
pub fn x_ln_x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `S = cosh^2 eta ln cosh^2 eta - sinh^2 eta ln sinh^2 eta`, evaluated as
/// `ln cosh^2 eta - sinh^2 eta ln tanh^2 eta` to avoid cancelling two
/// `e^(2 eta)`-sized terms.
pub fn entropy_closed(eta: Rapidity) -> f64 {
    if eta.eta() == 0.0 {
        return 0.0;
    }
    let sh = eta.sinh();
    2.0 * eta.ln_cosh() - 2.0 * sh * sh * eta.ln_tanh_abs()
}

/// `-sum_{k <= K} p_k ln p_k` over the Schmidt probabilities. Fails when the
/// discarded probability `(tanh eta)^(2(K+1))` exceeds `tail_tolerance`.
pub fn entropy_series(eta: Rapidity, order: usize, tail_tolerance: f64) -> Result<f64> {
    let tail = expansion(eta, order).tail_bound();
    if tail > tail_tolerance {
        return Err(Error::Unconverged { tail, tolerance: tail_tolerance });
    }
    Ok(-schmidt_probabilities(eta, order).into_iter().map(x_ln_x).sum::<f64>())
}

/// `Tr rho^2` by quadrature and in closed form `1 / cosh 2eta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Purity {
    pub numeric: f64,
    pub closed: f64,
}

pub fn purity(eta: Rapidity, rule: &QuadratureRule) -> Result<Purity> {
    let k = ReducedDensityKernel::new(eta);
    let numeric = integrate_2d(|z, zp| reduced_closed(&k, z, zp) * reduced_closed(&k, zp, z), rule)?;
    Ok(Purity { numeric, closed: 1.0 / eta.cosh_2eta() })
}

/// Trapezoid rule for discretising the reduced kernel as a matrix. The
/// leading eigenfunctions live well inside `|z| < 16`, and the spacing
/// resolves the `(z - z')` width `sqrt(2 / cosh 2eta)`.
pub fn spectrum_rule(eta: Rapidity) -> QuadratureRule {
    let c = eta.cosh_2eta();
    let half_width = (8.0 * c.sqrt()).min(16.0);
    let spacing = (0.5 * (2.0 / c).sqrt()).min(0.2);
    QuadratureRule::symmetric(half_width, spacing).expect("positive extent")
}

/// Largest `count` eigenvalues (descending) of the symmetric Nystrom matrix
/// `sqrt(w_i) rho(z_i, z_j) sqrt(w_j)`.
pub fn kernel_spectrum(eta: Rapidity, rule: &QuadratureRule, count: usize) -> Vec<f64> {
    let k = ReducedDensityKernel::new(eta);
    let nodes = rule.nodes();
    let roots: Vec<f64> = rule.weights().iter().map(|w| w.sqrt()).collect();
    let m = nodes.len();
    let matrix = DMatrix::from_fn(m, m, |i, j| roots[i] * reduced_closed(&k, nodes[i], nodes[j]) * roots[j]);
    let mut values: Vec<f64> = SymmetricEigen::new(matrix).eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    values.truncate(count);
    values
}
