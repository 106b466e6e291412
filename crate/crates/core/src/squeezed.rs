//! Two-mode squeezed vacuum and its expansion in paired oscillator states,
//!
//! ```text
//! psi(x1, x2) = (1/cosh eta) sum_k (tanh eta)^k chi_k(x1) chi_k(x2).
//! ```
//!
//! The closed form is the boosted ground state with `(z, t)` renamed
//! `(x1, x2)`; both systems share [`crate::oscillator::psi_boosted`].

use std::f64::consts::FRAC_1_SQRT_2;

use crate::kinematics::Rapidity;
use crate::numerics::chi_table;
use crate::oscillator::{psi_boosted, OscillatorState};

/// Upper limit for [`default_truncation`].
pub const MAX_DEFAULT_TERMS: usize = 1000;

/// Tail bound targeted by [`default_truncation`].
pub const DEFAULT_TAIL: f64 = 1e-12;

/// 45-degree rotation `y1 = (x1 + x2)/sqrt 2`, `y2 = (x1 - x2)/sqrt 2`.
pub fn normal_coordinates(x1: f64, x2: f64) -> (f64, f64) {
    (FRAC_1_SQRT_2 * (x1 + x2), FRAC_1_SQRT_2 * (x1 - x2))
}

/// `(1/sqrt pi) exp(-(e^-2eta y1^2 + e^2eta y2^2)/2)`.
pub fn squeezed_vacuum(eta: Rapidity, x1: f64, x2: f64) -> f64 {
    psi_boosted(&OscillatorState::ground(eta), x1, x2)
}

/// Truncated coefficient sequence `c_k = (tanh eta)^k / cosh eta`,
/// `k = 0..=K`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtExpansion {
    eta: Rapidity,
    coeffs: Vec<f64>,
    tail_bound: f64,
}

impl SchmidtExpansion {
    pub fn eta(&self) -> Rapidity {
        self.eta
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Highest retained `k`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `sum_{k > K} c_k^2 = (tanh eta)^(2(K+1))`.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// `sum_{k <= K} c_k^2`.
    pub fn retained_weight(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Partial sum on the tensor grid `xs x ys`, row-major in `xs`.
    pub fn reconstruct_tensor(&self, xs: &[f64], ys: &[f64]) -> Vec<f64> {
        use rayon::prelude::*;
        let k = self.order();
        let tx: Vec<Vec<f64>> = xs.par_iter().map(|&x| chi_table(k, x)).collect();
        let ty: Vec<Vec<f64>> = ys.par_iter().map(|&y| chi_table(k, y)).collect();
        let weighted: Vec<Vec<f64>> =
            tx.iter().map(|row| row.iter().zip(&self.coeffs).map(|(a, c)| a * c).collect()).collect();
        weighted
            .par_iter()
            .flat_map_iter(|wx| ty.iter().map(move |cy| wx.iter().zip(cy).map(|(a, b)| a * b).sum::<f64>()))
            .collect()
    }
}

/// `ln c_k` and its sign. At rest only `k = 0` survives.
fn log_coefficient(eta: Rapidity, k: usize) -> (f64, f64) {
    let log_abs = if k == 0 { -eta.ln_cosh() } else { k as f64 * eta.ln_tanh_abs() - eta.ln_cosh() };
    let sign = if eta.eta() < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    (log_abs, sign)
}

fn tail(eta: Rapidity, order: usize) -> f64 {
    if eta.eta() == 0.0 {
        0.0
    } else {
        (2.0 * (order + 1) as f64 * eta.ln_tanh_abs()).exp()
    }
}

pub fn expansion(eta: Rapidity, order: usize) -> SchmidtExpansion {
    let coeffs = (0..=order)
        .map(|k| {
            let (log_abs, sign) = log_coefficient(eta, k);
            sign * log_abs.exp()
        })
        .collect();
    SchmidtExpansion { eta, coeffs, tail_bound: tail(eta, order) }
}

/// Smallest `K` whose tail bound is below `tail_tolerance` (no cap).
pub fn truncation_for_tail(eta: Rapidity, tail_tolerance: f64) -> usize {
    let lt = eta.ln_tanh_abs();
    if eta.eta() == 0.0 || tail_tolerance >= 1.0 {
        return 0;
    }
    // (K + 1) * 2 ln tanh <= ln tol
    let k = (tail_tolerance.ln() / (2.0 * lt)).ceil() - 1.0;
    k.max(0.0) as usize
}

/// `K = ceil(-12 ln 10 / (2 ln tanh eta))`, at most [`MAX_DEFAULT_TERMS`].
pub fn default_truncation(eta: Rapidity) -> usize {
    if eta.eta() == 0.0 {
        return 0;
    }
    let k = (DEFAULT_TAIL.ln() / (2.0 * eta.ln_tanh_abs())).ceil();
    (k as usize).min(MAX_DEFAULT_TERMS)
}

/// `sum_{k <= K} c_k chi_k(x1) chi_k(x2)`.
pub fn reconstruct(e: &SchmidtExpansion, x1: f64, x2: f64) -> f64 {
    let k = e.order();
    let a = chi_table(k, x1);
    let b = chi_table(k, x2);
    e.coeffs.iter().zip(a.iter().zip(&b)).map(|(c, (p, q))| c * p * q).sum()
}

/// `p_k = (tanh eta)^(2k) / cosh^2 eta`, `k = 0..=K`.
pub fn schmidt_probabilities(eta: Rapidity, order: usize) -> Vec<f64> {
    (0..=order).map(|k| (2.0 * log_coefficient(eta, k).0).exp()).collect()
}
