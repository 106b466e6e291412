use std::f64::consts::PI;

use super::hermite::chi;
use crate::error::{Error, Result};
use crate::kinematics::Rapidity;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// Gauss-Hermite nodes with the `exp(-x^2)` weight folded into the weights.
    GaussHermite,
    /// Uniform grid on a truncated interval.
    Trapezoid,
}

/// Nodes and positive weights such that `sum w_i f(x_i)` approximates the
/// plain integral of `f` over the real line.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    kind: RuleKind,
}

impl QuadratureRule {
    /// Composite trapezoid rule on `[min, max]` with `points` nodes.
    pub fn trapezoid(min: f64, max: f64, points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::QuadratureGrid(format!("need at least 2 points, got {points}")));
        }
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::QuadratureGrid(format!("empty interval [{min}, {max}]")));
        }
        let h = (max - min) / (points - 1) as f64;
        let nodes = (0..points).map(|i| min + h * i as f64).collect();
        let mut weights = vec![h; points];
        weights[0] = 0.5 * h;
        weights[points - 1] = 0.5 * h;
        Ok(Self { nodes, weights, kind: RuleKind::Trapezoid })
    }

    /// Symmetric trapezoid rule on `[-half_width, half_width]` whose spacing
    /// does not exceed `max_spacing`. The node count is odd so the origin is
    /// always a node.
    pub fn symmetric(half_width: f64, max_spacing: f64) -> Result<Self> {
        if !(half_width > 0.0 && max_spacing > 0.0) {
            return Err(Error::QuadratureGrid(format!(
                "half width {half_width} and spacing {max_spacing} must be positive"
            )));
        }
        let intervals = (2.0 * half_width / max_spacing).ceil() as usize;
        let intervals = intervals.max(2) + intervals % 2;
        Self::trapezoid(-half_width, half_width, intervals + 1)
    }

    /// Default rule for integrands built from squeezed Gaussians at rapidity
    /// `r`: half-width `8 sqrt(cosh 2 eta)`, spacing a quarter of the
    /// contracted width `exp(-|eta|)`.
    pub fn for_rapidity(r: Rapidity) -> Self {
        let half_width = 8.0 * r.cosh_2eta().sqrt();
        let spacing = 0.25 * (-r.eta().abs()).exp();
        Self::symmetric(half_width, spacing).expect("positive extent")
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integral of `exp(-x^2) f(x)`; exact for polynomial `f` of degree
    /// `<= 2 order - 1` on a Gauss-Hermite rule.
    pub fn integrate_weighted(&self, f: impl Fn(f64) -> f64) -> Result<f64> {
        integrate_1d(|x| (-x * x).exp() * f(x), self)
    }
}

/// Gauss-Hermite rule of the given order, weights folded so that it
/// integrates plain functions.
///
/// Nodes are found by Newton iteration on the orthonormal Hermite recurrence
/// from the usual asymptotic starting guesses; the weights come from
/// `w_i exp(x_i^2) = 1 / (n chi_{n-1}(x_i)^2)`, which never forms `exp(x^2)`.
pub fn gauss_quadrature(order: usize) -> Result<QuadratureRule> {
    if order < 2 {
        return Err(Error::QuadratureOrder(order));
    }
    let n = order;
    let nf = n as f64;
    let mut roots = vec![0.0; n];
    let half = n.div_ceil(2);
    let mut z = 0.0;
    for i in 0..half {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * roots[0],
            3 => 1.91 * z - 0.91 * roots[1],
            _ => 2.0 * z - roots[i - 2],
        };
        for _ in 0..100 {
            let (p, dp) = orthonormal_with_derivative(n, z);
            let step = p / dp;
            z -= step;
            if step.abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        roots[i] = z;
    }
    // roots are descending and positive; mirror them into ascending order
    let skip = n % 2;
    let mut nodes: Vec<f64> = roots[..half].iter().map(|r| -r).collect();
    nodes.extend(roots[..half - skip].iter().rev());
    if skip == 1 {
        nodes[half - 1] = 0.0;
    }
    let weights = nodes
        .iter()
        .map(|&x| {
            let c = chi(n - 1, x);
            1.0 / (nf * c * c)
        })
        .collect();
    Ok(QuadratureRule { nodes, weights, kind: RuleKind::GaussHermite })
}

/// Orthonormal Hermite polynomial `p_n(x)` and its derivative
/// `sqrt(2n) p_{n-1}(x)`.
fn orthonormal_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    for k in 0..n {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    (cur, (2.0 * n as f64).sqrt() * prev)
}

/// `sum w_i f(x_i)`; reports the first node where `f` is not finite.
pub fn integrate_1d(f: impl Fn(f64) -> f64, rule: &QuadratureRule) -> Result<f64> {
    let mut acc = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFinite { at: x });
        }
        acc += w * v;
    }
    Ok(acc)
}

/// Tensor-product integral over the same rule on both axes.
pub fn integrate_2d(f: impl Fn(f64, f64) -> f64 + Sync, rule: &QuadratureRule) -> Result<f64> {
    integrate_2d_with(f, rule, rule)
}

/// Tensor-product integral with separate rules for the two axes. Rows are
/// evaluated in parallel and summed in a fixed order.
pub fn integrate_2d_with(
    f: impl Fn(f64, f64) -> f64 + Sync,
    rule_x: &QuadratureRule,
    rule_y: &QuadratureRule,
) -> Result<f64> {
    use rayon::prelude::*;
    let rows: Vec<Result<f64>> = rule_x
        .nodes
        .par_iter()
        .map(|&x| {
            let inner = integrate_1d(|y| f(x, y), rule_y);
            // a failing row reports its x coordinate
            inner.map_err(|e| match e {
                Error::NonFinite { .. } => Error::NonFinite { at: x },
                other => other,
            })
        })
        .collect();
    let mut acc = 0.0;
    for (row, &w) in rows.into_iter().zip(&rule_x.weights) {
        acc += w * row?;
    }
    Ok(acc)
}
