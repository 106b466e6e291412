use crate::error::{Error, Result};

/// Central-difference stencil for second derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteDifferenceScheme {
    step: f64,
    order: u8,
}

impl FiniteDifferenceScheme {
    pub fn new(step: f64, order: u8) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) || !(order == 2 || order == 4) {
            return Err(Error::FiniteDifference { step, order });
        }
        Ok(Self { step, order })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    /// Offsets (in units of the step) and coefficients of the stencil,
    /// before division by `h^2`.
    pub(crate) fn stencil(&self) -> &'static [(f64, f64)] {
        match self.order {
            2 => &[(-1.0, 1.0), (0.0, -2.0), (1.0, 1.0)],
            _ => &[
                (-2.0, -1.0 / 12.0),
                (-1.0, 16.0 / 12.0),
                (0.0, -30.0 / 12.0),
                (1.0, 16.0 / 12.0),
                (2.0, -1.0 / 12.0),
            ],
        }
    }
}

impl Default for FiniteDifferenceScheme {
    /// `h = 1e-3`, second order.
    fn default() -> Self {
        Self { step: 1e-3, order: 2 }
    }
}

/// Central-difference estimate of `f''(x)` with error `O(h^order)`.
pub fn second_derivative(f: impl Fn(f64) -> f64, x: f64, scheme: &FiniteDifferenceScheme) -> f64 {
    let h = scheme.step;
    let sum: f64 = scheme.stencil().iter().map(|&(k, c)| c * f(x + k * h)).sum();
    sum / (h * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::chi;

    #[test]
    fn rejects_bad_schemes() {
        assert!(FiniteDifferenceScheme::new(0.0, 2).is_err());
        assert!(FiniteDifferenceScheme::new(-1e-3, 2).is_err());
        assert!(FiniteDifferenceScheme::new(1e-3, 3).is_err());
        assert!(FiniteDifferenceScheme::new(f64::NAN, 4).is_err());
    }

    #[test]
    fn reference_derivatives() {
        let s = FiniteDifferenceScheme::default();
        for x in [-2.0, 0.0, 0.3, 5.0] {
            assert!((second_derivative(|x| x * x, x, &s) - 2.0).abs() < 1e-6);
        }
        let g = second_derivative(|x: f64| (-0.5 * x * x).exp(), 0.0, &s);
        assert!((g + 1.0).abs() < 1e-5);
        // (-d^2 + x^2) chi_n = (2n + 1) chi_n
        let x = 0.5;
        let d2 = second_derivative(|x| chi(4, x), x, &s);
        assert!((d2 - (x * x - 9.0) * chi(4, x)).abs() < 1e-4);
    }

    #[test]
    fn fourth_order_is_more_accurate() {
        let f = |x: f64| (1.3 * x).sin();
        let exact = -1.69 * (1.3f64 * 0.7).sin();
        let coarse = 1e-2;
        let e2 = (second_derivative(f, 0.7, &FiniteDifferenceScheme::new(coarse, 2).unwrap()) - exact).abs();
        let e4 = (second_derivative(f, 0.7, &FiniteDifferenceScheme::new(coarse, 4).unwrap()) - exact).abs();
        assert!(e4 < e2 / 100.0, "e2={e2} e4={e4}");
    }
}
