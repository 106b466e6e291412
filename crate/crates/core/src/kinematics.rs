//! Longitudinal Lorentz boosts, light-cone variables and two-body
//! coordinates in the `(z, t)` plane.
//!
//! The boost acts on light-cone coordinates `u = (z + t)/sqrt(2)`,
//! `v = (z - t)/sqrt(2)` as the squeeze `u -> e^eta u`, `v -> e^-eta v`.
//! Transverse coordinates never enter here.

use std::f64::consts::SQRT_2;
use std::ops::Neg;

use crate::error::{Error, Result};

/// Largest accepted `|eta|`.
pub const MAX_RAPIDITY: f64 = 20.0;

/// Boost parameter `eta`, with `beta = tanh(eta)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Rapidity(f64);

impl Rapidity {
    pub fn new(eta: f64) -> Result<Self> {
        if eta.is_finite() && eta.abs() <= MAX_RAPIDITY {
            Ok(Self(eta))
        } else {
            Err(Error::Rapidity(eta))
        }
    }

    pub const fn zero() -> Self {
        Self(0.0)
    }

    pub fn eta(self) -> f64 {
        self.0
    }

    pub fn beta(self) -> f64 {
        self.0.tanh()
    }

    pub fn cosh(self) -> f64 {
        self.0.cosh()
    }

    pub fn sinh(self) -> f64 {
        self.0.sinh()
    }

    pub fn tanh(self) -> f64 {
        self.0.tanh()
    }

    pub fn cosh_2eta(self) -> f64 {
        (2.0 * self.0).cosh()
    }

    pub fn sinh_2eta(self) -> f64 {
        (2.0 * self.0).sinh()
    }

    /// `ln cosh(eta)` without forming `cosh` for large `|eta|`.
    pub fn ln_cosh(self) -> f64 {
        let a = self.0.abs();
        a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
    }

    /// `ln tanh(|eta|)`; `-inf` at rest.
    pub fn ln_tanh_abs(self) -> f64 {
        let e = (-2.0 * self.0.abs()).exp();
        (-e).ln_1p() - e.ln_1p()
    }
}

impl Neg for Rapidity {
    type Output = Rapidity;

    fn neg(self) -> Rapidity {
        Rapidity(-self.0)
    }
}

impl TryFrom<f64> for Rapidity {
    type Error = Error;

    fn try_from(eta: f64) -> Result<Self> {
        Self::new(eta)
    }
}

/// `v/c`, strictly inside `(-1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Velocity(f64);

impl Velocity {
    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_finite() && beta.abs() < 1.0 {
            Ok(Self(beta))
        } else {
            Err(Error::Velocity(beta))
        }
    }

    pub fn beta(self) -> f64 {
        self.0
    }
}

/// `eta = (1/2) ln((1 + beta)/(1 - beta))`, i.e. `e^eta = sqrt((1+beta)/(1-beta))`.
pub fn rapidity_from_beta(v: Velocity) -> Rapidity {
    // atanh(beta) never exceeds ~19.1 for |beta| < 1 in double precision
    Rapidity(v.0.atanh())
}

/// Longitudinal separation `z` and time separation `t`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpaceTimePoint {
    pub z: f64,
    pub t: f64,
}

impl SpaceTimePoint {
    pub const fn new(z: f64, t: f64) -> Self {
        Self { z, t }
    }

    /// `z^2 - t^2`.
    pub fn interval(&self) -> f64 {
        self.z * self.z - self.t * self.t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl LightConePoint {
    pub const fn new(u: f64, v: f64) -> Self {
        Self { u, v }
    }
}

/// `z -> cosh(eta) z + sinh(eta) t`, `t -> sinh(eta) z + cosh(eta) t`.
pub fn boost(p: SpaceTimePoint, r: Rapidity) -> SpaceTimePoint {
    let (ch, sh) = (r.cosh(), r.sinh());
    SpaceTimePoint { z: ch * p.z + sh * p.t, t: sh * p.z + ch * p.t }
}

pub fn to_light_cone(p: SpaceTimePoint) -> LightConePoint {
    LightConePoint { u: (p.z + p.t) / SQRT_2, v: (p.z - p.t) / SQRT_2 }
}

pub fn from_light_cone(lc: LightConePoint) -> SpaceTimePoint {
    SpaceTimePoint { z: (lc.u + lc.v) / SQRT_2, t: (lc.u - lc.v) / SQRT_2 }
}

/// `u -> e^eta u`, `v -> e^-eta v`; `u v` is unchanged.
pub fn squeeze_light_cone(lc: LightConePoint, r: Rapidity) -> LightConePoint {
    let e = r.eta().exp();
    LightConePoint { u: lc.u * e, v: lc.v / e }
}

/// Hadronic (centre) and quark-separation coordinates of a two-body system.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TwoBodyCoords {
    /// `X = (a + b)/2`
    pub hadron: SpaceTimePoint,
    /// `x = (a - b)/(2 sqrt 2)`
    pub separation: SpaceTimePoint,
}

/// Scale of the separation coordinate relative to the quark difference.
pub const SEPARATION_SCALE: f64 = 1.0 / (2.0 * SQRT_2);

pub fn two_body_split(a: SpaceTimePoint, b: SpaceTimePoint) -> TwoBodyCoords {
    TwoBodyCoords {
        hadron: SpaceTimePoint { z: 0.5 * (a.z + b.z), t: 0.5 * (a.t + b.t) },
        separation: SpaceTimePoint {
            z: SEPARATION_SCALE * (a.z - b.z),
            t: SEPARATION_SCALE * (a.t - b.t),
        },
    }
}

/// Inverse of [`two_body_split`]: `a = X + sqrt(2) x`, `b = X - sqrt(2) x`.
pub fn two_body_join(c: TwoBodyCoords) -> (SpaceTimePoint, SpaceTimePoint) {
    let dz = SQRT_2 * c.separation.z;
    let dt = SQRT_2 * c.separation.t;
    (
        SpaceTimePoint { z: c.hadron.z + dz, t: c.hadron.t + dt },
        SpaceTimePoint { z: c.hadron.z - dz, t: c.hadron.t - dt },
    )
}
