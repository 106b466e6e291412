use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cho::verify::ToleranceProfile;

#[derive(Debug, Parser)]
#[command(name = "cho", version, about = "Covariant oscillator: wavefunctions, reduced densities, entropy and Wigner grids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Wavefunction,
    Density,
    EntropyCurve,
    WignerGrid,
    Schmidt,
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Boosted wavefunction psi(z, t) on a square grid.
    Wavefunction(#[command(flatten)] CommonArgs),
    /// Reduced density rho(z, z') of the boosted ground state.
    Density(#[command(flatten)] CommonArgs),
    /// Entanglement entropy S(eta) over a rapidity range.
    EntropyCurve(#[command(flatten)] CommonArgs),
    /// Wigner function W(z, p) on a square phase-space grid.
    WignerGrid(#[command(flatten)] CommonArgs),
    /// Schmidt coefficients tanh^k(eta)/cosh(eta) and probabilities.
    Schmidt(#[command(flatten)] CommonArgs),
    /// Run every numeric-versus-closed-form check and report.
    Verify(#[command(flatten)] CommonArgs),
}

impl Command {
    pub fn split(self) -> (CommandKind, CommonArgs) {
        match self {
            Self::Wavefunction(a) => (CommandKind::Wavefunction, a),
            Self::Density(a) => (CommandKind::Density, a),
            Self::EntropyCurve(a) => (CommandKind::EntropyCurve, a),
            Self::WignerGrid(a) => (CommandKind::WignerGrid, a),
            Self::Schmidt(a) => (CommandKind::Schmidt, a),
            Self::Verify(a) => (CommandKind::Verify, a),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Rapidity, a single value or an inclusive range start:stop:step.
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<EtaSpec>,
    /// Oscillator excitation number.
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// Square grid min:max:points, used for both axes.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,
    /// Highest retained Schmidt index K (default: tail below 1e-12, at most 1000).
    #[arg(long)]
    pub order: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Gauss-Hermite order used by the verification checks.
    #[arg(long, default_value_t = 80)]
    pub quad_order: usize,
    /// Finite-difference step used by the verification checks.
    #[arg(long, default_value_t = 1e-3)]
    pub fd_step: f64,
    #[arg(long, default_value = "default")]
    pub tolerance_profile: ToleranceProfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Either one rapidity or an inclusive `start:stop:step` sweep.
#[derive(Debug, Clone, PartialEq)]
pub enum EtaSpec {
    Single(f64),
    Range { start: f64, stop: f64, step: f64 },
}

impl EtaSpec {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Self::Single(v) => vec![v],
            Self::Range { start, stop, step } => {
                // endpoints count when within half a step
                let count = ((stop - start) / step + 0.5).floor() as usize + 1;
                (0..count)
                    .map(|k| {
                        let v = start + step * k as f64;
                        if (v - stop).abs() < 1e-9 * step {
                            stop
                        } else {
                            v
                        }
                    })
                    .collect()
            }
        }
    }
}

impl FromStr for EtaSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("'{p}': {e}"));
        match parts.as_slice() {
            [v] => {
                let v = num(v)?;
                if v.is_finite() {
                    Ok(Self::Single(v))
                } else {
                    Err(format!("rapidity must be finite, got {v}"))
                }
            }
            [a, b, c] => {
                let (start, stop, step) = (num(a)?, num(b)?, num(c)?);
                if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
                    return Err("range bounds must be finite".into());
                }
                if step <= 0.0 {
                    return Err(format!("range step must be positive, got {step}"));
                }
                if stop < start {
                    return Err(format!("empty range {start}:{stop}"));
                }
                Ok(Self::Range { start, stop, step })
            }
            _ => Err(format!("expected a number or start:stop:step, got '{s}'")),
        }
    }
}

impl fmt::Display for EtaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Single(v) => write!(f, "{v}"),
            Self::Range { start, stop, step } => write!(f, "{start}:{stop}:{step}"),
        }
    }
}

/// `min:max:points` with the same extent on both axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl GridSpec {
    pub const fn new(min: f64, max: f64, points: usize) -> Self {
        Self { min, max, points }
    }

    pub fn axis(&self) -> Vec<f64> {
        let h = (self.max - self.min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| if i + 1 == self.points { self.max } else { self.min + h * i as f64 })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(format!("expected min:max:points, got '{s}'"));
        };
        let min: f64 = a.trim().parse().map_err(|e| format!("'{a}': {e}"))?;
        let max: f64 = b.trim().parse().map_err(|e| format!("'{b}': {e}"))?;
        let points: usize = c.trim().parse().map_err(|e| format!("'{c}': {e}"))?;
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(format!("grid needs finite min < max, got {min}:{max}"));
        }
        if points < 2 {
            return Err(format!("grid needs at least 2 points per axis, got {points}"));
        }
        Ok(Self { min, max, points })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.min, self.max, self.points)
    }
}
