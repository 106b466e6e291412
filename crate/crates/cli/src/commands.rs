use anyhow::{bail, Result};
use rayon::prelude::*;
use serde::Serialize;

use cho::density::{entropy_closed, reduced_closed, ReducedDensityKernel};
use cho::oscillator::psi_boosted;
use cho::squeezed::{default_truncation, expansion};
use cho::verify::{self, CheckOutcome, VerifyOptions};
use cho::wigner::wigner_closed;
use cho::{OscillatorState, PhaseSpacePoint, Rapidity};

use crate::args::{CommandKind, CommonArgs, EtaSpec, Format, GridSpec};
use crate::table::{Cell, Table};

/// Everything that determines a run's output, with defaults resolved.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub eta: String,
    pub n: usize,
    pub grid: Option<String>,
    pub order: Option<usize>,
    pub out: Option<String>,
    pub format: Format,
    pub quad_order: usize,
    pub fd_step: f64,
    pub tolerance_profile: String,
    #[serde(skip)]
    etas: Vec<Rapidity>,
    #[serde(skip)]
    grid_spec: Option<GridSpec>,
    #[serde(skip)]
    verify: VerifyOptions,
}

/// A command-line value that parsed but is out of range for the command.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

impl RunConfig {
    pub fn resolve(command: CommandKind, a: &CommonArgs) -> Result<Self> {
        let eta = a.eta.clone().unwrap_or(match command {
            CommandKind::EntropyCurve => EtaSpec::Range { start: 0.0, stop: 3.0, step: 0.1 },
            _ => EtaSpec::Single(0.0),
        });
        let mut etas = Vec::new();
        for v in eta.values() {
            match Rapidity::new(v) {
                Ok(r) => etas.push(r),
                Err(e) => return usage(e.to_string()),
            }
        }
        let grid_spec = match command {
            CommandKind::Wavefunction | CommandKind::Density => Some(a.grid.unwrap_or(GridSpec::new(-4.0, 4.0, 41))),
            CommandKind::WignerGrid => Some(a.grid.unwrap_or(GridSpec::new(-4.0, 4.0, 81))),
            _ => None,
        };
        if command == CommandKind::Density && a.n != 0 {
            return usage("density is available for the ground state only (n = 0)");
        }
        if !(a.fd_step > 0.0 && a.fd_step.is_finite()) {
            return usage(format!("--fd-step must be positive, got {}", a.fd_step));
        }
        if a.quad_order < 2 {
            return usage(format!("--quad-order must be at least 2, got {}", a.quad_order));
        }
        let verify = VerifyOptions {
            profile: a.tolerance_profile,
            quad_order: a.quad_order,
            fd_step: a.fd_step,
            ..VerifyOptions::default()
        };
        Ok(Self {
            command,
            eta: eta.to_string(),
            n: a.n,
            grid: grid_spec.map(|g| g.to_string()),
            order: a.order,
            out: a.out.as_ref().map(|p| p.display().to_string()),
            format: a.format,
            quad_order: a.quad_order,
            fd_step: a.fd_step,
            tolerance_profile: a.tolerance_profile.to_string(),
            etas,
            grid_spec,
            verify,
        })
    }

    pub fn verify_options(&self) -> VerifyOptions {
        self.verify
    }
}

/// Evaluates `f` over the grid for each rapidity; rows are `eta, x, y, f`.
fn grid_table(cfg: &RunConfig, columns: [&'static str; 4], f: impl Fn(Rapidity, f64, f64) -> f64 + Sync) -> Table {
    let axis = cfg.grid_spec.expect("grid resolved").axis();
    let mut table = Table::new(columns.to_vec());
    for &eta in &cfg.etas {
        let cells: Vec<(f64, f64)> = axis.iter().flat_map(|&x| axis.iter().map(move |&y| (x, y))).collect();
        let values: Vec<f64> = cells.par_iter().map(|&(x, y)| f(eta, x, y)).collect();
        table.rows.extend(
            cells.iter().zip(values).map(|(&(x, y), v)| vec![Cell::Real(eta.eta()), Cell::Real(x), Cell::Real(y), Cell::Real(v)]),
        );
    }
    table.axes.insert(columns[1], axis.clone());
    table.axes.insert(columns[2], axis);
    table
}

pub fn build_table(cfg: &RunConfig) -> Result<Table> {
    Ok(match cfg.command {
        CommandKind::Wavefunction => {
            let n = cfg.n;
            grid_table(cfg, ["eta", "z", "t", "psi"], |eta, z, t| psi_boosted(&OscillatorState::new(n, eta), z, t))
        }
        CommandKind::Density => grid_table(cfg, ["eta", "z", "zp", "rho"], |eta, z, zp| {
            reduced_closed(&ReducedDensityKernel::new(eta), z, zp)
        }),
        CommandKind::WignerGrid => {
            grid_table(cfg, ["eta", "z", "p", "w"], |eta, z, p| wigner_closed(eta, PhaseSpacePoint::new(z, p)))
        }
        CommandKind::EntropyCurve => {
            let mut t = Table::new(vec!["eta", "entropy"]);
            t.rows = cfg.etas.iter().map(|&e| vec![Cell::Real(e.eta()), Cell::Real(entropy_closed(e))]).collect();
            t
        }
        CommandKind::Schmidt => {
            let mut t = Table::new(vec!["eta", "k", "coefficient", "probability"]);
            for &eta in &cfg.etas {
                let order = cfg.order.unwrap_or_else(|| default_truncation(eta));
                let e = expansion(eta, order);
                for (k, &c) in e.coeffs().iter().enumerate() {
                    t.rows.push(vec![Cell::Real(eta.eta()), Cell::Int(k as u64), Cell::Real(c), Cell::Real(c * c)]);
                }
            }
            t
        }
        CommandKind::Verify => bail!("verify does not produce a data table"),
    })
}

pub fn verify_table(outcomes: &[CheckOutcome]) -> Table {
    let mut t = Table::new(vec!["module", "check", "measured", "tolerance", "passed"]);
    t.rows = outcomes
        .iter()
        .map(|o| {
            vec![
                Cell::Text(o.module),
                Cell::Text(o.name),
                Cell::Real(o.measured),
                Cell::Real(o.tolerance),
                Cell::Int(u64::from(o.passed)),
            ]
        })
        .collect();
    t
}

pub fn run_verify(cfg: &RunConfig) -> Vec<CheckOutcome> {
    verify::run(&cfg.verify_options())
}
