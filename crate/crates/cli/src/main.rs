//! `cho`: evaluates the covariant oscillator library over grids and writes
//! plain CSV or JSON tables for plotting, or runs the verification suite.

mod args;
mod commands;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use args::{Cli, CommandKind, Format};
use commands::{build_table, run_verify, verify_table, RunConfig, UsageError};
use table::{write_csv, write_json, Table};

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_VERIFY: u8 = 3;

enum Failure {
    Usage(anyhow::Error),
    Io(anyhow::Error),
    Verify,
}

fn emit(cfg: &RunConfig, table: &Table) -> Result<(), Failure> {
    let mut sink: Box<dyn Write> = match &cfg.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {path}")).map_err(Failure::Io)?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let written = match cfg.format {
        Format::Csv => write_csv(&mut sink, cfg, table),
        Format::Json => write_json(&mut sink, cfg, table),
    };
    written.and_then(|()| sink.flush().map_err(Into::into)).map_err(|e| Failure::Io(e.context("write failed")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (kind, common) = cli.command.split();
    let cfg = RunConfig::resolve(kind, &common).map_err(|e| match e.downcast::<UsageError>() {
        Ok(u) => Failure::Usage(u.into()),
        Err(other) => Failure::Io(other),
    })?;
    if kind == CommandKind::Verify {
        let outcomes = run_verify(&cfg);
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        if cfg.out.is_some() {
            emit(&cfg, &verify_table(&outcomes))?;
        }
        // with no --out the report is the output
        let mut stdout = io::stdout().lock();
        let report = (|| -> io::Result<()> {
            for o in &outcomes {
                writeln!(stdout, "{o}")?;
            }
            writeln!(stdout, "{} checks, {} failed ({} profile)", outcomes.len(), failed, cfg.tolerance_profile)
        })();
        report.context("write failed").map_err(Failure::Io)?;
        return if failed == 0 { Ok(()) } else { Err(Failure::Verify) };
    }
    let table = build_table(&cfg).map_err(Failure::Usage)?;
    emit(&cfg, &table)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Verify) => {
            eprintln!("verification failed");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
