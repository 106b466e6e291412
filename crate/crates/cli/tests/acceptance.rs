//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::f64::consts::{LN_2, PI};
use std::process::Command;
use std::time::Instant;

use anyhow::{ensure, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cho::density::{
    compose_pure_density, entropy_closed, entropy_series, kernel_spectrum, pure_density, purity, reduced_closed,
    reduced_numeric, spectrum_rule, ReducedDensityKernel,
};
use cho::kinematics::{boost, from_light_cone, squeeze_light_cone, to_light_cone};
use cho::numerics::{FiniteDifferenceScheme, QuadratureRule};
use cho::oscillator::{mass_squared, reduced_equation_residual, square_grid};
use cho::separation::{verify_separation, Grid4, HadronMomentum};
use cho::squeezed::{expansion, schmidt_probabilities, squeezed_vacuum, truncation_for_tail};
use cho::wigner::{measured_radius, phase_space_radius, wigner_closed, wigner_numeric, wigner_rule, wigner_total_mass};
use cho::{MassShell, OscillatorState, PhaseSpacePoint, Rapidity, SpaceTimePoint};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict { passed, detail: detail.into() })
}

fn r(eta: f64) -> Rapidity {
    Rapidity::new(eta).expect("rapidity in range")
}

fn linspace(min: f64, max: f64, points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |i| min + (max - min) * i as f64 / (points - 1) as f64)
}

fn reduced_density_oracle() -> Result<Verdict> {
    let mut worst = 0.0f64;
    for eta in [0.0, 0.5, LN_2, 1.0, 2.0] {
        let k = ReducedDensityKernel::new(r(eta));
        let rule = QuadratureRule::for_rapidity(r(eta));
        let half = 4.0 * r(eta).cosh_2eta().sqrt();
        for z in linspace(-half, half, 21) {
            for zp in linspace(-half, half, 21) {
                worst = worst.max((reduced_closed(&k, z, zp) - reduced_numeric(r(eta), z, zp, &rule)?).abs());
            }
        }
    }
    verdict(worst < 1e-8, format!("max |closed - t-quadrature| = {worst:.2e} (< 1e-8)"))
}

fn entropy_identity() -> Result<Verdict> {
    let mut worst = 0.0f64;
    let mut worst_tail = 0.0f64;
    for eta in [0.25, 0.5, LN_2, 1.0, 2.0, 3.0] {
        let order = truncation_for_tail(r(eta), 1e-12);
        worst_tail = worst_tail.max(expansion(r(eta), order).tail_bound());
        worst = worst.max((entropy_closed(r(eta)) - entropy_series(r(eta), order, 1e-10)?).abs());
    }
    let closed = entropy_closed(r(LN_2));
    let series = entropy_series(r(LN_2), truncation_for_tail(r(LN_2), 1e-12), 1e-10)?;
    let at_ln2 = (closed - 1.02097).abs() < 1e-4 && (series - 1.02097).abs() < 1e-4;
    verdict(
        worst < 1e-9 && worst_tail < 1e-10 && at_ln2,
        format!("max |closed - series| = {worst:.2e} (< 1e-9), tail <= {worst_tail:.1e}; S(ln 2) = {closed:.6} / {series:.6}"),
    )
}

fn purity_check() -> Result<Verdict> {
    let mut worst = 0.0f64;
    for eta in [0.0, 0.25, 0.5, LN_2, 1.0, 1.5, 2.0] {
        let p = purity(r(eta), &QuadratureRule::for_rapidity(r(eta)))?;
        worst = worst.max((p.numeric - p.closed).abs());
    }
    let rest = purity(Rapidity::zero(), &QuadratureRule::for_rapidity(Rapidity::zero()))?.numeric;
    verdict(
        worst < 1e-7 && (rest - 1.0).abs() < 1e-7,
        format!("max |Tr rho^2 - 1/cosh 2eta| = {worst:.2e} (< 1e-7); at rest {rest:.12}"),
    )
}

fn idempotency() -> Result<Verdict> {
    let mut worst = 0.0f64;
    let mut pairs = 0;
    for eta in [0.0, 1.0] {
        let s = OscillatorState::ground(r(eta));
        let rule = QuadratureRule::for_rapidity(r(eta));
        for i in 0..5 {
            let a = SpaceTimePoint::new(-1.2 + 0.6 * i as f64, 0.9 - 0.45 * i as f64);
            for j in 0..5 {
                let b = SpaceTimePoint::new(1.0 - 0.5 * j as f64, -0.4 + 0.3 * j as f64);
                let composed = compose_pure_density(&s, a, b, &rule)?;
                worst = worst.max((composed - pure_density(&s, a.z, a.t, b.z, b.t)).abs());
                pairs += 1;
            }
        }
    }
    verdict(worst < 1e-6, format!("{pairs} pairs, max |rho*rho - rho| = {worst:.2e} (< 1e-6)"))
}

fn series_reconstruction() -> Result<Verdict> {
    let mut worst = 0.0f64;
    for eta in [0.5, 1.0, 2.0] {
        let rule = QuadratureRule::symmetric(8.0 * r(eta).cosh_2eta().sqrt(), 0.1)?;
        let (x, w) = (rule.nodes(), rule.weights());
        let closed: Vec<f64> = x.iter().flat_map(|&a| x.iter().map(move |&b| squeezed_vacuum(r(eta), a, b))).collect();
        for k in [10, 30, 60] {
            let e = expansion(r(eta), k);
            let series = e.reconstruct_tensor(x, x);
            let mut gap = 0.0;
            for i in 0..x.len() {
                for j in 0..x.len() {
                    gap += w[i] * w[j] * (series[i * x.len() + j] - closed[i * x.len() + j]).powi(2);
                }
            }
            worst = worst.max((gap - r(eta).tanh().powi(2 * (k as i32 + 1))).abs());
        }
    }
    verdict(worst < 1e-8, format!("max |L2 gap^2 - tanh^(2(K+1))| = {worst:.2e} (< 1e-8)"))
}

fn equation_residual() -> Result<Verdict> {
    // h = 1e-3 with the fourth-order stencil
    let scheme = FiniteDifferenceScheme::new(1e-3, 4)?;
    let mut worst = 0.0f64;
    for eta in [0.0, 0.5, 1.0, 2.0] {
        let grid = square_grid(4.0 * r(eta).cosh_2eta().sqrt(), 41);
        for n in 0..=5 {
            worst = worst.max(reduced_equation_residual(&OscillatorState::new(n, r(eta)), &grid, &scheme));
        }
    }
    verdict(worst < 1e-4, format!("max relative residual = {worst:.2e} (< 1e-4)"))
}

fn wigner_oracle() -> Result<Verdict> {
    let mut worst = 0.0f64;
    let mut mass = 0.0f64;
    let mut radius = 0.0f64;
    for eta in [0.0, 0.5, 1.0, 2.0] {
        let half = 3.0 * r(eta).cosh_2eta().sqrt();
        let rule = wigner_rule(r(eta), half);
        for z in linspace(-half, half, 15) {
            for p in linspace(-half, half, 15) {
                let pt = PhaseSpacePoint::new(z, p);
                worst = worst.max((wigner_numeric(r(eta), pt, &rule)?.value - wigner_closed(r(eta), pt)).abs());
            }
        }
        mass = mass.max((wigner_total_mass(r(eta), &QuadratureRule::for_rapidity(r(eta)))? - PI).abs());
        for angle in [0.0, 1.1, 2.5] {
            radius = radius.max((measured_radius(r(eta), angle, 1e-10)? - phase_space_radius(r(eta))).abs());
        }
    }
    verdict(
        worst < 1e-7 && mass < 1e-6 && radius < 1e-6,
        format!("numeric vs closed {worst:.2e} (< 1e-7), |mass - pi| {mass:.2e} (< 1e-6), |radius - sqrt cosh 2eta| {radius:.2e} (< 1e-6)"),
    )
}

fn kernel_spectrum_check() -> Result<Verdict> {
    let mut worst = 0.0f64;
    for eta in [0.5, 1.0, 1.5] {
        let values = kernel_spectrum(r(eta), &spectrum_rule(r(eta)), 10);
        ensure!(values.len() == 10, "expected 10 eigenvalues, got {}", values.len());
        let p = schmidt_probabilities(r(eta), 9);
        worst = worst.max(values.iter().zip(&p).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
    }
    verdict(worst < 1e-6, format!("max |lambda_k - p_k| over top 10 = {worst:.2e} (< 1e-6)"))
}

fn kinematics() -> Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut group, mut interval, mut conj, mut uv) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let p = SpaceTimePoint::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let (a, b) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let norm = p.z.hypot(p.t);
        // errors relative to the operator norm times the point norm
        let lhs = boost(boost(p, r(a)), r(b));
        let rhs = boost(p, r(a + b));
        group = group.max((lhs.z - rhs.z).hypot(lhs.t - rhs.t) / ((a.abs() + b.abs()).exp() * norm));
        let q = boost(p, r(a));
        interval = interval.max((q.interval() - p.interval()).abs() / ((2.0 * a.abs()).exp() * norm * norm));
        let via = from_light_cone(squeeze_light_cone(to_light_cone(p), r(a)));
        conj = conj.max((via.z - q.z).hypot(via.t - q.t) / (a.abs().exp() * norm));
        let lc = to_light_cone(p);
        let sq = squeeze_light_cone(lc, r(a));
        uv = uv.max((sq.u * sq.v - lc.u * lc.v).abs() / (lc.u * lc.v).abs().max(f64::MIN_POSITIVE));
    }
    let worst = group.max(interval).max(conj).max(uv);
    verdict(
        worst < 1e-12,
        format!("group {group:.1e}, interval {interval:.1e}, conjugacy {conj:.1e}, uv {uv:.1e} (< 1e-12, relative)"),
    )
}

fn separation() -> Result<Verdict> {
    let ms = MassShell::new(0.5, 1);
    let p = HadronMomentum::on_shell(mass_squared(&ms), 0.5);
    let report = verify_separation(&ms, 1, p, &Grid4::new(-4.0, 4.0, 41), &FiniteDifferenceScheme::default(), 1e-3);
    println!("{report}");
    verdict(report.separates(), format!("residual {:.2e} (< 1e-3) on 41^4 points", report.residual.max(report.relative_residual)))
}

fn cli_determinism() -> Result<Verdict> {
    let bin = env!("CARGO_BIN_EXE_cho");
    let runs: [&[&str]; 5] = [
        &["wavefunction", "--eta", "0.8", "--n", "2", "--grid", "-4:4:61"],
        &["density", "--eta", "-0.5:1.5:0.5", "--grid", "-4:4:41"],
        &["entropy-curve", "--eta", "0:3:0.1"],
        &["wigner-grid", "--eta", "0.6931", "--grid", "-4:4:81"],
        &["schmidt", "--eta", "0.25:2:0.25"],
    ];
    let data = |args: &[&str], threads: &str, json: bool| -> Result<Vec<u8>> {
        let mut cmd = Command::new(bin);
        cmd.args(args).env("RAYON_NUM_THREADS", threads);
        if json {
            cmd.args(["--format", "json"]);
        }
        let out = cmd.output()?;
        ensure!(out.status.success(), "{args:?} exited with {}", out.status);
        let text = String::from_utf8(out.stdout)?;
        Ok(text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n").into_bytes())
    };
    for args in runs {
        for json in [false, true] {
            let first = data(args, "1", json)?;
            ensure!(!first.is_empty(), "{args:?} produced no data");
            for threads in ["1", "4"] {
                ensure!(data(args, threads, json)? == first, "{args:?} output differs between runs");
            }
        }
    }
    let verify = Command::new(bin).args(["verify", "--tolerance-profile", "default"]).output()?;
    verdict(verify.status.code() == Some(0), format!("5 commands x 2 formats byte-identical across runs and thread counts; verify exit {:?}", verify.status.code()))
}

type Criterion = (&'static str, fn() -> Result<Verdict>);

fn main() {
    let criteria: [Criterion; 11] = [
        ("reduced-density oracle", reduced_density_oracle),
        ("entropy identity", entropy_identity),
        ("purity", purity_check),
        ("pure-state idempotency", idempotency),
        ("series reconstruction", series_reconstruction),
        ("differential-equation residual", equation_residual),
        ("Wigner oracle", wigner_oracle),
        ("kernel spectrum", kernel_spectrum_check),
        ("kinematics", kinematics),
        ("separation report", separation),
        ("CLI determinism", cli_determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (passed, detail) = match check() {
            Ok(v) => (v.passed, v.detail),
            Err(e) => (false, format!("error: {e:#}")),
        };
        if !passed {
            failures += 1;
        }
        println!(
            "{} {:>2}. {name}: {detail} [{:.1}s]",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
