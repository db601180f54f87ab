//! Batch front-end over the library: load instances, run verifications,
//! scans, gap analyses and simulations, and emit CSV/JSON for external
//! plotting.
//!
//! Exit codes: 0 success, 1 verification failure (the paper-predicted kind,
//! e.g. invalid-q branches in pw mode), 2 malformed input or usage error.
//! Identical argv and seed produce byte-identical output files; every
//! output embeds the tool version, seed and tolerance.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::harness::{self, VerifyMode};
use crate::protocol::{simulate_protocol, PwStrategy, SharedBitMode, Strategy, StrategyWeights};
use crate::region::{
    self, helix_point, in_c, in_d, minimax_gap, minimax_gap_grid, ScanConfig, ScanRow,
};
use crate::sign::Sign;
use crate::tsirelson::TsirelsonImage;
use crate::DEFAULT_TOL;

const TOOL: &str = "hyperbit";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = TOOL, version, about = "Quantum vs hyperbit communication laboratory")]
struct Cli {
    /// Numerical tolerance for state/observable validation.
    #[arg(long, global = true, env = "HYPERBIT_TOL", default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Pw,
    Fixed,
    ZAware,
}

impl From<ModeArg> for VerifyMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Pw => VerifyMode::Pw,
            ModeArg::Fixed => VerifyMode::FixedWeights,
            ModeArg::ZAware => VerifyMode::ZAware,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SharedArg {
    /// r is Alice's outcome (the branch coordinate already carries it).
    Alice,
    /// r is an independent fair bit that Bob undoes with his copy.
    Independent,
}

impl From<SharedArg> for SharedBitMode {
    fn from(m: SharedArg) -> Self {
        match m {
            SharedArg::Alice => SharedBitMode::AliceOutcome,
            SharedArg::Independent => SharedBitMode::IndependentFair,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compare quantum and hyperbit expectations on every branch of an
    /// instance file.
    Verify {
        /// Instance JSON path.
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Pw)]
        mode: ModeArg,
        /// Write the full report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the per-branch summary as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Monte Carlo simulation of the protocol at a coordinate point.
    Simulate {
        /// Branch coordinates as `x,y,z`.
        #[arg(long)]
        point: String,
        /// `pw` (matched to the point) or four comma-separated weights.
        #[arg(long, default_value = "pw")]
        strategy: String,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SharedArg::Alice)]
        shared_bit: SharedArg,
        /// Write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Label a grid of (x, y, z) points and estimate vol(D)/vol(C).
    Scan {
        /// Grid sizes as `nx,ny,nz`.
        #[arg(long, default_value = "41,41,41")]
        grid: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        volume_samples: u64,
        /// Also compute the minimax gap per (x, y) column.
        #[arg(long)]
        with_gap: bool,
        /// Write the labeled grid as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the count/volume summary as JSON.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Minimax gap at one (x, y) point of the disk.
    Gap {
        /// Point as `x,y`.
        #[arg(long)]
        point: String,
        /// Cross-check against the dense grid oracle at this resolution.
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the boundary helices as CSV.
    Helix {
        /// Points per branch (inclusive of both endpoints).
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant suite.
    Selftest {
        /// Number of random instances per invariant block.
        #[arg(long, default_value_t = 3)]
        instances: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Run the CLI on `args` (without the program name); returns the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut argv: Vec<String> = vec![TOOL.to_owned()];
    argv.extend(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[derive(Serialize)]
struct Meta {
    tool: &'static str,
    version: &'static str,
    seed: Option<u64>,
    tolerance: f64,
}

fn meta(seed: Option<u64>, tol: f64) -> Meta {
    Meta {
        tool: TOOL,
        version: VERSION,
        seed,
        tolerance: tol,
    }
}

fn csv_banner(seed: Option<u64>, tol: f64) -> String {
    let seed = seed.map_or_else(|| "none".to_owned(), |s| s.to_string());
    format!("# {TOOL} v{VERSION} seed={seed} tol={tol}\n")
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn parse_floats(s: &str, expect: usize, what: &str) -> Result<Vec<f64>> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::InvalidArgument(format!("{what} `{s}`: {e}")))?;
    if parts.len() != expect {
        return Err(Error::InvalidArgument(format!(
            "{what} `{s}`: expected {expect} comma-separated values"
        )));
    }
    Ok(parts)
}

fn parse_grid(s: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::InvalidArgument(format!("grid `{s}`: {e}")))?;
    if parts.len() != 3 || parts.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "grid `{s}`: expected three positive sizes nx,ny,nz"
        )));
    }
    Ok((parts[0], parts[1], parts[2]))
}

fn dispatch(cli: Cli) -> Result<i32> {
    let tol = cli.tol;
    match cli.command {
        Command::Verify {
            instance,
            mode,
            out,
            csv,
        } => cmd_verify(&instance, mode.into(), out, csv, tol),
        Command::Simulate {
            point,
            strategy,
            samples,
            seed,
            shared_bit,
            out,
        } => cmd_simulate(
            &point,
            &strategy,
            samples,
            seed,
            shared_bit.into(),
            out,
            tol,
        ),
        Command::Scan {
            grid,
            seed,
            volume_samples,
            with_gap,
            out,
            summary,
        } => cmd_scan(&grid, seed, volume_samples, with_gap, out, summary, tol),
        Command::Gap {
            point,
            resolution,
            out,
        } => cmd_gap(&point, resolution, out, tol),
        Command::Helix { steps, out } => cmd_helix(steps, out, tol),
        Command::Selftest { instances, seed } => selftest(instances, seed),
    }
}

fn cmd_verify(
    path: &PathBuf,
    mode: VerifyMode,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
    tol: f64,
) -> Result<i32> {
    let json = fs::read_to_string(path)?;
    let inst = crate::quantum::BipartiteInstance::from_json(&json, tol)?;
    let report = harness::verify_equivalence(&inst, mode)?;

    for b in &report.branches {
        let status = if b.pass { "ok" } else { "FAIL" };
        let hyperbit = b
            .hyperbit
            .map_or_else(|| "-".to_owned(), |v| format!("{v:+.6}"));
        println!(
            "[{status}] a={} b={} A={} quantum={:+.6} hyperbit={hyperbit} (x,y,z)=({:+.4},{:+.4},{:+.4}){}",
            b.a,
            b.b,
            b.outcome,
            b.quantum,
            b.point.x,
            b.point.y,
            b.point.z,
            b.failure
                .as_deref()
                .map_or_else(String::new, |f| format!(" — {f}"))
        );
    }
    println!(
        "verdict: {} ({} branches, {} failures, mode {})",
        if report.all_matched {
            "MATCHED"
        } else {
            "NOT EQUIVALENT"
        },
        report.branches.len(),
        report.failures,
        report.mode
    );

    if let Some(path) = out {
        let doc = json!({ "meta": meta(None, tol), "report": report });
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    if let Some(path) = csv {
        let mut content = csv_banner(None, tol);
        content.push_str(harness::EquivalenceReport::csv_header());
        content.push('\n');
        for row in report.to_csv_rows() {
            content.push_str(&row);
            content.push('\n');
        }
        fs::write(path, content)?;
    }
    Ok(if report.all_matched { 0 } else { 1 })
}

fn cmd_simulate(
    point: &str,
    strategy: &str,
    samples: u64,
    seed: u64,
    mode: SharedBitMode,
    out: Option<PathBuf>,
    tol: f64,
) -> Result<i32> {
    let p = parse_floats(point, 3, "point")?;
    let point = region::RegionPoint::new(p[0], p[1], p[2]);
    let strategy = if strategy.trim() == "pw" {
        match PwStrategy::for_point(point.x, point.y) {
            Ok(pw) => Strategy::Pw(pw),
            Err(Error::InvalidFlipProbability { q }) => {
                eprintln!(
                    "PW protocol invalid at ({}, {}): flip probability q = {q} outside [0, 1]",
                    point.x, point.y
                );
                return Ok(1);
            }
            Err(e) => return Err(e),
        }
    } else {
        let k = parse_floats(strategy, 4, "strategy")?;
        Strategy::Fixed(StrategyWeights::new(k[0], k[1], k[2], k[3])?)
    };

    let report = simulate_protocol(point, &strategy, samples, seed, mode)?;
    let pass = report.passes(5.0);
    eprintln!(
        "[{}] empirical {:+.6} vs analytic {:+.6} (stderr {:.2e}, {} samples, seed {seed})",
        if pass { "ok" } else { "FAIL" },
        report.empirical_mean,
        report.analytic,
        report.std_error,
        report.samples
    );
    // JSON is the default for single-point queries; the CSV row form is
    // also embedded for harvesting
    let doc = json!({
        "meta": meta(Some(seed), tol),
        "point": point,
        "strategy": strategy.to_string(),
        "report": report,
        "csv_row": report.to_csv(&point, &strategy),
        "pass": pass,
    });
    emit(&out, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_scan(
    grid: &str,
    seed: u64,
    volume_samples: u64,
    with_gap: bool,
    out: Option<PathBuf>,
    summary: Option<PathBuf>,
    tol: f64,
) -> Result<i32> {
    let (nx, ny, nz) = parse_grid(grid)?;
    let cfg = ScanConfig {
        nx,
        ny,
        nz,
        seed,
        volume_samples,
        with_gap,
    };
    let (rows, sum) = region::scan_region(&cfg);

    let mut content = csv_banner(Some(seed), tol);
    content.push_str(ScanRow::csv_header());
    content.push('\n');
    for row in &rows {
        content.push_str(&row.to_csv());
        content.push('\n');
    }
    emit(&out, &content)?;

    eprintln!(
        "scan: {} points — {} in D, {} in C\\D, {} outside C; vol(D)/vol(C) ≈ {:.4}",
        sum.total, sum.inside_d, sum.in_c_not_d, sum.outside_c, sum.volume_fraction_d_in_c
    );
    if let Some(path) = summary {
        let doc = json!({ "meta": meta(Some(seed), tol), "summary": sum });
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    Ok(0)
}

fn cmd_gap(point: &str, resolution: Option<usize>, out: Option<PathBuf>, tol: f64) -> Result<i32> {
    let p = parse_floats(point, 2, "point")?;
    let (x, y) = (p[0], p[1]);
    if x * x + y * y > 1.0 + crate::region::REGION_TOL {
        return Err(Error::InvalidArgument(format!(
            "point ({x}, {y}) lies outside the unit disk"
        )));
    }
    let report = minimax_gap(x, y)?;
    let oracle = resolution
        .map(|res| minimax_gap_grid(x, y, res))
        .transpose()?;
    eprintln!(
        "gap at ({x}, {y}): {}{}",
        report.gap,
        oracle.map_or_else(String::new, |o| format!(" (grid oracle {o})"))
    );
    let doc = json!({
        "meta": meta(None, tol),
        "gap": report,
        "oracle_gap": oracle,
        "oracle_resolution": resolution,
    });
    emit(&out, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
    Ok(0)
}

fn cmd_helix(steps: usize, out: Option<PathBuf>, tol: f64) -> Result<i32> {
    if steps < 2 {
        return Err(Error::InvalidArgument(
            "helix needs at least 2 steps".into(),
        ));
    }
    let mut content = csv_banner(None, tol);
    content.push_str("tau,branch,x,y,z,t\n");
    for branch in Sign::BOTH {
        for i in 0..steps {
            let tau = std::f64::consts::PI * i as f64 / (steps - 1) as f64;
            let p = helix_point(tau, branch);
            content.push_str(&format!(
                "{},{},{},{},{},{}\n",
                tau,
                branch,
                p.x,
                p.y,
                p.z,
                p.target()
            ));
        }
    }
    emit(&out, &content)?;
    Ok(0)
}

fn selftest(instances: usize, seed: u64) -> Result<i32> {
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool, detail: String| {
        println!("[{}] {name}: {detail}", if ok { "ok" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    // isomorphism invariants on random instances
    let mut max_dev = 0.0f64;
    for k in 0..instances.max(1) as u64 {
        let dims = [(2usize, 2usize), (2, 3), (2, 4)][(k % 3) as usize];
        let inst = harness::random_instance(dims.0, dims.1, 2, 2, seed.wrapping_add(k))?;
        let image = TsirelsonImage::from_instance(&inst)?;
        let x1 = image.identity_vector();
        max_dev = max_dev.max((x1.norm() - 1.0).abs());
        for a in inst.alice_settings() {
            let xa = image.alice_vector(a)?;
            let xp = image.alice_projector_vector(a, Sign::Plus)?;
            let xm = image.alice_projector_vector(a, Sign::Minus)?;
            max_dev = max_dev
                .max(xp.add(xm).sub(x1).norm())
                .max(xa.dot(x1).abs())
                .max((xp.dot(x1) - 0.5).abs());
        }
        for a in inst.alice_settings() {
            for (b, outcome) in inst.bob_settings() {
                let t = image.coordinates(a, b, outcome)?.target();
                let eq = inst.bob_quantum_expectation(a, b, outcome)?;
                max_dev = max_dev.max((t - eq).abs());
            }
        }
    }
    check(
        "isomorphism invariants",
        max_dev < 1e-8,
        format!("max deviation {max_dev:.2e}"),
    );

    // Bell/CHSH anchor
    let image = TsirelsonImage::from_instance(&harness::bell_chsh_instance())?;
    let p = image.coordinates("0", "0", Sign::Plus)?;
    let anchor_dev = (p.x - 1.0)
        .abs()
        .max(p.y.abs())
        .max((p.z - std::f64::consts::FRAC_1_SQRT_2).abs());
    check(
        "Bell/CHSH anchor",
        anchor_dev < 1e-8,
        format!("coordinate deviation {anchor_dev:.2e}"),
    );

    // PW identity inside D
    let mut pw_dev = 0.0f64;
    for xi in region::grid_1d(21) {
        for yi in region::grid_1d(21) {
            if yi.abs() >= 1.0 || xi.abs() + yi.abs() > 1.0 {
                continue;
            }
            let q = crate::protocol::pw_q(xi, yi)?;
            for zi in region::grid_1d(21) {
                let v = crate::protocol::pw_expectation(yi, q, zi)?;
                pw_dev = pw_dev.max((v - (yi + xi * zi)).abs());
            }
        }
    }
    check(
        "PW identity inside D",
        pw_dev < 1e-12,
        format!("max |pw - t| = {pw_dev:.2e}"),
    );

    // q validity coincides with D
    let mut mismatches = 0usize;
    for xi in region::grid_1d(41) {
        for yi in region::grid_1d(41) {
            if yi.abs() >= 1.0 - 1e-9 || (xi.abs() + yi.abs() - 1.0).abs() <= 1e-9 {
                continue;
            }
            let valid = crate::protocol::pw_q(xi, yi).is_ok();
            if valid != (xi.abs() + yi.abs() <= 1.0) {
                mismatches += 1;
            }
        }
    }
    check(
        "q ∈ [0,1] ⟺ D boundary",
        mismatches == 0,
        format!("{mismatches} misclassifications"),
    );

    // gap: exact vs grid oracle, zero on the feasible side
    let anchor = minimax_gap(
        std::f64::consts::FRAC_1_SQRT_2,
        std::f64::consts::FRAC_1_SQRT_2,
    )?;
    let oracle = minimax_gap_grid(
        std::f64::consts::FRAC_1_SQRT_2,
        std::f64::consts::FRAC_1_SQRT_2,
        2000,
    )?;
    check(
        "minimax gap anchor",
        anchor.gap > 0.2 && (anchor.gap - oracle).abs() < 1e-3,
        format!("exact {:.6} vs oracle {:.6}", anchor.gap, oracle),
    );
    let rng = crate::protocol::CounterRng::new(seed);
    let mut zero_dev = 0.0f64;
    for i in 0..20u64 {
        let u = rng.uniform(i, 40);
        let v = rng.uniform(i, 41);
        let x = u * (1.0 - v); // |x| + |y| ≤ 1 by construction
        let y = v.min(1.0 - x);
        zero_dev = zero_dev.max(minimax_gap(x, y)?.gap);
    }
    check(
        "gap vanishes on D",
        zero_dev <= 1e-9,
        format!("max gap {zero_dev:.2e}"),
    );

    // Monte Carlo consistency
    let mut mc_ok = true;
    let cases: [(region::RegionPoint, Strategy); 3] = [
        (
            region::RegionPoint::new(1.0, 0.0, std::f64::consts::FRAC_1_SQRT_2),
            Strategy::Pw(PwStrategy::for_point(1.0, 0.0)?),
        ),
        (
            region::RegionPoint::new(0.3, 0.3, 0.5),
            Strategy::Fixed(region::weights_for(0.3, 0.3)?),
        ),
        (
            region::RegionPoint::new(0.0, 0.0, 0.0),
            Strategy::Fixed(StrategyWeights::uniform()),
        ),
    ];
    for (i, (point, strategy)) in cases.iter().enumerate() {
        let report = simulate_protocol(
            *point,
            strategy,
            200_000,
            seed.wrapping_add(100 + i as u64),
            SharedBitMode::AliceOutcome,
        )?;
        mc_ok &= report.passes(5.0);
    }
    check(
        "Monte Carlo within 5σ",
        mc_ok,
        "3 cases x 200k samples".into(),
    );

    // helix identities
    let mut helix_dev = 0.0f64;
    for branch in Sign::BOTH {
        for i in 0..=300 {
            let tau = std::f64::consts::PI * i as f64 / 300.0;
            let p = helix_point(tau, branch);
            helix_dev = helix_dev
                .max((p.x * p.x + p.y * p.y - 1.0).abs())
                .max((p.target().abs() - 1.0).abs());
        }
    }
    check(
        "helix identities",
        helix_dev < 1e-12,
        format!("max deviation {helix_dev:.2e}"),
    );

    // D ⊆ C
    let mut subset_ok = true;
    for i in 0..100_000u64 {
        let p = region::RegionPoint::new(
            2.0 * rng.uniform(i, 50) - 1.0,
            2.0 * rng.uniform(i, 51) - 1.0,
            2.0 * rng.uniform(i, 52) - 1.0,
        );
        if in_d(p) && !in_c(p) {
            subset_ok = false;
        }
    }
    check("D ⊆ C", subset_ok, "100k sampled points".into());

    println!(
        "selftest: {}",
        if failures == 0 {
            "all checks passed".to_owned()
        } else {
            format!("{failures} checks FAILED")
        }
    );
    Ok(if failures == 0 { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{bell_chsh_instance, biased_bob_instance};

    fn tmp(name: &str) -> PathBuf {
        let dir = std::env::temp_dir().join("hyperbit-cli-tests");
        fs::create_dir_all(&dir).unwrap();
        dir.join(name)
    }

    #[test]
    fn gap_inside_d_returns_zero_exit() {
        assert_eq!(run(["gap", "--point", "0.3,0.3"]), 0);
    }

    #[test]
    fn malformed_input_exits_two() {
        assert_eq!(run(["gap", "--point", "nonsense"]), 2);
        assert_eq!(run(["scan", "--grid", "0,2,2"]), 2);
        assert_eq!(run(["no-such-command"]), 2);
        assert_eq!(run(["verify", "/definitely/not/a/file.json"]), 2);
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run(["--help"]), 0);
    }

    #[test]
    fn verify_bell_chsh_passes_pw() {
        let path = tmp("bell_chsh.json");
        fs::write(&path, bell_chsh_instance().to_json().unwrap()).unwrap();
        assert_eq!(run(["verify", path.to_str().unwrap(), "--mode", "pw"]), 0);
    }

    #[test]
    fn verify_biased_bob_fails_pw_passes_z_aware() {
        let path = tmp("biased_bob.json");
        fs::write(&path, biased_bob_instance(0.5).unwrap().to_json().unwrap()).unwrap();
        assert_eq!(run(["verify", path.to_str().unwrap(), "--mode", "pw"]), 1);
        assert_eq!(
            run(["verify", path.to_str().unwrap(), "--mode", "z-aware"]),
            0
        );
    }

    #[test]
    fn simulate_reports_pw_failure_outside_d() {
        assert_eq!(
            run(["simulate", "--point", "0.9,0.5,0.2", "--samples", "10"]),
            1
        );
        assert_eq!(
            run([
                "simulate",
                "--point",
                "1.0,0.0,0.5",
                "--samples",
                "1000",
                "--seed",
                "3"
            ]),
            0
        );
    }

    #[test]
    fn scan_and_helix_write_files() {
        let scan_path = tmp("scan.csv");
        let summary_path = tmp("scan_summary.json");
        assert_eq!(
            run([
                "scan",
                "--grid",
                "5,5,5",
                "--volume-samples",
                "1000",
                "--out",
                scan_path.to_str().unwrap(),
                "--summary",
                summary_path.to_str().unwrap(),
            ]),
            0
        );
        let content = fs::read_to_string(&scan_path).unwrap();
        assert!(content.starts_with("# hyperbit"));
        assert!(content.contains(ScanRow::csv_header()));
        let summary = fs::read_to_string(&summary_path).unwrap();
        assert!(summary.contains("volume_fraction_d_in_c"));

        let helix_path = tmp("helix.csv");
        assert_eq!(
            run([
                "helix",
                "--steps",
                "10",
                "--out",
                helix_path.to_str().unwrap()
            ]),
            0
        );
        let helix = fs::read_to_string(&helix_path).unwrap();
        assert_eq!(helix.lines().count(), 2 + 20);
    }
}
