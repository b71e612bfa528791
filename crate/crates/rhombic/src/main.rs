use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rhombic::io::{curve_digest, load_curve, write_curve};
use rhombic::json::{number, point, to_canonical_string};
use rhombic::report::{candidate_json, emit_report, run_sweep, uniform_angles, SweepReport, DEFAULT_TOL};
use rhombic::Error;
use rhombic_core::corners::find_special_corners;
use rhombic_core::curve::{generate, CurveSpec, Shape};
use rhombic_core::oracle::{brute_force_rhombi, compare_with_oracle, OracleConfig};
use rhombic_core::search::find_rhombi;
use serde_json::json;

const EXIT_INPUT: u8 = 1;
const EXIT_INVARIANT: u8 = 2;
const EXIT_FINDING: u8 = 3;

#[derive(Parser)]
#[command(name = "rhombic", version, about = "Find rhombi inscribed in polygonal Jordan curves")]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a fixture curve.
    Gen {
        /// circle, ellipse, square, rounded_polygon, random_star or lens.
        #[arg(long)]
        shape: String,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Shape parameter as key=value; repeatable.
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// List special corners and their angle sets.
    Corners {
        #[arg(long)]
        curve: PathBuf,
        /// Write JSON here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Search one angle.
    Find {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        angle: f64,
        /// Also search at `angle + perturb`, as a second entry.
        #[arg(long, allow_negative_numbers = true)]
        perturb: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search evenly spaced angles.
    Sweep {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Half-open angle range [A, B); default [0, π/2).
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        range: Option<Vec<f64>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the median search with the brute-force oracle at one angle.
    Verify {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        angle: f64,
        /// Oracle sample count.
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// Relative validation tolerance for reported rhombi.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    out: PathBuf,
    /// Directory for one SVG per entry.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Exit with status 3 when any entry is a finding.
    #[arg(long)]
    strict: bool,
    /// Include per-entry wall-clock times in the report.
    #[arg(long)]
    timing: bool,
}

fn spec_from(shape: &str, n: usize, params: &[String]) -> Result<CurveSpec, Error> {
    let shape = Shape::from_name(shape).ok_or_else(|| input(format!("unknown shape {shape:?}")))?;
    let mut spec = CurveSpec::new(shape, n);
    for raw in params {
        let (key, value) = raw.split_once('=').ok_or_else(|| input(format!("parameter {raw:?} is not key=value")))?;
        let known = CurveSpec::known_params(shape)
            .iter()
            .find(|k| **k == key.trim())
            .ok_or_else(|| input(format!("shape {} has no parameter {key:?}", shape.name())))?;
        let value: f64 = value.trim().parse().map_err(|_| input(format!("parameter {key}: {value:?} is not a number")))?;
        spec = spec.with(known, value);
    }
    spec.validate()?;
    Ok(spec)
}

fn input(message: String) -> Error {
    Error::Parse { context: "arguments".into(), message }
}

fn finish(report: &SweepReport, output: &OutputArgs) -> Result<ExitCode, Error> {
    emit_report(report, &output.out, output.svg.as_deref(), output.timing)?;
    let findings = report.findings();
    eprintln!(
        "{} entries, {} rhombi, {} findings, {} errors",
        report.entries.len(),
        report.candidate_count(),
        findings,
        report.errors()
    );
    Ok(if report.errors() > 0 {
        ExitCode::from(EXIT_INVARIANT)
    } else if output.strict && findings > 0 {
        ExitCode::from(EXIT_FINDING)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| input(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Gen { shape, n, params, out } => {
            let curve = generate(&spec_from(&shape, n, &params)?)?;
            write_curve(&curve, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Corners { curve, json } => {
            let c = load_curve(&curve, None)?;
            let corners: Vec<_> = find_special_corners(&c)
                .iter()
                .map(|r| {
                    let intervals: Vec<_> =
                        r.special_angles.pieces().iter().map(|&(a, b)| json!([number(a), number(b)])).collect();
                    json!({"point": point(r.point), "vertex_index": r.vertex_index, "intervals": intervals})
                })
                .collect();
            let text = to_canonical_string(&json!({"curve_digest": curve_digest(&c), "corners": corners}));
            match json {
                Some(path) => std::fs::write(&path, text).map_err(|e| Error::Io { path, source: e })?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Find { curve, angle, perturb, output } => {
            let c = load_curve(&curve, None)?;
            let mut angles = vec![angle];
            angles.extend(perturb.map(|d| angle + d));
            finish(&run_sweep(&c, &angles, output.tol)?, &output)
        }
        Command::Sweep { curve, steps, range, output } => {
            if steps == 0 {
                return Err(input("--steps must be positive".into()));
            }
            let (lo, hi) = range.map_or((0.0, FRAC_PI_2), |r| (r[0], r[1]));
            let c = load_curve(&curve, None)?;
            finish(&run_sweep(&c, &uniform_angles(steps, lo, hi), output.tol)?, &output)
        }
        Command::Verify { curve, angle, samples, out } => {
            let c = load_curve(&curve, None)?;
            let config = OracleConfig::with_samples(&c, samples);
            let found = find_rhombi(&c, angle)?.candidates;
            let oracle = brute_force_rhombi(&c, angle, &config)?;
            let radius = config.midpoint_tol * c.diameter();
            let report = compare_with_oracle(&found, &oracle, radius);
            let doc = json!({
                "format": "rhombus-match/1",
                "curve_digest": curve_digest(&c),
                "theta": number(angle),
                "samples": samples,
                "radius": number(radius),
                "median": found.iter().map(candidate_json).collect::<Vec<_>>(),
                "oracle": oracle.iter().map(candidate_json).collect::<Vec<_>>(),
                "matched": report.matched.iter().map(|&(i, j, d)| json!([i, j, number(d)])).collect::<Vec<_>>(),
                "median_only": report.found_only,
                "oracle_only": report.oracle_only,
            });
            std::fs::write(&out, to_canonical_string(&doc)).map_err(|e| Error::Io { path: out, source: e })?;
            eprintln!(
                "{} median, {} oracle, {} matched, {} median-only",
                found.len(),
                oracle.len(),
                report.matched.len(),
                report.found_only.len()
            );
            Ok(if report.found_only.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INVARIANT) })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Curve(rhombic_core::Error::InvariantViolation(_)) => ExitCode::from(EXIT_INVARIANT),
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}
