use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spacecurve::io::{read_curve, read_param, write_param};
use spacecurve::lift::{LiftMode, RationalParam3};
use spacecurve::pipeline::{export_samples, run_pipeline, AxisChoice, Epsilon, PipelineConfig, SampleSource};
use spacecurve::Error;

#[derive(Parser)]
#[command(version, about = "Approximate rational parametrization of real space curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Project, parametrize, lift and verify one curve.
    Run(RunArgs),
    /// Write real sample points of a curve or a parametrization as CSV.
    Export(ExportArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Curve file (`vars:` line and `F1:`, `F2:`, ... entries).
    curve: PathBuf,
    /// Tolerance in (0, 1), e.g. `1/100` or `0.01`.
    #[arg(long)]
    epsilon: Epsilon,
    /// Projection axis: x, y, z or auto.
    #[arg(long, default_value = "auto")]
    axis: AxisChoice,
    /// Lift mode: exact or numeric.
    #[arg(long, default_value = "exact")]
    mode: LiftMode,
    /// Plane parametrization file (`p1:`/`p2:`/`p3:` and `q:`).
    #[arg(long)]
    oracle_param: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Samples per side for the distance estimate (0 skips it).
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// Half-width of the sampling box.
    #[arg(long = "box", default_value_t = 10.0)]
    box_half_width: f64,
    /// Result document path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Continue past failed assumption checks.
    #[arg(long)]
    force: bool,
    /// With `--axis auto`, stop at the first frame whose plane curve is not
    /// parametrized instead of trying the next frame.
    #[arg(long)]
    stop_on_negative: bool,
    /// Also write the output parametrization (`p1:`, `p2:`, `p3:`, `q:`).
    #[arg(long)]
    write_param: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Implicit curve file.
    #[arg(long, conflicts_with = "param", required_unless_present = "param")]
    curve: Option<PathBuf>,
    /// Parametrization file with `p1:`, `p2:`, `p3:` and `q:`.
    #[arg(long)]
    param: Option<PathBuf>,
    /// Number of points.
    #[arg(long, default_value_t = 500)]
    n: usize,
    /// Parameter range `lo,hi`.
    #[arg(long, default_value = "-5,5", value_parser = parse_range)]
    range: (f64, f64),
    #[arg(long = "box", default_value_t = 10.0)]
    box_half_width: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or("expected `lo,hi`")?;
    let lo: f64 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let hi: f64 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err("lo exceeds hi".into());
    }
    Ok((lo, hi))
}

fn run(args: RunArgs) -> Result<i32, Error> {
    let cfg = PipelineConfig {
        axis: args.axis,
        mode: args.mode,
        oracle: args.oracle_param,
        seed: args.seed,
        distance_samples: args.samples,
        box_half_width: args.box_half_width,
        force: args.force,
        stop_on_negative: args.stop_on_negative,
        ..PipelineConfig::new(args.epsilon)
    };
    let doc = run_pipeline(&args.curve, &cfg)?;
    let json = doc.to_json();
    match args.out {
        Some(p) => std::fs::write(p, json)?,
        None => print!("{json}"),
    }
    if let (Some(path), Some(p)) = (args.write_param, &doc.result) {
        let [x, y, z] = &p.components;
        std::fs::write(path, write_param(&[("p1", x), ("p2", y), ("p3", z), ("q", &p.denominator)]))?;
    }
    Ok(doc.exit_code)
}

fn export(args: ExportArgs) -> Result<i32, Error> {
    let written = if let Some(path) = &args.param {
        let file = read_param(path)?;
        let get = |l: &str| file.get(l).cloned().ok_or_else(|| Error::Parse { line: 1, column: 1, message: format!("missing `{l}:` entry") });
        let param = RationalParam3 { components: [get("p1")?, get("p2")?, get("p3")?], denominator: get("q")?, mode: LiftMode::Exact };
        let src = SampleSource::Param { param: &param, lo: args.range.0, hi: args.range.1 };
        export_samples(&src, args.n, &args.out)?
    } else {
        let curve = read_curve(args.curve.as_deref().expect("clap requires one source"))?;
        let src = SampleSource::Curve { curve: &curve, half_width: args.box_half_width, seed: args.seed };
        export_samples(&src, args.n, &args.out)?
    };
    eprintln!("wrote {written} points to {}", args.out.display());
    Ok(0)
}

fn main() -> ExitCode {
    // usage errors share exit code 1 with unreadable input; 2 and 3 are taken
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Run(a) => run(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
