//! Sampled two-sided distance between quartic 1 and its parametrization,
//! with the escape probe at each real pole.

use std::path::PathBuf;

use spacecurve::io::read_curve;
use spacecurve::pipeline::{run_pipeline, PipelineConfig};
use spacecurve::verify::{sampled_hausdorff, HausdorffConfig};

fn main() -> spacecurve::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let cfg = PipelineConfig {
        oracle: Some(dir.join("quartic1_q.param")),
        distance_samples: 0,
        ..PipelineConfig::new("1/100".parse().expect("valid tolerance"))
    };
    let curve = read_curve(&dir.join("quartic1.curve"))?;
    let param = run_pipeline(&dir.join("quartic1.curve"), &cfg)?.result.expect("quartic 1 parametrizes");

    let report = sampled_hausdorff(&curve, &param, &HausdorffConfig { samples: 500, ..HausdorffConfig::default() })?;
    println!("curve -> param: max {:.4}, mean {:.4}", report.curve_to_param.max, report.curve_to_param.mean);
    println!("param -> curve: max {:.4}, mean {:.4}", report.param_to_curve.max, report.param_to_curve.mean);
    for p in &report.pole_probes {
        println!("pole {:.5} side {:+}: {:.4?} diverging {}", p.pole, p.side, p.distances, p.diverging);
    }
    println!("estimate {:.4} in the box of half-width {}, verdict {:?}", report.estimate, report.box_half_width, report.verdict);
    Ok(())
}
