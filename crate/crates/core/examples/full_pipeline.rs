//! End to end on quartic 1: the JSON document the command line writes.

use std::path::PathBuf;

use spacecurve::pipeline::{run_pipeline, PipelineConfig};

fn main() -> spacecurve::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let cfg = PipelineConfig {
        oracle: Some(dir.join("quartic1_q.param")),
        distance_samples: 300,
        ..PipelineConfig::new("1/100".parse().expect("valid tolerance"))
    };
    let doc = run_pipeline(&dir.join("quartic1.curve"), &cfg)?;
    println!("{}", doc.to_json());
    eprintln!("exit code {}", doc.exit_code);
    Ok(())
}
