//! Quartic 2 has no triple point after projecting along z, so the automatic
//! frame search moves on to the y axis where the oracle applies.

use std::path::PathBuf;

use spacecurve::pipeline::{run_pipeline, AxisChoice, PipelineConfig};
use spacecurve::projection::Axis;

fn main() -> spacecurve::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let eps = "1/600".parse().expect("valid tolerance");
    let base = PipelineConfig { distance_samples: 0, ..PipelineConfig::new(eps) };

    let forced = PipelineConfig { axis: AxisChoice::Fixed(Axis::Z), ..base.clone() };
    let doc = run_pipeline(&dir.join("quartic2.curve"), &forced)?;
    println!("z only: exit {} ({:?})", doc.exit_code, doc.negative);

    let auto = PipelineConfig { oracle: Some(dir.join("quartic2_q.param")), ..base };
    let doc = run_pipeline(&dir.join("quartic2.curve"), &auto)?;
    for f in &doc.frames {
        println!("{}: {}", f.frame, f.outcome);
    }
    println!("selected {:?}, exit {}", doc.selected_frame, doc.exit_code);
    for n in &doc.notes {
        println!("note: {n}");
    }
    Ok(())
}
