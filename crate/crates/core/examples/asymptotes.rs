//! Asymptotes of quartic 1 from its equations and from its lifted
//! parametrization, paired by direction.

use std::path::PathBuf;

use spacecurve::pipeline::{run_pipeline, PipelineConfig};
use spacecurve::verify::{asymptotes_implicit, asymptotes_parametric, pair_asymptotes, Asymptote};

fn show(label: &str, list: &[Asymptote]) {
    for (i, a) in list.iter().enumerate() {
        if a.is_real {
            println!("{label} {i}: through {:.4?} along {:.4?}", a.anchor.map(|z| z.re), a.direction.map(|z| z.re));
        } else {
            println!("{label} {i}: complex, direction {:.4}, {:.4}, {:.4}", a.direction[0], a.direction[1], a.direction[2]);
        }
    }
}

fn main() -> spacecurve::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let cfg = PipelineConfig {
        oracle: Some(dir.join("quartic1_q.param")),
        distance_samples: 0,
        ..PipelineConfig::new("1/100".parse().expect("valid tolerance"))
    };
    let curve = spacecurve::io::read_curve(&dir.join("quartic1.curve"))?;
    let doc = run_pipeline(&dir.join("quartic1.curve"), &cfg)?;
    let param = doc.result.expect("quartic 1 parametrizes");

    let implicit = asymptotes_implicit(&curve)?;
    let parametric = asymptotes_parametric(&param)?;
    show("curve", &implicit);
    show("param", &parametric);
    for (i, j, defect) in pair_asymptotes(&implicit, &parametric)? {
        print!("curve {i} <-> param {j}: direction defect {defect:.1e}");
        if implicit[i].is_real {
            // parallel lines, so this is their separation
            print!(", {:.3} apart", implicit[i].distance_to(&parametric[j].anchor.map(|z| z.re)));
        }
        println!();
    }
    Ok(())
}
