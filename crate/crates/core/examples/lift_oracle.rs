//! Lifts the oracle plane parametrization of quartic 1 back to space and
//! prints the targets the third numerator interpolates.

use std::path::PathBuf;

use spacecurve::io::read_curve;
use spacecurve::lift::{assemble, coefficients_f64, lift, LiftMode};
use spacecurve::plane_param::load_oracle_param;
use spacecurve::projection::{Axis, ProjectionFrame};

fn main() -> spacecurve::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let curve = read_curve(&dir.join("quartic1.curve"))?;
    let oracle = load_oracle_param(&dir.join("quartic1_q.param"))?;
    let frame = ProjectionFrame::axis(oracle.axis.unwrap_or(Axis::Z));
    let in_frame = frame.curve_in_frame(&curve)?;

    let lifted = lift(&in_frame, &oracle.param, LiftMode::Exact)?;
    for w in &lifted.warnings {
        println!("warning: {w}");
    }
    for t in &lifted.roots {
        println!("pole {:.6}  slope {:.6}  chi {:.6}", t.pole, t.slope, t.chi);
    }
    println!("p3 coefficients (constant first): {:?}", coefficients_f64(&lifted.lifted));
    println!("interpolation defect {:.2e}", lifted.interpolation_defect);

    let (_, space) = assemble(&oracle.param, &lifted.lifted, &frame, lifted.mode)?;
    for t in [-1.0, 0.0, 2.0] {
        let p = space.eval(t);
        println!("t = {t:>4}: ({:.6}, {:.6}, {:.6}), residual {:.2e}", p[0], p[1], p[2], curve.residual(&p));
    }
    Ok(())
}
