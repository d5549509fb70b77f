//! Projects the quartic of `data/quartic1.curve` onto the plane z = 0.

use std::path::PathBuf;
use std::time::Instant;

use spacecurve::io::read_curve;
use spacecurve::poly::rat::{format_sig, to_f64};
use spacecurve::projection::{project_affine, project_projective, Axis, ProjectionFrame};

fn main() -> spacecurve::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/quartic1.curve");
    let curve = read_curve(&path)?;
    let frame = ProjectionFrame::axis(Axis::Z);

    let start = Instant::now();
    let f = project_affine(&curve, &frame)?;
    println!("affine projection ({:.2?}), degree {}", start.elapsed(), f.degree());
    // monic in x^4, then rescaled to the units of the reference table
    let norm = f.normalized_by_pure_power().expect("x^4 term present");
    for (m, c) in norm.terms().rev() {
        println!("  x^{} y^{}: {}", m.0[0], m.0[1], format_sig(-1.812915331e42 * to_f64(c), 10));
    }

    let start = Instant::now();
    let proj = project_projective(&curve, &frame)?;
    println!("projective projection ({:.2?}): {}", start.elapsed(), proj.poly);
    println!("  w does not divide S: {}", proj.w_free);
    Ok(())
}
