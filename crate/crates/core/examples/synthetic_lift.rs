//! Round trip on a random rational space curve: implicitize, project,
//! feed the exact plane parametrization as oracle and lift.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spacecurve::implicit::{implicit_equations, random_rational_curve};
use spacecurve::lift::{coefficients_f64, lift, LiftMode};
use spacecurve::plane_param::{PlaneParam, Provenance};
use spacecurve::projection::{Axis, ProjectionFrame};
use spacecurve::SpaceCurve;

fn main() -> spacecurve::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let original = random_rational_curve(&mut rng, 3);
    let [p1, p2, p3] = &original.components;
    println!("q  = {}", original.denominator);
    println!("p3 = {p3}");

    let curve = SpaceCurve::new(&implicit_equations(&original))?;
    for g in curve.generators() {
        println!("  {g} = 0");
    }
    let plane = PlaneParam::new(p1.clone(), p2.clone(), original.denominator.clone(), Provenance::Oracle)?;
    let frame = ProjectionFrame::axis(Axis::Z);
    let lifted = lift(&frame.curve_in_frame(&curve)?, &plane, LiftMode::Exact)?;
    println!("lifted p3 ({:?}) = {}", lifted.mode, lifted.lifted);
    println!("matches: {}", coefficients_f64(&lifted.lifted) == coefficients_f64(p3));
    Ok(())
}
