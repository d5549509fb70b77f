//! Plane parametrization without an oracle: a pencil of lines through a
//! (near) singular point, or an honest negative.

use spacecurve::curve::PlaneCurve;
use spacecurve::plane_param::{detect_cluster, parametrize_baseline, BaselineConfig, PlaneOutcome};

fn report(name: &str, src: &str, eps: f64) -> spacecurve::Result<()> {
    let f = PlaneCurve::parse(src, ["x", "y"])?;
    if let Some(c) = detect_cluster(&f, eps) {
        println!("{name}: point of multiplicity {} near ({:.6}, {:.6}), defect {:.2e}", c.multiplicity, c.point[0], c.point[1], c.defect);
    }
    match parametrize_baseline(&f, eps, &BaselineConfig::default())? {
        PlaneOutcome::Param(p) => {
            println!("{name}: x = ({}) / ({})", p.numerators[0], p.denominator);
            println!("{name}: y = ({}) / ({})", p.numerators[1], p.denominator);
            println!("{name}: residual {:.3e}", p.residual_on(&f, 200)?);
        }
        PlaneOutcome::NotEpsilonRational(why) => println!("{name}: not parametrized, {why}"),
    }
    Ok(())
}

fn main() -> spacecurve::Result<()> {
    report("folium", "x^3 + y^3 - 3*x*y", 1e-2)?;
    report("perturbed folium", "x^3 + y^3 - 3*x*y + 1/100000", 1e-2)?;
    report("smooth cubic", "y^2 - x^3 + x - 1", 1e-2)?;
    Ok(())
}
