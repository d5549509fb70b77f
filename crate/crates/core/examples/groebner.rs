//! Reduced Gröbner bases under grlex(x, y, z), and whether some element
//! carries its whole degree in z.

use std::path::PathBuf;

use spacecurve::groebner::{buchberger, is_groebner, pure_last_power_index, TermOrder};
use spacecurve::io::{parse_curve, read_curve};
use spacecurve::SpaceCurve;

fn show(name: &str, curve: &SpaceCurve) -> spacecurve::Result<()> {
    let order = TermOrder::grlex(&["x", "y", "z"]);
    let basis = buchberger(curve.generators(), &order)?;
    println!("{name}: {} elements, S-pairs reduce to zero: {}", basis.len(), is_groebner(&basis));
    for g in &basis {
        println!("  {g}");
    }
    match pure_last_power_index(&basis, &order) {
        Some(i) => println!("  element {i} has its whole degree in z"),
        None => println!("  no element is pure in z"),
    }
    Ok(())
}

fn main() -> spacecurve::Result<()> {
    show("twisted cubic", &parse_curve("vars: x, y, z\nF1: y - x^2\nF2: z - x^3\n")?)?;
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    show("quartic 1", &read_curve(&dir.join("quartic1.curve"))?)
}
