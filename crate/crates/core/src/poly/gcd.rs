//! Multivariate gcd by content / primitive-part recursion.

use num_traits::One;

use super::mpoly::MPoly;
use super::rat::Rat;
use super::resultant::Dense;
use crate::error::{Error, Result};

fn main_var(a: &MPoly, b: &MPoly) -> Option<usize> {
    (0..a.nvars()).rev().find(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
}

fn content(d: &Dense) -> MPoly {
    let mut it = d.coeffs.iter().filter(|c| !c.is_zero());
    let first = it.next().expect("nonzero").clone();
    it.fold(first, |g, c| gcd_pair(&g, c))
}

fn primitive(d: &Dense) -> (MPoly, Dense) {
    let c = content(d);
    let pp = d.map(|k| k.exact_div(&c).expect("content divides"));
    (c, pp)
}

/// Gcd of two polynomials in the same ring, normalized to integer content 1
/// with positive leading coefficient. `gcd(p, 0)` is normalized `p`;
/// `gcd(0, 0)` is zero.
pub fn gcd_pair(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive_normalized();
    }
    if b.is_zero() {
        return a.primitive_normalized();
    }
    let Some(v) = main_var(a, b) else {
        return a.constant_like(Rat::one());
    };
    let (da, db) = (Dense::of(a, v), Dense::of(b, v));
    let (ca, pa) = primitive(&da);
    let (cb, pb) = primitive(&db);
    let c = gcd_pair(&ca, &cb);
    let (mut x, mut y) = if pa.degree() >= pb.degree() { (pa, pb) } else { (pb, pa) };
    let g = loop {
        if y.degree() == 0 {
            break a.constant_like(Rat::one());
        }
        let r = x.prem(&y);
        if r.is_zero() {
            break y.to_mpoly(a);
        }
        if r.degree() == 0 {
            break a.constant_like(Rat::one());
        }
        x = y;
        y = primitive(&r).1;
    };
    let g = Dense::of(&g, v);
    let g = if g.degree() == 0 { a.constant_like(Rat::one()) } else { primitive(&g).1.to_mpoly(a) };
    (&g * &c).primitive_normalized()
}

/// Gcd of several polynomials; errors when every input is zero.
pub fn gcd_many(ps: &[MPoly]) -> Result<MPoly> {
    let first = ps.iter().find(|p| !p.is_zero()).ok_or(Error::AllZero)?;
    Ok(ps.iter().fold(first.primitive_normalized(), |g, p| gcd_pair(&g, p)))
}
