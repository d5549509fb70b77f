//! Implicit equations of a rational space curve: polynomials of bounded
//! degree vanishing on `(p1, p2, p3) / q`, found as an exact kernel.

use num_traits::{One, Zero};
use rand::Rng;

use crate::curve::SPACE_VARS;
use crate::lift::{LiftMode, RationalParam3};
use crate::poly::{MPoly, Rat, UPoly};

/// Exponents `(a, b, c)` with `a + b + c ≤ degree`.
fn exponents(degree: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for d in 0..=degree {
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                out.push([a, b, d - a - b]);
            }
        }
    }
    out
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<Rat>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rat::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A basis of the polynomials of degree at most `degree` that vanish on the
/// curve.
pub fn vanishing_polynomials(param: &RationalParam3, degree: u32) -> Vec<MPoly> {
    let monos = exponents(degree);
    let q = &param.denominator;
    let columns: Vec<UPoly<Rat>> = monos
        .iter()
        .map(|e| {
            let mut acc = q.pow(degree - e.iter().sum::<u32>());
            for (k, &ek) in e.iter().enumerate() {
                acc = &acc * &param.components[k].pow(ek);
            }
            acc
        })
        .collect();
    let height = columns.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    let mut rows: Vec<Vec<Rat>> = (0..height).map(|j| columns.iter().map(|c| c.coeff(j)).collect()).collect();
    let pivots = rref(&mut rows, monos.len());
    let free: Vec<usize> = (0..monos.len()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut terms = vec![(monos[f].to_vec(), Rat::one())];
            for (row, &pc) in rows.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    terms.push((monos[pc].to_vec(), -row[f].clone()));
                }
            }
            MPoly::from_terms(&SPACE_VARS, terms).primitive_normalized()
        })
        .collect()
}

/// Generators cutting out the curve: all vanishing quadrics, plus the
/// cubics when fewer than two quadrics exist.
pub fn implicit_equations(param: &RationalParam3) -> Vec<MPoly> {
    let quadrics = vanishing_polynomials(param, 2);
    if quadrics.len() >= 2 {
        return quadrics;
    }
    let mut gens = quadrics;
    gens.extend(vanishing_polynomials(param, 3).into_iter().filter(|g| g.total_degree() == 3));
    gens
}

/// A random rational curve of the given degree: monic square-free `q` and
/// numerators with small integer coefficients, the last of degree below
/// `deg q`.
pub fn random_rational_curve(rng: &mut impl Rng, degree: usize) -> RationalParam3 {
    let mut draw = |deg: usize, monic: bool| {
        let mut c: Vec<Rat> = (0..=deg).map(|_| Rat::from_integer(rng.random_range(-4i64..=4).into())).collect();
        if monic || c[deg].is_zero() {
            c[deg] = Rat::one();
        }
        UPoly::new("t", c)
    };
    loop {
        let q = draw(degree, true);
        let comps = [draw(degree, false), draw(degree, false), draw(degree - 1, false)];
        if !q.is_square_free().unwrap_or(false) {
            continue;
        }
        let coprime = comps.iter().try_fold(q.clone(), |g, p| g.gcd(p)).map(|g| g.deg() == 0).unwrap_or(false);
        if coprime && comps[0].gcd(&q).map(|g| g.deg() == 0).unwrap_or(false) {
            return RationalParam3 { components: comps, denominator: q, mode: LiftMode::Exact };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_upoly;

    #[test]
    fn twisted_cubic_lies_on_three_quadrics() {
        let up = |s: &str| parse_upoly(s, "t").unwrap();
        let p = RationalParam3 { components: [up("t"), up("t^2"), up("t^3")], denominator: up("1"), mode: LiftMode::Exact };
        let qs = vanishing_polynomials(&p, 2);
        assert_eq!(qs.len(), 3);
        for g in &qs {
            for t in [-2i64, 0, 1, 3] {
                let pt = [t, t * t, t * t * t].map(|v| Rat::from_integer(v.into()));
                assert!(g.eval(&pt).is_zero(), "{g}");
            }
        }
    }
}
