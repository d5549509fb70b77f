//! Best-effort factorization of square-free rational polynomials.
//!
//! Rational roots are found numerically and confirmed exactly; the remaining
//! part is split by recombining numeric roots into candidate integer factors
//! that are confirmed by exact division. Whatever cannot be split is kept as
//! one factor and treated as irreducible. Callers that later discover a
//! zero divisor modulo such a factor refine the list with [`refine`].

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rat::{approximate, common_denominator, integer_content, Rat};
use super::roots::roots_numeric;
use super::upoly::UPoly;
use crate::error::{Error, Result};

const MAX_SUBSET_ROOTS: usize = 12;
const MAX_ROUNDED_COEFF: f64 = 1e13;

/// Integer-primitive copy with positive leading coefficient.
fn integer_primitive(p: &UPoly<Rat>) -> UPoly<Rat> {
    let den = common_denominator(p.coeffs());
    let scaled = p.scale(&Rat::from_integer(den));
    let content = integer_content(scaled.coeffs());
    let mut factor = Rat::new(BigInt::one(), content);
    if scaled.lead().is_negative() {
        factor = -factor;
    }
    scaled.scale(&factor)
}

fn rational_roots(p: &UPoly<Rat>, roots: &[Complex64]) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    for z in roots.iter().filter(|z| z.im == 0.0) {
        for max_den in [1u64, 10, 100, 1_000, 100_000, 10_000_000] {
            if let Some(r) = approximate(z.re, max_den) {
                if p.eval(&r).is_zero() && !out.contains(&r) {
                    out.push(r);
                    break;
                }
            }
        }
    }
    out
}

/// Candidate factor `lead · Π (t − ξ)` rounded to integers.
fn rounded_candidate(var: &str, lead: f64, roots: &[Complex64]) -> Option<UPoly<Rat>> {
    let mut c = vec![Complex64::new(lead, 0.0)];
    for z in roots {
        let mut next = vec![Complex64::zero(); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1] += a;
            next[k] -= a * z;
        }
        c = next;
    }
    let mut coeffs = Vec::with_capacity(c.len());
    for z in c {
        if z.re.abs() > MAX_ROUNDED_COEFF || z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
            return None;
        }
        coeffs.push(Rat::from_integer(BigInt::from(z.re.round() as i64)));
    }
    let p = UPoly::new(var, coeffs);
    (p.deg() > 0).then_some(p)
}

/// Groups indices so that conjugate roots stay together.
fn conjugate_groups(roots: &[Complex64]) -> Vec<Vec<usize>> {
    let mut used = vec![false; roots.len()];
    let mut groups = Vec::new();
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut g = vec![i];
        if roots[i].im != 0.0 {
            if let Some(j) = (0..roots.len()).find(|&j| !used[j] && roots[j] == roots[i].conj()) {
                used[j] = true;
                g.push(j);
            }
        }
        groups.push(g);
    }
    groups
}

fn split_by_recombination(p: &UPoly<Rat>) -> Result<Vec<UPoly<Rat>>> {
    if p.deg() <= 1 {
        return Ok(vec![p.monic()?]);
    }
    let prim = integer_primitive(p);
    let roots = roots_numeric(&prim)?;
    if roots.len() > MAX_SUBSET_ROOTS {
        return Ok(vec![p.monic()?]);
    }
    let groups = conjugate_groups(&roots);
    let lead = prim.lead().to_f64().unwrap_or(f64::INFINITY);
    let ng = groups.len();
    let mut masks: Vec<u32> = (1..(1u32 << ng) - 1).collect();
    masks.sort_by_key(|m| {
        let size: usize = (0..ng).filter(|k| m & (1 << k) != 0).map(|k| groups[k].len()).sum();
        (size, *m)
    });
    for m in masks {
        let subset: Vec<Complex64> =
            (0..ng).filter(|k| m & (1 << k) != 0).flat_map(|k| groups[k].iter().map(|&i| roots[i])).collect();
        if subset.len() * 2 > roots.len() {
            break;
        }
        // the leading coefficient of an integer factor divides `lead`; try both extremes
        for l in [1.0, lead] {
            let Some(cand) = rounded_candidate(p.var(), l, &subset) else { continue };
            let cand = integer_primitive(&cand);
            if let Some(rest) = prim.exact_div(&cand)? {
                let mut out = split_by_recombination(&cand)?;
                out.extend(split_by_recombination(&rest)?);
                return Ok(out);
            }
        }
    }
    Ok(vec![p.monic()?])
}

/// Monic factors of a square-free polynomial whose product is `monic(q)`.
/// Factors are pairwise coprime; each is irreducible unless the search
/// could not split it.
pub fn factor_square_free(q: &UPoly<Rat>) -> Result<Vec<UPoly<Rat>>> {
    if q.deg() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !q.is_square_free()? {
        return Err(Error::NotSquareFree(format!("{q}")));
    }
    let prim = integer_primitive(q);
    let roots = roots_numeric(&prim)?;
    let mut factors = Vec::new();
    let mut rest = q.monic()?;
    for r in rational_roots(&prim, &roots) {
        let lin = UPoly::new(q.var(), vec![-r, Rat::one()]);
        rest = rest.exact_div(&lin)?.expect("confirmed root");
        factors.push(lin);
    }
    if rest.deg() > 0 {
        factors.extend(split_by_recombination(&rest)?);
    }
    factors.sort_by_key(|f| f.deg());
    Ok(factors)
}

/// Replaces the factor at `index` by `g` and its cofactor, where `g` is a
/// nontrivial divisor discovered during extension arithmetic.
pub fn refine(factors: &mut Vec<UPoly<Rat>>, index: usize, g: &UPoly<Rat>) -> Result<()> {
    let g = g.clone().with_var(factors[index].var()).monic()?;
    let rest = factors[index].exact_div(&g)?.ok_or(Error::FactorsNotCoprime)?.monic()?;
    if g.deg() == 0 || rest.deg() == 0 {
        return Err(Error::FactorsNotCoprime);
    }
    factors[index] = g;
    factors.insert(index + 1, rest);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_upoly;

    fn up(s: &str) -> UPoly<Rat> {
        parse_upoly(s, "t").unwrap()
    }

    fn product(fs: &[UPoly<Rat>]) -> UPoly<Rat> {
        fs.iter().fold(UPoly::constant("t", Rat::one()), |a, b| &a * b)
    }

    #[test]
    fn splits_linear_and_quadratic() {
        let q = up("(t - 1/2)*(t^2 + t + 3)*(3*t + 2)");
        let fs = factor_square_free(&q).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs), q.monic().unwrap());
    }

    #[test]
    fn splits_two_quadratics() {
        let q = up("(t^2 - 2)*(t^2 + 2*t + 5)");
        let fs = factor_square_free(&q).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|f| f.deg() == 2));
    }

    #[test]
    fn keeps_irreducible_quartic() {
        let q = up("t^4 - 1.494650450*t^3 - 0.6103552658*t^2 + 1.956830479*t - 0.9059858774");
        let fs = factor_square_free(&q).unwrap();
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn rejects_repeated_factor() {
        assert!(factor_square_free(&up("(t - 1)^2")).is_err());
    }

    #[test]
    fn refinement_splits_factor() {
        let mut fs = vec![up("t^2 - 1")];
        refine(&mut fs, 0, &up("t - 1")).unwrap();
        assert_eq!(fs, vec![up("t - 1"), up("t + 1")]);
    }
}
