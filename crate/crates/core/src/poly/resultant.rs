//! Resultants by the subresultant pseudo-remainder sequence.

use num_traits::One;

use super::mpoly::MPoly;
use super::rat::Rat;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// A polynomial viewed as dense in one variable with coefficients in the
/// same ring (the variable itself absent from the coefficients).
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub idx: usize,
    pub coeffs: Vec<MPoly>,
}

impl Dense {
    pub fn of(p: &MPoly, idx: usize) -> Self {
        let mut d = Dense { idx, coeffs: p.coeffs_in(idx) };
        d.trim();
        d
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> &MPoly {
        self.coeffs.last().expect("nonzero")
    }

    pub fn to_mpoly(&self, like: &MPoly) -> MPoly {
        if self.coeffs.is_empty() {
            return like.zero_like();
        }
        MPoly::from_coeffs_in(self.idx, &self.coeffs)
    }

    pub fn map(&self, f: impl Fn(&MPoly) -> MPoly) -> Dense {
        let mut d = Dense { idx: self.idx, coeffs: self.coeffs.iter().map(f).collect() };
        d.trim();
        d
    }

    /// Pseudo-remainder: `lc(b)^(deg a − deg b + 1) · a mod b`.
    pub fn prem(&self, b: &Dense) -> Dense {
        let db = b.degree();
        let lb = b.lead().clone();
        let mut r = self.clone();
        if r.is_zero() || r.degree() < db {
            return r;
        }
        let delta = r.degree() - db;
        let mut steps = 0usize;
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.lead().clone();
            let mut next: Vec<MPoly> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (j, bj) in b.coeffs.iter().enumerate() {
                next[shift + j] = &next[shift + j] - &(&lr * bj);
            }
            r = Dense { idx: r.idx, coeffs: next };
            r.trim();
            steps += 1;
        }
        let missing = (delta + 1).saturating_sub(steps) as u32;
        if missing > 0 {
            let f = lb.pow(missing);
            r = r.map(|c| c * &f);
        }
        r
    }
}

fn div_exact(a: &MPoly, b: &MPoly) -> MPoly {
    a.exact_div(b).expect("subresultant division is exact")
}

/// Resultant of `f` and `g` with respect to `var`. The eliminated variable
/// is removed from the result's ring.
pub fn resultant_wrt(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly> {
    let idx = f.index_of(var)?;
    let r = resultant_idx(f, g, idx)?;
    r.drop_var(idx)
}

/// Resultant in variable `idx`, kept in the original ring.
pub fn resultant_idx(f: &MPoly, g: &MPoly, idx: usize) -> Result<MPoly> {
    let var = f.vars()[idx].clone();
    let (mut a, mut b) = (Dense::of(f, idx), Dense::of(g, idx));
    if a.is_zero() || b.is_zero() || a.degree() == 0 || b.degree() == 0 {
        return Err(Error::DegreeZeroIn { var });
    }
    let one = f.constant_like(Rat::one());
    let mut sign_neg = false;
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign_neg = true;
        }
    }
    let (mut gg, mut h) = (one.clone(), one.clone());
    loop {
        let delta = a.degree() - b.degree();
        if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.prem(&b);
        if r.is_zero() {
            return Ok(f.zero_like());
        }
        let denom = &gg * &h.pow(delta as u32);
        a = b;
        b = r.map(|c| div_exact(c, &denom));
        gg = a.lead().clone();
        h = if delta == 0 {
            h
        } else {
            div_exact(&gg.pow(delta as u32), &h.pow(delta as u32 - 1))
        };
        if b.degree() == 0 {
            break;
        }
    }
    let da = a.degree() as u32;
    let lb = b.lead().clone();
    let mut res = div_exact(&lb.pow(da), &h.pow(da - 1));
    if sign_neg {
        res = -&res;
    }
    Ok(res)
}

/// Resultant of two univariate rational polynomials.
pub fn resultant_univariate(a: &UPoly<Rat>, b: &UPoly<Rat>) -> Result<Rat> {
    let v = [a.var()];
    let pa = MPoly::from_upoly(&v, 0, a);
    let pb = MPoly::from_upoly(&v, 0, &b.clone().with_var(a.var()));
    Ok(resultant_idx(&pa, &pb, 0)?.constant_term())
}

/// Discriminant-style check helper: `Res(p, p')`.
pub fn discriminant_resultant(p: &UPoly<Rat>) -> Result<Rat> {
    resultant_univariate(p, &p.derivative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::poly::rat::rat;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn p(s: &str) -> MPoly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    /// Sylvester determinant by fraction-exact Gaussian elimination.
    fn sylvester_det(a: &[Rat], b: &[Rat]) -> Rat {
        let (m, n) = (a.len() - 1, b.len() - 1);
        let size = m + n;
        let mut mat = vec![vec![Rat::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in b.iter().rev().enumerate() {
                mat[n + i][i + j] = c.clone();
            }
        }
        let mut det = rat(1);
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
                return Rat::zero();
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            det *= mat[col][col].clone();
            for r in col + 1..size {
                let f = &mat[r][col] / &mat[col][col];
                for c in col..size {
                    let v = &mat[col][c] * &f;
                    mat[r][c] -= v;
                }
            }
        }
        det
    }

    #[test]
    fn linear_elimination() {
        let r = resultant_wrt(&p("z - x"), &p("z - y"), "z").unwrap();
        let expect = parse_poly("x - y", &["x", "y"]).unwrap();
        assert!(r == expect || r == -&expect);
    }

    #[test]
    fn substitution_case() {
        let r = resultant_wrt(&p("z^2 - x"), &p("z - y"), "z").unwrap();
        let expect = parse_poly("y^2 - x", &["x", "y"]).unwrap();
        assert!(r == expect || r == -&expect);
    }

    #[test]
    fn degree_zero_is_an_error() {
        assert!(matches!(resultant_wrt(&p("x + y"), &p("z"), "z"), Err(Error::DegreeZeroIn { .. })));
    }

    #[test]
    fn univariate_matches_sylvester() {
        let a = UPoly::new("t", vec![rat(3), rat(-1), rat(0), rat(2)]);
        let b = UPoly::new("t", vec![rat(1), rat(5), rat(-2)]);
        assert_eq!(resultant_univariate(&a, &b).unwrap(), sylvester_det(a.coeffs(), b.coeffs()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn specialization_commutes(
            fa in prop::collection::vec(-5i64..=5, 10),
            fb in prop::collection::vec(-5i64..=5, 10),
            sx in -4i64..=4, sy in -4i64..=4,
        ) {
            let vars = ["x", "y", "z"];
            let monos: [[u32; 3]; 10] = [[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,0,1],[0,1,1],[0,0,2],[2,0,0],[0,0,3]];
            let mk = |c: &Vec<i64>, lead: i64| {
                let mut poly = MPoly::from_terms(&vars, monos.iter().zip(c).map(|(m, &k)| (m.to_vec(), rat(k))));
                poly.add_term(crate::poly::Monomial(vec![0, 0, 3]), rat(lead));
                poly
            };
            let (f, g) = (mk(&fa, 7), mk(&fb, -3));
            let r = resultant_wrt(&f, &g, "z").unwrap();
            let pt = [rat(sx), rat(sy)];
            let fs = f.substitute(0, &pt[0]).substitute(1, &pt[1]).to_upoly(2).unwrap();
            let gs = g.substitute(0, &pt[0]).substitute(1, &pt[1]).to_upoly(2).unwrap();
            prop_assume!(fs.deg() == 3 && gs.deg() == 3);
            prop_assert_eq!(r.eval(&pt), sylvester_det(fs.coeffs(), gs.coeffs()));
        }
    }
}
