//! Buchberger's algorithm under graded lexicographic order.
//!
//! The term order compares total degree first and breaks ties
//! lexicographically with the *last* variable of the order largest, so for
//! `x < y < z` the variable `z` plays the role of the eliminated one.

use std::collections::BTreeSet;

use num_traits::One;

use crate::error::Result;
use crate::poly::{MPoly, Monomial, Rat};

/// Graded lex order over an ordered variable list (smallest first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    vars: Vec<String>,
}

impl TermOrder {
    pub fn grlex(vars: &[&str]) -> Self {
        TermOrder { vars: vars.iter().map(|s| s.to_string()).collect() }
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    /// Index of the largest variable.
    pub fn last(&self) -> usize {
        self.vars.len() - 1
    }

    /// Rewrites `p` in this order's ring.
    pub fn embed(&self, p: &MPoly) -> Result<MPoly> {
        p.with_vars(&self.vars())
    }
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &MPoly, g: &MPoly) -> MPoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.quotient(fm), &(Rat::one() / fc));
    let b = g.mul_term(&l.quotient(gm), &(Rat::one() / gc));
    &a - &b
}

/// Fully reduced remainder of `p` modulo `g`.
pub fn normal_form(p: &MPoly, g: &[MPoly]) -> MPoly {
    let leads: Vec<(Monomial, Rat)> =
        g.iter().filter_map(|h| h.leading_term().map(|(m, c)| (m.clone(), c.clone()))).collect();
    let divisors: Vec<&MPoly> = g.iter().filter(|h| !h.is_zero()).collect();
    let mut rest = p.clone();
    let mut out = p.zero_like();
    while let Some((m, c)) = rest.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let q = m.quotient(&leads[i].0);
                let k = &c / &leads[i].1;
                rest.sub_scaled_term(divisors[i], &q, &k);
            }
            None => {
                out.add_term(m.clone(), c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    out
}

struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Reduced Gröbner basis of the ideal generated by `f`, each element
/// normalized to integer content 1 with positive leading coefficient and
/// the list sorted by leading monomial.
pub fn buchberger(f: &[MPoly], order: &TermOrder) -> Result<Vec<MPoly>> {
    let mut basis: Vec<MPoly> = Vec::new();
    for p in f {
        let p = order.embed(p)?;
        if !p.is_zero() {
            basis.push(p.monic());
        }
    }
    if basis.is_empty() {
        return Ok(basis);
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut live: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lm = |p: &MPoly| p.leading_term().expect("nonzero").0.clone();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(Pair { lcm: lm(&basis[i]).lcm(&lm(&basis[j])), i, j });
            live.insert((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let k = (0..pairs.len()).min_by(|&a, &b| pairs[a].lcm.cmp(&pairs[b].lcm)).unwrap();
        let Pair { lcm, i, j } = pairs.swap_remove(k);
        live.remove(&(i, j));
        let (li, lj) = (lm(&basis[i]), lm(&basis[j]));
        if li.is_coprime(&lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&lcm)
                && !live.contains(&(i.min(k), i.max(k)))
                && !live.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let n = basis.len();
        let lh = lm(&h);
        basis.push(h);
        for a in 0..n {
            pairs.push(Pair { lcm: lm(&basis[a]).lcm(&lh), i: a, j: n });
            live.insert((a, n));
        }
    }
    Ok(reduce_basis(basis))
}

fn reduce_basis(basis: Vec<MPoly>) -> Vec<MPoly> {
    let lm = |p: &MPoly| p.leading_term().expect("nonzero").0.clone();
    let mut minimal: Vec<MPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = lm(g);
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = lm(h);
            l != k && hm.divides(&m) && (hm != m || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<MPoly> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<MPoly> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p.clone()).collect();
        let (m, c) = minimal[k].leading_term().expect("nonzero");
        let mut tail = minimal[k].clone();
        tail.add_term(m.clone(), -c.clone());
        let mut r = normal_form(&tail, &others);
        r.add_term(m.clone(), c.clone());
        reduced.push(r.primitive_normalized());
    }
    reduced.sort_by(|a, b| lm(a).cmp(&lm(b)));
    reduced
}

/// Index of a basis element whose total degree is carried entirely by the
/// last variable of the order (`deg_last(G_i) = tdeg(G_i) > 0`).
pub fn pure_last_power_index(g: &[MPoly], order: &TermOrder) -> Option<usize> {
    let last = order.last();
    g.iter().position(|p| {
        let d = p.total_degree();
        d > 0 && p.degree_in(last) == d
    })
}

/// Checks that every S-polynomial reduces to zero.
pub fn is_groebner(g: &[MPoly]) -> bool {
    (0..g.len()).all(|j| (0..j).all(|i| normal_form(&s_polynomial(&g[i], &g[j]), g).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    const V: [&str; 3] = ["x", "y", "z"];

    fn p(s: &str) -> MPoly {
        parse_poly(s, &V).unwrap()
    }

    fn order() -> TermOrder {
        TermOrder::grlex(&V)
    }

    #[test]
    fn coordinate_ideal_is_its_own_basis() {
        let g = buchberger(&[p("x"), p("y")], &order()).unwrap();
        assert_eq!(g, vec![p("x"), p("y")]);
    }

    #[test]
    fn small_system_has_pure_last_power() {
        let g = buchberger(&[p("x^2 - y"), p("x*y - 1")], &order()).unwrap();
        assert!(is_groebner(&g));
        for f in [p("x^2 - y"), p("x*y - 1")] {
            assert!(normal_form(&f, &g).is_zero());
        }
    }

    #[test]
    fn normal_form_examples() {
        assert!(normal_form(&p("x^2"), &[p("x")]).is_zero());
        assert_eq!(normal_form(&p("y + 1"), &[p("x")]), p("y + 1"));
    }

    #[test]
    fn witness_detection() {
        let g = [p("z - x"), p("y^2 - x")];
        assert_eq!(pure_last_power_index(&g, &order()), Some(0));
        assert_eq!(pure_last_power_index(&[p("x*z - 1")], &order()), None);
    }

    #[test]
    fn reduced_basis_is_independent_of_input_order() {
        let fs = [p("x*z - y^2"), p("y*z - x^3 + 1"), p("z^2 - x*y")];
        let a = buchberger(&fs, &order()).unwrap();
        let mut rev = fs.to_vec();
        rev.reverse();
        let b = buchberger(&rev, &order()).unwrap();
        assert_eq!(a, b);
        assert!(is_groebner(&a));
    }

    #[test]
    fn twisted_cubic_basis() {
        let g = buchberger(&[p("y - x^2"), p("z - x^3")], &order()).unwrap();
        assert!(is_groebner(&g));
        assert!(g.iter().all(|h| normal_form(&p("z - x*y"), &g).is_zero() || h.is_zero()));
    }
}
