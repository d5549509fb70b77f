//! Sparse multivariate polynomials over `Rat` in named variables.
//!
//! Terms are kept in a `BTreeMap` ordered by graded lexicographic order in
//! which the *last* variable is the largest (`x < y < z` for `[x, y, z]`).
//! That is the order the Gröbner code uses, so the leading term is simply the
//! last map entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{common_denominator, integer_content, Rat};
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_like(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn with_var_names(vars: Vec<String>) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn constant_like(&self, c: Rat) -> Self {
        let mut p = self.zero_like();
        p.add_term(Monomial::one(self.nvars()), c);
        p
    }

    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let idx = vars.iter().position(|v| *v == name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.add_term(Monomial(e), Rat::one());
        Ok(p)
    }

    pub fn var_like(&self, idx: usize) -> Self {
        let mut e = vec![0; self.nvars()];
        e[idx] = 1;
        let mut p = self.zero_like();
        p.add_term(Monomial(e), Rat::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.into()))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Monomial::one(self.nvars())).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Leading term under graded lex (last variable largest).
    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> MPoly {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return self.zero_like();
        }
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return self.zero_like();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.product(m), v * c)).collect(),
        }
    }

    /// `self - c * m * other`, in place.
    pub fn sub_scaled_term(&mut self, other: &MPoly, m: &Monomial, c: &Rat) {
        for (k, v) in &other.terms {
            self.add_term(k.product(m), -(v * c));
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut result = self.constant_like(Rat::one());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_same_ring(&self, other: &MPoly) {
        assert_eq!(self.vars, other.vars, "polynomials live in different rings");
    }

    /// Coefficients with respect to variable `idx`: `self = Σ c_k · v^k`.
    /// Each `c_k` stays in the same ring (with exponent of `v` zero).
    pub fn coeffs_in(&self, idx: usize) -> Vec<MPoly> {
        let deg = self.degree_in(idx) as usize;
        let mut out = vec![self.zero_like(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[idx] as usize;
            let mut e = m.0.clone();
            e[idx] = 0;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(idx: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = coeffs[0].zero_like();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut e = m.0.clone();
                e[idx] += k as u32;
                out.add_term(Monomial(e), v.clone());
            }
        }
        out
    }

    /// Homogenizes with respect to the variables in `over` using a fresh
    /// variable `hvar` appended at the end of the variable list. Degrees are
    /// measured in `over` only, so other variables act as parameters.
    pub fn homogenize_over(&self, over: &[usize], hvar: &str) -> Result<MPoly> {
        if self.is_zero() {
            return Err(Error::HomogenizeZero);
        }
        let partial = |m: &Monomial| over.iter().map(|&i| m.0[i]).sum::<u32>();
        let d = self.terms.keys().map(partial).max().unwrap_or(0);
        let mut vars = self.vars.clone();
        vars.push(hvar.to_string());
        let mut out = MPoly::with_var_names(vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.push(d - partial(m));
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Homogenizes in all variables with a new last variable `hvar`.
    pub fn homogenize(&self, hvar: &str) -> Result<MPoly> {
        let all: Vec<usize> = (0..self.nvars()).collect();
        self.homogenize_over(&all, hvar)
    }

    /// Substitutes `value` for variable `idx`; the variable stays in the ring.
    pub fn substitute(&self, idx: usize, value: &Rat) -> MPoly {
        let mut out = self.zero_like();
        let mut powers: Vec<Rat> = vec![Rat::one()];
        for (m, c) in &self.terms {
            let k = m.0[idx] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut e = m.0.clone();
            e[idx] = 0;
            out.add_term(Monomial(e), c * &powers[k]);
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces each variable `i` by `images[i]`; all images share one ring,
    /// which becomes the ring of the result.
    pub fn compose(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars());
        let mut cache: Vec<Vec<MPoly>> = images.iter().map(|p| vec![p.constant_like(Rat::one()), p.clone()]).collect();
        let mut out = images[0].zero_like();
        for (m, c) in &self.terms {
            let mut t = images[0].constant_like(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    pub fn derivative(&self, idx: usize) -> MPoly {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let k = m.0[idx];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[idx] -= 1;
            out.add_term(Monomial(e), c * Rat::from_integer(BigInt::from(k)));
        }
        out
    }

    /// Removes variable `idx` from the ring; fails if it still occurs.
    pub fn drop_var(&self, idx: usize) -> Result<MPoly> {
        if self.degree_in(idx) > 0 {
            return Err(Error::VariableInUse(self.vars[idx].clone()));
        }
        let mut vars = self.vars.clone();
        vars.remove(idx);
        let mut out = MPoly::with_var_names(vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(idx);
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in the ring with variables `names`
    /// (matching by name). Variables missing from `names` must not occur.
    pub fn with_vars(&self, names: &[&str]) -> Result<MPoly> {
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            match names.iter().position(|n| n == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.degree_in(i) > 0 {
                        return Err(Error::VariableInUse(v.clone()));
                    }
                    map.push(None)
                }
            }
        }
        let mut out = MPoly::zero(names);
        for (m, c) in &self.terms {
            let mut e = vec![0; names.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = k;
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Renames variables without touching terms.
    pub fn renamed(&self, names: &[&str]) -> MPoly {
        assert_eq!(names.len(), self.nvars());
        MPoly { vars: names.iter().map(|s| s.to_string()).collect(), terms: self.terms.clone() }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        self.check_same_ring(d);
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quo = self.zero_like();
        while let Some((m, c)) = rem.leading_term() {
            if !dm.divides(m) {
                return None;
            }
            let qm = m.quotient(&dm);
            let qc = c / &dc;
            rem.sub_scaled_term(d, &qm, &qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient. This is the normalization used for every gcd.
    pub fn primitive_normalized(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let den = common_denominator(self.terms.values());
        let scaled: Vec<Rat> = self.terms.values().map(|c| c * Rat::from_integer(den.clone())).collect();
        let content = integer_content(scaled.iter());
        let mut factor = Rat::new(den, content);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rat::one() / lc))
    }

    /// Max absolute coefficient, as a double.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| super::rat::to_f64(c).abs()).fold(0.0, f64::max)
    }

    /// Euclidean norm of the coefficient vector, as a double.
    pub fn coeff_norm(&self) -> f64 {
        let m = self.max_abs_coeff();
        if m == 0.0 {
            return 0.0;
        }
        self.terms.values().map(|c| (super::rat::to_f64(c) / m).powi(2)).sum::<f64>().sqrt() * m
    }

    /// Converts a polynomial in which only `idx` occurs into a `UPoly`.
    pub fn to_upoly(&self, idx: usize) -> Result<UPoly<Rat>> {
        let mut coeffs = vec![Rat::zero(); self.degree_in(idx) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != idx && e > 0) {
                let other = m.0.iter().enumerate().find(|(i, &e)| *i != idx && e > 0).unwrap().0;
                return Err(Error::VariableInUse(self.vars[other].clone()));
            }
            coeffs[m.0[idx] as usize] = c.clone();
        }
        Ok(UPoly::new(&self.vars[idx], coeffs))
    }

    pub fn from_upoly(vars: &[&str], idx: usize, u: &UPoly<Rat>) -> MPoly {
        let mut p = MPoly::zero(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[idx] = k as u32;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Float copy of the coefficients for numeric evaluation.
    pub fn to_float(&self) -> crate::numeric::FPoly {
        crate::numeric::FPoly::from_mpoly(self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| if e == 1 { self.vars[j].clone() } else { format!("{}^{}", self.vars[j], e) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.vars.join(","), self)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.check_same_ring(rhs);
        let mut out = self.zero_like();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.product(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Homogenization of a polynomial in all its variables, with new variable `w`.
pub fn homogenize(p: &MPoly) -> Result<MPoly> {
    p.homogenize("w")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use crate::poly::rat::rat;

    fn p(s: &str, vars: &[&str]) -> MPoly {
        parse_poly(s, vars).unwrap()
    }

    #[test]
    fn grlex_puts_last_variable_first() {
        let f = p("x^2 + x*z + y^2 + z", &["x", "y", "z"]);
        let (m, _) = f.leading_term().unwrap();
        assert_eq!(m.0, vec![1, 0, 1]);
        let g = p("x^3 + z^2", &["x", "y", "z"]);
        assert_eq!(g.leading_term().unwrap().0 .0, vec![3, 0, 0]);
    }

    #[test]
    fn homogenize_pads_degrees() {
        let f = p("x^2 + y", &["x", "y"]);
        let h = homogenize(&f).unwrap();
        assert_eq!(h, p("x^2 + y*w", &["x", "y", "w"]));
        let c = homogenize(&p("5", &["x", "y"])).unwrap();
        assert_eq!(c, p("5", &["x", "y", "w"]));
        assert!(matches!(homogenize(&MPoly::zero(&["x"])), Err(Error::HomogenizeZero)));
    }

    #[test]
    fn homogenize_then_dehomogenize_is_identity() {
        let f = p("3*x^3*y - 2*x*z + 7*y - 1/2", &["x", "y", "z"]);
        let h = homogenize(&f).unwrap();
        assert!(h.is_homogeneous());
        assert_eq!(h.total_degree(), f.total_degree());
        let back = h.substitute(3, &rat(1)).drop_var(3).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 - y^2", &["x", "y"]);
        let b = p("x + y", &["x", "y"]);
        assert_eq!(a.exact_div(&b).unwrap(), p("x - y", &["x", "y"]));
        assert!(a.exact_div(&p("x + 2*y", &["x", "y"])).is_none());
    }

    #[test]
    fn compose_and_coeffs() {
        let f = p("x^2*y + y", &["x", "y"]);
        let images = [p("t + 1", &["t"]), p("2*t", &["t"])];
        assert_eq!(f.compose(&images), p("2*t^3 + 4*t^2 + 4*t", &["t"]));
        let cs = f.coeffs_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(MPoly::from_coeffs_in(0, &cs), f);
    }

    #[test]
    fn normalization_is_primitive_with_positive_lead() {
        let f = p("-2/3*x^2 + 4/9*y", &["x", "y"]);
        let n = f.primitive_normalized();
        assert_eq!(n, p("3*x^2 - 2*y", &["x", "y"]));
    }
}
