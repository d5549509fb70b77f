//! Simple algebraic extensions `Q[μ]/(m(μ))`.
//!
//! An element carries its modulus behind an `Arc`. Elements created without a
//! modulus (`zero`, `one`, embedded rationals) are field-agnostic constants and
//! adopt the modulus of whatever they are combined with.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::rat::Rat;
use super::upoly::{Coeff, FieldCoeff, UPoly};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct ExtElem {
    modulus: Option<Arc<UPoly<Rat>>>,
    rep: UPoly<Rat>,
}

/// Handle for building elements of one extension.
#[derive(Clone, Debug)]
pub struct ExtField {
    modulus: Arc<UPoly<Rat>>,
}

impl ExtField {
    /// `modulus` is made monic; it is assumed (not checked) to be irreducible.
    pub fn new(modulus: &UPoly<Rat>) -> Result<Self> {
        if modulus.deg() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(ExtField { modulus: Arc::new(modulus.monic()?.with_var("mu")) })
    }

    pub fn modulus(&self) -> &UPoly<Rat> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    /// The class of `p(μ)`.
    pub fn elem(&self, p: &UPoly<Rat>) -> ExtElem {
        let rep = p.clone().with_var("mu").rem(&self.modulus).expect("nonzero modulus");
        ExtElem { modulus: Some(self.modulus.clone()), rep }
    }

    pub fn rational(&self, c: Rat) -> ExtElem {
        self.elem(&UPoly::constant("mu", c))
    }

    /// The generator μ.
    pub fn generator(&self) -> ExtElem {
        self.elem(&UPoly::identity("mu"))
    }

    /// Lifts a polynomial with rational coefficients to one over the field.
    pub fn embed_poly(&self, p: &UPoly<Rat>) -> UPoly<ExtElem> {
        UPoly::new(p.var(), p.coeffs().iter().map(|c| self.rational(c.clone())).collect())
    }
}

impl ExtElem {
    pub fn constant(c: Rat) -> Self {
        ExtElem { modulus: None, rep: UPoly::constant("mu", c) }
    }

    /// Representative polynomial in μ of degree below the modulus degree.
    pub fn rep(&self) -> &UPoly<Rat> {
        &self.rep
    }

    pub fn modulus(&self) -> Option<&UPoly<Rat>> {
        self.modulus.as_deref()
    }

    fn join(a: &Self, b: &Self) -> Option<Arc<UPoly<Rat>>> {
        match (&a.modulus, &b.modulus) {
            (Some(m), Some(n)) => {
                debug_assert!(Arc::ptr_eq(m, n) || m == n, "elements of different extensions");
                Some(m.clone())
            }
            (Some(m), None) | (None, Some(m)) => Some(m.clone()),
            (None, None) => None,
        }
    }

    fn reduced(modulus: Option<Arc<UPoly<Rat>>>, rep: UPoly<Rat>) -> Self {
        let rep = match &modulus {
            Some(m) => rep.rem(m).expect("nonzero modulus"),
            None => rep,
        };
        ExtElem { modulus, rep }
    }
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl Add for ExtElem {
    type Output = ExtElem;
    fn add(self, rhs: ExtElem) -> ExtElem {
        let m = Self::join(&self, &rhs);
        ExtElem { modulus: m, rep: &self.rep + &rhs.rep }
    }
}

impl Sub for ExtElem {
    type Output = ExtElem;
    fn sub(self, rhs: ExtElem) -> ExtElem {
        let m = Self::join(&self, &rhs);
        ExtElem { modulus: m, rep: &self.rep - &rhs.rep }
    }
}

impl Mul for ExtElem {
    type Output = ExtElem;
    fn mul(self, rhs: ExtElem) -> ExtElem {
        let m = Self::join(&self, &rhs);
        Self::reduced(m, &self.rep * &rhs.rep)
    }
}

impl Neg for ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        ExtElem { modulus: self.modulus, rep: -&self.rep }
    }
}

impl Coeff for ExtElem {
    fn zero() -> Self {
        ExtElem { modulus: None, rep: UPoly::zero("mu") }
    }
    fn one() -> Self {
        Self::constant(<Rat as Coeff>::one())
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn from_u64(n: u64) -> Self {
        Self::constant(Rat::from_u64(n))
    }
    fn render(&self) -> (bool, String) {
        (false, format!("({})", self.rep))
    }
}

impl FieldCoeff for ExtElem {
    /// Inverse via the extended gcd against the modulus. A nontrivial gcd
    /// means the modulus factors; the factor is returned in the error.
    fn inv(&self) -> Result<Self> {
        if self.rep.is_zero() {
            return Err(Error::AllZero);
        }
        match &self.modulus {
            None => Ok(Self::constant(self.rep.coeff(0).inv()?)),
            Some(m) => {
                let (g, u, _) = UPoly::extended_gcd(&self.rep, m)?;
                if g.deg() > 0 {
                    return Err(Error::ReducibleModulus { factor: g });
                }
                Ok(Self::reduced(Some(m.clone()), u))
            }
        }
    }
}

/// Monic gcd of several polynomials over one extension field.
pub fn gcd_over_extension(ps: &[UPoly<ExtElem>]) -> Result<UPoly<ExtElem>> {
    let mut nonzero = ps.iter().filter(|p| !p.is_zero());
    let first = nonzero.next().ok_or(Error::AllZero)?.clone();
    nonzero.try_fold(first.monic()?, |g, p| g.gcd(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::rat;

    fn up(v: &[i64]) -> UPoly<Rat> {
        UPoly::new("t", v.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trivial_extension_behaves_like_rationals() {
        let l = ExtField::new(&up(&[0, 1])).unwrap();
        let a = l.embed_poly(&up(&[-1, 0, 1]).with_var("z"));
        let b = l.embed_poly(&up(&[-1, 1]).with_var("z"));
        let g = gcd_over_extension(&[a, b.clone()]).unwrap();
        assert_eq!(g, b);
    }

    #[test]
    fn sqrt_two_relation_forces_common_root() {
        let l = ExtField::new(&up(&[-2, 0, 1])).unwrap();
        let mu = l.generator();
        let a = l.embed_poly(&up(&[-2, 0, 1]).with_var("z"));
        let b = UPoly::new("z", vec![-mu.clone(), ExtElem::one()]);
        let g = gcd_over_extension(&[a, b.clone()]).unwrap();
        assert_eq!(g, b);
        assert_eq!(mu.clone() * mu.clone(), l.rational(rat(2)));
        let inv = mu.inv().unwrap();
        assert_eq!(inv * l.rational(rat(2)), l.generator());
    }

    #[test]
    fn zero_divisor_reports_factor() {
        let l = ExtField::new(&up(&[-1, 0, 1])).unwrap();
        let e = l.elem(&up(&[-1, 1]));
        match e.inv() {
            Err(Error::ReducibleModulus { factor }) => assert_eq!(factor.with_var("t"), up(&[-1, 1])),
            other => panic!("expected reducible modulus, got {other:?}"),
        }
    }
}
