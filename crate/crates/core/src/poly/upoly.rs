//! Dense univariate polynomials over a generic coefficient domain.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rat::{format_sig, to_f64, Rat};
use crate::error::{Error, Result};

/// Ring operations every coefficient domain provides.
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_u64(n: u64) -> Self;
    /// Sign flag and magnitude text, for display.
    fn render(&self) -> (bool, String);
}

/// Coefficient domains where nonzero elements can (usually) be inverted.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Result<Self>;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_u64(n: u64) -> Self {
        Rat::from_integer(n.into())
    }
    fn render(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl FieldCoeff for Rat {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::AllZero);
        }
        Ok(self.recip())
    }
}

impl Coeff for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn from_u64(n: u64) -> Self {
        n as f64
    }
    fn render(&self) -> (bool, String) {
        (*self < 0.0, format_sig(self.abs(), 10))
    }
}

impl FieldCoeff for f64 {
    fn inv(&self) -> Result<Self> {
        if *self == 0.0 {
            return Err(Error::AllZero);
        }
        Ok(1.0 / self)
    }
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_u64(n: u64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn render(&self) -> (bool, String) {
        (false, format!("({}{}{}i)", format_sig(self.re, 10), if self.im < 0.0 { "-" } else { "+" }, format_sig(self.im.abs(), 10)))
    }
}

impl FieldCoeff for Complex64 {
    fn inv(&self) -> Result<Self> {
        if Coeff::is_zero(self) {
            return Err(Error::AllZero);
        }
        Ok(self.inv())
    }
}

#[derive(Clone, PartialEq)]
pub struct UPoly<T> {
    var: String,
    coeffs: Vec<T>,
}

impl<T: Coeff> UPoly<T> {
    /// Coefficients listed from the constant term upward.
    pub fn new(var: &str, coeffs: Vec<T>) -> Self {
        let mut p = UPoly { var: var.to_string(), coeffs };
        p.trim();
        p
    }

    pub fn zero(var: &str) -> Self {
        UPoly { var: var.to_string(), coeffs: Vec::new() }
    }

    pub fn constant(var: &str, c: T) -> Self {
        Self::new(var, vec![c])
    }

    /// The polynomial `var`.
    pub fn identity(var: &str) -> Self {
        Self::new(var, vec![T::zero(), T::one()])
    }

    /// `c · var^k`.
    pub fn monomial(var: &str, c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(var, v)
    }

    /// `Π (var − r)` over the given roots.
    pub fn from_roots(var: &str, roots: &[T]) -> Self {
        roots.iter().fold(Self::constant(var, T::one()), |acc, r| &acc * &Self::new(var, vec![-r.clone(), T::one()]))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> UPoly<U> {
        UPoly::new(&self.var, self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(&self.var, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(&self.var, v)
    }

    pub fn derivative(&self) -> Self {
        let v = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * T::from_u64(k as u64)).collect();
        Self::new(&self.var, v)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(&self.var, T::one()), |acc, _| &acc * self)
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(&inner.var), |acc, c| &(&acc * inner) + &Self::constant(&inner.var, c.clone()))
    }

    /// Reverses the coefficient list: `t^n · p(1/t)` with `n = deg p`.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(&self.var, v)
    }
}

impl<T: FieldCoeff> UPoly<T> {
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.lead().inv()?;
        Ok(self.scale(&inv))
    }

    /// Euclidean division: `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::AllZero)?;
        let inv = d.lead().inv()?;
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Ok((Self::zero(&self.var), self.clone()));
        }
        let mut quo = vec![T::zero(); n - dd];
        for k in (dd..n).rev() {
            let c = rem[k].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = rem[idx].clone() - c.clone() * dj.clone();
            }
            rem[k] = T::zero();
            quo[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(&self.var, quo), Self::new(&self.var, rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient, or `None` if the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(d)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::AllZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u·a + v·b = g` and `g` the monic gcd.
    pub fn extended_gcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::AllZero);
        }
        let var = a.var.clone();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::constant(&var, T::one()), Self::zero(&var));
        let (mut t0, mut t1) = (Self::zero(&var), Self::constant(&var, T::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = r0.lead().inv()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// True when `gcd(p, p') = 1` (for nonconstant `p`).
    pub fn is_square_free(&self) -> Result<bool> {
        if self.deg() == 0 {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.deg() == 0)
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> Result<Self> {
        if self.deg() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative())?;
        self.div_rem(&g)?.0.monic()
    }
}

impl UPoly<Rat> {
    pub fn to_f64(&self) -> UPoly<f64> {
        self.map(to_f64)
    }

    pub fn to_complex(&self) -> UPoly<Complex64> {
        self.map(|c| Complex64::new(to_f64(c), 0.0))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }
}

impl UPoly<f64> {
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn to_complex(&self) -> UPoly<Complex64> {
        self.map(|c| Complex64::new(*c, 0.0))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl UPoly<Complex64> {
    /// Real parts, after checking the imaginary parts are below `tol`
    /// relative to the coefficient size.
    pub fn to_real(&self, tol: f64) -> Option<UPoly<f64>> {
        let scale = self.coeffs.iter().fold(1.0f64, |m, c| m.max(c.norm()));
        if self.coeffs.iter().any(|c| c.im.abs() > tol * scale) {
            return None;
        }
        Some(self.map(|c| c.re))
    }
}

impl<'a, T: Coeff> Add<&'a UPoly<T>> for &'a UPoly<T> {
    type Output = UPoly<T>;
    fn add(self, rhs: &UPoly<T>) -> UPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UPoly::new(&self.var, v)
    }
}

impl<'a, T: Coeff> Sub<&'a UPoly<T>> for &'a UPoly<T> {
    type Output = UPoly<T>;
    fn sub(self, rhs: &UPoly<T>) -> UPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UPoly::new(&self.var, v)
    }
}

impl<'a, T: Coeff> Mul<&'a UPoly<T>> for &'a UPoly<T> {
    type Output = UPoly<T>;
    fn mul(self, rhs: &UPoly<T>) -> UPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero(&self.var);
        }
        let mut v = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(&self.var, v)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for UPoly<T> {
            type Output = UPoly<T>;
            fn $m(self, rhs: UPoly<T>) -> UPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Coeff> Neg for &UPoly<T> {
    type Output = UPoly<T>;
    fn neg(self) -> UPoly<T> {
        UPoly::new(&self.var, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coeff> fmt::Display for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = c.render();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "{}", self.var)?,
                1 => write!(f, "{mag}*{}", self.var)?,
                _ if unit => write!(f, "{}^{k}", self.var)?,
                _ => write!(f, "{mag}*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for UPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::{rat, ratio};
    use proptest::prelude::*;

    fn up(v: &[i64]) -> UPoly<Rat> {
        UPoly::new("t", v.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn extended_gcd_of_coprime_linears() {
        let (g, u, v) = UPoly::extended_gcd(&up(&[-1, 1]), &up(&[1, 1])).unwrap();
        assert_eq!(g, up(&[1]));
        assert_eq!(u, UPoly::constant("t", ratio(-1, 2)));
        assert_eq!(v, UPoly::constant("t", ratio(1, 2)));
    }

    #[test]
    fn extended_gcd_with_common_factor() {
        let (g, _, _) = UPoly::extended_gcd(&up(&[-1, 0, 1]), &up(&[-1, 1])).unwrap();
        assert_eq!(g, up(&[-1, 1]));
    }

    #[test]
    fn division_identity() {
        let a = up(&[3, 0, -2, 5, 1]);
        let b = up(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < 2);
    }

    #[test]
    fn square_freeness() {
        assert!(!up(&[1, -2, 1]).is_square_free().unwrap());
        assert!(up(&[-1, 0, 1]).is_square_free().unwrap());
        assert_eq!(up(&[1, -2, 1]).square_free_part().unwrap(), up(&[-1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(up(&[1, -2, 1]).to_string(), "t^2 - 2*t + 1");
        assert_eq!(UPoly::new("t", vec![0.5, -1.25]).to_string(), "-1.25*t + 0.5");
    }

    fn coeff_vec(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..=9, 1..=max_deg + 1)
    }

    proptest! {
        #[test]
        fn bezout_identity_holds(a in coeff_vec(6), b in coeff_vec(6)) {
            let (pa, pb) = (up(&a), up(&b));
            prop_assume!(!pa.is_zero() || !pb.is_zero());
            let (g, u, v) = UPoly::extended_gcd(&pa, &pb).unwrap();
            prop_assert_eq!(&(&u * &pa) + &(&v * &pb), g.clone());
            if !pa.is_zero() {
                prop_assert!(pa.rem(&g).unwrap().is_zero());
            }
            if !pb.is_zero() {
                prop_assert!(pb.rem(&g).unwrap().is_zero());
            }
        }
    }
}
