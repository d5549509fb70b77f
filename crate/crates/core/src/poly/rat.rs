//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps the fraction
//! reduced with a positive denominator. This module adds the parsing and
//! conversion helpers the rest of the crate needs.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `123`, `-4/7`, `0.25`, `1.5e-3` into an exact rational.
///
/// Decimals are taken verbatim: `0.1` is `1/10`, not the nearest double.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_rat(n)?;
        let d = parse_rat(d)?;
        if d.is_zero() {
            return None;
        }
        return Some(n / d);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((a, b)) => (a, b),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rat::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Rat::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        value = -value;
    }
    Some(value)
}

pub fn to_f64(r: &Rat) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // very large numerator/denominator: scale by bit lengths
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db;
    let scaled = if shift > 0 {
        r / Rat::from_integer(BigInt::one() << (shift as usize))
    } else {
        r * Rat::from_integer(BigInt::one() << ((-shift) as usize))
    };
    scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
}

/// Exact binary value of a finite double.
pub fn from_f64_exact(v: f64) -> Rat {
    Rat::from_float(v).unwrap_or_else(Rat::zero)
}

/// Rounds a double to `digits` significant decimal digits and returns that
/// decimal as an exact rational. Keeps numerically located points short.
pub fn from_f64_rounded(v: f64, digits: usize) -> Rat {
    if v == 0.0 || !v.is_finite() {
        return Rat::zero();
    }
    let s = format!("{:.*e}", digits.saturating_sub(1), v);
    parse_rat(&s).unwrap_or_else(|| from_f64_exact(v))
}

/// Best rational approximation with denominator at most `max_den`, by
/// continued fractions.
pub fn approximate(v: f64, max_den: u64) -> Option<Rat> {
    if !v.is_finite() {
        return None;
    }
    let (mut h0, mut h1): (i128, i128) = (0, 1);
    let (mut k0, mut k1): (i128, i128) = (1, 0);
    let mut x = v;
    for _ in 0..64 {
        let a = x.floor();
        if a.abs() > 1e18 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > max_den as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = x - a;
        if frac.abs() < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    if k1 == 0 {
        return None;
    }
    Some(Rat::new(BigInt::from(h1), BigInt::from(k1)))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Gcd of the numerators (assumes integral values).
pub fn integer_content<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Decimal rendering with `digits` significant digits (e.g. `-1.812915331e42`).
pub fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..=9).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, v);
        trim_zeros(&s)
    } else {
        let s = format!("{:.*e}", digits.saturating_sub(1), v);
        match s.split_once('e') {
            Some((m, e)) => format!("{}e{}", trim_zeros(m), e),
            None => s,
        }
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn sign(r: &Rat) -> Sign {
    if r.is_zero() {
        Sign::NoSign
    } else if r.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(parse_rat("718945312497/100").unwrap(), ratio(718945312497, 100));
        assert_eq!(parse_rat("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rat("1.5e-3").unwrap(), ratio(3, 2000));
        assert_eq!(parse_rat("12").unwrap(), rat(12));
        assert_eq!(parse_rat(".5").unwrap(), ratio(1, 2));
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("abc").is_none());
        assert!(parse_rat("").is_none());
    }

    #[test]
    fn decimal_promotion_is_verbatim() {
        let r = parse_rat("0.4173571408").unwrap();
        assert_eq!(r, Rat::new(BigInt::from(4173571408i64), BigInt::from(10_000_000_000i64)));
    }

    #[test]
    fn huge_values_convert_to_float() {
        let big = Rat::from_integer(num_traits::pow(BigInt::from(10), 400));
        let small = Rat::new(BigInt::from(3), num_traits::pow(BigInt::from(10), 400));
        let q = &big * &small;
        assert!((to_f64(&q) - 3.0).abs() < 1e-12);
        assert!((to_f64(&(big.clone() / Rat::from_integer(num_traits::pow(BigInt::from(10), 398)))) - 100.0).abs() < 1e-9);
    }

    #[test]
    fn continued_fraction_recovers_small_rationals() {
        assert_eq!(approximate(0.3333333333333333, 100).unwrap(), ratio(1, 3));
        assert_eq!(approximate(-2.5, 10).unwrap(), ratio(-5, 2));
    }

    #[test]
    fn significant_digit_rendering() {
        assert_eq!(format_sig(-1.812915331e42, 10), "-1.812915331e42");
        assert_eq!(format_sig(0.5529230644, 10), "0.5529230644");
        assert_eq!(format_sig(2.0, 10), "2");
    }
}
