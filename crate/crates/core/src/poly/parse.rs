//! Polynomial expression parser.
//!
//! Accepts `+ - * / ^`, parentheses, juxtaposition (`3xy`, `2 x^2`), and
//! rational literals (`12`, `-4/7`, `0.25`, `1.5e-3`). Division is allowed
//! only by constants.

use num_traits::Zero;

use super::mpoly::MPoly;
use super::rat::{parse_rat, Rat};
use super::upoly::UPoly;
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(self.error("division by a non-constant"));
                    }
                    let c = d.constant_term();
                    if c.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.scale(&(Rat::from_integer(1.into()) / c));
                }
                Some(c) if c.is_alphanumeric() || c == '(' || c == '.' => {
                    acc = &acc * &self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a non-negative integer exponent"));
            }
            let s: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = s.parse().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_alphabetic() => self.identifier(),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<MPoly> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.chars.get(p.pos).is_some_and(|c| c.is_ascii_digit()) {
                p.pos += 1;
            }
        };
        digits(self);
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.chars.get(self.pos), Some('e' | 'E')) {
            let save = self.pos;
            let mut p = self.pos + 1;
            if matches!(self.chars.get(p), Some('+' | '-')) {
                p += 1;
            }
            if self.chars.get(p).is_some_and(|c| c.is_ascii_digit()) {
                self.pos = p;
                digits(self);
            } else {
                self.pos = save;
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let value = parse_rat(&text).ok_or_else(|| Error::Parse {
            line: 1,
            column: start + 1,
            message: format!("bad number `{text}`"),
        })?;
        Ok(MPoly::constant(self.vars, value))
    }

    fn identifier(&mut self) -> Result<MPoly> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        if let Ok(v) = MPoly::var(self.vars, &name) {
            return Ok(v);
        }
        // juxtaposed single-letter variables such as `xy`
        let mut acc = MPoly::constant(self.vars, Rat::from_integer(1.into()));
        for (i, ch) in name.chars().enumerate() {
            let v = MPoly::var(self.vars, &ch.to_string()).map_err(|_| Error::Parse {
                line: 1,
                column: start + 1 + i,
                message: format!("unknown variable `{name}`"),
            })?;
            acc = &acc * &v;
        }
        Ok(acc)
    }
}

/// Parses `src` as a polynomial in the given variables.
pub fn parse_poly(src: &str, vars: &[&str]) -> Result<MPoly> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, vars };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected `{c}`")));
    }
    Ok(e)
}

/// Parses a univariate polynomial in `var`.
pub fn parse_upoly(src: &str, var: &str) -> Result<UPoly<Rat>> {
    parse_poly(src, &[var])?.to_upoly(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::{rat, ratio};

    #[test]
    fn implicit_multiplication_by_juxtaposition() {
        let v = ["x", "y", "z"];
        let a = parse_poly("20052827033xy - 215763180597/100 x + 2z^2", &v).unwrap();
        let b = parse_poly("20052827033*x*y - (215763180597/100)*x + 2*z^2", &v).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff(&crate::poly::Monomial(vec![1, 0, 0])), ratio(-215763180597, 100));
    }

    #[test]
    fn decimals_and_exponents() {
        let p = parse_upoly("-0.25 + 1.5e-3*t - t^2", "t").unwrap();
        assert_eq!(p.coeffs(), &[ratio(-1, 4), ratio(3, 2000), rat(-1)]);
        let q = parse_upoly("2e t", "t");
        assert!(q.is_err());
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let p = parse_upoly("-t^2", "t").unwrap();
        assert_eq!(p.coeffs(), &[rat(0), rat(0), rat(-1)]);
    }

    #[test]
    fn reports_column() {
        match parse_poly("x + $", &["x"]) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("x / y", &["x", "y"]).is_err());
        assert!(parse_poly("q", &["x"]).is_err());
    }
}
