//! Canonical text form: terms in graded lexicographic descending order,
//! `*` between factors, `^` for powers, ASCII variable names.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{MPoly, Var};
use crate::error::{Error, Result};

pub(super) fn render(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let names: Vec<String> = p.vars.iter().map(Var::ascii_name).collect();
    let mut out = String::new();
    for (i, (exps, c)) in p.terms().into_iter().enumerate() {
        let sign = match (i, c.is_negative()) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sign);
        let factors: Vec<String> = names
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e > 0)
            .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        let magnitude = c.abs();
        if factors.is_empty() {
            out.push_str(&magnitude.to_string());
        } else {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::PolyParse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn factor(&mut self, coeff: &mut BigInt, powers: &mut BTreeMap<Var, u32>) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coeff *= self.integer()?;
                Ok(())
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_alphanumeric() || c == '_')
                {
                    self.bump();
                }
                let name = &self.src[start..self.pos];
                let var = Var::new(name).map_err(|_| Error::PolyParse {
                    pos: start,
                    msg: format!("invalid variable `{name}`"),
                })?;
                self.skip_ws();
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.skip_ws();
                    let e = self.integer()?;
                    match u32::try_from(e) {
                        Ok(e) => e,
                        Err(_) => return self.error("exponent too large"),
                    }
                } else {
                    1
                };
                *powers.entry(var).or_default() += exp;
                Ok(())
            }
            Some(c) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut coeff = BigInt::one();
        let mut powers = BTreeMap::new();
        self.factor(&mut coeff, &mut powers)?;
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                break;
            }
            self.bump();
            self.factor(&mut coeff, &mut powers)?;
        }
        let powers: Vec<(Var, u32)> = powers.into_iter().collect();
        Ok(MPoly::monomial(coeff, &powers))
    }
}

pub(super) fn parse(src: &str) -> Result<MPoly> {
    let mut parser = Parser { src, pos: 0 };
    let mut total = MPoly::zero();
    let mut first = true;
    loop {
        parser.skip_ws();
        let negative = match parser.peek() {
            Some('+') if !first => {
                parser.bump();
                false
            }
            Some('-') => {
                parser.bump();
                true
            }
            None if first => return parser.error("empty polynomial"),
            None => break,
            _ if first => false,
            Some(c) => return parser.error(format!("expected `+` or `-`, found `{c}`")),
        };
        let term = parser.term()?;
        total = if negative { &total - &term } else { &total + &term };
        first = false;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_forms() {
        assert_eq!(MPoly::zero().to_text(), "0");
        assert_eq!(MPoly::constant(-3).to_text(), "-3");
        let p = parse("y*z + x^3 + 2*x*z + x*y^2 + 2*x^2*y").unwrap();
        assert_eq!(p.to_text(), "x^3 + 2*x^2*y + x*y^2 + 2*x*z + y*z");
        assert_eq!(parse("l - 2*l^2 + l^3").unwrap().to_text(), "l^3 - 2*l^2 + l");
        assert_eq!(parse("-x + 1").unwrap().to_text(), "-x + 1");
    }

    #[test]
    fn parse_variants() {
        assert_eq!(parse("2 * x * 3").unwrap().to_text(), "6*x");
        assert_eq!(parse("x*x^2").unwrap().to_text(), "x^3");
        assert_eq!(parse("τ^2 + tau").unwrap().to_text(), "tau^2 + tau");
        assert_eq!(parse("0").unwrap(), MPoly::zero());
        assert_eq!(parse("t_a*x_10 + t_b").unwrap().to_text(), "x_10*t_a + t_b");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x +", "x ^", "x y", "3x", "x ** 2", "+x"] {
            assert!(parse(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
