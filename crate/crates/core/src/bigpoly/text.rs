//! Text form of polynomials.
//!
//! ```text
//! poly   := term (("+" | "-") term)*
//! term   := [sign] [coeff "*"] factor ("*" factor)*  |  [sign] coeff
//! factor := family index ["^" exp]
//! ```
//!
//! `family` is one of `a..=z`; `index` and `exp` are decimal integers `>= 1`.
//! Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Monomial, MultiPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {pos}: {message}")]
pub struct SyntaxError {
    pub pos: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError { pos: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str, SyntaxError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a decimal number");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn positive(&mut self, what: &str) -> Result<u64, SyntaxError> {
        let start = self.pos;
        let text = self.digits()?;
        match text.parse::<u64>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(SyntaxError { pos: start, message: format!("{what} must be an integer >= 1") }),
        }
    }

    fn factor(&mut self) -> Result<(Var, u32), SyntaxError> {
        let family = match self.peek() {
            Some(c) if c.is_ascii_lowercase() => c as char,
            _ => return self.err("expected a variable such as a1"),
        };
        self.pos += 1;
        let index = self.positive("variable index")?;
        let var = Var { family, index };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.positive("exponent")?;
            let e = u32::try_from(e).map_err(|_| SyntaxError { pos: start, message: "exponent too large".into() })?;
            Ok((var, e))
        } else {
            Ok((var, 1))
        }
    }

    fn term_body(&mut self) -> Result<(Monomial, BigInt), SyntaxError> {
        let mut coeff = BigInt::from(1);
        let mut factors = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.digits()?.parse().expect("digits parse");
                if self.peek() != Some(b'*') {
                    return Ok((Monomial::one(), coeff));
                }
                self.pos += 1;
                factors.push(self.factor()?);
            }
            Some(c) if c.is_ascii_lowercase() => factors.push(self.factor()?),
            Some(_) => return self.err("expected a coefficient or a variable"),
            None => return self.err("unexpected end of input"),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok((Monomial::from_factors(factors), coeff))
    }

    fn poly(&mut self) -> Result<MultiPoly, SyntaxError> {
        let mut out = MultiPoly::zero();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term_body()?;
            out.add_term(m, if negative { -c } else { c });
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
    }
}

pub(super) fn parse(text: &str) -> Result<MultiPoly, SyntaxError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.poly()?;
    debug_assert!(out.terms().all(|(_, c)| !c.is_zero()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_example() {
        let q = parse("3*a1^2*b2 - 5").unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.constant_term(), BigInt::from(-5));
        let m = Monomial::from_factors([(Var::new('a', 1), 2), (Var::new('b', 2), 1)]);
        assert_eq!(q.coeff(&m), BigInt::from(3));
    }

    #[test]
    fn canonicalizes() {
        assert_eq!(parse("a1+a1").unwrap().to_string(), "2*a1");
        assert_eq!(parse("  -a2 +a1*a1 ").unwrap().to_string(), "a1^2 - a2");
        assert_eq!(parse("0").unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_index_zero() {
        let e = parse("a0").unwrap_err();
        assert_eq!(e.pos, 1);
        assert!(e.message.contains("index"));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse("a1 +").unwrap_err().pos, 4);
        assert_eq!(parse("a1 * 3").unwrap_err().pos, 5);
        assert_eq!(parse("a1^0").unwrap_err().pos, 3);
        assert_eq!(parse("A1").unwrap_err().pos, 0);
        assert_eq!(parse("a1 a2").unwrap_err().pos, 3);
        assert!(parse("").is_err());
    }
}
