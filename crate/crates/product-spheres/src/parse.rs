//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace-insensitive):
//! ```text
//! expr   := term (('+'|'-') term)* ;
//! term   := factor ('*' factor)* ;
//! factor := base ('^' UINT)? ;
//! base   := RATIONAL | VAR | '(' expr ')' ;
//! VAR    := 'x' UINT ;           RATIONAL := '-'? UINT ('/' UINT)? ;
//! ```
//! Unary minus is allowed at the expression head and after '('.
//! Variables are `x1 ..= xN` for the declared variable count.

use crate::poly::{Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

/// Parse a polynomial expression in `nvars` variables.
pub fn parse_poly(text: &str, nvars: usize) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected character '{}'", p.src[p.pos] as char)));
    }
    Ok(poly)
}

/// Canonical text form of a polynomial (descending graded-lex term order).
/// `parse_poly(format_poly(f), f.nvars()) == f` for every `f`.
pub fn format_poly(f: &Polynomial) -> String {
    f.to_string()
}

impl<'a> Parser<'a> {
    fn error(&self, message: String) -> ParseError {
        let mut line = 1;
        let mut column = 1;
        for &b in &self.src[..self.pos.min(self.src.len())] {
            if b == b'\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        ParseError { line, column, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let k = self.uint()?;
            let k: u32 = k
                .try_into()
                .map_err(|_| self.error("exponent too large".into()))?;
            self.skip_ws();
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.eat(b'(');
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'".into()));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.uint()? as usize;
                self.skip_ws();
                if i < 1 || i > self.nvars {
                    return Err(self.error(format!(
                        "variable x{i} out of range (expected x1..=x{})",
                        self.nvars
                    )));
                }
                Ok(Polynomial::var(self.nvars, i))
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let negative = self.eat(b'-');
                let numer = self.bigint()?;
                let denom = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.bigint()?;
                    if d == BigInt::from(0) {
                        return Err(self.error("zero denominator".into()));
                    }
                    d
                } else {
                    BigInt::one()
                };
                self.skip_ws();
                let mut r = Rational::new(numer, denom);
                if negative {
                    r = -r;
                }
                Ok(Polynomial::constant(self.nvars, r))
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an unsigned integer".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer too large".into()))
    }

    fn bigint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an unsigned integer".into()));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .expect("digits parse as BigInt"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio, Monomial};

    #[test]
    fn direct_grammar() {
        let f = parse_poly("3/2*x1^2*x3 - x2", 5).unwrap();
        assert_eq!(f.coeff(&Monomial::new(vec![2, 0, 1, 0, 0])), ratio(3, 2));
        assert_eq!(f.coeff(&Monomial::new(vec![0, 1, 0, 0, 0])), rat(-1));
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn coalesces_repeated_terms() {
        let f = parse_poly("x1 + x1", 2).unwrap();
        assert_eq!(f, Polynomial::var(2, 1).scale(&rat(2)));
    }

    #[test]
    fn parenthesized_power() {
        let f = parse_poly("(x1+x2)^2", 2).unwrap();
        let g = parse_poly("x1^2 + 2*x1*x2 + x2^2", 2).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn unary_minus_head_and_after_paren() {
        let f = parse_poly("-x1 + x2", 2).unwrap();
        let g = parse_poly("(-x1) + x2", 2).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn whitespace_insensitive() {
        let f = parse_poly("  x1\n+\t2 * x2 ", 2).unwrap();
        let g = parse_poly("x1+2*x2", 2).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn variable_out_of_range() {
        let err = parse_poly("x7", 5).unwrap_err();
        assert!(err.message.contains("x7"));
    }

    #[test]
    fn syntax_error_has_location() {
        let err = parse_poly("x1 +\n+ x2", 3).unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.column, 1);
    }

    #[test]
    fn round_trip_canonical_form() {
        let f = parse_poly("(x1 - 2/3*x2)^3 - x3*(x1 + 7)", 3).unwrap();
        let s = format_poly(&f);
        assert_eq!(parse_poly(&s, 3).unwrap(), f);
    }

    #[test]
    fn formats_zero() {
        assert_eq!(format_poly(&Polynomial::zero(3)), "0");
        assert_eq!(parse_poly("0", 3).unwrap(), Polynomial::zero(3));
    }
}
