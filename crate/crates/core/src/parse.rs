//! Recursive descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := rational | var | '(' expr ')'
//! ```
//!
//! `rational` is `digits ('/' digits)?`. Multiplication must be explicit.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{ParseError, ParseErrorKind};
use crate::monomial::MAX_VARS;
use crate::poly::{Polynomial, Rational};

/// Parse `text` as a polynomial in the ordered variables `vars`.
pub fn parse_polynomial<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial, ParseError> {
    let names = validate_variables(vars)?;
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names: &names,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(ParseErrorKind::UnexpectedChar(p.src[p.pos] as char)));
    }
    Ok(poly)
}

/// Parse a comma-separated list of polynomials (generators of an ideal).
pub fn parse_polynomial_list<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Vec<Polynomial>, ParseError> {
    let names = validate_variables(vars)?;
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names: &names,
    };
    let mut out = Vec::new();
    p.skip_ws();
    if p.pos == p.src.len() {
        return Ok(out);
    }
    loop {
        out.push(p.expr()?);
        p.skip_ws();
        match p.peek() {
            Some(b',') => p.pos += 1,
            None => break,
            Some(c) => return Err(p.error(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }
    Ok(out)
}

/// Check that `vars` is a non-empty list of distinct ASCII identifiers.
pub fn validate_variables<S: AsRef<str>>(vars: &[S]) -> Result<Vec<String>, ParseError> {
    let err = |kind| ParseError { position: 0, kind };
    if vars.is_empty() || vars.len() > MAX_VARS - 1 {
        return Err(err(ParseErrorKind::VariableCount {
            found: vars.len(),
            max: MAX_VARS - 1,
        }));
    }
    let mut names: Vec<String> = Vec::with_capacity(vars.len());
    for v in vars {
        let v = v.as_ref().trim();
        let mut chars = v.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(err(ParseErrorKind::InvalidVariableName(v.to_string())));
        }
        if names.iter().any(|n| n == v) {
            return Err(err(ParseErrorKind::DuplicateVariable(v.to_string())));
        }
        names.push(v.to_string());
    }
    Ok(names)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
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

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error(ParseErrorKind::BadExponent));
        }
        if self.src.get(self.pos) == Some(&b'/') || self.src.get(self.pos) == Some(&b'.') {
            return Err(self.error(ParseErrorKind::BadExponent));
        }
        let e: u16 = digits.parse().map_err(|_| ParseError {
            position: start,
            kind: ParseErrorKind::BadExponent,
        })?;
        Ok(base.pow(e as u32))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        // ASCII digits only
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(match self.peek() {
                        None => self.error(ParseErrorKind::UnexpectedEnd),
                        Some(_) => self.error(ParseErrorKind::Expected("')'")),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits();
                let numer: BigInt = num.parse().expect("digit string");
                let value = if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.error(ParseErrorKind::Expected("denominator")));
                    }
                    let denom: BigInt = den.parse().expect("digit string");
                    if denom == BigInt::from(0) {
                        return Err(self.error(ParseErrorKind::ZeroDenominator));
                    }
                    Rational::new(numer, denom)
                } else {
                    Rational::from_integer(numer)
                };
                Ok(Polynomial::constant(self.nvars(), value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::var(self.nvars(), i)),
                    None => Err(ParseError {
                        position: start,
                        kind: ParseErrorKind::UnknownVariable(name.to_string()),
                    }),
                }
            }
            Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::poly::rat;
    use alloc::vec;

    fn terms(p: &Polynomial) -> Vec<(Vec<u16>, Rational)> {
        p.terms()
            .iter()
            .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
            .collect()
    }

    #[test]
    fn parses_spec_examples() {
        let p = parse_polynomial("x^2 + y^3", &["x", "y"]).unwrap();
        assert_eq!(terms(&p), [(vec![0, 3], rat(1)), (vec![2, 0], rat(1))]);
        let p = parse_polynomial("(x+y)*(x-y)", &["x", "y"]).unwrap();
        assert_eq!(terms(&p), [(vec![2, 0], rat(1)), (vec![0, 2], rat(-1))]);
        let p = parse_polynomial("y^2 - x^2*z", &["x", "y", "z"]).unwrap();
        assert_eq!(terms(&p), [(vec![2, 0, 1], rat(-1)), (vec![0, 2, 0], rat(1))]);
    }

    #[test]
    fn rational_literals_and_unary_sign() {
        let p = parse_polynomial("-3/6*x + 2", &["x"]).unwrap();
        assert_eq!(
            p.coefficient(&Monomial::var(1, 0)),
            Rational::new((-1).into(), 2.into())
        );
        assert_eq!(p.constant_term(), rat(2));
        let q = parse_polynomial("(-x)^2", &["x"]).unwrap();
        assert_eq!(q, parse_polynomial("x^2", &["x"]).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_polynomial("x + w", &["x", "y"]).unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("w".into()));
        let e = parse_polynomial("x^y", &["x", "y"]).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadExponent);
        let e = parse_polynomial("x^1/2", &["x"]).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadExponent);
        let e = parse_polynomial("x^-1", &["x"]).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::BadExponent);
        let e = parse_polynomial("2x", &["x"]).unwrap_err();
        assert_eq!(e.position, 1);
        let e = parse_polynomial("(x + 1", &["x"]).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        let e = parse_polynomial("", &["x"]).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedEnd);
        let e = parse_polynomial("1/0", &["x"]).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::ZeroDenominator);
    }

    #[test]
    fn variable_validation() {
        assert!(matches!(
            parse_polynomial("x", &["x", "x"]).unwrap_err().kind,
            ParseErrorKind::DuplicateVariable(_)
        ));
        assert!(matches!(
            parse_polynomial("x", &["1x"]).unwrap_err().kind,
            ParseErrorKind::InvalidVariableName(_)
        ));
    }

    #[test]
    fn list_parsing() {
        let l = parse_polynomial_list("x, y^2", &["x", "y"]).unwrap();
        assert_eq!(l.len(), 2);
        assert!(parse_polynomial_list("", &["x"]).unwrap().is_empty());
        assert!(parse_polynomial_list("x,", &["x"]).is_err());
    }
}
