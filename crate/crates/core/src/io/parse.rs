//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := sign? term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := integer ("/" integer)? | var ("^" integer)?
//! var    := "x" digits | "y" digits
//! ```
//!
//! Whitespace is insignificant. Variables `x0..x{nx-1}` occupy the first `nx`
//! ring positions and `y0..y{ny-1}` the following `ny`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Coeff, ExponentVector, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("undeclared variable `{name}` at line {line}, column {col}")]
    UndeclaredVariable {
        name: String,
        line: usize,
        col: usize,
    },

    #[error("expected a nonzero homogeneous form, got `{0}`")]
    NotHomogeneous(String),
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    nx: usize,
    ny: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, nx: usize, ny: usize) -> Self {
        Parser {
            src,
            chars: src.char_indices().collect(),
            pos: 0,
            nx,
            ny,
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let byte = self.chars.get(pos).map_or(self.src.len(), |c| c.0);
        let before = &self.src[..byte];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
        (line, col)
    }

    fn syntax<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        let (line, col) = self.location(pos);
        Err(ParseError::Syntax {
            line,
            col,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.1.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.1.is_ascii_digit())
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|c| c.1).collect())
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.digits() {
            Some(d) => Ok(d.parse().expect("ascii digits")),
            None => self.syntax(at, "expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.nx + self.ny;
        let mut acc = Polynomial::zero(n);
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.nx + self.ny;
        let mut coeff = Coeff::one();
        let mut expo = vec![0u32; n];
        loop {
            self.factor(&mut coeff, &mut expo)?;
            if !self.eat('*') {
                break;
            }
        }
        Ok(Polynomial::monomial(coeff, ExponentVector::new(expo)))
    }

    fn factor(&mut self, coeff: &mut Coeff, expo: &mut [u32]) -> Result<(), ParseError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat('/') {
                    let at_den = self.pos;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return self.syntax(at_den, "zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                *coeff *= BigRational::new(num, den);
                Ok(())
            }
            Some(c @ ('x' | 'y')) => {
                self.pos += 1;
                let Some(idx) = self.digits() else {
                    return self.syntax(self.pos, format!("expected an index after `{c}`"));
                };
                let name = format!("{c}{idx}");
                let i: usize = match idx.parse() {
                    Ok(i) => i,
                    Err(_) => return self.undeclared(name, at),
                };
                let slot = match c {
                    'x' if i < self.nx => i,
                    'y' if i < self.ny => self.nx + i,
                    _ => return self.undeclared(name, at),
                };
                let power = if self.eat('^') {
                    let at_pow = self.pos;
                    let p = self.integer()?;
                    match u32::try_from(p) {
                        Ok(p) => p,
                        Err(_) => return self.syntax(at_pow, "exponent out of range"),
                    }
                } else {
                    1
                };
                expo[slot] += power;
                Ok(())
            }
            Some(other) => self.syntax(at, format!("unexpected character `{other}`")),
            None => self.syntax(at, "unexpected end of input"),
        }
    }

    fn undeclared<T>(&self, name: String, at: usize) -> Result<T, ParseError> {
        let (line, col) = self.location(at);
        Err(ParseError::UndeclaredVariable { name, line, col })
    }
}

/// Parses an expression over `x0..x{nx-1}, y0..y{ny-1}` into a polynomial in
/// `nx + ny` variables.
pub fn parse_poly(text: &str, nx: usize, ny: usize) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(text, nx, ny);
    let poly = p.expr()?;
    if let Some(c) = p.peek() {
        return p.syntax(p.pos, format!("unexpected character `{c}`"));
    }
    Ok(poly)
}

/// Parses a nonzero homogeneous form in `x0..x{nx-1}`.
pub fn parse_form(text: &str, nx: usize) -> Result<Polynomial, ParseError> {
    let p = parse_poly(text, nx, 0)?;
    if p.is_zero() || !p.is_homogeneous() {
        return Err(ParseError::NotHomogeneous(text.trim().to_string()));
    }
    Ok(p)
}
