//! Text and JSON surfaces: expression parsing, deterministic rendering, and
//! the document formats exchanged with the command line.

mod doc;
mod parse;

use std::fmt::Write;

use num_traits::{One, Signed};

use crate::poly::Polynomial;

pub use doc::{FormSetDoc, IdealDoc, JonquieresDoc};
pub use parse::{parse_form, parse_poly, ParseError};

/// Renders `p` with variables `0..nx` named `x*` and the rest named `y*`.
///
/// Terms appear in canonical order, products use explicit `*` and `^`, and
/// coefficients are printed as integers or `a/b`.
pub fn render(p: &Polynomial, nx: usize) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in p.terms().iter().enumerate() {
        let c = t.coeff();
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors = Vec::new();
        if !abs.is_one() || t.expo().is_zero() {
            factors.push(abs.to_string());
        }
        for (i, &e) in t.expo().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut f = if i < nx {
                format!("x{i}")
            } else {
                format!("y{}", i - nx)
            };
            if e > 1 {
                write!(f, "^{e}").unwrap();
            }
            factors.push(f);
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_canonical() {
        let p = parse_poly("3*x2^3 + x1*x0^2 - 1/2 - x0*x0*x1", 3, 0).unwrap();
        assert_eq!(render(&p, 3), "3*x2^3 - 1/2");
        let q = parse_poly("x3*y2 - x1*y3", 4, 4).unwrap();
        assert_eq!(render(&q, 4), "-x1*y3 + x3*y2");
        assert_eq!(render(&Polynomial::zero(2), 2), "0");
    }
}
