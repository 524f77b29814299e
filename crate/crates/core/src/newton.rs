//! Newton matrices, directrix vectors and the Newton complementary dual.
//!
//! A form `f` is written as the pairing of its coefficient frame with the
//! monomials whose exponent columns make up its Newton matrix. The dual of a
//! set replaces every column `a` by `alpha - a`, where `alpha` is the row-wise
//! maximum over all columns of all forms in the set, and keeps the frames.

use std::ops::{Deref, Range};

use crate::error::{Error, Result};
use crate::poly::{gcd_all, Coeff, ExponentVector, Polynomial, Term};

/// An ordered tuple of nonzero forms of one common degree in one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormSet {
    nvars: usize,
    degree: u32,
    forms: Vec<Polynomial>,
}

impl FormSet {
    /// Validates a nonempty list of nonzero forms sharing a degree `d >= 1`.
    pub fn new(forms: Vec<Polynomial>) -> Result<Self> {
        let first = forms
            .first()
            .ok_or_else(|| Error::InvalidFormSet("empty form set".into()))?;
        let nvars = first.nvars();
        let degree = first
            .degree()
            .map_err(|_| Error::InvalidFormSet("zero form".into()))?;
        if degree == 0 {
            return Err(Error::InvalidFormSet(
                "forms must have positive degree".into(),
            ));
        }
        for (j, f) in forms.iter().enumerate() {
            if f.nvars() != nvars {
                return Err(Error::AmbientMismatch {
                    expected: nvars,
                    found: f.nvars(),
                });
            }
            if f.is_zero() {
                return Err(Error::InvalidFormSet(format!("form {j} is zero")));
            }
            if !f.is_homogeneous() {
                return Err(Error::InvalidFormSet(format!(
                    "form {j} is not homogeneous"
                )));
            }
            if f.degree()? != degree {
                return Err(Error::InvalidFormSet(format!(
                    "form {j} has degree {}, expected {degree}",
                    f.degree()?
                )));
            }
        }
        Ok(FormSet {
            nvars,
            degree,
            forms,
        })
    }

    /// The variables `x0, ..., x{nvars-1}`.
    pub fn variables(nvars: usize) -> Self {
        let forms = (0..nvars).map(|i| Polynomial::var(nvars, i)).collect();
        FormSet {
            nvars,
            degree: 1,
            forms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Common degree. Zero only for the dual of a set whose forms are all
    /// multiples of a single monomial.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn into_forms(self) -> Vec<Polynomial> {
        self.forms
    }

    pub fn is_monomial(&self) -> bool {
        self.forms.iter().all(Polynomial::is_term)
    }
}

/// Exponent columns of a form set, grouped in one block per form, together
/// with the aligned coefficient frame.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonMatrix {
    nrows: usize,
    cols: Vec<ExponentVector>,
    frame: Vec<Coeff>,
    /// `bounds[j]..bounds[j + 1]` are the columns of form `j`.
    bounds: Vec<usize>,
}

impl NewtonMatrix {
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn columns(&self) -> &[ExponentVector] {
        &self.cols
    }

    pub fn frame(&self) -> &[Coeff] {
        &self.frame
    }

    pub fn num_blocks(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn block(&self, j: usize) -> Range<usize> {
        self.bounds[j]..self.bounds[j + 1]
    }

    /// The form `<frame_j, x^{N_j}>` of block `j`.
    pub fn reconstruct(&self, j: usize) -> Polynomial {
        let terms = self
            .block(j)
            .map(|k| Term {
                coeff: self.frame[k].clone(),
                expo: self.cols[k].clone(),
            })
            .collect();
        Polynomial::normalized(self.nrows, terms)
    }
}

/// Row-wise maxima of a Newton matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectrixVector(ExponentVector);

impl DirectrixVector {
    pub fn new(entries: ExponentVector) -> Self {
        DirectrixVector(entries)
    }

    pub fn as_exponents(&self) -> &ExponentVector {
        &self.0
    }
}

impl Deref for DirectrixVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

pub fn newton_matrix(g: &FormSet) -> NewtonMatrix {
    let mut cols = Vec::new();
    let mut frame = Vec::new();
    let mut bounds = vec![0];
    for f in &g.forms {
        for t in f.terms() {
            cols.push(t.expo().clone());
            frame.push(t.coeff().clone());
        }
        bounds.push(cols.len());
    }
    NewtonMatrix {
        nrows: g.nvars,
        cols,
        frame,
        bounds,
    }
}

pub fn directrix(n: &NewtonMatrix) -> DirectrixVector {
    let mut out = vec![0u32; n.nrows];
    for c in &n.cols {
        for (o, e) in out.iter_mut().zip(c.iter()) {
            *o = (*o).max(*e);
        }
    }
    DirectrixVector(ExponentVector::new(out))
}

/// Replaces each exponent column `a` of `p` by `alpha - a`.
///
/// Panics if some column exceeds `alpha`.
pub(crate) fn complement(p: &Polynomial, alpha: &ExponentVector) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|t| Term {
            coeff: t.coeff().clone(),
            expo: alpha
                .checked_sub(t.expo())
                .expect("directrix bounds every column"),
        })
        .collect();
    Polynomial::normalized(p.nvars(), terms)
}

/// Newton complementary dual of a set: every column is complemented against
/// the directrix of the whole set; frames and block structure are kept.
pub fn dual_set(g: &FormSet) -> FormSet {
    let alpha = directrix(&newton_matrix(g));
    let forms: Vec<Polynomial> = g.forms.iter().map(|f| complement(f, &alpha.0)).collect();
    let degree = alpha.0.degree() - g.degree;
    FormSet {
        nvars: g.nvars,
        degree,
        forms,
    }
}

/// Dual of a single form of positive degree.
pub fn dual_form(p: &Polynomial) -> Result<Polynomial> {
    let set = FormSet::new(vec![p.clone()])?;
    Ok(dual_set(&set).forms.swap_remove(0))
}

/// Dual of any nonzero polynomial against its own exponent maxima. Nonzero
/// constants are their own dual, matching the zero-matrix convention for
/// degree zero.
pub fn dual_polynomial(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(complement(p, &p.max_exponents()))
}

/// Trivial gcd and every variable occurring in some term of some form.
pub fn canonical_restrictions(g: &FormSet) -> bool {
    let alpha = directrix(&newton_matrix(g));
    alpha.iter().all(|&a| a > 0) && gcd_all(g.nvars, &g.forms).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_form;

    fn set(nvars: usize, forms: &[&str]) -> FormSet {
        FormSet::new(
            forms
                .iter()
                .map(|f| parse_form(f, nvars).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn worked_g() -> FormSet {
        set(4, &["x1^2*x3^3", "x0*x1^3*x2", "x1*x2^3*x3", "x2^3*x3^2"])
    }

    #[test]
    fn variables_give_unit_columns() {
        let n = newton_matrix(&FormSet::variables(4));
        let cols: Vec<_> = n.columns().to_vec();
        let expected: Vec<_> = (0..4).map(|i| ExponentVector::unit(4, i)).collect();
        assert_eq!(cols, expected);
        assert_eq!(directrix(&n).to_vec(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn single_form_columns_and_frame() {
        let g = set(3, &["x0^2 + x1*x2"]);
        let n = newton_matrix(&g);
        assert_eq!(n.columns()[0].to_vec(), vec![2, 0, 0]);
        assert_eq!(n.columns()[1].to_vec(), vec![0, 1, 1]);
        assert!(n.frame().iter().all(|c| *c == crate::poly::int(1)));
        assert_eq!(directrix(&n).to_vec(), vec![2, 1, 1]);
        assert_eq!(n.reconstruct(0), g.forms()[0]);
    }

    #[test]
    fn four_monomial_columns_are_stochastic() {
        let n = newton_matrix(&worked_g());
        assert_eq!(n.columns().len(), 4);
        assert!(n.columns().iter().all(|c| c.degree() == 5));
        assert_eq!(directrix(&n).to_vec(), vec![1, 3, 3, 3]);
    }

    #[test]
    fn single_monomial_directrix_is_itself() {
        let g = set(3, &["x0^2*x2^3"]);
        assert_eq!(directrix(&newton_matrix(&g)).to_vec(), vec![2, 0, 3]);
    }

    #[test]
    fn dual_of_variables_is_magnus() {
        let d = dual_set(&FormSet::variables(3));
        assert_eq!(d, set(3, &["x1*x2", "x0*x2", "x0*x1"]));
    }

    #[test]
    fn dual_of_four_monomials() {
        let d = dual_set(&worked_g());
        assert_eq!(
            d,
            set(
                4,
                &["x0*x1*x2^3", "x2^2*x3^3", "x0*x1^2*x3^2", "x0*x1^3*x3"]
            )
        );
    }

    #[test]
    fn dual_of_quadratic_veronese() {
        let d = dual_set(&set(2, &["x0^2", "x0*x1", "x1^2"]));
        assert_eq!(d, set(2, &["x1^2", "x0*x1", "x0^2"]));
    }

    #[test]
    fn canonical_restriction_cases() {
        assert!(canonical_restrictions(&set(2, &["x0", "x1"])));
        assert!(!canonical_restrictions(&set(2, &["x0^2", "x0*x1"])));
        assert!(!canonical_restrictions(&set(3, &["x0", "x1"])));
    }

    #[test]
    fn rejects_invalid_sets() {
        let x = |i| Polynomial::var(2, i);
        assert!(FormSet::new(vec![]).is_err());
        assert!(FormSet::new(vec![Polynomial::one(2)]).is_err());
        assert!(FormSet::new(vec![x(0), &x(0) * &x(1)]).is_err());
        assert!(FormSet::new(vec![x(0), Polynomial::zero(2)]).is_err());
        assert!(FormSet::new(vec![&x(0) + &(&x(0) * &x(1))]).is_err());
        assert!(FormSet::new(vec![x(0), Polynomial::var(3, 1)]).is_err());
    }

    #[test]
    fn dual_of_constants_and_degenerate_sets() {
        assert!(
            dual_polynomial(&Polynomial::constant(2, crate::poly::int(3)))
                .unwrap()
                .is_constant()
        );
        let d = dual_set(&set(2, &["x0"]));
        assert_eq!(d.degree(), 0);
        assert!(d.forms()[0].is_one());
    }
}
