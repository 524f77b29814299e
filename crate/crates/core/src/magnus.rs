//! The Magnus reciprocal involution and executable checks of the evaluation
//! identities relating a set of forms, its dual, and Magnus evaluation.
//!
//! Every verifier returns the monomial multiplier that witnesses its identity
//! so callers can cross-check exponents against independently computed
//! directrices.

use crate::error::{Error, Result};
use crate::newton::{directrix, dual_polynomial, dual_set, newton_matrix, FormSet};
use crate::poly::{Coeff, ExponentVector, Monomial, Polynomial};

/// The `n + 1` squarefree monomials of degree `n` in `x0..xn`; entry `i`
/// omits `x_i`.
pub fn magnus(n: usize) -> Result<FormSet> {
    if n < 1 {
        return Err(Error::Domain("the Magnus involution needs n >= 1".into()));
    }
    let forms = (0..=n)
        .map(|i| {
            let mut e = vec![1; n + 1];
            e[i] = 0;
            Polynomial::monomial(Coeff::from_integer(1.into()), ExponentVector::new(e))
        })
        .collect();
    FormSet::new(forms)
}

fn magnus_for(nvars: usize) -> Result<FormSet> {
    if nvars < 2 {
        return Err(Error::Domain(
            "Magnus evaluation needs at least two variables".into(),
        ));
    }
    magnus(nvars - 1)
}

/// `x^{d - beta}`; panics if some entry of `beta` exceeds `d`.
fn shortfall(d: u32, beta: &[u32]) -> Monomial {
    Monomial::new(ExponentVector::new(
        beta.iter()
            .map(|&b| d.checked_sub(b).expect("b <= d"))
            .collect(),
    ))
}

/// Checks `g(x^) = x^{d - beta} * dual(g)` coordinatewise, with `beta` the
/// directrix of the whole set, and returns the multiplier.
pub fn eval_identity(g: &FormSet) -> Result<Monomial> {
    let hat_x = magnus_for(g.nvars())?;
    let beta = directrix(&newton_matrix(g));
    let mult = shortfall(g.degree(), &beta);
    let dual = dual_set(g);
    for (j, (f, fd)) in g.forms().iter().zip(dual.forms()).enumerate() {
        let lhs = f.evaluate(hat_x.forms())?;
        let rhs = fd.mul_monomial(mult.exponents());
        if lhs != rhs {
            return Err(Error::IdentityViolation(format!(
                "Magnus evaluation of form {j}"
            )));
        }
    }
    Ok(mult)
}

/// Compares the Newton representation of `g(x^)` with `N(x^) . N(g)` and the
/// frame of `g`, as multisets of (column, coefficient) pairs.
///
/// Returns `false` if terms of the evaluated form merged or cancelled.
pub fn matrix_identity_check(g: &Polynomial) -> Result<bool> {
    let set = FormSet::new(vec![g.clone()])?;
    let hat_x = magnus_for(g.nvars())?;
    let hat_cols = newton_matrix(&hat_x).columns().to_vec();
    let n = g.nvars();

    let evaluated = g.evaluate(hat_x.forms())?;
    let mut lhs: Vec<(Vec<u32>, Coeff)> = evaluated
        .terms()
        .iter()
        .map(|t| (t.expo().to_vec(), t.coeff().clone()))
        .collect();

    let gm = newton_matrix(&set);
    let mut rhs: Vec<(Vec<u32>, Coeff)> = gm
        .columns()
        .iter()
        .zip(gm.frame())
        .map(|(a, c)| {
            let col = (0..n)
                .map(|i| (0..n).map(|j| hat_cols[j][i] * a[j]).sum())
                .collect();
            (col, c.clone())
        })
        .collect();
    lhs.sort();
    rhs.sort();
    Ok(lhs == rhs)
}

/// `dual(p q) == dual(p) dual(q)` for nonzero forms.
pub fn product_rule(p: &Polynomial, q: &Polynomial) -> Result<bool> {
    FormSet::new(vec![p.clone()])?;
    FormSet::new(vec![q.clone()])?;
    let pq = p.try_mul(q)?;
    Ok(dual_polynomial(&pq)? == &dual_polynomial(p)? * &dual_polynomial(q)?)
}

/// Multipliers `(x^{d-gamma}, x^{d-alpha}, x^{d-beta})` for the directrices of
/// `p + q`, `p` and `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumWitness {
    pub sum: Monomial,
    pub left: Monomial,
    pub right: Monomial,
}

/// Checks `x^{d-gamma} dual(p+q) = x^{d-alpha} dual(p) + x^{d-beta} dual(q)`
/// coordinatewise for same-degree tuples `p`, `q`.
pub fn sum_rule(p: &FormSet, q: &FormSet) -> Result<SumWitness> {
    if p.len() != q.len() || p.nvars() != q.nvars() {
        return Err(Error::DimensionMismatch(
            "sum of form sets of different shapes".into(),
        ));
    }
    if p.degree() != q.degree() {
        return Err(Error::DimensionMismatch(
            "sum of form sets of different degrees".into(),
        ));
    }
    let mut sums = Vec::with_capacity(p.len());
    for (j, (a, b)) in p.forms().iter().zip(q.forms()).enumerate() {
        let s = a + b;
        if s.is_zero() {
            return Err(Error::Degenerate(format!(
                "coordinate {j} of the sum vanishes"
            )));
        }
        sums.push(s);
    }
    let s = FormSet::new(sums)?;
    let d = p.degree();
    let witness = SumWitness {
        sum: shortfall(d, &directrix(&newton_matrix(&s))),
        left: shortfall(d, &directrix(&newton_matrix(p))),
        right: shortfall(d, &directrix(&newton_matrix(q))),
    };
    let (ds, dp, dq) = (dual_set(&s), dual_set(p), dual_set(q));
    for j in 0..p.len() {
        let lhs = ds.forms()[j].mul_monomial(witness.sum.exponents());
        let rhs = &dp.forms()[j].mul_monomial(witness.left.exponents())
            + &dq.forms()[j].mul_monomial(witness.right.exponents());
        if lhs != rhs {
            return Err(Error::IdentityViolation(format!(
                "sum rule at coordinate {j}"
            )));
        }
    }
    Ok(witness)
}

/// Checks `g(h^) = x^{d alpha - beta} dual(g(h))`, where `alpha` and `beta`
/// are the directrices of `h` and `g(h)` and `d = deg g`.
pub fn composite_identity(g: &FormSet, h: &FormSet) -> Result<Monomial> {
    if h.len() != g.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "g has {} variables but h has {} forms",
            g.nvars(),
            h.len()
        )));
    }
    let mut gh = Vec::with_capacity(g.len());
    for (j, f) in g.forms().iter().enumerate() {
        let v = f.evaluate(h.forms())?;
        if v.is_zero() {
            return Err(Error::Degenerate(format!(
                "coordinate {j} of g(h) vanishes"
            )));
        }
        gh.push(v);
    }
    let gh = FormSet::new(gh)?;
    let alpha = directrix(&newton_matrix(h));
    let beta = directrix(&newton_matrix(&gh));
    let d = g.degree();
    let expo = alpha
        .iter()
        .zip(beta.iter())
        .map(|(&a, &b)| (d * a).checked_sub(b))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::IdentityViolation("d*alpha - beta has a negative entry".into()))?;
    let mult = Monomial::new(ExponentVector::new(expo));
    let hat_h = dual_set(h);
    let dual_gh = dual_set(&gh);
    for (j, f) in g.forms().iter().enumerate() {
        let lhs = f.evaluate(hat_h.forms())?;
        let rhs = dual_gh.forms()[j].mul_monomial(mult.exponents());
        if lhs != rhs {
            return Err(Error::IdentityViolation(format!(
                "composite identity at coordinate {j}"
            )));
        }
    }
    Ok(mult)
}
