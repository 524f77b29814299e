//! Exact sparse multivariate polynomials over the rationals.
//!
//! Terms are kept strictly descending in graded lexicographic order with
//! `x0 > x1 > ...`; the zero polynomial is the empty term list. Every
//! operation returns a value in this canonical form, so structural equality
//! is polynomial equality.

mod gcd;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use gcd::{gcd, gcd_all};

pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// All exponent vectors of length `nvars` and total degree `k`, in
/// descending canonical order.
pub fn monomials_of_degree(nvars: usize, k: u32) -> Vec<ExponentVector> {
    fn go(buf: &mut Vec<u32>, nvars: usize, left: u32, out: &mut Vec<ExponentVector>) {
        if buf.len() + 1 == nvars {
            buf.push(left);
            out.push(ExponentVector(buf.clone()));
            buf.pop();
            return;
        }
        for v in (0..=left).rev() {
            buf.push(v);
            go(buf, nvars, left - v, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if k == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    go(&mut Vec::with_capacity(nvars), nvars, k, &mut out);
    out
}

/// Exponent vector of a monomial. Ordered by total degree first, then
/// lexicographically with lower-indexed variables larger.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn scaled(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| e * k).collect())
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for ExponentVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A nonzero coefficient attached to an exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub(crate) coeff: Coeff,
    pub(crate) expo: ExponentVector,
}

impl Term {
    pub fn coeff(&self) -> &Coeff {
        &self.coeff
    }

    pub fn expo(&self) -> &ExponentVector {
        &self.expo
    }
}

/// A monomial with coefficient one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(ExponentVector);

impl Monomial {
    pub fn new(expo: ExponentVector) -> Self {
        Monomial(expo)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(ExponentVector::zeros(nvars))
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::monomial(Coeff::one(), self.0.clone())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(&self.0 + &other.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![Term {
                coeff: c,
                expo: ExponentVector::zeros(nvars),
            }],
        }
    }

    /// The variable `x_i`. Panics when `i >= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(
            i < nvars,
            "variable index {i} out of range for {nvars} variables"
        );
        Self::monomial(Coeff::one(), ExponentVector::unit(nvars, i))
    }

    pub fn monomial(coeff: Coeff, expo: ExponentVector) -> Self {
        let nvars = expo.len();
        if coeff.is_zero() {
            return Self::zero(nvars);
        }
        Polynomial {
            nvars,
            terms: vec![Term { coeff, expo }],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coeff, ExponentVector)>,
    {
        let mut out = Vec::new();
        for (coeff, expo) in terms {
            if expo.len() != nvars {
                return Err(Error::AmbientMismatch {
                    expected: nvars,
                    found: expo.len(),
                });
            }
            out.push(Term { coeff, expo });
        }
        Ok(Self::normalized(nvars, out))
    }

    pub(crate) fn normalized(nvars: usize, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| b.expo.cmp(&a.expo));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.expo == t.expo => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.expo.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].expo.is_zero() && self.terms[0].coeff.is_one()
    }

    /// A single term, of any nonzero coefficient.
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// A single term with coefficient one.
    pub fn as_monomial(&self) -> Option<Monomial> {
        match self.terms.as_slice() {
            [t] if t.coeff.is_one() => Some(Monomial(t.expo.clone())),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn degree(&self) -> Result<u32> {
        self.terms
            .first()
            .map(|t| t.expo.degree())
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.expo.degree();
                self.terms.iter().all(|t| t.expo.degree() == d)
            }
        }
    }

    /// Largest exponent of variable `i` over all terms.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.expo[i]).max().unwrap_or(0)
    }

    /// Row-wise maxima of the exponent columns.
    pub fn max_exponents(&self) -> ExponentVector {
        let mut out = vec![0; self.nvars];
        for t in &self.terms {
            for (o, e) in out.iter_mut().zip(t.expo.iter()) {
                *o = (*o).max(*e);
            }
        }
        ExponentVector(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    expo: t.expo.clone(),
                })
                .collect(),
        }
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn mul_monomial(&self, m: &ExponentVector) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    expo: &t.expo + m,
                })
                .collect(),
        }
    }

    /// Divides every term by `m`; `None` unless `m` divides each term.
    pub fn div_monomial(&self, m: &ExponentVector) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                t.expo.checked_sub(m).map(|expo| Term {
                    coeff: t.coeff.clone(),
                    expo,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.expo.cmp(&b.expo) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if negate { -&b.coeff } else { b.coeff.clone() };
                    out.push(Term {
                        coeff,
                        expo: b.expo.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = if negate {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !coeff.is_zero() {
                        out.push(Term {
                            coeff,
                            expo: a.expo.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &other.terms[j..] {
            let coeff = if negate { -&b.coeff } else { b.coeff.clone() };
            out.push(Term {
                coeff,
                expo: b.expo.clone(),
            });
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Self> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term {
                    coeff: &a.coeff * &b.coeff,
                    expo: &a.expo + &b.expo,
                });
            }
        }
        Ok(Self::normalized(self.nvars, terms))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Returns `r` with `q * r == self`, or `NotDivisible`.
    pub fn exact_div(&self, q: &Polynomial) -> Result<Self> {
        self.check_ambient(q)?;
        let lead = q.leading_term().ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(lt) = rem.leading_term() {
            let expo = lt.expo.checked_sub(&lead.expo).ok_or(Error::NotDivisible)?;
            let coeff = &lt.coeff / &lead.coeff;
            let step = q.mul_monomial(&expo).scale(&coeff);
            rem = rem.merge(&step, true);
            quot.push(Term { coeff, expo });
        }
        Ok(Self::normalized(self.nvars, quot))
    }

    /// Substitutes `subst[i]` for variable `i` and expands.
    pub fn evaluate(&self, subst: &[Polynomial]) -> Result<Self> {
        if subst.len() != self.nvars {
            return Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: subst.len(),
            });
        }
        let target = match subst.first() {
            Some(s) => s.nvars,
            None => {
                return Err(Error::Domain(
                    "cannot evaluate with an empty substitution".into(),
                ))
            }
        };
        if let Some(bad) = subst.iter().find(|s| s.nvars != target) {
            return Err(Error::AmbientMismatch {
                expected: target,
                found: bad.nvars,
            });
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Self::one(target)]; self.nvars];
        let mut terms = Vec::new();
        for t in &self.terms {
            let mut prod = Self::constant(target, t.coeff.clone());
            for (i, &e) in t.expo.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &subst[i];
                    cache.push(next);
                }
                prod = &prod * &cache[e as usize];
            }
            terms.extend(prod.terms);
        }
        Ok(Self::normalized(target, terms))
    }

    /// Splits off the highest-degree monomial dividing `self`.
    pub fn monomial_content(&self) -> Result<(Monomial, Polynomial)> {
        let first = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        let m = self
            .terms
            .iter()
            .fold(first.expo.clone(), |acc, t| acc.gcd(&t.expo));
        let rest = self
            .div_monomial(&m)
            .expect("gcd monomial divides every term");
        Ok((Monomial(m), rest))
    }

    /// Moves variable `i` to position `map(i)` in a ring with `nvars` variables.
    pub fn remap(&self, nvars: usize, map: impl Fn(usize) -> usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0; nvars];
                for (i, &k) in t.expo.iter().enumerate() {
                    e[map(i)] += k;
                }
                Term {
                    coeff: t.coeff.clone(),
                    expo: ExponentVector(e),
                }
            })
            .collect();
        Self::normalized(nvars, terms)
    }

    /// Places the variables at `offset..offset + self.nvars` of a larger ring.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        self.remap(nvars, |i| i + offset)
    }

    /// Restricts to the variables listed in `keep`; `None` if a dropped
    /// variable actually occurs.
    pub fn project(&self, keep: &[usize]) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let dropped: u32 = (0..self.nvars)
                .filter(|i| !keep.contains(i))
                .map(|i| t.expo[i])
                .sum();
            if dropped > 0 {
                return None;
            }
            terms.push(Term {
                coeff: t.coeff.clone(),
                expo: ExponentVector(keep.iter().map(|&i| t.expo[i]).collect()),
            });
        }
        Some(Self::normalized(keep.len(), terms))
    }

    /// True if every term has positive exponent in variable `i`.
    pub fn divisible_by_var(&self, i: usize) -> bool {
        !self.is_zero() && self.terms.iter().all(|t| t.expo[i] > 0)
    }

    /// Equality up to a nonzero rational scalar.
    pub fn is_proportional(&self, other: &Polynomial) -> bool {
        match (self.leading_coeff(), other.leading_coeff()) {
            (None, None) => true,
            (Some(a), Some(b)) => self.scale(&(b / a)) == *other,
            _ => false,
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::render(self, self.nvars))
    }
}

// Operator forms panic on ambient mismatch; use the `try_*` methods when the
// ambient counts are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs)
            .expect("ambient mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("ambient mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("ambient mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}
