//! Bihomogeneous polynomials in `x0..x{n}, y0..y{m}`, the map `psi` that
//! dualizes the x-block of each bidegree component, and the comparison of
//! the Rees presentation ideals of a form set and of its dual.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::{
    eliminate, groebner_basis, ideal_equal, ideal_quotient, saturate, GbOptions, GroebnerBasis,
    Ideal, Ring, TermOrder,
};
use crate::io::{parse_poly, render};
use crate::magnus::magnus;
use crate::newton::{canonical_restrictions, dual_set, FormSet};
use crate::poly::{monomials_of_degree, Coeff, ExponentVector, Monomial, Polynomial, Term};

/// A polynomial in `nx` x-variables followed by y-variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPolynomial {
    poly: Polynomial,
    nx: usize,
}

impl BiPolynomial {
    pub fn new(poly: Polynomial, nx: usize) -> Result<Self> {
        if nx > poly.nvars() {
            return Err(Error::AmbientMismatch {
                expected: nx,
                found: poly.nvars(),
            });
        }
        Ok(BiPolynomial { poly, nx })
    }

    pub fn parse(text: &str, nx: usize, ny: usize) -> Result<Self> {
        Ok(BiPolynomial {
            poly: parse_poly(text, nx, ny)?,
            nx,
        })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.poly.nvars() - self.nx
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn split(&self, e: &[u32]) -> (u32, u32) {
        (e[..self.nx].iter().sum(), e[self.nx..].iter().sum())
    }

    /// `(d_x, d_y)` if nonzero and bihomogeneous.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let first = self.split(self.poly.terms().first()?.expo());
        self.poly
            .terms()
            .iter()
            .all(|t| self.split(t.expo()) == first)
            .then_some(first)
    }

    /// Bihomogeneous components, by increasing bidegree.
    pub fn components(&self) -> Vec<BiPolynomial> {
        let mut parts: BTreeMap<(u32, u32), Vec<Term>> = BTreeMap::new();
        for t in self.poly.terms() {
            parts
                .entry(self.split(t.expo()))
                .or_default()
                .push(t.clone());
        }
        parts
            .into_values()
            .map(|terms| BiPolynomial {
                poly: Polynomial::normalized(self.poly.nvars(), terms),
                nx: self.nx,
            })
            .collect()
    }

    pub fn render(&self) -> String {
        render(&self.poly, self.nx)
    }
}

/// Aligned frame and x- and y-exponent columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiNewton {
    pub frame: Vec<Coeff>,
    pub x_cols: Vec<ExponentVector>,
    pub y_cols: Vec<ExponentVector>,
}

pub fn bi_newton(p: &BiPolynomial) -> Result<BiNewton> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = BiNewton {
        frame: Vec::new(),
        x_cols: Vec::new(),
        y_cols: Vec::new(),
    };
    for t in p.poly.terms() {
        out.frame.push(t.coeff().clone());
        out.x_cols
            .push(ExponentVector::new(t.expo()[..p.nx].to_vec()));
        out.y_cols
            .push(ExponentVector::new(t.expo()[p.nx..].to_vec()));
    }
    Ok(out)
}

/// Row maxima of the x-columns; zero for a polynomial in `k[y]`.
fn x_directrix(p: &BiPolynomial) -> Vec<u32> {
    let mut beta = vec![0u32; p.nx];
    for t in p.poly.terms() {
        for (b, e) in beta.iter_mut().zip(&t.expo()[..p.nx]) {
            *b = (*b).max(*e);
        }
    }
    beta
}

/// `psi` on one bihomogeneous component.
fn psi_component(p: &BiPolynomial) -> Polynomial {
    let beta = x_directrix(p);
    let terms = p
        .poly
        .terms()
        .iter()
        .map(|t| {
            let mut e = t.expo().to_vec();
            for (x, b) in e.iter_mut().zip(&beta) {
                *x = b - *x;
            }
            Term {
                coeff: t.coeff().clone(),
                expo: ExponentVector::new(e),
            }
        })
        .collect();
    Polynomial::normalized(p.poly.nvars(), terms)
}

/// Dualizes the x-block of every bihomogeneous component against its own
/// x-directrix, keeping frames and y-exponents.
pub fn psi(p: &BiPolynomial) -> BiPolynomial {
    let mut acc = Polynomial::zero(p.poly.nvars());
    for c in p.components() {
        acc = &acc + &psi_component(&c);
    }
    BiPolynomial {
        poly: acc,
        nx: p.nx,
    }
}

/// Magnus forms in the x-block, y-variables fixed.
fn magnus_substitution(nx: usize, ny: usize) -> Result<Vec<Polynomial>> {
    let n = nx + ny;
    let m = magnus(nx.checked_sub(1).filter(|&k| k >= 1).ok_or_else(|| {
        Error::Domain("Magnus evaluation needs at least two x-variables".into())
    })?)?;
    let mut subst: Vec<Polynomial> = m.forms().iter().map(|f| f.embed(n, 0)).collect();
    subst.extend((nx..n).map(|j| Polynomial::var(n, j)));
    Ok(subst)
}

fn x_monomial(nx: usize, ny: usize, e: Vec<u32>) -> Monomial {
    let mut full = e;
    full.resize(nx + ny, 0);
    Monomial::new(ExponentVector::new(full))
}

fn require_bihomogeneous(p: &BiPolynomial) -> Result<(u32, u32)> {
    p.bidegree()
        .ok_or_else(|| Error::Domain("expected a nonzero bihomogeneous polynomial".into()))
}

/// `x^{d_x - beta}` for a bihomogeneous `p`, in the full ring.
fn bidual_multiplier(p: &BiPolynomial) -> Result<Monomial> {
    let (dx, _) = require_bihomogeneous(p)?;
    let beta = x_directrix(p);
    Ok(x_monomial(
        p.nx,
        p.ny(),
        beta.iter().map(|b| dx - b).collect(),
    ))
}

/// Checks `p(x^, y) = x^{d_x - beta} psi(p)` and returns the multiplier.
pub fn bidual_eval(p: &BiPolynomial) -> Result<Monomial> {
    let mult = bidual_multiplier(p)?;
    let lhs = p.poly.evaluate(&magnus_substitution(p.nx, p.ny())?)?;
    let rhs = psi(p).poly.mul_monomial(mult.exponents());
    if lhs != rhs {
        return Err(Error::IdentityViolation(
            "bihomogeneous Magnus evaluation".into(),
        ));
    }
    Ok(mult)
}

/// Monomial multipliers certifying the additive and multiplicative
/// behaviour of `psi` on a pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PsiLawWitness {
    /// `(M, M1, M2)` with `M psi(p + q) = M1 psi(p) + M2 psi(q)`.
    pub sum: (Monomial, Monomial, Monomial),
    /// `(M, M')` with `M psi(p q) = M' psi(p) psi(q)`.
    pub product: (Monomial, Monomial),
}

/// Divides a family of monomials by their gcd.
fn strip_common(ms: &[&Monomial]) -> Vec<Monomial> {
    let g = ms
        .iter()
        .skip(1)
        .fold(ms[0].exponents().clone(), |acc, m| acc.gcd(m.exponents()));
    ms.iter()
        .map(|m| Monomial::new(m.exponents().checked_sub(&g).expect("gcd divides")))
        .collect()
}

pub fn psi_laws_witness(p: &BiPolynomial, q: &BiPolynomial) -> Result<PsiLawWitness> {
    if p.poly.nvars() != q.poly.nvars() || p.nx != q.nx {
        return Err(Error::AmbientMismatch {
            expected: p.poly.nvars(),
            found: q.poly.nvars(),
        });
    }
    let (bp, bq) = (require_bihomogeneous(p)?, require_bihomogeneous(q)?);
    let one = Monomial::one(p.poly.nvars());
    let (pp, pq) = (psi(p), psi(q));
    let sum = BiPolynomial {
        poly: &p.poly + &q.poly,
        nx: p.nx,
    };

    let sum_w = if bp != bq {
        (one.clone(), one.clone(), one.clone())
    } else {
        let (mp, mq) = (bidual_multiplier(p)?, bidual_multiplier(q)?);
        let ms = if sum.is_zero() {
            mp.mul(&mq)
        } else {
            bidual_multiplier(&sum)?
        };
        let v = strip_common(&[&ms, &mp, &mq]);
        (v[0].clone(), v[1].clone(), v[2].clone())
    };
    let lhs = psi(&sum).poly.mul_monomial(sum_w.0.exponents());
    let rhs =
        &pp.poly.mul_monomial(sum_w.1.exponents()) + &pq.poly.mul_monomial(sum_w.2.exponents());
    if lhs != rhs {
        return Err(Error::IdentityViolation("additivity of psi".into()));
    }

    let prod = BiPolynomial {
        poly: &p.poly * &q.poly,
        nx: p.nx,
    };
    let m_prod = bidual_multiplier(&prod)?;
    let m_factors = bidual_multiplier(p)?.mul(&bidual_multiplier(q)?);
    let v = strip_common(&[&m_prod, &m_factors]);
    let product_w = (v[0].clone(), v[1].clone());
    let lhs = psi(&prod).poly.mul_monomial(product_w.0.exponents());
    let rhs = (&pp.poly * &pq.poly).mul_monomial(product_w.1.exponents());
    if lhs != rhs {
        return Err(Error::IdentityViolation("multiplicativity of psi".into()));
    }
    Ok(PsiLawWitness {
        sum: sum_w,
        product: product_w,
    })
}

fn check_layout(p: &BiPolynomial, g: &FormSet) -> Result<()> {
    if p.nx != g.nvars() || p.ny() != g.len() {
        return Err(Error::DimensionMismatch(format!(
            "polynomial has {} x- and {} y-variables, form set has {} variables and {} forms",
            p.nx,
            p.ny(),
            g.nvars(),
            g.len()
        )));
    }
    Ok(())
}

/// `p(x, g)`, a polynomial in the x-variables.
fn eval_on_graph(p: &BiPolynomial, xs: &[Polynomial], g: &[Polynomial]) -> Result<Polynomial> {
    let subst: Vec<Polynomial> = xs.iter().chain(g).cloned().collect();
    p.poly.evaluate(&subst)
}

/// If `p(x, g) = 0`, checks `p(x^, g^) = 0` and returns `true`; returns
/// `false` when `p(x, g) != 0`.
pub fn push_relation(p: &BiPolynomial, g: &FormSet) -> Result<bool> {
    check_layout(p, g)?;
    require_bihomogeneous(p)?;
    let xs = FormSet::variables(g.nvars());
    if !eval_on_graph(p, xs.forms(), g.forms())?.is_zero() {
        return Ok(false);
    }
    let hat_x = magnus(g.nvars() - 1)?;
    if !eval_on_graph(p, hat_x.forms(), dual_set(g).forms())?.is_zero() {
        return Err(Error::IdentityViolation(
            "relation does not push to the dual".into(),
        ));
    }
    Ok(true)
}

/// The presentation ideal of the Rees algebra of `g`, as the reduced
/// degrevlex basis of the kernel of `y_j -> t g_j`.
pub fn rees_ideal(g: &FormSet, opts: GbOptions) -> Result<Ideal> {
    let (nx, ny) = (g.nvars(), g.len());
    let n = nx + ny + 1;
    let t = Polynomial::var(n, n - 1);
    let gens = g
        .forms()
        .iter()
        .enumerate()
        .map(|(j, f)| &Polynomial::var(n, nx + j) - &(&t * &f.embed(n, 0)))
        .collect();
    let graph = Ideal::new(Ring::plain(n), gens)?;
    let keep: Vec<usize> = (0..n - 1).collect();
    let gens = eliminate(&graph, &[n - 1], opts)?
        .iter()
        .map(|p| p.project(&keep).expect("free of the tag"))
        .collect();
    Ideal::new(Ring::bigraded(nx, ny), gens)
}

/// The Rees ideals of `g` and of its dual with their degrevlex bases.
#[derive(Clone, Debug)]
pub struct ReesComparison {
    g: FormSet,
    j_g: Ideal,
    j_hat: Ideal,
    gb_g: GroebnerBasis,
    gb_hat: GroebnerBasis,
    opts: GbOptions,
}

impl ReesComparison {
    pub fn new(g: &FormSet, opts: GbOptions) -> Result<Self> {
        let j_g = rees_ideal(g, opts)?;
        let j_hat = rees_ideal(&dual_set(g), opts)?;
        let gb_g = groebner_basis(&j_g, &TermOrder::DegRevLex, opts)?;
        let gb_hat = groebner_basis(&j_hat, &TermOrder::DegRevLex, opts)?;
        Ok(ReesComparison {
            g: g.clone(),
            j_g,
            j_hat,
            gb_g,
            gb_hat,
            opts,
        })
    }

    pub fn form_set(&self) -> &FormSet {
        &self.g
    }

    pub fn j_g(&self) -> &Ideal {
        &self.j_g
    }

    pub fn j_hat(&self) -> &Ideal {
        &self.j_hat
    }

    pub fn gb_g(&self) -> &GroebnerBasis {
        &self.gb_g
    }

    pub fn gb_hat(&self) -> &GroebnerBasis {
        &self.gb_hat
    }

    fn bi(&self, p: &Polynomial) -> BiPolynomial {
        BiPolynomial {
            poly: p.clone(),
            nx: self.g.nvars(),
        }
    }

    /// For `q` in the ideal of the dual with no x-variable factor, returns
    /// `p = psi(q)`, checking `psi(p) = q` and that `p` lies in the ideal of
    /// `g`.
    pub fn psi_preimage(&self, q: &BiPolynomial) -> Result<BiPolynomial> {
        check_layout(q, &self.g)?;
        if let Some(i) = (0..q.nx).find(|&i| q.poly.divisible_by_var(i)) {
            return Err(Error::XVariableDivides(i));
        }
        if !self.gb_hat.contains(&q.poly)? {
            return Err(Error::NotInIdeal);
        }
        let p = psi(q);
        if psi(&p) != *q {
            return Err(Error::IdentityViolation(
                "psi is not an involution on this input".into(),
            ));
        }
        if !self.gb_g.contains(&p.poly)? {
            return Err(Error::NotInIdeal);
        }
        Ok(p)
    }

    /// Compares `psi` of the chosen generators of the ideal of `g` with the
    /// ideal of the dual. `generators` defaults to the reduced degrevlex
    /// basis of the ideal of `g`.
    pub fn main_check(
        &self,
        generators: Option<&[Polynomial]>,
        max_witness_degree: u32,
    ) -> Result<MainReesReport> {
        if !canonical_restrictions(&self.g) {
            return Err(Error::RestrictionsNotSatisfied);
        }
        let (nx, ny) = (self.g.nvars(), self.g.len());
        let gens: Vec<Polynomial> = match generators {
            Some(gs) => {
                for p in gs {
                    if !self.gb_g.contains(p)? {
                        return Err(Error::NotInIdeal);
                    }
                }
                gs.to_vec()
            }
            None => self.j_g.gens().to_vec(),
        };
        let images: Vec<Polynomial> = gens.iter().map(|p| psi(&self.bi(p)).poly).collect();
        let mut images_in_hat = true;
        for im in &images {
            images_in_hat &= self.gb_hat.contains(im)?;
        }
        let tilde = Ideal::new(Ring::bigraded(nx, ny), images.clone())?;
        let gb_tilde = groebner_basis(&tilde, &TermOrder::DegRevLex, self.opts)?;

        let all_x = Polynomial::monomial(
            Coeff::from_integer(1.into()),
            ExponentVector::new((0..nx + ny).map(|i| u32::from(i < nx)).collect()),
        );
        let sat = saturate(&tilde, &all_x, self.opts)?;
        let saturation_equal = ideal_equal(&sat, &self.j_hat, self.opts)?;

        let mut witness = None;
        'search: for k in 0..=max_witness_degree {
            for e in monomials_of_degree(nx, k) {
                let m = x_monomial(nx, ny, e.into_inner());
                let mut ok = true;
                for q in self.j_hat.gens() {
                    if !gb_tilde.contains(&q.mul_monomial(m.exponents()))? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    witness = Some(m);
                    break 'search;
                }
            }
        }
        let quotient_equal = match &witness {
            Some(m) => ideal_equal(
                &ideal_quotient(&tilde, &m.to_polynomial(), self.opts)?,
                &self.j_hat,
                self.opts,
            )?,
            None => false,
        };
        Ok(MainReesReport {
            generators: gens,
            psi_images: images,
            images_in_hat,
            saturation_equal,
            witness,
            quotient_equal,
        })
    }
}

/// Outcome of comparing `psi` of the ideal of `g` with the ideal of its dual.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MainReesReport {
    /// Generators of the ideal of `g` that were mapped.
    pub generators: Vec<Polynomial>,
    pub psi_images: Vec<Polynomial>,
    /// Every image reduces to zero modulo the ideal of the dual.
    pub images_in_hat: bool,
    /// Saturating the image ideal by `x0 ... xn` gives the ideal of the dual.
    pub saturation_equal: bool,
    /// Least monomial `M` (by degree) with `M` times the dual ideal inside
    /// the image ideal.
    pub witness: Option<Monomial>,
    /// The quotient of the image ideal by the witness equals the dual ideal.
    pub quotient_equal: bool,
}

impl MainReesReport {
    pub fn holds(&self) -> bool {
        self.images_in_hat && self.saturation_equal && self.quotient_equal
    }
}

/// Default degree bound for the witness search of [`main_rees_check`].
pub const DEFAULT_WITNESS_DEGREE: u32 = 8;

pub fn main_rees_check(
    g: &FormSet,
    generators: Option<&[Polynomial]>,
    opts: GbOptions,
) -> Result<MainReesReport> {
    if !canonical_restrictions(g) {
        return Err(Error::RestrictionsNotSatisfied);
    }
    ReesComparison::new(g, opts)?.main_check(generators, DEFAULT_WITNESS_DEGREE)
}

pub fn psi_preimage(q: &BiPolynomial, g: &FormSet, opts: GbOptions) -> Result<BiPolynomial> {
    check_layout(q, g)?;
    if let Some(i) = (0..q.nx).find(|&i| q.poly.divisible_by_var(i)) {
        return Err(Error::XVariableDivides(i));
    }
    ReesComparison::new(g, opts)?.psi_preimage(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_form;

    fn bi(s: &str, nx: usize, ny: usize) -> BiPolynomial {
        BiPolynomial::parse(s, nx, ny).unwrap()
    }

    fn set(nvars: usize, forms: &[&str]) -> FormSet {
        FormSet::new(
            forms
                .iter()
                .map(|f| parse_form(f, nvars).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn ideal(nx: usize, ny: usize, gens: &[&str]) -> Ideal {
        Ideal::new(
            Ring::bigraded(nx, ny),
            gens.iter()
                .map(|g| parse_poly(g, nx, ny).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn newton_data_of_a_binomial() {
        let n = bi_newton(&bi("x3*y2 - x1*y3", 4, 4)).unwrap();
        assert_eq!(n.frame, vec![crate::poly::int(-1), crate::poly::int(1)]);
        assert_eq!(n.x_cols[0].to_vec(), vec![0, 1, 0, 0]);
        assert_eq!(n.x_cols[1].to_vec(), vec![0, 0, 0, 1]);
        assert_eq!(n.y_cols[0].to_vec(), vec![0, 0, 0, 1]);
        assert_eq!(n.y_cols[1].to_vec(), vec![0, 0, 1, 0]);
        let y = bi_newton(&bi("y0*y2 - y1^2", 4, 4)).unwrap();
        assert!(y.x_cols.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi(&bi("x2^3*y0 - x1*x3^2*y2", 4, 4)),
            bi("x1*x3^2*y0 - x2^3*y2", 4, 4)
        );
        let q = bi("y0*y2 - y1^2", 4, 4);
        assert_eq!(psi(&q), q);
        let p = bi("x3*y2 - x1*y3", 4, 4);
        assert_eq!(psi(&p), bi("x1*y2 - x3*y3", 4, 4));
        assert_eq!(psi(&psi(&p)), p);
        // components are dualized separately
        assert_eq!(
            psi(&bi("x0*y0 + x0*x1*y1 + x1^2*y1", 2, 2)),
            bi("y0 + x1*y1 + x0*y1", 2, 2)
        );
    }

    #[test]
    fn bidual_multipliers() {
        let p = bi("x3*y2 - x1*y3", 4, 4);
        assert_eq!(
            bidual_eval(&p).unwrap().exponents().to_vec(),
            vec![1, 0, 1, 0, 0, 0, 0, 0]
        );
        let f = bi("x0^2 + x1*x2", 3, 0);
        assert_eq!(bidual_eval(&f).unwrap().exponents().to_vec(), vec![0, 1, 1]);
        let t = bi("x0*x1^2*y1", 3, 2);
        assert_eq!(
            bidual_eval(&t).unwrap().exponents().to_vec(),
            vec![2, 1, 3, 0, 0]
        );
        assert_eq!(psi(&t), bi("y1", 3, 2));
    }

    #[test]
    fn psi_law_witnesses() {
        let p = bi("x0*y0 - x1*y1", 2, 2);
        let q = bi("x1*y0 + x0*y1", 2, 2);
        let w = psi_laws_witness(&p, &q).unwrap();
        assert!(w.sum.0.is_one() && w.sum.1.is_one() && w.sum.2.is_one());
        let r = bi("x0^2*y1", 2, 2);
        let w = psi_laws_witness(&p, &r).unwrap();
        assert!(w.sum.0.is_one() && w.sum.1.is_one() && w.sum.2.is_one());
        let s = bi("x0*y1", 2, 2);
        psi_laws_witness(&s, &q).unwrap();
    }

    #[test]
    fn pushing_relations() {
        let g = set(2, &["x0^2", "x0*x1"]);
        assert!(push_relation(&bi("x1*y0 - x0*y1", 2, 2), &g).unwrap());
        assert!(!push_relation(&bi("x0*y0 - x1*y1", 2, 2), &g).unwrap());
        let vars = FormSet::variables(3);
        assert!(push_relation(&bi("x0*y1 - x1*y0", 3, 3), &vars).unwrap());
    }

    #[test]
    fn rees_ideals_of_small_sets() {
        let opts = GbOptions::default();
        let lin = rees_ideal(&FormSet::variables(2), opts).unwrap();
        assert!(ideal_equal(&lin, &ideal(2, 2, &["x1*y0 - x0*y1"]), opts).unwrap());
        let conic = rees_ideal(&set(2, &["x0^2", "x0*x1", "x1^2"]), opts).unwrap();
        let want = ideal(2, 3, &["x1*y0 - x0*y1", "x1*y1 - x0*y2", "y0*y2 - y1^2"]);
        assert!(ideal_equal(&conic, &want, opts).unwrap());
    }

    #[test]
    fn main_check_for_lines() {
        let r = main_rees_check(&FormSet::variables(2), None, GbOptions::default()).unwrap();
        assert!(r.holds());
        assert!(r.witness.unwrap().is_one());
        let r = main_rees_check(&FormSet::variables(3), None, GbOptions::default()).unwrap();
        assert!(r.images_in_hat && r.saturation_equal);
        assert!(matches!(
            main_rees_check(&set(2, &["x0^2", "x0*x1"]), None, GbOptions::default()),
            Err(Error::RestrictionsNotSatisfied)
        ));
    }

    #[test]
    fn preimage_requires_no_x_factor() {
        let g = FormSet::variables(2);
        let q = bi("x0*x1*y0 - x0^2*y1", 2, 2);
        assert_eq!(
            psi_preimage(&q, &g, GbOptions::default()),
            Err(Error::XVariableDivides(0))
        );
        let q = bi("x0*y0 - x1*y1", 2, 2);
        assert_eq!(
            psi_preimage(&q, &g, GbOptions::default()).unwrap(),
            bi("x1*y0 - x0*y1", 2, 2)
        );
    }
}
