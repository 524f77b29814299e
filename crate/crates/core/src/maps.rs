//! Rational maps given by tuples of forms, composition and inverse checks.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{eliminate, GbOptions, Ideal, Ring};
use crate::magnus::magnus;
use crate::newton::{dual_polynomial, dual_set, FormSet};
use crate::poly::{gcd_all, monomials_of_degree, Coeff, ExponentVector, Polynomial};

/// Default bound on the degree of a searched monomial inverse.
pub const DEFAULT_INVERSE_CAP: u32 = 10;

/// A rational map `P^n -> P^m` represented by `m + 1` forms in `n + 1`
/// variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMap {
    rep: FormSet,
    reduced: bool,
}

impl RationalMap {
    /// Wraps a representative as given.
    pub fn new(rep: FormSet) -> Result<Self> {
        if rep.len() < 2 {
            return Err(Error::Domain(
                "a rational map needs at least two coordinates".into(),
            ));
        }
        Ok(RationalMap {
            rep,
            reduced: false,
        })
    }

    pub fn identity(nvars: usize) -> Self {
        RationalMap {
            rep: FormSet::variables(nvars),
            reduced: true,
        }
    }

    /// The Magnus involution of `P^n`.
    pub fn magnus(n: usize) -> Result<Self> {
        Ok(RationalMap {
            rep: magnus(n)?,
            reduced: true,
        })
    }

    pub fn rep(&self) -> &FormSet {
        &self.rep
    }

    pub fn forms(&self) -> &[Polynomial] {
        self.rep.forms()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Number of variables of the source.
    pub fn source_vars(&self) -> usize {
        self.rep.nvars()
    }

    /// Number of coordinates of the target.
    pub fn target_len(&self) -> usize {
        self.rep.len()
    }

    pub fn degree(&self) -> u32 {
        self.rep.degree()
    }

    pub fn is_monomial(&self) -> bool {
        self.rep.is_monomial()
    }

    fn is_square(&self) -> bool {
        self.source_vars() == self.target_len()
    }
}

/// Divides out the gcd of the coordinates.
pub fn reduce_representative(f: FormSet) -> Result<RationalMap> {
    let map = RationalMap::new(f)?;
    reduce(map)
}

fn reduce(map: RationalMap) -> Result<RationalMap> {
    if map.reduced {
        return Ok(map);
    }
    let g = gcd_all(map.rep.nvars(), map.rep.forms());
    if g.is_one() {
        return Ok(RationalMap {
            rep: map.rep,
            reduced: true,
        });
    }
    let forms = map
        .rep
        .forms()
        .iter()
        .map(|f| f.exact_div(&g))
        .collect::<Result<Vec<_>>>()?;
    if forms.iter().all(Polynomial::is_constant) {
        return Err(Error::Degenerate("the map is constant".into()));
    }
    Ok(RationalMap {
        rep: FormSet::new(forms)?,
        reduced: true,
    })
}

/// Coordinates of `f(g)` before reduction.
fn substitute(f: &RationalMap, g: &RationalMap) -> Result<Vec<Polynomial>> {
    if f.source_vars() != g.target_len() {
        return Err(Error::DimensionMismatch(format!(
            "source of the outer map has {} variables, inner map has {} coordinates",
            f.source_vars(),
            g.target_len()
        )));
    }
    let mut out = Vec::with_capacity(f.target_len());
    for (j, c) in f.forms().iter().enumerate() {
        let v = c.evaluate(g.forms())?;
        if v.is_zero() {
            return Err(Error::Degenerate(format!(
                "coordinate {j} of the composite vanishes"
            )));
        }
        out.push(v);
    }
    Ok(out)
}

/// Reduced representative of `f o g`.
pub fn compose(f: &RationalMap, g: &RationalMap) -> Result<RationalMap> {
    reduce_representative(FormSet::new(substitute(f, g)?)?)
}

/// Whether the reduced representatives agree up to a nonzero scalar.
pub fn same_map(f: &RationalMap, g: &RationalMap) -> Result<bool> {
    if f.source_vars() != g.source_vars() || f.target_len() != g.target_len() {
        return Err(Error::DimensionMismatch(
            "maps between different spaces".into(),
        ));
    }
    let (f, g) = (reduce(f.clone())?, reduce(g.clone())?);
    Ok(normalized(&f) == normalized(&g))
}

/// Coordinates scaled so that the first one is monic.
fn normalized(f: &RationalMap) -> Vec<Polynomial> {
    let lc = f.forms()[0]
        .leading_coeff()
        .expect("forms are nonzero")
        .recip();
    f.forms().iter().map(|c| c.scale(&lc)).collect()
}

/// The polynomial `C` with `g_i(f) = x_i C` for every `i`.
pub fn inversion_factor(f: &RationalMap, g: &RationalMap) -> Result<Polynomial> {
    if !f.is_square() || !g.is_square() || f.source_vars() != g.source_vars() {
        return Err(Error::DimensionMismatch(
            "inversion needs two self-maps of one space".into(),
        ));
    }
    let n = f.source_vars();
    let composite = substitute(g, f).map_err(|e| match e {
        Error::Degenerate(_) => Error::NotInverse,
        e => e,
    })?;
    let c = composite[0]
        .exact_div(&Polynomial::var(n, 0))
        .map_err(|_| Error::NotInverse)?;
    for (i, h) in composite.iter().enumerate() {
        if *h != &Polynomial::var(n, i) * &c {
            return Err(Error::NotInverse);
        }
    }
    Ok(c)
}

/// Inverse of a square rational matrix, `None` if singular.
fn invert(a: &[Vec<Coeff>]) -> Option<Vec<Vec<Coeff>>> {
    let n = a.len();
    let mut m: Vec<Vec<Coeff>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in &mut m[col] {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn as_exponent(v: &Coeff) -> Option<u32> {
    if v.is_integer() && !v.is_negative() {
        v.to_integer().to_u32()
    } else {
        None
    }
}

/// Inverse of a monomial Cremona map, searched by degree up to `cap`.
pub fn monomial_cremona_inverse(f: &RationalMap, cap: u32) -> Result<RationalMap> {
    if !f.is_monomial() || !f.is_square() {
        return Err(Error::Domain("expected a monomial self-map".into()));
    }
    let f = reduce(f.clone())?;
    let k = f.source_vars();
    let d = f.degree();
    // column j of `a` is the exponent vector of coordinate j
    let a: Vec<Vec<Coeff>> = (0..k)
        .map(|i| {
            f.forms()
                .iter()
                .map(|m| Coeff::from_integer(m.terms()[0].expo()[i].into()))
                .collect()
        })
        .collect();
    let ainv = invert(&a).ok_or(Error::NotBirational { cap })?;
    let apply = |v: &[Coeff]| -> Vec<Coeff> {
        ainv.iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    };
    for dd in 1..=cap {
        let s = d * dd - 1;
        let found = monomials_of_degree(k, s).into_iter().find_map(|c| {
            let cv: Vec<Coeff> = c.iter().map(|&x| Coeff::from_integer(x.into())).collect();
            let base = apply(&cv);
            (0..k)
                .map(|j| {
                    let b = base
                        .iter()
                        .zip(&ainv)
                        .map(|(x, row)| as_exponent(&(x + &row[j])))
                        .collect::<Option<Vec<u32>>>()?;
                    Some(Polynomial::monomial(Coeff::one(), ExponentVector::new(b)))
                })
                .collect::<Option<Vec<_>>>()
        });
        if let Some(forms) = found {
            let g = reduce_representative(FormSet::new(forms)?)?;
            inversion_factor(&f, &g)?;
            return Ok(g);
        }
    }
    Err(Error::NotBirational { cap })
}

/// Whether `M o F` and `F o M` define the same map, `M` the Magnus involution.
pub fn magnus_commute(f: &RationalMap) -> Result<bool> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch("expected a self-map".into()));
    }
    let m = RationalMap::magnus(f.source_vars() - 1)?;
    same_map(&compose(&m, f)?, &compose(f, &m)?)
}

/// The map defined by the dual set of the representative.
pub fn dual_map(f: &RationalMap) -> Result<RationalMap> {
    reduce_representative(dual_set(f.rep()))
}

/// Kernel of `k[y] -> k[x]`, `y_j -> g_j`, as an ideal in the y-variables.
pub fn image_kernel(g: &FormSet, opts: GbOptions) -> Result<Ideal> {
    let (nx, ny) = (g.nvars(), g.len());
    let n = nx + ny;
    let gens = g
        .forms()
        .iter()
        .enumerate()
        .map(|(j, f)| &Polynomial::var(n, nx + j) - &f.embed(n, 0))
        .collect();
    let graph = Ideal::new(Ring::plain(n), gens)?;
    let front: Vec<usize> = (0..nx).collect();
    let keep: Vec<usize> = (nx..n).collect();
    let kernel = eliminate(&graph, &front, opts)?
        .iter()
        .map(|p| p.project(&keep).expect("free of the eliminated variables"))
        .collect();
    Ideal::new(Ring::bigraded(0, ny), kernel)
}

/// Whether the inversion factor `D` of the dual pair divides
/// `x^{n-1 + n d - n beta} dual(C)^n`, where `C` is the inversion factor of
/// `(f, g)`, `d` its degree and `beta` its exponent maxima.
pub fn inversion_duality_check(f: &RationalMap, g: &RationalMap) -> Result<bool> {
    let c = inversion_factor(f, g)?;
    let n = f.source_vars() as u32 - 1;
    let m = RationalMap::magnus(n as usize)?;
    let d_factor = inversion_factor(&dual_map(f)?, &compose(&m, g)?)?;
    let dc = c.degree()?;
    let beta = c.max_exponents();
    let gamma = ExponentVector::new(beta.iter().map(|&b| n - 1 + n * dc - n * b).collect());
    let lhs = dual_polynomial(&c)?.pow(n).mul_monomial(&gamma);
    Ok(lhs.exact_div(&d_factor).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_form;

    fn map(nvars: usize, forms: &[&str]) -> RationalMap {
        RationalMap::new(
            FormSet::new(
                forms
                    .iter()
                    .map(|f| parse_form(f, nvars).unwrap())
                    .collect(),
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn reduction_divides_the_gcd() {
        let f = reduce(map(3, &["x0^2*x1*x2", "x0*x1^2*x2", "x0*x1*x2^2"])).unwrap();
        assert_eq!(f.rep(), RationalMap::identity(3).rep());
        let g = map(3, &["x0^2", "x1*x2", "x0*x1"]);
        assert_eq!(reduce(g.clone()).unwrap().rep(), g.rep());
    }

    #[test]
    fn magnus_is_an_involution() {
        let m = RationalMap::magnus(2).unwrap();
        let mm = compose(&m, &m).unwrap();
        assert!(same_map(&mm, &RationalMap::identity(3)).unwrap());
        assert_eq!(
            inversion_factor(&m, &m).unwrap(),
            parse_form("x0*x1*x2", 3).unwrap()
        );
        assert!(!same_map(&m, &RationalMap::identity(3)).unwrap());
    }

    #[test]
    fn same_map_ignores_scalars() {
        let f = map(2, &["x0^2", "x0*x1 - x1^2"]);
        let g = map(2, &["3*x0^2", "3*x0*x1 - 3*x1^2"]);
        assert!(same_map(&f, &g).unwrap());
        assert!(same_map(&f, &compose(&f, &RationalMap::identity(2)).unwrap()).unwrap());
    }

    #[test]
    fn inversion_factor_cases() {
        let id = RationalMap::identity(3);
        assert!(inversion_factor(&id, &id).unwrap().is_one());
        let v = map(2, &["x0^2", "x0*x1", "x1^2"]);
        assert!(matches!(
            inversion_factor(&v, &v),
            Err(Error::DimensionMismatch(_))
        ));
        let w = map(3, &["x0^2", "x0*x1", "x1^2"]);
        assert_eq!(inversion_factor(&w, &w), Err(Error::NotInverse));
        let sq = map(2, &["x0^2", "x1^2"]);
        assert_eq!(inversion_factor(&sq, &sq), Err(Error::NotInverse));
        // (x0^2 : x0*x1) is the identity with a common factor
        let f = map(2, &["x0^2", "x0*x1"]);
        assert_eq!(
            inversion_factor(&f, &f).unwrap(),
            parse_form("x0^3", 2).unwrap()
        );
    }

    #[test]
    fn monomial_inverses() {
        let m = RationalMap::magnus(3).unwrap();
        assert_eq!(
            monomial_cremona_inverse(&m, DEFAULT_INVERSE_CAP)
                .unwrap()
                .rep(),
            m.rep()
        );
        let p = map(3, &["x2", "x0", "x1"]);
        let inv = monomial_cremona_inverse(&p, DEFAULT_INVERSE_CAP).unwrap();
        assert_eq!(inv.rep(), map(3, &["x1", "x2", "x0"]).rep());
        let sq = map(3, &["x0^2", "x1^2", "x2^2"]);
        assert_eq!(
            monomial_cremona_inverse(&sq, DEFAULT_INVERSE_CAP),
            Err(Error::NotBirational { cap: 10 })
        );
        // a quadratic monomial map of the plane that is not the Magnus map
        let q = map(3, &["x0^2", "x0*x1", "x1*x2"]);
        let qi = monomial_cremona_inverse(&q, DEFAULT_INVERSE_CAP).unwrap();
        assert!(inversion_factor(&qi, &q).is_ok());
    }

    #[test]
    fn magnus_commutation() {
        assert!(magnus_commute(&RationalMap::identity(3)).unwrap());
        assert!(magnus_commute(&map(3, &["x0^2", "x0*x1", "x1*x2"])).unwrap());
        assert!(!magnus_commute(&map(3, &["x0*x2", "x1*x2", "x0*x2 + x1^2"])).unwrap());
    }

    #[test]
    fn kernels() {
        assert!(image_kernel(&FormSet::variables(3), GbOptions::default())
            .unwrap()
            .gens()
            .is_empty());
        let v = FormSet::new(
            ["x0^2", "x0*x1", "x1^2"]
                .iter()
                .map(|f| parse_form(f, 2).unwrap())
                .collect(),
        )
        .unwrap();
        let k = image_kernel(&v, GbOptions::default()).unwrap();
        assert_eq!(
            k.gens(),
            &[crate::io::parse_poly("y1^2 - y0*y2", 0, 3).unwrap()]
        );
    }

    #[test]
    fn inversion_duality() {
        let id = RationalMap::identity(3);
        assert!(inversion_duality_check(&id, &id).unwrap());
        let m = RationalMap::magnus(2).unwrap();
        let d = inversion_factor(&dual_map(&id).unwrap(), &compose(&m, &id).unwrap()).unwrap();
        assert_eq!(d, parse_form("x0*x1*x2", 3).unwrap());
        assert!(inversion_duality_check(&m, &m).unwrap());
        let q = map(3, &["x0^2", "x0*x1", "x1*x2"]);
        let qi = monomial_cremona_inverse(&q, DEFAULT_INVERSE_CAP).unwrap();
        assert!(inversion_duality_check(&q, &qi).unwrap());
    }
}
