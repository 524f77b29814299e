//! de Jonquieres maps `(q g_0 : ... : q g_{n-1} : f)` of `P^n` with center
//! `(0 : ... : 0 : 1)`, where `g` is a Cremona map of the hyperplane
//! `x_n = 0` and `q`, `f` are coprime polynomials of degree at most one in
//! `x_n`.

use crate::error::{Error, Result};
use crate::io::{parse_poly, render, JonquieresDoc};
use crate::maps::{compose, monomial_cremona_inverse, same_map, RationalMap, DEFAULT_INVERSE_CAP};
use crate::newton::{
    directrix, dual_polynomial, dual_set, newton_matrix, DirectrixVector, FormSet,
};
use crate::poly::{gcd, gcd_all, ExponentVector, Polynomial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JonquieresMap {
    /// Support map in `x0..x{n-1}`.
    support: RationalMap,
    q: Polynomial,
    f: Polynomial,
    assembled: FormSet,
}

impl JonquieresMap {
    pub fn support(&self) -> &RationalMap {
        &self.support
    }

    pub fn q(&self) -> &Polynomial {
        &self.q
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    /// `(q g_0, ..., q g_{n-1}, f)`.
    pub fn assembled(&self) -> &FormSet {
        &self.assembled
    }

    pub fn as_map(&self) -> Result<RationalMap> {
        RationalMap::new(self.assembled.clone())
    }

    pub fn nvars(&self) -> usize {
        self.assembled.nvars()
    }

    pub fn to_doc(&self) -> JonquieresDoc {
        let n = self.nvars();
        JonquieresDoc {
            nvars: n,
            support: self
                .support
                .forms()
                .iter()
                .map(|g| render(&g.embed(n, 0), n))
                .collect(),
            q: render(&self.q, n),
            f: render(&self.f, n),
        }
    }

    pub fn from_doc(doc: &JonquieresDoc) -> Result<Self> {
        let n = doc.nvars;
        if n < 3 {
            return Err(Error::Domain(
                "de Jonquieres maps need at least three variables".into(),
            ));
        }
        let front: Vec<usize> = (0..n - 1).collect();
        let support = doc
            .support
            .iter()
            .map(|s| {
                parse_poly(s, n, 0)?
                    .project(&front)
                    .ok_or_else(|| Error::Domain(format!("support form `{s}` involves x{}", n - 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let support = RationalMap::new(FormSet::new(support)?)?;
        make_jonquieres(
            &support,
            &parse_poly(&doc.q, n, 0)?,
            &parse_poly(&doc.f, n, 0)?,
        )
    }
}

fn homogeneous_degree(p: &Polynomial, name: &'static str) -> Result<u32> {
    if p.is_zero() || !p.is_homogeneous() {
        return Err(Error::Domain(format!("{name} must be a nonzero form")));
    }
    p.degree()
}

/// Validates the data and assembles the representative.
pub fn make_jonquieres(
    support: &RationalMap,
    q: &Polynomial,
    f: &Polynomial,
) -> Result<JonquieresMap> {
    let n = support.source_vars();
    if support.target_len() != n {
        return Err(Error::DimensionMismatch(
            "the support must be a self-map of the hyperplane".into(),
        ));
    }
    for (name, p) in [("q", q), ("f", f)] {
        if p.nvars() != n + 1 {
            return Err(Error::AmbientMismatch {
                expected: n + 1,
                found: p.nvars(),
            });
        }
        homogeneous_degree(p, name)?;
    }
    if q.degree_in(n) > 1 {
        return Err(Error::NotMonoid("q"));
    }
    if f.degree_in(n) > 1 {
        return Err(Error::NotMonoid("f"));
    }
    if q.degree_in(n) == 0 && f.degree_in(n) == 0 {
        return Err(Error::NoPositiveXnDegree);
    }
    if !gcd(q, f).is_one() {
        return Err(Error::NotCoprime);
    }
    let support = crate::maps::reduce_representative(support.rep().clone())?;
    let expected = q.degree()? + support.degree();
    if expected != f.degree()? {
        return Err(Error::JonquieresDegree {
            expected,
            found: f.degree()?,
        });
    }
    if support.is_monomial() && monomial_cremona_inverse(&support, DEFAULT_INVERSE_CAP).is_err() {
        return Err(Error::NotCremonaSupport);
    }
    let mut forms: Vec<Polynomial> = support
        .forms()
        .iter()
        .map(|g| q * &g.embed(n + 1, 0))
        .collect();
    forms.push(f.clone());
    let assembled = FormSet::new(forms)?;
    Ok(JonquieresMap {
        support,
        q: q.clone(),
        f: f.clone(),
        assembled,
    })
}

fn exponent_diff(a: &[u32], b: &[u32]) -> ExponentVector {
    ExponentVector::new(
        a.iter()
            .zip(b)
            .map(|(x, y)| x.checked_sub(*y).expect("directrix dominates"))
            .collect(),
    )
}

/// The dual map, decomposed again as a de Jonquieres map: the dual of
/// `q g_i` is `x^{alpha - beta_q - gamma} dual(q) dual(g)_i` and the dual of
/// `f` is `x^{alpha - delta} dual(f)`.
pub fn dual_jonquieres(map: &JonquieresMap) -> Result<JonquieresMap> {
    let n = map.support.source_vars();
    let alpha = directrix(&newton_matrix(&map.assembled));
    let beta_q = map.q.max_exponents();
    let gamma = directrix(&newton_matrix(map.support.rep()));
    let mut gamma_full = gamma.to_vec();
    gamma_full.push(0);
    let delta = map.f.max_exponents();

    let t1 = exponent_diff(&exponent_diff(&alpha, &beta_q), &gamma_full);
    let t2 = exponent_diff(&alpha, &delta);
    let g_hat = dual_set(map.support.rep());
    let content = gcd_all(n, g_hat.forms());
    let support_forms = g_hat
        .forms()
        .iter()
        .map(|g| g.exact_div(&content))
        .collect::<Result<Vec<_>>>()?;
    let support = RationalMap::new(FormSet::new(support_forms)?)?;

    let q_new = (&dual_polynomial(&map.q)? * &content.embed(n + 1, 0)).mul_monomial(&t1);
    let f_new = dual_polynomial(&map.f)?.mul_monomial(&t2);
    let common = gcd(&q_new, &f_new);
    let (q_new, f_new) = (q_new.exact_div(&common)?, f_new.exact_div(&common)?);
    make_jonquieres(&support, &q_new, &f_new)
}

/// Result of the Magnus commutation test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CommuteReport {
    /// `dual(q') = f'` where `q = q' M_q`, `f = f' M_f` split off monomial
    /// content.
    pub criterion: bool,
    /// `M o F` and `F o M` define the same map.
    pub commutes: bool,
}

pub fn commute_criterion(map: &JonquieresMap) -> Result<CommuteReport> {
    if !map.support.is_monomial() {
        return Err(Error::NonMonomialSupport);
    }
    let (_, q1) = map.q.monomial_content()?;
    let (_, f1) = map.f.monomial_content()?;
    let criterion = dual_polynomial(&q1)? == f1;
    let fm = map.as_map()?;
    let m = RationalMap::magnus(map.nvars() - 1)?;
    let commutes = same_map(&compose(&m, &fm)?, &compose(&fm, &m)?)?;
    Ok(CommuteReport {
        criterion,
        commutes,
    })
}

/// Directrix of the assembled set.
pub fn assembled_directrix(map: &JonquieresMap) -> DirectrixVector {
    directrix(&newton_matrix(&map.assembled))
}
