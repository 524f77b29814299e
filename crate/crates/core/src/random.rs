//! Seeded generators of random inputs for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bigraded::BiPolynomial;
use crate::jonquieres::{make_jonquieres, JonquieresMap};
use crate::maps::{compose, RationalMap};
use crate::newton::{canonical_restrictions, dual_polynomial, FormSet};
use crate::poly::{int, Coeff, ExponentVector, Polynomial};

pub use rand::SeedableRng;

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(rng: &mut SuiteRng) -> Coeff {
    let v = rng.gen_range(1..=5);
    int(if rng.gen_bool(0.5) { v } else { -v })
}

/// A random exponent vector of length `nvars` and total `degree`.
pub fn exponent(rng: &mut SuiteRng, nvars: usize, degree: u32) -> ExponentVector {
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    ExponentVector::new(e)
}

/// A nonzero form with between one and `max_terms` terms.
pub fn form(rng: &mut SuiteRng, nvars: usize, degree: u32, max_terms: usize) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let p = Polynomial::from_terms(
            nvars,
            (0..k).map(|_| (coeff(rng), exponent(rng, nvars, degree))),
        )
        .expect("consistent ambient");
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn form_set(
    rng: &mut SuiteRng,
    nvars: usize,
    degree: u32,
    len: usize,
    max_terms: usize,
) -> FormSet {
    FormSet::new(
        (0..len)
            .map(|_| form(rng, nvars, degree, max_terms))
            .collect(),
    )
    .expect("valid forms")
}

/// Random sizes `n <= 4`, `d <= 5`, up to five terms per form.
pub fn small_form_set(rng: &mut SuiteRng) -> FormSet {
    let nvars = rng.gen_range(2..=5);
    let degree = rng.gen_range(1..=5);
    let len = rng.gen_range(1..=4);
    form_set(rng, nvars, degree, len, 5)
}

/// A small form set satisfying the canonical restrictions.
pub fn canonical_form_set(rng: &mut SuiteRng) -> FormSet {
    loop {
        let g = small_form_set(rng);
        if canonical_restrictions(&g) {
            return g;
        }
    }
}

/// A bihomogeneous polynomial of bidegree `(dx, dy)`.
pub fn biform(
    rng: &mut SuiteRng,
    nx: usize,
    ny: usize,
    dx: u32,
    dy: u32,
    max_terms: usize,
) -> BiPolynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms = (0..k).map(|_| {
            let mut e = exponent(rng, nx, dx).into_inner();
            e.extend(exponent(rng, ny, dy).iter());
            (coeff(rng), ExponentVector::new(e))
        });
        let p = Polynomial::from_terms(nx + ny, terms).expect("consistent ambient");
        if !p.is_zero() {
            return BiPolynomial::new(p, nx).expect("nx within the ring");
        }
    }
}

/// Divides out the largest monomial in the x-variables.
pub fn strip_x_content(p: &BiPolynomial) -> BiPolynomial {
    let nx = p.nx();
    let n = p.poly().nvars();
    let mut m = vec![u32::MAX; n];
    for t in p.poly().terms() {
        for (i, slot) in m.iter_mut().enumerate() {
            *slot = if i < nx { (*slot).min(t.expo()[i]) } else { 0 };
        }
    }
    let q = p
        .poly()
        .div_monomial(&ExponentVector::new(m))
        .expect("common monomial divides");
    BiPolynomial::new(q, nx).expect("same layout")
}

fn permutation_map(rng: &mut SuiteRng, nvars: usize) -> RationalMap {
    let mut idx: Vec<usize> = (0..nvars).collect();
    idx.shuffle(rng);
    let forms = idx.into_iter().map(|i| Polynomial::var(nvars, i)).collect();
    RationalMap::new(FormSet::new(forms).expect("variables")).expect("at least two coordinates")
}

/// A permutation composed with the Magnus involution on either side, or
/// a composite of two such maps.
pub fn monomial_cremona(rng: &mut SuiteRng, nvars: usize) -> RationalMap {
    let m = RationalMap::magnus(nvars - 1).expect("nvars >= 2");
    let one = |rng: &mut SuiteRng| -> RationalMap {
        let p = permutation_map(rng, nvars);
        match rng.gen_range(0..3) {
            0 => compose(&p, &m).expect("monomial composite"),
            1 => compose(&m, &p).expect("monomial composite"),
            _ => compose(
                &compose(&p, &m).expect("monomial composite"),
                &permutation_map(rng, nvars),
            )
            .expect("monomial composite"),
        }
    };
    let f = one(rng);
    if rng.gen_bool(0.3) {
        compose(&f, &one(rng)).expect("monomial composite")
    } else {
        f
    }
}

/// A form of degree `degree` in `x0..x{n}` with degree at most one in `x_n`
/// and positive degree in `x_n` when `with_xn` holds.
fn monoid(rng: &mut SuiteRng, nvars: usize, degree: u32, with_xn: bool) -> Polynomial {
    let n = nvars - 1;
    loop {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut e = exponent(rng, n, degree).into_inner();
            e.push(0);
            terms.push((coeff(rng), ExponentVector::new(e)));
        }
        if with_xn && degree >= 1 {
            for _ in 0..rng.gen_range(1..=2) {
                let mut e = exponent(rng, n, degree - 1).into_inner();
                e.push(1);
                terms.push((coeff(rng), ExponentVector::new(e)));
            }
        }
        let p = Polynomial::from_terms(nvars, terms).expect("consistent ambient");
        if !p.is_zero() && (!with_xn || p.degree_in(n) == 1) {
            return p;
        }
    }
}

fn monomial_in_front(rng: &mut SuiteRng, nvars: usize, degree: u32) -> ExponentVector {
    let mut e = exponent(rng, nvars - 1, degree).into_inner();
    e.push(0);
    ExponentVector::new(e)
}

/// A de Jonquieres map of `P^n` (`nvars = n + 1`) with monomial support.
/// About half of the samples are built so that `f` is the dual of `q` up to
/// monomial factors.
pub fn jonquieres(rng: &mut SuiteRng, nvars: usize) -> JonquieresMap {
    let n = nvars - 1;
    loop {
        let support = if n == 2 {
            if rng.gen_bool(0.5) {
                RationalMap::identity(2)
            } else {
                RationalMap::magnus(1).expect("n >= 1")
            }
        } else {
            monomial_cremona(rng, n)
        };
        let dg = support.degree();
        let (q, f) = if rng.gen_bool(0.5) {
            let dq = rng.gen_range(1..=2);
            let q1 = monoid(rng, nvars, dq, true);
            let (_, q1) = q1.monomial_content().expect("nonzero");
            let Ok(f1) = dual_polynomial(&q1) else {
                continue;
            };
            let (dq, df) = (q1.degree().expect("nonzero"), f1.degree().expect("nonzero"));
            let shift = i64::from(df) - i64::from(dq) - i64::from(dg);
            let mq = monomial_in_front(rng, nvars, shift.max(0) as u32);
            let mf = monomial_in_front(rng, nvars, (-shift).max(0) as u32);
            (q1.mul_monomial(&mq), f1.mul_monomial(&mf))
        } else {
            let dq = rng.gen_range(0..=2);
            let q_xn = rng.gen_bool(0.7);
            let q = if dq == 0 {
                Polynomial::one(nvars)
            } else {
                monoid(rng, nvars, dq, q_xn)
            };
            let f_xn = q.degree_in(n) == 0 || rng.gen_bool(0.5);
            let f = monoid(rng, nvars, dq + dg, f_xn);
            (q, f)
        };
        if let Ok(j) = make_jonquieres(&support, &q, &f) {
            return j;
        }
    }
}
