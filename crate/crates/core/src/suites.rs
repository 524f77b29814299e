//! Seeded property suites over random inputs. Each suite reports the number
//! of cases run and a description of every failure.

use rand::Rng;

use crate::bigraded::{
    bi_newton, bidual_eval, psi, psi_laws_witness, push_relation, rees_ideal, BiPolynomial,
};
use crate::error::Result;
use crate::groebner::GbOptions;
use crate::jonquieres::{assembled_directrix, commute_criterion, dual_jonquieres};
use crate::magnus::{
    composite_identity, eval_identity, matrix_identity_check, product_rule, sum_rule,
};
use crate::maps::{
    compose, dual_map, magnus_commute, monomial_cremona_inverse, reduce_representative, same_map,
    RationalMap, DEFAULT_INVERSE_CAP,
};
use crate::newton::{
    canonical_restrictions, directrix, dual_polynomial, dual_set, newton_matrix, FormSet,
};
use crate::poly::Polynomial;
use crate::random::{self, SuiteRng};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Case = fn(&mut SuiteRng) -> Result<Option<String>>;

fn run(name: &'static str, seed: u64, count: usize, case: Case) -> SuiteReport {
    let mut rng = random::rng(seed);
    let mut failures = Vec::new();
    for k in 0..count {
        match case(&mut rng) {
            Ok(None) => {}
            Ok(Some(msg)) => failures.push(format!("case {k}: {msg}")),
            Err(e) => failures.push(format!("case {k}: {e}")),
        }
    }
    SuiteReport {
        name,
        cases: count,
        failures,
    }
}

fn show(g: &FormSet) -> String {
    let forms: Vec<String> = g.forms().iter().map(|f| f.to_string()).collect();
    format!("[{}]", forms.join(", "))
}

/// Names accepted by [`run_suite`] with their default case counts.
pub const SUITES: &[(&str, usize)] = &[
    ("involution", 200),
    ("eval", 500),
    ("matrix", 300),
    ("product", 500),
    ("sum", 300),
    ("composite", 200),
    ("bidual", 300),
    ("psi-laws", 300),
    ("psi-involution", 300),
    ("push", 200),
    ("magnus-dual", 100),
    ("magnus-monomial", 50),
    ("jonquieres", 50),
];

pub fn default_count(name: &str) -> Option<usize> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, c)| *c)
}

/// Runs the named suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64, count: usize) -> Option<SuiteReport> {
    Some(match name {
        "involution" => involution(seed, count),
        "eval" => eval(seed, count),
        "matrix" => matrix(seed, count),
        "product" => product(seed, count),
        "sum" => sum(seed, count),
        "composite" => composite(seed, count),
        "bidual" => bidual(seed, count),
        "psi-laws" => psi_laws(seed, count),
        "psi-involution" => psi_involution(seed, count),
        "push" => push(seed, count),
        "magnus-dual" => magnus_dual(seed, count),
        "magnus-monomial" => magnus_monomial(seed, count),
        "jonquieres" => jonquieres(seed, count),
        _ => return None,
    })
}

/// Double dual is the identity, dual degree is `|alpha| - d`, frames and
/// term counts are kept, and the restrictions pass to the dual.
pub fn involution(seed: u64, count: usize) -> SuiteReport {
    run("involution", seed, count, |rng| {
        let g = random::canonical_form_set(rng);
        let d = dual_set(&g);
        let alpha = directrix(&newton_matrix(&g));
        if d.degree() != alpha.as_exponents().degree() - g.degree() {
            return Ok(Some(format!("dual degree of {}", show(&g))));
        }
        if d.forms()
            .iter()
            .any(|f| f.degree().ok() != Some(d.degree()) || !f.is_homogeneous())
        {
            return Ok(Some(format!("dual of {} is not equidimensional", show(&g))));
        }
        for (f, fd) in g.forms().iter().zip(d.forms()) {
            let mut a: Vec<_> = f.terms().iter().map(|t| t.coeff().clone()).collect();
            let mut b: Vec<_> = fd.terms().iter().map(|t| t.coeff().clone()).collect();
            a.sort();
            b.sort();
            if a != b {
                return Ok(Some(format!("frame of {}", show(&g))));
            }
        }
        if !canonical_restrictions(&d) {
            return Ok(Some(format!("restrictions lost for {}", show(&g))));
        }
        Ok((dual_set(&d) != g).then(|| format!("double dual of {}", show(&g))))
    })
}

/// `g(x^) = x^{d - beta} dual(g)` with `beta` computed independently.
pub fn eval(seed: u64, count: usize) -> SuiteReport {
    run("eval", seed, count, |rng| {
        let g = random::small_form_set(rng);
        let m = eval_identity(&g)?;
        let beta = directrix(&newton_matrix(&g));
        let want: Vec<u32> = beta.iter().map(|b| g.degree() - b).collect();
        Ok((m.exponents().to_vec() != want).then(|| format!("multiplier for {}", show(&g))))
    })
}

pub fn matrix(seed: u64, count: usize) -> SuiteReport {
    run("matrix", seed, count, |rng| {
        let nvars = rng.gen_range(2..=4);
        let d = rng.gen_range(1..=4);
        let f = random::form(rng, nvars, d, 5);
        Ok((!matrix_identity_check(&f)?).then(|| format!("matrix identity for {f}")))
    })
}

/// Product rule, and `dual(p^k) = dual(p)^k` for `k <= 3`.
pub fn product(seed: u64, count: usize) -> SuiteReport {
    run("product", seed, count, |rng| {
        let nvars = rng.gen_range(2..=4);
        let (dp, dq) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let p = random::form(rng, nvars, dp, 4);
        let q = random::form(rng, nvars, dq, 4);
        if !product_rule(&p, &q)? {
            return Ok(Some(format!("product rule for {p} and {q}")));
        }
        let dp = dual_polynomial(&p)?;
        for k in 1..=3 {
            if dual_polynomial(&p.pow(k))? != dp.pow(k) {
                return Ok(Some(format!("power {k} of {p}")));
            }
        }
        Ok(None)
    })
}

pub fn sum(seed: u64, count: usize) -> SuiteReport {
    run("sum", seed, count, |rng| loop {
        let nvars = rng.gen_range(2..=4);
        let d = rng.gen_range(1..=4);
        let len = rng.gen_range(1..=3);
        let p = random::form_set(rng, nvars, d, len, 4);
        let q = random::form_set(rng, nvars, d, len, 4);
        match sum_rule(&p, &q) {
            Err(crate::Error::Degenerate(_)) => continue,
            r => return r.map(|_| None),
        }
    })
}

/// `g(h^) = x^{d alpha - beta} dual(g(h))` with the exponent checked
/// against the directrices.
pub fn composite(seed: u64, count: usize) -> SuiteReport {
    run("composite", seed, count, |rng| loop {
        let k = rng.gen_range(2..=3);
        let (dg, lg) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (nh, dh) = (rng.gen_range(2..=3), rng.gen_range(1..=2));
        let g = random::form_set(rng, k, dg, lg, 3);
        let h = random::form_set(rng, nh, dh, k, 3);
        match composite_identity(&g, &h) {
            Err(crate::Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
            Ok(m) => {
                let gh = FormSet::new(
                    g.forms()
                        .iter()
                        .map(|f| f.evaluate(h.forms()))
                        .collect::<Result<_>>()?,
                )?;
                let alpha = directrix(&newton_matrix(&h));
                let beta = directrix(&newton_matrix(&gh));
                let want: Vec<u32> = alpha
                    .iter()
                    .zip(beta.iter())
                    .map(|(a, b)| g.degree() * a - b)
                    .collect();
                return Ok((m.exponents().to_vec() != want)
                    .then(|| format!("{} at {}", show(&g), show(&h))));
            }
        }
    })
}

fn random_biform(rng: &mut SuiteRng) -> BiPolynomial {
    let nx = rng.gen_range(2..=4);
    let ny = rng.gen_range(1..=3);
    let (dx, dy) = (rng.gen_range(0..=3), rng.gen_range(0..=2));
    random::biform(rng, nx, ny, dx, dy, 4)
}

/// `p(x^, y) = x^{d_x - beta} psi(p)`; `psi` keeps frames and y-columns.
pub fn bidual(seed: u64, count: usize) -> SuiteReport {
    run("bidual", seed, count, |rng| {
        let p = random_biform(rng);
        bidual_eval(&p)?;
        let (a, b) = (bi_newton(&p)?, bi_newton(&psi(&p))?);
        let mut ca: Vec<_> = a
            .frame
            .iter()
            .cloned()
            .zip(a.y_cols.iter().cloned())
            .collect();
        let mut cb: Vec<_> = b
            .frame
            .iter()
            .cloned()
            .zip(b.y_cols.iter().cloned())
            .collect();
        ca.sort();
        cb.sort();
        Ok((ca != cb).then(|| format!("frame or y-columns of {}", p.render())))
    })
}

fn x_directrix(p: &BiPolynomial) -> Result<Vec<u32>> {
    let cols = bi_newton(p)?.x_cols;
    Ok((0..p.nx())
        .map(|i| cols.iter().map(|c| c[i]).max().unwrap_or(0))
        .collect())
}

/// Witnesses for sums and products; all trivial when `p`, `q` and `p + q`
/// share bidegree and x-directrix.
pub fn psi_laws(seed: u64, count: usize) -> SuiteReport {
    run("psi-laws", seed, count, |rng| {
        let p = random_biform(rng);
        let (nx, ny) = (p.nx(), p.ny());
        let q = if rng.gen_bool(0.5) {
            let (dx, dy) = p.bidegree().expect("bihomogeneous");
            random::biform(rng, nx, ny, dx, dy, 4)
        } else {
            let (dx, dy) = (rng.gen_range(0..=3), rng.gen_range(0..=2));
            random::biform(rng, nx, ny, dx, dy, 4)
        };
        let w = psi_laws_witness(&p, &q)?;
        if !(w.product.0.is_one() && w.product.1.is_one()) {
            return Ok(Some(format!(
                "product witness for {} and {}",
                p.render(),
                q.render()
            )));
        }
        let s = BiPolynomial::new(p.poly() + q.poly(), nx)?;
        let same_shape = p.bidegree() == q.bidegree()
            && !s.is_zero()
            && x_directrix(&p)? == x_directrix(&q)?
            && x_directrix(&p)? == x_directrix(&s)?;
        let trivial = w.sum.0.is_one() && w.sum.1.is_one() && w.sum.2.is_one();
        Ok((same_shape && !trivial)
            .then(|| format!("sum witness for {} and {}", p.render(), q.render())))
    })
}

/// `psi(psi(p)) = p` when no x-variable divides `p`.
pub fn psi_involution(seed: u64, count: usize) -> SuiteReport {
    run("psi-involution", seed, count, |rng| {
        let p = random::strip_x_content(&random_biform(rng));
        Ok((psi(&psi(&p)) != p).then(|| format!("double psi of {}", p.render())))
    })
}

/// Relations of `g` built from Koszul syzygies with random bihomogeneous
/// multipliers, and from Rees ideal generators of small monomial sets.
pub fn push(seed: u64, count: usize) -> SuiteReport {
    run("push", seed, count, |rng| {
        let rees = rng.gen_bool(0.25);
        let (g, relation) = if rees {
            let nvars = rng.gen_range(2..=3);
            let len = rng.gen_range(2..=3);
            let d = rng.gen_range(1..=3);
            let g = random::form_set(rng, nvars, d, len, 1);
            let j = rees_ideal(&g, GbOptions::default())?;
            let Some(r) = j.gens().first().cloned() else {
                return Ok(None);
            };
            let idx = rng.gen_range(0..j.gens().len());
            let r = if rng.gen_bool(0.5) {
                j.gens()[idx].clone()
            } else {
                r
            };
            let (dx, dy) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
            let m = random::biform(rng, nvars, len, dx, dy, 1);
            (g, r.try_mul(m.poly())?)
        } else {
            let nvars = rng.gen_range(2..=4);
            let len = rng.gen_range(2..=4);
            let d = rng.gen_range(1..=3);
            let g = random::form_set(rng, nvars, d, len, 3);
            let n = nvars + len;
            let (a, b) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
            let mut acc = Polynomial::zero(n);
            for _ in 0..rng.gen_range(1..=3) {
                let i = rng.gen_range(0..len);
                let j = rng.gen_range(0..len);
                let y = |k: usize| Polynomial::var(n, nvars + k);
                let koszul =
                    &(&y(i) * &g.forms()[j].embed(n, 0)) - &(&y(j) * &g.forms()[i].embed(n, 0));
                let h = random::biform(rng, nvars, len, a, b, 2);
                acc = &acc + &(&koszul * h.poly());
            }
            (g, acc)
        };
        if relation.is_zero() {
            return Ok(None);
        }
        let p = BiPolynomial::new(relation, g.nvars())?;
        Ok((!push_relation(&p, &g)?)
            .then(|| format!("relation {} of {} not recognized", p.render(), show(&g))))
    })
}

/// The dual set defines the map `g o M`.
pub fn magnus_dual(seed: u64, count: usize) -> SuiteReport {
    run("magnus-dual", seed, count, |rng| loop {
        let nvars = rng.gen_range(2..=4);
        let (d, len) = (rng.gen_range(1..=3), rng.gen_range(2..=4));
        let g = random::form_set(rng, nvars, d, len, 3);
        let f = RationalMap::new(g.clone())?;
        let m = RationalMap::magnus(nvars - 1)?;
        let via_magnus = match compose(&f, &m) {
            Err(crate::Error::Degenerate(_)) => continue,
            r => r?,
        };
        let dual = match reduce_representative(dual_set(&g)) {
            Err(crate::Error::Degenerate(_)) => continue,
            r => r?,
        };
        return Ok((!same_map(&dual, &via_magnus)?).then(|| format!("dual map of {}", show(&g))));
    })
}

/// Monomial Cremona maps commute with `M`, and the dual of the inverse is
/// the inverse of the dual.
pub fn magnus_monomial(seed: u64, count: usize) -> SuiteReport {
    run("magnus-monomial", seed, count, |rng| {
        let nvars = rng.gen_range(3..=5);
        let f = random::monomial_cremona(rng, nvars);
        if !magnus_commute(&f)? {
            return Ok(Some(format!("{} does not commute", show(f.rep()))));
        }
        let inv = monomial_cremona_inverse(&f, DEFAULT_INVERSE_CAP)?;
        let dual_of_inverse = dual_map(&inv)?;
        let inverse_of_dual = monomial_cremona_inverse(&dual_map(&f)?, DEFAULT_INVERSE_CAP)?;
        Ok((!same_map(&dual_of_inverse, &inverse_of_dual)?)
            .then(|| format!("inverse of dual of {}", show(f.rep()))))
    })
}

/// The dual of a de Jonquieres map decomposes as one, agrees with the dual
/// of the assembled set, and the commutation criterion matches brute force.
pub fn jonquieres(seed: u64, count: usize) -> SuiteReport {
    run("jonquieres", seed, count, |rng| {
        let nvars = rng.gen_range(3..=4);
        let j = random::jonquieres(rng, nvars);
        let alpha = assembled_directrix(&j);
        if alpha[nvars - 1] != 1 {
            return Ok(Some(format!("alpha_n of {}", show(j.assembled()))));
        }
        let d = dual_jonquieres(&j)?;
        let direct = reduce_representative(dual_set(j.assembled()))?;
        if !same_map(&d.as_map()?, &direct)? {
            return Ok(Some(format!(
                "dual decomposition of {}",
                show(j.assembled())
            )));
        }
        let r = commute_criterion(&j)?;
        Ok((r.criterion != r.commutes)
            .then(|| format!("criterion {r:?} for {}", show(j.assembled()))))
    })
}
