//! Groebner bases over the rationals and the ideal operations built on them:
//! elimination, quotients by a polynomial, saturation and ideal equality.

mod buchberger;
mod order;

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use buchberger::{buchberger, reduce, satisfies_criterion, OrderedPoly};

pub use buchberger::Strategy;
pub use order::TermOrder;

/// Variable layout `x0..x{nx-1}, y0..y{ny-1}`; a plain ring has `ny = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ring {
    pub nx: usize,
    pub ny: usize,
}

impl Ring {
    pub fn plain(n: usize) -> Self {
        Ring { nx: n, ny: 0 }
    }

    pub fn bigraded(nx: usize, ny: usize) -> Self {
        Ring { nx, ny }
    }

    pub fn nvars(&self) -> usize {
        self.nx + self.ny
    }
}

/// An ideal given by generators. Zero generators are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::AmbientMismatch {
                    expected: ring.nvars(),
                    found: g.nvars(),
                });
            }
        }
        Ok(Ideal {
            ring,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Polynomial> {
        self.gens
    }
}

/// Wall-clock limit checked between S-pair reductions.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Deadline(pub Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn after(d: Duration) -> Self {
        Deadline(Some(Instant::now() + d))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct GbOptions {
    pub strategy: Strategy,
    pub deadline: Deadline,
}

/// A reduced, monic Groebner basis sorted by descending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    nvars: usize,
    ordered: Vec<OrderedPoly>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.nvars() != self.nvars {
            return Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: p.nvars(),
            });
        }
        let refs: Vec<&OrderedPoly> = self.ordered.iter().collect();
        Ok(reduce(&OrderedPoly::from_poly(p, &self.order), &refs, &self.order).to_poly(self.nvars))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// Whether all S-polynomials reduce to zero; always true for output of
    /// [`groebner_basis`].
    pub fn check_criterion(&self) -> bool {
        satisfies_criterion(&self.ordered, &self.order)
    }
}

pub fn groebner_basis(ideal: &Ideal, order: &TermOrder, opts: GbOptions) -> Result<GroebnerBasis> {
    gb_of(ideal.nvars(), &ideal.gens, order, opts)
}

fn gb_of(
    nvars: usize,
    gens: &[Polynomial],
    order: &TermOrder,
    opts: GbOptions,
) -> Result<GroebnerBasis> {
    let ordered = buchberger(gens, order, opts.strategy, opts.deadline.0)?;
    let basis = ordered.iter().map(|p| p.to_poly(nvars)).collect();
    Ok(GroebnerBasis {
        order: order.clone(),
        nvars,
        ordered,
        basis,
    })
}

fn reduced(ring: Ring, gens: &[Polynomial], opts: GbOptions) -> Result<Ideal> {
    let gb = gb_of(ring.nvars(), gens, &TermOrder::DegRevLex, opts)?;
    Ok(Ideal {
        ring,
        gens: gb.basis,
    })
}

/// Normal form of `p` modulo the degrevlex basis of `ideal`.
pub fn normal_form(p: &Polynomial, ideal: &Ideal, opts: GbOptions) -> Result<Polynomial> {
    groebner_basis(ideal, &TermOrder::DegRevLex, opts)?.normal_form(p)
}

/// Generators of `ideal` intersected with the subring free of the `front`
/// variables, still in the ambient ring of `ideal`.
pub fn eliminate(ideal: &Ideal, front: &[usize], opts: GbOptions) -> Result<Vec<Polynomial>> {
    let order = TermOrder::block(front.iter().copied());
    let gb = groebner_basis(ideal, &order, opts)?;
    Ok(gb
        .basis
        .into_iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|t| front.iter().all(|&i| t.expo()[i] == 0))
        })
        .collect())
}

/// Appends one auxiliary variable after the existing ones.
fn with_tag(p: &Polynomial) -> Polynomial {
    p.embed(p.nvars() + 1, 0)
}

fn drop_tag(p: &Polynomial) -> Polynomial {
    let keep: Vec<usize> = (0..p.nvars() - 1).collect();
    p.project(&keep)
        .expect("eliminated polynomial is free of the tag")
}

/// `I : f`, returned as a reduced degrevlex basis.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial, opts: GbOptions) -> Result<Ideal> {
    let n = ideal.nvars();
    if f.nvars() != n {
        return Err(Error::AmbientMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t = Polynomial::var(n + 1, n);
    let ft = with_tag(f);
    let mut gens: Vec<Polynomial> = ideal.gens.iter().map(|g| &t * &with_tag(g)).collect();
    gens.push(&(&Polynomial::one(n + 1) - &t) * &ft);
    let tagged = Ideal {
        ring: Ring::plain(n + 1),
        gens,
    };
    let meet = eliminate(&tagged, &[n], opts)?;
    let quot = meet
        .iter()
        .map(|g| drop_tag(g).exact_div(f))
        .collect::<Result<Vec<_>>>()?;
    reduced(ideal.ring, &quot, opts)
}

/// `I : f^infinity`, returned as a reduced degrevlex basis.
pub fn saturate(ideal: &Ideal, f: &Polynomial, opts: GbOptions) -> Result<Ideal> {
    let n = ideal.nvars();
    if f.nvars() != n {
        return Err(Error::AmbientMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let w = Polynomial::var(n + 1, n);
    let mut gens: Vec<Polynomial> = ideal.gens.iter().map(with_tag).collect();
    gens.push(&(&w * &with_tag(f)) - &Polynomial::one(n + 1));
    let tagged = Ideal {
        ring: Ring::plain(n + 1),
        gens,
    };
    let sat: Vec<Polynomial> = eliminate(&tagged, &[n], opts)?
        .iter()
        .map(drop_tag)
        .collect();
    reduced(ideal.ring, &sat, opts)
}

/// Equality of ideals by mutual reduction.
pub fn ideal_equal(a: &Ideal, b: &Ideal, opts: GbOptions) -> Result<bool> {
    if a.nvars() != b.nvars() {
        return Err(Error::AmbientMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    let ga = groebner_basis(a, &TermOrder::DegRevLex, opts)?;
    let gb = groebner_basis(b, &TermOrder::DegRevLex, opts)?;
    for g in b.gens() {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in a.gens() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every element of `sub` lies in the ideal with basis `gb`.
pub fn contains_all(gb: &GroebnerBasis, sub: &[Polynomial]) -> Result<bool> {
    for g in sub {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_poly;

    fn ideal(nx: usize, ny: usize, gens: &[&str]) -> Ideal {
        Ideal::new(
            Ring::bigraded(nx, ny),
            gens.iter()
                .map(|g| parse_poly(g, nx, ny).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn p(nx: usize, ny: usize, s: &str) -> Polynomial {
        parse_poly(s, nx, ny).unwrap()
    }

    #[test]
    fn unit_ideal() {
        let gb = groebner_basis(
            &ideal(1, 0, &["x0", "x0 - 1"]),
            &TermOrder::DegRevLex,
            GbOptions::default(),
        )
        .unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn quotient_and_saturation_of_a_square() {
        let i = ideal(2, 0, &["x0^2"]);
        let x0 = p(2, 0, "x0");
        let q = ideal_quotient(&i, &x0, GbOptions::default()).unwrap();
        assert_eq!(q.gens(), std::slice::from_ref(&x0));
        let s = saturate(&i, &x0, GbOptions::default()).unwrap();
        assert_eq!(s.gens(), &[Polynomial::one(2)]);
    }

    #[test]
    fn twisted_cubic_basis() {
        // 2x2 minors of [[x0,x1,x2],[x1,x2,x3]]
        let i = ideal(4, 0, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let gb = groebner_basis(&i, &TermOrder::DegRevLex, GbOptions::default()).unwrap();
        assert_eq!(gb.basis().len(), 3);
        assert!(gb.check_criterion());
        let lex = groebner_basis(&i, &TermOrder::DegLex, GbOptions::default()).unwrap();
        assert!(lex.check_criterion());
        assert!(contains_all(&lex, gb.basis()).unwrap());
    }

    #[test]
    fn conic_rees_ideal_by_elimination() {
        // graph of (x0^2, x0*x1, x1^2): variables x0, x1, y0, y1, y2, t
        let n = 6;
        let gens = ["y0 - y3*x0^2", "y1 - y3*x0*x1", "y2 - y3*x1^2"]
            .iter()
            .map(|s| p(2, 4, s))
            .collect();
        let i = Ideal::new(Ring::plain(n), gens).unwrap();
        let elim: Vec<Polynomial> = eliminate(&i, &[5], GbOptions::default())
            .unwrap()
            .iter()
            .map(|g| g.project(&[0, 1, 2, 3, 4]).unwrap())
            .collect();
        let got = Ideal::new(Ring::bigraded(2, 3), elim).unwrap();
        let want = ideal(2, 3, &["x1*y0 - x0*y1", "x1*y1 - x0*y2", "y0*y2 - y1^2"]);
        assert!(ideal_equal(&got, &want, GbOptions::default()).unwrap());
    }

    #[test]
    fn deadline_in_the_past_aborts() {
        let i = ideal(4, 0, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let opts = GbOptions {
            deadline: Deadline(Some(Instant::now() - Duration::from_millis(1))),
            ..Default::default()
        };
        assert_eq!(
            groebner_basis(&i, &TermOrder::DegRevLex, opts).unwrap_err(),
            Error::DeadlineExceeded
        );
    }
}
