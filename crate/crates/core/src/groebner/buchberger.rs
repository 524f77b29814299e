//! Buchberger's algorithm with the Gebauer-Moeller pair update.
//!
//! Polynomials are held in [`OrderedPoly`], whose terms are sorted by the
//! active term order rather than the canonical one.

use std::cmp::Ordering;
use std::time::Instant;

use num_traits::{One, Zero};

use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::poly::{Coeff, ExponentVector, Polynomial};

#[derive(Clone, Debug)]
pub(crate) struct OrderedTerm {
    pub(crate) expo: Vec<u32>,
    pub(crate) coeff: Coeff,
}

#[derive(Clone, Debug)]
pub(crate) struct OrderedPoly {
    pub(crate) terms: Vec<OrderedTerm>,
}

impl OrderedPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: &TermOrder) -> Self {
        let mut terms: Vec<OrderedTerm> = p
            .terms()
            .iter()
            .map(|t| OrderedTerm {
                expo: t.expo().to_vec(),
                coeff: t.coeff().clone(),
            })
            .collect();
        terms.sort_by(|a, b| order.compare(&b.expo, &a.expo));
        OrderedPoly { terms }
    }

    pub(crate) fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|t| (t.coeff.clone(), ExponentVector::new(t.expo.clone()))),
        )
        .expect("terms share the ambient")
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &[u32] {
        &self.terms[0].expo
    }

    fn monic(mut self) -> Self {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = lc.recip();
                for t in &mut self.terms {
                    t.coeff *= &inv;
                }
            }
        }
        self
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// `a - c * x^m * b`, both sorted by `order`.
fn sub_scaled(
    a: &[OrderedTerm],
    b: &[OrderedTerm],
    c: &Coeff,
    m: &[u32],
    order: &TermOrder,
) -> Vec<OrderedTerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let shifted =
        |t: &OrderedTerm| -> Vec<u32> { t.expo.iter().zip(m).map(|(x, y)| x + y).collect() };
    let (mut i, mut j) = (0, 0);
    let mut bj = b.first().map(shifted);
    while i < a.len() {
        let Some(be) = &bj else { break };
        match order.compare(&a[i].expo, be) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(OrderedTerm {
                    expo: be.clone(),
                    coeff: -(c * &b[j].coeff),
                });
                j += 1;
                bj = b.get(j).map(shifted);
            }
            Ordering::Equal => {
                let coeff = &a[i].coeff - &(c * &b[j].coeff);
                if !coeff.is_zero() {
                    out.push(OrderedTerm {
                        expo: be.clone(),
                        coeff,
                    });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(shifted);
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    while let Some(be) = bj {
        out.push(OrderedTerm {
            expo: be,
            coeff: -(c * &b[j].coeff),
        });
        j += 1;
        bj = b.get(j).map(shifted);
    }
    out
}

/// Full reduction of `p` modulo `basis`.
pub(crate) fn reduce(p: &OrderedPoly, basis: &[&OrderedPoly], order: &TermOrder) -> OrderedPoly {
    let mut rem = Vec::new();
    let mut cur = p.terms.clone();
    let mut start = 0;
    while start < cur.len() {
        let lt = &cur[start];
        match basis.iter().find(|g| divides(g.lm(), &lt.expo)) {
            Some(g) => {
                let m: Vec<u32> = lt.expo.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
                let c = &lt.coeff / &g.terms[0].coeff;
                cur = sub_scaled(&cur[start + 1..], &g.terms[1..], &c, &m, order);
                start = 0;
            }
            None => {
                rem.push(lt.clone());
                start += 1;
            }
        }
    }
    OrderedPoly { terms: rem }
}

fn s_polynomial(f: &OrderedPoly, g: &OrderedPoly, order: &TermOrder) -> OrderedPoly {
    let l = lcm(f.lm(), g.lm());
    let mf: Vec<u32> = l.iter().zip(f.lm()).map(|(a, b)| a - b).collect();
    let mg: Vec<u32> = l.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
    // f and g are monic: S = x^mf * tail(f) - x^mg * tail(g)
    let ft = sub_scaled(&[], &f.terms[1..], &-Coeff::one(), &mf, order);
    let terms = sub_scaled(&ft, &g.terms[1..], &Coeff::one(), &mg, order);
    OrderedPoly { terms }
}

/// Pair-selection strategy. Any strategy yields the same reduced basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    /// Smallest lcm degree first, ties broken by the term order.
    #[default]
    Normal,
    /// Pairs in creation order.
    Fifo,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
    deg: u32,
    serial: usize,
}

struct Engine<'a> {
    order: &'a TermOrder,
    polys: Vec<OrderedPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    serial: usize,
}

impl Engine<'_> {
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().to_vec();
        let mut candidates: Vec<(usize, Vec<u32>)> = self
            .active
            .iter()
            .map(|&g| (g, lcm(&lm_h, self.polys[g].lm())))
            .collect();
        let mut kept: Vec<(usize, Vec<u32>)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let blocked = candidates
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| divides(l2, &l1));
            if coprime(&lm_h, self.polys[g1].lm()) || !blocked {
                kept.push((g1, l1));
            }
        }
        kept.retain(|(g, _)| !coprime(&lm_h, self.polys[*g].lm()));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !divides(&lm_h, &p.lcm)
                || lcm(polys[p.i].lm(), &lm_h) == p.lcm
                || lcm(polys[p.j].lm(), &lm_h) == p.lcm
        });
        for (g, l) in kept.into_iter().rev() {
            let deg = l.iter().sum();
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm: l,
                deg,
                serial: self.serial,
            });
            self.serial += 1;
        }
        self.active.retain(|&g| !divides(&lm_h, polys[g].lm()));
        self.active.push(h);
    }

    fn select(&mut self, strategy: Strategy) -> Pair {
        let order = self.order;
        let idx = match strategy {
            Strategy::Fifo => (0..self.pairs.len()).min_by_key(|&k| self.pairs[k].serial),
            Strategy::Normal => (0..self.pairs.len()).min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                pa.deg
                    .cmp(&pb.deg)
                    .then_with(|| order.compare(&pa.lcm, &pb.lcm))
                    .then_with(|| pa.serial.cmp(&pb.serial))
            }),
        }
        .expect("nonempty pair set");
        self.pairs.swap_remove(idx)
    }

    fn active_polys(&self) -> Vec<&OrderedPoly> {
        self.active.iter().map(|&k| &self.polys[k]).collect()
    }

    fn insert(&mut self, p: OrderedPoly) {
        self.polys.push(p.monic());
        let h = self.polys.len() - 1;
        self.update(h);
    }
}

/// Reduced, monic Groebner basis sorted by descending leading monomial.
pub(crate) fn buchberger(
    gens: &[Polynomial],
    order: &TermOrder,
    strategy: Strategy,
    deadline: Option<Instant>,
) -> Result<Vec<OrderedPoly>> {
    let mut eng = Engine {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        serial: 0,
    };
    for g in gens {
        let p = OrderedPoly::from_poly(g, order);
        let r = reduce(&p, &eng.active_polys(), order);
        if !r.is_zero() {
            eng.insert(r);
        }
    }
    while !eng.pairs.is_empty() {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::DeadlineExceeded);
        }
        let pair = eng.select(strategy);
        let s = s_polynomial(&eng.polys[pair.i], &eng.polys[pair.j], order);
        let h = reduce(&s, &eng.active_polys(), order);
        if !h.is_zero() {
            eng.insert(h);
        }
    }

    let active: Vec<OrderedPoly> = eng.active.iter().map(|&k| eng.polys[k].clone()).collect();
    let mut reduced: Vec<OrderedPoly> = (0..active.len())
        .map(|k| {
            let others: Vec<&OrderedPoly> = active
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, p)| p)
                .collect();
            let lead = OrderedPoly {
                terms: vec![active[k].terms[0].clone()],
            };
            let tail = OrderedPoly {
                terms: active[k].terms[1..].to_vec(),
            };
            let mut terms = lead.terms;
            terms.extend(reduce(&tail, &others, order).terms);
            OrderedPoly { terms }
        })
        .collect();
    reduced.sort_by(|a, b| order.compare(b.lm(), a.lm()));
    Ok(reduced)
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub(crate) fn satisfies_criterion(basis: &[OrderedPoly], order: &TermOrder) -> bool {
    let refs: Vec<&OrderedPoly> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i].clone().monic(), &basis[j].clone().monic(), order);
            if !reduce(&s, &refs, order).is_zero() {
                return false;
            }
        }
    }
    true
}
