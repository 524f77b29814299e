//! Multivariate gcd over the rationals by recursive subresultant
//! remainder sequences.
//!
//! A polynomial is viewed as univariate in a main variable `v` with
//! coefficients in the remaining variables; contents are free of `v`, so
//! each recursion level has one variable fewer.

use super::{ExponentVector, Polynomial, Term};

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
///
/// Panics if the ambient variable counts differ.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert_eq!(
        a.nvars(),
        b.nvars(),
        "gcd of polynomials in different rings"
    );
    gcd_rec(a, b).monic()
}

/// Monic gcd of a family; the gcd of an empty family is zero.
pub fn gcd_all<'a, I>(nvars: usize, polys: I) -> Polynomial
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut acc = Polynomial::zero(nvars);
    for p in polys {
        acc = gcd(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn gcd_rec(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let n = a.nvars();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(n);
    }
    let (ma, a1) = a.monomial_content().expect("nonzero");
    let (mb, b1) = b.monomial_content().expect("nonzero");
    let m = ma.exponents().gcd(mb.exponents());
    let mono = Polynomial::monomial(super::int(1), m);
    if a1.is_constant() || b1.is_constant() {
        return mono;
    }
    if let Some(v) = (0..n).find(|&i| (a1.degree_in(i) > 0) != (b1.degree_in(i) > 0)) {
        let g = if a1.degree_in(v) > 0 {
            gcd_rec(&content_in(&a1, v), &b1)
        } else {
            gcd_rec(&a1, &content_in(&b1, v))
        };
        return &mono * &g;
    }
    let v = (0..n)
        .filter(|&i| a1.degree_in(i) > 0)
        .min_by_key(|&i| a1.degree_in(i).max(b1.degree_in(i)))
        .expect("nonconstant polynomial has a variable");
    let ca = content_in(&a1, v);
    let cb = content_in(&b1, v);
    let c = gcd_rec(&ca, &cb);
    let pa = a1.exact_div(&ca).expect("content divides");
    let pb = b1.exact_div(&cb).expect("content divides");
    &(&mono * &c) * &subresultant_gcd(pa, pb, v)
}

/// Coefficients of `p` as a polynomial in `v`, indexed by the power of `v`.
fn coefficients_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let deg = p.degree_in(v) as usize;
    let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); deg + 1];
    for t in p.terms() {
        let k = t.expo[v] as usize;
        let mut e = t.expo.to_vec();
        e[v] = 0;
        buckets[k].push(Term {
            coeff: t.coeff.clone(),
            expo: ExponentVector::new(e),
        });
    }
    buckets
        .into_iter()
        .map(|ts| Polynomial::normalized(p.nvars(), ts))
        .collect()
}

fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = coefficients_in(p, v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| c.len());
    let mut acc = Polynomial::zero(p.nvars());
    for c in &coeffs {
        acc = gcd_rec(&acc, c);
        if acc.is_constant() {
            return Polynomial::one(p.nvars());
        }
    }
    acc.monic()
}

fn primitive_part_in(p: &Polynomial, v: usize) -> Polynomial {
    let c = content_in(p, v);
    p.exact_div(&c).expect("content divides").monic()
}

fn leading_coeff_in(p: &Polynomial, v: usize) -> Polynomial {
    coefficients_in(p, v).pop().expect("nonzero polynomial")
}

/// `lc(b)^(deg a - deg b + 1) * a` reduced modulo `b` as polynomials in `v`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lb = leading_coeff_in(b, v);
    let mut r = a.clone();
    let mut steps = a.degree_in(v) - db + 1;
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = leading_coeff_in(&r, v);
        let shift = ExponentVector::unit(r.nvars(), v).scaled(dr - db);
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
        steps -= 1;
    }
    &r * &lb.pow(steps)
}

/// Gcd of two polynomials primitive in `v`, by the subresultant remainder
/// sequence.
fn subresultant_gcd(a: Polynomial, b: Polynomial, v: usize) -> Polynomial {
    let n = a.nvars();
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    if b.degree_in(v) == 0 {
        return Polynomial::one(n);
    }
    let mut g = Polynomial::one(n);
    let mut h = Polynomial::one(n);
    loop {
        let delta = a.degree_in(v) - b.degree_in(v);
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return primitive_part_in(&b, v);
        }
        if r.degree_in(v) == 0 {
            return Polynomial::one(n);
        }
        let scale = &g * &h.pow(delta);
        a = b;
        b = r.exact_div(&scale).expect("subresultant division is exact");
        g = leading_coeff_in(&a, v);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn common_linear_factor() {
        let (x0, x1, x2) = (x(3, 0), x(3, 1), x(3, 2));
        let c = &(&x0 + &x1) + &x2;
        let a = &c * &(&x0 - &x2);
        let b = &c * &(&(&x1 * &x1) + &x0.scale(&int(3)));
        assert_eq!(gcd(&a, &b), c);
    }

    #[test]
    fn coprime_forms() {
        let (x0, x1, x2) = (x(3, 0), x(3, 1), x(3, 2));
        let q = x2.clone();
        let f = &(&x0 * &x2) + &(&x1 * &x1);
        assert!(gcd(&q, &f).is_one());
        assert_eq!(gcd(&x2, &(&x0 * &x2)), x2);
    }

    #[test]
    fn monomial_gcd() {
        let (x0, x1, x2) = (x(3, 0), x(3, 1), x(3, 2));
        let a = &(&x0 * &x0) * &(&x1 * &x2);
        let b = &(&x0 * &x1) * &(&x1 * &x2);
        let c = &(&x0 * &x1) * &(&x2 * &x2);
        assert_eq!(gcd_all(3, [&a, &b, &c]), &(&x0 * &x1) * &x2);
    }

    #[test]
    fn gcd_with_zero_and_constants() {
        let p = &x(2, 0) + &x(2, 1);
        assert_eq!(gcd(&p, &Polynomial::zero(2)), p);
        assert!(gcd(&p, &Polynomial::constant(2, int(5))).is_one());
        assert!(gcd_all(2, std::iter::empty()).is_zero());
    }
}
