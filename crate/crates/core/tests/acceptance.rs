use std::time::{Duration, Instant};

use ncdual::bigraded::{psi, rees_ideal, BiPolynomial};
use ncdual::groebner::{
    groebner_basis, ideal_equal, ideal_quotient, saturate, GbOptions, Ideal, Ring, TermOrder,
};
use ncdual::io::{parse_form, parse_poly};
use ncdual::jonquieres::{commute_criterion, make_jonquieres, CommuteReport};
use ncdual::maps::{inversion_duality_check, inversion_factor, RationalMap};
use ncdual::newton::{directrix, dual_set, newton_matrix};
use ncdual::suites::run_suite;
use ncdual::{ExponentVector, FormSet, Polynomial};

const SEED: u64 = 20240611;

fn report(n: u32, what: &str, ok: bool, elapsed: Duration, limit: Option<Duration>) {
    let in_time = limit.is_none_or(|l| elapsed < l);
    let verdict = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "criterion {n:>2} [{verdict}] {what} ({:.3}s)",
        elapsed.as_secs_f64()
    );
    assert!(ok, "criterion {n} failed: {what}");
    assert!(in_time, "criterion {n} exceeded {limit:?}: {elapsed:?}");
}

fn forms(nvars: usize, src: &[&str]) -> FormSet {
    FormSet::new(src.iter().map(|s| parse_form(s, nvars).unwrap()).collect()).unwrap()
}

fn g() -> FormSet {
    forms(4, &["x1^2*x3^3", "x0*x1^3*x2", "x1*x2^3*x3", "x2^3*x3^2"])
}

fn g_hat() -> FormSet {
    forms(
        4,
        &["x0*x1*x2^3", "x2^2*x3^3", "x0*x1^2*x3^2", "x0*x1^3*x3"],
    )
}

const J_G: [&str; 7] = [
    "x3*y2 - x1*y3",
    "x2^3*y0 - x1^2*x3*y3",
    "x0*x1*x2*y0 - x3^3*y1",
    "x2^2*x3*y1 - x0*x1^2*y2",
    "x0*x1*y2^2 - x2^2*y1*y3",
    "x0*x2*y0*y2 - x3^2*y1*y3",
    "x0^2*y0*y2^4 - x2*x3*y1^2*y3^3",
];

const J_G_HAT: [&str; 8] = [
    "x1*y2 - x3*y3",
    "x0*x1^2*y1 - x2^2*x3*y2",
    "x1^2*x3*y0 - x2^3*y3",
    "x3^3*y0 - x0*x1*x2*y1",
    "x1*x3^2*y0 - x2^3*y2",
    "x2^2*y2^2 - x0*x1*y1*y3",
    "x3^2*y0*y2 - x0*x2*y1*y3",
    "x2*x3*y0*y2^4 - x0^2*y1^2*y3^3",
];

fn bi(s: &str) -> Polynomial {
    parse_poly(s, 4, 4).unwrap()
}

fn listed(gens: &[&str]) -> Ideal {
    Ideal::new(Ring::bigraded(4, 4), gens.iter().map(|s| bi(s)).collect()).unwrap()
}

fn psi_all(gens: &[&str]) -> Ideal {
    let images = gens
        .iter()
        .map(|s| psi(&BiPolynomial::new(bi(s), 4).unwrap()).into_poly())
        .collect();
    Ideal::new(Ring::bigraded(4, 4), images).unwrap()
}

fn opts() -> GbOptions {
    GbOptions::default()
}

#[test]
fn criterion_01_magnus_reproduction() {
    let t = Instant::now();
    let mut ok = true;
    for n in 1..=5 {
        let x = FormSet::variables(n + 1);
        let expected: Vec<Polynomial> = (0..=n)
            .map(|i| {
                let mut p = Polynomial::one(n + 1);
                for j in (0..=n).filter(|&j| j != i) {
                    p = &p * &Polynomial::var(n + 1, j);
                }
                p
            })
            .collect();
        ok &= dual_set(&x).forms() == expected.as_slice();
        ok &= directrix(&newton_matrix(&x)).as_exponents() == &ExponentVector::new(vec![1; n + 1]);
    }
    report(
        1,
        "dual of the variables is the Magnus involution for n = 1..5",
        ok,
        t.elapsed(),
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_02_dual_of_four_monomials() {
    let t = Instant::now();
    let ok = dual_set(&g()) == g_hat();
    report(
        2,
        "dual set of the four monomials",
        ok,
        t.elapsed(),
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_03_rees_ideal_of_g() {
    let t = Instant::now();
    let j = rees_ideal(&g(), opts()).unwrap();
    let ok = ideal_equal(&j, &listed(&J_G), opts()).unwrap();
    report(
        3,
        "Rees ideal of g equals the seven listed biforms",
        ok,
        t.elapsed(),
        Some(Duration::from_secs(120)),
    );
}

#[test]
fn criterion_04_rees_ideal_of_dual() {
    let t = Instant::now();
    let j = rees_ideal(&g_hat(), opts()).unwrap();
    let ok = ideal_equal(&j, &listed(&J_G_HAT), opts()).unwrap();
    report(
        4,
        "Rees ideal of the dual equals the eight listed biforms",
        ok,
        t.elapsed(),
        Some(Duration::from_secs(120)),
    );
}

#[test]
fn criterion_05_psi_images_in_dual_ideal() {
    let t = Instant::now();
    let gb = groebner_basis(&listed(&J_G_HAT), &TermOrder::DegRevLex, opts()).unwrap();
    let mut ok = psi_all(&J_G)
        .gens()
        .iter()
        .all(|p| gb.normal_form(p).unwrap().is_zero());
    let computed = rees_ideal(&g(), opts()).unwrap();
    ok &= computed.gens().iter().all(|p| {
        gb.normal_form(&psi(&BiPolynomial::new(p.clone(), 4).unwrap()).into_poly())
            .unwrap()
            .is_zero()
    });
    report(
        5,
        "psi of every generator reduces to zero modulo the dual ideal",
        ok,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_06_quotient_and_saturation() {
    let t = Instant::now();
    let tilde = psi_all(&J_G);
    let hat = listed(&J_G_HAT);
    let m = bi("x1*x3");
    let quotient_ok =
        ideal_equal(&ideal_quotient(&tilde, &m, opts()).unwrap(), &hat, opts()).unwrap();
    let sat_ok = ideal_equal(
        &saturate(&tilde, &bi("x0*x1*x2*x3"), opts()).unwrap(),
        &hat,
        opts(),
    )
    .unwrap();
    let gb = groebner_basis(&tilde, &TermOrder::DegRevLex, opts()).unwrap();
    let member = &m * &bi("x1*x3^2*y0 - x2^3*y2");
    let member_ok = gb.normal_form(&member).unwrap().is_zero();
    let exceptional_outside = !gb
        .normal_form(&bi("x1*x3^2*y0 - x2^3*y2"))
        .unwrap()
        .is_zero();
    let computed = rees_ideal(&g(), opts()).unwrap();
    let images = computed
        .gens()
        .iter()
        .map(|p| psi(&BiPolynomial::new(p.clone(), 4).unwrap()).into_poly())
        .collect();
    let tilde_gb = Ideal::new(Ring::bigraded(4, 4), images).unwrap();
    let gb_reading_ok = ideal_equal(
        &ideal_quotient(&tilde_gb, &m, opts()).unwrap(),
        &hat,
        opts(),
    )
    .unwrap();
    report(
        6,
        "quotient by x1*x3 and saturation by x0*x1*x2*x3 recover the dual ideal",
        quotient_ok && sat_ok && member_ok && exceptional_outside && gb_reading_ok,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_07_combination_identity() {
    let t = Instant::now();
    let lhs = bi("x2^3*y0 - x1*x3^2*y2");
    let rhs = &bi("x2^3*y0 - x1^2*x3*y3") - &(&bi("x1*x3") * &bi("x3*y2 - x1*y3"));
    let gb = groebner_basis(&listed(&J_G), &TermOrder::DegRevLex, opts()).unwrap();
    let ok = lhs == rhs
        && gb.normal_form(&lhs).unwrap().is_zero()
        && gb.normal_form(&rhs).unwrap().is_zero();
    let image_ok =
        psi(&BiPolynomial::new(lhs, 4).unwrap()).into_poly() == bi("x1*x3^2*y0 - x2^3*y2");
    report(
        7,
        "combination of two generators, and its psi image",
        ok && image_ok,
        t.elapsed(),
        None,
    );
}

fn suites(names: &[(&str, usize)]) -> (bool, Vec<String>) {
    let mut ok = true;
    let mut lines = Vec::new();
    for (name, count) in names {
        let r = run_suite(name, SEED, *count).unwrap();
        lines.push(format!(
            "{name}: {} cases, {} failures",
            r.cases,
            r.failures.len()
        ));
        for f in &r.failures {
            lines.push(format!("  {f}"));
        }
        ok &= r.passed();
    }
    (ok, lines)
}

#[test]
fn criterion_08_property_suites() {
    let t = Instant::now();
    let (ok, lines) = suites(&[
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
    ]);
    for l in &lines {
        println!("    {l}");
    }
    report(
        8,
        "seeded property suites",
        ok,
        t.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_09_composition_with_magnus() {
    let t = Instant::now();
    let (mut ok, lines) = suites(&[("magnus-dual", 100), ("magnus-monomial", 50)]);
    for l in &lines {
        println!("    {l}");
    }
    let m = RationalMap::magnus(3).unwrap();
    ok &= inversion_duality_check(&m, &m).unwrap();
    let f = RationalMap::new(forms(3, &["x0^2", "x0*x1", "x1*x2"])).unwrap();
    let inv = RationalMap::new(forms(3, &["x0*x1", "x1^2", "x0*x2"])).unwrap();
    ok &= inversion_factor(&f, &inv).unwrap() == parse_form("x0^2*x1", 3).unwrap();
    ok &= inversion_duality_check(&f, &inv).unwrap();
    report(
        9,
        "dual map, monomial commutation, inversion duality",
        ok,
        t.elapsed(),
        None,
    );
}

#[test]
fn criterion_10_de_jonquieres() {
    let t = Instant::now();
    let (mut ok, lines) = suites(&[("jonquieres", 50)]);
    for l in &lines {
        println!("    {l}");
    }
    let p = |s: &str| parse_poly(s, 3, 0).unwrap();
    let support = |src: &[&str]| RationalMap::new(forms(2, src)).unwrap();
    let cases = [
        (support(&["x1", "x0"]), p("x2"), p("x0*x1"), true),
        (support(&["x0", "x1"]), p("x2"), p("x0*x2 + x1^2"), false),
        (
            support(&["x0", "x1"]),
            p("x0^2 + x1^2 + x0*x2"),
            p("x1^2*x2 + x0^2*x2 + x0*x1^2"),
            true,
        ),
    ];
    for (s, q, f, expected) in cases {
        let j = make_jonquieres(&s, &q, &f).unwrap();
        ok &= commute_criterion(&j).unwrap()
            == CommuteReport {
                criterion: expected,
                commutes: expected,
            };
    }
    report(
        10,
        "de Jonquieres closure and commutation criterion",
        ok,
        t.elapsed(),
        None,
    );
}
