use ncdual::bigraded::rees_ideal;
use ncdual::groebner::{
    contains_all, groebner_basis, ideal_equal, ideal_quotient, saturate, GbOptions, Ideal, Ring,
    Strategy as Sel, TermOrder,
};
use ncdual::poly::int;
use ncdual::{ExponentVector, FormSet, Polynomial};
use proptest::prelude::*;

const N: usize = 3;

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (-3i64..=3, prop::collection::vec(0..=max_deg, N)),
        1..=max_terms,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            N,
            terms
                .into_iter()
                .map(|(c, e)| (int(c), ExponentVector::new(e))),
        )
        .unwrap()
    })
    .prop_filter("nonzero", |p| !p.is_zero())
}

fn ideal() -> impl Strategy<Value = Ideal> {
    prop::collection::vec(poly(2, 3), 1..=3)
        .prop_map(|gens| Ideal::new(Ring::plain(N), gens).unwrap())
}

fn order() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::DegRevLex),
        Just(TermOrder::DegLex),
        Just(TermOrder::block([0]))
    ]
}

/// Small monomial or binomial form sets without common factors.
fn form_set() -> impl Strategy<Value = FormSet> {
    (1u32..=2, 2usize..=3)
        .prop_flat_map(|(d, len)| {
            let form = prop::collection::vec(
                (prop_oneof![Just(1i64), Just(-1i64), Just(2i64)], 0usize..3),
                1..=2,
            );
            let exps = prop::collection::vec(prop::collection::vec(0usize..N, d as usize), 1..=2);
            prop::collection::vec((form, exps), len)
        })
        .prop_filter_map("form set", |spec| {
            let forms = spec
                .into_iter()
                .map(|(coeffs, exps)| {
                    let terms = coeffs.iter().zip(&exps).map(|((c, _), vars)| {
                        let mut e = vec![0u32; N];
                        for &v in vars {
                            e[v] += 1;
                        }
                        (int(*c), ExponentVector::new(e))
                    });
                    Polynomial::from_terms(N, terms).unwrap()
                })
                .collect::<Vec<_>>();
            if forms.iter().any(|f| f.is_zero()) {
                return None;
            }
            FormSet::new(forms).ok()
        })
}

fn opts(strategy: Sel) -> GbOptions {
    GbOptions {
        strategy,
        ..GbOptions::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_is_unique(i in ideal(), o in order()) {
        let a = groebner_basis(&i, &o, opts(Sel::Normal)).unwrap();
        let b = groebner_basis(&i, &o, opts(Sel::Fifo)).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert!(a.check_criterion());
        prop_assert!(contains_all(&a, i.gens()).unwrap());
    }

    #[test]
    fn normal_form_is_linear(i in ideal(), p in poly(3, 4), q in poly(3, 4), a in -3i64..=3, b in -3i64..=3) {
        let gb = groebner_basis(&i, &TermOrder::DegRevLex, GbOptions::default()).unwrap();
        let combo = &p.scale(&int(a)) + &q.scale(&int(b));
        let lhs = gb.normal_form(&combo).unwrap();
        let rhs = &gb.normal_form(&p).unwrap().scale(&int(a)) + &gb.normal_form(&q).unwrap().scale(&int(b));
        prop_assert_eq!(lhs, rhs);
        let g = &i.gens()[0];
        prop_assert!(gb.normal_form(&(&p * g)).unwrap().is_zero());
    }

    #[test]
    fn quotient_chain(i in ideal(), f in poly(1, 2)) {
        let o = GbOptions::default();
        let q = ideal_quotient(&i, &f, o).unwrap();
        let s = saturate(&i, &f, o).unwrap();
        let gq = groebner_basis(&q, &TermOrder::DegRevLex, o).unwrap();
        let gs = groebner_basis(&s, &TermOrder::DegRevLex, o).unwrap();
        prop_assert!(contains_all(&gq, i.gens()).unwrap());
        prop_assert!(contains_all(&gs, q.gens()).unwrap());
        let fq: Vec<Polynomial> = q.gens().iter().map(|g| g * &f).collect();
        let gi = groebner_basis(&i, &TermOrder::DegRevLex, o).unwrap();
        prop_assert!(contains_all(&gi, &fq).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn rees_ideal_has_no_monomials_and_is_x_saturated(g in form_set()) {
        let o = GbOptions::default();
        let j = rees_ideal(&g, o).unwrap();
        prop_assert!(j.gens().iter().all(|p| !p.is_term()));
        let n = j.nvars();
        for i in 0..N {
            let q = ideal_quotient(&j, &Polynomial::var(n, i), o).unwrap();
            prop_assert!(ideal_equal(&q, &j, o).unwrap());
        }
        let ys: Vec<Polynomial> = (0..g.len()).map(|k| Polynomial::var(n, N + k)).collect();
        let relations: Vec<Polynomial> = (0..g.len())
            .flat_map(|a| (0..g.len()).map(move |b| (a, b)))
            .map(|(a, b)| &(&ys[a] * &g.forms()[b].embed(n, 0)) - &(&ys[b] * &g.forms()[a].embed(n, 0)))
            .collect();
        let gb = groebner_basis(&j, &TermOrder::DegRevLex, o).unwrap();
        prop_assert!(contains_all(&gb, &relations).unwrap());
    }
}
