use proptest::prelude::*;
use reglab_core::index::{double_index, pint, triple_index, triple_index_simple_pole, Overrides, TripleData};
use reglab_core::series::{LaurentSeries, LogLaurent};
use reglab_core::{Padic, Ring};

const N: i64 = 20;

fn ring() -> Ring {
    Ring::new(7, N + 10)
}

fn close(a: &Padic, b: &Padic, slack: i64) -> bool {
    (a.clone() - b.clone()).valuation_bound() >= N - slack
}

fn coeff() -> impl Strategy<Value = (i64, i64)> {
    (-30i64..30, prop_oneof![Just(1i64), Just(2), Just(3), Just(5)])
}

/// `α log z + Σ a_n z^n` with a Laurent polynomial part.
fn alog(min_lo: i64) -> impl Strategy<Value = LogLaurent> {
    (-3i64..=3, min_lo..=1, prop::collection::vec(coeff(), 1..6)).prop_map(|(a, lo, cs)| {
        let r = ring();
        let s = LaurentSeries::new(r, lo, cs.iter().map(|&(n, d)| r.frac(n, d)).collect(), true);
        LogLaurent::log_z(r).scale(&r.int(a)).add(&LogLaurent::from_series(s))
    })
}

fn constant() -> impl Strategy<Value = Padic> {
    coeff().prop_map(|(n, d)| ring().frac(n, d))
}

fn konst(c: &Padic) -> LogLaurent {
    LogLaurent::constant(ring(), c.clone())
}

fn shifted(f: LogLaurent, g: LogLaurent, h: LogLaurent, c: [Padic; 3]) -> TripleData {
    let base = TripleData::canonical(f.clone(), g.clone(), h.clone()).unwrap();
    TripleData::new(
        f,
        g,
        h,
        Overrides {
            i_gdh: Some(base.i_gdh.add(&konst(&c[0]))),
            i_fdh: Some(base.i_fdh.add(&konst(&c[1]))),
            i_fdg: Some(base.i_fdg.add(&konst(&c[2]))),
        },
    )
    .unwrap()
}

fn consts() -> impl Strategy<Value = [Padic; 3]> {
    [constant(), constant(), constant()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetric_in_first_two(f in alog(-3), g in alog(-3), h in alog(-3), c in consts()) {
        let d = shifted(f, g, h, c);
        let a = triple_index(&d).unwrap();
        let b = triple_index(&d.swap_fg()).unwrap();
        prop_assert!(close(&a, &b, 2));
    }

    #[test]
    fn cyclic_identity(f in alog(-3), g in alog(-3), h in alog(-3), c in consts()) {
        let d = shifted(f, g, h, c);
        let s = triple_index(&d).unwrap()
            + triple_index(&d.swap_gh()).unwrap()
            + triple_index(&d.swap_fg().swap_gh()).unwrap();
        prop_assert!(s.valuation_bound() >= N - 2);
    }

    #[test]
    fn linear_in_first(f1 in alog(-3), f2 in alog(-3), g in alog(-3), h in alog(-3), c1 in consts(), c2 in consts()) {
        let d1 = shifted(f1.clone(), g.clone(), h.clone(), c1.clone());
        let mut c2 = c2;
        c2[0] = c1[0].clone();
        let d2 = shifted(f2.clone(), g.clone(), h.clone(), c2);
        let sum = TripleData::new(
            f1.add(&f2),
            g,
            h,
            Overrides {
                i_gdh: Some(d1.i_gdh.clone()),
                i_fdh: Some(d1.i_fdh.add(&d2.i_fdh)),
                i_fdg: Some(d1.i_fdg.add(&d2.i_fdg)),
            },
        )
        .unwrap();
        let lhs = triple_index(&sum).unwrap();
        let rhs = triple_index(&d1).unwrap() + triple_index(&d2).unwrap();
        prop_assert!(close(&lhs, &rhs, 2));
    }

    #[test]
    fn linear_in_third(f in alog(-3), g in alog(-3), h1 in alog(-3), h2 in alog(-3), c1 in consts(), c2 in consts()) {
        let d1 = shifted(f.clone(), g.clone(), h1.clone(), c1.clone());
        let mut c2 = c2;
        c2[2] = c1[2].clone();
        let d2 = shifted(f.clone(), g.clone(), h2.clone(), c2);
        let sum = TripleData::new(
            f,
            g,
            h1.add(&h2),
            Overrides {
                i_gdh: Some(d1.i_gdh.add(&d2.i_gdh)),
                i_fdh: Some(d1.i_fdh.add(&d2.i_fdh)),
                i_fdg: Some(d1.i_fdg.clone()),
            },
        )
        .unwrap();
        let lhs = triple_index(&sum).unwrap();
        let rhs = triple_index(&d1).unwrap() + triple_index(&d2).unwrap();
        prop_assert!(close(&lhs, &rhs, 2));
    }

    #[test]
    fn reduces_to_double_index(f in alog(-3), g in alog(-3), h in alog(-3), c in consts()) {
        let (_, gm) = g.split_alog_prime().unwrap();
        let g = LogLaurent::from_series(gm);
        let d = shifted(f, g, h, c);
        let a = triple_index(&d).unwrap();
        let b = double_index(&d.f, &d.i_gdh).unwrap();
        prop_assert!(close(&a, &b, 2));
    }

    #[test]
    fn change_of_constants(f in alog(-3), g in alog(-3), h in alog(-3), c in consts(), k in constant()) {
        let d = shifted(f, g, h, c);
        let base = triple_index(&d).unwrap();
        let mut e = d.clone();
        e.i_gdh = e.i_gdh.add(&konst(&k));
        let rf = d.f.differential().residue().unwrap();
        prop_assert!(close(&triple_index(&e).unwrap(), &(base.clone() - k.clone() * rf), 2));
        let mut e = d.clone();
        e.i_fdh = e.i_fdh.add(&konst(&k));
        let rg = d.g.differential().residue().unwrap();
        prop_assert!(close(&triple_index(&e).unwrap(), &(base.clone() - k.clone() * rg), 2));
        let mut e = d.clone();
        e.i_fdg = e.i_fdg.add(&konst(&k));
        prop_assert!(close(&triple_index(&e).unwrap(), &base, 2));
    }

    #[test]
    fn simple_pole_formula(f in alog(0), g in alog(0), h in alog(0), c in consts()) {
        let d = shifted(f, g, h, c);
        let a = triple_index(&d).unwrap();
        let b = triple_index_simple_pole(&d.f, &d.g, &d.h, &d.i_fdh, &d.i_gdh).unwrap();
        prop_assert!(close(&a, &b, 2));
    }

    #[test]
    fn pint_is_an_antiderivative(r in alog(-3), s in alog(-3)) {
        let i = pint(&r, &s).unwrap();
        prop_assert!(i.constant_term().unwrap().is_zero());
        let lhs = i.differential();
        let rhs = reglab_core::series::LogForm::product(&r, &s);
        prop_assert!(lhs.coef.discrepancy(&rhs.coef) >= N);
    }
}
