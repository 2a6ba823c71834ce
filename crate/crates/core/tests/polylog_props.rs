use num_rational::BigRational;
use proptest::prelude::*;
use reglab_core::polylog::{lmod2, ltwo, Arg};
use reglab_core::{Padic, PadicConfig};

const N: i64 = 20;

fn cfg(branch: i64) -> PadicConfig {
    PadicConfig::new(7, N).unwrap().with_branch(BigRational::from_integer(branch.into())).unwrap()
}

/// A point of positive valuation with random digits.
fn small(c: PadicConfig) -> impl Strategy<Value = Padic> {
    (1i64..=3, 1u32..7, prop::collection::vec(0u32..7, 40)).prop_map(move |(v, d0, mut ds)| {
        ds.insert(0, d0);
        Padic::from_digits(7, v, &ds, c.working_precision()).unwrap()
    })
}

fn lm(z: &Padic, c: &PadicConfig) -> Padic {
    lmod2(&Arg::Finite(z.clone()), c).unwrap().value
}

fn ok(x: Padic, slack: i64) -> bool {
    x.valuation_bound() >= N - slack
}

fn branches() -> impl Strategy<Value = i64> {
    prop_oneof![Just(0i64), Just(3), Just(-5)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lmod_inversion_and_reflection(b in branches(), seed in small(cfg(0))) {
        let c = cfg(b);
        let one = c.ring().one();
        for z in [seed.clone(), one.clone() - &seed, seed.inv().unwrap()] {
            prop_assert!(ok(lm(&z, &c) + lm(&z.inv().unwrap(), &c), 5));
            prop_assert!(ok(lm(&z, &c) + lm(&(one.clone() - &z), &c), 5));
        }
    }

    #[test]
    fn lmod_distribution(b in branches(), z in small(cfg(0))) {
        let c = cfg(b);
        let two = lm(&(z.clone() * &z), &c) - (lm(&z, &c) + lm(&-z.clone(), &c)).mul_int(2);
        prop_assert!(ok(two, 5));
        let zeta = c.ring().int(2).teichmuller().unwrap();
        let mut s = c.ring().zero();
        let mut w = z.clone();
        for _ in 0..3 {
            s = s + lm(&w, &c);
            w = w * &zeta;
        }
        prop_assert!(ok(s.mul_int(3) - lm(&z.pow(3), &c), 5));
    }

    #[test]
    fn lmod_five_term(b in branches(), x in small(cfg(0)), y in small(cfg(0))) {
        let c = cfg(b);
        let one = c.ring().one();
        let d = one.clone() - x.clone() * &y;
        let di = d.inv().unwrap();
        let s = lm(&x, &c)
            + lm(&y, &c)
            + lm(&((one.clone() - &x) * &di), &c)
            + lm(&d, &c)
            + lm(&((one.clone() - &y) * &di), &c);
        prop_assert!(ok(s, 5));
    }

    #[test]
    fn ltwo_inversion(b in branches(), seed in small(cfg(0))) {
        let c = cfg(b);
        let one = c.ring().one();
        for z in [seed.clone(), one - &seed, seed.inv().unwrap()] {
            let l = c.log(&z).unwrap();
            let lhs = ltwo(&Arg::Finite(z.clone()), &c).unwrap().value + ltwo(&Arg::Finite(z.inv().unwrap()), &c).unwrap().value;
            prop_assert!(ok(lhs - l.clone() * l * c.ring().frac(1, 2), 5));
        }
    }
}
