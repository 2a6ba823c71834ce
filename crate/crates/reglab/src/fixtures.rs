//! Seeded random fixtures.
//!
//! Every fixture is a deterministic function of the seed, so failures can be
//! rederived from the seed printed in a report.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reglab_core::p1geom::{Factored, Point, RatFn, WideOpen, Q};
use reglab_core::regulator::{Omega, SymbolElement};
use reglab_core::series::{LaurentSeries, LogLaurent};
use reglab_core::{Padic, PadicConfig, Ring};

pub type FixtureRng = ChaCha8Rng;

pub fn rng(seed: u64) -> FixtureRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn qq(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A small rational with denominator prime to the small primes used in tests.
pub fn small_rational(r: &mut FixtureRng) -> Q {
    qq(r.gen_range(-30..=30), *[1, 2, 3, 4, 5, 6].choose(r).unwrap())
}

pub fn small_nonzero(r: &mut FixtureRng) -> Q {
    loop {
        let x = small_rational(r);
        if x != qq(0, 1) {
            return x;
        }
    }
}

/// `α log z + Σ aₙ zⁿ` with an exact Laurent polynomial part starting at `lo ≥ min_lo`.
pub fn alog(r: &mut FixtureRng, ring: Ring, min_lo: i64) -> LogLaurent {
    let a = r.gen_range(-3..=3);
    let lo = r.gen_range(min_lo..=1);
    let n = r.gen_range(1..=5);
    let coeffs = (0..n).map(|_| ring.rat(&small_rational(r))).collect();
    let s = LaurentSeries::new(ring, lo, coeffs, true);
    LogLaurent::log_z(ring).scale(&ring.int(a)).add(&LogLaurent::from_series(s))
}

/// A p-adic number of valuation 1 to 3 with random digits.
pub fn small_point(r: &mut FixtureRng, cfg: &PadicConfig) -> Padic {
    let p = cfg.prime;
    let w = cfg.working_precision();
    let mut digits = vec![r.gen_range(1..p)];
    digits.extend((1..w).map(|_| r.gen_range(0..p)));
    Padic::from_digits(p, r.gen_range(1..=3), &digits, w).unwrap()
}

/// A point of the reachable locus: near 0, near 1 or near ∞.
pub fn reachable_point(r: &mut FixtureRng, cfg: &PadicConfig) -> Padic {
    let s = small_point(r, cfg);
    match r.gen_range(0..3) {
        0 => s,
        1 => cfg.ring().one() - s,
        _ => s.inv().unwrap(),
    }
}

/// A rational in the residue class `k` mod `p`.
fn in_class(r: &mut FixtureRng, p: u32, k: u32) -> Q {
    let p = p as i64;
    let d = *[1i64, 2, 3].iter().filter(|d| **d % p != 0).collect::<Vec<_>>().choose(r).unwrap();
    // n ≡ k·d so that n/d ≡ k
    let n = (k as i64 * d).rem_euclid(p) + p * r.gen_range(-2..=2);
    qq(n, *d)
}

/// Finite points with pairwise distinct reductions mod `p`.
pub fn distinct_points(r: &mut FixtureRng, p: u32, n: usize) -> Vec<Q> {
    let mut classes: Vec<u32> = (0..p).collect();
    classes.shuffle(r);
    classes[..n].iter().map(|&k| in_class(r, p, k)).collect()
}

/// `c · Π (z - aⱼ)^mⱼ` with exponents in `[-2, 2]`.
pub fn unit_on(r: &mut FixtureRng, pts: &[Q]) -> Factored {
    let roots: Vec<(Q, i64)> = pts.iter().map(|a| (a.clone(), r.gen_range(-2..=2))).filter(|(_, m)| *m != 0).collect();
    Factored::new(small_nonzero(r), roots)
}

/// Like [`unit_on`] but never constant.
pub fn nonconstant_unit_on(r: &mut FixtureRng, pts: &[Q]) -> Factored {
    loop {
        let f = unit_on(r, pts);
        if !f.is_constant() {
            return f;
        }
    }
}

/// A triple of functions with divisors in `{a₁, a₂, ∞}`.
#[derive(Clone, Debug)]
pub struct GlobalFixture {
    pub points: Vec<Q>,
    pub f: Factored,
    pub g: Factored,
    pub h: Factored,
    pub shift: (Q, Q),
}

impl GlobalFixture {
    pub fn random(r: &mut FixtureRng, p: u32) -> Self {
        let points = distinct_points(r, p, 2);
        GlobalFixture {
            f: nonconstant_unit_on(r, &points),
            g: nonconstant_unit_on(r, &points),
            h: nonconstant_unit_on(r, &points),
            shift: (small_rational(r), small_rational(r)),
            points,
        }
    }

    pub fn wide_open(&self, p: u32) -> WideOpen {
        WideOpen::new(p, self.points.iter().cloned().map(Point::Finite)).unwrap()
    }
}

/// `h = s(B₁/(z-c) + B₂/(z-c)² + 1/(z-c)³)` with `Σ res_c(h/(z - aⱼ)) = 0` for both `aⱼ`.
pub fn polar_primitive(a1: &Q, a2: &Q, c: &Q, s: &Q) -> RatFn {
    let x1 = (c - a1).recip();
    let x2 = (c - a2).recip();
    let b1 = &x1 * &x2;
    let b2 = &x1 + &x2;
    RatFn::pole(c, 1).scale(&b1).add(&RatFn::pole(c, 2).scale(&b2)).add(&RatFn::pole(c, 3)).scale(s)
}

/// Support `{a₁, a₂, ∞}`, a polar point `c` in a fourth disc and an exact `ω`.
#[derive(Clone, Debug)]
pub struct RegulatorFixture {
    pub a1: Q,
    pub a2: Q,
    pub c: Q,
    pub omega: Omega,
    pub u: WideOpen,
}

impl RegulatorFixture {
    pub fn random(r: &mut FixtureRng, p: u32) -> Self {
        let pts = distinct_points(r, p, 3);
        let (a1, a2, c) = (pts[0].clone(), pts[1].clone(), pts[2].clone());
        let s = small_nonzero(r);
        let omega = Omega::exact(polar_primitive(&a1, &a2, &c, &s));
        let u = WideOpen::new(p, pts.iter().cloned().map(Point::Finite)).unwrap();
        RegulatorFixture { a1, a2, c, omega, u }
    }

    /// The six cross-ratios of `λ = (z - a₁)/(a₂ - a₁)`.
    pub fn cross_ratios(&self) -> Vec<Factored> {
        let d = &self.a2 - &self.a1;
        let lam = Factored::new(d.recip(), [(self.a1.clone(), 1)]);
        let oml = Factored::new(-d.recip(), [(self.a2.clone(), 1)]);
        let m1 = Factored::constant(qq(-1, 1));
        vec![lam.clone(), oml.clone(), lam.inv(), oml.inv(), lam.div(&oml).mul(&m1), oml.div(&lam).mul(&m1)]
    }

    pub fn hints(&self) -> Vec<Q> {
        vec![self.a1.clone(), self.a2.clone()]
    }

    fn pick(&self, r: &mut FixtureRng) -> Vec<(Q, Factored, i64)> {
        let mut gs = self.cross_ratios();
        gs.shuffle(r);
        let n = r.gen_range(5..=6);
        gs.into_iter().take(n).map(|g| (small_nonzero(r), g, *[1i64, 1, 2, -1].choose(r).unwrap())).collect()
    }

    /// `Σ cᵢ [gᵢ]₂ ⊗ gᵢ^kᵢ`, closed under the first condition.
    pub fn closed_element(&self, r: &mut FixtureRng) -> SymbolElement {
        let mut a = SymbolElement::default();
        for (c, g, k) in self.pick(r) {
            a.push(c, g.clone(), g.pow(k));
        }
        a
    }

    /// `Σ cᵢ [gᵢ]₂ ⊗ (1 - gᵢ)^kᵢ`, closed under the tilde condition.
    pub fn tilde_element(&self, r: &mut FixtureRng) -> SymbolElement {
        let mut a = SymbolElement::default();
        for (c, g, k) in self.pick(r) {
            let om = g.one_minus(&self.hints()).unwrap();
            a.push(c, g, om.pow(k));
        }
        a
    }

    /// `Σ cᵢ [gᵢ]₂ ⊗ (z - c)`, which is not closed. Meant for the condition checkers only.
    pub fn open_element(&self, r: &mut FixtureRng) -> SymbolElement {
        let mut a = SymbolElement::default();
        for (c, g, _) in self.pick(r) {
            a.push(c, g, Factored::linear(self.c.clone()));
        }
        a
    }
}
