//! Randomized self-test suites.
//!
//! Each check draws fresh seeded instances and records the smallest
//! valuation of the discrepancies it was meant to make vanish.

use std::time::Instant;

use num_bigint::BigInt;
use rand::Rng;
use reglab_core::index::{double_index, triple_index, triple_index_compact, triple_index_simple_pole, triple_index_canonical, Overrides, TripleData};
use reglab_core::p1geom::global::{global_triple_index, GlobalAux, ThirdSlot};
use reglab_core::p1geom::{Factored, Point, Value as PointValue, WideOpen, Q};
use reglab_core::polylog::expr::{adaptive, dilog_integrate, dlog, log_factored, ltwo_expansion, rat_series, rational_antiderivative, ColemanExpression, LogRationalForm, LtwoArg};
use reglab_core::polylog::{lmod2, ltwo, Arg};
use reglab_core::regulator::{check_ccond_numeric, check_ocond, check_tilde, regmap, Formula, PointStatus, Regulator, SymbolElement};
use reglab_core::series::{LaurentSeries, LogLaurent};
use reglab_core::{Error, Padic, PadicConfig};
use serde_json::{json, Value};

use crate::fixtures::{self, FixtureRng, GlobalFixture, RegulatorFixture};

pub const SUITES: [&str; 4] = ["index", "polylog", "global", "regulator"];

/// Instance counts used by the suites.
#[derive(Clone, Debug)]
pub struct Sizes {
    pub axioms: usize,
    pub simple_pole: usize,
    pub polylog_points: usize,
    pub constant_terms: usize,
    pub reciprocity: usize,
    pub cyclic: usize,
    pub regulator: usize,
}

impl Default for Sizes {
    fn default() -> Self {
        Sizes { axioms: 200, simple_pole: 200, polylog_points: 50, constant_terms: 20, reciprocity: 50, cyclic: 25, regulator: 10 }
    }
}

impl Sizes {
    /// Small counts for quick runs.
    pub fn quick() -> Self {
        Sizes { axioms: 20, simple_pole: 20, polylog_points: 5, constant_terms: 3, reciprocity: 5, cyclic: 3, regulator: 2 }
    }
}

/// Outcome of one check over many instances.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub passed: usize,
    /// Required valuation of each discrepancy.
    pub threshold: i64,
    /// Smallest discrepancy valuation seen, capped at the working precision.
    pub worst: i64,
    /// Smallest number of nonzero local terms seen, where relevant.
    pub min_nonzero_terms: Option<usize>,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl Check {
    fn new(name: &str, threshold: i64) -> Self {
        Check {
            name: name.into(),
            instances: 0,
            passed: 0,
            threshold,
            worst: i64::MAX,
            min_nonzero_terms: None,
            failures: Vec::new(),
            seconds: 0.0,
        }
    }

    pub fn ok(&self) -> bool {
        self.instances > 0 && self.passed == self.instances
    }

    fn fail(&mut self, msg: String) {
        self.instances += 1;
        if self.failures.len() < 5 {
            self.failures.push(msg);
        }
    }

    /// Records a discrepancy that should have valuation at least `threshold`.
    fn record(&mut self, x: &Padic, what: impl FnOnce() -> String) {
        self.record_all(std::slice::from_ref(x), what)
    }

    fn record_all(&mut self, xs: &[Padic], what: impl FnOnce() -> String) {
        let v = xs.iter().map(|x| x.valuation_bound()).min().unwrap_or(i64::MAX);
        self.worst = self.worst.min(v);
        if v >= self.threshold {
            self.instances += 1;
            self.passed += 1;
        } else {
            self.fail(format!("{}: discrepancy valuation {}", what(), v));
        }
    }

    fn record_bool(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.instances += 1;
            self.passed += 1;
        } else {
            self.fail(what());
        }
    }

    fn record_err(&mut self, e: Error, what: impl FnOnce() -> String) {
        self.fail(format!("{}: {}", what(), e));
    }

    fn nonzero_terms(&mut self, n: usize) {
        self.min_nonzero_terms = Some(self.min_nonzero_terms.map_or(n, |m| m.min(n)));
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": if self.ok() { "pass" } else { "fail" },
            "instances": self.instances,
            "passed": self.passed,
            "threshold": self.threshold,
            "worst_valuation": if self.worst == i64::MAX { Value::Null } else { json!(self.worst) },
            "min_nonzero_terms": self.min_nonzero_terms,
            "failures": self.failures,
        })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "status": if self.ok() { "pass" } else { "fail" },
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn run(suite: &str, cfg: &PadicConfig, seed: u64, sizes: &Sizes) -> Option<SuiteReport> {
    let checks = match suite {
        "index" => index_suite(cfg, seed, sizes),
        "polylog" => polylog_suite(cfg, seed, sizes),
        "global" => global_suite(cfg, seed, sizes),
        "regulator" => regulator_suite(cfg, seed, sizes),
        _ => return None,
    };
    Some(SuiteReport { suite: suite.into(), seed, checks })
}

fn timed(mut c: Check, f: impl FnOnce(&mut Check)) -> Check {
    let t = Instant::now();
    f(&mut c);
    c.seconds = t.elapsed().as_secs_f64();
    c
}

fn sub_rng(seed: u64, salt: u64) -> FixtureRng {
    fixtures::rng(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

fn konst(cfg: &PadicConfig, c: &Padic) -> LogLaurent {
    LogLaurent::constant(cfg.ring(), c.clone())
}

fn rand_const(r: &mut FixtureRng, cfg: &PadicConfig) -> Padic {
    cfg.ring().rat(&fixtures::small_rational(r))
}

/// Random data with constants added to all three canonical integrals.
fn random_data(r: &mut FixtureRng, cfg: &PadicConfig, min_lo: i64) -> Result<TripleData, Error> {
    let ring = cfg.ring();
    let (f, g, h) = (fixtures::alog(r, ring, min_lo), fixtures::alog(r, ring, min_lo), fixtures::alog(r, ring, min_lo));
    let base = TripleData::canonical(f.clone(), g.clone(), h.clone())?;
    let ov = Overrides {
        i_gdh: Some(base.i_gdh.add(&konst(cfg, &rand_const(r, cfg)))),
        i_fdh: Some(base.i_fdh.add(&konst(cfg, &rand_const(r, cfg)))),
        i_fdg: Some(base.i_fdg.add(&konst(cfg, &rand_const(r, cfg)))),
    };
    TripleData::new(f, g, h, ov)
}

fn sum_data(d1: &TripleData, d2: &TripleData, slot: usize) -> Result<TripleData, Error> {
    let (f, g, h) = match slot {
        0 => (d1.f.add(&d2.f), d1.g.clone(), d1.h.clone()),
        1 => (d1.f.clone(), d1.g.add(&d2.g), d1.h.clone()),
        _ => (d1.f.clone(), d1.g.clone(), d1.h.add(&d2.h)),
    };
    // the integral not involving the varying slot is shared
    let pick = |shared: bool, a: &LogLaurent, b: &LogLaurent| if shared { a.clone() } else { a.add(b) };
    let ov = Overrides {
        i_gdh: Some(pick(slot == 0, &d1.i_gdh, &d2.i_gdh)),
        i_fdh: Some(pick(slot == 1, &d1.i_fdh, &d2.i_fdh)),
        i_fdg: Some(pick(slot == 2, &d1.i_fdg, &d2.i_fdg)),
    };
    TripleData::new(f, g, h, ov)
}

/// Second summand for a linearity check: agrees with `d` except in `slot`.
fn partner(r: &mut FixtureRng, cfg: &PadicConfig, d: &TripleData, slot: usize) -> Result<TripleData, Error> {
    let x = random_data(r, cfg, -3)?;
    let (f, g, h) = match slot {
        0 => (x.f.clone(), d.g.clone(), d.h.clone()),
        1 => (d.f.clone(), x.g.clone(), d.h.clone()),
        _ => (d.f.clone(), d.g.clone(), x.h.clone()),
    };
    let base = TripleData::canonical(f.clone(), g.clone(), h.clone())?;
    let shift = |c: &LogLaurent, canon: &LogLaurent| -> Result<LogLaurent, Error> { Ok(canon.add(&konst(cfg, &c.constant_term()?))) };
    let ov = Overrides {
        i_gdh: Some(if slot == 0 { d.i_gdh.clone() } else { shift(&x.i_gdh, &base.i_gdh)? }),
        i_fdh: Some(if slot == 1 { d.i_fdh.clone() } else { shift(&x.i_fdh, &base.i_fdh)? }),
        i_fdg: Some(if slot == 2 { d.i_fdg.clone() } else { shift(&x.i_fdg, &base.i_fdg)? }),
    };
    TripleData::new(f, g, h, ov)
}

fn index_suite(cfg: &PadicConfig, seed: u64, sizes: &Sizes) -> Vec<Check> {
    let n = cfg.precision;
    let t = n - 2;
    let mut out = Vec::new();
    let names = ["trilinearity", "symmetry", "triple-identity", "double-index-reduction", "ifdg-independence", "change-of-constant-gdh", "change-of-constant-fdh"];
    for (k, name) in names.iter().enumerate() {
        let mut r = sub_rng(seed, 100 + k as u64);
        out.push(timed(Check::new(name, t), |c| {
            for i in 0..sizes.axioms {
                let what = || format!("{} instance {}", name, i);
                match axiom_instance(k, i, &mut r, cfg) {
                    Ok(xs) => c.record_all(&xs, what),
                    Err(e) => c.record_err(e, what),
                }
            }
        }));
    }
    let mut r = sub_rng(seed, 200);
    out.push(timed(Check::new("simple-pole-formula", t), |c| {
        for i in 0..sizes.simple_pole {
            let res = random_data(&mut r, cfg, 0).and_then(|d| {
                let a = triple_index(&d)?;
                let b = triple_index_simple_pole(&d.f, &d.g, &d.h, &d.i_fdh, &d.i_gdh)?;
                Ok(a - b)
            });
            match res {
                Ok(x) => c.record(&x, || format!("simple-pole instance {}", i)),
                Err(e) => c.record_err(e, || format!("simple-pole instance {}", i)),
            }
        }
    }));
    let mut r = sub_rng(seed, 300);
    out.push(timed(Check::new("compact-route", t), |c| {
        for i in 0..sizes.simple_pole {
            let ring = cfg.ring();
            let (f, g, h) = (fixtures::alog(&mut r, ring, -3), fixtures::alog(&mut r, ring, -3), fixtures::alog(&mut r, ring, -3));
            match triple_index_canonical(&f, &g, &h).and_then(|a| Ok(a - triple_index_compact(&f, &g, &h)?)) {
                Ok(x) => c.record(&x, || format!("compact instance {}", i)),
                Err(e) => c.record_err(e, || format!("compact instance {}", i)),
            }
        }
    }));
    out
}

/// Discrepancies for axiom `k` on one random instance.
fn axiom_instance(k: usize, i: usize, r: &mut FixtureRng, cfg: &PadicConfig) -> Result<Vec<Padic>, Error> {
    let d = random_data(r, cfg, -3)?;
    let base = triple_index(&d)?;
    match k {
        0 => {
            let slot = i % 3;
            let e = partner(r, cfg, &d, slot)?;
            let s = sum_data(&d, &e, slot)?;
            let lam = rand_const(r, cfg);
            let scaled = TripleData {
                f: if slot == 0 { d.f.scale(&lam) } else { d.f.clone() },
                g: if slot == 1 { d.g.scale(&lam) } else { d.g.clone() },
                h: if slot == 2 { d.h.scale(&lam) } else { d.h.clone() },
                i_gdh: if slot == 0 { d.i_gdh.clone() } else { d.i_gdh.scale(&lam) },
                i_fdh: if slot == 1 { d.i_fdh.clone() } else { d.i_fdh.scale(&lam) },
                i_fdg: if slot == 2 { d.i_fdg.clone() } else { d.i_fdg.scale(&lam) },
            };
            Ok(vec![triple_index(&s)? - base.clone() - triple_index(&e)?, triple_index(&scaled)? - base * lam])
        }
        1 => Ok(vec![base - triple_index(&d.swap_fg())?]),
        2 => Ok(vec![base + triple_index(&d.swap_gh())? + triple_index(&d.swap_fg().swap_gh())?]),
        3 => {
            let (_, gm) = d.g.split_alog_prime()?;
            let base_m = TripleData::canonical(d.f.clone(), LogLaurent::from_series(gm), d.h.clone())?;
            let m = TripleData {
                i_gdh: base_m.i_gdh.add(&konst(cfg, &d.i_gdh.constant_term()?)),
                i_fdh: d.i_fdh.clone(),
                ..base_m
            };
            Ok(vec![triple_index(&m)? - double_index(&m.f, &m.i_gdh)?])
        }
        4 => {
            let mut e = d.clone();
            e.i_fdg = e.i_fdg.add(&konst(cfg, &rand_const(r, cfg)));
            Ok(vec![triple_index(&e)? - base])
        }
        5 | 6 => {
            let c = rand_const(r, cfg);
            let mut e = d.clone();
            let res = if k == 5 {
                e.i_gdh = e.i_gdh.add(&konst(cfg, &c));
                d.f.differential().residue()?
            } else {
                e.i_fdh = e.i_fdh.add(&konst(cfg, &c));
                d.g.differential().residue()?
            };
            Ok(vec![triple_index(&e)? - base + c * res])
        }
        _ => unreachable!(),
    }
}

/// The configured branch together with a second one, zero and nonzero.
fn branch_pair(cfg: &PadicConfig) -> Vec<PadicConfig> {
    let zero = Q::from_integer(BigInt::from(0));
    let other = if cfg.log_branch == zero { Q::from_integer(BigInt::from(3)) } else { zero };
    let mut v = vec![cfg.clone(), cfg.clone().with_branch(other).expect("valid branch")];
    v.sort_by_key(|c| c.log_branch != Q::from_integer(BigInt::from(0)));
    v
}

fn lm(z: &Padic, cfg: &PadicConfig) -> Result<Padic, Error> {
    Ok(lmod2(&Arg::Finite(z.clone()), cfg)?.value)
}

fn l2(z: &Padic, cfg: &PadicConfig) -> Result<Padic, Error> {
    Ok(ltwo(&Arg::Finite(z.clone()), cfg)?.value)
}

/// A primitive cube root of unity mod `p`, if there is one.
fn cube_root_of_unity(p: u32) -> Option<i64> {
    if !(p - 1).is_multiple_of(3) {
        return None;
    }
    (2..p as i64).find(|x| (x * x % p as i64) * x % p as i64 == 1)
}

fn polylog_suite(cfg: &PadicConfig, seed: u64, sizes: &Sizes) -> Vec<Check> {
    let t = cfg.precision - 5;
    let mut out = Vec::new();
    for c in branch_pair(cfg) {
        let tag = format!("branch={}", c.log_branch);
        let ring = c.ring();
        let one = ring.one();
        let salt = if c.log_branch == Q::from_integer(BigInt::from(0)) { 0 } else { 50 };
        let mut r = sub_rng(seed, 400 + salt);
        out.push(timed(Check::new(&format!("lmod-inversion {}", tag), t), |k| {
            for _ in 0..sizes.polylog_points {
                let z = fixtures::reachable_point(&mut r, &c);
                match lm(&z, &c).and_then(|a| Ok(a + lm(&z.inv()?, &c)?)) {
                    Ok(x) => k.record(&x, || format!("z = {:?}", z)),
                    Err(e) => k.record_err(e, || format!("z = {:?}", z)),
                }
            }
        }));
        let mut r = sub_rng(seed, 401 + salt);
        out.push(timed(Check::new(&format!("lmod-reflection {}", tag), t), |k| {
            for _ in 0..sizes.polylog_points {
                let z = fixtures::reachable_point(&mut r, &c);
                match lm(&z, &c).and_then(|a| Ok(a + lm(&(one.clone() - &z), &c)?)) {
                    Ok(x) => k.record(&x, || format!("z = {:?}", z)),
                    Err(e) => k.record_err(e, || format!("z = {:?}", z)),
                }
            }
        }));
        let mut r = sub_rng(seed, 402 + salt);
        let zeta = cube_root_of_unity(c.prime).map(|x| ring.int(x).teichmuller().expect("unit"));
        out.push(timed(Check::new(&format!("lmod-multiplication {}", tag), t), |k| {
            for _ in 0..sizes.polylog_points {
                let mut z = fixtures::small_point(&mut r, &c);
                if r.gen_bool(0.5) {
                    z = z.inv().expect("nonzero");
                }
                let res = (|| {
                    let two = lm(&(z.clone() * &z), &c)? - (lm(&z, &c)? + lm(&-z.clone(), &c)?).mul_int(2);
                    let mut v = vec![two];
                    if let Some(zeta) = &zeta {
                        let mut s = ring.zero();
                        let mut w = z.clone();
                        for _ in 0..3 {
                            s = s + lm(&w, &c)?;
                            w = w * zeta;
                        }
                        v.push(s.mul_int(3) - lm(&z.pow(3), &c)?);
                    }
                    Ok(v)
                })();
                match res {
                    Ok(xs) => k.record_all(&xs, || format!("z = {:?}", z)),
                    Err(e) => k.record_err(e, || format!("z = {:?}", z)),
                }
            }
        }));
        let mut r = sub_rng(seed, 403 + salt);
        out.push(timed(Check::new(&format!("lmod-five-term {}", tag), t), |k| {
            for _ in 0..sizes.polylog_points {
                let x = fixtures::small_point(&mut r, &c);
                let y = fixtures::small_point(&mut r, &c);
                let res = (|| {
                    let d = one.clone() - x.clone() * &y;
                    let di = d.inv()?;
                    Ok(lm(&x, &c)? + lm(&y, &c)? + lm(&((one.clone() - &x) * &di), &c)? + lm(&d, &c)? + lm(&((one.clone() - &y) * &di), &c)?)
                })();
                match res {
                    Ok(s) => k.record(&s, || format!("x = {:?}, y = {:?}", x, y)),
                    Err(e) => k.record_err(e, || format!("x = {:?}, y = {:?}", x, y)),
                }
            }
        }));
        let mut r = sub_rng(seed, 404 + salt);
        out.push(timed(Check::new(&format!("ltwo-inversion {}", tag), t), |k| {
            for _ in 0..sizes.polylog_points {
                let z = fixtures::reachable_point(&mut r, &c);
                let res = (|| {
                    let l = c.log(&z)?;
                    Ok(l2(&z, &c)? + l2(&z.inv()?, &c)? - l.clone() * l * ring.frac(1, 2))
                })();
                match res {
                    Ok(x) => k.record(&x, || format!("z = {:?}", z)),
                    Err(e) => k.record_err(e, || format!("z = {:?}", z)),
                }
            }
        }));
    }
    out.extend(constant_term_checks(cfg, seed, sizes));
    out
}

/// One fixture for the constant-term identities.
struct ConstFixture {
    fx: RegulatorFixture,
    g: Factored,
    om: Factored,
    points: Vec<Point>,
    /// Second parameter `w` with `t = c w u(w)`.
    c: Q,
    u: Vec<Q>,
}

impl ConstFixture {
    fn random(r: &mut FixtureRng, p: u32) -> Self {
        use rand::seq::SliceRandom;
        let fx = RegulatorFixture::random(r, p);
        let g = fx.cross_ratios().choose(r).unwrap().clone();
        let om = g.one_minus(&fx.hints()).unwrap();
        let near = |a: &Q, r: &mut FixtureRng| a + Q::new(BigInt::from(p as i64 * r.gen_range(1..=3)), BigInt::from(*[1, 2, 3].choose(r).unwrap()));
        let points = vec![Point::Finite(fx.a1.clone()), Point::Finite(fx.a2.clone()), Point::Infinity, Point::Finite(near(&fx.a1, r)), Point::Finite(near(&fx.a2, r))];
        let c = loop {
            let x = fixtures::small_nonzero(r);
            if Point::Finite(x.clone()).reduction(p).is_some_and(|k| k != 0) {
                break x;
            }
        };
        let u = vec![Q::from_integer(BigInt::from(1)), fixtures::small_rational(r), fixtures::small_rational(r)];
        ConstFixture { fx, g, om, points, c, u }
    }

    fn second(&self, cfg: &PadicConfig) -> (Padic, LaurentSeries) {
        let ring = cfg.ring();
        (ring.rat(&self.c), LaurentSeries::new(ring, 0, self.u.iter().map(|x| ring.rat(x)).collect(), true))
    }

    /// `∫ L₂(g) ω = L₂(g) h - ∫ h log g dlog(1-g)`.
    fn ltwo_omega(&self, cfg: &PadicConfig) -> Result<ColemanExpression, Error> {
        let h = &self.fx.omega.primitive;
        let j = dilog_integrate(&LogRationalForm::log_times(&self.g, &h.mul(&dlog(&self.om)), cfg)?, cfg)?;
        let l = ColemanExpression::ltwo_of(cfg.ring(), LtwoArg { g: self.g.clone(), one_minus: self.om.clone() });
        Ok(l.mul_rat(h).sub(&j))
    }
}

/// Constant terms of an expansion in the standard parameter and in `w`.
fn both_constants(cfg: &PadicConfig, c: &Padic, u: &LaurentSeries, e: impl Fn(i64) -> Result<LogLaurent, Error>) -> Result<(Padic, Padic, LogLaurent), Error> {
    adaptive(cfg, |hi| {
        let x = e(hi)?;
        let y = x.reparametrize(c, &u.truncate(hi), &cfg.branch(), hi)?;
        Ok((x.constant_term()?, y.constant_term()?, x))
    })
}

fn constant_term_checks(cfg: &PadicConfig, seed: u64, sizes: &Sizes) -> Vec<Check> {
    let t = cfg.precision - 5;
    let ring = cfg.ring();
    let half = ring.frac(1, 2);
    let mut out = Vec::new();

    let mut r = sub_rng(seed, 500);
    out.push(timed(Check::new("ltwo-constant-terms", t), |k| {
        for i in 0..sizes.constant_terms {
            let cf = ConstFixture::random(&mut r, cfg.prime);
            let (c, u) = cf.second(cfg);
            let arg = LtwoArg { g: cf.g.clone(), one_minus: cf.om.clone() };
            for y in &cf.points {
                let what = || format!("fixture {} g = {} at {}", i, cf.g, y);
                let res = (|| {
                    let (c0, c1, x) = both_constants(cfg, &c, &u, |hi| ltwo_expansion(&arg, y, hi, cfg))?;
                    let ord = cf.g.ord_at(y);
                    let (e0, e1) = if ord > 0 {
                        (ring.zero(), ring.zero())
                    } else if ord < 0 {
                        let gbar = ring.rat(&cf.g.leading_at(y));
                        let l0 = cfg.log(&gbar)?;
                        let l1 = cfg.log(&(gbar * c.powi(ord)?))?;
                        (l0.clone() * l0 * &half, l1.clone() * l1 * &half)
                    } else {
                        let v = match cf.g.eval(y) {
                            PointValue::Finite(v) => l2(&ring.rat(&v), cfg)?,
                            _ => unreachable!("regular point"),
                        };
                        (v.clone(), v)
                    };
                    let mut xs = vec![c0 - e0, c1 - e1];
                    let m = x.component(0);
                    for (n, a) in m.terms() {
                        if n < 0 {
                            xs.push(a.clone());
                        }
                    }
                    Ok(xs)
                })();
                match res {
                    Ok(xs) => k.record_all(&xs, what),
                    Err(e) => k.record_err(e, what),
                }
            }
        }
    }));

    let mut r = sub_rng(seed, 501);
    out.push(timed(Check::new("lmod-constant-terms", t), |k| {
        for i in 0..sizes.constant_terms {
            let cf = ConstFixture::random(&mut r, cfg.prime);
            let (c, u) = cf.second(cfg);
            let arg = LtwoArg { g: cf.g.clone(), one_minus: cf.om.clone() };
            for y in &cf.points {
                let what = || format!("fixture {} g = {} at {}", i, cf.g, y);
                let res = (|| {
                    let (c0, c1, _) = both_constants(cfg, &c, &u, |hi| {
                        let lg = log_factored(&cf.g, y, hi, cfg)?;
                        let l1 = log_factored(&cf.om, y, hi, cfg)?;
                        Ok(ltwo_expansion(&arg, y, hi, cfg)?.sub(&lg.mul(&l1).scale(&half)))
                    })?;
                    let v = match cf.g.eval(y) {
                        PointValue::Finite(v) => lm(&ring.rat(&v), cfg)?,
                        _ => ring.zero(),
                    };
                    Ok(vec![c0 - v.clone(), c1 - v])
                })();
                match res {
                    Ok(xs) => k.record_all(&xs, what),
                    Err(e) => k.record_err(e, what),
                }
            }
        }
    }));

    let mut r = sub_rng(seed, 502);
    out.push(timed(Check::new("ltwo-omega-parameter-independence", t), |k| {
        for i in 0..sizes.constant_terms {
            let cf = ConstFixture::random(&mut r, cfg.prime);
            let (c, u) = cf.second(cfg);
            let e = match cf.ltwo_omega(cfg) {
                Ok(e) => e,
                Err(err) => {
                    k.record_err(err, || format!("fixture {}", i));
                    continue;
                }
            };
            for y in &cf.points {
                let what = || format!("fixture {} g = {} at {}", i, cf.g, y);
                let res = (|| {
                    let (c0, c1, _) = both_constants(cfg, &c, &u, |hi| e.expand(y, hi, cfg))?;
                    // c(L₂(g) h) = h(y) c(L₂(g)) as h is regular at y
                    let arg = LtwoArg { g: cf.g.clone(), one_minus: cf.om.clone() };
                    let hy = ColemanExpression::rational(ring, cf.fx.omega.primitive.clone()).constant_term_at(y, cfg)?;
                    let (l0, _, _) = both_constants(cfg, &c, &u, |hi| ltwo_expansion(&arg, y, hi, cfg))?;
                    let (p0, _, _) = both_constants(cfg, &c, &u, |hi| {
                        let hs = LogLaurent::from_series(rat_series(&cf.fx.omega.primitive, y, hi, ring));
                        Ok(ltwo_expansion(&arg, y, hi, cfg)?.mul(&hs))
                    })?;
                    Ok(vec![c0 - c1, p0 - hy * l0])
                })();
                match res {
                    Ok(xs) => k.record_all(&xs, what),
                    Err(e) => k.record_err(e, what),
                }
            }
        }
    }));
    out
}

fn global_suite(cfg: &PadicConfig, seed: u64, sizes: &Sizes) -> Vec<Check> {
    let t = cfg.precision - 4;
    let ring = cfg.ring();
    let p = cfg.prime;
    let mut out = Vec::new();

    let mut r = sub_rng(seed, 600);
    let fixtures: Vec<GlobalFixture> = (0..sizes.reciprocity).map(|_| GlobalFixture::random(&mut r, p)).collect();
    out.push(timed(Check::new("reciprocity", t), |k| {
        for (i, fx) in fixtures.iter().enumerate() {
            let what = || format!("fixture {}: f = {}, g = {}, h = {}", i, fx.f, fx.g, fx.h);
            let res = (|| {
                let u = fx.wide_open(p);
                let h = ThirdSlot::log(&fx.h, cfg)?;
                let aux = GlobalAux::canonical(&fx.f, &fx.g, &h, cfg)?;
                let gi = global_triple_index(&fx.f, &fx.g, &h, &aux, &u, cfg)?;
                let shifted = aux.shifted(&ring.rat(&fx.shift.0), &ring.rat(&fx.shift.1));
                let gs = global_triple_index(&fx.f, &fx.g, &h, &shifted, &u, cfg)?;
                Ok((gi.nonzero_terms(t), vec![gi.total.clone(), gs.total]))
            })();
            match res {
                Ok((nz, xs)) => {
                    k.nonzero_terms(nz);
                    k.record_all(&xs, what)
                }
                Err(e) => k.record_err(e, what),
            }
        }
    }));

    out.push(timed(Check::new("constant-third-argument", t), |k| {
        for (i, fx) in fixtures.iter().enumerate() {
            let what = || format!("fixture {}: f = {}, g = {}", i, fx.f, fx.g);
            let res = (|| {
                let u = fx.wide_open(p);
                let c = ring.rat(&fx.h.c);
                let h = ThirdSlot::new(ColemanExpression::constant(ring, c), cfg)?;
                let aux = GlobalAux::canonical(&fx.f, &fx.g, &h, cfg)?.shifted(&ring.rat(&fx.shift.0), &ring.rat(&fx.shift.1));
                Ok(global_triple_index(&fx.f, &fx.g, &h, &aux, &u, cfg)?.total)
            })();
            match res {
                Ok(x) => k.record(&x, what),
                Err(e) => k.record_err(e, what),
            }
        }
    }));

    let mut r = sub_rng(seed, 601);
    out.push(timed(Check::new("cyclic-sum", t), |k| {
        for i in 0..sizes.cyclic {
            let fx = RegulatorFixture::random(&mut r, p);
            let pts = fx.hints();
            let f = fixtures::nonconstant_unit_on(&mut r, &pts);
            let g = fixtures::nonconstant_unit_on(&mut r, &pts);
            let h = fixtures::nonconstant_unit_on(&mut r, &pts);
            let what = || format!("instance {}: f = {}, g = {}, h = {}", i, f, g, h);
            match cyclic_sum(&fx, &f, &g, &h, cfg) {
                Ok((x, nz)) => {
                    k.nonzero_terms(nz);
                    k.record(&x, what)
                }
                Err(e) => k.record_err(e, what),
            }
        }
    }));
    out
}

/// `Σ_e ⟨F,G;∫F_ω dH⟩ + Σ_e ⟨F,H;∫F_ω dG⟩ + Σ_e ⟨G,H;∫F_ω dF⟩` and its count of nonzero local terms.
pub fn cyclic_sum(fx: &RegulatorFixture, f: &Factored, g: &Factored, h: &Factored, cfg: &PadicConfig) -> Result<(Padic, usize), Error> {
    let ring = cfg.ring();
    let third = |x: &Factored| ThirdSlot::new(rational_antiderivative(&fx.omega.primitive.mul(&dlog(x)), ring), cfg);
    let mut total = ring.zero();
    let mut nz = 0;
    for (a, b, c) in [(f, g, h), (f, h, g), (g, h, f)] {
        let t = third(c)?;
        let aux = GlobalAux::canonical(a, b, &t, cfg)?;
        let gi = global_triple_index(a, b, &t, &aux, &fx.u, cfg)?;
        nz += gi.nonzero_terms(cfg.precision);
        total = total + gi.total;
    }
    Ok((total, nz))
}

fn regulator_suite(cfg: &PadicConfig, seed: u64, sizes: &Sizes) -> Vec<Check> {
    let t = cfg.precision - 6;
    let p = cfg.prime;
    let mut out = Vec::new();

    let mut r = sub_rng(seed, 700);
    let closed: Vec<(RegulatorFixture, SymbolElement)> = (0..sizes.regulator)
        .map(|_| {
            let fx = RegulatorFixture::random(&mut r, p);
            let a = fx.closed_element(&mut r);
            (fx, a)
        })
        .collect();
    let tilde: Vec<(RegulatorFixture, SymbolElement)> = (0..sizes.regulator)
        .map(|_| {
            let fx = RegulatorFixture::random(&mut r, p);
            let a = fx.tilde_element(&mut r);
            (fx, a)
        })
        .collect();

    out.push(timed(Check::new("closed-thm2-thm3", t), |k| {
        for (i, (fx, a)) in closed.iter().enumerate() {
            regulator_instance(k, i, fx, a, &[Formula::Thm2, Formula::Thm3], cfg);
        }
    }));
    out.push(timed(Check::new("closed-thm1-thm4", t), |k| {
        for (i, (fx, a)) in closed.iter().enumerate() {
            regulator_instance(k, i, fx, a, &[Formula::Thm1, Formula::Thm4a, Formula::Thm4b], cfg);
        }
    }));
    out.push(timed(Check::new("tilde-thm3-thm4", t), |k| {
        for (i, (fx, a)) in tilde.iter().enumerate() {
            regulator_instance(k, i, fx, a, &[Formula::Thm3, Formula::Thm4a, Formula::Thm4b], cfg);
        }
    }));
    out.push(timed(Check::new("aux-shift-invariance", t), |k| {
        for (i, (fx, a)) in tilde.iter().enumerate() {
            let ring = cfg.ring();
            let what = || format!("tilde fixture {}", i);
            let res = (|| {
                let mut xs = Vec::new();
                for f in [Formula::Thm3, Formula::Thm4a] {
                    let base = regmap(f, a, &fx.omega, &fx.u, cfg)?.total;
                    let s = Regulator::new(cfg, &fx.u, &fx.omega).with_aux_shift(ring.int(i as i64 + 2), ring.frac(1, 3)).evaluate(f, a)?.total;
                    xs.push(s - base);
                }
                Ok(xs)
            })();
            match res {
                Ok(xs) => k.record_all(&xs, what),
                Err(e) => k.record_err(e, what),
            }
        }
    }));

    out.push(timed(Check::new("checkers", t), |k| {
        let mut r = sub_rng(seed, 701);
        for (i, (fx, a)) in closed.iter().enumerate() {
            let h = fx.hints();
            k.record_bool(check_ocond(a, &h) == Ok(true), || format!("closed fixture {} rejected by the first condition", i));
            k.record_bool(ccond_passes(a, cfg), || format!("closed fixture {} fails the boundary check", i));
            let open = fx.open_element(&mut r);
            k.record_bool(check_ocond(&open, &h) == Ok(false), || format!("open fixture {} accepted by the first condition", i));
        }
        for (i, (fx, a)) in tilde.iter().enumerate() {
            let h = fx.hints();
            k.record_bool(check_tilde(a, &h) == Ok(true), || format!("tilde fixture {} rejected by the tilde condition", i));
            k.record_bool(ccond_passes(a, cfg), || format!("tilde fixture {} fails the boundary check", i));
            let single = SymbolElement::new(vec![a.terms[0].clone()]).expect("valid term");
            k.record_bool(check_ocond(&single, &h) == Ok(false), || format!("single tilde term {} accepted by the first condition", i));
        }
    }));
    out
}

fn ccond_passes(a: &SymbolElement, cfg: &PadicConfig) -> bool {
    check_ccond_numeric(a, cfg).iter().all(|c| c.status == PointStatus::Passed)
}

/// Evaluates `formulas` on one fixture, recording totals and nonzero local term counts.
fn regulator_instance(k: &mut Check, i: usize, fx: &RegulatorFixture, a: &SymbolElement, formulas: &[Formula], cfg: &PadicConfig) {
    let what = || format!("fixture {} (element of {} terms)", i, a.terms.len());
    let mut xs = Vec::new();
    for f in formulas {
        match regmap(*f, a, &fx.omega, &fx.u, cfg) {
            Ok(rep) => {
                k.nonzero_terms(rep.nonzero_local_terms(cfg.precision));
                xs.push(rep.total);
            }
            Err(e) => {
                k.record_err(e, what);
                return;
            }
        }
    }
    k.record_all(&xs, what);
}

/// Wide open removing the given finite points.
pub fn wide_open(p: u32, pts: &[Q]) -> Result<WideOpen, Error> {
    WideOpen::new(p, pts.iter().cloned().map(Point::Finite))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let cfg = PadicConfig::new(7, 10).unwrap();
        for s in SUITES {
            let rep = run(s, &cfg, 3, &Sizes::quick()).unwrap();
            assert!(rep.ok(), "{}", serde_json::to_string_pretty(&rep.to_json()).unwrap());
        }
    }
}
