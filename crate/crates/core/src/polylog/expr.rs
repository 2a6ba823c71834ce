//! Closed-form Coleman functions built from rational functions, logarithms
//! of linear factors and L₂ of rational arguments, together with the forms
//! they differentiate to.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::p1geom::{Factored, Point, RatFn, Value, Q};
use crate::padic::{Padic, PadicConfig, Ring};
use crate::polylog::values::{ltwo, Arg};
use crate::series::{LaurentSeries, LogForm, LogLaurent};

/// Argument of an L₂ term together with the factorisation of `1 - g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtwoArg {
    pub g: Factored,
    pub one_minus: Factored,
}

impl LtwoArg {
    pub fn new(g: Factored, hints: &[Q]) -> Result<Self> {
        let one_minus = g.one_minus(hints)?;
        Ok(LtwoArg { g, one_minus })
    }

    /// `(z - a) / (b - a)`, whose complement is `-(z - b) / (b - a)`.
    pub fn mobius(a: &Q, b: &Q) -> Self {
        let d = b - a;
        LtwoArg {
            g: Factored::new(d.recip(), [(a.clone(), 1)]),
            one_minus: Factored::new(-d.recip(), [(b.clone(), 1)]),
        }
    }

    /// `1/g`, with `1 - 1/g = -(1 - g)/g`.
    pub fn inverse(&self) -> Self {
        let gi = self.g.inv();
        let om = self.one_minus.mul(&gi).mul(&Factored::constant(Q::from_integer((-1).into())));
        LtwoArg { g: gi, one_minus: om }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    One,
    /// `log(z - a)`
    Log(Q),
    /// `log(z - a) log(z - b)`
    LogLog(Q, Q),
    /// `L₂(g)`
    Ltwo(LtwoArg),
}

/// `coef · rat · shape`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coef: Padic,
    pub rat: RatFn,
    pub shape: Shape,
}

#[derive(Clone, Debug)]
pub struct ColemanExpression {
    ring: Ring,
    pub terms: Vec<Term>,
}

/// `coef · Π log(z - a) · rat · dz` with at most two logarithms.
#[derive(Clone, Debug, PartialEq)]
pub struct FormTerm {
    pub coef: Padic,
    pub logs: Vec<Q>,
    pub rat: RatFn,
}

#[derive(Clone, Debug)]
pub struct LogRationalForm {
    ring: Ring,
    pub terms: Vec<FormTerm>,
}

/// Basis element of the canonical decomposition of a form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Basis {
    /// `z^k dz`
    Power(usize),
    /// `(z - b)^{-k} dz`
    Pole(Q, usize),
}

fn qpad(ring: Ring, x: &Q) -> Padic {
    ring.rat(x)
}

fn log_q(x: &Q, cfg: &PadicConfig) -> Result<Padic> {
    cfg.log(&cfg.ring().rat(x))
}

/// `dg/g` as a rational function.
pub fn dlog(g: &Factored) -> RatFn {
    let mut r = RatFn::zero();
    for (a, m) in &g.roots {
        r = r.add(&RatFn::pole(a, 1).scale(&Q::from_integer((*m).into())));
    }
    r
}

impl ColemanExpression {
    pub fn zero(ring: Ring) -> Self {
        ColemanExpression { ring, terms: Vec::new() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn from_term(ring: Ring, coef: Padic, rat: RatFn, shape: Shape) -> Self {
        ColemanExpression { ring, terms: vec![Term { coef, rat, shape }] }
    }

    pub fn rational(ring: Ring, rat: RatFn) -> Self {
        ColemanExpression::from_term(ring, ring.one(), rat, Shape::One)
    }

    pub fn constant(ring: Ring, c: Padic) -> Self {
        ColemanExpression::from_term(ring, c, RatFn::one(), Shape::One)
    }

    /// `log g = log c + Σ m log(z - a)`.
    pub fn log_of(g: &Factored, cfg: &PadicConfig) -> Result<Self> {
        let ring = cfg.ring();
        let mut e = ColemanExpression::constant(ring, log_q(&g.c, cfg)?);
        for (a, m) in &g.roots {
            e.terms.push(Term { coef: ring.int(*m), rat: RatFn::one(), shape: Shape::Log(a.clone()) });
        }
        Ok(e)
    }

    pub fn ltwo_of(ring: Ring, arg: LtwoArg) -> Self {
        ColemanExpression::from_term(ring, ring.one(), RatFn::one(), Shape::Ltwo(arg))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        ColemanExpression { ring: self.ring, terms }
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.int(-1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Padic) -> Self {
        let terms = self.terms.iter().map(|t| Term { coef: &t.coef * c, ..t.clone() }).collect();
        ColemanExpression { ring: self.ring, terms }
    }

    pub fn mul_rat(&self, r: &RatFn) -> Self {
        let terms = self.terms.iter().map(|t| Term { rat: t.rat.mul(r), ..t.clone() }).collect();
        ColemanExpression { ring: self.ring, terms }
    }

    /// `dE` as a log-rational form.
    pub fn differential(&self, cfg: &PadicConfig) -> Result<LogRationalForm> {
        let ring = self.ring;
        let mut out = LogRationalForm::zero(ring);
        for t in &self.terms {
            let dr = t.rat.derivative();
            let push = |out: &mut LogRationalForm, logs: Vec<Q>, rat: RatFn| {
                if !rat.is_zero() {
                    out.terms.push(FormTerm { coef: t.coef.clone(), logs, rat });
                }
            };
            match &t.shape {
                Shape::One => push(&mut out, vec![], dr),
                Shape::Log(a) => {
                    push(&mut out, vec![a.clone()], dr);
                    push(&mut out, vec![], t.rat.div_linear(a));
                }
                Shape::LogLog(a, b) => {
                    push(&mut out, vec![a.clone(), b.clone()], dr);
                    push(&mut out, vec![b.clone()], t.rat.div_linear(a));
                    push(&mut out, vec![a.clone()], t.rat.div_linear(b));
                }
                Shape::Ltwo(arg) => {
                    if !t.rat.is_constant() {
                        return Err(Error::Invalid("differential of a rational multiple of L2 is not a log-rational form".into()));
                    }
                    let c = t.rat.constant_value().unwrap_or_default();
                    let d = dlog(&arg.one_minus).scale(&c);
                    let inner = LogRationalForm::log_times(&arg.g, &d, cfg)?.scale(&t.coef);
                    out = out.add(&inner);
                }
            }
        }
        Ok(out)
    }

    /// Expansion in the standard parameter at `y`, known below exponent `hi`.
    pub fn expand(&self, y: &Point, hi: i64, cfg: &PadicConfig) -> Result<LogLaurent> {
        let ring = self.ring;
        let mut acc = LogLaurent::zero(ring);
        for t in &self.terms {
            if t.coef.is_zero() && t.coef.precision() >= ring.prec {
                continue;
            }
            let r = LogLaurent::from_series(rat_series(&t.rat, y, hi, ring));
            let s = match &t.shape {
                Shape::One => r,
                Shape::Log(a) => r.mul(&log_linear(a, y, hi, cfg)?),
                Shape::LogLog(a, b) => r.mul(&log_linear(a, y, hi, cfg)?).mul(&log_linear(b, y, hi, cfg)?),
                Shape::Ltwo(arg) => r.mul(&ltwo_expansion(arg, y, hi, cfg)?),
            };
            acc = acc.add(&s.scale(&t.coef));
        }
        Ok(acc)
    }

    /// Constant term at `y` in the standard parameter.
    pub fn constant_term_at(&self, y: &Point, cfg: &PadicConfig) -> Result<Padic> {
        adaptive(cfg, |hi| self.expand(y, hi, cfg)?.constant_term())
    }

    /// Constant term at `y` in the parameter `w` with `t = c w u(w)`.
    pub fn constant_term_in(&self, y: &Point, c: &Padic, u: &LaurentSeries, cfg: &PadicConfig) -> Result<Padic> {
        adaptive(cfg, |hi| {
            self.expand(y, hi, cfg)?
                .reparametrize(c, &u.truncate(hi), &cfg.branch(), hi)?
                .constant_term()
        })
    }

    /// Value at `y`, taken as the constant term when `y` is singular.
    pub fn eval(&self, y: &Point, cfg: &PadicConfig) -> Result<Padic> {
        self.constant_term_at(y, cfg)
    }
}

/// Runs `f` with growing windows until it no longer runs out of coefficients.
pub fn adaptive<T>(cfg: &PadicConfig, mut f: impl FnMut(i64) -> Result<T>) -> Result<T> {
    let mut hi = cfg.truncation.min(8);
    loop {
        match f(hi) {
            Err(Error::WindowExhausted(n)) if hi < cfg.truncation => {
                let _ = n;
                hi = (hi * 2).min(cfg.truncation);
            }
            r => return r,
        }
    }
}

/// Expansion of a rational function in the standard parameter at `y`.
pub fn rat_series(r: &RatFn, y: &Point, hi: i64, ring: Ring) -> LaurentSeries {
    if r.is_zero() {
        return LaurentSeries::zero(ring);
    }
    let finite_expansion = match y {
        Point::Finite(a) => r.den.keys().all(|b| b == a),
        Point::Infinity => r.den.is_empty(),
    };
    if finite_expansion {
        let top = match y {
            Point::Finite(_) => r.num.degree() + 1,
            Point::Infinity => 1,
        };
        let (lo, c) = r.laurent_at(y, top);
        let coeffs = c.iter().map(|x| qpad(ring, x)).collect();
        return LaurentSeries::new(ring, lo, coeffs, true);
    }
    let (lo, c) = r.laurent_at(y, hi);
    if c.is_empty() {
        return LaurentSeries::from_fn(ring, hi.min(lo), hi.min(lo), |_| ring.zero());
    }
    LaurentSeries::new(ring, lo, c.iter().map(|x| qpad(ring, x)).collect(), false)
}

/// Expansion of `log(z - a)` at `y`.
pub fn log_linear(a: &Q, y: &Point, hi: i64, cfg: &PadicConfig) -> Result<LogLaurent> {
    let ring = cfg.ring();
    match y {
        Point::Finite(b) if b == a => Ok(LogLaurent::log_z(ring)),
        Point::Finite(b) => {
            let d = b - a;
            let dp = qpad(ring, &d);
            let l0 = cfg.log(&dp)?;
            let di = qpad(ring, &d.recip());
            let mut pw = ring.one();
            let s = LaurentSeries::from_fn(ring, 0, hi, |k| {
                if k == 0 {
                    return l0.clone();
                }
                pw = &pw * &di;
                let t = pw.div_int(k);
                if k % 2 == 1 {
                    t
                } else {
                    -t
                }
            });
            Ok(LogLaurent::from_series(s))
        }
        Point::Infinity => {
            let ap = qpad(ring, a);
            let mut lead = LogLaurent::log_z(ring).neg();
            if a != &Q::default() {
                let mut pw = ring.one();
                let s = LaurentSeries::from_fn(ring, 0, hi, |k| {
                    if k == 0 {
                        return ring.zero();
                    }
                    pw = &pw * &ap;
                    -pw.div_int(k)
                });
                lead = lead.add(&LogLaurent::from_series(s));
            }
            Ok(lead)
        }
    }
}

/// Expansion of `log g` at `y`.
pub fn log_factored(g: &Factored, y: &Point, hi: i64, cfg: &PadicConfig) -> Result<LogLaurent> {
    let ring = cfg.ring();
    let mut acc = LogLaurent::constant(ring, log_q(&g.c, cfg)?);
    for (a, m) in &g.roots {
        acc = acc.add(&log_linear(a, y, hi, cfg)?.scale(&ring.int(*m)));
    }
    Ok(acc)
}

fn pint(r: &LogLaurent, s: &LogLaurent) -> Result<LogLaurent> {
    LogForm::product(r, s).integrate()
}

/// Expansion of `L₂(g)` at `y`, pinned by its value or constant term there.
pub fn ltwo_expansion(arg: &LtwoArg, y: &Point, hi: i64, cfg: &PadicConfig) -> Result<LogLaurent> {
    let ring = cfg.ring();
    match arg.g.eval(y) {
        Value::Zero => {
            let lg = log_factored(&arg.g, y, hi, cfg)?;
            let l1 = log_factored(&arg.one_minus, y, hi, cfg)?;
            Ok(lg.mul(&l1).sub(&pint(&l1, &lg)?))
        }
        Value::Infinity => {
            let lg = log_factored(&arg.g, y, hi, cfg)?;
            let half = lg.mul(&lg).scale(&ring.one().div_int(2));
            Ok(half.sub(&ltwo_expansion(&arg.inverse(), y, hi, cfg)?))
        }
        Value::Finite(v) => {
            let c = ltwo(&Arg::Finite(ring.rat(&v)), cfg)?.value;
            let lg = log_factored(&arg.g, y, hi, cfg)?;
            let l1 = log_factored(&arg.one_minus, y, hi, cfg)?;
            Ok(LogLaurent::constant(ring, c).add(&pint(&lg, &l1)?))
        }
    }
}

impl LogRationalForm {
    pub fn zero(ring: Ring) -> Self {
        LogRationalForm { ring, terms: Vec::new() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rational(ring: Ring, rat: RatFn) -> Self {
        LogRationalForm { ring, terms: vec![FormTerm { coef: ring.one(), logs: vec![], rat }] }
    }

    /// `log g · rat · dz`.
    pub fn log_times(g: &Factored, rat: &RatFn, cfg: &PadicConfig) -> Result<Self> {
        let ring = cfg.ring();
        let mut out = LogRationalForm::zero(ring);
        if rat.is_zero() {
            return Ok(out);
        }
        out.terms.push(FormTerm { coef: log_q(&g.c, cfg)?, logs: vec![], rat: rat.clone() });
        for (a, m) in &g.roots {
            out.terms.push(FormTerm { coef: ring.int(*m), logs: vec![a.clone()], rat: rat.clone() });
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        LogRationalForm { ring: self.ring, terms }
    }

    pub fn scale(&self, c: &Padic) -> Self {
        let terms = self.terms.iter().map(|t| FormTerm { coef: &t.coef * c, ..t.clone() }).collect();
        LogRationalForm { ring: self.ring, terms }
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.int(-1))
    }

    /// Coordinates in the basis `{Π log(z - a)} × {z^k, (z - b)^{-k}}`.
    pub fn canonical(&self) -> BTreeMap<(Vec<Q>, Basis), Padic> {
        let mut out: BTreeMap<(Vec<Q>, Basis), Padic> = BTreeMap::new();
        for t in &self.terms {
            let mut logs = t.logs.clone();
            logs.sort();
            let (poly, parts) = t.rat.partial_fractions();
            let mut put = |b: Basis, c: &Q| {
                if c == &Q::default() {
                    return;
                }
                let v = t.coef.mul_rat(c);
                let key = (logs.clone(), b);
                let e = out.remove(&key).map(|x| x + &v).unwrap_or(v);
                out.insert(key, e);
            };
            for (k, c) in poly.0.iter().enumerate() {
                put(Basis::Power(k), c);
            }
            for (b, v) in &parts {
                for (k, c) in v.iter().enumerate() {
                    put(Basis::Pole(b.clone(), k + 1), c);
                }
            }
        }
        out
    }

    /// Smallest valuation of the coordinate differences.
    pub fn discrepancy(&self, o: &Self) -> i64 {
        self.add(&o.neg()).canonical().values().map(|c| c.valuation_bound()).min().unwrap_or(i64::MAX)
    }

    /// Expansion of the coefficient of `dz` at `y` in the standard parameter.
    ///
    /// At infinity the result is the coefficient of `dw`, `w = 1/z`.
    pub fn expand(&self, y: &Point, hi: i64, cfg: &PadicConfig) -> Result<LogForm> {
        let ring = self.ring;
        let mut acc = LogLaurent::zero(ring);
        let jac = match y {
            Point::Finite(_) => LaurentSeries::constant(ring, ring.one()),
            Point::Infinity => LaurentSeries::monomial(ring, ring.int(-1), -2),
        };
        for t in &self.terms {
            let mut e = LogLaurent::from_series(rat_series(&t.rat, y, hi, ring).mul(&jac));
            for a in &t.logs {
                e = e.mul(&log_linear(a, y, hi, cfg)?);
            }
            acc = acc.add(&e.scale(&t.coef));
        }
        Ok(LogForm::new(acc))
    }
}

/// `E` with `dE = r dz`: polynomial and pole parts plus residue logarithms.
pub fn rational_antiderivative(r: &RatFn, ring: Ring) -> ColemanExpression {
    let (poly, parts) = r.partial_fractions();
    let mut rat = RatFn::poly(poly.integral());
    let mut e = ColemanExpression::zero(ring);
    for (b, v) in &parts {
        for (k, c) in v.iter().enumerate() {
            let k = k as i64 + 1;
            if k == 1 {
                if c != &Q::default() {
                    e.terms.push(Term { coef: qpad(ring, c), rat: RatFn::one(), shape: Shape::Log(b.clone()) });
                }
            } else {
                let s = c / Q::from_integer((1 - k).into());
                rat = rat.add(&RatFn::pole(b, (k - 1) as u32).scale(&s));
            }
        }
    }
    if !rat.is_zero() {
        e.terms.insert(0, Term { coef: ring.one(), rat, shape: Shape::One });
    }
    e
}

/// Rational part `R` of the antiderivative of `r` and the residues of `r`.
pub fn split_rational(r: &RatFn) -> (RatFn, BTreeMap<Q, Q>) {
    let (poly, parts) = r.partial_fractions();
    let mut rat = RatFn::poly(poly.integral());
    let mut res = BTreeMap::new();
    for (b, v) in &parts {
        for (k, c) in v.iter().enumerate() {
            let k = k as i64 + 1;
            if k == 1 {
                if c != &Q::default() {
                    res.insert(b.clone(), c.clone());
                }
            } else {
                let s = c / Q::from_integer((1 - k).into());
                rat = rat.add(&RatFn::pole(b, (k - 1) as u32).scale(&s));
            }
        }
    }
    (rat, res)
}

/// Closed-form antiderivative of a form with at most one logarithm per term.
pub fn dilog_integrate(form: &LogRationalForm, cfg: &PadicConfig) -> Result<ColemanExpression> {
    let ring = cfg.ring();
    let mut out = ColemanExpression::zero(ring);
    for t in &form.terms {
        match t.logs.as_slice() {
            [] => out = out.add(&rational_antiderivative(&t.rat, ring).scale(&t.coef)),
            [a] => {
                let (big_r, res) = split_rational(&t.rat);
                // ∫ log(z-a) R' dz = R log(z-a) - ∫ R/(z-a) dz
                if !big_r.is_zero() {
                    out.terms.push(Term { coef: t.coef.clone(), rat: big_r.clone(), shape: Shape::Log(a.clone()) });
                    let inner = rational_antiderivative(&big_r.div_linear(a), ring);
                    out = out.add(&inner.scale(&-&t.coef));
                }
                for (b, c) in &res {
                    let k = t.coef.mul_rat(c);
                    out = out.add(&log_over_linear(a, b, cfg)?.scale(&k));
                }
            }
            _ => return Err(Error::Invalid("integrands with two logarithms are not supported".into())),
        }
    }
    Ok(out)
}

/// `∫ log(z - a) dz / (z - b)`.
pub fn log_over_linear(a: &Q, b: &Q, cfg: &PadicConfig) -> Result<ColemanExpression> {
    let ring = cfg.ring();
    if a == b {
        return Ok(ColemanExpression::from_term(ring, ring.one().div_int(2), RatFn::one(), Shape::LogLog(a.clone(), a.clone())));
    }
    // log(b-a) log(1-u) + L₂(u), u = (z-a)/(b-a), log(1-u) = log(z-b) - log(b-a)
    let lba = log_q(&(b - a), cfg)?;
    let mut e = ColemanExpression::from_term(ring, lba.clone(), RatFn::one(), Shape::Log(b.clone()));
    e.terms.push(Term { coef: -(&lba * &lba), rat: RatFn::one(), shape: Shape::One });
    e.terms.push(Term { coef: ring.one(), rat: RatFn::one(), shape: Shape::Ltwo(LtwoArg::mobius(a, b)) });
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::p1geom::{q, qf};

    fn cfg() -> PadicConfig {
        PadicConfig::new(7, 20).unwrap()
    }

    fn log_form(a: i64, g: &Factored) -> LogRationalForm {
        let mut f = LogRationalForm::zero(cfg().ring());
        f.terms.push(FormTerm { coef: cfg().ring().one(), logs: vec![q(a)], rat: dlog(g) });
        f
    }

    #[test]
    fn log_z_dlog_one_minus_z_is_l2() {
        let c = cfg();
        let omz = Factored::new(q(-1), [(q(1), 1)]);
        let e = dilog_integrate(&log_form(0, &omz), &c).unwrap();
        let back = e.differential(&c).unwrap();
        assert!(back.discrepancy(&log_form(0, &omz)) >= 20);
        // the value at 0 is L₂(0) = 0 and the closed form is L₂(z) up to a constant
        let l2 = ColemanExpression::ltwo_of(c.ring(), LtwoArg::new(Factored::linear(q(0)), &[]).unwrap());
        let diff = e.sub(&l2);
        let v0 = diff.eval(&Point::int(0), &c).unwrap();
        let v1 = diff.eval(&Point::Finite(q(7)), &c).unwrap();
        assert!((v0 - v1).valuation_bound() >= 20);
    }

    #[test]
    fn log_dlog_same_point() {
        let c = cfg();
        let e = dilog_integrate(&log_form(0, &Factored::linear(q(0))), &c).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].shape, Shape::LogLog(q(0), q(0)));
    }

    #[test]
    fn log_over_shifted_linear_round_trip() {
        let c = cfg();
        let f = log_form(2, &Factored::linear(q(5)));
        let e = dilog_integrate(&f, &c).unwrap();
        assert!(e.differential(&c).unwrap().discrepancy(&f) >= 20);
    }

    #[test]
    fn rational_antiderivatives() {
        let ring = cfg().ring();
        let c = cfg();
        let e = rational_antiderivative(&RatFn::pole(&q(3), 1), ring);
        assert_eq!(e.terms[0].shape, Shape::Log(q(3)));
        let e = rational_antiderivative(&RatFn::pole(&q(0), 2), ring);
        assert_eq!(e.terms[0].rat, RatFn::pole(&q(0), 1).scale(&q(-1)));
        // (2z - 1)/(z^2 - z) = 1/z + 1/(z - 1)
        let r = Factored::new(q(2), [(qf(1, 2), 1), (q(0), -1), (q(1), -1)]).to_ratfn();
        let e = rational_antiderivative(&r, ring);
        assert_eq!(e.terms.len(), 2);
        assert!(e.differential(&c).unwrap().discrepancy(&LogRationalForm::rational(ring, r)) >= 20);
    }

    #[test]
    fn log_with_rational_multiplier_round_trip() {
        let c = cfg();
        let r = Factored::new(q(3), [(q(4), -3), (q(1), -1), (q(2), 1)]).to_ratfn();
        let mut f = LogRationalForm::zero(c.ring());
        f.terms.push(FormTerm { coef: c.ring().int(5), logs: vec![q(0)], rat: r });
        let e = dilog_integrate(&f, &c).unwrap();
        assert!(e.differential(&c).unwrap().discrepancy(&f) >= 20);
    }

    #[test]
    fn l2_constant_terms() {
        let c = cfg();
        // g = z/(z-1) has g(0) = 0 and g(1) = ∞ with ḡ(1) = 1
        let arg = LtwoArg::new(Factored::new(q(1), [(q(0), 1), (q(1), -1)]), &[]).unwrap();
        let e = ColemanExpression::ltwo_of(c.ring(), arg);
        assert!(e.constant_term_at(&Point::int(0), &c).unwrap().is_zero());
        assert!(e.constant_term_at(&Point::int(1), &c).unwrap().is_zero());
        // g = 3z/(z-1): ḡ(1) = 3
        let arg = LtwoArg::new(Factored::new(q(3), [(q(0), 1), (q(1), -1)]), &[q(0), q(1)]).unwrap_or_else(|_| {
            LtwoArg::new(Factored::new(q(3), [(q(0), 1), (q(1), -1)]), &[qf(-1, 2)]).unwrap()
        });
        let e = ColemanExpression::ltwo_of(c.ring(), arg);
        let l3 = c.log(&c.ring().int(3)).unwrap();
        let expect = l3.clone() * l3 * c.ring().one().div_int(2);
        assert_eq!(e.constant_term_at(&Point::int(1), &c).unwrap(), expect);
    }

    #[test]
    fn rational_eval() {
        let c = cfg();
        let e = ColemanExpression::rational(c.ring(), RatFn::pole(&q(2), 1));
        assert_eq!(e.eval(&Point::int(3), &c).unwrap(), c.ring().one());
    }
}
