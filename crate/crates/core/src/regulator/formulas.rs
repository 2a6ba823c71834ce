//! The regulator of `Σ cᵢ [gᵢ]₂ ⊗ fᵢ` paired with a form of the second kind.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::p1geom::global::{global_triple_index, GlobalAux, GlobalIndex, ThirdSlot};
use crate::p1geom::{Factored, Point, RatFn, Value, WideOpen, Q};
use crate::padic::{Padic, PadicConfig, Ring};
use crate::polylog::expr::{adaptive, dilog_integrate, dlog, log_factored, rat_series, rational_antiderivative, split_rational, ColemanExpression, LogRationalForm, LtwoArg};
use crate::polylog::values::{lmod2, Arg};
use crate::regulator::symbols::{check_special_units, SymbolElement, SymbolTerm};
use crate::series::{LogForm, LogLaurent};

/// `ω = dh` with `h` rational.
#[derive(Clone, Debug, PartialEq)]
pub struct Omega {
    pub form: RatFn,
    pub primitive: RatFn,
}

impl Omega {
    pub fn exact(h: RatFn) -> Self {
        Omega { form: h.derivative(), primitive: h }
    }

    pub fn zero() -> Self {
        Omega::exact(RatFn::zero())
    }

    /// `ω = r dz`, which must have no residues.
    pub fn from_form(r: RatFn) -> Result<Self> {
        let (_, parts) = r.partial_fractions();
        for (b, v) in &parts {
            if v.first().is_some_and(|c| !num_traits::Zero::is_zero(c)) {
                return Err(Error::NotSecondKind(format!("residue at {}", b)));
            }
        }
        let (h, _) = split_rational(&r);
        Ok(Omega { form: r, primitive: h })
    }

    /// Poles of `F_ω`.
    pub fn poles(&self) -> Vec<Point> {
        let mut v: Vec<Point> = self.primitive.poles().into_iter().map(Point::Finite).collect();
        if self.primitive.ord_at(&Point::Infinity) < 0 {
            v.push(Point::Infinity);
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    Thm1,
    Thm2,
    Thm3,
    Thm4a,
    Thm4b,
}

impl Formula {
    pub const ALL: [Formula; 5] = [Formula::Thm1, Formula::Thm2, Formula::Thm3, Formula::Thm4a, Formula::Thm4b];

    pub fn name(&self) -> &'static str {
        match self {
            Formula::Thm1 => "thm1",
            Formula::Thm2 => "thm2",
            Formula::Thm3 => "thm3",
            Formula::Thm4a => "thm4a",
            Formula::Thm4b => "thm4b",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Formula::ALL.iter().copied().find(|f| f.name() == s).ok_or_else(|| Error::Invalid(format!("unknown formula {}", s)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalKind {
    /// Local triple index at an end.
    End,
    /// Contribution of a point of a divisor.
    Point,
    /// Residue at a pole of `F_ω` away from the divisors.
    Polar,
}

#[derive(Clone, Debug)]
pub struct LocalTerm {
    pub kind: LocalKind,
    pub point: Point,
    pub label: String,
    pub value: Padic,
}

#[derive(Clone, Debug)]
pub struct TermReport {
    pub index: usize,
    pub value: Padic,
    pub locals: Vec<LocalTerm>,
}

#[derive(Clone, Debug)]
pub struct RegulatorReport {
    pub formula: Formula,
    pub total: Padic,
    pub terms: Vec<TermReport>,
}

impl RegulatorReport {
    /// Local terms that are nonzero below valuation `target`.
    pub fn nonzero_local_terms(&self, target: i64) -> usize {
        self.terms.iter().flat_map(|t| t.locals.iter()).filter(|l| l.value.valuation_bound() < target).count()
    }

    pub fn locals(&self) -> impl Iterator<Item = &LocalTerm> {
        self.terms.iter().flat_map(|t| t.locals.iter())
    }
}

/// Shared inputs of all formulas.
#[derive(Clone, Debug)]
pub struct Regulator<'a> {
    pub cfg: &'a PadicConfig,
    pub u: &'a WideOpen,
    pub omega: &'a Omega,
    /// Constants added to every auxiliary integral `∫G dH` and `∫F dH`.
    pub aux_shift: Option<(Padic, Padic)>,
}

struct Prepared<'t> {
    term: &'t SymbolTerm,
    om: Factored,
}

impl<'a> Regulator<'a> {
    pub fn new(cfg: &'a PadicConfig, u: &'a WideOpen, omega: &'a Omega) -> Self {
        Regulator { cfg, u, omega, aux_shift: None }
    }

    pub fn with_aux_shift(mut self, a: Padic, b: Padic) -> Self {
        self.aux_shift = Some((a, b));
        self
    }

    fn ring(&self) -> Ring {
        self.cfg.ring()
    }

    fn hints(&self, alpha: &SymbolElement) -> Vec<Q> {
        let mut h = alpha.finite_points();
        h.extend(self.u.ends().iter().filter_map(|y| match y {
            Point::Finite(a) => Some(a.clone()),
            Point::Infinity => None,
        }));
        h
    }

    fn prepare<'t>(&self, alpha: &'t SymbolElement) -> Result<Vec<Prepared<'t>>> {
        if !check_special_units(alpha, self.u) {
            return Err(Error::Invalid("some gᵢ, 1 - gᵢ or fᵢ is not a unit on the wide open".into()));
        }
        for y in self.omega.poles() {
            if !self.u.contains_end(&y) {
                return Err(Error::Invalid(format!("ω has a pole at {}, which is not a removed point", y)));
            }
        }
        let hints = self.hints(alpha);
        alpha.terms.iter().map(|t| Ok(Prepared { term: t, om: t.one_minus(&hints)? })).collect()
    }

    pub fn evaluate(&self, formula: Formula, alpha: &SymbolElement) -> Result<RegulatorReport> {
        let prepared = self.prepare(alpha)?;
        let mut terms = Vec::new();
        let mut total = self.ring().zero();
        for (i, p) in prepared.iter().enumerate() {
            let locals = match formula {
                Formula::Thm1 => self.thm12(p, false)?,
                Formula::Thm2 => self.thm12(p, true)?,
                Formula::Thm3 => self.thm3(p)?,
                Formula::Thm4a => self.thm4a(p)?,
                Formula::Thm4b => self.thm4b(p)?,
            };
            let value = locals.iter().fold(self.ring().zero(), |a, l| a + &l.value);
            total = total + &value;
            terms.push(TermReport { index: i, value, locals });
        }
        Ok(RegulatorReport { formula, total, terms })
    }

    /// `∫ F_ω dlog(x)` as a third argument.
    fn third(&self, x: &Factored) -> Result<ThirdSlot> {
        let r = self.omega.primitive.mul(&dlog(x));
        ThirdSlot::new(rational_antiderivative(&r, self.ring()), self.cfg)
    }

    fn global(&self, f: &Factored, g: &Factored, h: &ThirdSlot) -> Result<GlobalIndex> {
        let mut aux = GlobalAux::canonical(f, g, h, self.cfg)?;
        if let Some((a, b)) = &self.aux_shift {
            aux = aux.shifted(a, b);
        }
        global_triple_index(f, g, h, &aux, self.u, self.cfg)
    }

    fn end_terms(&self, gi: &GlobalIndex, k: &Padic, label: &str, out: &mut Vec<LocalTerm>) {
        for (y, v) in &gi.per_end {
            out.push(LocalTerm { kind: LocalKind::End, point: y.clone(), label: format!("{} at {}", label, y), value: v * k });
        }
    }

    fn thm3(&self, p: &Prepared) -> Result<Vec<LocalTerm>> {
        let t = p.term;
        let gi = self.global(&t.f, &t.g, &self.third(&p.om)?)?;
        let mut out = Vec::new();
        self.end_terms(&gi, &self.ring().rat(&t.c), "<log f, log g; ∫F dlog(1-g)>", &mut out);
        Ok(out)
    }

    fn thm4a(&self, p: &Prepared) -> Result<Vec<LocalTerm>> {
        let t = p.term;
        let k = self.ring().rat(&t.c).mul_rat(&Q::new(2.into(), 3.into()));
        let g1 = self.global(&t.f, &t.g, &self.third(&p.om)?)?;
        let g2 = self.global(&t.f, &p.om, &self.third(&t.g)?)?;
        let mut out = Vec::new();
        self.end_terms(&g1, &k, "<log f, log g; ∫F dlog(1-g)>", &mut out);
        self.end_terms(&g2, &-&k, "<log f, log(1-g); ∫F dlog g>", &mut out);
        Ok(out)
    }

    /// Ends where `F_ω` has a pole and `f`, `g`, `1 - g` are regular units.
    fn polar_ends(&self, p: &Prepared) -> Result<Vec<Point>> {
        let mut out = Vec::new();
        for y in self.omega.poles() {
            let t = p.term;
            if t.f.ord_at(&y) != 0 || t.g.ord_at(&y) != 0 || p.om.ord_at(&y) != 0 {
                return Err(Error::Invalid(format!("F_ω has a pole at {}, which lies on a divisor of the element", y)));
            }
            out.push(y);
        }
        Ok(out)
    }

    /// `res_y(log a · log b · F_ω · dlog x)`.
    fn polar_residue(&self, a: &Factored, b: &Factored, x: &Factored, y: &Point) -> Result<Padic> {
        let cfg = self.cfg;
        let form = LogRationalForm::rational(self.ring(), self.omega.primitive.mul(&dlog(x)));
        adaptive(cfg, |hi| {
            let w = form.expand(y, hi, cfg)?;
            let la = log_factored(a, y, hi, cfg)?;
            let lb = log_factored(b, y, hi, cfg)?;
            LogForm::new(w.coef.mul(&la).mul(&lb)).residue()
        })
    }

    /// `res(∫h dΦ · dlog f) - res(∫F G̃ ω · dlog g) + res(∫F G ω · dlog(1-g))` at `y`,
    /// with `Φ = 2 L₂(g) - G G̃` and the integrals taken locally.
    fn polar_4b(&self, p: &Prepared, y: &Point) -> Result<Padic> {
        let cfg = self.cfg;
        let t = p.term;
        adaptive(cfg, |hi| {
            let f = log_factored(&t.f, y, hi, cfg)?;
            let g = log_factored(&t.g, y, hi, cfg)?;
            let o = log_factored(&p.om, y, hi, cfg)?;
            let h = LogLaurent::from_series(rat_series(&self.omega.primitive, y, hi, self.ring()));
            let pint = |a: &LogLaurent, b: &LogLaurent| LogForm::product(a, b).integrate();
            let res = |k: &LogLaurent, x: &LogLaurent| LogForm::product(k, x).coef.component(0).coeff(-1);
            let j = pint(&h.mul(&g), &o)?.sub(&pint(&h.mul(&o), &g)?);
            let k2 = pint(&f.mul(&o), &h)?;
            let k1 = pint(&f.mul(&g), &h)?;
            Ok(res(&j, &f)? - res(&k2, &g)? + res(&k1, &o)?)
        })
    }

    fn constant_at(&self, e: &ColemanExpression, y: &Point) -> Result<Padic> {
        e.constant_term_at(y, self.cfg)
    }

    fn thm12(&self, p: &Prepared, with_lmod: bool) -> Result<Vec<LocalTerm>> {
        let t = p.term;
        let ring = self.ring();
        let cfg = self.cfg;
        let h = &self.omega.primitive;
        let arg = LtwoArg { g: t.g.clone(), one_minus: p.om.clone() };
        // ∫ L₂(g) ω = L₂(g) h - ∫ h log g dlog(1-g)
        let j = dilog_integrate(&LogRationalForm::log_times(&t.g, &h.mul(&dlog(&p.om)), cfg)?, cfg)?;
        let e = ColemanExpression::ltwo_of(ring, arg).mul_rat(h).sub(&j);
        let two_c = ring.rat(&t.c).mul_int(2);
        let mut out = Vec::new();
        for y in t.f.support() {
            let ord = t.f.ord_at(&y);
            let mut v = self.constant_at(&e, &y)?;
            if with_lmod {
                if let Value::Finite(gy) = t.g.eval(&y) {
                    let hy = self.constant_at(&ColemanExpression::rational(ring, h.clone()), &y)?;
                    let l = lmod2(&Arg::Finite(ring.rat(&gy)), cfg)?.value;
                    v = v - hy * l;
                }
            }
            out.push(LocalTerm {
                kind: LocalKind::Point,
                point: y.clone(),
                label: format!("2 ord f · ∫L2(g)ω at {}", y),
                value: v.mul_int(ord) * &two_c,
            });
        }
        for y in self.polar_ends(p)? {
            let v = self.polar_residue(&t.f, &t.g, &p.om, &y)? * ring.rat(&t.c);
            out.push(LocalTerm { kind: LocalKind::Polar, point: y.clone(), label: format!("polar residue at {}", y), value: v });
        }
        Ok(out)
    }

    fn thm4b(&self, p: &Prepared) -> Result<Vec<LocalTerm>> {
        let t = p.term;
        let ring = self.ring();
        let cfg = self.cfg;
        let h = &self.omega.primitive;
        let k = ring.rat(&t.c).mul_rat(&Q::new(2.into(), 3.into()));
        let df = h.mul(&dlog(&t.f));
        let j1 = dilog_integrate(&LogRationalForm::log_times(&t.g, &df, cfg)?, cfg)?;
        let j2 = dilog_integrate(&LogRationalForm::log_times(&p.om, &df, cfg)?, cfg)?;
        let mut pts: Vec<Point> = p.om.support().into_iter().chain(t.g.support()).collect();
        pts.sort();
        pts.dedup();
        let mut out = Vec::new();
        for y in pts {
            let (a, b) = (p.om.ord_at(&y), t.g.ord_at(&y));
            let e = j1.scale(&ring.int(a)).sub(&j2.scale(&ring.int(b)));
            let v = self.constant_at(&e, &y)?;
            out.push(LocalTerm {
                kind: LocalKind::Point,
                point: y.clone(),
                label: format!("(2/3) divisor integrals at {}", y),
                value: v * &k,
            });
        }
        for y in self.polar_ends(p)? {
            let v = self.polar_4b(p, &y)?;
            out.push(LocalTerm { kind: LocalKind::Polar, point: y.clone(), label: format!("polar residues at {}", y), value: v * &k });
        }
        Ok(out)
    }
}

/// Evaluates one formula with default auxiliary integrals.
pub fn regmap(formula: Formula, alpha: &SymbolElement, omega: &Omega, u: &WideOpen, cfg: &PadicConfig) -> Result<RegulatorReport> {
    Regulator::new(cfg, u, omega).evaluate(formula, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::p1geom::{q, qf};

    fn setup() -> (PadicConfig, WideOpen, Omega, Vec<Factored>) {
        let cfg = PadicConfig::new(7, 10).unwrap();
        let (a1, a2, c) = (q(2), q(5), q(3));
        let x1 = (c.clone() - &a1).recip();
        let x2 = (c.clone() - &a2).recip();
        let b1 = &x1 * &x2;
        let b2 = &x1 + &x2;
        let h = RatFn::pole(&c, 1).scale(&b1).add(&RatFn::pole(&c, 2).scale(&b2)).add(&RatFn::pole(&c, 3));
        let u = WideOpen::new(7, [Point::Finite(a1.clone()), Point::Finite(a2.clone()), Point::Finite(c)]).unwrap();
        let d = &a2 - &a1;
        // λ = (z - a1)/(a2 - a1) and its cross-ratio orbit
        let lam = Factored::new(d.recip(), [(a1.clone(), 1)]);
        let oml = Factored::new(-d.recip(), [(a2.clone(), 1)]);
        let gs = vec![lam.clone(), oml.clone(), lam.inv(), oml.inv(), lam.div(&oml).mul(&Factored::constant(q(-1))), oml.div(&lam).mul(&Factored::constant(q(-1)))];
        (cfg, u, Omega::exact(h), gs)
    }

    fn elements(gs: &[Factored]) -> (SymbolElement, SymbolElement) {
        let mut closed = SymbolElement::default();
        let mut tilde = SymbolElement::default();
        for (i, g) in gs.iter().enumerate().take(3) {
            let k = qf(i as i64 + 1, 2);
            closed.push(k.clone(), g.clone(), g.clone());
            tilde.push(k, g.clone(), g.one_minus(&[q(2), q(5)]).unwrap());
        }
        (closed, tilde)
    }

    fn value(f: Formula, a: &SymbolElement, om: &Omega, u: &WideOpen, cfg: &PadicConfig) -> RegulatorReport {
        regmap(f, a, om, u, cfg).unwrap()
    }

    #[test]
    fn closed_element_vanishes_under_every_formula() {
        let (cfg, u, om, gs) = setup();
        let (closed, _) = elements(&gs);
        for f in Formula::ALL {
            let r = value(f, &closed, &om, &u, &cfg);
            assert!(r.total.valuation_bound() >= cfg.precision, "{:?} {:?}", f, r.total);
            assert!(r.nonzero_local_terms(cfg.precision) >= 3, "{:?}", f);
        }
    }

    #[test]
    fn tilde_element_vanishes_under_third_and_fourth() {
        let (cfg, u, om, gs) = setup();
        let (_, tilde) = elements(&gs);
        for f in [Formula::Thm3, Formula::Thm4a, Formula::Thm4b] {
            let r = value(f, &tilde, &om, &u, &cfg);
            assert!(r.total.valuation_bound() >= cfg.precision, "{:?} {:?}", f, r.total);
        }
        assert!(value(Formula::Thm4a, &tilde, &om, &u, &cfg).nonzero_local_terms(cfg.precision) >= 10);
    }

    #[test]
    fn zero_form_and_shift_invariance() {
        let (cfg, u, om, gs) = setup();
        let (closed, tilde) = elements(&gs);
        for f in Formula::ALL {
            assert!(value(f, &tilde, &Omega::zero(), &u, &cfg).total.is_zero());
        }
        let ring = cfg.ring();
        let base = value(Formula::Thm3, &tilde, &om, &u, &cfg).total;
        let shifted = Regulator::new(&cfg, &u, &om).with_aux_shift(ring.int(3), ring.frac(2, 5)).evaluate(Formula::Thm3, &tilde).unwrap();
        assert!((shifted.total - base).valuation_bound() >= cfg.precision);
        let doubled = value(Formula::Thm2, &closed.scale(&q(2)), &om, &u, &cfg);
        assert!(doubled.total.valuation_bound() >= cfg.precision);
    }

    #[test]
    fn second_kind_required() {
        assert!(matches!(Omega::from_form(RatFn::pole(&q(3), 1)), Err(Error::NotSecondKind(_))));
        let om = Omega::from_form(RatFn::pole(&q(3), 2)).unwrap();
        assert_eq!(om.primitive, RatFn::pole(&q(3), 1).scale(&q(-1)));
        assert_eq!(Formula::parse("thm4b").unwrap(), Formula::Thm4b);
    }
}
