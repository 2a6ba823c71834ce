//! Local expansions at ends and global triple indices on wide opens.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::index::triple_index_canonical;
use crate::p1geom::{Factored, Point, WideOpen};
use crate::padic::{Padic, PadicConfig};
use crate::polylog::expr::{adaptive, dilog_integrate, log_factored, ColemanExpression, LogRationalForm, Shape};
use crate::series::LogLaurent;

/// Expansion of `E` at the end `e`, known below exponent `window`.
pub fn expand_at_end(e: &ColemanExpression, end: &Point, window: i64, cfg: &PadicConfig) -> Result<LogLaurent> {
    e.expand(end, window, cfg)
}

/// Expansion of `log f` at the end `e`.
pub fn expand_log_at_end(f: &Factored, end: &Point, window: i64, cfg: &PadicConfig) -> Result<LogLaurent> {
    log_factored(f, end, window, cfg)
}

/// Points where `E` may fail to be meromorphic or may have poles.
pub fn singular_points(e: &ColemanExpression) -> Vec<Point> {
    let mut out = Vec::new();
    for t in &e.terms {
        out.extend(t.rat.poles().into_iter().map(Point::Finite));
        match &t.shape {
            Shape::One => {}
            Shape::Log(a) => out.push(Point::Finite(a.clone())),
            Shape::LogLog(a, b) => {
                out.push(Point::Finite(a.clone()));
                out.push(Point::Finite(b.clone()));
            }
            Shape::Ltwo(arg) => {
                out.extend(arg.g.support());
                out.extend(arg.one_minus.support());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn check_on(u: &WideOpen, pts: &[Point], what: &str) -> Result<()> {
    for y in pts {
        if !u.contains_end(y) {
            return Err(Error::NotAPrimeOnEnd(format!("{} is singular at {}, which is not a removed point", what, y)));
        }
    }
    Ok(())
}

/// Third argument of a global index: a function whose differential is rational.
#[derive(Clone, Debug)]
pub struct ThirdSlot {
    pub h: ColemanExpression,
    pub dh: LogRationalForm,
}

impl ThirdSlot {
    pub fn new(h: ColemanExpression, cfg: &PadicConfig) -> Result<Self> {
        let dh = h.differential(cfg)?;
        if dh.terms.iter().any(|t| !t.logs.is_empty()) {
            return Err(Error::Invalid("third argument must have a rational differential".into()));
        }
        Ok(ThirdSlot { h, dh })
    }

    pub fn log(h: &Factored, cfg: &PadicConfig) -> Result<Self> {
        ThirdSlot::new(ColemanExpression::log_of(h, cfg)?, cfg)
    }
}

/// Globally chosen integrals `∫G dH` and `∫F dH`.
#[derive(Clone, Debug)]
pub struct GlobalAux {
    pub i_gdh: ColemanExpression,
    pub i_fdh: ColemanExpression,
}

impl GlobalAux {
    pub fn canonical(f: &Factored, g: &Factored, h: &ThirdSlot, cfg: &PadicConfig) -> Result<Self> {
        Ok(GlobalAux { i_gdh: integral_log_times(g, &h.dh, cfg)?, i_fdh: integral_log_times(f, &h.dh, cfg)? })
    }

    /// Adds global constants to both integrals.
    pub fn shifted(&self, c_gdh: &Padic, c_fdh: &Padic) -> Self {
        let ring = self.i_gdh.ring();
        GlobalAux {
            i_gdh: self.i_gdh.add(&ColemanExpression::constant(ring, c_gdh.clone())),
            i_fdh: self.i_fdh.add(&ColemanExpression::constant(ring, c_fdh.clone())),
        }
    }
}

/// `∫ log(x) η` for a rational form `η`.
pub fn integral_log_times(x: &Factored, eta: &LogRationalForm, cfg: &PadicConfig) -> Result<ColemanExpression> {
    let ring = cfg.ring();
    let mut form = LogRationalForm::zero(ring);
    for t in &eta.terms {
        form = form.add(&LogRationalForm::log_times(x, &t.rat, cfg)?.scale(&t.coef));
    }
    dilog_integrate(&form, cfg)
}

/// A global index together with its local terms in end order.
#[derive(Clone, Debug)]
pub struct GlobalIndex {
    pub total: Padic,
    pub per_end: Vec<(Point, Padic)>,
}

impl GlobalIndex {
    /// Number of local terms that are nonzero at the target precision.
    pub fn nonzero_terms(&self, target: i64) -> usize {
        self.per_end.iter().filter(|(_, v)| v.valuation_bound() < target).count()
    }
}

/// `⟨log f, log g; H⟩_e` at one end.
pub fn local_triple_index(
    f: &Factored,
    g: &Factored,
    h: &ThirdSlot,
    aux: &GlobalAux,
    end: &Point,
    cfg: &PadicConfig,
) -> Result<Padic> {
    let ring = cfg.ring();
    let rf = f.ord_at(end);
    let rg = g.ord_at(end);
    adaptive(cfg, |hi| {
        let fe = log_factored(f, end, hi, cfg)?;
        let ge = log_factored(g, end, hi, cfg)?;
        let he = h.h.expand(end, hi, cfg)?;
        let mut v = triple_index_canonical(&fe, &ge, &he)?;
        if rf != 0 {
            v = v - aux.i_gdh.expand(end, hi, cfg)?.constant_term()? * ring.int(rf);
        }
        if rg != 0 {
            v = v - aux.i_fdh.expand(end, hi, cfg)?.constant_term()? * ring.int(rg);
        }
        Ok(v)
    })
}

/// `Σ_e ⟨log f, log g; H⟩_e` over the ends of `u`.
pub fn global_triple_index(
    f: &Factored,
    g: &Factored,
    h: &ThirdSlot,
    aux: &GlobalAux,
    u: &WideOpen,
    cfg: &PadicConfig,
) -> Result<GlobalIndex> {
    check_on(u, &f.support(), "log f")?;
    check_on(u, &g.support(), "log g")?;
    check_on(u, &singular_points(&h.h), "H")?;
    let mut total = cfg.ring().zero();
    let mut per_end = Vec::new();
    for e in u.ends() {
        let v = local_triple_index(f, g, h, aux, e, cfg)?;
        total = total + &v;
        per_end.push((e.clone(), v));
    }
    Ok(GlobalIndex { total, per_end })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::p1geom::q;

    fn cfg() -> PadicConfig {
        PadicConfig::new(7, 12).unwrap()
    }

    fn lin(c: i64, a: i64, m: i64) -> Factored {
        Factored::new(q(c), [(q(a), m)])
    }

    #[test]
    fn reciprocity_on_three_points() {
        let c = cfg();
        let f = Factored::new(q(2), [(q(2), 1), (q(5), -2)]);
        let g = lin(-1, 5, 1);
        let h = ThirdSlot::log(&Factored::new(q(3), [(q(2), 2), (q(5), 1)]), &c).unwrap();
        let u = WideOpen::new(7, [Point::int(2), Point::int(5)]).unwrap();
        let aux = GlobalAux::canonical(&f, &g, &h, &c).unwrap();
        let gi = global_triple_index(&f, &g, &h, &aux, &u, &c).unwrap();
        assert!(gi.total.valuation_bound() >= 12, "{:?}", gi);
        assert!(gi.nonzero_terms(12) >= 2, "{:?}", gi.per_end);
        let shifted = aux.shifted(&c.ring().int(5), &c.ring().frac(1, 3));
        let gs = global_triple_index(&f, &g, &h, &shifted, &u, &c).unwrap();
        assert!((gs.total - gi.total).valuation_bound() >= 12);
    }

    #[test]
    fn constant_third_argument() {
        let c = cfg();
        let f = lin(1, 0, 1);
        let g = lin(-1, 1, 1);
        let h = ThirdSlot::new(ColemanExpression::constant(c.ring(), c.ring().int(4)), &c).unwrap();
        let u = WideOpen::new(7, [Point::int(0), Point::int(1)]).unwrap();
        let aux = GlobalAux::canonical(&f, &g, &h, &c).unwrap().shifted(&c.ring().int(2), &c.ring().int(9));
        let gi = global_triple_index(&f, &g, &h, &aux, &u, &c).unwrap();
        assert!(gi.total.valuation_bound() >= 12);
        assert!(gi.nonzero_terms(12) >= 2);
    }

    #[test]
    fn singular_outside_ends_rejected() {
        let c = cfg();
        let f = lin(1, 0, 1);
        let h = ThirdSlot::log(&lin(1, 3, 1), &c).unwrap();
        let u = WideOpen::new(7, [Point::int(0)]).unwrap();
        let aux = GlobalAux::canonical(&f, &f, &h, &c).unwrap();
        assert!(matches!(global_triple_index(&f, &f, &h, &aux, &u, &c), Err(Error::NotAPrimeOnEnd(_))));
    }
}
