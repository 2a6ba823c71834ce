//! Double and triple indices on `K((z)) + K log z`.

use crate::error::{Error, Result};
use crate::padic::Padic;
use crate::series::{LaurentSeries, LogForm, LogLaurent};

/// `⟨F, G⟩`, the antisymmetric extension of `res F dG`.
pub fn double_index(f: &LogLaurent, g: &LogLaurent) -> Result<Padic> {
    let (a, fm) = f.split_alog_prime()?;
    let (b, gm) = g.split_alog_prime()?;
    let ring = f.ring();
    let fm = LogLaurent::from_series(fm);
    let gm = LogLaurent::from_series(gm);
    let r = LogForm::product(&fm, &gm).residue()?;
    let cf = fm.constant_term()?;
    let cg = gm.constant_term()?;
    Ok(r + b * cf - a * cg + ring.zero())
}

/// Antiderivative of `R dS` with vanishing constant term.
pub fn pint(r: &LogLaurent, s: &LogLaurent) -> Result<LogLaurent> {
    LogForm::product(r, s).integrate()
}

/// Three functions together with chosen integrals `∫G dH`, `∫F dH`, `∫F dG`.
#[derive(Clone, Debug)]
pub struct TripleData {
    pub f: LogLaurent,
    pub g: LogLaurent,
    pub h: LogLaurent,
    pub i_gdh: LogLaurent,
    pub i_fdh: LogLaurent,
    pub i_fdg: LogLaurent,
}

/// Optional replacements for the canonical integrals.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub i_gdh: Option<LogLaurent>,
    pub i_fdh: Option<LogLaurent>,
    pub i_fdg: Option<LogLaurent>,
}

fn checked_override(name: &'static str, canonical: LogLaurent, user: Option<LogLaurent>) -> Result<LogLaurent> {
    let Some(u) = user else { return Ok(canonical) };
    let diff = u.sub(&canonical);
    if diff.degree() > 0 || !diff.component(0).is_constant() {
        return Err(Error::InvalidAuxIntegral(name));
    }
    Ok(u)
}

impl TripleData {
    /// Canonical data, with any overrides validated against it.
    pub fn new(f: LogLaurent, g: LogLaurent, h: LogLaurent, ov: Overrides) -> Result<Self> {
        for x in [&f, &g, &h] {
            x.in_alog_prime().ok_or(Error::NotInAPrime)?;
        }
        let i_gdh = checked_override("GdH", pint(&g, &h)?, ov.i_gdh)?;
        let i_fdh = checked_override("FdH", pint(&f, &h)?, ov.i_fdh)?;
        let i_fdg = checked_override("FdG", pint(&f, &g)?, ov.i_fdg)?;
        Ok(TripleData { f, g, h, i_gdh, i_fdh, i_fdg })
    }

    pub fn canonical(f: LogLaurent, g: LogLaurent, h: LogLaurent) -> Result<Self> {
        TripleData::new(f, g, h, Overrides::default())
    }

    pub fn i_hdg(&self) -> LogLaurent {
        self.g.mul(&self.h).sub(&self.i_gdh)
    }
    pub fn i_hdf(&self) -> LogLaurent {
        self.f.mul(&self.h).sub(&self.i_fdh)
    }
    pub fn i_gdf(&self) -> LogLaurent {
        self.f.mul(&self.g).sub(&self.i_fdg)
    }

    /// Data for `⟨G, F; H⟩`.
    pub fn swap_fg(&self) -> Self {
        TripleData {
            f: self.g.clone(),
            g: self.f.clone(),
            h: self.h.clone(),
            i_gdh: self.i_fdh.clone(),
            i_fdh: self.i_gdh.clone(),
            i_fdg: self.i_gdf(),
        }
    }

    /// Data for `⟨F, H; G⟩`.
    pub fn swap_gh(&self) -> Self {
        TripleData {
            f: self.f.clone(),
            g: self.h.clone(),
            h: self.g.clone(),
            i_gdh: self.i_hdg(),
            i_fdh: self.i_fdg.clone(),
            i_fdg: self.i_fdh.clone(),
        }
    }
}

/// Slots of the trilinear expansion: either `α log z` or a meromorphic part.
#[derive(Clone)]
enum Piece {
    Log(Padic),
    Mer(LogLaurent),
}

impl Piece {
    fn as_loglaurent(&self, proto: &LogLaurent) -> LogLaurent {
        match self {
            Piece::Log(a) => LogLaurent::log_z(proto.ring()).scale(a),
            Piece::Mer(m) => m.clone(),
        }
    }
}

fn pieces(x: &LogLaurent) -> Result<[Piece; 2]> {
    let (a, m) = x.split_alog_prime()?;
    Ok([Piece::Log(a), Piece::Mer(LogLaurent::from_series(m))])
}

/// Value on one slot combination with pint-normalised internal integrals.
fn elementary(f: &Piece, g: &Piece, h: &Piece, proto: &LogLaurent) -> Result<Padic> {
    let ring = proto.ring();
    let fl = f.as_loglaurent(proto);
    let gl = g.as_loglaurent(proto);
    let hl = h.as_loglaurent(proto);
    match (f, g, h) {
        (Piece::Log(_), Piece::Log(_), Piece::Log(_)) => Ok(ring.zero()),
        (_, Piece::Mer(_), _) => double_index(&fl, &pint(&gl, &hl)?),
        (Piece::Mer(_), Piece::Log(_), _) => double_index(&gl, &pint(&fl, &hl)?),
        (Piece::Log(_), Piece::Log(_), Piece::Mer(_)) => {
            // ⟨F,G;H⟩ = −⟨F,H;G⟩ − ⟨G,H;F⟩, each reducing to the double index
            let a = double_index(&fl, &pint(&hl, &gl)?)?;
            let b = double_index(&gl, &pint(&hl, &fl)?)?;
            Ok(-(a + b))
        }
    }
}

/// Triple index with pint-normalised data.
pub fn triple_index_canonical(f: &LogLaurent, g: &LogLaurent, h: &LogLaurent) -> Result<Padic> {
    let mut acc = f.ring().zero();
    for a in pieces(f)?.iter() {
        for b in pieces(g)?.iter() {
            for c in pieces(h)?.iter() {
                acc = acc + elementary(a, b, c, f)?;
            }
        }
    }
    Ok(acc)
}

/// `⟨F, G; H⟩` for the given auxiliary data.
pub fn triple_index(d: &TripleData) -> Result<Padic> {
    let base = triple_index_canonical(&d.f, &d.g, &d.h)?;
    // canonical data has zero constant terms, so the offsets are the constant terms themselves
    let c_gdh = d.i_gdh.constant_term()?;
    let c_fdh = d.i_fdh.constant_term()?;
    let res_df = d.f.differential().residue()?;
    let res_dg = d.g.differential().residue()?;
    Ok(base - c_gdh * res_df - c_fdh * res_dg)
}

/// Compact closed form of the canonical triple index, used as an independent route.
pub fn triple_index_compact(f: &LogLaurent, g: &LogLaurent, h: &LogLaurent) -> Result<Padic> {
    let (_, fm) = f.split_alog_prime()?;
    let (b, gm) = g.split_alog_prime()?;
    let fm = LogLaurent::from_series(fm);
    let gm = LogLaurent::from_series(gm);
    let bl = LogLaurent::log_z(f.ring()).scale(&b);
    Ok(double_index(f, &pint(&gm, h)?)? + double_index(&bl, &pint(&fm, h)?)?)
}

fn has_simple_pole_at_most(x: &LogLaurent) -> Result<()> {
    let d = x.differential();
    if d.coef.degree() > 0 {
        return Err(Error::NotInAPrime);
    }
    let c = d.coef.component(0);
    for (n, a) in c.terms() {
        if n < -1 && !a.is_zero() {
            return Err(Error::NotSimplePole);
        }
    }
    Ok(())
}

/// `c(F) c(G) res dH − res dF · c(∫G dH) − res dG · c(∫F dH)` for differentials with simple poles.
pub fn triple_index_simple_pole(
    f: &LogLaurent,
    g: &LogLaurent,
    h: &LogLaurent,
    i_fdh: &LogLaurent,
    i_gdh: &LogLaurent,
) -> Result<Padic> {
    for x in [f, g, h] {
        has_simple_pole_at_most(x)?;
    }
    let cf = f.constant_term()?;
    let cg = g.constant_term()?;
    let rh = h.differential().residue()?;
    let rf = f.differential().residue()?;
    let rg = g.differential().residue()?;
    Ok(cf * cg * rh - rf * i_gdh.constant_term()? - rg * i_fdh.constant_term()?)
}

/// Meromorphic part helper for callers building inputs.
pub fn alog(alpha: Padic, f: LaurentSeries) -> LogLaurent {
    let ring = f.ring();
    LogLaurent::log_z(ring).scale(&alpha).add(&LogLaurent::from_series(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Ring;
    use alloc::vec;

    fn r() -> Ring {
        Ring::new(7, 20)
    }
    fn l() -> LogLaurent {
        LogLaurent::log_z(r())
    }
    fn mono(c: i64, n: i64) -> LogLaurent {
        LogLaurent::from_series(LaurentSeries::monomial(r(), r().int(c), n))
    }

    #[test]
    fn double_index_basics() {
        assert!(double_index(&l(), &l()).unwrap().is_zero());
        assert_eq!(double_index(&mono(1, -1), &mono(1, 1)).unwrap(), r().one());
        let f = l().add(&mono(2, -2)).add(&mono(3, 0));
        assert!(double_index(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn log_log_log_vanishes() {
        let d = TripleData::canonical(l(), l(), l()).unwrap();
        assert_eq!(d.i_gdh.component(2).coeff(0).unwrap(), r().frac(1, 2));
        assert!(triple_index(&d).unwrap().is_zero());
    }

    #[test]
    fn monomial_data() {
        let d = TripleData::canonical(mono(1, 1), mono(1, 2), mono(1, 3)).unwrap();
        assert_eq!(d.i_gdh.component(0).coeff(5).unwrap(), r().frac(3, 5));
    }

    #[test]
    fn override_shift_moves_partner() {
        let c = r().int(4);
        let base = TripleData::canonical(l(), mono(1, 1), l()).unwrap();
        let shifted = TripleData::new(
            l(),
            mono(1, 1),
            l(),
            Overrides { i_gdh: Some(base.i_gdh.add(&LogLaurent::constant(r(), c.clone()))), ..Default::default() },
        )
        .unwrap();
        assert_eq!(shifted.i_hdg().constant_term().unwrap(), base.i_hdg().constant_term().unwrap() - &c);
        let t0 = triple_index(&base).unwrap();
        let t1 = triple_index(&shifted).unwrap();
        assert_eq!(t0 - t1, c);
    }

    #[test]
    fn reduction_example() {
        let one = LogLaurent::constant(r(), r().one());
        let d = TripleData::new(l(), one, l(), Overrides { i_gdh: Some(l()), ..Default::default() }).unwrap();
        assert!(triple_index(&d).unwrap().is_zero());
    }

    #[test]
    fn invalid_override_rejected() {
        let e = TripleData::new(l(), l(), l(), Overrides { i_fdg: Some(mono(1, 1)), ..Default::default() });
        assert_eq!(e.unwrap_err(), Error::InvalidAuxIntegral("FdG"));
    }

    #[test]
    fn simple_pole_examples() {
        let p = |f: &LogLaurent, g: &LogLaurent, h: &LogLaurent| {
            triple_index_simple_pole(f, g, h, &pint(f, h).unwrap(), &pint(g, h).unwrap())
        };
        assert!(p(&l(), &l(), &l()).unwrap().is_zero());
        assert_eq!(p(&mono(3, 0), &mono(5, 0), &l()).unwrap(), r().int(15));
        assert_eq!(p(&mono(1, -1), &l(), &l()).unwrap_err(), Error::NotSimplePole);
    }

    #[test]
    fn compact_matches_recipe() {
        let f = l().scale(&r().int(2)).add(&LogLaurent::from_series(LaurentSeries::new(r(), -2, vec![r().int(1), r().int(3), r().int(5)], true)));
        let g = l().add(&mono(4, -1)).add(&mono(1, 2));
        let h = l().scale(&r().int(-3)).add(&mono(2, -3)).add(&mono(6, 1));
        assert_eq!(triple_index_canonical(&f, &g, &h).unwrap(), triple_index_compact(&f, &g, &h).unwrap());
    }
}
