//! Truncated Laurent series and polynomials in `log z` over them.
//!
//! A [`LaurentSeries`] knows its coefficients on a window `[lo, hi)`.
//! Everything below `lo` is zero; everything from `hi` on is unknown unless
//! the series is marked exact, in which case it is zero.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::padic::{Padic, Ring};

#[derive(Clone, Debug)]
pub struct LaurentSeries {
    ring: Ring,
    lo: i64,
    coeffs: Vec<Padic>,
    exact: bool,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl LaurentSeries {
    pub fn new(ring: Ring, lo: i64, coeffs: Vec<Padic>, exact: bool) -> Self {
        LaurentSeries { ring, lo, coeffs, exact }
    }

    pub fn zero(ring: Ring) -> Self {
        LaurentSeries { ring, lo: 0, coeffs: Vec::new(), exact: true }
    }

    pub fn constant(ring: Ring, c: Padic) -> Self {
        LaurentSeries::monomial(ring, c, 0)
    }

    /// `c z^n`, exact.
    pub fn monomial(ring: Ring, c: Padic, n: i64) -> Self {
        LaurentSeries { ring, lo: n, coeffs: vec![c], exact: true }
    }

    /// The parameter `z`.
    pub fn z(ring: Ring) -> Self {
        LaurentSeries::monomial(ring, ring.one(), 1)
    }

    /// Series whose coefficients are produced by `f` on `[lo, hi)`.
    pub fn from_fn(ring: Ring, lo: i64, hi: i64, mut f: impl FnMut(i64) -> Padic) -> Self {
        let coeffs = (lo..hi.max(lo)).map(&mut f).collect();
        LaurentSeries { ring, lo, coeffs, exact: false }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
    pub fn lo(&self) -> i64 {
        self.lo
    }
    /// End of the stored coefficients.
    pub fn stored_hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64
    }
    /// End of the reliable window, `None` when all later coefficients are zero.
    pub fn hi(&self) -> Option<i64> {
        if self.exact {
            None
        } else {
            Some(self.stored_hi())
        }
    }
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn coeff(&self, n: i64) -> Result<Padic> {
        if n < self.lo {
            return Ok(self.ring.zero());
        }
        let i = (n - self.lo) as usize;
        if i < self.coeffs.len() {
            Ok(self.coeffs[i].clone())
        } else if self.exact {
            Ok(self.ring.zero())
        } else {
            Err(Error::WindowExhausted(n))
        }
    }

    fn coeff_or_zero(&self, n: i64) -> Padic {
        self.coeff(n).unwrap_or_else(|_| self.ring.zero())
    }

    /// Iterates over stored `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Padic)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// True when every known coefficient vanishes.
    pub fn is_known_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the series is a constant on its window.
    pub fn is_constant(&self) -> bool {
        self.terms().all(|(n, c)| n == 0 || c.is_zero())
    }

    /// Exponent of the first nonzero known coefficient.
    pub fn order(&self) -> Option<i64> {
        self.terms().find(|(_, c)| !c.is_zero()).map(|(n, _)| n)
    }

    /// Forgets coefficients from `hi` on.
    pub fn truncate(&self, hi: i64) -> Self {
        if let Some(h) = self.hi() {
            if h <= hi {
                return self.clone();
            }
        }
        let lo = self.lo.min(hi);
        let coeffs = (lo..hi).map(|n| self.coeff_or_zero(n)).collect();
        LaurentSeries { ring: self.ring, lo, coeffs, exact: false }
    }

    /// Drops trailing zero coefficients of an exact series.
    fn normalize(mut self) -> Self {
        if self.exact {
            while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                self.coeffs.pop();
            }
            let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
            if lead > 0 {
                self.coeffs.drain(..lead);
                self.lo += lead as i64;
            }
        }
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let lo = self.lo.min(o.lo);
        let hi = min_opt(self.hi(), o.hi());
        let end = hi.unwrap_or(self.stored_hi().max(o.stored_hi()));
        let coeffs = (lo..end.max(lo))
            .map(|n| self.coeff_or_zero(n) + o.coeff_or_zero(n))
            .collect();
        LaurentSeries { ring: self.ring, lo, coeffs, exact: hi.is_none() }.normalize()
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            ring: self.ring,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            exact: self.exact,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Padic) -> Self {
        LaurentSeries {
            ring: self.ring,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            exact: self.exact,
        }
        .normalize()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if (self.exact && self.coeffs.is_empty()) || (o.exact && o.coeffs.is_empty()) {
            return LaurentSeries::zero(self.ring);
        }
        let lo = self.lo + o.lo;
        let hi = min_opt(self.hi().map(|h| h + o.lo), o.hi().map(|h| h + self.lo));
        let end = hi.unwrap_or(self.stored_hi() + o.stored_hi() - 1);
        let mut coeffs = Vec::with_capacity((end - lo).max(0) as usize);
        for n in lo..end.max(lo) {
            let mut acc = self.ring.zero();
            for (i, a) in self.terms() {
                let j = n - i;
                if j < o.lo {
                    break;
                }
                if j >= o.stored_hi() {
                    continue;
                }
                acc = acc + a * &o.coeffs[(j - o.lo) as usize];
            }
            coeffs.push(acc);
        }
        LaurentSeries { ring: self.ring, lo, coeffs, exact: hi.is_none() }.normalize()
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { ring: self.ring, lo: self.lo + k, coeffs: self.coeffs.clone(), exact: self.exact }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.terms().map(|(n, c)| c.mul_int(n).truncate(c.precision())).collect();
        LaurentSeries { ring: self.ring, lo: self.lo - 1, coeffs, exact: self.exact }.normalize()
    }

    /// Termwise antiderivative, ignoring the `z^-1` coefficient, with zero constant term.
    pub fn integrate_without_residue(&self) -> Self {
        let coeffs = self
            .terms()
            .map(|(n, c)| if n == -1 { self.ring.zero() } else { c.div_int(n + 1) })
            .collect();
        LaurentSeries { ring: self.ring, lo: self.lo + 1, coeffs, exact: self.exact }.normalize()
    }

    /// Multiplicative inverse, requiring a known nonzero leading coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let m = self.order().ok_or(Error::InsufficientPrecision("inverting a series with no known nonzero coefficient"))?;
        let lead = self.coeff(m)?;
        let lead_inv = lead.inv()?;
        let unit = self.shift(-m).scale(&lead_inv);
        // unit = 1 + t with t of order >= 1
        let len = match unit.hi() {
            Some(h) => h,
            None if unit.stored_hi() <= 1 => 1,
            None => return Err(Error::InsufficientPrecision("inverse of a polynomial needs a window")),
        };
        let mut inv = vec![self.ring.one()];
        for n in 1..len {
            let mut acc = self.ring.zero();
            for k in 1..=n {
                acc = acc + unit.coeff_or_zero(k) * &inv[(n - k) as usize];
            }
            inv.push(-acc);
        }
        let exact = unit.exact && unit.stored_hi() <= 1;
        Ok(LaurentSeries { ring: self.ring, lo: 0, coeffs: inv, exact }.scale(&lead_inv).shift(-m))
    }

    /// Inverse computed on a window of the given length when the input is an exact polynomial.
    pub fn inverse_to(&self, len: i64) -> Result<Self> {
        if self.exact && self.stored_hi() - self.lo > 1 {
            let m = self.order().unwrap_or(self.lo);
            return self.truncate(m + len).inverse();
        }
        self.inverse()
    }

    pub fn pow(&self, n: i64, window: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse_to(window)? } else { self.clone() };
        let mut acc = LaurentSeries::constant(self.ring, self.ring.one());
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// `Σ c_n s^n` for a substitution `s` of order exactly one.
    ///
    /// `window` bounds the length used for inverses of exact polynomials.
    pub fn compose(&self, s: &Self, window: i64) -> Result<Self> {
        if s.order() != Some(1) {
            return Err(Error::Invalid("substitution must have order one".into()));
        }
        let mut acc = LaurentSeries::zero(self.ring);
        if self.lo < 0 {
            let sinv = s.inverse_to(window)?;
            let mut pw = sinv.clone();
            for n in 1..=(-self.lo) {
                acc = acc.add(&pw.scale(&self.coeff_or_zero(-n)));
                pw = pw.mul(&sinv);
            }
        }
        let mut pw = LaurentSeries::constant(self.ring, self.ring.one());
        let end = self.stored_hi();
        for n in 0..end {
            if n >= self.lo {
                acc = acc.add(&pw.scale(&self.coeff_or_zero(n)));
            }
            pw = pw.mul(s);
        }
        if let Some(h) = self.hi() {
            acc = acc.truncate(h.max(acc.lo));
        }
        Ok(acc)
    }

    /// `log(u)` for a power series `u` with `u(0) = 1`.
    pub fn log_of_unit(&self, window: i64) -> Result<Self> {
        let one = LaurentSeries::constant(self.ring, self.ring.one());
        let t = self.sub(&one);
        if t.is_known_zero() {
            return Ok(match t.hi() {
                None => LaurentSeries::zero(self.ring),
                Some(h) => LaurentSeries::from_fn(self.ring, 0, h, |_| self.ring.zero()),
            });
        }
        let ord = t.order().unwrap_or(1);
        if ord < 1 || t.lo < 0 {
            return Err(Error::Invalid("log of a series with nonconstant leading part".into()));
        }
        let t = t.truncate(t.hi().unwrap_or(window).min(window));
        let h = t.hi().unwrap_or(0);
        let mut acc = LaurentSeries::from_fn(self.ring, 0, h, |_| self.ring.zero());
        let mut pw = t.clone();
        let mut k = 1;
        while k * ord < h {
            let term = pw.scale(&self.ring.one().div_int(k));
            acc = if k % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
            pw = pw.mul(&t);
            k += 1;
        }
        Ok(acc)
    }

    /// Smallest valuation bound of the difference on the shared window.
    pub fn discrepancy(&self, o: &Self) -> i64 {
        let d = self.sub(o);
        d.coeffs.iter().map(|c| c.valuation_bound()).min().unwrap_or(i64::MAX)
    }
}

/// `Σ_i f_i(z) log^i z`.
#[derive(Clone, Debug)]
pub struct LogLaurent {
    ring: Ring,
    comps: Vec<LaurentSeries>,
}

impl LogLaurent {
    pub fn new(ring: Ring, comps: Vec<LaurentSeries>) -> Self {
        LogLaurent { ring, comps }.normalize()
    }

    pub fn zero(ring: Ring) -> Self {
        LogLaurent { ring, comps: Vec::new() }
    }

    pub fn from_series(f: LaurentSeries) -> Self {
        LogLaurent::new(f.ring(), vec![f])
    }

    pub fn constant(ring: Ring, c: Padic) -> Self {
        LogLaurent::from_series(LaurentSeries::constant(ring, c))
    }

    /// `log z`.
    pub fn log_z(ring: Ring) -> Self {
        LogLaurent::new(ring, vec![LaurentSeries::zero(ring), LaurentSeries::constant(ring, ring.one())])
    }

    fn normalize(mut self) -> Self {
        while self.comps.last().is_some_and(|c| c.is_known_zero()) {
            if self.comps.len() == 1 {
                break;
            }
            self.comps.pop();
        }
        self
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Log-degree; components whose known coefficients vanish do not count.
    pub fn degree(&self) -> usize {
        self.comps.len().saturating_sub(1)
    }

    pub fn component(&self, i: usize) -> LaurentSeries {
        self.comps.get(i).cloned().unwrap_or_else(|| LaurentSeries::zero(self.ring))
    }

    pub fn components(&self) -> &[LaurentSeries] {
        &self.comps
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.comps.len().max(o.comps.len());
        LogLaurent::new(self.ring, (0..n).map(|i| self.component(i).add(&o.component(i))).collect())
    }

    pub fn neg(&self) -> Self {
        LogLaurent { ring: self.ring, comps: self.comps.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Padic) -> Self {
        LogLaurent::new(self.ring, self.comps.iter().map(|f| f.scale(c)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.comps.is_empty() || o.comps.is_empty() {
            return LogLaurent::zero(self.ring);
        }
        let n = self.comps.len() + o.comps.len() - 1;
        let mut out = vec![LaurentSeries::zero(self.ring); n];
        for (i, a) in self.comps.iter().enumerate() {
            for (j, b) in o.comps.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        LogLaurent::new(self.ring, out)
    }

    pub fn mul_series(&self, f: &LaurentSeries) -> Self {
        LogLaurent::new(self.ring, self.comps.iter().map(|c| c.mul(f)).collect())
    }

    pub fn truncate(&self, hi: i64) -> Self {
        LogLaurent::new(self.ring, self.comps.iter().map(|c| c.truncate(hi)).collect())
    }

    /// `dF = Σ (f_i' + (i+1) f_{i+1} / z) log^i z dz`.
    pub fn differential(&self) -> LogForm {
        let d = self.comps.len();
        let comps = (0..d)
            .map(|i| {
                let mut c = self.comps[i].derivative();
                if i + 1 < d {
                    c = c.add(&self.comps[i + 1].shift(-1).scale(&self.ring.int(i as i64 + 1)));
                }
                c
            })
            .collect();
        LogForm::new(LogLaurent::new(self.ring, comps))
    }

    /// Constant coefficient of the log-free component.
    pub fn constant_term(&self) -> Result<Padic> {
        self.component(0).coeff(0)
    }

    /// `Some(α)` when `F = α log z + f` with `f` meromorphic.
    pub fn in_alog_prime(&self) -> Option<Padic> {
        match self.comps.len() {
            0 | 1 => Some(self.ring.zero()),
            2 if self.comps[1].is_constant() => Some(self.comps[1].coeff(0).unwrap_or_else(|_| self.ring.zero())),
            _ => None,
        }
    }

    /// Splits `F = α log z + f`.
    pub fn split_alog_prime(&self) -> Result<(Padic, LaurentSeries)> {
        let a = self.in_alog_prime().ok_or(Error::NotInAPrime)?;
        Ok((a, self.component(0)))
    }

    /// Rewrites `F` in the parameter `w` with `z = c w u(w)`, `u(0) = 1`.
    pub fn reparametrize(&self, c: &Padic, u: &LaurentSeries, branch: &Padic, window: i64) -> Result<Self> {
        let s = LaurentSeries::z(self.ring).mul(u).scale(c);
        let shiftlog = LogLaurent::new(
            self.ring,
            vec![
                u.log_of_unit(window)?.add(&LaurentSeries::constant(self.ring, c.log(branch)?)),
                LaurentSeries::constant(self.ring, self.ring.one()),
            ],
        );
        let mut acc = LogLaurent::zero(self.ring);
        let mut pw = LogLaurent::constant(self.ring, self.ring.one());
        for (i, f) in self.comps.iter().enumerate() {
            if i > 0 {
                pw = pw.mul(&shiftlog);
            }
            let g = f.compose(&s, window)?;
            acc = acc.add(&pw.mul_series(&g));
        }
        Ok(acc)
    }

    /// Smallest valuation bound of the difference over all components.
    pub fn discrepancy(&self, o: &Self) -> i64 {
        let n = self.comps.len().max(o.comps.len());
        (0..n).map(|i| self.component(i).discrepancy(&o.component(i))).min().unwrap_or(i64::MAX)
    }
}

/// `coef · dz`.
#[derive(Clone, Debug)]
pub struct LogForm {
    pub coef: LogLaurent,
}

impl LogForm {
    pub fn new(coef: LogLaurent) -> Self {
        LogForm { coef }
    }

    pub fn ring(&self) -> Ring {
        self.coef.ring()
    }

    /// `R dS`.
    pub fn product(r: &LogLaurent, s: &LogLaurent) -> Self {
        LogForm::new(r.mul(&s.differential().coef))
    }

    pub fn add(&self, o: &Self) -> Self {
        LogForm::new(self.coef.add(&o.coef))
    }

    pub fn scale(&self, c: &Padic) -> Self {
        LogForm::new(self.coef.scale(c))
    }

    /// Coefficient of `z^-1 dz`; the form must be free of logarithms.
    pub fn residue(&self) -> Result<Padic> {
        let d = self.coef.degree();
        if d > 0 {
            return Err(Error::NotMeromorphic(d));
        }
        self.coef.component(0).coeff(-1)
    }

    /// Antiderivative with vanishing constant term.
    pub fn integrate(&self) -> Result<LogLaurent> {
        let ring = self.ring();
        let d = self.coef.degree();
        let g: Vec<LaurentSeries> = (0..=d).map(|i| self.coef.component(i)).collect();
        let mut out = vec![LaurentSeries::zero(ring); d + 2];
        // out[i+1] holds the nonconstant part until its constant is fixed at level i.
        for i in (0..=d).rev() {
            let k = g[i].coeff(-1)?.div_int(i as i64 + 1);
            out[i + 1] = out[i + 1].add(&LaurentSeries::constant(ring, k));
            let fhat_next = out[i + 1].sub(&LaurentSeries::constant(ring, out[i + 1].coeff(0)?));
            let s = g[i].sub(&fhat_next.shift(-1).scale(&ring.int(i as i64 + 1)));
            out[i] = s.integrate_without_residue();
        }
        Ok(LogLaurent::new(ring, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> Ring {
        Ring::new(7, 20)
    }

    fn geometric(h: i64) -> LaurentSeries {
        LaurentSeries::from_fn(r(), 0, h, |_| r().one())
    }

    #[test]
    fn z_times_inverse_is_one() {
        let z = LaurentSeries::z(r());
        let p = z.mul(&z.inverse().unwrap());
        assert!(p.is_exact());
        assert_eq!(p.coeff(0).unwrap(), r().one());
    }

    #[test]
    fn geometric_times_one_minus_z() {
        let one_minus_z = LaurentSeries::new(r(), 0, vec![r().one(), r().int(-1)], true);
        let p = geometric(10).mul(&one_minus_z);
        assert_eq!(p.hi(), Some(10));
        assert_eq!(p.coeff(0).unwrap(), r().one());
        for n in 1..10 {
            assert!(p.coeff(n).unwrap().is_zero());
        }
        assert!(p.coeff(10).is_err());
    }

    #[test]
    fn log_squared_has_degree_two() {
        let l = LogLaurent::log_z(r());
        let l2 = l.mul(&l);
        assert_eq!(l2.degree(), 2);
        assert_eq!(l2.component(2).coeff(0).unwrap(), r().one());
    }

    #[test]
    fn differential_of_log_and_z_log() {
        let l = LogLaurent::log_z(r());
        let d = l.differential();
        assert_eq!(d.residue().unwrap(), r().one());
        let zl = l.mul_series(&LaurentSeries::z(r()));
        let dz = zl.differential().coef;
        assert_eq!(dz.component(1).coeff(0).unwrap(), r().one());
        assert_eq!(dz.component(0).coeff(0).unwrap(), r().one());
    }

    #[test]
    fn integrate_basic_forms() {
        let dzz = LogForm::new(LogLaurent::from_series(LaurentSeries::monomial(r(), r().one(), -1)));
        let f = dzz.integrate().unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.component(1).coeff(0).unwrap(), r().one());
        let l = LogLaurent::log_z(r());
        let g = LogForm::new(l.mul_series(&LaurentSeries::monomial(r(), r().one(), -1))).integrate().unwrap();
        assert_eq!(g.component(2).coeff(0).unwrap(), r().frac(1, 2));
        let h = LogForm::new(l.clone()).integrate().unwrap();
        assert_eq!(h.component(1).coeff(1).unwrap(), r().one());
        assert_eq!(h.component(0).coeff(1).unwrap(), r().int(-1));
    }

    #[test]
    fn constant_terms() {
        let f = LogLaurent::new(
            r(),
            vec![LaurentSeries::new(r(), 0, vec![r().int(3), r().one()], true), LaurentSeries::constant(r(), r().one())],
        );
        assert_eq!(f.constant_term().unwrap(), r().int(3));
        assert!(LogLaurent::log_z(r()).constant_term().unwrap().is_zero());
    }

    #[test]
    fn reparametrize_log_by_scalar() {
        let b = r().int(2);
        let alpha = r().int(3);
        let one = LaurentSeries::constant(r(), r().one());
        let g = LogLaurent::log_z(r()).reparametrize(&alpha, &one, &b, 16).unwrap();
        assert_eq!(g.constant_term().unwrap(), alpha.log(&b).unwrap());
        let z = LogLaurent::from_series(LaurentSeries::z(r()));
        let z2 = z.reparametrize(&r().int(2), &one, &b, 16).unwrap();
        assert_eq!(z2.component(0).coeff(1).unwrap(), r().int(2));
    }

    #[test]
    fn reparametrize_inverse_by_one_plus_z() {
        let u = LaurentSeries::new(r(), 0, vec![r().one(), r().one()], true);
        let f = LogLaurent::from_series(LaurentSeries::monomial(r(), r().one(), -1));
        let g = f.reparametrize(&r().one(), &u, &r().zero(), 12).unwrap().component(0);
        for n in -1..8 {
            let expect = if (n + 1) % 2 == 0 { r().one() } else { r().int(-1) };
            assert_eq!(g.coeff(n).unwrap(), expect, "n = {n}");
        }
    }

    #[test]
    fn alog_prime_membership() {
        let f = LogLaurent::from_series(LaurentSeries::z(r()));
        assert!(f.in_alog_prime().unwrap().is_zero());
        let g = LogLaurent::log_z(r()).scale(&r().int(2)).add(&LogLaurent::from_series(LaurentSeries::monomial(r(), r().one(), -1)));
        assert_eq!(g.in_alog_prime().unwrap(), r().int(2));
        let l = LogLaurent::log_z(r());
        assert!(l.mul(&l).in_alog_prime().is_none());
    }

    #[test]
    fn residue_errors() {
        let l = LogLaurent::log_z(r());
        assert_eq!(LogForm::new(l).residue(), Err(Error::NotMeromorphic(1)));
        let g = LogForm::new(LogLaurent::from_series(geometric(5)));
        assert!(g.residue().unwrap().is_zero());
        let g = LogForm::new(LogLaurent::from_series(geometric(5).shift(3)));
        assert!(g.residue().unwrap().is_zero());
    }

    #[test]
    fn log_of_unit_series() {
        // log(1/(1-z)) = Σ z^n / n
        let l = geometric(12).log_of_unit(12).unwrap();
        for n in 1..12 {
            assert_eq!(l.coeff(n).unwrap(), r().one().div_int(n));
        }
    }
}
