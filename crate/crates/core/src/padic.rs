//! Elements of Q_p with tracked absolute precision.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `p^k` as a big integer.
pub fn ppow(p: u32, k: i64) -> BigUint {
    if k <= 0 {
        return BigUint::one();
    }
    num_traits::pow(BigUint::from(p), k as usize)
}

/// Splits `n != 0` as `p^v * m` with `p ∤ m`.
fn split_p(p: u32, n: &BigUint) -> (i64, BigUint) {
    let pb = BigUint::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return (v, m);
        }
        m = q;
        v += 1;
    }
}

/// Inverse of a unit modulo `p^k` by Newton lifting from an inverse mod p.
pub fn inv_mod_pk(u: &BigUint, p: u32, k: i64) -> BigUint {
    let pb = BigUint::from(p);
    let u0 = u % &pb;
    let mut x = u0.modpow(&BigUint::from(p - 2), &pb);
    let mut e = 1i64;
    while e < k {
        e = (2 * e).min(k);
        let m = ppow(p, e);
        let ux = (u % &m) * &x % &m;
        let two = BigUint::from(2u32);
        let t = (&two + &m - ux) % &m;
        x = x * t % &m;
    }
    x
}

/// Prime and absolute precision used to create constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ring {
    pub p: u32,
    pub prec: i64,
}

impl Ring {
    pub fn new(p: u32, prec: i64) -> Self {
        Ring { p, prec }
    }
    pub fn zero(&self) -> Padic {
        Padic::zero(self.p, self.prec)
    }
    pub fn one(&self) -> Padic {
        Padic::from_i64(self.p, 1, self.prec)
    }
    pub fn int(&self, n: i64) -> Padic {
        Padic::from_i64(self.p, n, self.prec)
    }
    pub fn bigint(&self, n: &BigInt) -> Padic {
        Padic::from_bigint(self.p, n, self.prec)
    }
    pub fn rat(&self, q: &BigRational) -> Padic {
        Padic::from_ratio(self.p, q, self.prec)
    }
    pub fn frac(&self, a: i64, b: i64) -> Padic {
        self.rat(&BigRational::new(BigInt::from(a), BigInt::from(b)))
    }
}

/// `p^val * unit`, known modulo `p^prec`.
///
/// A zero stores `val == prec` and `unit == 0`.
#[derive(Clone)]
pub struct Padic {
    p: u32,
    val: i64,
    unit: BigUint,
    prec: i64,
}

impl Padic {
    pub fn zero(p: u32, prec: i64) -> Self {
        Padic { p, val: prec, unit: BigUint::zero(), prec }
    }

    fn from_parts(p: u32, val: i64, unit: BigUint, prec: i64) -> Self {
        if val >= prec || unit.is_zero() {
            return Padic::zero(p, prec);
        }
        let rel = prec - val;
        let unit = unit % ppow(p, rel);
        if unit.is_zero() {
            return Padic::zero(p, prec);
        }
        let (s, m) = split_p(p, &unit);
        if s > 0 {
            return Padic::from_parts(p, val + s, m, prec);
        }
        Padic { p, val, unit, prec }
    }

    pub fn from_i64(p: u32, n: i64, prec: i64) -> Self {
        Padic::from_bigint(p, &BigInt::from(n), prec)
    }

    pub fn from_bigint(p: u32, n: &BigInt, prec: i64) -> Self {
        if n.is_zero() {
            return Padic::zero(p, prec);
        }
        let (v, m) = split_p(p, n.magnitude());
        if v >= prec {
            return Padic::zero(p, prec);
        }
        let x = Padic::from_parts(p, v, m, prec);
        if n.sign() == Sign::Minus {
            -x
        } else {
            x
        }
    }

    pub fn from_ratio(p: u32, q: &BigRational, prec: i64) -> Self {
        if q.is_zero() {
            return Padic::zero(p, prec);
        }
        let (vn, mn) = split_p(p, q.numer().magnitude());
        let (vd, md) = split_p(p, q.denom().magnitude());
        let v = vn - vd;
        if v >= prec {
            return Padic::zero(p, prec);
        }
        let rel = prec - v;
        let m = ppow(p, rel);
        let u = mn * inv_mod_pk(&md, p, rel) % m;
        let x = Padic::from_parts(p, v, u, prec);
        if q.is_negative() {
            -x
        } else {
            x
        }
    }

    /// Builds `p^val * Σ digits[i] p^i` known modulo `p^prec`.
    pub fn from_digits(p: u32, val: i64, digits: &[u32], prec: i64) -> Result<Self> {
        let mut u = BigUint::zero();
        for d in digits.iter().rev() {
            if *d >= p {
                return Err(Error::Invalid(alloc::format!("digit {} not below {}", d, p)));
            }
            u = u * p + *d;
        }
        Ok(Padic::from_parts(p, val, u, prec))
    }

    pub fn prime(&self) -> u32 {
        self.p
    }
    pub fn ring(&self) -> Ring {
        Ring::new(self.p, self.prec)
    }
    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }
    /// Valuation, `None` for a value indistinguishable from zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }
    /// Guaranteed lower bound for the valuation.
    pub fn valuation_bound(&self) -> i64 {
        self.val
    }
    pub fn precision(&self) -> i64 {
        self.prec
    }
    pub fn relative_precision(&self) -> i64 {
        self.prec - self.val
    }
    pub fn unit_part(&self) -> &BigUint {
        &self.unit
    }

    /// Unit digits, least significant first.
    pub fn to_digits(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut u = self.unit.clone();
        for _ in 0..self.relative_precision() {
            let (q, r) = u.div_rem(&BigUint::from(self.p));
            out.push(r.to_u32().unwrap_or(0));
            u = q;
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Lowers the absolute precision to at most `prec`.
    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        Padic::from_parts(self.p, self.val, self.unit.clone(), prec)
    }

    /// Symmetric representative as a rational number (exact when the value is an integer).
    pub fn to_rational(&self) -> BigRational {
        let rel = self.relative_precision().max(0);
        let m = BigInt::from(ppow(self.p, rel));
        let mut u = BigInt::from(self.unit.clone());
        if &u * 2 > m {
            u -= &m;
        }
        let pv = BigInt::from(ppow(self.p, self.val.abs()));
        if self.val >= 0 {
            BigRational::from_integer(u * pv)
        } else {
            BigRational::new(u, pv)
        }
    }

    fn check(&self, other: &Padic) {
        assert_eq!(self.p, other.p, "mismatched primes");
    }

    pub fn add_ref(&self, o: &Padic) -> Padic {
        self.check(o);
        let prec = self.prec.min(o.prec);
        if self.is_zero() {
            return o.truncate(prec);
        }
        if o.is_zero() {
            return self.truncate(prec);
        }
        let v = self.val.min(o.val);
        if v >= prec {
            return Padic::zero(self.p, prec);
        }
        let a = &self.unit * ppow(self.p, self.val - v);
        let b = &o.unit * ppow(self.p, o.val - v);
        Padic::from_parts(self.p, v, a + b, prec)
    }

    pub fn mul_ref(&self, o: &Padic) -> Padic {
        self.check(o);
        let prec = (self.val + o.prec).min(o.val + self.prec);
        if self.is_zero() || o.is_zero() {
            return Padic::zero(self.p, prec);
        }
        Padic::from_parts(self.p, self.val + o.val, &self.unit * &o.unit, prec)
    }

    pub fn checked_div(&self, o: &Padic) -> Result<Padic> {
        self.check(o);
        if o.is_zero() {
            return Err(Error::InsufficientPrecision("division by a value indistinguishable from zero"));
        }
        let rel = self.relative_precision().min(o.relative_precision());
        let val = self.val - o.val;
        if self.is_zero() {
            return Ok(Padic::zero(self.p, self.prec - o.val));
        }
        let u = &self.unit * inv_mod_pk(&o.unit, self.p, rel);
        Ok(Padic::from_parts(self.p, val, u, val + rel))
    }

    pub fn inv(&self) -> Result<Padic> {
        Padic::from_i64(self.p, 1, self.relative_precision().max(1)).checked_div(self)
    }

    /// Exact multiplication by an integer.
    pub fn mul_int(&self, k: i64) -> Padic {
        self.mul_big(&BigInt::from(k))
    }

    pub fn mul_big(&self, k: &BigInt) -> Padic {
        if k.is_zero() {
            return Padic::zero(self.p, i64::MAX / 4);
        }
        let (e, m) = split_p(self.p, k.magnitude());
        let x = Padic::from_parts(self.p, self.val + e, &self.unit * m, self.prec + e);
        if k.is_negative() {
            -x
        } else {
            x
        }
    }

    /// Exact division by a nonzero integer.
    pub fn div_int(&self, k: i64) -> Padic {
        assert!(k != 0, "division by zero integer");
        let (e, m) = split_p(self.p, &BigUint::from(k.unsigned_abs()));
        let rel = self.relative_precision();
        let u = if self.is_zero() {
            BigUint::zero()
        } else {
            &self.unit * inv_mod_pk(&m, self.p, rel.max(1))
        };
        let x = Padic::from_parts(self.p, self.val - e, u, self.prec - e);
        if k < 0 {
            -x
        } else {
            x
        }
    }

    /// Exact multiplication by a rational number.
    pub fn mul_rat(&self, q: &BigRational) -> Padic {
        if q.is_zero() {
            return Padic::zero(self.p, i64::MAX / 4);
        }
        let (vn, mn) = split_p(self.p, q.numer().magnitude());
        let (vd, md) = split_p(self.p, q.denom().magnitude());
        let rel = self.relative_precision().max(1);
        let u = &self.unit * mn * inv_mod_pk(&md, self.p, rel);
        let shift = vn - vd;
        let x = Padic::from_parts(self.p, self.val + shift, u, self.prec + shift);
        if q.is_negative() {
            -x
        } else {
            x
        }
    }

    pub fn pow(&self, n: u32) -> Padic {
        let mut acc = Padic::from_i64(self.p, 1, self.prec.max(0) + self.val.abs() * n as i64 + 1);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    pub fn powi(&self, n: i64) -> Result<Padic> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            self.pow((-n) as u32).inv()
        }
    }

    /// Teichmüller representative of a unit, to the unit's absolute precision.
    pub fn teichmuller(&self) -> Result<Padic> {
        self.teichmuller_to(self.prec)
    }

    /// Teichmüller representative computed modulo `p^prec`.
    pub fn teichmuller_to(&self, prec: i64) -> Result<Padic> {
        if self.is_zero() || self.val != 0 {
            return Err(Error::NotAUnit);
        }
        let p = self.p;
        let m = ppow(p, prec);
        let pm1 = BigUint::from(p - 1);
        let mut y = &self.unit % BigUint::from(p);
        let mut steps = 1i64;
        while steps < prec {
            // Newton step for y^(p-1) = 1.
            let ypm2 = y.modpow(&BigUint::from(p - 2), &m);
            let ypm1 = &ypm2 * &y % &m;
            let fy = (&ypm1 + &m - BigUint::one()) % &m;
            let dfy = &pm1 * ypm2 % &m;
            let step = fy * inv_mod_pk(&dfy, p, prec) % &m;
            y = (y + &m - step) % &m;
            steps *= 2;
        }
        Ok(Padic::from_parts(p, 0, y, prec))
    }

    /// Branch-dependent logarithm with `log p = branch`.
    pub fn log(&self, branch: &Padic) -> Result<Padic> {
        if self.is_zero() {
            return Err(Error::LogOfZero);
        }
        let p = self.p;
        let rel = self.relative_precision();
        let u = Padic::from_parts(p, 0, self.unit.clone(), rel);
        // u^(p-1) lies in 1 + pZ_p and log(u) = log(u^(p-1)) / (p-1).
        let y = u.pow(p - 1).add_ref(&Padic::from_i64(p, -1, rel));
        let lu = log_one_plus(&y, rel).div_int(p as i64 - 1);
        if self.val == 0 {
            return Ok(lu);
        }
        Ok(lu.add_ref(&branch.mul_int(self.val)))
    }

    pub fn exp(&self) -> Result<Padic> {
        let p = self.p;
        if self.valuation_bound() < 1 {
            return Err(Error::OutsideConvergence);
        }
        let target = self.prec;
        let one = Padic::from_i64(p, 1, target);
        if self.is_zero() {
            return Ok(one);
        }
        let v = self.val;
        let mut sum = one.clone();
        let mut term = one;
        let mut k: i64 = 1;
        loop {
            // v(x^k / k!) >= k v - (k-1)/(p-1)
            let bound = k * v - (k - 1) / (p as i64 - 1);
            if bound >= target {
                break;
            }
            term = term.mul_ref(self).div_int(k);
            sum = sum.add_ref(&term);
            k += 1;
        }
        Ok(sum.truncate(target))
    }
}

/// Σ_{k≥1} (-1)^{k+1} y^k / k for v(y) ≥ 1, to absolute precision `target`.
fn log_one_plus(y: &Padic, target: i64) -> Padic {
    let p = y.p;
    if y.is_zero() {
        return Padic::zero(p, target.min(y.prec));
    }
    let vy = y.val;
    let mut sum = Padic::zero(p, target);
    let mut pw = y.clone();
    let mut k: i64 = 1;
    loop {
        let lg = ilog(p as i64, k);
        if k * vy - lg >= target {
            break;
        }
        let t = pw.div_int(k);
        sum = if k % 2 == 1 { sum.add_ref(&t) } else { sum.add_ref(&t.neg()) };
        pw = pw.mul_ref(y);
        k += 1;
    }
    sum
}

/// ⌊log_p k⌋.
fn ilog(p: i64, k: i64) -> i64 {
    let mut e = 0;
    let mut q = p;
    while q <= k {
        q *= p;
        e += 1;
    }
    e
}

impl PartialEq for Padic {
    fn eq(&self, other: &Padic) -> bool {
        self.p == other.p && self.sub_ref(other).is_zero()
    }
}

impl Padic {
    pub fn sub_ref(&self, o: &Padic) -> Padic {
        self.add_ref(&o.neg_ref())
    }
    pub fn neg_ref(&self) -> Padic {
        if self.is_zero() {
            return self.clone();
        }
        let m = ppow(self.p, self.relative_precision());
        Padic { p: self.p, val: self.val, unit: &m - &self.unit, prec: self.prec }
    }
}

impl fmt::Debug for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "O({}^{})", self.p, self.prec);
        }
        write!(f, "{}^{}*{:?} + O({}^{})", self.p, self.val, self.to_digits(), self.p, self.prec)
    }
}

impl fmt::Display for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&Padic> for &Padic {
            type Output = Padic;
            fn $m(self, o: &Padic) -> Padic {
                self.$imp(o)
            }
        }
        impl $tr<Padic> for Padic {
            type Output = Padic;
            fn $m(self, o: Padic) -> Padic {
                (&self).$imp(&o)
            }
        }
        impl $tr<&Padic> for Padic {
            type Output = Padic;
            fn $m(self, o: &Padic) -> Padic {
                (&self).$imp(o)
            }
        }
        impl $tr<Padic> for &Padic {
            type Output = Padic;
            fn $m(self, o: Padic) -> Padic {
                self.$imp(&o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Neg for Padic {
    type Output = Padic;
    fn neg(self) -> Padic {
        self.neg_ref()
    }
}

impl Neg for &Padic {
    type Output = Padic;
    fn neg(self) -> Padic {
        self.neg_ref()
    }
}

/// Prime, target precision, guard digits and branch of the logarithm.
#[derive(Clone, Debug)]
pub struct PadicConfig {
    pub prime: u32,
    pub precision: i64,
    pub guard: i64,
    pub log_branch: BigRational,
    /// Largest series window used when expanding at an end.
    pub truncation: i64,
}

impl PadicConfig {
    pub const DEFAULT_GUARD: i64 = 20;
    pub const DEFAULT_TRUNCATION: i64 = 64;

    pub fn new(prime: u32, precision: i64) -> Result<Self> {
        let cfg = PadicConfig {
            prime,
            precision,
            guard: Self::DEFAULT_GUARD,
            log_branch: BigRational::zero(),
            truncation: Self::DEFAULT_TRUNCATION,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_branch(mut self, branch: BigRational) -> Result<Self> {
        self.log_branch = branch;
        self.validate()?;
        Ok(self)
    }

    pub fn with_truncation(mut self, t: i64) -> Self {
        self.truncation = t.max(1);
        self
    }

    pub fn with_guard(mut self, guard: i64) -> Self {
        self.guard = guard.max(0);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.prime < 3 || !is_prime(self.prime) {
            return Err(Error::Invalid(alloc::format!("{} is not an odd prime", self.prime)));
        }
        if self.precision < 1 {
            return Err(Error::Invalid("precision must be positive".into()));
        }
        if !self.log_branch.is_zero() {
            let b = Padic::from_ratio(self.prime, &self.log_branch, self.working_precision());
            if b.valuation_bound() < 0 {
                return Err(Error::Invalid("log branch must have nonnegative valuation".into()));
            }
        }
        Ok(())
    }

    /// Precision used internally: target plus guard digits.
    pub fn working_precision(&self) -> i64 {
        self.precision + self.guard
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.prime, self.working_precision())
    }

    pub fn branch(&self) -> Padic {
        self.ring().rat(&self.log_branch)
    }

    pub fn log(&self, x: &Padic) -> Result<Padic> {
        x.log(&self.branch())
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> Ring {
        Ring::new(7, 20)
    }

    #[test]
    fn valuation_of_product() {
        let x = r().int(7) * r().int(7);
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x, r().int(49));
    }

    #[test]
    fn one_minus_one_is_zero_with_full_precision() {
        let z = r().one() - r().one();
        assert!(z.is_zero());
        assert_eq!(z.precision(), 20);
    }

    #[test]
    fn inverse_of_one_minus_p_is_geometric() {
        let q = r().one().checked_div(&r().int(-6)).unwrap();
        let mut geo = BigUint::zero();
        for k in 0..20 {
            geo += ppow(7, k);
        }
        assert_eq!(q, Padic::from_bigint(7, &BigInt::from(geo), 20));
    }

    #[test]
    fn log_of_p_is_branch() {
        let b = r().int(3);
        assert_eq!(r().int(7).log(&b).unwrap(), b);
        assert!(r().int(7).log(&r().zero()).unwrap().is_zero());
        assert!(r().one().log(&r().zero()).unwrap().is_zero());
    }

    #[test]
    fn log_of_eight_matches_alternating_series() {
        let mut oracle = r().zero();
        for k in 1..40i64 {
            let t = r().int(7).pow(k as u32).div_int(k);
            oracle = if k % 2 == 1 { oracle + t } else { oracle - t };
        }
        assert_eq!(r().int(8).log(&r().zero()).unwrap(), oracle);
    }

    #[test]
    fn exp_matches_factorial_series() {
        let mut oracle = r().zero();
        let mut fact = BigInt::one();
        for k in 0..40i64 {
            if k > 0 {
                fact *= k;
            }
            oracle = oracle + r().int(7).pow(k as u32).mul_rat(&BigRational::new(BigInt::one(), fact.clone()));
        }
        let e = r().int(7).exp().unwrap();
        assert_eq!(e.truncate(18), oracle.truncate(18));
        assert!(r().int(3).exp().is_err());
        assert_eq!(r().zero().exp().unwrap(), r().one());
    }

    #[test]
    fn exp_inverts_log() {
        let x = r().int(8);
        assert_eq!(x.log(&r().zero()).unwrap().exp().unwrap(), x);
    }

    #[test]
    fn teichmuller_of_three() {
        let t = r().int(3).teichmuller().unwrap();
        assert_eq!(t.pow(6), r().one());
        let mut y = r().int(3);
        for _ in 0..20 {
            y = y.pow(7);
        }
        assert_eq!(t, y);
        assert!(r().int(7).teichmuller().is_err());
        assert!(t.log(&r().zero()).unwrap().is_zero());
    }

    #[test]
    fn digits_round_trip() {
        let x = r().frac(-5, 21);
        let back = Padic::from_digits(7, x.valuation().unwrap(), &x.to_digits(), 20).unwrap();
        assert_eq!(x, back);
        assert_eq!(x.valuation(), Some(-1));
    }

    #[test]
    fn rational_round_trip() {
        assert_eq!(r().int(-12345).to_rational(), BigRational::from_integer((-12345).into()));
    }

    #[test]
    fn config_validation() {
        assert!(PadicConfig::new(2, 10).is_err());
        assert!(PadicConfig::new(9, 10).is_err());
        assert!(PadicConfig::new(7, 0).is_err());
        let c = PadicConfig::new(7, 10).unwrap();
        assert!(c.clone().with_branch(BigRational::new(1.into(), 7.into())).is_err());
        assert_eq!(c.working_precision(), 30);
    }
}
