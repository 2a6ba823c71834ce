//! Polynomials and rational functions over Q with split denominators.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

fn binom(n: i64, k: i64) -> Q {
    let mut r = Q::one();
    for i in 0..k {
        r = r * q(n - i) / q(i + 1);
    }
    r
}

/// A point of the projective line over Q.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Finite(Q),
    Infinity,
}

impl Point {
    pub fn int(n: i64) -> Self {
        Point::Finite(q(n))
    }

    /// Residue disc of the point: `None` for the disc at infinity.
    pub fn reduction(&self, p: u32) -> Option<u64> {
        match self {
            Point::Infinity => None,
            Point::Finite(a) => {
                let pb = BigInt::from(p);
                if a.denom().is_multiple_of(&pb) {
                    return None;
                }
                let n = a.numer().mod_floor(&pb).to_u64().unwrap_or(0);
                let d = a.denom().mod_floor(&pb).to_u64().unwrap_or(1);
                let pp = p as u64;
                let mut inv = 1u64;
                for _ in 0..pp - 2 {
                    inv = inv * d % pp;
                }
                Some(n * inv % pp)
            }
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(a) => write!(f, "{}", a),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

/// Value of a rational function at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Zero,
    Infinity,
    Finite(Q),
}

/// Polynomial with coefficients listed from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }
    pub fn zero() -> Self {
        Poly(Vec::new())
    }
    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }
    /// `z - a`.
    pub fn linear(a: &Q) -> Self {
        Poly::new(vec![-a.clone(), Q::one()])
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }
    pub fn coeff(&self, i: usize) -> Q {
        self.0.get(i).cloned().unwrap_or_else(Q::zero)
    }
    pub fn lead(&self) -> Q {
        self.0.last().cloned().unwrap_or_else(Q::zero)
    }
    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }
    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }
    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(Q::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
    pub fn derivative(&self) -> Poly {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }
    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Poly {
        let mut c = vec![Q::zero()];
        c.extend(self.0.iter().enumerate().map(|(i, x)| x / q(i as i64 + 1)));
        Poly::new(c)
    }
    /// Coefficients of `p(a + t)`.
    pub fn taylor_shift(&self, a: &Q) -> Poly {
        let mut out = Poly::zero();
        for c in self.0.iter().rev() {
            out = out.mul(&Poly::new(vec![a.clone(), Q::one()])).add(&Poly::constant(c.clone()));
        }
        out
    }
    /// Division by `z - a`: quotient and remainder.
    pub fn div_linear(&self, a: &Q) -> (Poly, Q) {
        if self.is_zero() {
            return (Poly::zero(), Q::zero());
        }
        let n = self.0.len();
        let mut qv = vec![Q::zero(); n - 1];
        let mut carry = Q::zero();
        for i in (0..n).rev() {
            let v = &self.0[i] + &carry * a;
            if i == 0 {
                return (Poly::new(qv), v);
            }
            qv[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Complete factorisation into linear factors over Q, trying `hints` first.
    pub fn split(&self, hints: &[Q]) -> Result<(Q, BTreeMap<Q, i64>)> {
        if self.is_zero() {
            return Err(Error::Invalid("cannot factor the zero polynomial".into()));
        }
        let mut rest = self.clone();
        let mut roots = BTreeMap::new();
        let take = |rest: &mut Poly, r: &Q, roots: &mut BTreeMap<Q, i64>| {
            loop {
                if rest.degree() < 1 {
                    return;
                }
                let (quo, rem) = rest.div_linear(r);
                if !rem.is_zero() {
                    return;
                }
                *rest = quo;
                *roots.entry(r.clone()).or_insert(0) += 1;
            }
        };
        take(&mut rest, &Q::zero(), &mut roots);
        for h in hints {
            take(&mut rest, h, &mut roots);
        }
        if rest.degree() >= 1 {
            for r in rational_root_candidates(&rest)? {
                take(&mut rest, &r, &mut roots);
                if rest.degree() < 1 {
                    break;
                }
            }
        }
        if rest.degree() >= 1 {
            return Err(Error::RequiresSplitting(format!("polynomial of degree {} has no rational roots", rest.degree())));
        }
        Ok((rest.lead(), roots))
    }
}

fn small_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let limit = BigInt::from(1_000_000_000_000i64);
    if n > limit {
        return Err(Error::RequiresSplitting("coefficients too large for the rational root search".into()));
    }
    let v = n.to_u64().unwrap_or(0);
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

fn rational_root_candidates(p: &Poly) -> Result<Vec<Q>> {
    let mut l = BigInt::one();
    for c in &p.0 {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.0.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
    let a0 = ints.first().cloned().unwrap_or_default();
    let an = ints.last().cloned().unwrap_or_default();
    let mut out = Vec::new();
    for num in small_divisors(&a0)? {
        for den in small_divisors(&an)? {
            let r = Q::new(num.clone(), den.clone());
            out.push(r.clone());
            out.push(-r);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `c · Π (z - a)^m` with nonzero integer exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factored {
    pub c: Q,
    pub roots: BTreeMap<Q, i64>,
}

impl Factored {
    pub fn constant(c: Q) -> Self {
        assert!(!c.is_zero(), "zero is not a unit");
        Factored { c, roots: BTreeMap::new() }
    }
    /// `z - a`.
    pub fn linear(a: Q) -> Self {
        let mut roots = BTreeMap::new();
        roots.insert(a, 1);
        Factored { c: Q::one(), roots }
    }
    pub fn new(c: Q, roots: impl IntoIterator<Item = (Q, i64)>) -> Self {
        let mut f = Factored::constant(c);
        for (a, m) in roots {
            *f.roots.entry(a).or_insert(0) += m;
        }
        f.roots.retain(|_, m| *m != 0);
        f
    }
    pub fn is_constant(&self) -> bool {
        self.roots.is_empty()
    }
    pub fn mul(&self, o: &Factored) -> Factored {
        Factored::new(&self.c * &o.c, self.roots.iter().chain(o.roots.iter()).map(|(a, m)| (a.clone(), *m)))
    }
    pub fn pow(&self, k: i64) -> Factored {
        let c = if k >= 0 {
            num_traits::pow(self.c.clone(), k as usize)
        } else {
            num_traits::pow(self.c.recip(), (-k) as usize)
        };
        Factored::new(c, self.roots.iter().map(|(a, m)| (a.clone(), m * k)))
    }
    pub fn inv(&self) -> Factored {
        self.pow(-1)
    }
    pub fn div(&self, o: &Factored) -> Factored {
        self.mul(&o.inv())
    }
    /// Total degree `deg(num) - deg(den)`.
    pub fn degree(&self) -> i64 {
        self.roots.values().sum()
    }
    pub fn ord_at(&self, y: &Point) -> i64 {
        match y {
            Point::Finite(a) => self.roots.get(a).copied().unwrap_or(0),
            Point::Infinity => -self.degree(),
        }
    }
    /// Leading coefficient with respect to the standard parameter at `y`.
    pub fn leading_at(&self, y: &Point) -> Q {
        match y {
            Point::Infinity => self.c.clone(),
            Point::Finite(b) => {
                let mut r = self.c.clone();
                for (a, m) in &self.roots {
                    if a != b {
                        let d = b - a;
                        r *= if *m >= 0 { num_traits::pow(d, *m as usize) } else { num_traits::pow(d.recip(), (-m) as usize) };
                    }
                }
                r
            }
        }
    }
    pub fn eval(&self, y: &Point) -> Value {
        match self.ord_at(y) {
            o if o > 0 => Value::Zero,
            o if o < 0 => Value::Infinity,
            _ => Value::Finite(self.leading_at(y)),
        }
    }
    pub fn divisor(&self) -> Divisor {
        let mut d = Divisor::new();
        for (a, m) in &self.roots {
            d.add(Point::Finite(a.clone()), *m);
        }
        d.add(Point::Infinity, -self.degree());
        d
    }
    /// Points where the function has a zero or a pole.
    pub fn support(&self) -> Vec<Point> {
        self.divisor().0.keys().cloned().collect()
    }
    pub fn to_ratfn(&self) -> RatFn {
        let mut num = Poly::constant(self.c.clone());
        let mut den = BTreeMap::new();
        for (a, m) in &self.roots {
            if *m > 0 {
                num = num.mul(&Poly::linear(a).pow(*m as u32));
            } else {
                den.insert(a.clone(), (-m) as u32);
            }
        }
        RatFn { num, den }
    }
    /// `1 - g`, factored over Q with `hints` tried first as roots.
    pub fn one_minus(&self, hints: &[Q]) -> Result<Factored> {
        let mut n = Poly::constant(Q::one());
        let mut d = Poly::constant(Q::one());
        for (a, m) in &self.roots {
            if *m > 0 {
                n = n.mul(&Poly::linear(a).pow(*m as u32));
            } else {
                d = d.mul(&Poly::linear(a).pow((-m) as u32));
            }
        }
        let top = d.sub(&n.scale(&self.c));
        if top.is_zero() {
            return Err(Error::Invalid("1 - g vanishes identically".into()));
        }
        let (lead, roots) = top.split(hints)?;
        Ok(Factored::new(
            lead,
            roots.into_iter().chain(self.roots.iter().filter(|(_, m)| **m < 0).map(|(a, m)| (a.clone(), *m))),
        ))
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c)?;
        for (a, m) in &self.roots {
            write!(f, "*(z-{})^{}", a, m)?;
        }
        Ok(())
    }
}

/// Formal sum of points.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Divisor(pub BTreeMap<Point, i64>);

impl Divisor {
    pub fn new() -> Self {
        Divisor(BTreeMap::new())
    }
    pub fn add(&mut self, y: Point, m: i64) {
        let e = self.0.entry(y.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.0.remove(&y);
        }
    }
    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }
}

/// `num / Π (z - b)^m`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatFn {
    pub num: Poly,
    pub den: BTreeMap<Q, u32>,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn::default()
    }
    pub fn constant(c: Q) -> Self {
        RatFn { num: Poly::constant(c), den: BTreeMap::new() }
    }
    pub fn one() -> Self {
        RatFn::constant(Q::one())
    }
    pub fn poly(p: Poly) -> Self {
        RatFn { num: p, den: BTreeMap::new() }
    }
    /// `1 / (z - b)^k`.
    pub fn pole(b: &Q, k: u32) -> Self {
        let mut den = BTreeMap::new();
        if k > 0 {
            den.insert(b.clone(), k);
        }
        RatFn { num: Poly::constant(Q::one()), den }
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_constant(&self) -> bool {
        self.den.is_empty() && self.num.degree() <= 0
    }
    pub fn constant_value(&self) -> Option<Q> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<Q> = self.den.keys().cloned().collect();
        for b in keys {
            loop {
                let m = self.den[&b];
                if m == 0 {
                    break;
                }
                let (quo, rem) = self.num.div_linear(&b);
                if !rem.is_zero() {
                    break;
                }
                self.num = quo;
                self.den.insert(b.clone(), m - 1);
            }
        }
        self.den.retain(|_, m| *m > 0);
        self
    }

    fn lift_to(&self, den: &BTreeMap<Q, u32>) -> Poly {
        let mut n = self.num.clone();
        for (b, m) in den {
            let have = self.den.get(b).copied().unwrap_or(0);
            n = n.mul(&Poly::linear(b).pow(m - have));
        }
        n
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        let mut den = self.den.clone();
        for (b, m) in &o.den {
            let e = den.entry(b.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let num = self.lift_to(&den).add(&o.lift_to(&den));
        RatFn { num, den }.reduce()
    }
    pub fn neg(&self) -> RatFn {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }
    pub fn sub(&self, o: &RatFn) -> RatFn {
        self.add(&o.neg())
    }
    pub fn scale(&self, c: &Q) -> RatFn {
        RatFn { num: self.num.scale(c), den: self.den.clone() }.reduce()
    }
    pub fn mul(&self, o: &RatFn) -> RatFn {
        let mut den = self.den.clone();
        for (b, m) in &o.den {
            *den.entry(b.clone()).or_insert(0) += m;
        }
        RatFn { num: self.num.mul(&o.num), den }.reduce()
    }
    /// Division by `z - a`.
    pub fn div_linear(&self, a: &Q) -> RatFn {
        let mut den = self.den.clone();
        *den.entry(a.clone()).or_insert(0) += 1;
        RatFn { num: self.num.clone(), den }.reduce()
    }
    pub fn derivative(&self) -> RatFn {
        // (N/D)' = (N' Π(z-b) - N Σ m_b Π_{b'≠b}(z-b')) / (D Π(z-b))
        let mut sq = Poly::constant(Q::one());
        for b in self.den.keys() {
            sq = sq.mul(&Poly::linear(b));
        }
        let mut top = self.num.derivative().mul(&sq);
        for (b, m) in &self.den {
            let mut rest = Poly::constant(q(*m as i64));
            for b2 in self.den.keys() {
                if b2 != b {
                    rest = rest.mul(&Poly::linear(b2));
                }
            }
            top = top.sub(&self.num.mul(&rest));
        }
        let den = self.den.iter().map(|(b, m)| (b.clone(), m + 1)).collect();
        RatFn { num: top, den }.reduce()
    }

    pub fn ord_at(&self, y: &Point) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        match y {
            Point::Infinity => self.den.values().map(|m| *m as i64).sum::<i64>() - self.num.degree(),
            Point::Finite(a) => {
                let mut k = 0;
                let mut n = self.num.clone();
                loop {
                    let (quo, rem) = n.div_linear(a);
                    if !rem.is_zero() {
                        break;
                    }
                    n = quo;
                    k += 1;
                }
                k - self.den.get(a).copied().unwrap_or(0) as i64
            }
        }
    }

    /// Exact Laurent coefficients in the standard parameter at `y` for exponents `lo..hi`.
    ///
    /// Returns `lo`, the order at `y` (or `hi` for the zero function).
    pub fn laurent_at(&self, y: &Point, hi: i64) -> (i64, Vec<Q>) {
        if self.is_zero() {
            return (hi, Vec::new());
        }
        let lo = self.ord_at(y);
        if lo >= hi {
            return (lo, Vec::new());
        }
        let len = (hi - lo) as usize;
        let mut series = vec![Q::zero(); len];
        match y {
            Point::Finite(a) => {
                let shifted = self.num.taylor_shift(a);
                let ma = self.den.get(a).copied().unwrap_or(0) as i64;
                let n0 = lo + ma;
                // t^{-ma} N(a+t) Π_{b≠a} (t + a - b)^{-m}
                for (i, s) in series.iter_mut().enumerate() {
                    *s = shifted.coeff(i + n0 as usize);
                }
                for (b, m) in &self.den {
                    if b == a {
                        continue;
                    }
                    let d = a - b;
                    let f: Vec<Q> = (0..len as i64)
                        .map(|k| {
                            let sign = if k % 2 == 0 { q(1) } else { q(-1) };
                            sign * binom(*m as i64 + k - 1, k) / num_traits::pow(d.clone(), (*m as i64 + k) as usize)
                        })
                        .collect();
                    series = mul_trunc(&series, &f, len);
                }
            }
            Point::Infinity => {
                let deg = self.num.degree();
                for (i, s) in series.iter_mut().enumerate() {
                    let j = deg - i as i64;
                    *s = if j >= 0 { self.num.coeff(j as usize) } else { Q::zero() };
                }
                for (b, m) in &self.den {
                    let f: Vec<Q> = (0..len as i64)
                        .map(|k| binom(*m as i64 + k - 1, k) * num_traits::pow(b.clone(), k as usize))
                        .collect();
                    series = mul_trunc(&series, &f, len);
                }
            }
        }
        (lo, series)
    }

    pub fn eval(&self, y: &Point) -> Value {
        if self.is_zero() {
            return Value::Zero;
        }
        let o = self.ord_at(y);
        if o > 0 {
            Value::Zero
        } else if o < 0 {
            Value::Infinity
        } else {
            Value::Finite(self.laurent_at(y, 1).1[0].clone())
        }
    }

    /// Polynomial part and principal parts: coefficient of `(z - b)^{-k}` at index `k - 1`.
    pub fn partial_fractions(&self) -> (Poly, BTreeMap<Q, Vec<Q>>) {
        let mut parts = BTreeMap::new();
        for (b, m) in &self.den {
            let y = Point::Finite(b.clone());
            let (lo, c) = self.laurent_at(&y, 0);
            let mut v = vec![Q::zero(); *m as usize];
            for (i, x) in c.iter().enumerate() {
                let e = lo + i as i64;
                if e < 0 {
                    v[(-e - 1) as usize] = x.clone();
                }
            }
            parts.insert(b.clone(), v);
        }
        let (lo, c) = self.laurent_at(&Point::Infinity, 1);
        let mut poly = vec![Q::zero(); (-lo + 1).max(0) as usize];
        for (i, x) in c.iter().enumerate() {
            let e = lo + i as i64;
            if e <= 0 {
                poly[(-e) as usize] = x.clone();
            }
        }
        (Poly::new(poly), parts)
    }

    /// Residue of `self · dz` at a finite point.
    pub fn residue_at(&self, b: &Q) -> Q {
        let (lo, c) = self.laurent_at(&Point::Finite(b.clone()), 0);
        if lo <= -1 {
            c[(-1 - lo) as usize].clone()
        } else {
            Q::zero()
        }
    }

    /// Residue of `self · dz` at infinity, in the parameter `w = 1/z`.
    pub fn residue_at_infinity(&self) -> Q {
        // self dz = -self(1/w) w^{-2} dw
        let (lo, c) = self.laurent_at(&Point::Infinity, 2);
        if lo <= 1 {
            -c[(1 - lo) as usize].clone()
        } else {
            Q::zero()
        }
    }

    pub fn poles(&self) -> Vec<Q> {
        self.den.keys().cloned().collect()
    }

    pub fn describe(&self) -> String {
        format!("{:?}/{:?}", self.num.0, self.den)
    }
}

fn mul_trunc(a: &[Q], b: &[Q], len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors() {
        let z = Factored::linear(q(0));
        let d = z.divisor();
        assert_eq!(d.0.get(&Point::int(0)), Some(&1));
        assert_eq!(d.0.get(&Point::Infinity), Some(&-1));
        let f = Factored::new(q(1), [(q(1), 1), (q(2), -1)]);
        assert_eq!(f.divisor().0.len(), 2);
        let g = Factored::new(q(1), [(q(0), 1), (q(1), 1)]);
        assert_eq!(g.divisor().0.get(&Point::Infinity), Some(&-2));
        assert_eq!(g.divisor().degree(), 0);
    }

    #[test]
    fn one_minus_of_cross_ratio() {
        // g = (z - 2)/3, 1 - g = -(z - 5)/3
        let g = Factored::new(qf(1, 3), [(q(2), 1)]);
        let h = g.one_minus(&[]).unwrap();
        assert_eq!(h, Factored::new(qf(-1, 3), [(q(5), 1)]));
        let g = Factored::new(q(1), [(q(0), 2), (q(1), -1)]);
        // 1 - z^2/(z-1) = (z - 1 - z^2)/(z - 1) is not split over Q
        assert!(matches!(g.one_minus(&[]), Err(Error::RequiresSplitting(_))));
    }

    #[test]
    fn laurent_expansions() {
        // 1/(1 - z) at 0 is the geometric series
        let r = Factored::new(q(-1), [(q(1), -1)]).to_ratfn();
        let (lo, c) = r.laurent_at(&Point::int(0), 5);
        assert_eq!(lo, 0);
        assert!(c.iter().all(|x| *x == q(1)));
        // z^2 - z at infinity: w^-2 - w^-1
        let r = Factored::new(q(1), [(q(0), 1), (q(1), 1)]).to_ratfn();
        let (lo, c) = r.laurent_at(&Point::Infinity, 1);
        assert_eq!(lo, -2);
        assert_eq!(c, vec![q(1), q(-1), q(0)]);
    }

    #[test]
    fn partial_fraction_round_trip() {
        let r = Factored::new(q(3), [(q(0), 3), (q(1), -2), (q(-2), -1)]).to_ratfn();
        let (poly, parts) = r.partial_fractions();
        let mut back = RatFn::poly(poly);
        for (b, v) in parts {
            for (k, c) in v.iter().enumerate() {
                back = back.add(&RatFn::pole(&b, k as u32 + 1).scale(c));
            }
        }
        assert_eq!(back, r);
    }

    #[test]
    fn residues_sum_to_zero() {
        let r = Factored::new(q(1), [(q(0), -1), (q(1), -1)]).to_ratfn();
        let s = r.residue_at(&q(0)) + r.residue_at(&q(1)) + r.residue_at_infinity();
        assert!(s.is_zero());
    }

    #[test]
    fn derivative_of_quotient() {
        let r = Factored::new(q(1), [(q(1), 1), (q(2), -1)]).to_ratfn();
        // ((z-1)/(z-2))' = -1/(z-2)^2
        assert_eq!(r.derivative(), RatFn::pole(&q(2), 2).scale(&q(-1)));
    }

    #[test]
    fn reductions() {
        assert_eq!(Point::int(8).reduction(7), Some(1));
        assert_eq!(Point::Finite(qf(1, 7)).reduction(7), None);
        assert_eq!(Point::Finite(qf(1, 2)).reduction(7), Some(4));
    }
}
