//! Symbol elements `Σ cᵢ [gᵢ]₂ ⊗ fᵢ` and their membership conditions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::p1geom::{Factored, Point, Value, WideOpen, Q};
use crate::padic::{Padic, PadicConfig};
use crate::polylog::values::{lmod2, Arg};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolTerm {
    pub c: Q,
    pub g: Factored,
    pub f: Factored,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymbolElement {
    pub terms: Vec<SymbolTerm>,
}

impl SymbolElement {
    pub fn new(terms: Vec<SymbolTerm>) -> Result<Self> {
        for t in &terms {
            if t.g.is_constant() && t.g.c.is_one() {
                return Err(Error::Invalid("g = 1 is not allowed".into()));
            }
        }
        Ok(SymbolElement { terms })
    }

    pub fn push(&mut self, c: Q, g: Factored, f: Factored) {
        self.terms.push(SymbolTerm { c, g, f });
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        SymbolElement { terms }
    }

    pub fn scale(&self, k: &Q) -> Self {
        SymbolElement { terms: self.terms.iter().map(|t| SymbolTerm { c: &t.c * k, ..t.clone() }).collect() }
    }

    /// Every finite point occurring in some `g` or `f`.
    pub fn finite_points(&self) -> Vec<Q> {
        let mut v: Vec<Q> = self.terms.iter().flat_map(|t| t.g.roots.keys().chain(t.f.roots.keys()).cloned()).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl SymbolTerm {
    /// `1 - g`, with roots searched among the given points first.
    pub fn one_minus(&self, hints: &[Q]) -> Result<Factored> {
        self.g.one_minus(hints)
    }
}

/// Basis of `F*_Q`: monic linear factors and positive primes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FactorBasis {
    Prime(BigInt),
    Linear(Q),
}

/// Element of `F*_Q` in the factor base; torsion is dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FactorBaseVector(pub BTreeMap<FactorBasis, Q>);

fn factor_integer(n: &BigInt, sign: i64, out: &mut BTreeMap<FactorBasis, Q>) -> Result<()> {
    let mut n = n.abs();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= n {
        if d > limit {
            return Err(Error::RequiresSplitting(format!("cannot factor {} by trial division", n)));
        }
        while (&n % &d).is_zero() {
            n /= &d;
            *out.entry(FactorBasis::Prime(d.clone())).or_insert_with(Q::zero) += Q::from_integer(sign.into());
        }
        d += 1;
    }
    if n > BigInt::one() {
        *out.entry(FactorBasis::Prime(n)).or_insert_with(Q::zero) += Q::from_integer(sign.into());
    }
    Ok(())
}

impl FactorBaseVector {
    pub fn of_constant(c: &Q) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Invalid("zero has no factorisation".into()));
        }
        let mut m = BTreeMap::new();
        factor_integer(c.numer(), 1, &mut m)?;
        factor_integer(c.denom(), -1, &mut m)?;
        m.retain(|_, v: &mut Q| !v.is_zero());
        Ok(FactorBaseVector(m))
    }

    pub fn of(f: &Factored) -> Result<Self> {
        let mut v = FactorBaseVector::of_constant(&f.c)?;
        for (a, m) in &f.roots {
            v.0.insert(FactorBasis::Linear(a.clone()), Q::from_integer((*m).into()));
        }
        Ok(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(|x| x.is_zero())
    }
}

type Wedge2 = BTreeMap<(FactorBasis, FactorBasis), Q>;
type Tensor = BTreeMap<(FactorBasis, FactorBasis, FactorBasis), Q>;

fn wedge2(a: &FactorBaseVector, b: &FactorBaseVector) -> Wedge2 {
    let mut out = Wedge2::new();
    for (x, p) in &a.0 {
        for (y, r) in &b.0 {
            if x == y {
                continue;
            }
            let (k, s) = if x < y { ((x.clone(), y.clone()), p * r) } else { ((y.clone(), x.clone()), -(p * r)) };
            *out.entry(k).or_insert_with(Q::zero) += s;
        }
    }
    out
}

fn wedge3(a: &FactorBaseVector, b: &FactorBaseVector, c: &FactorBaseVector) -> Tensor {
    let mut out = Tensor::new();
    for ((x, y), p) in wedge2(b, c) {
        for (w, r) in &a.0 {
            let mut idx = [w.clone(), x.clone(), y.clone()];
            if idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2] {
                continue;
            }
            let mut sign = 1;
            for i in 0..3 {
                for j in 0..2 - i {
                    if idx[j] > idx[j + 1] {
                        idx.swap(j, j + 1);
                        sign = -sign;
                    }
                }
            }
            let [i0, i1, i2] = idx;
            *out.entry((i0, i1, i2)).or_insert_with(Q::zero) += r * &p * Q::from_integer(sign.into());
        }
    }
    out
}

fn is_zero_map<K>(m: &BTreeMap<K, Q>) -> bool {
    m.values().all(|x| x.is_zero())
}

fn hints_for(alpha: &SymbolElement, extra: &[Q]) -> Vec<Q> {
    let mut h = alpha.finite_points();
    h.extend(extra.iter().cloned());
    h
}

/// `Σ cᵢ (1 - gᵢ) ⊗ (gᵢ ∧ fᵢ)` vanishes in `F*_Q ⊗ Λ² F*_Q`.
pub fn check_ocond(alpha: &SymbolElement, hints: &[Q]) -> Result<bool> {
    let hints = hints_for(alpha, hints);
    let mut acc = Tensor::new();
    for t in &alpha.terms {
        let om = FactorBaseVector::of(&t.one_minus(&hints)?)?;
        let w = wedge2(&FactorBaseVector::of(&t.g)?, &FactorBaseVector::of(&t.f)?);
        for (x, r) in &om.0 {
            for ((a, b), s) in &w {
                *acc.entry((x.clone(), a.clone(), b.clone())).or_insert_with(Q::zero) += &t.c * r * s;
            }
        }
    }
    Ok(is_zero_map(&acc))
}

/// `Σ cᵢ (1 - gᵢ) ∧ gᵢ ∧ fᵢ` vanishes in `Λ³ F*_Q`.
pub fn check_tilde(alpha: &SymbolElement, hints: &[Q]) -> Result<bool> {
    let hints = hints_for(alpha, hints);
    let mut acc = Tensor::new();
    for t in &alpha.terms {
        let om = FactorBaseVector::of(&t.one_minus(&hints)?)?;
        for (k, v) in wedge3(&om, &FactorBaseVector::of(&t.g)?, &FactorBaseVector::of(&t.f)?) {
            *acc.entry(k).or_insert_with(Q::zero) += &t.c * v;
        }
    }
    Ok(is_zero_map(&acc))
}

fn unit_on(u: &WideOpen, f: &Factored) -> bool {
    if f.is_constant() {
        let v = Padic::from_ratio(u.p, &f.c, 4);
        return v.valuation_bound() == 0;
    }
    u.is_unit(f)
}

/// Every `gᵢ`, `1 - gᵢ` and `fᵢ` is invertible on `U`.
pub fn check_special_units(alpha: &SymbolElement, u: &WideOpen) -> bool {
    let hints: Vec<Q> = u.ends().iter().filter_map(|y| match y {
        Point::Finite(a) => Some(a.clone()),
        Point::Infinity => None,
    }).collect();
    let hints = hints_for(alpha, &hints);
    alpha.terms.iter().all(|t| match t.one_minus(&hints) {
        Ok(om) => unit_on(u, &t.g) && unit_on(u, &om) && unit_on(u, &t.f),
        Err(_) => false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointStatus {
    Passed,
    Failed,
    Unverifiable,
}

/// Necessary conditions for `∂₁(α) = 0` at one point.
#[derive(Clone, Debug)]
pub struct PointCheck {
    pub point: Point,
    pub lmod_sum: Option<Padic>,
    pub wedge_zero: Option<bool>,
    pub status: PointStatus,
}

/// Value `[g(x)]₂` ingredients: `None` for the conventions at 0, 1, ∞.
fn special_value(g: &Factored, x: &Point) -> Option<Q> {
    match g.eval(x) {
        Value::Finite(v) if !v.is_one() => Some(v),
        _ => None,
    }
}

/// `Σ cᵢ ordₓ(fᵢ) L₂^mod(gᵢ(x))` and `Σ cᵢ ordₓ(fᵢ) (1 - gᵢ(x)) ∧ gᵢ(x)` at every point of the divisors.
pub fn check_ccond_numeric(alpha: &SymbolElement, cfg: &PadicConfig) -> Vec<PointCheck> {
    let mut pts: Vec<Point> = alpha.terms.iter().flat_map(|t| t.f.support()).collect();
    pts.sort();
    pts.dedup();
    let ring = cfg.ring();
    let target = cfg.precision;
    pts.into_iter()
        .map(|x| {
            let mut sum = Some(ring.zero());
            let mut wedge = Some(Wedge2::new());
            for t in &alpha.terms {
                let ord = t.f.ord_at(&x);
                if ord == 0 {
                    continue;
                }
                let Some(v) = special_value(&t.g, &x) else { continue };
                let k = &t.c * Q::from_integer(ord.into());
                sum = match (sum, lmod2(&Arg::Finite(ring.rat(&v)), cfg)) {
                    (Some(s), Ok(l)) => Some(s + l.value.mul_rat(&k)),
                    _ => None,
                };
                let om = Q::one() - &v;
                wedge = match (wedge, FactorBaseVector::of_constant(&om), FactorBaseVector::of_constant(&v)) {
                    (Some(mut w), Ok(a), Ok(b)) => {
                        for (key, s) in wedge2(&a, &b) {
                            *w.entry(key).or_insert_with(Q::zero) += &k * s;
                        }
                        Some(w)
                    }
                    _ => None,
                };
            }
            let wedge_zero = wedge.map(|w| is_zero_map(&w));
            let status = match (&sum, wedge_zero) {
                (None, _) => PointStatus::Unverifiable,
                (Some(s), w) if s.valuation_bound() >= target && w != Some(false) => PointStatus::Passed,
                _ => PointStatus::Failed,
            };
            PointCheck { point: x, lmod_sum: sum, wedge_zero, status }
        })
        .collect()
}

/// Integer `n` as a rational, for callers building coefficients.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}
