//! Values of Li₂, L₂ and L₂^mod at points of the series-reachable locus.

use alloc::format;

use crate::error::{Error, Result};
use crate::padic::{Padic, PadicConfig};

/// A point of `Q_p ∪ {∞}`.
#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Finite(Padic),
    Infinity,
}

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    DirectSeries,
    Inversion,
    Reflection,
    Convention,
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::DirectSeries => "direct-series",
            Route::Inversion => "inversion",
            Route::Reflection => "reflection",
            Route::Convention => "convention",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ColemanValue {
    pub value: Padic,
    pub route: Route,
}

/// Residue disc classification of a finite point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Disc {
    Zero,
    One,
    Near0,
    NearInf,
    Near1,
}

fn classify(z: &Padic) -> Result<Disc> {
    if z.is_zero() {
        return Ok(Disc::Zero);
    }
    let v = z.valuation_bound();
    if v > 0 {
        return Ok(Disc::Near0);
    }
    if v < 0 {
        return Ok(Disc::NearInf);
    }
    let w = z - z.ring().one();
    if w.is_zero() {
        return Ok(Disc::One);
    }
    if w.valuation_bound() > 0 {
        return Ok(Disc::Near1);
    }
    Err(Error::Unreachable(format!("{:?} lies in a residue disc other than those of 0, 1, infinity", z)))
}

/// `Σ z^n / n²` for `v(z) > 0`, summed until the tail is below the precision of `z`.
pub fn li2_series(z: &Padic) -> Padic {
    let ring = z.ring();
    let target = z.precision();
    if z.is_zero() {
        return ring.zero();
    }
    let v = z.valuation_bound();
    let p = z.prime() as i64;
    let mut sum = ring.zero();
    let mut pw = z.clone();
    let mut n: i64 = 1;
    loop {
        let mut lg = 0;
        let mut q = p;
        while q <= n {
            q *= p;
            lg += 1;
        }
        if n * v - 2 * lg >= target {
            break;
        }
        sum = sum + pw.div_int(n).div_int(n);
        pw = &pw * z;
        n += 1;
    }
    sum
}

fn one_minus(z: &Padic) -> Padic {
    z.ring().one() - z
}

/// `log(z) log(1 - z)` with the value 0 at `z = 0, 1`.
fn loglog(z: &Padic, cfg: &PadicConfig) -> Result<Padic> {
    let w = one_minus(z);
    if z.is_zero() || w.is_zero() {
        return Ok(z.ring().zero());
    }
    Ok(cfg.log(z)? * cfg.log(&w)?)
}

/// L₂(z) = Li₂(z) + log z · log(1 - z).
pub fn ltwo(z: &Arg, cfg: &PadicConfig) -> Result<ColemanValue> {
    let z = match z {
        Arg::Infinity => return Ok(ColemanValue { value: cfg.ring().zero(), route: Route::Convention }),
        Arg::Finite(z) => z,
    };
    match classify(z)? {
        Disc::Zero | Disc::One => Ok(ColemanValue { value: z.ring().zero(), route: Route::Convention }),
        Disc::Near0 => Ok(ColemanValue { value: li2_series(z) + loglog(z, cfg)?, route: Route::DirectSeries }),
        Disc::Near1 => Ok(ColemanValue { value: -li2_series(&one_minus(z)), route: Route::Reflection }),
        Disc::NearInf => {
            let zi = z.inv()?;
            let l = cfg.log(z)?;
            let half = l.clone() * l * z.ring().one().div_int(2);
            let inner = li2_series(&zi) + loglog(&zi, cfg)?;
            Ok(ColemanValue { value: half - inner, route: Route::Inversion })
        }
    }
}

/// Li₂(z), with Li₂(1) = 0.
pub fn li2(z: &Arg, cfg: &PadicConfig) -> Result<ColemanValue> {
    let zf = match z {
        Arg::Infinity => return Err(Error::Invalid("Li2 has no value at infinity".into())),
        Arg::Finite(z) => z,
    };
    let d = classify(zf)?;
    if d == Disc::Near0 {
        return Ok(ColemanValue { value: li2_series(zf), route: Route::DirectSeries });
    }
    let l = ltwo(z, cfg)?;
    Ok(ColemanValue { value: l.value - loglog(zf, cfg)?, route: l.route })
}

/// L₂^mod(z) = Li₂(z) + ½ log z · log(1 - z), zero at 0, 1 and ∞.
pub fn lmod2(z: &Arg, cfg: &PadicConfig) -> Result<ColemanValue> {
    let zf = match z {
        Arg::Infinity => return Ok(ColemanValue { value: cfg.ring().zero(), route: Route::Convention }),
        Arg::Finite(z) => z,
    };
    let l = ltwo(z, cfg)?;
    let half = loglog(zf, cfg)? * zf.ring().one().div_int(2);
    Ok(ColemanValue { value: l.value - half, route: l.route })
}

/// True when the finite point lies in the discs of 0, 1 or ∞.
pub fn is_reachable(z: &Padic) -> bool {
    classify(z).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Ring;

    fn cfg() -> PadicConfig {
        PadicConfig::new(7, 20).unwrap()
    }
    fn r() -> Ring {
        cfg().ring()
    }
    fn fin(x: Padic) -> Arg {
        Arg::Finite(x)
    }

    #[test]
    fn conventions() {
        let c = cfg();
        assert!(li2(&fin(r().zero()), &c).unwrap().value.is_zero());
        assert!(ltwo(&fin(r().one()), &c).unwrap().value.is_zero());
        assert!(ltwo(&Arg::Infinity, &c).unwrap().value.is_zero());
        assert!(lmod2(&fin(r().zero()), &c).unwrap().value.is_zero());
        assert!(lmod2(&Arg::Infinity, &c).unwrap().value.is_zero());
        assert!(matches!(li2(&fin(r().int(3)), &c), Err(Error::Unreachable(_))));
    }

    #[test]
    fn li2_of_p_is_direct_sum() {
        let mut oracle = r().zero();
        for n in 1..40i64 {
            oracle = oracle + r().int(7).pow(n as u32).div_int(n * n);
        }
        let v = li2(&fin(r().int(7)), &cfg()).unwrap();
        assert_eq!(v.route, Route::DirectSeries);
        assert_eq!(v.value.truncate(25), oracle.truncate(25));
    }

    #[test]
    fn reflection_with_branch() {
        let c = cfg().with_branch(crate::p1geom::q(7)).unwrap();
        let a = li2(&fin(r().int(7)), &c).unwrap().value;
        let b = li2(&fin(r().int(-6)), &c).unwrap().value;
        let expect = -(c.log(&r().int(7)).unwrap() * c.log(&r().int(-6)).unwrap());
        assert_eq!(a + b, expect);
    }

    #[test]
    fn inversion_identities() {
        let c = cfg().with_branch(crate::p1geom::q(3)).unwrap();
        let z = r().int(7);
        let zi = z.inv().unwrap();
        let s = ltwo(&fin(z.clone()), &c).unwrap().value + ltwo(&fin(zi.clone()), &c).unwrap().value;
        let l = c.log(&z).unwrap();
        assert_eq!(s, l.clone() * l * r().one().div_int(2));
        let m = lmod2(&fin(z), &c).unwrap().value + lmod2(&fin(zi), &c).unwrap().value;
        assert!(m.valuation_bound() >= 20);
    }
}
