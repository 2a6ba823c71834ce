//! JSON formats for p-adic numbers, series, rational functions and symbol elements.

use num_bigint::BigInt;
use reglab_core::index::{Overrides, TripleData};
use reglab_core::p1geom::{Factored, Point, Poly, RatFn, Q};
use reglab_core::regulator::{Omega, SymbolElement, SymbolTerm};
use reglab_core::series::{LaurentSeries, LogLaurent};
use reglab_core::{Padic, PadicConfig};
use serde_json::{json, Map, Value};

use crate::error::CliError;

type R<T> = Result<T, CliError>;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn field<'a>(v: &'a Value, k: &str) -> R<&'a Value> {
    v.get(k).ok_or_else(|| bad(format!("missing field \"{}\"", k)))
}

fn as_array<'a>(v: &'a Value, what: &str) -> R<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{} must be an array", what)))
}

fn as_i64(v: &Value, what: &str) -> R<i64> {
    v.as_i64().ok_or_else(|| bad(format!("{} must be an integer", what)))
}

/// A rational from `"3/2"`, `"-4"` or a JSON integer.
pub fn rational(v: &Value) -> R<Q> {
    match v {
        Value::Number(n) => n.as_i64().map(|k| Q::from_integer(BigInt::from(k))).ok_or_else(|| bad(format!("{} is not an integer", n))),
        Value::String(s) => parse_rational(s),
        _ => Err(bad(format!("expected a rational, got {}", v))),
    }
}

pub fn parse_rational(s: &str) -> R<Q> {
    s.trim().parse::<Q>().map_err(|_| bad(format!("cannot parse rational \"{}\"", s)))
}

/// A p-adic literal: `{"val", "digits", "prec"}` or a rational.
pub fn padic(v: &Value, cfg: &PadicConfig) -> R<Padic> {
    if v.is_object() {
        let val = as_i64(field(v, "val")?, "val")?;
        let prec = as_i64(field(v, "prec")?, "prec")?;
        let digits = as_array(field(v, "digits")?, "digits")?
            .iter()
            .map(|d| d.as_u64().and_then(|d| u32::try_from(d).ok()).ok_or_else(|| bad("digits must be small nonnegative integers")))
            .collect::<R<Vec<u32>>>()?;
        if prec < val {
            return Err(bad("prec must not be below val"));
        }
        let x = Padic::from_digits(cfg.prime, val, &digits, prec).map_err(|e| bad(e.to_string()))?;
        return Ok(x.truncate(cfg.working_precision()));
    }
    Ok(cfg.ring().rat(&rational(v)?))
}

pub fn padic_str(s: &str, cfg: &PadicConfig) -> R<Padic> {
    let v = if s.trim_start().starts_with('{') {
        serde_json::from_str(s).map_err(|e| bad(e.to_string()))?
    } else {
        Value::String(s.to_string())
    };
    padic(&v, cfg)
}

/// Writes `x` with its precision capped at `cap`.
pub fn padic_out(x: &Padic, cap: i64) -> Value {
    let y = x.truncate(cap);
    json!({"val": y.valuation_bound(), "digits": y.to_digits(), "prec": y.precision()})
}

/// Rational output as a string.
pub fn rational_out(x: &Q) -> Value {
    Value::String(x.to_string())
}

pub fn point(v: &Value) -> R<Point> {
    if v.as_str() == Some("inf") {
        return Ok(Point::Infinity);
    }
    Ok(Point::Finite(rational(v)?))
}

pub fn point_out(y: &Point) -> Value {
    match y {
        Point::Infinity => Value::String("inf".into()),
        Point::Finite(a) => rational_out(a),
    }
}

/// `{"c": "2", "roots": [["5", 1], ["1/3", -2]]}` for `c·Π (z - a)^m`.
pub fn factored(v: &Value) -> R<Factored> {
    let c = rational(field(v, "c")?)?;
    if c == Q::from_integer(0.into()) {
        return Err(bad("the constant of a factored function must be nonzero"));
    }
    let mut roots = Vec::new();
    if let Some(rs) = v.get("roots") {
        for r in as_array(rs, "roots")? {
            let pair = as_array(r, "root")?;
            if pair.len() != 2 {
                return Err(bad("a root is [point, multiplicity]"));
            }
            roots.push((rational(&pair[0])?, as_i64(&pair[1], "multiplicity")?));
        }
    }
    Ok(Factored::new(c, roots))
}

pub fn factored_out(f: &Factored) -> Value {
    let roots: Vec<Value> = f.roots.iter().map(|(a, m)| json!([rational_out(a), m])).collect();
    json!({"c": rational_out(&f.c), "roots": roots})
}

/// `{"num": [a0, a1, …], "den": [["3", 2], …]}` for `Σ aᵢ zⁱ / Π (z - b)^k`.
pub fn ratfn(v: &Value) -> R<RatFn> {
    let num = as_array(field(v, "num")?, "num")?.iter().map(rational).collect::<R<Vec<Q>>>()?;
    let mut r = RatFn::poly(Poly::new(num));
    if let Some(d) = v.get("den") {
        for e in as_array(d, "den")? {
            let pair = as_array(e, "pole")?;
            if pair.len() != 2 {
                return Err(bad("a pole is [point, order]"));
            }
            let k = u32::try_from(as_i64(&pair[1], "order")?).map_err(|_| bad("pole orders must be nonnegative"))?;
            r = r.mul(&RatFn::pole(&rational(&pair[0])?, k));
        }
    }
    Ok(r)
}

pub fn ratfn_out(r: &RatFn) -> Value {
    let num: Vec<Value> = r.num.0.iter().map(rational_out).collect();
    let den: Vec<Value> = r.den.iter().map(|(b, k)| json!([rational_out(b), k])).collect();
    json!({"num": num, "den": den})
}

/// `{"h": ratfn}` for `ω = dh`, or `{"form": ratfn}` for `ω = r dz`.
pub fn omega(v: &Value) -> R<Omega> {
    if let Some(h) = v.get("h") {
        return Ok(Omega::exact(ratfn(h)?));
    }
    if let Some(r) = v.get("form") {
        return Omega::from_form(ratfn(r)?).map_err(CliError::Core);
    }
    Err(bad("omega needs \"h\" or \"form\""))
}

pub fn omega_out(o: &Omega) -> Value {
    json!({"h": ratfn_out(&o.primitive)})
}

/// `[{"c": "3/2", "g": factored, "f": factored}, …]`.
pub fn element(v: &Value) -> R<SymbolElement> {
    let terms = as_array(v, "element")?
        .iter()
        .map(|t| Ok(SymbolTerm { c: rational(field(t, "c")?)?, g: factored(field(t, "g")?)?, f: factored(field(t, "f")?)? }))
        .collect::<R<Vec<_>>>()?;
    SymbolElement::new(terms).map_err(|e| bad(e.to_string()))
}

pub fn element_out(a: &SymbolElement) -> Value {
    Value::Array(
        a.terms.iter().map(|t| json!({"c": rational_out(&t.c), "g": factored_out(&t.g), "f": factored_out(&t.f)})).collect(),
    )
}

/// `{"logdeg": d, "components": [[[n, a], …], …], "window": [lo, hi]}`.
///
/// Component `i` multiplies `log^i z`. A `hi` of `null` marks an exact series.
pub fn series(v: &Value, cfg: &PadicConfig) -> R<LogLaurent> {
    let ring = cfg.ring();
    let comps = as_array(field(v, "components")?, "components")?;
    if let Some(d) = v.get("logdeg") {
        let d = as_i64(d, "logdeg")?;
        if d < 0 || d as usize + 1 < comps.len() {
            return Err(bad("logdeg does not match the number of components"));
        }
    }
    let (lo, hi) = match v.get("window") {
        None => (None, None),
        Some(w) => {
            let w = as_array(w, "window")?;
            if w.len() != 2 {
                return Err(bad("window is [lo, hi]"));
            }
            let lo = as_i64(&w[0], "window start")?;
            let hi = if w[1].is_null() { None } else { Some(as_i64(&w[1], "window end")?) };
            (Some(lo), hi)
        }
    };
    let mut out = Vec::new();
    for c in comps {
        let mut terms = Vec::new();
        for t in as_array(c, "component")? {
            let pair = as_array(t, "term")?;
            if pair.len() != 2 {
                return Err(bad("a term is [exponent, coefficient]"));
            }
            terms.push((as_i64(&pair[0], "exponent")?, padic(&pair[1], cfg)?));
        }
        let min = terms.iter().map(|t| t.0).min().unwrap_or(0);
        let max = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
        let lo = lo.unwrap_or(min).min(min);
        let top = hi.unwrap_or(max).max(max);
        if let Some(h) = hi {
            if max > h {
                return Err(bad("term beyond the window"));
            }
        }
        let mut coeffs = vec![ring.zero(); (top - lo) as usize];
        for (n, a) in terms {
            coeffs[(n - lo) as usize] = coeffs[(n - lo) as usize].clone() + a;
        }
        out.push(LaurentSeries::new(ring, lo, coeffs, hi.is_none()));
    }
    Ok(LogLaurent::new(ring, out))
}

pub fn series_out(x: &LogLaurent, cap: i64) -> Value {
    let comps: Vec<Value> = x
        .components()
        .iter()
        .map(|c| Value::Array(c.terms().filter(|(_, a)| !a.is_zero()).map(|(n, a)| json!([n, padic_out(a, cap)])).collect()))
        .collect();
    let lo = x.components().iter().map(|c| c.lo()).min().unwrap_or(0);
    let hi = x.components().iter().filter_map(|c| c.hi()).min();
    json!({"logdeg": x.degree(), "components": comps, "window": [lo, hi]})
}

/// Triple data: `f`, `g`, `h` and optional integrals `i_gdh`, `i_fdh`, `i_fdg`.
///
/// An integral may also be `{"shift": literal}`, meaning the canonical one plus a constant.
pub fn triple_data(v: &Value, cfg: &PadicConfig) -> R<TripleData> {
    let f = series(field(v, "f")?, cfg)?;
    let g = series(field(v, "g")?, cfg)?;
    let h = series(field(v, "h")?, cfg)?;
    let base = TripleData::canonical(f.clone(), g.clone(), h.clone()).map_err(CliError::Core)?;
    let pick = |k: &str, canon: &LogLaurent| -> R<Option<LogLaurent>> {
        match v.get(k) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => match x.get("shift") {
                Some(s) => Ok(Some(canon.add(&LogLaurent::constant(cfg.ring(), padic(s, cfg)?)))),
                None => Ok(Some(series(x, cfg)?)),
            },
        }
    };
    let ov = Overrides { i_gdh: pick("i_gdh", &base.i_gdh)?, i_fdh: pick("i_fdh", &base.i_fdh)?, i_fdg: pick("i_fdg", &base.i_fdg)? };
    TripleData::new(f, g, h, ov).map_err(CliError::Core)
}

pub fn triple_data_out(d: &TripleData, cap: i64) -> Value {
    let mut m = Map::new();
    for (k, s) in [
        ("f", &d.f),
        ("g", &d.g),
        ("h", &d.h),
        ("i_gdh", &d.i_gdh),
        ("i_fdh", &d.i_fdh),
        ("i_fdg", &d.i_fdg),
    ] {
        m.insert(k.into(), series_out(s, cap));
    }
    m.insert("i_hdg".into(), series_out(&d.i_hdg(), cap));
    m.insert("i_hdf".into(), series_out(&d.i_hdf(), cap));
    m.insert("i_gdf".into(), series_out(&d.i_gdf(), cap));
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> PadicConfig {
        PadicConfig::new(7, 10).unwrap()
    }

    #[test]
    fn padic_round_trip() {
        let c = cfg();
        let x = padic(&json!("-3/49"), &c).unwrap();
        let back = padic(&padic_out(&x, 100), &c).unwrap();
        assert_eq!(x.valuation_bound(), -2);
        assert!((x - back).is_zero());
        let y = padic(&json!({"val": 1, "digits": [3, 0, 6], "prec": 5}), &c).unwrap();
        assert_eq!(y.precision(), 5);
        assert_eq!(y.to_digits(), vec![3, 0, 6]);
        assert!(padic(&json!({"val": 0, "digits": [7], "prec": 3}), &c).is_err());
    }

    #[test]
    fn factored_and_points() {
        let f = factored(&json!({"c": "2", "roots": [["5", 1], [3, -2]]})).unwrap();
        assert_eq!(f.degree(), -1);
        assert_eq!(factored(&factored_out(&f)).unwrap(), f);
        assert_eq!(point(&json!("inf")).unwrap(), Point::Infinity);
        assert!(factored(&json!({"c": 0})).is_err());
    }

    #[test]
    fn series_round_trip() {
        let c = cfg();
        let v = json!({"logdeg": 1, "components": [[[-1, "2"], [3, 1]], [[0, 1]]], "window": [-1, null]});
        let s = series(&v, &c).unwrap();
        assert_eq!(s.degree(), 1);
        assert!(s.discrepancy(&series(&series_out(&s, 100), &c).unwrap()) >= c.working_precision());
        let inexact = series(&json!({"components": [[[0, 1]]], "window": [0, 4]}), &c).unwrap();
        assert!(inexact.component(0).coeff(5).is_err());
    }
}
