//! Rational functions, divisors and wide opens of the projective line.

pub mod global;
pub mod ratfunc;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
pub use ratfunc::{q, qf, Divisor, Factored, Point, Poly, RatFn, Value, Q};

/// The projective line minus residue discs around finitely many points.
///
/// Each removed point gives one end, with parameter `z - a` at a finite
/// point and `1/z` at infinity. Infinity is always removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WideOpen {
    pub p: u32,
    points: Vec<Point>,
}

impl WideOpen {
    pub fn new(p: u32, pts: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut points: Vec<Point> = pts.into_iter().collect();
        points.push(Point::Infinity);
        points.sort();
        points.dedup();
        for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                if a.reduction(p) == b.reduction(p) {
                    return Err(Error::ResidueDiscCollision(format!("{} and {} reduce to the same point mod {}", a, b, p)));
                }
            }
        }
        Ok(WideOpen { p, points })
    }

    /// Wide open on which all the given functions are invertible.
    pub fn for_functions<'a>(p: u32, fs: impl IntoIterator<Item = &'a Factored>) -> Result<Self> {
        WideOpen::new(p, fs.into_iter().flat_map(|f| f.support()))
    }

    /// Adds further removed points.
    pub fn with_points(&self, pts: impl IntoIterator<Item = Point>) -> Result<Self> {
        WideOpen::new(self.p, self.points.iter().cloned().chain(pts))
    }

    pub fn ends(&self) -> &[Point] {
        &self.points
    }

    pub fn contains_end(&self, y: &Point) -> bool {
        self.points.contains(y)
    }

    /// True when every zero and pole of `f` is a removed point.
    pub fn is_unit(&self, f: &Factored) -> bool {
        f.support().iter().all(|y| self.contains_end(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ends_and_collisions() {
        let z = Factored::linear(q(0));
        let omz = Factored::new(q(-1), [(q(1), 1)]);
        let u = WideOpen::for_functions(7, [&z, &omz]).unwrap();
        assert_eq!(u.ends(), &[Point::int(0), Point::int(1), Point::Infinity]);
        let bad = WideOpen::for_functions(7, [&Factored::linear(q(1)), &Factored::linear(q(8))]);
        assert!(matches!(bad, Err(Error::ResidueDiscCollision(_))));
    }

    #[test]
    fn residues_over_ends_sum_to_zero() {
        let r = Factored::new(q(1), [(q(0), -1), (q(1), -1)]).to_ratfn();
        let u = WideOpen::new(7, [Point::int(0), Point::int(1)]).unwrap();
        let mut s = Q::from_integer(0.into());
        for e in u.ends() {
            s += match e {
                Point::Finite(a) => r.residue_at(a),
                Point::Infinity => r.residue_at_infinity(),
            };
        }
        assert_eq!(s, q(0));
    }
}
