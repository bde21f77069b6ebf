//! Intervals of the real line with explicit endpoint closure.

use std::fmt;

use crate::scalar::{ExtReal, Rational};

/// A convex subset of ℝ. Infinite endpoints are never closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub lo: ExtReal,
    pub hi: ExtReal,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Region {
    pub fn new(lo: ExtReal, hi: ExtReal, lo_closed: bool, hi_closed: bool) -> Self {
        let lo_closed = lo_closed && lo.is_finite();
        let hi_closed = hi_closed && hi.is_finite();
        Region { lo, hi, lo_closed, hi_closed }
    }

    pub fn all() -> Self {
        Region::new(ExtReal::NegInf, ExtReal::PosInf, false, false)
    }

    pub fn open(lo: ExtReal, hi: ExtReal) -> Self {
        Region::new(lo, hi, false, false)
    }

    pub fn closed(lo: ExtReal, hi: ExtReal) -> Self {
        Region::new(lo, hi, true, true)
    }

    pub fn closed_open(lo: ExtReal, hi: ExtReal) -> Self {
        Region::new(lo, hi, true, false)
    }

    pub fn open_closed(lo: ExtReal, hi: ExtReal) -> Self {
        Region::new(lo, hi, false, true)
    }

    pub fn point(x: Rational) -> Self {
        Region::closed(ExtReal::Fin(x.clone()), ExtReal::Fin(x))
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => !(self.lo_closed && self.hi_closed),
            std::cmp::Ordering::Greater => true,
        }
    }

    /// The single point, for degenerate closed regions.
    pub fn as_point(&self) -> Option<&Rational> {
        (self.lo == self.hi && self.lo_closed && self.hi_closed).then(|| self.lo.finite()).flatten()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed { self.lo <= *x } else { self.lo < *x };
        let below = if self.hi_closed { self.hi >= *x } else { self.hi > *x };
        above && below
    }

    pub fn intersect(&self, other: &Region) -> Region {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Region::new(lo, hi, lo_closed, hi_closed)
    }

    pub(crate) fn sort_key(&self) -> (ExtReal, bool) {
        (self.lo.clone(), !self.lo_closed)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        if let Some(p) = self.as_point() {
            return write!(f, "{{{p}}}");
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Sorts regions by their lower end.
pub fn sort_regions(regions: &mut [Region]) {
    regions.sort_by_key(Region::sort_key);
}

/// `base` minus the union of `cuts`. The cuts must be pairwise disjoint;
/// they may touch.
pub fn subtract(base: &Region, cuts: &[Region]) -> Vec<Region> {
    let mut cuts: Vec<Region> = cuts.iter().filter(|c| !c.is_empty()).cloned().collect();
    sort_regions(&mut cuts);
    let mut gaps = Vec::new();
    let (mut lo, mut lo_closed) = (ExtReal::NegInf, false);
    for cut in &cuts {
        gaps.push(Region::new(lo, cut.lo.clone(), lo_closed, !cut.lo_closed));
        lo = cut.hi.clone();
        lo_closed = !cut.hi_closed;
    }
    gaps.push(Region::new(lo, ExtReal::PosInf, lo_closed, false));
    gaps.into_iter().map(|g| g.intersect(base)).filter(|g| !g.is_empty()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn fin(n: i64) -> ExtReal {
        ExtReal::Fin(int(n))
    }

    #[test]
    fn emptiness() {
        assert!(!Region::point(int(1)).is_empty());
        assert!(Region::open(fin(1), fin(1)).is_empty());
        assert!(Region::closed_open(fin(1), fin(1)).is_empty());
        assert!(Region::open(fin(2), fin(1)).is_empty());
        assert!(!Region::all().is_empty());
    }

    #[test]
    fn subtract_touching_cuts() {
        let base = Region::open(fin(0), fin(10));
        let cuts = vec![Region::closed(fin(2), fin(4)), Region::closed(fin(4), fin(6))];
        assert_eq!(subtract(&base, &cuts), vec![Region::open(fin(0), fin(2)), Region::open(fin(6), fin(10))]);
        let cuts = vec![Region::closed_open(fin(2), fin(4)), Region::open_closed(fin(4), fin(6))];
        assert_eq!(
            subtract(&base, &cuts),
            vec![Region::open(fin(0), fin(2)), Region::point(int(4)), Region::open(fin(6), fin(10))]
        );
    }

    #[test]
    fn subtract_unbounded() {
        let cuts = vec![Region::open(ExtReal::NegInf, fin(0)), Region::closed_open(fin(3), ExtReal::PosInf)];
        assert_eq!(subtract(&Region::all(), &cuts), vec![Region::closed_open(fin(0), fin(3))]);
        assert!(subtract(&Region::open(fin(5), fin(6)), &cuts).is_empty());
    }
}
