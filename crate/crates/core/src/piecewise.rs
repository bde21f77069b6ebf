//! Nondecreasing piecewise-affine functions on the real line.
//!
//! A function is stored as a strictly increasing list of breakpoints, each
//! carrying its own value, and one affine law per open interval between
//! them. Storing breakpoint values explicitly lets a representation sit
//! anywhere between its left and right limits, so left-continuous,
//! right-continuous and "neither" breakpoints are all expressible.
//!
//! Every constructed value is canonical: a breakpoint is dropped when the
//! laws on both sides coincide and its value equals that common law. Two
//! functions are then equal (including all one-sided limits) iff their
//! representations are field-identical.

use std::fmt::{self, Debug, Display};

use num_traits::{Signed, Zero};

use crate::error::{Error, Location, Result};
use crate::scalar::{ExtReal, Rational};

/// The affine law `intercept + slope·x` on an open interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Segment {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        Segment { slope, intercept }
    }

    pub fn constant(c: Rational) -> Self {
        Segment { slope: Rational::zero(), intercept: c }
    }

    pub fn identity() -> Self {
        Segment::new(crate::scalar::int(1), Rational::zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.intercept + &self.slope * x
    }

    /// `self ∘ inner` as an affine law.
    pub fn after(&self, inner: &Segment) -> Segment {
        Segment::new(&self.slope * &inner.slope, &self.slope * &inner.intercept + &self.intercept)
    }
}

impl Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·x", self.intercept, self.slope)
    }
}

/// Segment law with values in the extended reals. Infinite values only
/// occur as constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtSegment {
    NegInf,
    Affine(Segment),
    PosInf,
}

impl ExtSegment {
    pub fn constant(v: ExtReal) -> Self {
        match v {
            ExtReal::NegInf => ExtSegment::NegInf,
            ExtReal::PosInf => ExtSegment::PosInf,
            ExtReal::Fin(c) => ExtSegment::Affine(Segment::constant(c)),
        }
    }

    pub fn identity() -> Self {
        ExtSegment::Affine(Segment::identity())
    }
}

impl Display for ExtSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtSegment::NegInf => f.write_str("-inf"),
            ExtSegment::PosInf => f.write_str("+inf"),
            ExtSegment::Affine(s) => Display::fmt(s, f),
        }
    }
}

/// Behaviour shared by finite and extended segment laws.
pub trait Law: Clone + Debug + PartialEq + Eq + Send + Sync {
    type Value: Clone + Debug + Display + Ord + Send + Sync;

    fn at(&self, x: &Rational) -> Self::Value;
    /// `Some(c)` iff the law is constant.
    fn level(&self) -> Option<Self::Value>;
    fn has_negative_slope(&self) -> bool;
    /// The unique `x` with `at(x) = y`, for strictly increasing laws.
    fn solve(&self, y: &Rational) -> Option<Rational>;
    /// Limit of the law as `x → ±∞`.
    fn limit(&self, toward_pos_inf: bool) -> ExtReal;
    fn to_ext(&self) -> ExtSegment;
    fn ext_value(v: &Self::Value) -> ExtReal;
}

impl Law for Segment {
    type Value = Rational;

    fn at(&self, x: &Rational) -> Rational {
        self.eval(x)
    }

    fn level(&self) -> Option<Rational> {
        self.slope.is_zero().then(|| self.intercept.clone())
    }

    fn has_negative_slope(&self) -> bool {
        self.slope.is_negative()
    }

    fn solve(&self, y: &Rational) -> Option<Rational> {
        self.slope.is_positive().then(|| (y - &self.intercept) / &self.slope)
    }

    fn limit(&self, toward_pos_inf: bool) -> ExtReal {
        if self.slope.is_zero() {
            ExtReal::Fin(self.intercept.clone())
        } else if toward_pos_inf {
            ExtReal::PosInf
        } else {
            ExtReal::NegInf
        }
    }

    fn to_ext(&self) -> ExtSegment {
        ExtSegment::Affine(self.clone())
    }

    fn ext_value(v: &Rational) -> ExtReal {
        ExtReal::Fin(v.clone())
    }
}

impl Law for ExtSegment {
    type Value = ExtReal;

    fn at(&self, x: &Rational) -> ExtReal {
        match self {
            ExtSegment::NegInf => ExtReal::NegInf,
            ExtSegment::PosInf => ExtReal::PosInf,
            ExtSegment::Affine(s) => ExtReal::Fin(s.eval(x)),
        }
    }

    fn level(&self) -> Option<ExtReal> {
        match self {
            ExtSegment::NegInf => Some(ExtReal::NegInf),
            ExtSegment::PosInf => Some(ExtReal::PosInf),
            ExtSegment::Affine(s) => s.level().map(ExtReal::Fin),
        }
    }

    fn has_negative_slope(&self) -> bool {
        matches!(self, ExtSegment::Affine(s) if s.has_negative_slope())
    }

    fn solve(&self, y: &Rational) -> Option<Rational> {
        match self {
            ExtSegment::Affine(s) => s.solve(y),
            _ => None,
        }
    }

    fn limit(&self, toward_pos_inf: bool) -> ExtReal {
        match self {
            ExtSegment::NegInf => ExtReal::NegInf,
            ExtSegment::PosInf => ExtReal::PosInf,
            ExtSegment::Affine(s) => s.limit(toward_pos_inf),
        }
    }

    fn to_ext(&self) -> ExtSegment {
        self.clone()
    }

    fn ext_value(v: &ExtReal) -> ExtReal {
        v.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Breakpoint<V> {
    pub x: Rational,
    pub value: V,
}

impl<V> Breakpoint<V> {
    pub fn new(x: Rational, value: V) -> Self {
        Breakpoint { x, value }
    }
}

/// A discontinuity at `x`: left limit `y_minus`, right limit `y_plus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpRecord<V = Rational> {
    pub x: Rational,
    pub y_minus: V,
    pub y_plus: V,
    pub value_at_x: V,
}

/// A maximal interval of positive length on which the function equals `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlateauRecord<V = Rational> {
    pub y: V,
    pub x_minus: ExtReal,
    pub x_plus: ExtReal,
    pub left_closed: bool,
    pub right_closed: bool,
}

impl<V> PlateauRecord<V> {
    pub fn is_bounded(&self) -> bool {
        self.x_minus.is_finite() && self.x_plus.is_finite()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.left_closed { self.x_minus <= *x } else { self.x_minus < *x };
        let below = if self.right_closed { self.x_plus >= *x } else { self.x_plus > *x };
        above && below
    }
}

/// Shape of a level set `{x : f(x) = y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preimage {
    Empty,
    Singleton(Rational),
    IntervalMoreThanOnePoint { lo: ExtReal, hi: ExtReal, lo_closed: bool, hi_closed: bool },
}

/// Where a point falls relative to the breakpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Breakpoint(usize),
    Segment(usize),
}

/// A nondecreasing piecewise-affine function in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piecewise<L: Law> {
    breakpoints: Vec<Breakpoint<L::Value>>,
    segments: Vec<L>,
}

/// Real-valued function `ℝ → ℝ`.
pub type PiecewiseMonotone = Piecewise<Segment>;
/// Function `ℝ → ℝ ∪ {±∞}`; the shape of a generalized inverse.
pub type ExtPiecewise = Piecewise<ExtSegment>;

impl<L: Law> Piecewise<L> {
    /// Validates the description and returns it in canonical form.
    pub fn new(breakpoints: Vec<Breakpoint<L::Value>>, segments: Vec<L>) -> Result<Self> {
        if segments.len() != breakpoints.len() + 1 {
            return Err(Error::MalformedShape { breakpoints: breakpoints.len(), segments: segments.len() });
        }
        for (i, w) in breakpoints.windows(2).enumerate() {
            if w[0].x >= w[1].x {
                return Err(Error::UnsortedBreakpoints(i + 1));
            }
        }
        for (k, s) in segments.iter().enumerate() {
            if s.has_negative_slope() {
                return Err(Error::MonotonicityViolation {
                    location: Location::Segment(k),
                    detail: format!("negative slope in {}", s.to_ext()),
                });
            }
        }
        for (i, bp) in breakpoints.iter().enumerate() {
            let left = segments[i].at(&bp.x);
            let right = segments[i + 1].at(&bp.x);
            if left > bp.value || bp.value > right {
                return Err(Error::MonotonicityViolation {
                    location: Location::Breakpoint(i),
                    detail: format!(
                        "at x = {} need left limit {} <= value {} <= right limit {}",
                        bp.x, left, bp.value, right
                    ),
                });
            }
        }
        Ok(Self::canonical(breakpoints, segments))
    }

    /// A single law on all of ℝ.
    pub fn from_law(law: L) -> Self {
        Piecewise { breakpoints: Vec::new(), segments: vec![law] }
    }

    fn canonical(breakpoints: Vec<Breakpoint<L::Value>>, segments: Vec<L>) -> Self {
        let mut segs_in = segments.into_iter();
        let mut segs = vec![segs_in.next().expect("at least one segment")];
        let mut bps = Vec::with_capacity(breakpoints.len());
        for (bp, next) in breakpoints.into_iter().zip(segs_in) {
            let last = segs.last().expect("nonempty");
            if *last == next && bp.value == next.at(&bp.x) {
                continue;
            }
            bps.push(bp);
            segs.push(next);
        }
        Piecewise { breakpoints: bps, segments: segs }
    }

    pub fn breakpoints(&self) -> &[Breakpoint<L::Value>] {
        &self.breakpoints
    }

    pub fn segments(&self) -> &[L] {
        &self.segments
    }

    pub fn into_parts(self) -> (Vec<Breakpoint<L::Value>>, Vec<L>) {
        (self.breakpoints, self.segments)
    }

    pub fn locate(&self, x: &Rational) -> Position {
        match self.breakpoints.binary_search_by(|bp| bp.x.cmp(x)) {
            Ok(i) => Position::Breakpoint(i),
            Err(k) => Position::Segment(k),
        }
    }

    /// Open interval governed by segment `k`.
    pub fn segment_bounds(&self, k: usize) -> (ExtReal, ExtReal) {
        let lo = if k == 0 { ExtReal::NegInf } else { ExtReal::Fin(self.breakpoints[k - 1].x.clone()) };
        let hi = match self.breakpoints.get(k) {
            Some(bp) => ExtReal::Fin(bp.x.clone()),
            None => ExtReal::PosInf,
        };
        (lo, hi)
    }

    pub fn eval(&self, x: &Rational) -> L::Value {
        match self.locate(x) {
            Position::Breakpoint(i) => self.breakpoints[i].value.clone(),
            Position::Segment(k) => self.segments[k].at(x),
        }
    }

    pub fn left_limit(&self, x: &Rational) -> L::Value {
        match self.locate(x) {
            Position::Breakpoint(i) | Position::Segment(i) => self.segments[i].at(x),
        }
    }

    pub fn right_limit(&self, x: &Rational) -> L::Value {
        match self.locate(x) {
            Position::Breakpoint(i) => self.segments[i + 1].at(x),
            Position::Segment(k) => self.segments[k].at(x),
        }
    }

    pub fn limit_at_neg_inf(&self) -> ExtReal {
        self.segments[0].limit(false)
    }

    pub fn limit_at_pos_inf(&self) -> ExtReal {
        self.segments.last().expect("nonempty").limit(true)
    }

    /// Evaluation extended to `±∞` through the limits at infinity.
    pub fn eval_ext(&self, x: &ExtReal) -> ExtReal {
        match x {
            ExtReal::NegInf => self.limit_at_neg_inf(),
            ExtReal::PosInf => self.limit_at_pos_inf(),
            ExtReal::Fin(x) => L::ext_value(&self.eval(x)),
        }
    }

    pub fn is_continuous_at(&self, x: &Rational) -> bool {
        self.left_limit(x) == self.right_limit(x)
    }

    pub fn is_right_continuous_at(&self, x: &Rational) -> bool {
        self.eval(x) == self.right_limit(x)
    }

    pub fn is_left_continuous_at(&self, x: &Rational) -> bool {
        self.eval(x) == self.left_limit(x)
    }

    /// First breakpoint where the function is not continuous from `side`.
    pub fn one_sided_witness(&self, side: crate::error::Side) -> Option<&Rational> {
        use crate::error::Side;
        self.breakpoints.iter().enumerate().find_map(|(i, bp)| {
            let limit = match side {
                Side::Left => self.segments[i].at(&bp.x),
                Side::Right => self.segments[i + 1].at(&bp.x),
            };
            (limit != bp.value).then_some(&bp.x)
        })
    }

    pub fn discontinuities(&self) -> Vec<JumpRecord<L::Value>> {
        self.breakpoints
            .iter()
            .enumerate()
            .filter_map(|(i, bp)| {
                let y_minus = self.segments[i].at(&bp.x);
                let y_plus = self.segments[i + 1].at(&bp.x);
                (y_minus < y_plus).then(|| JumpRecord {
                    x: bp.x.clone(),
                    y_minus,
                    y_plus,
                    value_at_x: bp.value.clone(),
                })
            })
            .collect()
    }

    /// Maximal constancy intervals of positive length, in increasing order.
    pub fn plateaus(&self) -> Vec<PlateauRecord<L::Value>> {
        // Canonical form guarantees each constant segment is maximal.
        self.segments
            .iter()
            .enumerate()
            .filter_map(|(k, seg)| {
                let y = seg.level()?;
                let (x_minus, x_plus) = self.segment_bounds(k);
                let left_closed = k > 0 && self.breakpoints[k - 1].value == y;
                let right_closed = self.breakpoints.get(k).is_some_and(|bp| bp.value == y);
                Some(PlateauRecord { y, x_minus, x_plus, left_closed, right_closed })
            })
            .collect()
    }

    fn with_values(&self, pick: impl Fn(usize, &Breakpoint<L::Value>) -> L::Value) -> Self {
        let bps =
            self.breakpoints.iter().enumerate().map(|(i, bp)| Breakpoint::new(bp.x.clone(), pick(i, bp))).collect();
        Self::canonical(bps, self.segments.clone())
    }

    /// `x ↦ f(x−)`.
    pub fn left_version(&self) -> Self {
        self.with_values(|i, bp| self.segments[i].at(&bp.x))
    }

    /// `x ↦ f(x+)`.
    pub fn right_version(&self) -> Self {
        self.with_values(|i, bp| self.segments[i + 1].at(&bp.x))
    }

    pub fn preimage(&self, y: &L::Value) -> Preimage {
        if let Some(p) = self.plateaus().into_iter().find(|p| p.y == *y) {
            return Preimage::IntervalMoreThanOnePoint {
                lo: p.x_minus,
                hi: p.x_plus,
                lo_closed: p.left_closed,
                hi_closed: p.right_closed,
            };
        }
        if let Some(bp) = self.breakpoints.iter().find(|bp| bp.value == *y) {
            return Preimage::Singleton(bp.x.clone());
        }
        let target = L::ext_value(y);
        let Some(y) = target.finite() else {
            return Preimage::Empty;
        };
        for (k, seg) in self.segments.iter().enumerate() {
            if let Some(x) = seg.solve(y) {
                let (lo, hi) = self.segment_bounds(k);
                if lo < x && hi > x {
                    return Preimage::Singleton(x);
                }
            }
        }
        Preimage::Empty
    }

    /// Pointwise equality including all one-sided limits.
    pub fn canonical_equal(&self, other: &Self) -> bool {
        self == other
    }

    pub fn to_ext(&self) -> ExtPiecewise {
        Piecewise {
            breakpoints: self
                .breakpoints
                .iter()
                .map(|bp| Breakpoint::new(bp.x.clone(), L::ext_value(&bp.value)))
                .collect(),
            segments: self.segments.iter().map(Law::to_ext).collect(),
        }
    }
}

impl PiecewiseMonotone {
    pub fn identity() -> Self {
        Piecewise::from_law(Segment::identity())
    }

    pub fn affine(slope: Rational, intercept: Rational) -> Result<Self> {
        Piecewise::new(Vec::new(), vec![Segment::new(slope, intercept)])
    }
}

impl ExtPiecewise {
    /// The finite-valued function, if no value or law is infinite.
    pub fn to_finite(&self) -> Option<PiecewiseMonotone> {
        let breakpoints = self
            .breakpoints
            .iter()
            .map(|bp| Some(Breakpoint::new(bp.x.clone(), bp.value.finite()?.clone())))
            .collect::<Option<Vec<_>>>()?;
        let segments = self
            .segments
            .iter()
            .map(|s| match s {
                ExtSegment::Affine(s) => Some(s.clone()),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Piecewise { breakpoints, segments })
    }
}
