//! Generalized inverses `T⁺(y) = inf{x : T(x) > y}` and
//! `T⁻(y) = inf{x : T(x) ≥ y}`, pointwise and in closed form.

use crate::piecewise::{Breakpoint, ExtPiecewise, ExtSegment, Law, Piecewise, PiecewiseMonotone, Segment};
use crate::scalar::{ExtReal, Rational};

/// Which generalized inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    /// `T⁺`, right-continuous.
    Plus,
    /// `T⁻`, left-continuous.
    Minus,
}

/// Comparison against a threshold `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Greater,
    GreaterEq,
    LessEq,
    Less,
}

impl Relation {
    fn holds(self, v: &ExtReal, y: &Rational) -> bool {
        match self {
            Relation::Greater => *v > *y,
            Relation::GreaterEq => *v >= *y,
            Relation::LessEq => *v <= *y,
            Relation::Less => *v < *y,
        }
    }
}

/// `inf{x : f(x) rel y}` for an upward relation (`>` or `≥`), by an
/// ordered left-to-right scan. `inf ∅ = +∞`, `inf ℝ = −∞`.
pub fn infimum_where<L: Law>(f: &Piecewise<L>, rel: Relation, y: &Rational) -> ExtReal {
    debug_assert!(matches!(rel, Relation::Greater | Relation::GreaterEq));
    let bps = f.breakpoints();
    for (k, seg) in f.segments().iter().enumerate() {
        let (lo, hi) = f.segment_bounds(k);
        match seg.solve(y) {
            // strictly increasing: {x > x*} or {x ≥ x*} meets (lo, hi) iff x* < hi
            Some(cross) => {
                if hi > cross {
                    return lo.max(ExtReal::Fin(cross));
                }
            }
            None => {
                let level = seg.level().expect("non-increasing law is constant");
                if rel.holds(&L::ext_value(&level), y) {
                    return lo;
                }
            }
        }
        if let Some(bp) = bps.get(k) {
            if rel.holds(&L::ext_value(&bp.value), y) {
                return ExtReal::Fin(bp.x.clone());
            }
        }
    }
    ExtReal::PosInf
}

/// `sup{x : f(x) rel y}` for a downward relation (`≤` or `<`), by an
/// ordered right-to-left scan. `sup ∅ = −∞`, `sup ℝ = +∞`.
pub fn supremum_where<L: Law>(f: &Piecewise<L>, rel: Relation, y: &Rational) -> ExtReal {
    debug_assert!(matches!(rel, Relation::LessEq | Relation::Less));
    let bps = f.breakpoints();
    for (k, seg) in f.segments().iter().enumerate().rev() {
        if k < bps.len() && rel.holds(&L::ext_value(&bps[k].value), y) {
            return ExtReal::Fin(bps[k].x.clone());
        }
        let (lo, hi) = f.segment_bounds(k);
        match seg.solve(y) {
            Some(cross) => {
                if lo < cross {
                    return hi.min(ExtReal::Fin(cross));
                }
            }
            None => {
                let level = seg.level().expect("non-increasing law is constant");
                if rel.holds(&L::ext_value(&level), y) {
                    return hi;
                }
            }
        }
    }
    ExtReal::NegInf
}

pub fn pointwise_inf_plus<L: Law>(f: &Piecewise<L>, y: &Rational) -> ExtReal {
    infimum_where(f, Relation::Greater, y)
}

pub fn pointwise_inf_minus<L: Law>(f: &Piecewise<L>, y: &Rational) -> ExtReal {
    infimum_where(f, Relation::GreaterEq, y)
}

/// `sup{x : T(x) ≤ y}`, equal to `T⁺(y)`.
pub fn pointwise_sup_plus<L: Law>(f: &Piecewise<L>, y: &Rational) -> ExtReal {
    supremum_where(f, Relation::LessEq, y)
}

/// `sup{x : T(x) < y}`, equal to `T⁻(y)`.
pub fn pointwise_sup_minus<L: Law>(f: &Piecewise<L>, y: &Rational) -> ExtReal {
    supremum_where(f, Relation::Less, y)
}

pub fn pointwise_inverse(f: &PiecewiseMonotone, which: Which, y: &Rational) -> ExtReal {
    match which {
        Which::Plus => pointwise_inf_plus(f, y),
        Which::Minus => pointwise_inf_minus(f, y),
    }
}

/// One open band `(lo, hi)` of the y-axis together with the inverse law on it.
struct Band {
    lo: ExtReal,
    hi: ExtReal,
    law: ExtSegment,
}

/// Walks the completed graph of `f` (segments plus vertical jump segments)
/// in increasing order and reflects it. Strictly increasing segments become
/// affine bands, jumps become constant bands at the jump location, and
/// constant segments collapse to single y-values, which later become
/// breakpoints of the inverse. Consecutive bands share endpoints.
fn reflected_bands(f: &PiecewiseMonotone) -> Vec<Band> {
    let mut bands = Vec::new();
    if let ExtReal::Fin(c) = f.limit_at_neg_inf() {
        bands.push(Band { lo: ExtReal::NegInf, hi: ExtReal::Fin(c), law: ExtSegment::NegInf });
    }
    let bps = f.breakpoints();
    for (k, seg) in f.segments().iter().enumerate() {
        if seg.level().is_none() {
            let (lo, hi) = f.segment_bounds(k);
            let image = |x: ExtReal| match x {
                ExtReal::Fin(x) => ExtReal::Fin(seg.eval(&x)),
                inf => inf,
            };
            let inv = Segment::new(Rational::from_integer(1.into()) / &seg.slope, -&seg.intercept / &seg.slope);
            bands.push(Band { lo: image(lo), hi: image(hi), law: ExtSegment::Affine(inv) });
        }
        if let Some(bp) = bps.get(k) {
            let left = seg.eval(&bp.x);
            let right = f.segments()[k + 1].eval(&bp.x);
            if left < right {
                bands.push(Band {
                    lo: ExtReal::Fin(left),
                    hi: ExtReal::Fin(right),
                    law: ExtSegment::Affine(Segment::constant(bp.x.clone())),
                });
            }
        }
    }
    if let ExtReal::Fin(c) = f.limit_at_pos_inf() {
        bands.push(Band { lo: ExtReal::Fin(c), hi: ExtReal::PosInf, law: ExtSegment::PosInf });
    }
    bands
}

/// Closed-form `T⁺` or `T⁻` as an extended piecewise function.
///
/// Between two bands the inverse takes the limit from the right (`T⁺`) or
/// from the left (`T⁻`). Breakpoint values of `f` play no role.
pub fn invert(f: &PiecewiseMonotone, which: Which) -> ExtPiecewise {
    let bands = reflected_bands(f);
    debug_assert!(bands.first().is_some_and(|b| b.lo == ExtReal::NegInf));
    debug_assert!(bands.last().is_some_and(|b| b.hi == ExtReal::PosInf));
    let mut breakpoints = Vec::with_capacity(bands.len().saturating_sub(1));
    for pair in bands.windows(2) {
        let (below, above) = (&pair[0], &pair[1]);
        debug_assert_eq!(below.hi, above.lo);
        let y = below.hi.finite().expect("interior band edge is finite").clone();
        let value = match which {
            Which::Plus => above.law.at(&y),
            Which::Minus => below.law.at(&y),
        };
        breakpoints.push(Breakpoint::new(y, value));
    }
    let segments = bands.into_iter().map(|b| b.law).collect();
    Piecewise::new(breakpoints, segments).expect("reflected graph is monotone")
}

pub fn invert_plus(f: &PiecewiseMonotone) -> ExtPiecewise {
    invert(f, Which::Plus)
}

pub fn invert_minus(f: &PiecewiseMonotone) -> ExtPiecewise {
    invert(f, Which::Minus)
}
