//! Brute-force ground truth for the generalized inverses.
//!
//! The oracle never looks at segment laws beyond locating the finitely many
//! points where membership in `{x : T(x) > y}` can change: breakpoints and
//! the threshold crossings of every affine law. Between consecutive
//! candidates membership is constant, so evaluating `T` at one point per
//! gap and at each candidate decides the whole set, and with it the
//! infimum.

use crate::error::Side;
use crate::piecewise::{Law, PiecewiseMonotone};
use crate::scalar::{half, int, ExtReal, Rational};

/// `inf{x : T(x) > y}` when `strict`, else `inf{x : T(x) ≥ y}`.
pub fn oracle_inf(f: &PiecewiseMonotone, y: &Rational, strict: bool) -> ExtReal {
    let member = |x: &Rational| {
        let v = f.eval(x);
        if strict {
            v > *y
        } else {
            v >= *y
        }
    };
    let mut candidates: Vec<Rational> = f.breakpoints().iter().map(|bp| bp.x.clone()).collect();
    candidates.extend(f.segments().iter().filter_map(|s| s.solve(y)));
    candidates.sort();
    candidates.dedup();

    let Some(first) = candidates.first() else {
        return if member(&int(0)) { ExtReal::NegInf } else { ExtReal::PosInf };
    };
    if member(&(first - int(1))) {
        return ExtReal::NegInf;
    }
    for (i, c) in candidates.iter().enumerate() {
        let gap_probe = match candidates.get(i + 1) {
            Some(next) => half(c, next),
            None => c + int(1),
        };
        if member(c) || member(&gap_probe) {
            return ExtReal::Fin(c.clone());
        }
    }
    ExtReal::PosInf
}

/// One-sided limit of the oracle inverse at `y`, by exact affine
/// extrapolation from `y ∓ ε` and `y ∓ 2ε`. `eps` must be small enough that
/// no breakpoint of the inverse lies strictly between `y ∓ 2ε` and `y`.
pub fn oracle_limit(f: &PiecewiseMonotone, y: &Rational, side: Side, strict: bool, eps: &Rational) -> ExtReal {
    let step = match side {
        Side::Left => -eps.clone(),
        Side::Right => eps.clone(),
    };
    let near = oracle_inf(f, &(y + &step), strict);
    let far = oracle_inf(f, &(y + &step * int(2)), strict);
    match (near, far) {
        (ExtReal::Fin(a), ExtReal::Fin(b)) => ExtReal::Fin(a * int(2) - b),
        (near, _) => near,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{f2, f3, f4, f5, identity};
    use crate::scalar::ratio;

    #[test]
    fn hand_cases() {
        assert_eq!(oracle_inf(&f3(), &int(0), true), ExtReal::Fin(int(1)));
        assert_eq!(oracle_inf(&f3(), &int(0), false), ExtReal::Fin(int(0)));
        assert_eq!(oracle_inf(&f2(), &int(0), false), ExtReal::NegInf);
        assert_eq!(oracle_inf(&f2(), &int(1), true), ExtReal::PosInf);
        assert_eq!(oracle_inf(&f2(), &ratio(1, 2), true), ExtReal::Fin(int(0)));
        assert_eq!(oracle_inf(&f4(), &ratio(1, 2), false), ExtReal::Fin(int(0)));
        assert_eq!(oracle_inf(&f5(), &int(0), true), ExtReal::Fin(int(1)));
        for q in [ratio(-7, 3), int(0), ratio(5, 2), int(100)] {
            assert_eq!(oracle_inf(&identity(), &q, true), ExtReal::Fin(q.clone()));
        }
    }

    #[test]
    fn one_sided_limits_of_a_jump() {
        let eps = ratio(1, 100);
        assert_eq!(oracle_limit(&identity(), &int(3), Side::Left, true, &eps), ExtReal::Fin(int(3)));
        // T⁺ of F2 jumps from 0 to +inf at y = 1
        assert_eq!(oracle_limit(&f2(), &int(1), Side::Left, true, &eps), ExtReal::Fin(int(0)));
        assert_eq!(oracle_limit(&f2(), &int(1), Side::Right, true, &eps), ExtReal::PosInf);
        // T⁺ of F3 at y = 0: left limit 0, right limit 1
        assert_eq!(oracle_limit(&f3(), &int(0), Side::Left, true, &eps), ExtReal::Fin(int(0)));
        assert_eq!(oracle_limit(&f3(), &int(0), Side::Right, true, &eps), ExtReal::Fin(int(1)));
    }
}
