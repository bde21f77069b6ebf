//! Small hand-built functions used throughout the tests and examples.

use crate::piecewise::{Breakpoint, PiecewiseMonotone, Segment};
use crate::scalar::{int, ratio, Rational};

fn build(breakpoints: Vec<(Rational, Rational)>, segments: Vec<Segment>) -> PiecewiseMonotone {
    PiecewiseMonotone::new(breakpoints.into_iter().map(|(x, v)| Breakpoint::new(x, v)).collect(), segments)
        .expect("fixture is monotone")
}

pub fn identity() -> PiecewiseMonotone {
    PiecewiseMonotone::identity()
}

/// Right-continuous unit step at 0.
pub fn f2() -> PiecewiseMonotone {
    build(vec![(int(0), int(1))], vec![Segment::constant(int(0)), Segment::constant(int(1))])
}

/// `x` for `x < 0`, `0` on `[0, 1]`, `x − 1` for `x > 1`.
pub fn f3() -> PiecewiseMonotone {
    build(
        vec![(int(0), int(0)), (int(1), int(0))],
        vec![Segment::identity(), Segment::constant(int(0)), Segment::new(int(1), int(-1))],
    )
}

/// `x` for `x < 0`, `x + 1` for `x ≥ 0`.
pub fn f4() -> PiecewiseMonotone {
    build(vec![(int(0), int(1))], vec![Segment::identity(), Segment::new(int(1), int(1))])
}

/// `x` for `x < 0`, `0` on `[0, 1]`, `x` for `x > 1`: a plateau ending in a
/// jump, left-continuous at the jump.
pub fn f5() -> PiecewiseMonotone {
    build(
        vec![(int(0), int(0)), (int(1), int(0))],
        vec![Segment::identity(), Segment::constant(int(0)), Segment::identity()],
    )
}

pub fn all() -> Vec<(&'static str, PiecewiseMonotone)> {
    vec![("identity", identity()), ("F2", f2()), ("F3", f3()), ("F4", f4()), ("F5", f5())]
}

/// CDF of a fair coin on `{0, 1}`.
pub fn bernoulli_half() -> PiecewiseMonotone {
    build(
        vec![(int(0), ratio(1, 2)), (int(1), int(1))],
        vec![Segment::constant(int(0)), Segment::constant(ratio(1, 2)), Segment::constant(int(1))],
    )
}

/// Mixed CDF: mass 1/2 spread uniformly on `[0, 1]`, an atom of 1/4 at 2,
/// then mass 1/4 spread uniformly on `[2, 4]`.
pub fn ramp_atom_cdf() -> PiecewiseMonotone {
    build(
        vec![(int(0), int(0)), (int(1), ratio(1, 2)), (int(2), ratio(3, 4)), (int(4), int(1))],
        vec![
            Segment::constant(int(0)),
            Segment::new(ratio(1, 2), int(0)),
            Segment::constant(ratio(1, 2)),
            Segment::new(ratio(1, 8), ratio(1, 2)),
            Segment::constant(int(1)),
        ],
    )
}
