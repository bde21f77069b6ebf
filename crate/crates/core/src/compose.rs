//! Exact composition and the closed-form descriptions of `T∘T±` and `T±∘T`.
//!
//! A [`CompositionReport`] pairs a predicted law (a list of regions, each
//! with an affine or infinite-constant law) with the exactly composed
//! function. Points the prediction does not cover are listed as excluded
//! and their actual values are recorded without being judged.

use crate::error::{Error, Result, Side};
use crate::inverse::{invert, invert_minus, invert_plus, pointwise_inf_plus, Which};
use crate::piecewise::{Breakpoint, ExtPiecewise, ExtSegment, Law, PiecewiseMonotone, Position};
use crate::region::{subtract, Region};
use crate::scalar::{interior_point, ExtReal, Rational};

/// `outer ∘ inner`, exact. Where `inner` is infinite, `outer` is evaluated
/// through its limits at `±∞`.
pub fn compose_exact(outer: &ExtPiecewise, inner: &ExtPiecewise) -> ExtPiecewise {
    let mut cuts: Vec<Rational> = inner.breakpoints().iter().map(|bp| bp.x.clone()).collect();
    for (k, seg) in inner.segments().iter().enumerate() {
        let (lo, hi) = inner.segment_bounds(k);
        for c in outer.breakpoints() {
            if let Some(x) = seg.solve(&c.x) {
                if lo < x && hi > x {
                    cuts.push(x);
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();

    let mut segments = Vec::with_capacity(cuts.len() + 1);
    for k in 0..=cuts.len() {
        let lo = if k == 0 { ExtReal::NegInf } else { ExtReal::Fin(cuts[k - 1].clone()) };
        let hi = cuts.get(k).cloned().map_or(ExtReal::PosInf, ExtReal::Fin);
        let probe = interior_point(&lo, &hi);
        let Position::Segment(j) = inner.locate(&probe) else { unreachable!("probe avoids inner breakpoints") };
        segments.push(composed_law(outer, &inner.segments()[j], &probe));
    }
    let breakpoints = cuts
        .into_iter()
        .map(|x| {
            let v = outer.eval_ext(&inner.eval(&x));
            Breakpoint::new(x, v)
        })
        .collect();
    ExtPiecewise::new(breakpoints, segments).expect("composition of nondecreasing maps is nondecreasing")
}

fn composed_law(outer: &ExtPiecewise, inner: &ExtSegment, probe: &Rational) -> ExtSegment {
    match inner {
        ExtSegment::NegInf => ExtSegment::constant(outer.limit_at_neg_inf()),
        ExtSegment::PosInf => ExtSegment::constant(outer.limit_at_pos_inf()),
        ExtSegment::Affine(s) => {
            if let Some(c) = s.level() {
                return ExtSegment::constant(outer.eval(&c));
            }
            let w = s.eval(probe);
            let Position::Segment(j) = outer.locate(&w) else {
                unreachable!("no outer breakpoint is crossed inside a composed piece")
            };
            match &outer.segments()[j] {
                ExtSegment::Affine(o) => ExtSegment::Affine(o.after(s)),
                inf => inf.clone(),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedPiece {
    pub region: Region,
    pub law: ExtSegment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub point: Rational,
    pub predicted: ExtReal,
    pub actual: ExtReal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport {
    /// e.g. `T∘T+`.
    pub label: String,
    pub predicted: Vec<PredictedPiece>,
    /// Complement of the predicted regions.
    pub excluded: Vec<Region>,
    pub actual: ExtPiecewise,
    pub mismatches: Vec<Mismatch>,
    /// Actual values at isolated excluded points, recorded only.
    pub edge_values: Vec<(Rational, ExtReal)>,
}

impl CompositionReport {
    fn build(label: String, mut predicted: Vec<PredictedPiece>, actual: ExtPiecewise) -> Self {
        predicted.retain(|p| !p.region.is_empty());
        predicted.sort_by_key(|p| p.region.sort_key());
        let covered: Vec<Region> = predicted.iter().map(|p| p.region.clone()).collect();
        let excluded = subtract(&Region::all(), &covered);
        let mismatches = predicted.iter().flat_map(|p| compare_on(&actual, &p.region, &p.law)).collect();
        let edge_values = excluded.iter().filter_map(|r| r.as_point()).map(|p| (p.clone(), actual.eval(p))).collect();
        CompositionReport { label, predicted, excluded, actual, mismatches, edge_values }
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Predicted value at `x`, or `None` when `x` is excluded.
    pub fn predicted_at(&self, x: &Rational) -> Option<ExtReal> {
        self.predicted.iter().find(|p| p.region.contains(x)).map(|p| p.law.at(x))
    }

    pub fn is_excluded(&self, x: &Rational) -> bool {
        self.excluded.iter().any(|r| r.contains(x))
    }
}

/// Exact comparison of `actual` against `law` on `region`: closed endpoints,
/// every interior breakpoint (value and both limits) and every actual
/// segment overlapping the interior.
fn compare_on(actual: &ExtPiecewise, region: &Region, law: &ExtSegment) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |x: &Rational, got: ExtReal| {
        let want = law.at(x);
        if got != want {
            out.push(Mismatch { point: x.clone(), predicted: want, actual: got });
        }
    };
    if let Some(p) = region.as_point() {
        check(p, actual.eval(p));
        return out;
    }
    for (closed, end) in [(region.lo_closed, &region.lo), (region.hi_closed, &region.hi)] {
        if let (true, ExtReal::Fin(x)) = (closed, end) {
            check(x, actual.eval(x));
        }
    }
    for bp in actual.breakpoints() {
        if region.lo < bp.x && region.hi > bp.x {
            let want = law.at(&bp.x);
            let got = [bp.value.clone(), actual.left_limit(&bp.x), actual.right_limit(&bp.x)]
                .into_iter()
                .find(|v| *v != want);
            if let Some(got) = got {
                check(&bp.x, got);
            }
        }
    }
    for (k, seg) in actual.segments().iter().enumerate() {
        let (slo, shi) = actual.segment_bounds(k);
        let lo = slo.max(region.lo.clone());
        let hi = shi.min(region.hi.clone());
        if lo < hi && seg != law {
            let x = interior_point(&lo, &hi);
            check(&x, seg.at(&x));
        }
    }
    out
}

fn which_label(which: Which) -> &'static str {
    match which {
        Which::Plus => "+",
        Which::Minus => "-",
    }
}

/// Range interior `(T(−∞), T(∞))`.
fn range_interior(f: &PiecewiseMonotone) -> Region {
    Region::open(f.limit_at_neg_inf(), f.limit_at_pos_inf())
}

/// Discontinuities `y_i` of `T±` with `x_i⁻ = T⁻(y_i)` and `x_i⁺ = T⁺(y_i)`.
fn inverse_jumps(f: &PiecewiseMonotone) -> Vec<(ExtReal, ExtReal)> {
    let plus = invert_plus(f);
    let minus = invert_minus(f);
    plus.discontinuities().into_iter().map(|j| (minus.eval(&j.x), plus.eval(&j.x))).collect()
}

fn const_piece(region: Region, v: ExtReal) -> PredictedPiece {
    PredictedPiece { region, law: ExtSegment::constant(v) }
}

fn identity_pieces(base: &Region, cuts: &[Region]) -> impl Iterator<Item = PredictedPiece> {
    subtract(base, cuts).into_iter().map(|region| PredictedPiece { region, law: ExtSegment::identity() })
}

/// `T∘T±`: `T(x_i)` on each open jump band `(y_i⁻, y_i⁺)`, `y` on the range
/// interior away from the closed bands.
pub fn predict_t_after_inv(f: &PiecewiseMonotone, which: Which) -> CompositionReport {
    let jumps = f.discontinuities();
    let mut predicted: Vec<PredictedPiece> = jumps
        .iter()
        .map(|j| {
            let band = Region::open(ExtReal::Fin(j.y_minus.clone()), ExtReal::Fin(j.y_plus.clone()));
            const_piece(band, ExtReal::Fin(j.value_at_x.clone()))
        })
        .collect();
    let bands: Vec<Region> =
        jumps.iter().map(|j| Region::closed(ExtReal::Fin(j.y_minus.clone()), ExtReal::Fin(j.y_plus.clone()))).collect();
    predicted.extend(identity_pieces(&range_interior(f), &bands));
    let actual = compose_exact(&f.to_ext(), &invert(f, which));
    CompositionReport::build(format!("T∘T{}", which_label(which)), predicted, actual)
}

/// `T±∘T`: `x_i⁺` (resp. `x_i⁻`) on each open plateau core `(x_i⁻, x_i⁺)`,
/// `x` away from the closed plateaus.
pub fn predict_inv_after_t(f: &PiecewiseMonotone, which: Which) -> CompositionReport {
    let jumps = inverse_jumps(f);
    let mut predicted: Vec<PredictedPiece> = jumps
        .iter()
        .map(|(lo, hi)| {
            let v = match which {
                Which::Plus => hi.clone(),
                Which::Minus => lo.clone(),
            };
            const_piece(Region::open(lo.clone(), hi.clone()), v)
        })
        .collect();
    let cores: Vec<Region> = jumps.iter().map(|(lo, hi)| Region::closed(lo.clone(), hi.clone())).collect();
    predicted.extend(identity_pieces(&Region::all(), &cores));
    let actual = compose_exact(&invert(f, which), &f.to_ext());
    CompositionReport::build(format!("T{}∘T", which_label(which)), predicted, actual)
}

/// Gap-free laws for a globally one-sided-continuous `T`.
///
/// Right-continuous: `(T∘T⁺, T⁺∘T)` with half-open `[y_i⁻, y_i⁺)` and
/// `[x_i⁻, x_i⁺)`. Left-continuous: `(T∘T⁻, T⁻∘T)` with `(y_i⁻, y_i⁺]`
/// and `(x_i⁻, x_i⁺]`.
pub fn predict_one_sided(f: &PiecewiseMonotone, side: Side) -> Result<(CompositionReport, CompositionReport)> {
    if let Some(x) = f.one_sided_witness(side) {
        return Err(Error::NotOneSidedContinuous { side, witness: x.to_string() });
    }
    let which = match side {
        Side::Right => Which::Plus,
        Side::Left => Which::Minus,
    };
    let half_open = |lo: ExtReal, hi: ExtReal| match side {
        Side::Right => Region::closed_open(lo, hi),
        Side::Left => Region::open_closed(lo, hi),
    };

    let jumps = f.discontinuities();
    let bands: Vec<Region> =
        jumps.iter().map(|j| half_open(ExtReal::Fin(j.y_minus.clone()), ExtReal::Fin(j.y_plus.clone()))).collect();
    let mut outer_first: Vec<PredictedPiece> = jumps
        .iter()
        .zip(&bands)
        .map(|(j, band)| {
            let v = match side {
                Side::Right => j.y_plus.clone(),
                Side::Left => j.y_minus.clone(),
            };
            const_piece(band.clone(), ExtReal::Fin(v))
        })
        .collect();
    outer_first.extend(identity_pieces(&range_interior(f), &bands));
    let actual = compose_exact(&f.to_ext(), &invert(f, which));
    let t_after_inv = CompositionReport::build(format!("T∘T{}", which_label(which)), outer_first, actual);

    let inv_jumps = inverse_jumps(f);
    let cores: Vec<Region> = inv_jumps.iter().map(|(lo, hi)| half_open(lo.clone(), hi.clone())).collect();
    let mut inner_first: Vec<PredictedPiece> = inv_jumps
        .iter()
        .zip(&cores)
        .map(|((lo, hi), core)| {
            let v = match side {
                Side::Right => hi.clone(),
                Side::Left => lo.clone(),
            };
            const_piece(core.clone(), v)
        })
        .collect();
    inner_first.extend(identity_pieces(&Region::all(), &cores));
    let actual = compose_exact(&invert(f, which), &f.to_ext());
    let inv_after_t = CompositionReport::build(format!("T{}∘T", which_label(which)), inner_first, actual);

    Ok((t_after_inv, inv_after_t))
}

/// A point `x` with `T⁺(T(x)) > T⁺(T(x)−)` and yet `T⁺(T(x)) = x`, if any.
///
/// `T⁺(T(x))` comes from the definitional infimum; the left limit of `T⁺`
/// comes from the closed form.
pub fn fig1_witness(f: &PiecewiseMonotone) -> Option<Rational> {
    let plus = invert_plus(f);
    let mut candidates: Vec<Rational> = f.breakpoints().iter().map(|bp| bp.x.clone()).collect();
    for p in f.plateaus() {
        candidates.extend(p.x_minus.into_finite());
        candidates.extend(p.x_plus.into_finite());
    }
    candidates.sort();
    candidates.dedup();
    candidates.into_iter().find(|x| {
        let y = f.eval(x);
        let value = pointwise_inf_plus(f, &y);
        value > plus.left_limit(&y) && value == *x
    })
}

/// True iff `f` exhibits the counterexample pattern of [`fig1_witness`].
pub fn regression_fig1(f: &PiecewiseMonotone) -> bool {
    fig1_witness(f).is_some()
}
