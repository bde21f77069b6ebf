//! Inverse-transform sampling through the left-continuous inverse `F⁻`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::inverse::{invert, supremum_where, Relation, Which};
use crate::piecewise::{Breakpoint, ExtPiecewise, PiecewiseMonotone, Segment};
use crate::region::Region;
use crate::scalar::{ExtReal, Rational};

/// A validated cumulative distribution function together with its
/// quantile function `F⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdfSpec {
    cdf: PiecewiseMonotone,
    quantile: ExtPiecewise,
}

impl CdfSpec {
    pub fn cdf(&self) -> &PiecewiseMonotone {
        &self.cdf
    }

    /// `F⁻`.
    pub fn quantile(&self) -> &ExtPiecewise {
        &self.quantile
    }

    pub fn into_inner(self) -> PiecewiseMonotone {
        self.cdf
    }
}

/// Checks right-continuity, the limits `F(−∞) = 0`, `F(∞) = 1`, and that
/// every value lies in `[0, 1]`.
pub fn validate_cdf(f: &PiecewiseMonotone) -> Result<CdfSpec> {
    if let Some(x) = f.one_sided_witness(crate::error::Side::Right) {
        return Err(Error::NotRightContinuous(x.to_string()));
    }
    let (lo, hi) = (f.limit_at_neg_inf(), f.limit_at_pos_inf());
    if lo != Rational::zero() || hi != Rational::one() {
        return Err(Error::BadLimits { at_neg_inf: lo.to_string(), at_pos_inf: hi.to_string() });
    }
    for bp in f.breakpoints() {
        if bp.value.is_negative() || bp.value > Rational::one() {
            return Err(Error::OutOfUnitRange { x: bp.x.to_string(), value: bp.value.to_string() });
        }
    }
    Ok(CdfSpec { cdf: f.clone(), quantile: invert(f, Which::Minus) })
}

/// The `i`-th uniform draw for `seed`: a dyadic `k / 2⁶⁴` with `0 < k`.
pub fn uniform_draw(seed: u64, i: u64) -> Rational {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let k = loop {
        let k = rng.next_u64();
        if k != 0 {
            break k;
        }
    };
    Rational::new(BigInt::from(k), BigInt::one() << 64)
}

/// `n` draws `F⁻(u_i)`. Draw `i` depends only on `(seed, i)`.
pub fn sample(cdf: &CdfSpec, n: usize, seed: u64) -> Vec<Rational> {
    sample_with(cdf, n, seed, Which::Minus)
}

/// Like [`sample`], optionally through `F⁺` instead of `F⁻`.
pub fn sample_with(cdf: &CdfSpec, n: usize, seed: u64, which: Which) -> Vec<Rational> {
    let plus;
    let inverse = match which {
        Which::Minus => &cdf.quantile,
        Which::Plus => {
            plus = invert(&cdf.cdf, Which::Plus);
            &plus
        }
    };
    (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let u = uniform_draw(seed, i);
            inverse.eval(&u).into_finite().expect("quantile of a CDF is finite on (0, 1)")
        })
        .collect()
}

/// Right-continuous empirical CDF.
pub fn ecdf(samples: &[Rational]) -> Result<CdfSpec> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut counts: BTreeMap<&Rational, usize> = BTreeMap::new();
    for s in samples {
        *counts.entry(s).or_default() += 1;
    }
    let n = BigInt::from(samples.len());
    let mut cumulative = 0usize;
    let mut breakpoints = Vec::with_capacity(counts.len());
    let mut segments = vec![Segment::constant(Rational::zero())];
    for (x, c) in counts {
        cumulative += c;
        let level = Rational::new(BigInt::from(cumulative), n.clone());
        breakpoints.push(Breakpoint::new(x.clone(), level.clone()));
        segments.push(Segment::constant(level));
    }
    let f = PiecewiseMonotone::new(breakpoints, segments)?;
    validate_cdf(&f)
}

/// `sup_x |a(x) − b(x)|`, exact.
///
/// Both differences are affine between consecutive breakpoints of the
/// union and vanish at `±∞`, so the supremum is attained among breakpoint
/// values and one-sided limits.
pub fn ks_distance(a: &CdfSpec, b: &CdfSpec) -> Rational {
    let (fa, fb) = (&a.cdf, &b.cdf);
    let mut xs: Vec<&Rational> = fa.breakpoints().iter().chain(fb.breakpoints()).map(|bp| &bp.x).collect();
    xs.sort();
    xs.dedup();
    xs.par_iter()
        .map(|x| {
            let d0 = (fa.eval(x) - fb.eval(x)).abs();
            let d1 = (fa.left_limit(x) - fb.left_limit(x)).abs();
            let d2 = (fa.right_limit(x) - fb.right_limit(x)).abs();
            d0.max(d1).max(d2)
        })
        .max()
        .unwrap_or_else(Rational::zero)
}

fn unit_interval() -> Region {
    Region::open(ExtReal::Fin(Rational::zero()), ExtReal::Fin(Rational::one()))
}

/// `{u ∈ (0, 1) : F⁻(u) ≤ λ}`, computed from the quantile function alone.
pub fn pushforward_set(cdf: &CdfSpec, lambda: &Rational) -> Region {
    let sup = supremum_where(&cdf.quantile, Relation::LessEq, lambda);
    let closed = match &sup {
        ExtReal::Fin(s) => cdf.quantile.eval(s) <= *lambda,
        _ => false,
    };
    Region::new(ExtReal::NegInf, sup, false, closed).intersect(&unit_interval())
}

/// Lebesgue measure of [`pushforward_set`]: the probability that `F⁻(U) ≤ λ`.
pub fn pushforward_measure(cdf: &CdfSpec, lambda: &Rational) -> Rational {
    let r = pushforward_set(cdf, lambda);
    if r.is_empty() {
        return Rational::zero();
    }
    let lo = r.lo.into_finite().expect("bounded by (0, 1)");
    let hi = r.hi.into_finite().expect("bounded by (0, 1)");
    hi - lo
}

/// Whether `{u ∈ (0,1) : F⁻(u) ≤ λ}` is exactly `(0, F(λ)] ∩ (0, 1)`.
pub fn pushforward_identity_holds(cdf: &CdfSpec, lambda: &Rational) -> bool {
    let got = pushforward_set(cdf, lambda);
    let want = Region::open_closed(ExtReal::Fin(Rational::zero()), ExtReal::Fin(cdf.cdf.eval(lambda)))
        .intersect(&unit_interval());
    (got.is_empty() && want.is_empty()) || got == want
}
