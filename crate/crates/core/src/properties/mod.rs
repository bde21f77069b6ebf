//! Random functions, a definitional oracle, and an executable registry of
//! the structural facts about generalized inverses.
//!
//! Each registry entry is checked on a family of functions at a set of
//! probe points. Probe points always contain every structurally relevant
//! rational (breakpoints, one-sided limits, plateau levels and endpoints,
//! their midpoints) so that boundary and maximality claims are tested
//! exactly where they can fail, plus pseudo-random rationals.
//!
//! Implication-shaped entries count how often their hypothesis held, so a
//! pass cannot be vacuous without it showing up in `hypothesis_hits`.

mod generator;
mod oracle;

pub use generator::{generate, generate_cdf, ContinuityMix, GeneratorConfig};
pub use oracle::{oracle_inf, oracle_limit};

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::compose::{predict_inv_after_t, predict_one_sided, predict_t_after_inv, CompositionReport};
use crate::error::{Error, Result, Side};
use crate::inverse::{invert_minus, invert_plus, Which};
use crate::piecewise::{ExtPiecewise, PiecewiseMonotone, PlateauRecord};
use crate::scalar::{half, int, interior_point, ratio, ExtReal, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub function: PiecewiseMonotone,
    pub witness: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult {
    pub property_id: String,
    /// Whether the entry is an implication, so that `hypothesis_hits` matters.
    pub implication: bool,
    pub cases_run: u64,
    pub checks: u64,
    pub hypothesis_hits: u64,
    /// Evaluations skipped because a point of continuity would be infinite.
    pub skips: u64,
    pub violations: Vec<Violation>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Number of pseudo-random probes added to the structural ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub random_ys: usize,
    pub random_xs: usize,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { random_ys: 16, random_xs: 16 }
    }
}

/// One function with its inverses and probe points.
pub struct Case {
    pub f: PiecewiseMonotone,
    pub plus: ExtPiecewise,
    pub minus: ExtPiecewise,
    /// Sorted, distinct.
    pub ys: Vec<Rational>,
    /// Sorted, distinct.
    pub xs: Vec<Rational>,
    plus_ys: Vec<ExtReal>,
    minus_ys: Vec<ExtReal>,
    t_xs: Vec<Rational>,
    plateaus: Vec<PlateauRecord>,
    plus_plateaus: Vec<PlateauRecord<ExtReal>>,
    minus_plateaus: Vec<PlateauRecord<ExtReal>>,
    eps_y: Rational,
    eps_x: Rational,
}

/// Breakpoint values, one-sided limits, plateau levels and finite limits at `±∞`.
pub fn structural_levels(f: &PiecewiseMonotone) -> Vec<Rational> {
    let mut out = Vec::new();
    for bp in f.breakpoints() {
        out.push(bp.value.clone());
        out.push(f.left_limit(&bp.x));
        out.push(f.right_limit(&bp.x));
    }
    out.extend(f.plateaus().into_iter().map(|p| p.y));
    out.extend(f.limit_at_neg_inf().into_finite());
    out.extend(f.limit_at_pos_inf().into_finite());
    out
}

/// Breakpoints and finite plateau endpoints.
pub fn structural_xs(f: &PiecewiseMonotone) -> Vec<Rational> {
    let mut out: Vec<Rational> = f.breakpoints().iter().map(|bp| bp.x.clone()).collect();
    for p in f.plateaus() {
        out.extend(p.x_minus.into_finite());
        out.extend(p.x_plus.into_finite());
    }
    out
}

fn sort_dedup(v: &mut Vec<Rational>) {
    v.sort();
    v.dedup();
}

/// Points, their midpoints, one point beyond each end, and `extra` further
/// distinct random rationals from a window two units wider than the hull.
fn densify(mut points: Vec<Rational>, extra: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    sort_dedup(&mut points);
    if points.is_empty() {
        points = vec![int(0)];
    }
    let lo = points.first().expect("nonempty") - int(2);
    let hi = points.last().expect("nonempty") + int(2);
    let mids: Vec<Rational> = points.windows(2).map(|w| half(&w[0], &w[1])).collect();
    let mut set: BTreeSet<Rational> = points.into_iter().chain(mids).collect();
    set.insert(&lo + int(1));
    set.insert(&hi - int(1));
    let target = set.len() + extra;
    while set.len() < target {
        let den = rng.gen_range(1..=64i64);
        let t = ratio(rng.gen_range(0..=den * 64), den * 64);
        set.insert(&lo + (&hi - &lo) * t);
    }
    set.into_iter().collect()
}

fn min_gap(points: &[Rational]) -> Rational {
    points.windows(2).map(|w| &w[1] - &w[0]).min().map_or_else(|| int(1), |g| g / int(4))
}

impl Case {
    /// Probes drawn from a stream determined by `(seed, index)`.
    pub fn seeded(f: PiecewiseMonotone, seed: u64, index: u64, probes: &ProbeConfig) -> Self {
        Self::new(f, &mut generator::rng_for(seed, salt("probes"), index), probes)
    }

    pub fn new(f: PiecewiseMonotone, rng: &mut ChaCha8Rng, probes: &ProbeConfig) -> Self {
        let plus = invert_plus(&f);
        let minus = invert_minus(&f);
        let levels = structural_levels(&f);
        let mut xs = structural_xs(&f);
        for y in &levels {
            xs.extend(plus.eval(y).into_finite());
            xs.extend(minus.eval(y).into_finite());
        }
        let ys = densify(levels, probes.random_ys, rng);
        let xs = densify(xs, probes.random_xs, rng);
        Case {
            plus_ys: ys.iter().map(|y| plus.eval(y)).collect(),
            minus_ys: ys.iter().map(|y| minus.eval(y)).collect(),
            t_xs: xs.iter().map(|x| f.eval(x)).collect(),
            plateaus: f.plateaus(),
            plus_plateaus: plus.plateaus(),
            minus_plateaus: minus.plateaus(),
            eps_y: min_gap(&ys),
            eps_x: min_gap(&xs),
            f,
            plus,
            minus,
            ys,
            xs,
        }
    }
}

#[derive(Default)]
struct Counts {
    checks: u64,
    hits: u64,
    skips: u64,
    violations: Vec<Violation>,
}

struct Tally<'a> {
    f: &'a PiecewiseMonotone,
    counts: Counts,
}

impl Tally<'_> {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> (String, String, String)) {
        self.counts.checks += 1;
        if !ok {
            let (witness, expected, got) = detail();
            self.counts.violations.push(Violation { function: self.f.clone(), witness, expected, got });
        }
    }

    fn hit(&mut self) {
        self.counts.hits += 1;
    }

    fn skip(&mut self) {
        self.counts.skips += 1;
    }

    fn report(&mut self, r: &CompositionReport) {
        self.counts.checks += 1;
        for m in &r.mismatches {
            self.counts.violations.push(Violation {
                function: self.f.clone(),
                witness: format!("{} at {}", r.label, m.point),
                expected: m.predicted.to_string(),
                got: m.actual.to_string(),
            });
        }
    }
}

fn s(v: impl ToString) -> String {
    v.to_string()
}

type Check = fn(&Case, &mut Tally);

/// A registry entry.
pub struct PropertyDef {
    pub id: &'static str,
    pub implication: bool,
    pub summary: &'static str,
    check: Check,
}

macro_rules! prop {
    ($id:literal, $imp:literal, $summary:literal, $f:ident) => {
        PropertyDef { id: $id, implication: $imp, summary: $summary, check: $f }
    };
}

static REGISTRY: &[PropertyDef] = &[
    prop!("L1.i", false, "T+(y) = -inf iff T > y everywhere, and the three analogues", l1_i),
    prop!("L1.ii", false, "T+ and T- are nondecreasing", l1_ii),
    prop!("L1.iii", false, "T+ right-, T- left-continuous; T+(y-) = T-(y), T-(y+) = T+(y)", l1_iii),
    prop!("L1.iv", false, "T+ continuous at y iff T- continuous at y", l1_iv),
    prop!("L1.v", false, "T- <= T+", l1_v),
    prop!("L1.vi", false, "T-(y) = T+(y) iff the level set of y has at most one point", l1_vi),
    prop!("L1.vii.a", true, "y <= T(x) implies T-(y) <= x", l1_vii_a),
    prop!("L1.vii.b", true, "y < T(x) implies T+(y) <= x", l1_vii_b),
    prop!("L1.vii.c", false, "T-(T(x)) <= x", l1_vii_c),
    prop!("L1.vii.d", true, "y > T(x) implies T-(y) >= x", l1_vii_d),
    prop!("L1.vii.e", true, "y >= T(x) implies T+(y) >= x", l1_vii_e),
    prop!("L1.vii.f", false, "T+(T(x)) >= x", l1_vii_f),
    prop!("L1.vii.g", true, "T+(T(x)) = T-(T(x)) implies both equal x", l1_vii_g),
    prop!("L1.vii.h", true, "T(T+(y)-) <= y", l1_vii_h),
    prop!("L1.viii.a", true, "T right-continuous at x, y > T(x) implies T-(y) > x", l1_viii_a),
    prop!("L1.viii.b", true, "T right-continuous at x, y > T(x) implies T+(y) > x", l1_viii_b),
    prop!("L1.viii.c", true, "T right-continuous at x: y <= T(x) iff T-(y) <= x", l1_viii_c),
    prop!("L1.ix", true, "T right-continuous at T±(y) implies T(T±(y)) >= y", l1_ix),
    prop!("L1.x.a", true, "T left-continuous at x, y < T(x) implies T-(y) < x", l1_x_a),
    prop!("L1.x.b", true, "T left-continuous at x, y < T(x) implies T+(y) < x", l1_x_b),
    prop!("L1.x.c", true, "T left-continuous at x: y >= T(x) iff T+(y) >= x", l1_x_c),
    prop!("L1.xi", true, "T left-continuous at T±(y) implies T(T±(y)) <= y", l1_xi),
    prop!("L1.xii", true, "T continuous at T±(y) implies T(T±(y)) = y", l1_xii),
    prop!("L1.xiii", true, "T constant on (x1, x2) implies T+(T(x)) > x > T-(T(x)) there", l1_xiii),
    prop!("L1.xiv", false, "left and right versions have the same inverses", l1_xiv),
    prop!("L2.nec", true, "T+(y) > T-(y) implies T = y on the maximal (T-(y), T+(y))", l2_nec),
    prop!("L2.suf", true, "a constancy interval or T±(T(x)) != x implies T+(y) > T-(y)", l2_suf),
    prop!("L2.equiv", false, "T+(y) > T-(y) iff T = y on a proper interval", l2_equiv),
    prop!("L3.nec", true, "a jump at x implies T+ = x = T- on the maximal (T(x-), T(x+))", l3_nec),
    prop!("L3.suf", true, "T+ or T- constant x on a proper interval implies a jump at x", l3_suf),
    prop!("L3.equiv", false, "jump at x iff T± has a plateau at level x", l3_equiv),
    prop!("L4.TTinv", false, "closed form of T∘T± off band edges and outside the range", l4_t_after_inv),
    prop!("L4.invT", false, "closed form of T±∘T off plateau edges", l4_inv_after_t),
    prop!("L5.right", false, "gap-free T∘T+ and T+∘T for right-continuous T", l5_right),
    prop!("L5.left", false, "gap-free T∘T- and T-∘T for left-continuous T", l5_left),
];

pub fn registry() -> &'static [PropertyDef] {
    REGISTRY
}

pub fn property_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|p| p.id).collect()
}

fn lookup(id: &str) -> Result<&'static PropertyDef> {
    REGISTRY.iter().find(|p| p.id == id).ok_or_else(|| Error::UnknownProperty(id.to_string()))
}

fn salt(id: &str) -> u64 {
    // FNV-1a; stable across builds, unlike the std hasher.
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn run_cases(
    def: &PropertyDef,
    seed: u64,
    probes: &ProbeConfig,
    functions: impl IndexedParallelIterator<Item = (u64, PiecewiseMonotone)>,
) -> PropertyResult {
    let salt = salt(def.id);
    let per_case: Vec<Counts> = functions
        .map(|(i, f)| {
            let mut rng = generator::rng_for(seed, salt, i);
            let case = Case::new(f, &mut rng, probes);
            let mut tally = Tally { f: &case.f, counts: Counts::default() };
            (def.check)(&case, &mut tally);
            tally.counts
        })
        .collect();
    let mut result = PropertyResult {
        property_id: def.id.to_string(),
        implication: def.implication,
        cases_run: per_case.len() as u64,
        checks: 0,
        hypothesis_hits: 0,
        skips: 0,
        violations: Vec::new(),
    };
    for c in per_case {
        result.checks += c.checks;
        result.hypothesis_hits += c.hits;
        result.skips += c.skips;
        result.violations.extend(c.violations);
    }
    result
}

/// Runs one property over `cases` generated functions.
pub fn run_property(id: &str, config: &GeneratorConfig, cases: u64) -> Result<PropertyResult> {
    run_property_with(id, config, cases, &ProbeConfig::default())
}

pub fn run_property_with(
    id: &str,
    config: &GeneratorConfig,
    cases: u64,
    probes: &ProbeConfig,
) -> Result<PropertyResult> {
    let def = lookup(id)?;
    config.validate()?;
    let functions = (0..cases as usize).into_par_iter().map(|i| (i as u64, generate(config, i as u64)));
    Ok(run_cases(def, config.seed, probes, functions))
}

/// Runs one property over a fixed list of functions.
pub fn run_property_on(id: &str, functions: &[PiecewiseMonotone], seed: u64) -> Result<PropertyResult> {
    let def = lookup(id)?;
    let functions = functions.par_iter().enumerate().map(|(i, f)| (i as u64, f.clone()));
    Ok(run_cases(def, seed, &ProbeConfig::default(), functions))
}

pub fn run_suite(config: &GeneratorConfig, cases: u64) -> Vec<PropertyResult> {
    REGISTRY.par_iter().map(|p| run_property(p.id, config, cases).expect("registered id")).collect()
}

pub fn run_suite_on(functions: &[PiecewiseMonotone], seed: u64) -> Vec<PropertyResult> {
    REGISTRY.par_iter().map(|p| run_property_on(p.id, functions, seed).expect("registered id")).collect()
}

// ---------------------------------------------------------------------------
// registry entries

fn l1_i(c: &Case, t: &mut Tally) {
    let (lo, hi) = (c.f.limit_at_neg_inf(), c.f.limit_at_pos_inf());
    // whether the extreme values are attained (on constant tails)
    let lo_attained = c.f.segments()[0].slope == int(0);
    let hi_attained = c.f.segments().last().expect("nonempty").slope == int(0);
    for (j, y) in c.ys.iter().enumerate() {
        let all_gt = lo > *y || (lo == *y && !lo_attained);
        let all_le = hi <= *y;
        let all_ge = lo >= *y;
        let all_lt = hi < *y || (hi == *y && !hi_attained);
        let (p, m) = (&c.plus_ys[j], &c.minus_ys[j]);
        for (label, lhs, rhs, got) in [
            ("a", *p == ExtReal::NegInf, all_gt, p),
            ("b", *p == ExtReal::PosInf, all_le, p),
            ("c", *m == ExtReal::NegInf, all_ge, m),
            ("d", *m == ExtReal::PosInf, all_lt, m),
        ] {
            t.check(lhs == rhs, || (format!("({label}) y = {y}"), format!("quantifier {rhs}"), s(got)));
        }
    }
}

fn l1_ii(c: &Case, t: &mut Tally) {
    for (label, vals) in [("T+", &c.plus_ys), ("T-", &c.minus_ys)] {
        for (j, w) in vals.windows(2).enumerate() {
            t.check(w[0] <= w[1], || {
                (
                    format!("{label} at y = {} < {}", c.ys[j], c.ys[j + 1]),
                    "nondecreasing".into(),
                    format!("{} > {}", w[0], w[1]),
                )
            });
        }
    }
}

fn l1_iii(c: &Case, t: &mut Tally) {
    let eps = &c.eps_y;
    for (j, y) in c.ys.iter().enumerate() {
        let (p, m) = (&c.plus_ys[j], &c.minus_ys[j]);
        let checks = [
            ("T+(y+) = T+(y)", c.plus.right_limit(y), p),
            ("T-(y-) = T-(y)", c.minus.left_limit(y), m),
            ("T+(y-) = T-(y)", c.plus.left_limit(y), m),
            ("T-(y+) = T+(y)", c.minus.right_limit(y), p),
            ("oracle T+(y-) = T-(y)", oracle_limit(&c.f, y, Side::Left, true, eps), m),
            ("oracle T-(y+) = T+(y)", oracle_limit(&c.f, y, Side::Right, false, eps), p),
            ("oracle T+(y+) = T+(y)", oracle_limit(&c.f, y, Side::Right, true, eps), p),
            ("oracle T-(y-) = T-(y)", oracle_limit(&c.f, y, Side::Left, false, eps), m),
        ];
        for (label, got, want) in checks {
            t.check(got == *want, || (format!("{label} at y = {y}"), s(want), s(&got)));
        }
    }
}

fn l1_iv(c: &Case, t: &mut Tally) {
    for y in &c.ys {
        let (a, b) = (c.plus.is_continuous_at(y), c.minus.is_continuous_at(y));
        t.check(a == b, || (format!("y = {y}"), format!("T+ continuous: {a}"), format!("T- continuous: {b}")));
    }
    let bp: Vec<&Rational> = c.plus.breakpoints().iter().map(|b| &b.x).collect();
    let bm: Vec<&Rational> = c.minus.breakpoints().iter().map(|b| &b.x).collect();
    t.check(bp == bm, || ("canonical breakpoint sets".into(), format!("{bp:?}"), format!("{bm:?}")));
    let jp: Vec<Rational> = c.plus.discontinuities().into_iter().map(|j| j.x).collect();
    let jm: Vec<Rational> = c.minus.discontinuities().into_iter().map(|j| j.x).collect();
    t.check(jp == jm, || ("discontinuity sets".into(), format!("{jp:?}"), format!("{jm:?}")));
}

fn l1_v(c: &Case, t: &mut Tally) {
    for (j, y) in c.ys.iter().enumerate() {
        let (p, m) = (&c.plus_ys[j], &c.minus_ys[j]);
        t.check(m <= p, || (format!("y = {y}"), format!("T- <= {p}"), s(m)));
    }
}

fn l1_vi(c: &Case, t: &mut Tally) {
    use crate::piecewise::Preimage;
    for (j, y) in c.ys.iter().enumerate() {
        let equal = c.plus_ys[j] == c.minus_ys[j];
        let at_most_one = !matches!(c.f.preimage(y), Preimage::IntervalMoreThanOnePoint { .. });
        t.check(equal == at_most_one, || {
            (format!("y = {y}"), format!("card <= 1: {at_most_one}"), format!("T- = T+: {equal}"))
        });
    }
}

/// Runs `body` over all probe pairs `(x, T(x), y, T+(y), T-(y))`.
fn for_pairs(c: &Case, mut body: impl FnMut(&Rational, &Rational, &Rational, &ExtReal, &ExtReal)) {
    for (x, tx) in c.xs.iter().zip(&c.t_xs) {
        for (j, y) in c.ys.iter().enumerate() {
            body(x, tx, y, &c.plus_ys[j], &c.minus_ys[j]);
        }
    }
}

fn pair(x: &Rational, y: &Rational) -> String {
    format!("x = {x}, y = {y}")
}

fn l1_vii_a(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, _, m| {
        if y <= tx {
            t.hit();
            t.check(*m <= *x, || (pair(x, y), format!("T-(y) <= {x}"), s(m)));
        }
    });
}

fn l1_vii_b(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, p, _| {
        if y < tx {
            t.hit();
            t.check(*p <= *x, || (pair(x, y), format!("T+(y) <= {x}"), s(p)));
        }
    });
}

fn l1_vii_c(c: &Case, t: &mut Tally) {
    for (x, tx) in c.xs.iter().zip(&c.t_xs) {
        let v = c.minus.eval(tx);
        t.check(v <= *x, || (format!("x = {x}"), format!("T-(T(x)) <= {x}"), s(&v)));
    }
}

fn l1_vii_d(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, _, m| {
        if y > tx {
            t.hit();
            t.check(*m >= *x, || (pair(x, y), format!("T-(y) >= {x}"), s(m)));
        }
    });
}

fn l1_vii_e(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, p, _| {
        if y >= tx {
            t.hit();
            t.check(*p >= *x, || (pair(x, y), format!("T+(y) >= {x}"), s(p)));
        }
    });
}

fn l1_vii_f(c: &Case, t: &mut Tally) {
    for (x, tx) in c.xs.iter().zip(&c.t_xs) {
        let v = c.plus.eval(tx);
        t.check(v >= *x, || (format!("x = {x}"), format!("T+(T(x)) >= {x}"), s(&v)));
    }
}

fn l1_vii_g(c: &Case, t: &mut Tally) {
    for (x, tx) in c.xs.iter().zip(&c.t_xs) {
        let (p, m) = (c.plus.eval(tx), c.minus.eval(tx));
        if p == m {
            t.hit();
            t.check(p == *x, || (format!("x = {x}"), s(x), s(&p)));
        }
    }
}

fn l1_vii_h(c: &Case, t: &mut Tally) {
    for (j, y) in c.ys.iter().enumerate() {
        match c.plus_ys[j].finite() {
            Some(p) => {
                t.hit();
                let v = c.f.left_limit(p);
                t.check(v <= *y, || (format!("y = {y}, T+(y) = {p}"), format!("T(T+(y)-) <= {y}"), s(&v)));
            }
            None => t.skip(),
        }
    }
}

fn l1_viii_a(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, _, m| {
        if c.f.is_right_continuous_at(x) && y > tx {
            t.hit();
            t.check(*m > *x, || (pair(x, y), format!("T-(y) > {x}"), s(m)));
        }
    });
}

fn l1_viii_b(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, p, _| {
        if c.f.is_right_continuous_at(x) && y > tx {
            t.hit();
            t.check(*p > *x, || (pair(x, y), format!("T+(y) > {x}"), s(p)));
        }
    });
}

fn l1_viii_c(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, _, m| {
        if c.f.is_right_continuous_at(x) {
            t.hit();
            let (a, b) = (y <= tx, *m <= *x);
            t.check(a == b, || (pair(x, y), format!("y <= T(x): {a}"), format!("T-(y) <= x: {b}")));
        }
    });
}

fn l1_x_a(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, _, m| {
        if c.f.is_left_continuous_at(x) && y < tx {
            t.hit();
            t.check(*m < *x, || (pair(x, y), format!("T-(y) < {x}"), s(m)));
        }
    });
}

fn l1_x_b(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, p, _| {
        if c.f.is_left_continuous_at(x) && y < tx {
            t.hit();
            t.check(*p < *x, || (pair(x, y), format!("T+(y) < {x}"), s(p)));
        }
    });
}

fn l1_x_c(c: &Case, t: &mut Tally) {
    for_pairs(c, |x, tx, y, p, _| {
        if c.f.is_left_continuous_at(x) {
            t.hit();
            let (a, b) = (y >= tx, *p >= *x);
            t.check(a == b, || (pair(x, y), format!("y >= T(x): {a}"), format!("T+(y) >= x: {b}")));
        }
    });
}

/// Runs `body(label, y, x)` for each probe `y` and finite `x = T±(y)` where
/// `hyp(x)` holds; infinite `T±(y)` are skipped.
fn at_inverse_points(
    c: &Case,
    t: &mut Tally,
    hyp: impl Fn(&Rational) -> bool,
    body: impl Fn(&mut Tally, &str, &Rational, &Rational),
) {
    for (j, y) in c.ys.iter().enumerate() {
        for (label, v) in [("T+", &c.plus_ys[j]), ("T-", &c.minus_ys[j])] {
            match v.finite() {
                Some(x) if hyp(x) => {
                    t.hit();
                    body(t, label, y, x);
                }
                Some(_) => {}
                None => t.skip(),
            }
        }
    }
}

fn l1_ix(c: &Case, t: &mut Tally) {
    at_inverse_points(
        c,
        t,
        |x| c.f.is_right_continuous_at(x),
        |t, label, y, x| {
            let v = c.f.eval(x);
            t.check(v >= *y, || (format!("y = {y}, {label}(y) = {x}"), format!(">= {y}"), s(&v)));
        },
    );
}

fn l1_xi(c: &Case, t: &mut Tally) {
    at_inverse_points(
        c,
        t,
        |x| c.f.is_left_continuous_at(x),
        |t, label, y, x| {
            let v = c.f.eval(x);
            t.check(v <= *y, || (format!("y = {y}, {label}(y) = {x}"), format!("<= {y}"), s(&v)));
        },
    );
}

fn l1_xii(c: &Case, t: &mut Tally) {
    at_inverse_points(
        c,
        t,
        |x| c.f.is_continuous_at(x),
        |t, label, y, x| {
            let v = c.f.eval(x);
            t.check(v == *y, || (format!("y = {y}, {label}(y) = {x}"), s(y), s(&v)));
        },
    );
}

fn l1_xiii(c: &Case, t: &mut Tally) {
    for p in c.plateaus.iter().filter(|p| p.is_bounded()) {
        let mut points = vec![interior_point(&p.x_minus, &p.x_plus)];
        points.extend(c.xs.iter().filter(|x| p.x_minus < **x && p.x_plus > **x).cloned());
        for x in points {
            t.hit();
            let tx = c.f.eval(&x);
            let (hi, lo) = (c.plus.eval(&tx), c.minus.eval(&tx));
            t.check(hi > x && lo < x, || {
                (format!("x = {x} in plateau at {}", p.y), format!("{lo} < x < {hi}"), "violated".into())
            });
        }
    }
}

fn l1_xiv(c: &Case, t: &mut Tally) {
    let (l, r) = (c.f.left_version(), c.f.right_version());
    for (label, which_of) in [("plus", invert_plus as fn(&PiecewiseMonotone) -> ExtPiecewise), ("minus", invert_minus)]
    {
        let (a, b, own) = (which_of(&l), which_of(&r), which_of(&c.f));
        t.check(a.canonical_equal(&b), || {
            (format!("{label}: left vs right version"), format!("{a:?}"), format!("{b:?}"))
        });
        t.check(a.canonical_equal(&own), || {
            (format!("{label}: version vs original"), format!("{own:?}"), format!("{a:?}"))
        });
    }
}

fn l2_nec(c: &Case, t: &mut Tally) {
    for (j, y) in c.ys.iter().enumerate() {
        let (p, m) = (&c.plus_ys[j], &c.minus_ys[j]);
        if p <= m {
            continue;
        }
        t.hit();
        let mut points = vec![interior_point(m, p)];
        points.extend(c.xs.iter().filter(|x| *m < **x && *p > **x).cloned());
        for x in points {
            let tx = c.f.eval(&x);
            t.check(tx == *y, || (format!("y = {y}, x = {x}"), s(y), s(&tx)));
            let (hi, lo) = (c.plus.eval(&tx), c.minus.eval(&tx));
            t.check(hi > x && lo < x, || (format!("y = {y}, x = {x}"), format!("{lo} < x < {hi}"), "violated".into()));
        }
        let maximal = c.plateaus.iter().any(|q| q.y == *y && q.x_minus == *m && q.x_plus == *p);
        t.check(maximal, || (format!("y = {y}"), format!("plateau ({m}, {p})"), format!("{:?}", c.plateaus)));
        if let Some(m) = m.finite() {
            let v = c.f.eval(&(m - &c.eps_x));
            t.check(v < *y, || (format!("y = {y}, left of {m}"), format!("< {y}"), s(&v)));
        }
        if let Some(p) = p.finite() {
            let v = c.f.eval(&(p + &c.eps_x));
            t.check(v > *y, || (format!("y = {y}, right of {p}"), format!("> {y}"), s(&v)));
        }
    }
}

fn l2_suf(c: &Case, t: &mut Tally) {
    let gap = |y: &Rational| (c.plus.eval(y), c.minus.eval(y));
    for q in c.plateaus.iter().filter(|q| q.is_bounded()) {
        t.hit();
        let (p, m) = gap(&q.y);
        t.check(p > m, || (format!("plateau at {}", q.y), "T+ > T-".into(), format!("{p} <= {m}")));
    }
    for (x, tx) in c.xs.iter().zip(&c.t_xs) {
        let (p, m) = gap(tx);
        if p > *x || m < *x {
            t.hit();
            t.check(p > m, || (format!("x = {x}, y = T(x) = {tx}"), "T+ > T-".into(), format!("{p} <= {m}")));
        }
    }
}

fn l2_equiv(c: &Case, t: &mut Tally) {
    for (j, y) in c.ys.iter().enumerate() {
        let gap = c.plus_ys[j] > c.minus_ys[j];
        let flat = c.plateaus.iter().any(|q| q.y == *y);
        t.check(gap == flat, || (format!("y = {y}"), format!("constancy interval: {flat}"), format!("T+ > T-: {gap}")));
    }
}

fn l3_nec(c: &Case, t: &mut Tally) {
    for jump in c.f.discontinuities() {
        t.hit();
        let x = ExtReal::Fin(jump.x.clone());
        let (lo, hi) = (&jump.y_minus, &jump.y_plus);
        let mut points = vec![half(lo, hi)];
        points.extend(c.ys.iter().filter(|y| lo < *y && *y < hi).cloned());
        for y in points {
            let (p, m) = (c.plus.eval(&y), c.minus.eval(&y));
            t.check(p == x && m == x, || (format!("jump at {x}, y = {y}"), s(&x), format!("T+ = {p}, T- = {m}")));
        }
        for (label, plats) in [("T+", &c.plus_plateaus), ("T-", &c.minus_plateaus)] {
            let exact = plats.iter().any(|q| q.y == x && q.x_minus == *lo && q.x_plus == *hi);
            t.check(exact, || (format!("{label} plateau at level {x}"), format!("({lo}, {hi})"), format!("{plats:?}")));
        }
        let (below, above) = (lo - &c.eps_y, hi + &c.eps_y);
        for (label, v) in [
            ("T+ below", c.plus.eval(&below)),
            ("T- below", c.minus.eval(&below)),
            ("T+ above", c.plus.eval(&above)),
            ("T- above", c.minus.eval(&above)),
        ] {
            t.check(v != x, || (format!("jump at {x}: {label} band"), format!("!= {x}"), s(&v)));
        }
    }
}

fn l3_suf(c: &Case, t: &mut Tally) {
    for (label, plats) in [("T+", &c.plus_plateaus), ("T-", &c.minus_plateaus)] {
        for q in plats {
            match q.y.finite() {
                Some(x) => {
                    t.hit();
                    let (l, r) = (c.f.left_limit(x), c.f.right_limit(x));
                    t.check(r > l, || {
                        (
                            format!("{label} constant {x} on ({}, {})", q.x_minus, q.x_plus),
                            "T(x+) > T(x-)".into(),
                            format!("{r} <= {l}"),
                        )
                    });
                }
                None => t.skip(),
            }
        }
    }
}

fn l3_equiv(c: &Case, t: &mut Tally) {
    for x in &c.xs {
        let jump = c.f.right_limit(x) > c.f.left_limit(x);
        let level = ExtReal::Fin(x.clone());
        let a = c.plus_plateaus.iter().any(|q| q.y == level);
        let b = c.minus_plateaus.iter().any(|q| q.y == level);
        t.check(jump == a && a == b, || {
            (format!("x = {x}"), format!("jump: {jump}"), format!("T+ plateau {a}, T- plateau {b}"))
        });
    }
}

fn l4_t_after_inv(c: &Case, t: &mut Tally) {
    for which in [Which::Plus, Which::Minus] {
        t.report(&predict_t_after_inv(&c.f, which));
    }
}

fn l4_inv_after_t(c: &Case, t: &mut Tally) {
    for which in [Which::Plus, Which::Minus] {
        t.report(&predict_inv_after_t(&c.f, which));
    }
}

fn one_sided(c: &Case, t: &mut Tally, side: Side) {
    let g = match side {
        Side::Right => c.f.right_version(),
        Side::Left => c.f.left_version(),
    };
    match predict_one_sided(&g, side) {
        Ok((a, b)) => {
            t.report(&a);
            t.report(&b);
        }
        Err(e) => t.check(false, || (format!("{side} version"), "one-sided continuous".into(), e.to_string())),
    }
}

fn l5_right(c: &Case, t: &mut Tally) {
    one_sided(c, t, Side::Right);
}

fn l5_left(c: &Case, t: &mut Tally) {
    one_sided(c, t, Side::Left);
}
