//! Acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the report is always printed.

use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use geninv::cli::{emit_ext_function, emit_function, parse_ext_function, parse_function};
use geninv::compose::{
    compose_exact, predict_inv_after_t, predict_one_sided, predict_t_after_inv, regression_fig1, CompositionReport,
};
use geninv::inverse::{pointwise_inf_minus, pointwise_inf_plus, pointwise_sup_minus, pointwise_sup_plus, Which};
use geninv::properties::{
    generate, generate_cdf, oracle_inf, oracle_limit, run_suite, run_suite_on, Case, GeneratorConfig, ProbeConfig,
};
use geninv::sampling::{ecdf, ks_distance, pushforward_identity_holds, sample, validate_cdf};
use geninv::scalar::{int, ratio};
use geninv::{
    fixtures, invert_minus, invert_plus, Breakpoint, Error, ExtPiecewise, ExtReal, ExtSegment, PiecewiseMonotone,
    Preimage, Rational, Segment, Side,
};

const SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fin(r: Rational) -> ExtReal {
    ExtReal::Fin(r)
}

/// Collects failed expectations with their labels.
#[derive(Default)]
struct Table {
    checked: usize,
    failed: Vec<String>,
}

impl Table {
    fn expect(&mut self, label: &str, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed.push(label.to_string());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        self.checked += 1;
        if got != want {
            self.failed.push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn outcome(self) -> Outcome {
        if self.failed.is_empty() {
            Ok(format!("{} expectations", self.checked))
        } else {
            Err(format!("{} of {} failed: {}", self.failed.len(), self.checked, self.failed.join("; ")))
        }
    }
}

fn oracle_equivalence() -> Outcome {
    let config = GeneratorConfig::with_seed(SEED);
    let probes = ProbeConfig { random_ys: 200, random_xs: 0 };
    let results: Vec<(usize, Vec<String>)> = (0..500u64)
        .into_par_iter()
        .map(|i| {
            let f = generate(&config, i);
            let (plus, minus) = (invert_plus(&f), invert_minus(&f));
            let case = Case::seeded(f, SEED, i, &probes);
            let mut bad = Vec::new();
            for y in &case.ys {
                let (p, m) = (plus.eval(y), minus.eval(y));
                let (op, om) = (oracle_inf(&case.f, y, true), oracle_inf(&case.f, y, false));
                if p != op || pointwise_inf_plus(&case.f, y) != op {
                    bad.push(format!("f#{i} T+({y}): closed form {p}, oracle {op}"));
                }
                if m != om || pointwise_inf_minus(&case.f, y) != om {
                    bad.push(format!("f#{i} T-({y}): closed form {m}, oracle {om}"));
                }
            }
            (case.ys.len(), bad)
        })
        .collect();
    let min_probes = results.iter().map(|r| r.0).min().unwrap_or(0);
    let total: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<&String> = results.iter().flat_map(|r| &r.1).collect();
    if min_probes < 200 {
        return Err(format!("only {min_probes} probes for some function"));
    }
    match bad.first() {
        None => Ok(format!("500 functions, {total} probes (min {min_probes} per function), exact agreement")),
        Some(first) => Err(format!("{} disagreements, first: {first}", bad.len())),
    }
}

fn property_suite() -> Outcome {
    let results = run_suite(&GeneratorConfig::with_seed(SEED), 200);
    let mut problems = Vec::new();
    for r in &results {
        if let Some(v) = r.violations.first() {
            problems.push(format!("{}: {} violations, first at {}", r.property_id, r.violations.len(), v.witness));
        }
        if r.implication && r.hypothesis_hits < 50 {
            problems.push(format!("{}: only {} hypothesis hits", r.property_id, r.hypothesis_hits));
        }
    }
    let min_hits = results.iter().filter(|r| r.implication).map(|r| r.hypothesis_hits).min().unwrap_or(0);
    if problems.is_empty() {
        Ok(format!("{} properties, 0 violations, min implication hits {min_hits}", results.len()))
    } else {
        Err(problems.join("; "))
    }
}

fn clean(r: &CompositionReport) -> bool {
    r.is_clean()
}

fn fixture_table() -> Outcome {
    let (id, f2, f3, f4, f5) = (fixtures::identity(), fixtures::f2(), fixtures::f3(), fixtures::f4(), fixtures::f5());
    let mut t = Table::default();
    let q = |n, d| ratio(n, d);

    // representation
    let bad = PiecewiseMonotone::new(
        vec![Breakpoint::new(int(0), int(-1))],
        vec![Segment::constant(int(0)), Segment::constant(int(1))],
    );
    t.expect("breakpoint below left limit rejected", matches!(bad, Err(Error::MonotonicityViolation { .. })));
    let spurious = PiecewiseMonotone::new(vec![Breakpoint::new(int(0), int(0))], vec![Segment::identity(); 2]);
    t.expect("spurious breakpoint merges", spurious.map(|g| g.canonical_equal(&id)).unwrap_or(false));
    t.expect("F2 differs from its left version", !f2.canonical_equal(&f2.left_version()));
    t.expect("F3 equals itself", f3.canonical_equal(&f3));

    // evaluation and limits
    t.eq("F2(0)", f2.eval(&int(0)), int(1));
    t.eq("identity(7/2)", id.eval(&q(7, 2)), q(7, 2));
    t.eq("F3(1/2)", f3.eval(&q(1, 2)), int(0));
    t.eq("F2(0-)", f2.left_limit(&int(0)), int(0));
    t.eq("F2(0+)", f2.right_limit(&int(0)), int(1));
    t.eq("identity(5-)", id.left_limit(&int(5)), int(5));
    t.eq("F4(0-)", f4.left_limit(&int(0)), int(0));
    t.eq("F4(0+)", f4.right_limit(&int(0)), int(1));
    // the same limits from the sequences F4(∓1/n)
    let within = |v: Rational, target: i64, n: i64| int(target) - q(1, n) <= v && v <= int(target) + q(1, n);
    t.expect("F4(0-) as a sequence limit", (1..=1000).all(|n| within(f4.eval(&q(-1, n)), 0, n)));
    t.expect("F4(0+) as a sequence limit", (1..=1000).all(|n| within(f4.eval(&q(1, n)), 1, n)));
    t.eq("F4: T+(0-) from the definition", oracle_limit(&f4, &int(0), Side::Left, true, &q(1, 1000)), fin(int(0)));
    t.eq("identity limits", (id.limit_at_neg_inf(), id.limit_at_pos_inf()), (ExtReal::NegInf, ExtReal::PosInf));
    t.eq("F2 limits", (f2.limit_at_neg_inf(), f2.limit_at_pos_inf()), (fin(int(0)), fin(int(1))));
    t.eq("F3 limits", (f3.limit_at_neg_inf(), f3.limit_at_pos_inf()), (ExtReal::NegInf, ExtReal::PosInf));

    // jumps and plateaus
    t.expect("identity has no jumps", id.discontinuities().is_empty());
    let j = f2.discontinuities();
    t.eq(
        "F2 jumps",
        j.iter().map(|j| (j.x.clone(), j.y_minus.clone(), j.y_plus.clone(), j.value_at_x.clone())).collect::<Vec<_>>(),
        vec![(int(0), int(0), int(1), int(1))],
    );
    let j = f5.discontinuities();
    t.eq(
        "F5 jumps",
        j.iter().map(|j| (j.x.clone(), j.y_minus.clone(), j.y_plus.clone(), j.value_at_x.clone())).collect::<Vec<_>>(),
        vec![(int(1), int(0), int(1), int(0))],
    );
    t.expect("identity has no plateaus", id.plateaus().is_empty());
    let p = f3.plateaus();
    t.eq(
        "F3 plateaus",
        p.iter()
            .map(|p| (p.y.clone(), p.x_minus.clone(), p.x_plus.clone(), p.left_closed, p.right_closed))
            .collect::<Vec<_>>(),
        vec![(int(0), fin(int(0)), fin(int(1)), true, true)],
    );
    let p = f2.plateaus();
    t.eq(
        "F2 plateaus",
        p.iter()
            .map(|p| (p.y.clone(), p.x_minus.clone(), p.x_plus.clone(), p.left_closed, p.right_closed))
            .collect::<Vec<_>>(),
        vec![(int(0), ExtReal::NegInf, fin(int(0)), false, false), (int(1), fin(int(0)), ExtReal::PosInf, true, false)],
    );

    // versions and preimages
    t.eq("right_version(F5)(1)", f5.right_version().eval(&int(1)), int(1));
    t.eq("left_version(F2)(0)", f2.left_version().eval(&int(0)), int(0));
    t.expect("right_version(identity)", id.right_version().canonical_equal(&id));
    t.eq("preimage(identity, 3)", id.preimage(&int(3)), Preimage::Singleton(int(3)));
    t.eq(
        "preimage(F3, 0)",
        f3.preimage(&int(0)),
        Preimage::IntervalMoreThanOnePoint { lo: fin(int(0)), hi: fin(int(1)), lo_closed: true, hi_closed: true },
    );
    t.eq("preimage(F2, 1/2)", f2.preimage(&q(1, 2)), Preimage::Empty);

    // pointwise inverses
    t.eq("inf+ identity 3", pointwise_inf_plus(&id, &int(3)), fin(int(3)));
    t.eq("inf+ F2 1", pointwise_inf_plus(&f2, &int(1)), ExtReal::PosInf);
    t.eq("inf+ F3 0", pointwise_inf_plus(&f3, &int(0)), fin(int(1)));
    t.eq("inf- F2 0", pointwise_inf_minus(&f2, &int(0)), ExtReal::NegInf);
    t.eq("inf- F3 0", pointwise_inf_minus(&f3, &int(0)), fin(int(0)));
    t.eq("inf- F4 1/2", pointwise_inf_minus(&f4, &q(1, 2)), fin(int(0)));
    t.eq("sup+ F2 0", pointwise_sup_plus(&f2, &int(0)), fin(int(0)));
    t.eq("sup+ identity 3", pointwise_sup_plus(&id, &int(3)), fin(int(3)));
    t.eq("sup- F2 0", pointwise_sup_minus(&f2, &int(0)), ExtReal::NegInf);
    t.eq("oracle F3 0 strict", oracle_inf(&f3, &int(0), true), fin(int(1)));
    t.eq("oracle F2 0 weak", oracle_inf(&f2, &int(0), false), ExtReal::NegInf);
    t.eq("oracle identity 5/7", oracle_inf(&id, &q(5, 7), true), fin(q(5, 7)));

    // closed-form inverses
    t.expect("invert_plus(identity)", invert_plus(&id).canonical_equal(&id.to_ext()));
    let f3_plus = PiecewiseMonotone::new(
        vec![Breakpoint::new(int(0), int(1))],
        vec![Segment::identity(), Segment::new(int(1), int(1))],
    )
    .expect("monotone");
    t.expect("invert_plus(F3)", invert_plus(&f3).canonical_equal(&f3_plus.to_ext()));
    let f2_minus = ExtPiecewise::new(
        vec![Breakpoint::new(int(0), ExtReal::NegInf), Breakpoint::new(int(1), fin(int(0)))],
        vec![ExtSegment::NegInf, ExtSegment::constant(fin(int(0))), ExtSegment::PosInf],
    )
    .expect("monotone");
    t.expect("invert_minus(F2)", invert_minus(&f2).canonical_equal(&f2_minus));
    let probes: Vec<Rational> = (-500..500).map(|k| q(k, 97)).collect();
    t.expect(
        "invert_plus(F3) pointwise on 1000 probes",
        probes.iter().all(|y| invert_plus(&f3).eval(y) == pointwise_inf_plus(&f3, y)),
    );

    // compositions
    t.expect("id∘id+", compose_exact(&id.to_ext(), &invert_plus(&id)).canonical_equal(&id.to_ext()));
    t.eq("F4(F4+(1/2))", compose_exact(&f4.to_ext(), &invert_plus(&f4)).eval(&q(1, 2)), fin(int(1)));
    t.eq("F3(F3-(0))", compose_exact(&f3.to_ext(), &invert_minus(&f3)).eval(&int(0)), fin(int(0)));

    let r = predict_t_after_inv(&f4, Which::Plus);
    t.expect("F4 T∘T+ clean", clean(&r));
    t.eq("F4 T∘T+ on band", r.predicted_at(&q(1, 2)), Some(fin(int(1))));
    t.eq(
        "F4 T∘T+ elsewhere",
        (r.predicted_at(&int(3)), r.predicted_at(&int(-3))),
        (Some(fin(int(3))), Some(fin(int(-3)))),
    );
    t.expect("F4 band edges excluded", r.is_excluded(&int(0)) && r.is_excluded(&int(1)));
    let r = predict_t_after_inv(&id, Which::Plus);
    t.expect("identity T∘T+", clean(&r) && r.excluded.is_empty() && r.predicted_at(&q(-9, 4)) == Some(fin(q(-9, 4))));
    let r = predict_t_after_inv(&f2, Which::Plus);
    t.expect("F2 -1/2 excluded", r.is_excluded(&q(-1, 2)));
    t.eq("F2 actual at -1/2", r.actual.eval(&q(-1, 2)), fin(int(0)));
    let r = predict_inv_after_t(&f3, Which::Plus);
    t.expect("F3 T+∘T clean", clean(&r));
    t.eq("F3 T+∘T on plateau", r.predicted_at(&q(1, 2)), Some(fin(int(1))));
    t.eq(
        "F3 T+∘T outside",
        (r.predicted_at(&int(2)), r.predicted_at(&int(-2))),
        (Some(fin(int(2))), Some(fin(int(-2)))),
    );
    let r = predict_inv_after_t(&f3, Which::Minus);
    t.expect("F3 T-∘T clean", clean(&r));
    t.eq("F3 T-∘T on plateau", r.predicted_at(&q(1, 2)), Some(fin(int(0))));
    t.eq("F3 T-∘T outside", r.predicted_at(&int(2)), Some(fin(int(2))));
    t.expect("identity T+∘T", clean(&predict_inv_after_t(&id, Which::Plus)));
    for which in [Which::Plus, Which::Minus] {
        let a = predict_t_after_inv(&f5, which);
        let b = predict_inv_after_t(&f5, which);
        t.expect("F5 compositions clean", clean(&a) && clean(&b));
        t.expect("F5 edges listed", !a.edge_values.is_empty() && !b.edge_values.is_empty());
    }
    match predict_one_sided(&f5.right_version(), Side::Right) {
        Ok((a, b)) => {
            t.expect("right_version(F5) clean", clean(&a) && clean(&b));
            t.eq("right_version(F5) at 0", a.predicted_at(&int(0)), Some(fin(int(1))));
            t.eq("right_version(F5) at 1/2", a.predicted_at(&q(1, 2)), Some(fin(int(1))));
            t.eq("right_version(F5) at 2", a.predicted_at(&int(2)), Some(fin(int(2))));
        }
        Err(e) => t.expect(&format!("right_version(F5) one-sided: {e}"), false),
    }
    t.expect(
        "F2 right one-sided clean",
        predict_one_sided(&f2, Side::Right).map(|(a, b)| clean(&a) && clean(&b)).unwrap_or(false),
    );
    t.expect(
        "identity one-sided clean",
        predict_one_sided(&id, Side::Left).map(|(a, b)| clean(&a) && clean(&b)).unwrap_or(false),
    );
    t.expect(
        "F5 is not right-continuous",
        matches!(predict_one_sided(&f5, Side::Right), Err(Error::NotOneSidedContinuous { .. })),
    );

    // the plateau-then-jump counterexample
    t.expect("regression_fig1(F5)", regression_fig1(&f5));
    t.expect("regression_fig1(identity) is false", !regression_fig1(&id));
    t.expect("regression_fig1(F4) is false", !regression_fig1(&f4));
    t.eq("F5: T+(T(1))", invert_plus(&f5).eval(&f5.eval(&int(1))), fin(int(1)));
    t.eq("F5: T+(T(1)-)", invert_plus(&f5).left_limit(&f5.eval(&int(1))), fin(int(0)));

    // sampling
    let bern = validate_cdf(&fixtures::bernoulli_half()).expect("CDF");
    t.expect("F2 is a CDF", validate_cdf(&f2).is_ok());
    t.eq("left_version(F2)", validate_cdf(&f2.left_version()).err(), Some(Error::NotRightContinuous("0".into())));
    t.expect("identity is not a CDF", matches!(validate_cdf(&id), Err(Error::BadLimits { .. })));
    for (u, x) in [(q(3, 10), 0), (q(7, 10), 1), (q(1, 2), 0)] {
        t.eq("Bernoulli quantile", bern.quantile().eval(&u), fin(int(x)));
    }
    t.eq("n = 0", sample(&bern, 0, 1).len(), 0);
    t.eq("same seed", sample(&bern, 50, 9), sample(&bern, 50, 9));
    t.expect("ecdf [0]", ecdf(&[int(0)]).map(|e| e.cdf().canonical_equal(&f2)).unwrap_or(false));
    t.expect("ecdf [0, 1]", ecdf(&[int(0), int(1)]).map(|e| e.cdf().canonical_equal(bern.cdf())).unwrap_or(false));
    let e = ecdf(&[int(1), int(0), int(1), int(1)]).expect("nonempty");
    t.eq("ecdf [1,0,1,1]", (e.cdf().eval(&int(0)), e.cdf().eval(&int(1))), (q(1, 4), int(1)));
    let f2c = validate_cdf(&f2).expect("CDF");
    t.eq("ks(F2, F2)", ks_distance(&f2c, &f2c), int(0));
    t.eq("ks(F2, Bernoulli)", ks_distance(&f2c, &bern), q(1, 2));
    t.eq("ks symmetric", ks_distance(&bern, &f2c), q(1, 2));

    // the whole registry on the fixtures
    let fns: Vec<PiecewiseMonotone> = fixtures::all().into_iter().map(|(_, f)| f).collect();
    for r in run_suite_on(&fns, SEED) {
        t.expect(&format!("{} on fixtures", r.property_id), r.passed());
    }
    t.outcome()
}

fn composition_reports() -> Outcome {
    let base = GeneratorConfig::with_seed(SEED);
    let families = [
        ("general", base.clone(), None),
        ("right-continuous", base.clone().right_continuous(), Some(Side::Right)),
        ("left-continuous", base.left_continuous(), Some(Side::Left)),
    ];
    let mut summary = Vec::new();
    let mut problems = Vec::new();
    for (name, config, side) in families {
        let bad: Vec<String> = (0..200u64)
            .into_par_iter()
            .flat_map_iter(|i| {
                let f = generate(&config, i);
                let reports = match side {
                    None => Ok(vec![
                        predict_t_after_inv(&f, Which::Plus),
                        predict_t_after_inv(&f, Which::Minus),
                        predict_inv_after_t(&f, Which::Plus),
                        predict_inv_after_t(&f, Which::Minus),
                    ]),
                    Some(side) => predict_one_sided(&f, side).map(|(a, b)| vec![a, b]),
                };
                match reports {
                    Ok(rs) => rs
                        .into_iter()
                        .flat_map(|r| {
                            r.mismatches.into_iter().map(move |m| format!("f#{i} {} at {}", r.label, m.point))
                        })
                        .collect::<Vec<_>>(),
                    Err(e) => vec![format!("f#{i}: {e}")],
                }
            })
            .collect();
        summary.push(format!("{name} 200"));
        if let Some(first) = bad.first() {
            problems.push(format!("{name}: {} mismatches, first {first}", bad.len()));
        }
    }
    if problems.is_empty() {
        Ok(format!("{}, zero mismatches", summary.join(", ")))
    } else {
        Err(problems.join("; "))
    }
}

fn sampling() -> Outcome {
    let config = GeneratorConfig::with_seed(SEED);
    let failures: Vec<String> = (0..100u64)
        .into_par_iter()
        .flat_map_iter(|i| {
            let cdf = match validate_cdf(&generate_cdf(&config, i)) {
                Ok(c) => c,
                Err(e) => return vec![format!("cdf#{i}: {e}")],
            };
            let mut lambdas: Vec<Rational> = cdf.cdf().breakpoints().iter().map(|b| b.x.clone()).collect();
            let (lo, hi) = (lambdas.first().cloned().unwrap_or(int(0)), lambdas.last().cloned().unwrap_or(int(0)));
            lambdas.push(lo - int(1));
            let mut k = 0;
            while lambdas.len() < 20 {
                // fill with evenly spread interior rationals
                k += 1;
                lambdas.push(&lambdas[0] + (&hi - &lambdas[0] + int(1)) * ratio(k, 17));
            }
            lambdas.truncate(20);
            lambdas
                .iter()
                .filter(|l| !pushforward_identity_holds(&cdf, l))
                .map(|l| format!("cdf#{i} at λ = {l}"))
                .collect()
        })
        .collect();
    if let Some(first) = failures.first() {
        return Err(format!("{} exact failures, first {first}", failures.len()));
    }
    let mut ks = Vec::new();
    for (name, f) in [("bernoulli", fixtures::bernoulli_half()), ("ramp_atom", fixtures::ramp_atom_cdf())] {
        let cdf = validate_cdf(&f).map_err(|e| e.to_string())?;
        let draws = sample(&cdf, 100_000, SEED);
        let d = ks_distance(&ecdf(&draws).map_err(|e| e.to_string())?, &cdf);
        if d > ratio(1, 100) {
            return Err(format!("{name}: KS distance {d} exceeds 1/100"));
        }
        ks.push(format!("{name} KS {:.5}", geninv::scalar::rational_to_f64(&d)));
    }
    Ok(format!("100 CDFs x 20 λ exact; {}", ks.join(", ")))
}

fn round_trip() -> Outcome {
    let config = GeneratorConfig::with_seed(SEED);
    let bad: Vec<String> = (0..500u64)
        .into_par_iter()
        .filter_map(|i| {
            let f = generate(&config, i);
            let (l, r) = (f.left_version(), f.right_version());
            if !invert_plus(&l).canonical_equal(&invert_plus(&r))
                || !invert_minus(&l).canonical_equal(&invert_minus(&r))
            {
                return Some(format!("f#{i}: versions have different inverses"));
            }
            let back = parse_function(&emit_function(&f)).ok()?;
            if !back.canonical_equal(&f) {
                return Some(format!("f#{i}: function round-trip"));
            }
            let inv = invert_plus(&f);
            match parse_ext_function(&emit_ext_function(&inv)) {
                Ok(back) if back.canonical_equal(&inv) => None,
                _ => Some(format!("f#{i}: inverse round-trip")),
            }
        })
        .collect();
    match bad.first() {
        None => Ok("500 functions: equal inverses of versions, emit/parse round-trip".into()),
        Some(first) => Err(format!("{} failures, first {first}", bad.len())),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("oracle equivalence", oracle_equivalence),
        ("property suite", property_suite),
        ("fixture table", fixture_table),
        ("composition closed forms", composition_reports),
        ("inverse-transform sampling", sampling),
        ("versions and round-trip", round_trip),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.1}s)", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.1}s)", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
