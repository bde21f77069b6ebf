//! Deterministic random nondecreasing piecewise-affine functions.

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::piecewise::{Breakpoint, PiecewiseMonotone, Segment};
use crate::scalar::{int, ratio, Rational};

/// How a breakpoint value sits between its one-sided limits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContinuityMix {
    pub left: f64,
    pub right: f64,
    pub interior: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub max_breakpoints: usize,
    /// Positive slopes for strictly increasing pieces.
    pub slope_pool: Vec<Rational>,
    /// Positive magnitudes for jump heights and breakpoint spacing.
    pub value_pool: Vec<Rational>,
    pub continuity_mix: ContinuityMix,
    /// Probability that a piece is constant.
    pub plateau_bias: f64,
    /// Probability of a jump at a breakpoint.
    pub jump_bias: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 42,
            max_breakpoints: 6,
            slope_pool: vec![ratio(1, 2), int(1), int(2), int(3)],
            value_pool: vec![ratio(1, 2), int(1), ratio(3, 2), int(2)],
            continuity_mix: ContinuityMix { left: 1.0, right: 1.0, interior: 1.0 },
            plateau_bias: 0.4,
            jump_bias: 0.5,
        }
    }
}

impl GeneratorConfig {
    pub fn with_seed(seed: u64) -> Self {
        GeneratorConfig { seed, ..Default::default() }
    }

    /// Only right-continuous breakpoints.
    pub fn right_continuous(mut self) -> Self {
        self.continuity_mix = ContinuityMix { left: 0.0, right: 1.0, interior: 0.0 };
        self
    }

    /// Only left-continuous breakpoints.
    pub fn left_continuous(mut self) -> Self {
        self.continuity_mix = ContinuityMix { left: 1.0, right: 0.0, interior: 0.0 };
        self
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.continuity_mix;
        let weights = [m.left, m.right, m.interior];
        if weights.iter().any(|w| w.is_nan() || *w < 0.0) || weights.iter().all(|w| *w == 0.0) {
            return Err(Error::Usage("continuity weights must be nonnegative, one positive".into()));
        }
        if self.slope_pool.is_empty() || self.value_pool.is_empty() {
            return Err(Error::Usage("slope and value pools must be nonempty".into()));
        }
        let zero = int(0);
        if self.slope_pool.iter().chain(&self.value_pool).any(|v| *v <= zero) {
            return Err(Error::Usage("pool entries must be positive".into()));
        }
        for p in [self.plateau_bias, self.jump_bias] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Usage("biases must be probabilities".into()));
            }
        }
        Ok(())
    }
}

/// RNG for item `index` of stream `salt` under `seed`.
pub(crate) fn rng_for(seed: u64, salt: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt.rotate_left(17));
    rng.set_stream(index);
    rng
}

fn pick<'a>(rng: &mut impl Rng, pool: &'a [Rational]) -> &'a Rational {
    pool.choose(rng).expect("nonempty pool")
}

/// Function number `index` for `config.seed`. Panics on an invalid config.
pub fn generate(config: &GeneratorConfig, index: u64) -> PiecewiseMonotone {
    config.validate().expect("valid generator config");
    let mut rng = rng_for(config.seed, 0x6765_6e66, index);
    let m = config.continuity_mix;
    let mix = WeightedIndex::new([m.left, m.right, m.interior]).expect("validated weights");

    let next_law = |rng: &mut ChaCha8Rng, x: &Rational, level: &Rational| {
        let slope = if rng.gen_bool(config.plateau_bias) { int(0) } else { pick(rng, &config.slope_pool).clone() };
        let intercept = level - &slope * x;
        Segment::new(slope, intercept)
    };

    let count = rng.gen_range(0..=config.max_breakpoints);
    let mut x = int(rng.gen_range(-3..=1));
    let level = int(rng.gen_range(-2..=2));
    let mut segments = vec![next_law(&mut rng, &x, &level)];
    let mut breakpoints = Vec::with_capacity(count);
    for i in 0..count {
        if i > 0 {
            x += pick(&mut rng, &config.value_pool);
        }
        let left = segments.last().expect("nonempty").eval(&x);
        let right =
            if rng.gen_bool(config.jump_bias) { &left + pick(&mut rng, &config.value_pool) } else { left.clone() };
        let value = match mix.sample(&mut rng) {
            0 => left.clone(),
            1 => right.clone(),
            _ => {
                let t = [ratio(1, 3), ratio(1, 2), ratio(2, 3)].choose(&mut rng).expect("nonempty").clone();
                &left + (&right - &left) * t
            }
        };
        segments.push(next_law(&mut rng, &x, &right));
        breakpoints.push(Breakpoint::new(x.clone(), value));
    }
    PiecewiseMonotone::new(breakpoints, segments).expect("generator builds monotone functions")
}

/// A random right-continuous CDF with atoms, ramps and flat stretches.
pub fn generate_cdf(config: &GeneratorConfig, index: u64) -> PiecewiseMonotone {
    let mut rng = rng_for(config.seed, 0x6364_6667, index);
    let k = rng.gen_range(1..=config.max_breakpoints.max(1));
    let mut xs = vec![int(rng.gen_range(-3..=1))];
    for _ in 1..k {
        let step = xs.last().expect("nonempty") + pick(&mut rng, &config.value_pool);
        xs.push(step);
    }
    // Levels r_0 <= e_1 <= r_1 <= ... <= e_{k-1} <= r_{k-1} = 1, where r_j is
    // the value at x_j and e_j the left limit there.
    let mut increments: Vec<i64> = (0..2 * k - 1).map(|_| [0, 0, 1, 2, 3][rng.gen_range(0..5)]).collect();
    if increments.iter().all(|&d| d == 0) {
        *increments.last_mut().expect("nonempty") = 1;
    }
    let total: i64 = increments.iter().sum();
    let mut acc = 0;
    let levels: Vec<Rational> = increments
        .iter()
        .map(|d| {
            acc += d;
            ratio(acc, total)
        })
        .collect();

    let mut breakpoints = Vec::with_capacity(k);
    let mut segments = vec![Segment::constant(int(0))];
    for j in 0..k {
        let r = levels[2 * j].clone();
        breakpoints.push(Breakpoint::new(xs[j].clone(), r.clone()));
        if j + 1 < k {
            let e = &levels[2 * j + 1];
            let slope = (e - &r) / (&xs[j + 1] - &xs[j]);
            let intercept = &r - &slope * &xs[j];
            segments.push(Segment::new(slope, intercept));
        }
    }
    segments.push(Segment::constant(int(1)));
    PiecewiseMonotone::new(breakpoints, segments).expect("generated CDF is monotone")
}
