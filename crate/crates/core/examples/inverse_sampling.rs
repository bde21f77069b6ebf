//! Inverse-transform sampling through the left-continuous quantile, checked
//! exactly (pushforward sets) and statistically (KS distance).
//!
//! `cargo run --release --example inverse_sampling -- [n] [seed]`

use geninv::fixtures;
use geninv::sampling::{ecdf, ks_distance, pushforward_set, sample, validate_cdf};
use geninv::scalar::{ratio, rational_to_f64};

fn main() {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    for (name, f) in [("bernoulli", fixtures::bernoulli_half()), ("ramp_atom", fixtures::ramp_atom_cdf())] {
        let cdf = validate_cdf(&f).expect("fixture is a CDF");
        println!("{name}");
        for k in [-1, 0, 1, 3, 4] {
            let lambda = ratio(k, 1);
            println!("  {{u : F-(u) <= {lambda}}} = {}", pushforward_set(&cdf, &lambda));
        }
        let xs = sample(&cdf, n, seed);
        let d = ks_distance(&ecdf(&xs).expect("n > 0"), &cdf);
        println!("  n = {n}, seed = {seed}: KS distance {:.5}", rational_to_f64(&d));
    }
}
