//! Both generalized inverses of a step-and-plateau function, in closed form
//! and pointwise.
//!
//! `cargo run --example invert -- [function.json]`

use geninv::cli::{emit_ext_function, read_function};
use geninv::inverse::{pointwise_inverse, Which};
use geninv::scalar::ratio;
use geninv::{fixtures, invert_minus, invert_plus};

fn main() {
    let f = match std::env::args().nth(1) {
        Some(path) => read_function(path.as_ref()).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => fixtures::f3(),
    };
    let plus = invert_plus(&f);
    let minus = invert_minus(&f);
    println!("T+ =\n{}", emit_ext_function(&plus));
    println!("T- =\n{}", emit_ext_function(&minus));

    println!("{:>6} {:>8} {:>8}", "y", "T+(y)", "T-(y)");
    for k in -4..=8 {
        let y = ratio(k, 4);
        let (p, m) = (plus.eval(&y), minus.eval(&y));
        assert_eq!(p, pointwise_inverse(&f, Which::Plus, &y));
        assert_eq!(m, pointwise_inverse(&f, Which::Minus, &y));
        println!("{:>6} {:>8} {:>8}", y.to_string(), p.to_string(), m.to_string());
    }
}
