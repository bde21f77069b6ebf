//! A function where T+(T(x)) = x although T+(T(x)-) < T+(T(x)): the point
//! x = 1 of a plateau on [0, 1] followed by a jump.
//!
//! `cargo run --example fig1_counterexample`

use geninv::compose::{fig1_witness, regression_fig1};
use geninv::{fixtures, invert_plus};

fn main() {
    let f = fixtures::f5();
    let plus = invert_plus(&f);
    let x = fig1_witness(&f).expect("F5 has a witness");
    let y = f.eval(&x);
    println!("x = {x}, T(x) = {y}");
    println!("T+(T(x))  = {}", plus.eval(&y));
    println!("T+(T(x)-) = {}", plus.left_limit(&y));
    assert!(regression_fig1(&f));
    for (name, g) in fixtures::all() {
        println!("{name}: witness {:?}", fig1_witness(&g).map(|w| w.to_string()));
    }
}
