//! Exact compositions of a function with its inverses, compared against
//! their closed forms.
//!
//! `cargo run --example compositions`

use geninv::compose::{predict_inv_after_t, predict_one_sided, predict_t_after_inv, CompositionReport};
use geninv::{fixtures, Side, Which};

fn show(r: &CompositionReport) {
    println!("  {} ({} mismatches)", r.label, r.mismatches.len());
    for p in &r.predicted {
        println!("    on {:<16} {}", p.region.to_string(), p.law);
    }
    for (x, v) in &r.edge_values {
        println!("    excluded {x}: actual value {v}");
    }
    for m in &r.mismatches {
        println!("    MISMATCH at {}: predicted {}, actual {}", m.point, m.predicted, m.actual);
    }
}

fn main() {
    for (name, f) in fixtures::all() {
        println!("{name}");
        for which in [Which::Plus, Which::Minus] {
            show(&predict_t_after_inv(&f, which));
            show(&predict_inv_after_t(&f, which));
        }
        for (side, g) in [(Side::Right, f.right_version()), (Side::Left, f.left_version())] {
            let (a, b) = predict_one_sided(&g, side).expect("versions are one-sided continuous");
            println!(" {side} version");
            show(&a);
            show(&b);
        }
    }
}
