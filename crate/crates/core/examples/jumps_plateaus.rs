//! Jumps of a function are plateaus of its inverses, and plateaus are jumps.
//!
//! `cargo run --example jumps_plateaus`

use geninv::{fixtures, invert_plus};

fn main() {
    for (name, f) in fixtures::all() {
        let inv = invert_plus(&f);
        println!("{name}");
        for j in f.discontinuities() {
            println!("  jump at x = {}: {} -> {} (value {})", j.x, j.y_minus, j.y_plus, j.value_at_x);
        }
        for p in f.plateaus() {
            println!("  plateau at level {} on ({}, {})", p.y, p.x_minus, p.x_plus);
        }
        for j in inv.discontinuities() {
            println!("  T+ jumps at y = {}: {} -> {}", j.x, j.y_minus, j.y_plus);
        }
        for p in inv.plateaus() {
            println!("  T+ is {} on ({}, {})", p.y, p.x_minus, p.x_plus);
        }
    }
}
