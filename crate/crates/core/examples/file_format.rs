//! Writes the built-in fixtures as JSON function files and reads them back.
//!
//! `cargo run --example file_format -- [out_dir]` (default: print to stdout)

use geninv::cli::{emit_ext_function, emit_function, parse_function};
use geninv::fixtures;
use geninv::invert_plus;

fn main() {
    let out_dir = std::env::args().nth(1);
    let mut all = fixtures::all();
    all.push(("bernoulli", fixtures::bernoulli_half()));
    all.push(("ramp_atom", fixtures::ramp_atom_cdf()));
    for (name, f) in all {
        let text = emit_function(&f);
        let back = parse_function(&text).expect("emitted files parse");
        assert!(back.canonical_equal(&f));
        match &out_dir {
            Some(dir) => {
                let path = std::path::Path::new(dir).join(format!("{}.json", name.to_lowercase()));
                std::fs::write(&path, text + "\n").expect("writable output directory");
                println!("wrote {}", path.display());
            }
            None => println!("# {name}\n{text}\n# {name}, T+\n{}\n", emit_ext_function(&invert_plus(&f))),
        }
    }
}
