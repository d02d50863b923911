//! Enumerates |S_n(G)| from the transposition presentation for a table of
//! parameter groups and compares with the coxeter presentation.
//!
//!     cargo run --release --example order_table

use std::time::Instant;

use parasym::enumeration::{todd_coxeter, DEFAULT_MAX_COSETS};
use parasym::group::make_builtin;
use parasym::presentation::{coxeter_presentation, transposition_presentation};

fn main() -> parasym::Result<()> {
    let cases = [
        ("c2", 3),
        ("c2", 4),
        ("c3", 3),
        ("c4", 3),
        ("klein", 3),
        ("klein", 4),
        ("c4xc2", 3),
        ("c2cubed", 3),
        ("s3", 3),
        ("d4", 3),
        ("q8", 3),
        ("a4", 3),
    ];
    println!("{:<8} {:>2} {:>12} {:>12} {:>8}", "G", "n", "transposition", "coxeter", "ms");
    for (name, n) in cases {
        let g = make_builtin(name)?;
        let start = Instant::now();
        let t = todd_coxeter(&transposition_presentation(n, &g)?, &[], DEFAULT_MAX_COSETS)?;
        let c = todd_coxeter(&coxeter_presentation(n, &g)?, &[], DEFAULT_MAX_COSETS)?;
        println!(
            "{:<8} {:>2} {:>12} {:>12} {:>8}",
            name,
            n,
            t.coset_count(),
            c.coset_count(),
            start.elapsed().as_millis()
        );
    }
    Ok(())
}
