//! For n = 2 the Coxeter presentation is a free product of |G| copies of
//! S₂, so S₂(G) is infinite. Its abelianization is still computable from
//! the relation matrix, and coset enumeration reports that it ran out of room.
//!
//!     cargo run --release --example free_product_s2

use parasym::enumeration::todd_coxeter;
use parasym::group::make_builtin;
use parasym::presentation::{abelian_invariants_of_presentation, coxeter_presentation};

fn main() -> parasym::Result<()> {
    for name in ["c2", "c3", "klein", "s3"] {
        let g = make_builtin(name)?;
        let p = coxeter_presentation(2, &g)?;
        let ab = abelian_invariants_of_presentation(&p)?;
        let table = todd_coxeter(&p, &[], 10_000)?;
        println!(
            "S_2({name:<5}) abelianization {ab:<12} enumeration with 10^4 cosets: {:?}",
            table.status()
        );
    }
    Ok(())
}
