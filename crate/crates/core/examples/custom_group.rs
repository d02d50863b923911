//! Parameter groups beyond the builtins: a multiplication table read from
//! text, and direct products through the `prod:` specification.
//!
//!     cargo run --release --example custom_group

use parasym::cli::parse_group_spec;
use parasym::enumeration::{todd_coxeter, DEFAULT_MAX_COSETS};
use parasym::group::{abelianization, format_multiplication_table, parse_multiplication_table};
use parasym::homology::exterior_square_group;
use parasym::presentation::transposition_presentation;

// ℤ/3 with named elements
const TABLE: &str = "3
0 1 2
1 2 0
2 0 1
names: 1 r r2
";

fn main() -> parasym::Result<()> {
    let g = parse_multiplication_table(TABLE)?;
    print!("{}", format_multiplication_table(&g));
    let order = todd_coxeter(&transposition_presentation(3, &g)?, &[], DEFAULT_MAX_COSETS)?.coset_count();
    println!("|S_3(ℤ/3)| = {order}");

    for spec in ["prod:c2xc3", "prod:c3xs3", "prod:c2xprod:c2xc2"] {
        let g = parse_group_spec(spec)?;
        let ext = exterior_square_group(&g, DEFAULT_MAX_COSETS)?;
        println!(
            "{spec:<20} |G| = {:<3} G^ab = {:<8} H₂ = {}",
            g.order(),
            abelianization(&g).to_string(),
            ext.kernel_invariants
        );
    }
    Ok(())
}
