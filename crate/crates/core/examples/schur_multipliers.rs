//! H₂(G, ℤ) three ways: the kernel of μ, the kernel of the commutator map
//! on G ∧ G, and the invariant-factor formula for abelian G. Also checks
//! that the c-symbols of HS_n(G) generate a copy of G ∧ G.
//!
//!     cargo run --release --example schur_multipliers

use parasym::enumeration::DEFAULT_MAX_COSETS;
use parasym::group::make_builtin;
use parasym::homology::{c_symbol_subgroup_check, exterior_square_group, schur_report, SchurMethod};

fn main() -> parasym::Result<()> {
    let show = |x: &Option<parasym::group::AbelianInvariants>| x.as_ref().map_or("-".to_string(), |v| v.to_string());
    println!("{:<8} {:>6} {:>8} {:>10} {:>8} {:>10} {:>10}", "G", "|G∧G|", "|[G,G]|", "ker μ", "G∧G", "formula", "c-symbols");
    for name in ["c2", "c3", "c4", "klein", "c4xc2", "c2cubed", "s3", "d4", "q8", "a4"] {
        let g = make_builtin(name)?;
        let ext = exterior_square_group(&g, DEFAULT_MAX_COSETS)?;
        let rep = schur_report(name, 3, &g, SchurMethod::All, DEFAULT_MAX_COSETS)?;
        let c = c_symbol_subgroup_check(3, &g, DEFAULT_MAX_COSETS)?;
        println!(
            "{:<8} {:>6} {:>8} {:>10} {:>8} {:>10} {:>10}{}",
            name,
            ext.order(),
            ext.image_order(),
            show(&rep.via_kernel),
            show(&rep.via_exterior),
            show(&rep.via_abelian_formula),
            if c.passed() { "ok" } else { "MISMATCH" },
            if rep.consistent { "" } else { "  INCONSISTENT" }
        );
    }
    Ok(())
}
