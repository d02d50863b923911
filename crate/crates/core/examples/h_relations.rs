//! HS_n(G) from the relations R0–R4 against Rehmann's group H_n(G) with
//! relations H1–H5.
//!
//!     cargo run --release --example h_relations

use parasym::enumeration::{RegularGroup, DEFAULT_MAX_COSETS};
use parasym::group::make_builtin;
use parasym::morphisms::{implication_outcome, verify_implication, verify_split_decomposition};
use parasym::presentation::{h_presentation, hn_presentation, hs_presentation, HRelation};

fn main() -> parasym::Result<()> {
    for (name, n) in [("c2", 3), ("klein", 3), ("c4", 3), ("c2", 4), ("klein", 4)] {
        let g = make_builtin(name)?;
        let hs = hs_presentation(n, &g)?;
        let hn = hn_presentation(n, &g, &HRelation::H)?;
        let r03 = h_presentation(n, &g, &HRelation::R[..4])?;
        let r4 = h_presentation(n, &g, &[HRelation::R4])?;

        let holds = |src, tgt| -> parasym::Result<bool> {
            Ok(implication_outcome(&verify_implication(src, tgt, DEFAULT_MAX_COSETS)?).passed)
        };
        let hn_order = RegularGroup::enumerate(&hn, DEFAULT_MAX_COSETS)?.order();
        let hs_order = RegularGroup::enumerate(&hs, DEFAULT_MAX_COSETS)?.order();
        // the quotient of H_n(G) by R4 enumerated on its own
        let quotient = hn.with_extra_relators(r4.relators().iter().cloned(), hn.family().clone())?;
        let q_order = RegularGroup::enumerate(&quotient, DEFAULT_MAX_COSETS)?.order();
        let split = verify_split_decomposition(n, &g, DEFAULT_MAX_COSETS)?;
        println!(
            "n={n} {name:<6} R⇒H {:<5} R0-R3⇒H {:<5} H⇒R0-R3 {:<5} |H_n|={hn_order:<5} |H_n/R4|={q_order:<5} |HS_n|={hs_order:<5} |S_n(G)|={} = |HS_n|·n! {}",
            holds(&hs, hn.relators())?,
            holds(&r03, hn.relators())?,
            holds(&hn, r03.relators())?,
            split.order,
            split.holds(n)
        );
    }
    Ok(())
}
