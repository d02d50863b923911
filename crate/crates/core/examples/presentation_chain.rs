//! Certifies that every presentation of S_n(G) defines the same group:
//! coxeter → S_n(1,G) → … → S_n(n-1,G) → transposition → amalgam.
//!
//! Each link is a pair of explicit generator maps. Both are checked to kill
//! every relator and to be mutually inverse on generators, with all
//! equalities decided in the enumerated groups.
//!
//!     cargo run --release --example presentation_chain -- klein 3

use parasym::enumeration::DEFAULT_MAX_COSETS;
use parasym::group::make_builtin;
use parasym::morphisms::presentation_chain;

fn main() -> parasym::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "c2".into());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = make_builtin(&name)?;
    for link in presentation_chain(n, &g)? {
        let label = link.name();
        let (gens_a, gens_b) = (link.source.generator_count(), link.target.generator_count());
        let cert = link.certify(DEFAULT_MAX_COSETS)?;
        println!(
            "{label:<40} {gens_a:>5} -> {gens_b:<5} gens  orders {:?}/{:?}  {}",
            cert.source_order,
            cert.target_order,
            match &cert.failure {
                None => "valid".to_string(),
                Some(f) => format!("INVALID: {f}"),
            }
        );
    }
    Ok(())
}
