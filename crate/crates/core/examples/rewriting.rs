//! The rewriting process τ: words in (ij)_a with trivial underlying
//! permutation become words in h_{ij}(a) = (ij)_a (ij)_1.
//!
//!     cargo run --release --example rewriting -- "(12)_a (13)_b (13)_c (12)_d"

use parasym::cli::{format_h_word, parse_word, to_transposition_letters};
use parasym::enumeration::DEFAULT_MAX_COSETS;
use parasym::group::make_builtin;
use parasym::morphisms::{rewrite_tau, underlying_permutation, verify_tau_properties};

fn main() -> parasym::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "(12)_a (23)_b (12)_c (23)_d (12)_e (23)_f".into());
    let n = 3;
    let letters = to_transposition_letters(&parse_word(&text)?)?;
    let perm = underlying_permutation(&letters, n);
    println!("input      {text}");
    println!("τ          {}", format_h_word(&rewrite_tau(&letters, n)?));
    if !perm.is_identity() {
        println!("(underlying permutation {:?} is not trivial: this is a coset expression)", perm.cycles());
    }

    // sampled checks inside the enumerated groups
    for name in ["c2", "klein"] {
        let rep = verify_tau_properties(n, &make_builtin(name)?, 200, 7, DEFAULT_MAX_COSETS)?;
        println!(
            "{name:<6} multiplicative {}  evaluates correctly {}  respects free equality {}",
            rep.multiplicative.passed, rep.evaluation.passed, rep.free_equality.passed
        );
    }
    Ok(())
}
