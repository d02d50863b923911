//! Parametrized symmetric groups `S_n(G)`.
//!
//! `S_n(G)` is generated by Coxeter-like symbols `s_i(a)` labelled by
//! elements of a group `G`. It maps to the wreath product `G ≀ S_n` by a
//! crossed module `μ` whose kernel is `H₂(G, ℤ)` and whose cokernel is
//! `H₁(G, ℤ)`. This crate builds every presentation of `S_n(G)` and its
//! subgroups, realizes them by Todd–Coxeter enumeration for finite `G`, and
//! checks the structural statements exactly against independent
//! computations (exterior squares, abelian invariants, brute-force closure).
//!
//! ```
//! use parasym::group::make_builtin;
//! use parasym::presentation::transposition_presentation;
//! use parasym::enumeration::{todd_coxeter, DEFAULT_MAX_COSETS};
//!
//! let g = make_builtin("klein").unwrap();
//! let p = transposition_presentation(3, &g).unwrap();
//! let table = todd_coxeter(&p, &[], DEFAULT_MAX_COSETS).unwrap();
//! assert_eq!(table.coset_count(), 192);
//! ```

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod homology;
pub mod morphisms;
pub mod presentation;

pub use error::{Error, Result};
