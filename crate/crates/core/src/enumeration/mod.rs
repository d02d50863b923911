//! Todd–Coxeter coset enumeration and the permutation representations it
//! produces.

mod coset;
mod rep;

pub use coset::{
    todd_coxeter, todd_coxeter_with, CosetTable, EnumerationStatus, Strategy, DEFAULT_MAX_COSETS,
    FELSCH_GENERATOR_THRESHOLD,
};
pub use rep::{
    consequence_in, evaluate_word, is_consequence, permutation_rep, Consequence, PermutationRep, RegularGroup,
};
