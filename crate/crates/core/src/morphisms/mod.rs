//! The crossed module `μ: S_n(G) → G ≀ S_n`, certificates for the
//! presentation equivalences, and the rewriting process `τ`.

mod crossed;
mod equivalence;
mod mu;
mod tau;

pub use crossed::{verify_action_well_defined, verify_cm1, verify_cm2, verify_peiffer_simple, AmalgamModel};
pub use equivalence::{
    amalgam_link, coxeter_link, implication_outcome, interpolating_link, presentation_chain, theta_link,
    verify_implication, verify_isomorphism, verify_split_decomposition, ChainLink, IsoCertificate, SplitReport,
};
pub use mu::{
    evaluate_in, image_subgroup_order, images_of_elements, induced_kernel_map, kernel_of_mu, mu_images,
    mu_of_generator, verify_central, verify_homomorphism, GenMap, MuData,
};
pub use tau::{
    free_reduce_letters, rewrite_tau, tau_base_case, underlying_permutation, verify_tau_properties, IndexedLetter,
    TauReport,
};

/// Result of an exhaustive or sampled check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Number of cases examined.
    pub cases: usize,
    /// The first failing case.
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass(cases: usize) -> Self {
        CheckOutcome { passed: true, cases, witness: None }
    }

    pub fn fail(cases: usize, witness: String) -> Self {
        CheckOutcome { passed: false, cases, witness: Some(witness) }
    }
}
