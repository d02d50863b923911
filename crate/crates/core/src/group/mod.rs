//! Exact finite-group arithmetic: multiplication tables, permutations,
//! tuples, the wreath product and abelian invariants.

mod abelian;
mod closure;
mod finite;
mod perm;
mod wreath;

pub use abelian::{abelian_invariants_of_subgroup, abelianization, derived_subgroup, AbelianInvariants};
pub use closure::subgroup_closure;
pub use finite::{format_multiplication_table, make_builtin, parse_multiplication_table, FiniteGroup, BUILTIN_NAMES};
pub use perm::Permutation;
pub use wreath::{d_vector, wreath_multiply, Tuple, TupleGroup, WreathElement, WreathGroup};

/// A concrete group law on some element type.
pub trait GroupLaw {
    type Elem: Clone + Eq + std::fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// `a^b = b⁻¹ a b`.
    fn conj(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inv(b), a), b)
    }
}

/// The symmetric group on `0..n` under left-to-right composition.
#[derive(Clone, Copy, Debug)]
pub struct SymmetricGroup(pub usize);

impl GroupLaw for SymmetricGroup {
    type Elem = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.0)
    }

    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.then(b)
    }

    fn inv(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }
}

/// `n!` as `u128`.
pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
