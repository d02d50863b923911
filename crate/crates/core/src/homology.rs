//! Independent computations of the Schur multiplier `H₂(G, ℤ)`: the
//! invariant-factor formula for abelian groups, the kernel of the
//! commutator map on `G ∧ G`, and the kernel of `μ`.

use crate::enumeration::RegularGroup;
use crate::error::{Error, Result};
use crate::group::{abelian_invariants_of_subgroup, abelianization, subgroup_closure, AbelianInvariants, FiniteGroup};
use crate::morphisms::{images_of_elements, kernel_of_mu, verify_homomorphism};
use crate::presentation::{exterior_square_presentation, hs_presentation, GeneratorSymbol, Letter, Word};

/// `H₂` of the abelian group `ℤ/n₁ ⊕ … ⊕ ℤ/n_k` (`n₁ | … | n_k`):
/// `⊕_{i<j} ℤ/gcd(nᵢ, nⱼ)`.
pub fn schur_abelian(invariants: &[u64]) -> Result<AbelianInvariants> {
    if invariants.iter().any(|&d| d == 0) {
        return Err(Error::MalformedChain(invariants.to_vec()));
    }
    AbelianInvariants::from_chain(invariants.to_vec())?;
    let mut cyclic = Vec::new();
    for (a, &x) in invariants.iter().enumerate() {
        for &y in &invariants[a + 1..] {
            cyclic.push(num_integer::gcd(x, y));
        }
    }
    Ok(AbelianInvariants::from_cyclic_orders(&cyclic))
}

/// `G ∧ G` with the commutator map `w(g, h) ↦ [g, h] = g⁻¹h⁻¹gh`.
#[derive(Clone, Debug)]
pub struct ExteriorSquare {
    pub group: RegularGroup,
    /// `[g, h]` for every element of `G ∧ G`, indexed like `group`.
    pub commutator_images: Vec<usize>,
    /// Elements mapping to the identity, sorted.
    pub kernel: Vec<usize>,
    pub kernel_invariants: AbelianInvariants,
}

impl ExteriorSquare {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Order of the image of the commutator map, i.e. `|[G, G]|`.
    pub fn image_order(&self) -> usize {
        let mut seen = self.commutator_images.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Enumerates `G ∧ G` and the kernel of its commutator map.
pub fn exterior_square_group(g: &FiniteGroup, max_cosets: usize) -> Result<ExteriorSquare> {
    let p = exterior_square_presentation(g)?;
    let images: Vec<usize> = p
        .generators()
        .iter()
        .map(|s| match s {
            GeneratorSymbol::Wedge { left, right } => g.commutator(*left, *right),
            _ => unreachable!("exterior square generators are wedges"),
        })
        .collect();
    let hom = verify_homomorphism(&p, g, &images);
    if !hom.passed {
        return Err(Error::NotAHomomorphism(hom.witness.unwrap_or_default()));
    }
    let group = RegularGroup::enumerate(&p, max_cosets)?;
    let commutator_images = images_of_elements(&group, g, &images)?;
    let kernel: Vec<usize> = group.elements().filter(|&c| commutator_images[c] == 0).collect();
    let kernel_invariants = abelian_invariants_of_subgroup(&group, &kernel)?;
    Ok(ExteriorSquare { group, commutator_images, kernel, kernel_invariants })
}

/// For each `k`, the subgroup of `HS_n(G)` generated by the symbols
/// `c_{kj}(u, v) = h_{kj}(u) h_{kj}(v) h_{kj}(vu)⁻¹`, compared with `G ∧ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSymbolReport {
    pub hs_order: usize,
    /// Subgroup order for `k = 1, …, n`.
    pub subgroup_orders: Vec<usize>,
    pub exterior_order: usize,
    /// Whether `c_{kj}(u, v)` is the same element for every `j ≠ k`.
    pub j_independent: bool,
    /// A `(k, u, v)` for which the symbols depend on `j`.
    pub witness: Option<(usize, usize, usize)>,
}

impl CSymbolReport {
    pub fn passed(&self) -> bool {
        self.j_independent && self.subgroup_orders.iter().all(|&o| o == self.exterior_order)
    }
}

pub fn c_symbol_subgroup_check(n: usize, g: &FiniteGroup, max_cosets: usize) -> Result<CSymbolReport> {
    let p = hs_presentation(n, g)?;
    let hs = RegularGroup::enumerate(&p, max_cosets)?;
    let h = |k: usize, j: usize, a: usize| p.index_of(&GeneratorSymbol::H { i: k, j, label: a }).expect("h symbol");
    let c = |k: usize, j: usize, u: usize, v: usize| {
        Word(vec![Letter::pos(h(k, j, u)), Letter::pos(h(k, j, v)), Letter::neg(h(k, j, g.mul(v, u)))])
    };
    let mut subgroup_orders = Vec::with_capacity(n);
    let mut witness = None;
    for k in 1..=n {
        let mut symbols = Vec::new();
        for u in g.elements() {
            for v in g.elements() {
                let mut first = None;
                for j in (1..=n).filter(|&j| j != k) {
                    let e = hs.element_of(&c(k, j, u, v));
                    symbols.push(e);
                    match first {
                        None => first = Some(e),
                        Some(f) if f != e && witness.is_none() => witness = Some((k, u, v)),
                        _ => {}
                    }
                }
            }
        }
        symbols.sort_unstable();
        symbols.dedup();
        subgroup_orders.push(subgroup_closure(&hs, &symbols).len());
    }
    let exterior = exterior_square_group(g, max_cosets)?;
    Ok(CSymbolReport {
        hs_order: hs.order(),
        subgroup_orders,
        exterior_order: exterior.order(),
        j_independent: witness.is_none(),
        witness,
    })
}

/// `H₂(G)` computed three ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurReport {
    pub group: String,
    pub via_kernel: Option<AbelianInvariants>,
    pub via_exterior: Option<AbelianInvariants>,
    /// Present only for abelian `G`.
    pub via_abelian_formula: Option<AbelianInvariants>,
    pub consistent: bool,
}

/// Which computations [`schur_report`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurMethod {
    Kernel,
    Exterior,
    Abelian,
    All,
}

/// Runs the requested computations. A computation that runs out of cosets
/// leaves its field empty; `consistent` compares the fields that are present.
pub fn schur_report(
    name: &str,
    n: usize,
    g: &FiniteGroup,
    method: SchurMethod,
    max_cosets: usize,
) -> Result<SchurReport> {
    let want = |m: SchurMethod| method == m || method == SchurMethod::All;
    let partial = |r: Result<AbelianInvariants>| match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::CapacityExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    };
    if method == SchurMethod::Abelian && !g.is_abelian() {
        return Err(Error::MethodInapplicable("abelian".into(), format!("{name} is not abelian")));
    }
    let via_kernel =
        if want(SchurMethod::Kernel) { partial(kernel_of_mu(n, g, max_cosets).map(|m| m.kernel_invariants))? } else { None };
    let via_exterior = if want(SchurMethod::Exterior) {
        partial(exterior_square_group(g, max_cosets).map(|e| e.kernel_invariants))?
    } else {
        None
    };
    let via_abelian_formula = if want(SchurMethod::Abelian) && g.is_abelian() {
        Some(schur_abelian(abelianization(g).factors())?)
    } else {
        None
    };
    let present: Vec<&AbelianInvariants> =
        [&via_kernel, &via_exterior, &via_abelian_formula].into_iter().flatten().collect();
    let consistent = present.windows(2).all(|w| w[0] == w[1]);
    Ok(SchurReport { group: name.to_string(), via_kernel, via_exterior, via_abelian_formula, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_MAX_COSETS;
    use crate::group::make_builtin;

    #[test]
    fn abelian_formula() {
        assert!(schur_abelian(&[2]).unwrap().is_trivial());
        assert_eq!(schur_abelian(&[2, 2]).unwrap().factors(), &[2]);
        assert_eq!(schur_abelian(&[2, 2, 2]).unwrap().factors(), &[2, 2, 2]);
        assert_eq!(schur_abelian(&[2, 4]).unwrap().factors(), &[2]);
        assert_eq!(schur_abelian(&[2, 6, 12]).unwrap().factors(), &[2, 2, 6]);
        assert!(matches!(schur_abelian(&[4, 2]), Err(Error::MalformedChain(_))));
    }

    #[test]
    fn exterior_squares() {
        for (name, order, kernel) in
            [("c2", 1, vec![]), ("klein", 2, vec![2]), ("s3", 3, vec![]), ("d4", 4, vec![2]), ("q8", 2, vec![])]
        {
            let e = exterior_square_group(&make_builtin(name).unwrap(), DEFAULT_MAX_COSETS).unwrap();
            assert_eq!(e.order(), order, "{name}");
            assert_eq!(e.kernel_invariants.factors(), kernel.as_slice(), "{name}");
            assert_eq!(e.order(), e.image_order() * e.kernel.len(), "{name}");
        }
    }

    #[test]
    fn c_symbols() {
        let rep = c_symbol_subgroup_check(3, &make_builtin("klein").unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(rep.subgroup_orders, [2, 2, 2]);
        assert!(rep.passed(), "{rep:?}");
        let rep = c_symbol_subgroup_check(3, &make_builtin("c2").unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(rep.subgroup_orders, [1, 1, 1]);
        let rep = c_symbol_subgroup_check(3, &make_builtin("d4").unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn reports() {
        let klein = make_builtin("klein").unwrap();
        let r = schur_report("klein", 3, &klein, SchurMethod::All, DEFAULT_MAX_COSETS).unwrap();
        assert!(r.consistent);
        assert_eq!(r.via_abelian_formula.as_ref().unwrap().factors(), &[2]);
        assert_eq!(r.via_kernel, r.via_exterior);
        let s3 = make_builtin("s3").unwrap();
        assert!(matches!(
            schur_report("s3", 3, &s3, SchurMethod::Abelian, DEFAULT_MAX_COSETS),
            Err(Error::MethodInapplicable(..))
        ));
        let r = schur_report("s3", 3, &s3, SchurMethod::All, DEFAULT_MAX_COSETS).unwrap();
        assert!(r.consistent && r.via_abelian_formula.is_none());
    }
}
