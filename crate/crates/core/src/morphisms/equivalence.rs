//! Certificates that two presentations define the same group via explicit
//! generator maps, and relator-implication checks.

use super::mu::GenMap;
use super::CheckOutcome;
use crate::enumeration::{consequence_in, todd_coxeter, Consequence, RegularGroup};
use crate::error::{Error, Result};
use crate::group::{factorial, subgroup_closure, FiniteGroup, Permutation, Tuple};
use crate::presentation::{
    amalgam_presentation, coxeter_presentation, hs_presentation, interpolating_presentation,
    transposition_presentation, GeneratorSymbol as Sym, Presentation, Word, AMALGAM_SIZE_CAP,
};

/// The outcome of checking a pair of mutually inverse generator maps.
#[derive(Clone, Debug)]
pub struct IsoCertificate {
    pub forward: GenMap,
    pub backward: GenMap,
    pub source_order: Option<usize>,
    pub target_order: Option<usize>,
    pub forward_ok: bool,
    pub backward_ok: bool,
    pub roundtrip_ok: bool,
    /// The first violated condition, if any.
    pub failure: Option<String>,
}

impl IsoCertificate {
    pub fn is_valid(&self) -> bool {
        self.failure.is_none()
    }

    /// Whether enumeration ran out of room before anything could be decided.
    pub fn is_inconclusive(&self) -> bool {
        self.source_order.is_none() || self.target_order.is_none()
    }
}

fn first_unmapped(map: &GenMap, source: &Presentation, target: &RegularGroup) -> Option<usize> {
    source.relators().iter().position(|r| target.element_of(&map.apply(r)) != 0)
}

fn roundtrip_failure(there: &GenMap, back: &GenMap, p: &Presentation, r: &RegularGroup) -> Option<usize> {
    (0..p.generator_count()).find(|&k| r.element_of(&back.apply(&there.images[k])) != r.generator(k))
}

/// Checks that `forward: p1 → p2` and `backward: p2 → p1` are well-defined
/// homomorphisms that are mutually inverse on generators, deciding every
/// equality in the enumerated groups.
pub fn verify_isomorphism(
    p1: &Presentation,
    p2: &Presentation,
    forward: GenMap,
    backward: GenMap,
    max_cosets: usize,
) -> Result<IsoCertificate> {
    if forward.images.len() != p1.generator_count() || backward.images.len() != p2.generator_count() {
        return Err(Error::MalformedWord("generator map has the wrong number of images".into()));
    }
    for w in &forward.images {
        p2.check_word(w)?;
    }
    for w in &backward.images {
        p1.check_word(w)?;
    }
    let mut cert = IsoCertificate {
        forward,
        backward,
        source_order: None,
        target_order: None,
        forward_ok: false,
        backward_ok: false,
        roundtrip_ok: false,
        failure: None,
    };
    let r1 = match RegularGroup::enumerate(p1, max_cosets) {
        Ok(r) => r,
        Err(Error::CapacityExceeded(_)) => {
            cert.failure = Some("source enumeration exceeded the coset cap".into());
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    cert.source_order = Some(r1.order());
    let r2 = match RegularGroup::enumerate(p2, max_cosets) {
        Ok(r) => r,
        Err(Error::CapacityExceeded(_)) => {
            cert.failure = Some("target enumeration exceeded the coset cap".into());
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    cert.target_order = Some(r2.order());
    let fwd_bad = first_unmapped(&cert.forward, p1, &r2);
    let bwd_bad = first_unmapped(&cert.backward, p2, &r1);
    cert.forward_ok = fwd_bad.is_none();
    cert.backward_ok = bwd_bad.is_none();
    let rt1 = roundtrip_failure(&cert.forward, &cert.backward, p1, &r1);
    let rt2 = roundtrip_failure(&cert.backward, &cert.forward, p2, &r2);
    cert.roundtrip_ok = rt1.is_none() && rt2.is_none();
    cert.failure = if let Some(k) = fwd_bad {
        Some(format!("forward map breaks relator {}", p1.display_word(&p1.relators()[k])))
    } else if let Some(k) = bwd_bad {
        Some(format!("backward map breaks relator {}", p2.display_word(&p2.relators()[k])))
    } else if r1.order() != r2.order() {
        Some(format!("orders differ: {} vs {}", r1.order(), r2.order()))
    } else if let Some(k) = rt1 {
        Some(format!("roundtrip moves {}", p1.generators()[k].display(p1.group())))
    } else {
        rt2.map(|k| format!("roundtrip moves {}", p2.generators()[k].display(p2.group())))
    };
    Ok(cert)
}

/// One link of the chain of presentations of `S_n(G)`.
#[derive(Clone, Debug)]
pub struct ChainLink {
    pub source: Presentation,
    pub target: Presentation,
    pub forward: GenMap,
    pub backward: GenMap,
}

impl ChainLink {
    pub fn name(&self) -> String {
        format!("{}->{}", self.source.family(), self.target.family())
    }

    pub fn certify(self, max_cosets: usize) -> Result<IsoCertificate> {
        verify_isomorphism(&self.source, &self.target, self.forward, self.backward, max_cosets)
    }
}

fn t(i: usize, j: usize, label: usize) -> Sym {
    Sym::Transposition { i, j, label }
}

/// `s_i(g) ↦ (i, i+1)_g` and back.
pub fn coxeter_link(n: usize, g: &FiniteGroup) -> Result<ChainLink> {
    let source = coxeter_presentation(n, g)?;
    let target = interpolating_presentation(n, 1, g)?;
    let forward = GenMap::from_fn(&source, &target, |s| match s {
        Sym::Coxeter { i, label } => vec![(t(*i, i + 1, *label), false)],
        _ => vec![],
    })?;
    let backward = GenMap::from_fn(&target, &source, |s| match s {
        Sym::Transposition { i, label, .. } => vec![(Sym::Coxeter { i: *i, label: *label }, false)],
        _ => vec![],
    })?;
    Ok(ChainLink { source, target, forward, backward })
}

/// `f_t`, the inclusion `S_n(t, G) → S_n(t+1, G)`, and its inverse
/// `g_t((ij)_a) = (ik)_a^{(kj)_1}` for `j - i = t + 1`, with `k = i + 1`.
pub fn interpolating_link(n: usize, t_: usize, g: &FiniteGroup) -> Result<ChainLink> {
    let source = interpolating_presentation(n, t_, g)?;
    let target = interpolating_presentation(n, t_ + 1, g)?;
    let forward = GenMap::from_fn(&source, &target, |s| vec![(s.clone(), false)])?;
    let backward = GenMap::from_fn(&target, &source, |s| match s {
        Sym::Transposition { i, j, label } if j - i <= t_ => vec![(s.clone(), false)],
        Sym::Transposition { i, j, label } => {
            let k = i + 1;
            vec![(t(k, *j, 0), true), (t(*i, k, *label), false), (t(k, *j, 0), false)]
        }
        _ => vec![],
    })?;
    Ok(ChainLink { source, target, forward, backward })
}

/// The inclusion `S_n(n-1, G) → S_n(G)` and `θ`:
/// `(ij)_a ↦ (ij)_a` for `i < j`, `(ji)_{a⁻¹}` for `j < i`.
pub fn theta_link(n: usize, g: &FiniteGroup) -> Result<ChainLink> {
    let source = interpolating_presentation(n, n - 1, g)?;
    let target = transposition_presentation(n, g)?;
    let forward = GenMap::from_fn(&source, &target, |s| vec![(s.clone(), false)])?;
    let backward = GenMap::from_fn(&target, &source, |s| match s {
        Sym::Transposition { i, j, label } if i < j => vec![(s.clone(), false)],
        Sym::Transposition { i, j, label } => vec![(t(*j, *i, g.inv(*label)), false)],
        _ => vec![],
    })?;
    Ok(ChainLink { source, target, forward, backward })
}

/// `φ((ij)_a) = (ij)_{a[j]}` and `ψ((ij)_g) = (ij)_{g_i⁻¹ g_j}`.
pub fn amalgam_link(n: usize, g: &FiniteGroup) -> Result<ChainLink> {
    let source = transposition_presentation(n, g)?;
    let target = amalgam_presentation(n, g, AMALGAM_SIZE_CAP)?;
    let forward = GenMap::from_fn(&source, &target, |s| match s {
        Sym::Transposition { i, j, label } => {
            vec![(Sym::Copy { i: *i, j: *j, copy: Tuple::single(n, j - 1, *label) }, false)]
        }
        _ => vec![],
    })?;
    let backward = GenMap::from_fn(&target, &source, |s| match s {
        Sym::Copy { i, j, copy } => {
            let label = g.mul(g.inv(copy.get(i - 1)), copy.get(j - 1));
            vec![(t(*i, *j, label), false)]
        }
        _ => vec![],
    })?;
    Ok(ChainLink { source, target, forward, backward })
}

/// coxeter → S_n(1,G) → … → S_n(n-1,G) → transposition → amalgam.
pub fn presentation_chain(n: usize, g: &FiniteGroup) -> Result<Vec<ChainLink>> {
    let mut links = vec![coxeter_link(n, g)?];
    for t_ in 1..n - 1 {
        links.push(interpolating_link(n, t_, g)?);
    }
    links.push(theta_link(n, g)?);
    links.push(amalgam_link(n, g)?);
    Ok(links)
}

/// Tests each target relator against the group presented by `source`
/// (same generator alphabet), enumerating once.
pub fn verify_implication(source: &Presentation, targets: &[Word], max_cosets: usize) -> Result<Vec<Consequence>> {
    for w in targets {
        source.check_word(w)?;
    }
    let table = todd_coxeter(source, &[], max_cosets)?;
    Ok(targets.iter().map(|w| consequence_in(&table, w)).collect())
}

/// Orders entering the split decomposition `S_n(G) = HS_n(G) ⋊ S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub order: usize,
    /// Index of the section image `⟨(ij)_1⟩`.
    pub index: usize,
    /// Order of the section image inside `S_n(G)`.
    pub section_order: usize,
    /// Order of the standalone `HS_n(G)` presentation.
    pub hs_order: usize,
    pub section_ok: bool,
}

impl SplitReport {
    pub fn holds(&self, n: usize) -> bool {
        let nf = factorial(n) as usize;
        self.section_ok && self.section_order == nf && self.order == self.index * nf && self.index == self.hs_order
    }
}

/// Checks `|S_n(G)| = |HS_n(G)| · n!` with `|HS_n(G)|` both as the index of
/// `ι(S_n) = ⟨(ij)_1⟩` and as the order of the HS presentation, and that
/// `π ∘ ι` is the identity on `S_n`.
pub fn verify_split_decomposition(n: usize, g: &FiniteGroup, max_cosets: usize) -> Result<SplitReport> {
    let p = transposition_presentation(n, g)?;
    let r = RegularGroup::enumerate(&p, max_cosets)?;
    let section: Vec<Word> = p
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, s)| matches!(s, Sym::Transposition { label: 0, .. }))
        .map(|(k, _)| Word::gen(k))
        .collect();
    let index_table = todd_coxeter(&p, &section, max_cosets)?;
    if !index_table.is_complete() {
        return Err(Error::CapacityExceeded(max_cosets));
    }
    let section_elems: Vec<usize> = section.iter().map(|w| r.element_of(w)).collect();
    let section_order = subgroup_closure(&r, &section_elems).len();
    // π(ι((ij))) = (ij) on generators
    let section_ok = section.iter().all(|w| {
        let s = &p.generators()[w.letters()[0].gen as usize];
        match s {
            Sym::Transposition { i, j, .. } => super::mu::mu_of_generator(s, n, g)
                .map(|m| m.vector.is_identity() && m.perm == Permutation::transposition(n, i - 1, j - 1))
                .unwrap_or(false),
            _ => false,
        }
    });
    let hs = RegularGroup::enumerate(&hs_presentation(n, g)?, max_cosets)?;
    Ok(SplitReport {
        order: r.order(),
        index: index_table.coset_count(),
        section_order,
        hs_order: hs.order(),
        section_ok,
    })
}

/// Turns an implication result list into a single outcome.
pub fn implication_outcome(results: &[Consequence]) -> CheckOutcome {
    match results.iter().position(|c| *c != Consequence::Yes) {
        None => CheckOutcome::pass(results.len()),
        Some(k) => CheckOutcome::fail(results.len(), format!("target relator {k}: {:?}", results[k])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_MAX_COSETS;
    use crate::group::make_builtin;
    use crate::presentation::{h_presentation, hn_presentation, HRelation};

    #[test]
    fn chain_for_c2_n3() {
        let g = make_builtin("c2").unwrap();
        for link in presentation_chain(3, &g).unwrap() {
            let name = link.name();
            let cert = link.certify(DEFAULT_MAX_COSETS).unwrap();
            assert!(cert.is_valid(), "{name}: {:?}", cert.failure);
            assert_eq!(cert.source_order, Some(24));
        }
    }

    #[test]
    fn broken_map_is_rejected() {
        let g = make_builtin("c2").unwrap();
        let mut link = theta_link(3, &g).unwrap();
        // send every generator to the first one
        link.backward.images.iter_mut().for_each(|w| *w = Word::gen(0));
        let cert = link.certify(DEFAULT_MAX_COSETS).unwrap();
        assert!(!cert.is_valid());
    }

    #[test]
    fn split_decomposition() {
        for (name, order, hs) in [("trivial", 6, 1), ("c2", 24, 4), ("klein", 192, 32)] {
            let rep = verify_split_decomposition(3, &make_builtin(name).unwrap(), DEFAULT_MAX_COSETS).unwrap();
            assert_eq!((rep.order, rep.index, rep.hs_order), (order, hs, hs), "{name}");
            assert!(rep.holds(3));
        }
    }

    #[test]
    fn r_implies_h_for_c2() {
        let g = make_builtin("c2").unwrap();
        let hs = hs_presentation(3, &g).unwrap();
        let hn = hn_presentation(3, &g, &HRelation::H).unwrap();
        assert_eq!(hs.generators(), hn.generators());
        let out = verify_implication(&hs, hn.relators(), DEFAULT_MAX_COSETS).unwrap();
        assert!(implication_outcome(&out).passed);
        let r03 = h_presentation(3, &g, &HRelation::R[..4]).unwrap();
        assert_eq!(r03.generators(), hn.generators());
    }
}
