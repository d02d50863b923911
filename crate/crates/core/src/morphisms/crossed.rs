//! The action of `G ≀ S_n` on `S_n(G)` and the crossed-module axioms,
//! checked on the amalgam presentation.

use super::mu::{mu_of_generator, GenMap};
use super::CheckOutcome;
use crate::enumeration::RegularGroup;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupLaw, Permutation, Tuple, WreathElement, WreathGroup};
use crate::presentation::{amalgam_presentation, GeneratorSymbol, Letter, Presentation, Word, AMALGAM_SIZE_CAP};

/// `S_n(G)` as the amalgam of copies of `S_n`, enumerated.
#[derive(Clone, Debug)]
pub struct AmalgamModel {
    pub n: usize,
    pub group: FiniteGroup,
    pub presentation: Presentation,
    pub regular: RegularGroup,
}

impl AmalgamModel {
    pub fn new(n: usize, g: &FiniteGroup, max_cosets: usize) -> Result<Self> {
        let presentation = amalgam_presentation(n, g, AMALGAM_SIZE_CAP)?;
        let regular = RegularGroup::enumerate(&presentation, max_cosets)?;
        Ok(AmalgamModel { n, group: g.clone(), presentation, regular })
    }

    fn wreath(&self) -> WreathGroup<'_> {
        WreathGroup::new(&self.group, self.n)
    }

    /// Generators `(h, 1)` with `h = x[i]`, `x ≠ 1`, and `(1, (i, i+1))`.
    pub fn wreath_generators(&self) -> Vec<WreathElement> {
        let w = self.wreath();
        let mut out = Vec::new();
        for i in 0..self.n {
            for x in self.group.elements().skip(1) {
                out.push(w.from_vector(Tuple::single(self.n, i, x)));
            }
        }
        for i in 0..self.n - 1 {
            out.push(w.from_perm(Permutation::transposition(self.n, i, i + 1)));
        }
        out
    }

    /// `((ij)_g)^{(h, t)} = ((ij)^t)_{(gh)^t}`.
    pub fn act(&self, sym: &GeneratorSymbol, x: &WreathElement) -> Result<GeneratorSymbol> {
        match sym {
            GeneratorSymbol::Copy { i, j, copy } => {
                let t = &x.perm;
                Ok(GeneratorSymbol::Copy {
                    i: t.apply(i - 1) + 1,
                    j: t.apply(j - 1) + 1,
                    copy: copy.mul(&self.group, &x.vector).act(t),
                })
            }
            other => Err(Error::UnsupportedSymbol(other.display(Some(&self.group)))),
        }
    }

    fn letter(&self, sym: &GeneratorSymbol) -> Result<usize> {
        self.presentation
            .index_of(sym)
            .ok_or_else(|| Error::InvalidSymbol(sym.display(Some(&self.group))))
    }

    /// The generator map induced by acting with `x`.
    pub fn action_map(&self, x: &WreathElement) -> Result<GenMap> {
        let mut images = Vec::with_capacity(self.presentation.generator_count());
        for sym in self.presentation.generators() {
            images.push(Word::gen(self.letter(&self.act(sym, x)?)?));
        }
        Ok(GenMap { images })
    }

    fn element(&self, w: &Word) -> usize {
        self.regular.element_of(w)
    }
}

/// The action of every wreath generator maps each amalgam relator to the
/// identity, so it induces an endomorphism (hence, being invertible on
/// generators, an automorphism) of `S_n(G)`.
pub fn verify_action_well_defined(model: &AmalgamModel) -> Result<CheckOutcome> {
    let mut cases = 0;
    for x in model.wreath_generators() {
        let map = model.action_map(&x)?;
        for (k, r) in model.presentation.relators().iter().enumerate() {
            cases += 1;
            if model.element(&map.apply(r)) != 0 {
                return Ok(CheckOutcome::fail(
                    cases,
                    format!("{x:?} breaks relator {k}: {}", model.presentation.display_word(r)),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(cases))
}

/// `μ(m^x) = μ(m)^x` for every amalgam generator `m` and wreath generator `x`.
pub fn verify_cm1(model: &AmalgamModel) -> Result<CheckOutcome> {
    let w = model.wreath();
    let mut cases = 0;
    for x in model.wreath_generators() {
        for m in model.presentation.generators() {
            cases += 1;
            let lhs = mu_of_generator(&model.act(m, &x)?, model.n, &model.group)?;
            let rhs = w.conj(&mu_of_generator(m, model.n, &model.group)?, &x);
            if lhs != rhs {
                return Ok(CheckOutcome::fail(cases, format!("{} under {x:?}", m.display(Some(&model.group)))));
            }
        }
    }
    Ok(CheckOutcome::pass(cases))
}

/// The Peiffer identity `m^{m'} = m^{μ(m')}` for all pairs of amalgam
/// generators, with equality decided in the regular representation.
pub fn verify_cm2(model: &AmalgamModel) -> Result<CheckOutcome> {
    let gens = model.presentation.generators();
    let mut cases = 0;
    for (b, mb) in gens.iter().enumerate() {
        let mu_b = mu_of_generator(mb, model.n, &model.group)?;
        let rb = model.regular.generator(b);
        let rb_inv = model.regular.inv(&rb);
        for (a, ma) in gens.iter().enumerate() {
            cases += 1;
            let lhs = model.regular.mul(&model.regular.mul(&rb_inv, &model.regular.generator(a)), &rb);
            let rhs = model.regular.generator(model.letter(&model.act(ma, &mu_b)?)?);
            if lhs != rhs {
                return Ok(CheckOutcome::fail(
                    cases,
                    format!(
                        "{} conjugated by {}",
                        ma.display(Some(&model.group)),
                        mb.display(Some(&model.group))
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::pass(cases))
}

/// `t_1⁻¹ s_g t_1 = (s^t)_{g^t}` for the transpositions `s = (i₁ j₁)`,
/// `t = (i₂ j₂)` (1-based) and every `g ∈ Gⁿ`.
pub fn verify_peiffer_simple(model: &AmalgamModel, s: (usize, usize), t: (usize, usize)) -> Result<CheckOutcome> {
    let n = model.n;
    let tp = Permutation::transposition(n, t.0 - 1, t.1 - 1);
    let t1 = model.letter(&GeneratorSymbol::Copy { i: t.0, j: t.1, copy: Tuple::identity(n) })?;
    let mut cases = 0;
    for g in Tuple::all(&model.group, n) {
        cases += 1;
        let sg = model.letter(&GeneratorSymbol::Copy { i: s.0, j: s.1, copy: g.clone() })?;
        let lhs = Word(vec![Letter::neg(t1), Letter::pos(sg), Letter::pos(t1)]);
        let rhs = GeneratorSymbol::Copy { i: tp.apply(s.0 - 1) + 1, j: tp.apply(s.1 - 1) + 1, copy: g.act(&tp) };
        if model.element(&lhs) != model.regular.generator(model.letter(&rhs)?) {
            return Ok(CheckOutcome::fail(cases, format!("g = {:?}", g.0)));
        }
    }
    Ok(CheckOutcome::pass(cases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_MAX_COSETS;
    use crate::group::make_builtin;

    #[test]
    fn crossed_module_c2() {
        let m = AmalgamModel::new(3, &make_builtin("c2").unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(m.regular.order(), 24);
        assert!(verify_action_well_defined(&m).unwrap().passed);
        assert!(verify_cm1(&m).unwrap().passed);
        assert!(verify_cm2(&m).unwrap().passed);
        assert!(verify_peiffer_simple(&m, (1, 2), (2, 3)).unwrap().passed);
    }

    #[test]
    fn trivial_parameter_group_gives_sn() {
        let m = AmalgamModel::new(3, &FiniteGroup::trivial(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(m.regular.order(), 6);
    }

    #[test]
    fn action_spot_check() {
        // ((12)_g)^{(g⁻¹, 1)} = (12)_1
        let g = make_builtin("c3").unwrap();
        let m = AmalgamModel::new(3, &g, DEFAULT_MAX_COSETS).unwrap();
        let x = Tuple(vec![1, 2, 0]);
        let w = WreathGroup::new(&g, 3);
        let img = m.act(&GeneratorSymbol::Copy { i: 1, j: 2, copy: x.clone() }, &w.from_vector(x.inv(&g))).unwrap();
        assert_eq!(img, GeneratorSymbol::Copy { i: 1, j: 2, copy: Tuple::identity(3) });
    }
}
