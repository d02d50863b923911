//! Structured generator symbols, words, and the relator builders for every
//! presentation family of `S_n(G)` and its subgroups.

mod families;
mod smith;
mod word;

use std::collections::{HashMap, HashSet};
use std::fmt;

pub use families::{
    amalgam_presentation, coxeter_presentation, exterior_square_presentation, h_presentation,
    hn_presentation, hs_presentation, interpolating_presentation, reflection_presentation_sn,
    transposition_presentation, HRelation, AMALGAM_SIZE_CAP, EXTERIOR_SQUARE_MAX_ORDER,
};
pub use smith::{abelian_invariants_of_presentation, invariants_of_relation_matrix};
pub use word::{GeneratorSymbol, Letter, Word};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Which construction produced a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Coxeter,
    Transposition,
    Interpolating { t: usize },
    Amalgam,
    Reflection,
    /// `h_{ij}(a)` generators with the listed relator families.
    H(Vec<HRelation>),
    ExteriorSquare,
    Custom(String),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Coxeter => write!(f, "coxeter"),
            Family::Transposition => write!(f, "transposition"),
            Family::Interpolating { t } => write!(f, "interpolating(t={t})"),
            Family::Amalgam => write!(f, "amalgam"),
            Family::Reflection => write!(f, "reflection"),
            Family::H(rels) => {
                let names: Vec<String> = rels.iter().map(|r| format!("{r:?}")).collect();
                write!(f, "h[{}]", names.join(","))
            }
            Family::ExteriorSquare => write!(f, "exterior-square"),
            Family::Custom(s) => write!(f, "{s}"),
        }
    }
}

/// A finite presentation: generator symbols and relator words.
#[derive(Clone, Debug)]
pub struct Presentation {
    generators: Vec<GeneratorSymbol>,
    index: HashMap<GeneratorSymbol, usize>,
    relators: Vec<Word>,
    family: Family,
    n: usize,
    group: Option<FiniteGroup>,
}

impl Presentation {
    /// Builds a presentation from explicit generators and relators, checking
    /// that every letter refers to a declared generator. Relators are
    /// deduplicated like the family builders do.
    pub fn new(generators: Vec<GeneratorSymbol>, relators: Vec<Word>, family: Family) -> Result<Self> {
        let mut b = Builder::with_order(generators, family, 0, None);
        for r in relators {
            if let Some(l) = r.0.iter().find(|l| l.gen as usize >= b.generators.len()) {
                return Err(Error::MalformedWord(format!(
                    "letter g{} with only {} generators",
                    l.gen,
                    b.generators.len()
                )));
            }
            b.push(r);
        }
        Ok(b.finish())
    }

    /// Free generators named `x0, x1, …` with the given relators.
    pub fn from_relators(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        let gens = (0..generator_count).map(|k| GeneratorSymbol::Named(format!("x{k}"))).collect();
        Presentation::new(gens, relators, Family::Custom("free".into()))
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        self.group.as_ref()
    }

    pub fn index_of(&self, sym: &GeneratorSymbol) -> Option<usize> {
        self.index.get(sym).copied()
    }

    /// The one-letter word for `sym`.
    pub fn word_of(&self, sym: &GeneratorSymbol) -> Result<Word> {
        self.index_of(sym)
            .map(Word::gen)
            .ok_or_else(|| Error::InvalidSymbol(sym.display(self.group())))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|l| l.gen as usize >= self.generators.len()) {
            Some(l) => Err(Error::MalformedWord(format!("unknown generator g{}", l.gen))),
            None => Ok(()),
        }
    }

    /// The same generators with additional relators appended.
    pub fn with_extra_relators(&self, extra: impl IntoIterator<Item = Word>, family: Family) -> Result<Self> {
        let mut b = Builder::with_order(self.generators.clone(), family, self.n, self.group.clone());
        for r in self.relators.iter().cloned().chain(extra) {
            if r.0.iter().any(|l| l.gen as usize >= b.generators.len()) {
                return Err(Error::MalformedWord(format!("relator {r} has unknown generators")));
            }
            b.push(r);
        }
        Ok(b.finish())
    }

    /// Human-readable rendering of a word over this presentation.
    pub fn display_word(&self, w: &Word) -> String {
        let parts: Vec<String> = w
            .0
            .iter()
            .map(|l| {
                let name = self.generators[l.gen as usize].display(self.group());
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect();
        parts.join(" ")
    }

    /// The text dump: one `g<k> := <name>` line per generator, then one line
    /// of space-separated letters per relator.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (k, g) in self.generators.iter().enumerate() {
            out.push_str(&format!("g{k} := {}\n", g.display(self.group())));
        }
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

/// Accumulates relators for a fixed, sorted generator list.
pub(crate) struct Builder {
    generators: Vec<GeneratorSymbol>,
    index: HashMap<GeneratorSymbol, usize>,
    relators: Vec<Word>,
    exact: HashSet<Word>,
    inverse_rotations: HashSet<Word>,
    family: Family,
    n: usize,
    group: Option<FiniteGroup>,
}

impl Builder {
    /// Sorts and deduplicates `generators` to pin a deterministic order.
    pub(crate) fn new(mut generators: Vec<GeneratorSymbol>, family: Family, n: usize, group: Option<FiniteGroup>) -> Self {
        generators.sort();
        generators.dedup();
        Self::with_order(generators, family, n, group)
    }

    fn with_order(generators: Vec<GeneratorSymbol>, family: Family, n: usize, group: Option<FiniteGroup>) -> Self {
        let index = generators.iter().cloned().enumerate().map(|(k, g)| (g, k)).collect();
        Builder {
            generators,
            index,
            relators: Vec::new(),
            exact: HashSet::new(),
            inverse_rotations: HashSet::new(),
            family,
            n,
            group,
        }
    }

    pub(crate) fn letter(&self, sym: &GeneratorSymbol, inverse: bool) -> Letter {
        match self.index.get(sym) {
            Some(&k) => Letter::new(k, inverse),
            None => panic!("builder referenced undeclared generator {sym:?}"),
        }
    }

    /// Adds a relator given as `(symbol, inverse?)` pairs.
    pub(crate) fn relator(&mut self, letters: &[(&GeneratorSymbol, bool)]) {
        let w = Word(letters.iter().map(|(s, inv)| self.letter(s, *inv)).collect());
        self.push(w);
    }

    /// Adds a relator unless it is empty, an exact duplicate, or a cyclic
    /// rotation of the inverse of an earlier relator.
    pub(crate) fn push(&mut self, w: Word) {
        if w.is_empty() || self.exact.contains(&w) || self.inverse_rotations.contains(&w.min_rotation()) {
            return;
        }
        self.inverse_rotations.insert(w.inverse().min_rotation());
        self.exact.insert(w.clone());
        self.relators.push(w);
    }

    pub(crate) fn finish(self) -> Presentation {
        Presentation {
            generators: self.generators,
            index: self.index,
            relators: self.relators,
            family: self.family,
            n: self.n,
            group: self.group,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedup_drops_duplicates_and_inverse_rotations() {
        let a = Letter::pos(0);
        let b = Letter::pos(1);
        let w = Word(vec![a, b, a.inv()]);
        let p = Presentation::from_relators(
            2,
            vec![
                w.clone(),
                w.clone(),
                // inverse: a b⁻¹ a⁻¹, rotated to b⁻¹ a⁻¹ a
                Word(vec![b.inv(), a.inv(), a]),
                // a plain rotation of w is kept
                Word(vec![b, a.inv(), a]),
                Word::empty(),
            ],
        )
        .unwrap();
        assert_eq!(p.relators().len(), 2);
    }

    #[test]
    fn malformed_relators_are_rejected() {
        let err = Presentation::from_relators(1, vec![Word::gen(3)]).unwrap_err();
        assert!(matches!(err, Error::MalformedWord(_)));
    }

    #[test]
    fn dump_format() {
        let p = Presentation::from_relators(2, vec![Word(vec![Letter::pos(0), Letter::neg(1)])]).unwrap();
        assert_eq!(p.dump(), "g0 := x0\ng1 := x1\ng0 g1^-1\n");
    }
}
