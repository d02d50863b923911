use std::fmt;

use crate::group::{FiniteGroup, Tuple};

/// One letter of a word: a generator index and an exponent of ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen: gen as u32, inverse }
    }

    pub fn pos(gen: usize) -> Self {
        Letter::new(gen, false)
    }

    pub fn neg(gen: usize) -> Self {
        Letter::new(gen, true)
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Column of this letter in a coset table: `2·gen` or `2·gen + 1`.
    #[inline]
    pub fn column(self) -> usize {
        2 * self.gen as usize + self.inverse as usize
    }
}

/// A word in the free group, as a sequence of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    pub fn gen(gen: usize) -> Self {
        Word(vec![Letter::pos(gen)])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `b⁻¹ a b`.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.inverse().concat(self).concat(by)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Lexicographically least cyclic rotation.
    pub fn min_rotation(&self) -> Word {
        let n = self.len();
        (0..n.max(1))
            .map(|k| {
                let mut v = self.0[k.min(n)..].to_vec();
                v.extend_from_slice(&self.0[..k.min(n)]);
                Word(v)
            })
            .min()
            .unwrap_or_default()
    }

    /// Substitutes a word for every generator.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = &images[l.gen as usize];
            if l.inverse {
                out.extend(img.inverse().0);
            } else {
                out.extend_from_slice(&img.0);
            }
        }
        Word(out)
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, generator_count: usize) -> Vec<i64> {
        let mut v = vec![0i64; generator_count];
        for l in &self.0 {
            v[l.gen as usize] += l.exponent() as i64;
        }
        v
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| if l.inverse { format!("g{}^-1", l.gen) } else { format!("g{}", l.gen) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A structured generator name. Position indices are 1-based; labels are
/// element indices of the parameter group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSymbol {
    /// `s_i(a)`
    Coxeter { i: usize, label: usize },
    /// `(ij)_a`
    Transposition { i: usize, j: usize, label: usize },
    /// `(ij)` in the plain symmetric group
    Reflection { i: usize, j: usize },
    /// `(ij)^{(g)}`: the transposition `(ij)` in the copy of `S_n` indexed by `g ∈ Gⁿ`
    Copy { i: usize, j: usize, copy: Tuple },
    /// `h_{ij}(a)`
    H { i: usize, j: usize, label: usize },
    /// `w(g, h)`, the exterior-square generator `g ∧ h`
    Wedge { left: usize, right: usize },
    Named(String),
}

fn pair(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("{i}{j}")
    } else {
        format!("{i},{j}")
    }
}

impl GeneratorSymbol {
    /// Human-readable name, using `group` to print labels.
    pub fn display(&self, group: Option<&FiniteGroup>) -> String {
        let label = |a: usize| match group {
            Some(g) => g.label(a),
            None if a == 0 => "e".to_string(),
            None => format!("g{a}"),
        };
        match self {
            GeneratorSymbol::Coxeter { i, label: a } => format!("s_{i}({})", label(*a)),
            GeneratorSymbol::Transposition { i, j, label: a } => {
                format!("({})_{}", pair(*i, *j), label(*a))
            }
            GeneratorSymbol::Reflection { i, j } => format!("({})", pair(*i, *j)),
            GeneratorSymbol::Copy { i, j, copy } => {
                let c: Vec<String> = copy.0.iter().map(|&x| label(x as usize)).collect();
                format!("({})^{{({})}}", pair(*i, *j), c.join(","))
            }
            GeneratorSymbol::H { i, j, label: a } => format!("h_{{{}}}({})", pair(*i, *j), label(*a)),
            GeneratorSymbol::Wedge { left, right } => format!("w({},{})", label(*left), label(*right)),
            GeneratorSymbol::Named(s) => s.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..4, any::<bool>()), 0..12)
            .prop_map(|v| Word(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
    }

    proptest! {
        #[test]
        fn inverse_cancels(w in arb_word()) {
            prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
            prop_assert_eq!(w.inverse().inverse(), w);
        }

        #[test]
        fn free_reduction_is_idempotent(w in arb_word()) {
            let r = w.free_reduce();
            prop_assert_eq!(r.free_reduce(), r.clone());
            prop_assert_eq!(w.exponent_sums(4), r.exponent_sums(4));
        }
    }

    #[test]
    fn min_rotation_picks_least() {
        let w = Word(vec![Letter::pos(2), Letter::pos(0), Letter::neg(1)]);
        assert_eq!(w.min_rotation(), Word(vec![Letter::pos(0), Letter::neg(1), Letter::pos(2)]));
        assert_eq!(Word::empty().min_rotation(), Word::empty());
    }

    #[test]
    fn symbol_display() {
        let g = FiniteGroup::cyclic(2);
        assert_eq!(GeneratorSymbol::Coxeter { i: 2, label: 1 }.display(Some(&g)), "s_2(g1)");
        assert_eq!(GeneratorSymbol::Transposition { i: 1, j: 2, label: 0 }.display(Some(&g)), "(12)_e");
        assert_eq!(GeneratorSymbol::H { i: 1, j: 3, label: 1 }.display(Some(&g)), "h_{13}(g1)");
        assert_eq!(
            GeneratorSymbol::Copy { i: 1, j: 2, copy: Tuple(vec![0, 1, 0]) }.display(Some(&g)),
            "(12)^{(e,g1,e)}"
        );
        assert_eq!(GeneratorSymbol::Wedge { left: 1, right: 0 }.display(Some(&g)), "w(g1,e)");
        assert_eq!(GeneratorSymbol::Reflection { i: 3, j: 11 }.display(None), "(3,11)");
    }
}
