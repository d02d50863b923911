use std::collections::VecDeque;

use super::coset::{todd_coxeter, CosetTable};
use crate::error::{Error, Result};
use crate::group::{GroupLaw, Permutation};
use crate::presentation::{Letter, Presentation, Word};

/// The action of each generator on the cosets of a complete table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationRep {
    degree: usize,
    images: Vec<Permutation>,
}

impl PermutationRep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }
}

/// Reads the generator permutations off a complete table and re-checks that
/// every relator of `p` acts trivially.
pub fn permutation_rep(p: &Presentation, table: &CosetTable) -> Result<PermutationRep> {
    if !table.is_complete() || table.generator_count() != p.generator_count() {
        return Err(Error::IncompleteTable);
    }
    let degree = table.coset_count();
    let mut images = Vec::with_capacity(p.generator_count());
    for k in 0..p.generator_count() {
        let img: Vec<u32> = (0..degree)
            .map(|c| table.image(c, Letter::pos(k)).map(|v| v as u32).ok_or(Error::IncompleteTable))
            .collect::<Result<_>>()?;
        images.push(Permutation::from_images_unchecked(img));
    }
    let rep = PermutationRep { degree, images };
    for r in p.relators() {
        if !evaluate_word(&rep, r)?.is_identity() {
            return Err(Error::IncompleteTable);
        }
    }
    Ok(rep)
}

/// The permutation of `w`, composing generator images left to right.
pub fn evaluate_word(rep: &PermutationRep, w: &Word) -> Result<Permutation> {
    let mut pts: Vec<u32> = (0..rep.degree as u32).collect();
    for l in w.letters() {
        let g = rep
            .images
            .get(l.gen as usize)
            .ok_or_else(|| Error::MalformedWord(format!("unknown generator g{}", l.gen)))?;
        if l.inverse {
            let inv = g.inverse();
            pts.iter_mut().for_each(|x| *x = inv.apply(*x as usize) as u32);
        } else {
            pts.iter_mut().for_each(|x| *x = g.apply(*x as usize) as u32);
        }
    }
    Ok(Permutation::from_images_unchecked(pts))
}

/// A finite presented group realized by its regular representation: the
/// coset table of the trivial subgroup. Elements are coset indices, with
/// `0` the identity; coset `c` is the element reached from `0` by its
/// spanning-tree word.
#[derive(Clone, Debug)]
pub struct RegularGroup {
    table: CosetTable,
    words: Vec<Word>,
}

impl RegularGroup {
    /// Enumerates `p` over the trivial subgroup.
    pub fn enumerate(p: &Presentation, max_cosets: usize) -> Result<Self> {
        let table = todd_coxeter(p, &[], max_cosets)?;
        if !table.is_complete() {
            return Err(Error::CapacityExceeded(max_cosets));
        }
        Ok(Self::from_table(table))
    }

    /// Wraps a complete table of the trivial subgroup.
    pub fn from_table(table: CosetTable) -> Self {
        let n = table.coset_count();
        let mut words: Vec<Option<Word>> = vec![None; n];
        words[0] = Some(Word::empty());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for k in 0..table.generator_count() {
                for l in [Letter::pos(k), Letter::neg(k)] {
                    let d = table.image(c, l).expect("complete table");
                    if words[d].is_none() {
                        let mut w = words[c].clone().unwrap();
                        w.0.push(l);
                        words[d] = Some(w);
                        queue.push_back(d);
                    }
                }
            }
        }
        RegularGroup { table, words: words.into_iter().map(Option::unwrap).collect() }
    }

    pub fn order(&self) -> usize {
        self.table.coset_count()
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    /// The element represented by `w`.
    pub fn element_of(&self, w: &Word) -> usize {
        self.table.trace(0, w).expect("complete table")
    }

    /// A word for element `c`.
    pub fn word(&self, c: usize) -> &Word {
        &self.words[c]
    }

    /// `c · letter`, a single table lookup.
    #[inline]
    pub fn mul_letter(&self, c: usize, l: Letter) -> usize {
        self.table.image(c, l).expect("complete table")
    }

    pub fn generator(&self, k: usize) -> usize {
        self.mul_letter(0, Letter::pos(k))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }
}

impl GroupLaw for RegularGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.table.trace(*a, &self.words[*b]).expect("complete table")
    }

    fn inv(&self, a: &usize) -> usize {
        self.element_of(&self.words[*a].inverse())
    }
}

/// Outcome of testing whether a word is trivial in a presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Consequence {
    Yes,
    /// The word moves the identity coset to `witness`.
    No { witness: usize },
    Timeout,
}

/// Decides whether `w` is a consequence of the relators of `p` by
/// enumerating `p` over the trivial subgroup.
pub fn is_consequence(p: &Presentation, w: &Word, max_cosets: usize) -> Result<Consequence> {
    p.check_word(w)?;
    let table = todd_coxeter(p, &[], max_cosets)?;
    Ok(consequence_in(&table, w))
}

/// As [`is_consequence`], against an existing table of the trivial subgroup.
pub fn consequence_in(table: &CosetTable, w: &Word) -> Consequence {
    if !table.is_complete() {
        return Consequence::Timeout;
    }
    match table.trace(0, w) {
        Some(0) => Consequence::Yes,
        Some(c) => Consequence::No { witness: c },
        None => Consequence::Timeout,
    }
}
