//! The rewriting process `τ` from words in `(ij)_a` to words in `h_{ij}(a)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CheckOutcome;
use crate::enumeration::RegularGroup;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::presentation::{transposition_presentation, GeneratorSymbol, Letter, Presentation, Word};

/// A letter `(ij)_a^{±1}` or `h_{ij}(a)^{±1}` with 1-based indices and an
/// arbitrary label type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexedLetter<L> {
    pub i: usize,
    pub j: usize,
    pub label: L,
    pub inverse: bool,
}

impl<L> IndexedLetter<L> {
    pub fn new(i: usize, j: usize, label: L) -> Self {
        IndexedLetter { i, j, label, inverse: false }
    }
}

/// `τ(∏ (i_k j_k)_{a_k}) = ∏ h_{σ_k(i_k), σ_k(j_k)}(a_k)` with
/// `σ_k = (i_1 j_1) ⋯ (i_{k-1} j_{k-1})` acting on indices, the rightmost
/// factor applied first.
///
/// An inverse letter `(ij)_a⁻¹` becomes `h_{σ_k(j), σ_k(i)}(a)⁻¹`; this is
/// what `(ij)_a⁻¹ = (ij)_1 · h_{ij}(a)⁻¹` gives, and it makes `τ` send
/// freely equal words to freely equal words.
pub fn rewrite_tau<L: Clone>(word: &[IndexedLetter<L>], n: usize) -> Result<Vec<IndexedLetter<L>>> {
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(word.len());
    for l in word {
        if l.i == 0 || l.j == 0 || l.i > n || l.j > n || l.i == l.j {
            return Err(Error::InvalidSymbol(format!("({},{}) with n = {n}", l.i, l.j)));
        }
        let (si, sj) = (sigma[l.i - 1] + 1, sigma[l.j - 1] + 1);
        out.push(if l.inverse {
            IndexedLetter { i: sj, j: si, label: l.label.clone(), inverse: true }
        } else {
            IndexedLetter { i: si, j: sj, label: l.label.clone(), inverse: false }
        });
        // σ_{k+1}(x) = σ_k((i_k j_k)(x))
        sigma.swap(l.i - 1, l.j - 1);
    }
    Ok(out)
}

/// Cancels adjacent `x x⁻¹` pairs.
pub fn free_reduce_letters<L: Eq + Clone>(word: &[IndexedLetter<L>]) -> Vec<IndexedLetter<L>> {
    let mut out: Vec<IndexedLetter<L>> = Vec::with_capacity(word.len());
    for l in word {
        match out.last() {
            Some(p) if p.i == l.i && p.j == l.j && p.label == l.label && p.inverse != l.inverse => {
                out.pop();
            }
            _ => out.push(l.clone()),
        }
    }
    out
}

/// The underlying permutation of a word in `(ij)_a`.
pub fn underlying_permutation<L>(word: &[IndexedLetter<L>], n: usize) -> Permutation {
    word.iter()
        .fold(Permutation::identity(n), |acc, l| acc.then(&Permutation::transposition(n, l.i - 1, l.j - 1)))
}

fn to_word(p: &Presentation, letters: &[IndexedLetter<usize>], h: bool) -> Word {
    Word(
        letters
            .iter()
            .map(|l| {
                let sym = if h {
                    GeneratorSymbol::H { i: l.i, j: l.j, label: l.label }
                } else {
                    GeneratorSymbol::Transposition { i: l.i, j: l.j, label: l.label }
                };
                Letter::new(p.index_of(&sym).expect("symbol of this presentation"), l.inverse)
            })
            .collect(),
    )
}

/// Evaluates a word in `h_{ij}(a)` inside `S_n(G)` through
/// `h_{ij}(a) ↦ (ij)_a (ij)_1`.
fn evaluate_h(r: &RegularGroup, p: &Presentation, letters: &[IndexedLetter<usize>]) -> usize {
    let mut w = Vec::with_capacity(2 * letters.len());
    for l in letters {
        let x = Letter::pos(p.index_of(&GeneratorSymbol::Transposition { i: l.i, j: l.j, label: l.label }).unwrap());
        let e = Letter::pos(p.index_of(&GeneratorSymbol::Transposition { i: l.i, j: l.j, label: 0 }).unwrap());
        if l.inverse {
            w.extend([e.inv(), x.inv()]);
        } else {
            w.extend([x, e]);
        }
    }
    r.element_of(&Word(w))
}

/// A random word in `(ij)_a` whose underlying permutation is trivial.
fn random_hs_word(rng: &mut impl Rng, n: usize, g: &FiniteGroup, max_len: usize) -> Vec<IndexedLetter<usize>> {
    let len = rng.gen_range(0..=max_len);
    let mut w: Vec<IndexedLetter<usize>> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            let mut j = rng.gen_range(1..n);
            if j >= i {
                j += 1;
            }
            IndexedLetter { i, j, label: rng.gen_range(0..g.order()), inverse: rng.gen_bool(0.3) }
        })
        .collect();
    // close the permutation with (ij)_1 letters
    let back = underlying_permutation(&w, n).inverse();
    for (a, b) in back.transposition_factorization() {
        w.push(IndexedLetter::new(a + 1, b + 1, 0));
    }
    w
}

/// Results of the sampled checks of `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauReport {
    pub samples: usize,
    pub multiplicative: CheckOutcome,
    pub evaluation: CheckOutcome,
    pub free_equality: CheckOutcome,
}

impl TauReport {
    pub fn passed(&self) -> bool {
        self.multiplicative.passed && self.evaluation.passed && self.free_equality.passed
    }
}

/// Samples words `U, U₁, U₂` representing elements of `HS_n(G)` and checks
/// that `τ(U₁U₂) = τ(U₁)τ(U₂)` letterwise, that `τ(U)` evaluates to the
/// element of `U`, and that freely equal inputs give freely equal outputs.
pub fn verify_tau_properties(
    n: usize,
    g: &FiniteGroup,
    samples: usize,
    seed: u64,
    max_cosets: usize,
) -> Result<TauReport> {
    let p = transposition_presentation(n, g)?;
    let r = RegularGroup::enumerate(&p, max_cosets)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut mult, mut eval, mut free) = (None, None, None);
    for k in 0..samples {
        let u1 = random_hs_word(&mut rng, n, g, 8);
        let u2 = random_hs_word(&mut rng, n, g, 8);
        let u12: Vec<_> = u1.iter().chain(&u2).cloned().collect();
        let t1 = rewrite_tau(&u1, n)?;
        let t2 = rewrite_tau(&u2, n)?;
        let joined: Vec<_> = t1.iter().chain(&t2).cloned().collect();
        if mult.is_none() && rewrite_tau(&u12, n)? != joined {
            mult = Some(format!("sample {k}"));
        }
        if eval.is_none() && evaluate_h(&r, &p, &t1) != r.element_of(&to_word(&p, &u1, false)) {
            eval = Some(format!("sample {k}"));
        }
        // insert a cancelling pair at a random position
        let mut padded = u1.clone();
        let pos = rng.gen_range(0..=padded.len());
        let mut x = random_hs_word(&mut rng, n, g, 1).into_iter().next().unwrap_or(IndexedLetter::new(1, 2, 0));
        x.inverse = rng.gen();
        let mut y = x.clone();
        y.inverse = !x.inverse;
        padded.splice(pos..pos, [x, y]);
        if free.is_none() && free_reduce_letters(&rewrite_tau(&padded, n)?) != free_reduce_letters(&t1) {
            free = Some(format!("sample {k}"));
        }
    }
    let outcome = |w: Option<String>| match w {
        None => CheckOutcome::pass(samples),
        Some(w) => CheckOutcome::fail(samples, w),
    };
    Ok(TauReport { samples, multiplicative: outcome(mult), evaluation: outcome(eval), free_equality: outcome(free) })
}

/// `τ((ij)_a (ij)_1) = h_{ij}(a) h_{ji}(1)`, which is `h_{ij}(a)` once
/// `h_{ji}(1) = 1`.
pub fn tau_base_case(n: usize, g: &FiniteGroup) -> Result<CheckOutcome> {
    let mut cases = 0;
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for a in g.elements() {
                cases += 1;
                let out = rewrite_tau(&[IndexedLetter::new(i, j, a), IndexedLetter::new(i, j, 0)], n)?;
                if out != [IndexedLetter::new(i, j, a), IndexedLetter::new(j, i, 0)] {
                    return Ok(CheckOutcome::fail(cases, format!("({i}{j})_{a}")));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(cases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_MAX_COSETS;
    use crate::group::make_builtin;

    fn l(i: usize, j: usize, a: &'static str) -> IndexedLetter<&'static str> {
        IndexedLetter::new(i, j, a)
    }

    #[test]
    fn h_definition() {
        assert_eq!(rewrite_tau(&[l(1, 2, "a"), l(1, 2, "e")], 3).unwrap(), vec![l(1, 2, "a"), l(2, 1, "e")]);
        assert!(rewrite_tau::<&str>(&[], 3).unwrap().is_empty());
    }

    #[test]
    fn multiplicative_on_a_hand_example() {
        let u = [l(1, 2, "a"), l(1, 2, "e")];
        let uu: Vec<_> = u.iter().chain(&u).cloned().collect();
        let t = rewrite_tau(&u, 3).unwrap();
        let tt: Vec<_> = t.iter().chain(&t).cloned().collect();
        assert_eq!(rewrite_tau(&uu, 3).unwrap(), tt);
    }

    #[test]
    fn sigma_twisted_indices() {
        // σ₂ = (12), σ₃ = (12)(23) with (23) applied first
        let out = rewrite_tau(&[l(1, 2, "a"), l(2, 3, "b"), l(1, 3, "c")], 3).unwrap();
        assert_eq!(out, vec![l(1, 2, "a"), l(1, 3, "b"), l(2, 1, "c")]);
    }

    #[test]
    fn braid_word_evaluates_consistently() {
        let g = make_builtin("c2").unwrap();
        let p = transposition_presentation(3, &g).unwrap();
        let r = RegularGroup::enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        let u: Vec<_> = (0..3).flat_map(|_| [IndexedLetter::new(1, 2, 1), IndexedLetter::new(2, 3, 1)]).collect();
        assert!(underlying_permutation(&u, 3).is_identity());
        let t = rewrite_tau(&u, 3).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(evaluate_h(&r, &p, &t), r.element_of(&to_word(&p, &u, false)));
    }

    #[test]
    fn relator_rewrites_to_identity() {
        let g = make_builtin("c2").unwrap();
        let p = transposition_presentation(3, &g).unwrap();
        let r = RegularGroup::enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        let sg1 = [IndexedLetter::new(1, 3, 1), IndexedLetter::new(1, 3, 1)];
        assert_eq!(evaluate_h(&r, &p, &rewrite_tau(&sg1, 3).unwrap()), 0);
    }

    #[test]
    fn sampled_properties() {
        let rep = verify_tau_properties(3, &make_builtin("c2").unwrap(), 200, 1, DEFAULT_MAX_COSETS).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(tau_base_case(3, &make_builtin("klein").unwrap()).unwrap().passed);
    }
}
