//! Tuples in Gⁿ and the wreath product G ≀ Sₙ.
//!
//! Sₙ acts on Gⁿ on the right by moving the entry at position `i` to
//! position `s(i)`: `(x^s)[s(i)] = x[i]`. With permutation products read left
//! to right this is a right action, `(x^s)^t = x^(st)`. The wreath product
//! law is then
//!
//! ```text
//! (x, s) · (y, t) = (x · y^(s⁻¹), st),   (y^(s⁻¹))[i] = y[s(i)]
//! ```
//!
//! so that conjugating `(1, s)` by `(g, 1)` gives `(g⁻¹ · g^(s⁻¹), s)`.

use super::{FiniteGroup, GroupLaw, Permutation};
use crate::error::{Error, Result};

/// An element of Gⁿ as a list of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple(pub Vec<u32>);

impl Tuple {
    pub fn identity(n: usize) -> Self {
        Tuple(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `x` placed at 0-based position `i`, identity elsewhere.
    pub fn single(n: usize, i: usize, x: usize) -> Self {
        let mut t = Tuple::identity(n);
        t.0[i] = x as u32;
        t
    }

    pub fn mul(&self, g: &FiniteGroup, other: &Tuple) -> Tuple {
        Tuple(self.0.iter().zip(&other.0).map(|(&a, &b)| g.mul(a as usize, b as usize) as u32).collect())
    }

    pub fn inv(&self, g: &FiniteGroup) -> Tuple {
        Tuple(self.0.iter().map(|&a| g.inv(a as usize) as u32).collect())
    }

    /// The right action `x^s`: the entry at `i` moves to `s(i)`.
    pub fn act(&self, s: &Permutation) -> Tuple {
        let mut out = vec![0u32; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[s.apply(i)] = x;
        }
        Tuple(out)
    }

    /// Whether `x^s = x`.
    pub fn is_fixed_by(&self, s: &Permutation) -> bool {
        (0..self.len()).all(|i| self.0[i] == self.0[s.apply(i)])
    }

    /// All of Gⁿ, in lexicographic order.
    pub fn all(g: &FiniteGroup, n: usize) -> Vec<Tuple> {
        let m = g.order();
        let total = m.pow(n as u32);
        (0..total)
            .map(|mut k| {
                let mut v = vec![0u32; n];
                for slot in v.iter_mut().rev() {
                    *slot = (k % m) as u32;
                    k /= m;
                }
                Tuple(v)
            })
            .collect()
    }
}

/// `d_{ij}(a)`: `a` at position `i`, `a⁻¹` at position `j` (1-based indices).
pub fn d_vector(g: &FiniteGroup, n: usize, i: usize, j: usize, a: usize) -> Result<Tuple> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange(format!("d_{{{i}{j}}} with n = {n}")));
    }
    if i == j {
        return Err(Error::IndexOutOfRange(format!("d_{{{i}{j}}} needs i != j")));
    }
    if a >= g.order() {
        return Err(Error::IndexOutOfRange(format!("element {a} in a group of order {}", g.order())));
    }
    let mut t = Tuple::identity(n);
    t.0[i - 1] = a as u32;
    t.0[j - 1] = g.inv(a) as u32;
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub vector: Tuple,
    pub perm: Permutation,
}

impl WreathElement {
    pub fn new(vector: Tuple, perm: Permutation) -> Result<Self> {
        if vector.len() != perm.degree() {
            return Err(Error::DegreeMismatch(vector.len(), perm.degree()));
        }
        Ok(WreathElement { vector, perm })
    }

    pub fn is_identity(&self) -> bool {
        self.vector.is_identity() && self.perm.is_identity()
    }
}

/// The group law of Gⁿ (componentwise).
#[derive(Clone, Copy, Debug)]
pub struct TupleGroup<'g> {
    pub group: &'g FiniteGroup,
    pub n: usize,
}

impl<'g> TupleGroup<'g> {
    pub fn new(group: &'g FiniteGroup, n: usize) -> Self {
        TupleGroup { group, n }
    }
}

impl GroupLaw for TupleGroup<'_> {
    type Elem = Tuple;

    fn identity(&self) -> Tuple {
        Tuple::identity(self.n)
    }

    fn mul(&self, a: &Tuple, b: &Tuple) -> Tuple {
        a.mul(self.group, b)
    }

    fn inv(&self, a: &Tuple) -> Tuple {
        a.inv(self.group)
    }
}

/// The wreath product G ≀ Sₙ.
#[derive(Clone, Copy, Debug)]
pub struct WreathGroup<'g> {
    pub group: &'g FiniteGroup,
    pub n: usize,
}

impl<'g> WreathGroup<'g> {
    pub fn new(group: &'g FiniteGroup, n: usize) -> Self {
        WreathGroup { group, n }
    }

    /// `|G|ⁿ · n!`.
    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        (self.group.order() as u128).pow(self.n as u32) * fact
    }

    pub fn from_perm(&self, perm: Permutation) -> WreathElement {
        WreathElement { vector: Tuple::identity(self.n), perm }
    }

    pub fn from_vector(&self, vector: Tuple) -> WreathElement {
        WreathElement { vector, perm: Permutation::identity(self.n) }
    }

    /// `(d_{ij}(a), (ij))` for 0-based `i ≠ j`.
    pub fn transposition_image(&self, i: usize, j: usize, a: usize) -> WreathElement {
        let mut v = Tuple::identity(self.n);
        v.0[i] = a as u32;
        v.0[j] = self.group.inv(a) as u32;
        WreathElement { vector: v, perm: Permutation::transposition(self.n, i, j) }
    }

    /// `s^g = (g, 1)⁻¹ (1, s) (g, 1)`, computed with the group law.
    pub fn conjugate_perm_by_vector(&self, s: &Permutation, g: &Tuple) -> WreathElement {
        let gv = self.from_vector(g.clone());
        self.conj(&self.from_perm(s.clone()), &gv)
    }

    /// Checked multiplication, for callers mixing degrees.
    pub fn try_mul(&self, x: &WreathElement, y: &WreathElement) -> Result<WreathElement> {
        for e in [x, y] {
            if e.vector.len() != self.n || e.perm.degree() != self.n {
                return Err(Error::DegreeMismatch(self.n, e.vector.len().max(e.perm.degree())));
            }
        }
        Ok(self.mul(x, y))
    }
}

impl GroupLaw for WreathGroup<'_> {
    type Elem = WreathElement;

    fn identity(&self) -> WreathElement {
        WreathElement { vector: Tuple::identity(self.n), perm: Permutation::identity(self.n) }
    }

    fn mul(&self, x: &WreathElement, y: &WreathElement) -> WreathElement {
        let g = self.group;
        let vector = Tuple(
            (0..self.n)
                .map(|i| g.mul(x.vector.get(i), y.vector.get(x.perm.apply(i))) as u32)
                .collect(),
        );
        WreathElement { vector, perm: x.perm.then(&y.perm) }
    }

    fn inv(&self, x: &WreathElement) -> WreathElement {
        // (x, s)⁻¹ = (y, s⁻¹) with y[s(i)] = x[i]⁻¹
        let mut v = vec![0u32; self.n];
        for i in 0..self.n {
            v[x.perm.apply(i)] = self.group.inv(x.vector.get(i)) as u32;
        }
        WreathElement { vector: Tuple(v), perm: x.perm.inverse() }
    }
}

/// Wreath multiplication with explicit degree checks.
pub fn wreath_multiply(
    group: &FiniteGroup,
    n: usize,
    x: &WreathElement,
    y: &WreathElement,
) -> Result<WreathElement> {
    WreathGroup::new(group, n).try_mul(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_builtin;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_element(w: &WreathGroup<'_>, rng: &mut impl Rng) -> WreathElement {
        let perms = Permutation::all(w.n);
        let v = Tuple((0..w.n).map(|_| rng.gen_range(0..w.group.order()) as u32).collect());
        WreathElement { vector: v, perm: perms[rng.gen_range(0..perms.len())].clone() }
    }

    #[test]
    fn d_vector_examples() {
        let c2 = make_builtin("c2").unwrap();
        assert_eq!(d_vector(&c2, 3, 1, 2, 1).unwrap(), Tuple(vec![1, 1, 0]));
        assert_eq!(d_vector(&c2, 3, 1, 2, 0).unwrap(), Tuple::identity(3));
        let c4 = make_builtin("c4").unwrap();
        assert_eq!(d_vector(&c4, 3, 2, 3, 1).unwrap(), Tuple(vec![0, 1, 3]));
        assert!(d_vector(&c4, 3, 2, 2, 1).is_err());
        assert!(d_vector(&c4, 3, 0, 2, 1).is_err());
        assert!(d_vector(&c4, 3, 1, 4, 1).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let c2 = make_builtin("klein").unwrap();
        let w = WreathGroup::new(&c2, 2);
        let x = w.from_vector(Tuple(vec![1, 0]));
        let y = w.from_vector(Tuple(vec![0, 2]));
        assert_eq!(w.mul(&x, &w.identity()), x);
        assert_eq!(w.mul(&x, &y).vector, Tuple(vec![1, 2]));

        let c2 = make_builtin("c2").unwrap();
        let w = WreathGroup::new(&c2, 3);
        let m = w.transposition_image(0, 1, 1);
        assert!(w.mul(&m, &m).is_identity());
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let c2 = make_builtin("c2").unwrap();
        let x = WreathGroup::new(&c2, 2).identity();
        let y = WreathGroup::new(&c2, 3).identity();
        assert!(matches!(wreath_multiply(&c2, 3, &x, &y), Err(Error::DegreeMismatch(..))));
        assert!(WreathElement::new(Tuple::identity(2), Permutation::identity(3)).is_err());
    }

    #[test]
    fn law_is_associative_with_inverses() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for name in ["c2", "s3", "q8"] {
            let g = make_builtin(name).unwrap();
            let w = WreathGroup::new(&g, 3);
            for _ in 0..100 {
                let (a, b, c) = (
                    random_element(&w, &mut rng),
                    random_element(&w, &mut rng),
                    random_element(&w, &mut rng),
                );
                assert_eq!(w.mul(&w.mul(&a, &b), &c), w.mul(&a, &w.mul(&b, &c)));
                assert!(w.mul(&a, &w.inv(&a)).is_identity());
                assert!(w.mul(&w.inv(&a), &a).is_identity());
            }
        }
    }

    #[test]
    fn tuple_action_is_a_right_action() {
        let g = make_builtin("s3").unwrap();
        let perms = Permutation::all(3);
        for x in Tuple::all(&g, 3).iter().step_by(7) {
            for s in &perms {
                for t in &perms {
                    assert_eq!(x.act(s).act(t), x.act(&s.then(t)));
                }
            }
        }
    }

    #[test]
    fn conjugate_matches_closed_form() {
        // s^g = (g⁻¹ · g^(s⁻¹), s)
        let g = make_builtin("s3").unwrap();
        let w = WreathGroup::new(&g, 3);
        for s in Permutation::all(3) {
            for x in Tuple::all(&g, 3).iter().step_by(5) {
                let expected = x.inv(&g).mul(&g, &x.act(&s.inverse()));
                let got = w.conjugate_perm_by_vector(&s, x);
                assert_eq!(got, WreathElement { vector: expected, perm: s.clone() });
            }
        }
    }

    /// `s^g = s^h` in G ≀ S₃ exactly when `s` fixes `h g⁻¹`.
    #[test]
    fn conjugates_agree_iff_permutation_fixes_quotient() {
        let g = make_builtin("c2").unwrap();
        let w = WreathGroup::new(&g, 3);
        let tuples = Tuple::all(&g, 3);
        for s in Permutation::all(3) {
            for x in &tuples {
                for y in &tuples {
                    let same = w.conjugate_perm_by_vector(&s, x) == w.conjugate_perm_by_vector(&s, y);
                    let fixed = y.mul(&g, &x.inv(&g)).is_fixed_by(&s);
                    assert_eq!(same, fixed, "s = {s:?}, g = {x:?}, h = {y:?}");
                }
            }
        }
        // the same statement for a nonabelian parameter group
        let g = make_builtin("s3").unwrap();
        let w = WreathGroup::new(&g, 3);
        let tuples = Tuple::all(&g, 3);
        for s in Permutation::all(3) {
            for x in tuples.iter().step_by(3) {
                for y in tuples.iter().step_by(5) {
                    let same = w.conjugate_perm_by_vector(&s, x) == w.conjugate_perm_by_vector(&s, y);
                    let fixed = y.mul(&g, &x.inv(&g)).is_fixed_by(&s);
                    assert_eq!(same, fixed);
                }
            }
        }
    }
}
