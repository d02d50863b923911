use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::Hash;

use super::{FiniteGroup, GroupLaw};
use crate::error::{Error, Result};

/// Invariant factors `d₁ | d₂ | … | d_k` of a finitely generated abelian group.
///
/// Finite factors are ≥ 2. A factor `0` stands for a copy of ℤ; zeros sort
/// last, which keeps the divisibility chain valid. The empty list is the
/// trivial group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianInvariants {
    factors: Vec<u64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Validates an existing invariant-factor list.
    pub fn from_chain(factors: Vec<u64>) -> Result<Self> {
        let ok = factors.iter().all(|&d| d == 0 || d >= 2)
            && factors.windows(2).all(|w| match (w[0], w[1]) {
                (_, 0) => true,
                (0, _) => false,
                (a, b) => b % a == 0,
            });
        if ok {
            Ok(AbelianInvariants { factors })
        } else {
            Err(Error::MalformedChain(factors))
        }
    }

    /// Normalizes a direct sum of cyclic groups `ℤ/c₁ ⊕ ℤ/c₂ ⊕ …`
    /// (entries 1 are dropped, 0 means ℤ) into invariant factors.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let free = orders.iter().filter(|&&c| c == 0).count();
        // prime -> exponents of the primary components
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &c in orders.iter().filter(|&&c| c > 1) {
            for (p, e) in factorize(c) {
                primary.entry(p).or_default().push(e);
            }
        }
        let mut factors = Self::combine_primary(&mut primary);
        factors.extend(std::iter::repeat(0).take(free));
        AbelianInvariants { factors }
    }

    fn combine_primary(primary: &mut BTreeMap<u64, Vec<u32>>) -> Vec<u64> {
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (&p, exps) in primary.iter_mut() {
            exps.sort_unstable();
            // largest exponents go to the last factors
            for (k, &e) in exps.iter().rev().enumerate() {
                factors[len - 1 - k] *= p.pow(e);
            }
        }
        factors
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        !self.factors.contains(&0)
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|&&d| d == 0).count()
    }

    /// Group order, or `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.factors.iter().product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub(crate) fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Recovers invariant factors of a finite abelian group of order `order`
/// from its element orders. For each prime `p`, the number of elements
/// killed by `p^k` is `p^(Σᵢ min(k, eᵢ))`, which determines the exponents `eᵢ`.
fn invariants_from_element_orders(order: u64, element_orders: &[u64]) -> AbelianInvariants {
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for (p, total_exp) in factorize(order) {
        // log_p of #{x : x^(p^k) = 1} for k = 0..=total_exp
        let mut logs = Vec::with_capacity(total_exp as usize + 1);
        for k in 0..=total_exp {
            let pk = p.pow(k);
            let count = element_orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            logs.push(ilog(count, p));
        }
        // number of exponents ≥ k is logs[k] - logs[k-1]
        let mut exps = Vec::new();
        for k in 1..=total_exp as usize {
            let at_least_k = logs[k] - logs[k - 1];
            let at_least_next = if k < total_exp as usize { logs[k + 1] - logs[k] } else { 0 };
            for _ in 0..(at_least_k - at_least_next) {
                exps.push(k as u32);
            }
        }
        if !exps.is_empty() {
            primary.insert(p, exps);
        }
    }
    AbelianInvariants { factors: AbelianInvariants::combine_primary(&mut primary) }
}

fn ilog(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0, "count is not a power of {p}");
        x /= p;
        k += 1;
    }
    k
}

fn element_order_in<L: GroupLaw>(law: &L, x: &L::Elem) -> u64 {
    let id = law.identity();
    let mut y = x.clone();
    let mut k = 1;
    while y != id {
        y = law.mul(&y, x);
        k += 1;
    }
    k
}

/// Invariant factors of a finite abelian subgroup given by its full element
/// list. Closure and commutativity are verified first.
pub fn abelian_invariants_of_subgroup<L>(law: &L, elements: &[L::Elem]) -> Result<AbelianInvariants>
where
    L: GroupLaw,
    L::Elem: Hash,
{
    let set: HashSet<&L::Elem> = elements.iter().collect();
    if !set.contains(&law.identity()) {
        return Err(Error::NotClosed);
    }
    for a in elements {
        for b in elements {
            let ab = law.mul(a, b);
            if !set.contains(&ab) {
                return Err(Error::NotClosed);
            }
            if ab != law.mul(b, a) {
                return Err(Error::NotAbelian);
            }
        }
    }
    let orders: Vec<u64> = set.iter().map(|x| element_order_in(law, x)).collect();
    Ok(invariants_from_element_orders(set.len() as u64, &orders))
}

/// Elements of the derived subgroup `[G, G]`, sorted.
pub fn derived_subgroup(g: &FiniteGroup) -> Vec<usize> {
    let commutators: HashSet<usize> = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    let gens: Vec<usize> = commutators.into_iter().collect();
    super::subgroup_closure(g, &gens)
}

/// Invariant factors of `G / [G, G]`.
pub fn abelianization(g: &FiniteGroup) -> AbelianInvariants {
    let derived = derived_subgroup(g);
    let in_derived: Vec<bool> = {
        let mut v = vec![false; g.order()];
        derived.iter().for_each(|&x| v[x] = true);
        v
    };
    // order of each coset x[G,G] in the quotient; every coset appears |[G,G]| times
    let orders: Vec<u64> = g
        .elements()
        .map(|a| {
            let mut x = a;
            let mut k = 1;
            while !in_derived[x] {
                x = g.mul(x, a);
                k += 1;
            }
            k
        })
        .collect();
    let quotient_order = (g.order() / derived.len()) as u64;
    // counts of elements below p^k are all scaled by |[G,G]|; undo that by
    // keeping one representative per coset-order multiset entry
    let per_coset: Vec<u64> = {
        let mut buckets: BTreeMap<u64, usize> = BTreeMap::new();
        orders.iter().for_each(|&o| *buckets.entry(o).or_default() += 1);
        buckets
            .into_iter()
            .flat_map(|(o, c)| std::iter::repeat(o).take(c / derived.len()))
            .collect()
    };
    invariants_from_element_orders(quotient_order, &per_coset)
}

impl GroupLaw for FiniteGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        FiniteGroup::mul(self, *a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        FiniteGroup::inv(self, *a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_builtin, subgroup_closure, BUILTIN_NAMES};
    use proptest::prelude::*;

    fn inv(v: &[u64]) -> AbelianInvariants {
        AbelianInvariants::from_chain(v.to_vec()).unwrap()
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(abelianization(&make_builtin("s3").unwrap()), inv(&[2]));
        assert_eq!(abelianization(&make_builtin("c4xc2").unwrap()), inv(&[2, 4]));
        assert_eq!(abelianization(&make_builtin("q8").unwrap()), inv(&[2, 2]));
        assert_eq!(abelianization(&make_builtin("d4").unwrap()), inv(&[2, 2]));
        assert_eq!(abelianization(&make_builtin("a4").unwrap()), inv(&[3]));
        assert_eq!(abelianization(&make_builtin("c6").unwrap()), inv(&[6]));
        assert_eq!(abelianization(&make_builtin("trivial").unwrap()), inv(&[]));
    }

    #[test]
    fn abelianization_order_matches_derived_index() {
        for name in BUILTIN_NAMES {
            let g = make_builtin(name).unwrap();
            let ab = abelianization(&g).order().unwrap() as usize;
            assert_eq!(g.order() % ab, 0);
            assert_eq!(ab, g.order() / derived_subgroup(&g).len(), "{name}");
        }
    }

    #[test]
    fn subgroup_invariants() {
        let c4 = make_builtin("c4").unwrap();
        assert_eq!(abelian_invariants_of_subgroup(&c4, &[0]).unwrap(), inv(&[]));
        let cyclic = subgroup_closure(&c4, &[1]);
        assert_eq!(abelian_invariants_of_subgroup(&c4, &cyclic).unwrap(), inv(&[4]));
        assert_eq!(abelian_invariants_of_subgroup(&c4, &[0, 1]), Err(Error::NotClosed));
        let s3 = make_builtin("s3").unwrap();
        let all: Vec<usize> = s3.elements().collect();
        assert_eq!(abelian_invariants_of_subgroup(&s3, &all), Err(Error::NotAbelian));
    }

    #[test]
    fn chain_validation() {
        assert!(AbelianInvariants::from_chain(vec![2, 4, 0]).is_ok());
        assert!(AbelianInvariants::from_chain(vec![2, 3]).is_err());
        assert!(AbelianInvariants::from_chain(vec![0, 2]).is_err());
        assert!(AbelianInvariants::from_chain(vec![1]).is_err());
    }

    #[test]
    fn cyclic_orders_normalize() {
        assert_eq!(AbelianInvariants::from_cyclic_orders(&[2, 3]), inv(&[6]));
        assert_eq!(AbelianInvariants::from_cyclic_orders(&[4, 2, 1]), inv(&[2, 4]));
        assert_eq!(AbelianInvariants::from_cyclic_orders(&[6, 4, 0]), inv(&[2, 12, 0]));
        assert_eq!(AbelianInvariants::from_cyclic_orders(&[]), inv(&[]));
    }

    proptest! {
        /// Element-order counting recovers the invariants of any product of
        /// small cyclic groups.
        #[test]
        fn element_counting_recovers_invariants(orders in proptest::collection::vec(1u64..7, 0..4)) {
            let mut g = FiniteGroup::trivial();
            for &m in &orders {
                g = g.direct_product(&FiniteGroup::cyclic(m as usize));
            }
            let all: Vec<usize> = g.elements().collect();
            let got = abelian_invariants_of_subgroup(&g, &all).unwrap();
            prop_assert_eq!(got.clone(), AbelianInvariants::from_cyclic_orders(&orders));
            prop_assert_eq!(got, abelianization(&g));
        }
    }
}
