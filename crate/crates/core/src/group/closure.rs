use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use super::GroupLaw;

/// Breadth-first closure of `generators` under right multiplication,
/// starting from `identity`. Elements are returned in discovery order.
pub(crate) fn closure_bfs<T, F>(generators: &[T], identity: T, mul: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        order.push(x);
    }
    order
}

/// The subgroup generated by `generators`, sorted. In a finite group closing
/// under products also closes under inverses, since `x⁻¹ = x^(ord x - 1)`.
pub fn subgroup_closure<L>(law: &L, generators: &[L::Elem]) -> Vec<L::Elem>
where
    L: GroupLaw,
    L::Elem: Ord + Hash,
{
    let mut elems = closure_bfs(generators, law.identity(), |a, b| law.mul(a, b));
    elems.sort();
    elems
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{d_vector, make_builtin, FiniteGroup, TupleGroup, WreathGroup};

    #[test]
    fn empty_generating_set_gives_identity() {
        let g = make_builtin("c4").unwrap();
        assert_eq!(subgroup_closure(&g, &[]), vec![0]);
    }

    #[test]
    fn d3_klein_has_order_16() {
        let g = make_builtin("klein").unwrap();
        let n = 3;
        let mut gens = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    for a in g.elements() {
                        gens.push(d_vector(&g, n, i, j, a).unwrap());
                    }
                }
            }
        }
        let law = TupleGroup::new(&g, n);
        assert_eq!(subgroup_closure(&law, &gens).len(), 16);
    }

    #[test]
    fn closure_inside_wreath_product() {
        let g = FiniteGroup::cyclic(2);
        let w = WreathGroup::new(&g, 3);
        let mut gens = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    gens.extend(g.elements().map(|a| w.transposition_image(i, j, a)));
                }
            }
        }
        assert_eq!(subgroup_closure(&w, &gens).len(), 24);
    }
}
