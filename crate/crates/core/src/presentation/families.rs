use super::{Builder, Family, GeneratorSymbol as Sym, Presentation};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation, Tuple};

/// Default bound on `|G|ⁿ · n!` for the amalgam presentation.
pub const AMALGAM_SIZE_CAP: u128 = 100_000;

/// Largest parameter group accepted by [`exterior_square_presentation`].
pub const EXTERIOR_SQUARE_MAX_ORDER: usize = 64;

fn require_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::NTooSmall { n, min })
    } else {
        Ok(())
    }
}

/// Ordered pairs `(i, j)`, `i ≠ j`, 1-based.
fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

/// Ordered triples of distinct indices, 1-based.
fn distinct_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    ordered_pairs(n).flat_map(move |(i, j)| (1..=n).filter(move |&k| k != i && k != j).map(move |k| (i, j, k)))
}

/// Ordered quadruples of distinct indices, 1-based.
fn distinct_quadruples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    distinct_triples(n).flat_map(move |(i, j, k)| {
        (1..=n).filter(move |&l| l != i && l != j && l != k).map(move |l| (i, j, k, l))
    })
}

/// The Coxeter-like presentation: `s_i(a)² = 1`,
/// `s_i(a) s_{i+1}(b) s_i(c) = s_{i+1}(a⁻¹cb) s_i(a) s_{i+1}(b)` and
/// `s_i(a) s_j(b) = s_j(b) s_i(a)` for `|i - j| ≥ 2`.
pub fn coxeter_presentation(n: usize, g: &FiniteGroup) -> Result<Presentation> {
    require_n(n, 2)?;
    let s = |i: usize, a: usize| Sym::Coxeter { i, label: a };
    let gens = (1..n).flat_map(|i| g.elements().map(move |a| s(i, a))).collect();
    let mut b = Builder::new(gens, Family::Coxeter, n, Some(g.clone()));
    for i in 1..n {
        for a in g.elements() {
            b.relator(&[(&s(i, a), false), (&s(i, a), false)]);
        }
    }
    for i in 1..n.saturating_sub(1) {
        for a in g.elements() {
            for bb in g.elements() {
                for c in g.elements() {
                    let rhs = g.mul(g.mul(g.inv(a), c), bb);
                    b.relator(&[
                        (&s(i, a), false),
                        (&s(i + 1, bb), false),
                        (&s(i, c), false),
                        (&s(i + 1, bb), true),
                        (&s(i, a), true),
                        (&s(i + 1, rhs), true),
                    ]);
                }
            }
        }
    }
    for i in 1..n {
        for j in (i + 2)..n {
            for a in g.elements() {
                for bb in g.elements() {
                    b.relator(&[(&s(i, a), false), (&s(j, bb), false), (&s(i, a), true), (&s(j, bb), true)]);
                }
            }
        }
    }
    Ok(b.finish())
}

/// Generators `(ij)_a` with the relations
/// `(ij)_a² = 1`, `(ij)_a^{(jk)_b} = (ik)_{ab}`, `[(ij)_a, (kl)_b] = 1`, `(ij)_a = (ji)_{a⁻¹}`.
pub fn transposition_presentation(n: usize, g: &FiniteGroup) -> Result<Presentation> {
    require_n(n, 3)?;
    let t = |i: usize, j: usize, a: usize| Sym::Transposition { i, j, label: a };
    let gens = ordered_pairs(n).flat_map(|(i, j)| g.elements().map(move |a| t(i, j, a))).collect();
    let mut b = Builder::new(gens, Family::Transposition, n, Some(g.clone()));
    for (i, j) in ordered_pairs(n) {
        for a in g.elements() {
            b.relator(&[(&t(i, j, a), false), (&t(i, j, a), false)]);
        }
    }
    for (i, j, k) in distinct_triples(n) {
        for a in g.elements() {
            for bb in g.elements() {
                b.relator(&[
                    (&t(j, k, bb), true),
                    (&t(i, j, a), false),
                    (&t(j, k, bb), false),
                    (&t(i, k, g.mul(a, bb)), true),
                ]);
            }
        }
    }
    for (i, j, k, l) in distinct_quadruples(n) {
        for a in g.elements() {
            for bb in g.elements() {
                b.relator(&[
                    (&t(i, j, a), true),
                    (&t(k, l, bb), true),
                    (&t(i, j, a), false),
                    (&t(k, l, bb), false),
                ]);
            }
        }
    }
    for (i, j) in ordered_pairs(n) {
        for a in g.elements() {
            b.relator(&[(&t(i, j, a), false), (&t(j, i, g.inv(a)), true)]);
        }
    }
    Ok(b.finish())
}

/// The intermediate groups between the Coxeter-like and the transposition
/// presentations: generators `(ij)_a` for `i < j ≤ i + t`.
pub fn interpolating_presentation(n: usize, t: usize, g: &FiniteGroup) -> Result<Presentation> {
    require_n(n, 3)?;
    if t == 0 || t >= n {
        return Err(Error::TOutOfRange { t, max: n - 1 });
    }
    let x = |i: usize, j: usize, a: usize| Sym::Transposition { i, j, label: a };
    let defined = |i: usize, j: usize| i < j && j - i <= t;
    let gens = (1..=n)
        .flat_map(|i| (i + 1..=n.min(i + t)).flat_map(move |j| g.elements().map(move |a| x(i, j, a))))
        .collect();
    let mut b = Builder::new(gens, Family::Interpolating { t }, n, Some(g.clone()));
    let increasing_triples = || {
        (1..=n).flat_map(move |i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
    };
    // (ij)_a² = 1
    for i in 1..=n {
        for j in i + 1..=n {
            if defined(i, j) {
                for a in g.elements() {
                    b.relator(&[(&x(i, j, a), false), (&x(i, j, a), false)]);
                }
            }
        }
    }
    // (ij)_a^{(jk)_b} = (jk)_{b'}^{(ij)_{a'}} whenever ab = a'b'
    for (i, j, k) in increasing_triples() {
        if !(defined(i, j) && defined(j, k)) {
            continue;
        }
        for a in g.elements() {
            for bb in g.elements() {
                for a2 in g.elements() {
                    let b2 = g.mul(g.inv(a2), g.mul(a, bb));
                    b.relator(&[
                        (&x(j, k, bb), true),
                        (&x(i, j, a), false),
                        (&x(j, k, bb), false),
                        (&x(i, j, a2), true),
                        (&x(j, k, b2), true),
                        (&x(i, j, a2), false),
                    ]);
                }
            }
        }
    }
    // (ij)_a (kl)_b = (kl)_b (ij)_a for disjoint defined pairs
    for (i, j, k, l) in distinct_quadruples(n) {
        if !(defined(i, j) && defined(k, l)) {
            continue;
        }
        for a in g.elements() {
            for bb in g.elements() {
                b.relator(&[
                    (&x(i, j, a), true),
                    (&x(k, l, bb), true),
                    (&x(i, j, a), false),
                    (&x(k, l, bb), false),
                ]);
            }
        }
    }
    // (ij)_a^{(jk)_b} = (ik)_{ab}
    for (i, j, k) in increasing_triples() {
        if !(defined(i, j) && defined(j, k) && defined(i, k)) {
            continue;
        }
        for a in g.elements() {
            for bb in g.elements() {
                b.relator(&[
                    (&x(j, k, bb), true),
                    (&x(i, j, a), false),
                    (&x(j, k, bb), false),
                    (&x(i, k, g.mul(a, bb)), true),
                ]);
            }
        }
    }
    Ok(b.finish())
}

fn push_reflection_relators(b: &mut Builder, n: usize, r: &dyn Fn(usize, usize) -> Sym) {
    for (i, j) in ordered_pairs(n) {
        b.relator(&[(&r(i, j), false), (&r(i, j), false)]);
    }
    for (i, j, k) in distinct_triples(n) {
        b.relator(&[(&r(j, k), true), (&r(i, j), false), (&r(j, k), false), (&r(i, k), true)]);
    }
    for (i, j, k, l) in distinct_quadruples(n) {
        b.relator(&[(&r(i, j), true), (&r(k, l), true), (&r(i, j), false), (&r(k, l), false)]);
    }
    for (i, j) in ordered_pairs(n) {
        b.relator(&[(&r(i, j), false), (&r(j, i), true)]);
    }
}

/// `S_n` on all reflections `(ij)`, `i ≠ j`.
pub fn reflection_presentation_sn(n: usize) -> Result<Presentation> {
    require_n(n, 3)?;
    let r = |i: usize, j: usize| Sym::Reflection { i, j };
    let gens = ordered_pairs(n).map(|(i, j)| r(i, j)).collect();
    let mut b = Builder::new(gens, Family::Reflection, n, None);
    push_reflection_relators(&mut b, n, &r);
    Ok(b.finish())
}

/// The free product of copies `S_n^{(g)}`, `g ∈ Gⁿ`, modulo `s_g = s_h`
/// whenever `s` fixes `h g⁻¹`. Each `s` is written through a fixed
/// transposition factorization.
pub fn amalgam_presentation(n: usize, g: &FiniteGroup, size_cap: u128) -> Result<Presentation> {
    require_n(n, 2)?;
    let size = (g.order() as u128).pow(n as u32) * crate::group::factorial(n);
    if size > size_cap {
        return Err(Error::SizeCapExceeded { size, cap: size_cap });
    }
    let copies = Tuple::all(g, n);
    let c = |i: usize, j: usize, copy: &Tuple| Sym::Copy { i, j, copy: copy.clone() };
    let gens = copies
        .iter()
        .flat_map(|copy| ordered_pairs(n).map(move |(i, j)| c(i, j, copy)))
        .collect();
    let mut b = Builder::new(gens, Family::Amalgam, n, Some(g.clone()));
    for copy in &copies {
        push_reflection_relators(&mut b, n, &|i, j| c(i, j, copy));
    }
    for s in Permutation::all(n) {
        let factors = s.transposition_factorization();
        if factors.is_empty() {
            continue;
        }
        for x in &copies {
            let x_inv = x.inv(g);
            for y in &copies {
                if x == y || !y.mul(g, &x_inv).is_fixed_by(&s) {
                    continue;
                }
                let mut letters = Vec::with_capacity(2 * factors.len());
                for &(p, q) in &factors {
                    letters.push((c(p + 1, q + 1, x), false));
                }
                for &(p, q) in factors.iter().rev() {
                    letters.push((c(p + 1, q + 1, y), true));
                }
                let refs: Vec<(&Sym, bool)> = letters.iter().map(|(s, i)| (s, *i)).collect();
                b.relator(&refs);
            }
        }
    }
    Ok(b.finish())
}

/// Relator families on the generators `h_{ij}(a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HRelation {
    /// `h_{ij}(1) = 1`
    R0,
    /// `h_{ij}(a) h_{ji}(a) = 1`
    R1,
    /// `h_{jk}(b) h_{ik}(a) h_{ij}(b) = h_{ik}(ab)`
    R2,
    /// `[h_{ij}(a), h_{kl}(b)] = 1`
    R3,
    /// `h_{ij}(a)⁻¹ = h_{ij}(a⁻¹)`
    R4,
    /// `h_{ij}(u) h_{ji}(u) = 1`
    H1,
    /// `h_{ij}(u) h_{ki}(u) h_{jk}(u) = 1`
    H2,
    /// `h_{ij}(u) h_{ik}(v) h_{ij}(u)⁻¹ = h_{ik}(uv) h_{ik}(u)⁻¹`, `j ≠ k`
    H3,
    /// `h_{ij}(u) h_{kj}(v) h_{ij}(u)⁻¹ = h_{kj}(vu) h_{kj}(u)⁻¹`, `i ≠ k`
    H4,
    /// `[h_{ij}(u), h_{kl}(v)] = 1`
    H5,
}

impl HRelation {
    pub const R: [HRelation; 5] = [HRelation::R0, HRelation::R1, HRelation::R2, HRelation::R3, HRelation::R4];
    pub const H: [HRelation; 5] = [HRelation::H1, HRelation::H2, HRelation::H3, HRelation::H4, HRelation::H5];
}

/// Generators `h_{ij}(a)` for all ordered pairs and all `a`, with the
/// requested relator families (in the order given).
pub fn h_presentation(n: usize, g: &FiniteGroup, families: &[HRelation]) -> Result<Presentation> {
    require_n(n, 3)?;
    let h = |i: usize, j: usize, a: usize| Sym::H { i, j, label: a };
    let gens = ordered_pairs(n).flat_map(|(i, j)| g.elements().map(move |a| h(i, j, a))).collect();
    let mut b = Builder::new(gens, Family::H(families.to_vec()), n, Some(g.clone()));
    let elems = || g.elements();
    for &fam in families {
        match fam {
            HRelation::R0 => {
                for (i, j) in ordered_pairs(n) {
                    b.relator(&[(&h(i, j, 0), false)]);
                }
            }
            HRelation::R1 | HRelation::H1 => {
                for (i, j) in ordered_pairs(n) {
                    for a in elems() {
                        b.relator(&[(&h(i, j, a), false), (&h(j, i, a), false)]);
                    }
                }
            }
            HRelation::R2 => {
                for (i, j, k) in distinct_triples(n) {
                    for a in elems() {
                        for bb in elems() {
                            b.relator(&[
                                (&h(j, k, bb), false),
                                (&h(i, k, a), false),
                                (&h(i, j, bb), false),
                                (&h(i, k, g.mul(a, bb)), true),
                            ]);
                        }
                    }
                }
            }
            HRelation::R3 | HRelation::H5 => {
                for (i, j, k, l) in distinct_quadruples(n) {
                    for a in elems() {
                        for bb in elems() {
                            b.relator(&[
                                (&h(i, j, a), true),
                                (&h(k, l, bb), true),
                                (&h(i, j, a), false),
                                (&h(k, l, bb), false),
                            ]);
                        }
                    }
                }
            }
            HRelation::R4 => {
                for (i, j) in ordered_pairs(n) {
                    for a in elems() {
                        b.relator(&[(&h(i, j, a), false), (&h(i, j, g.inv(a)), false)]);
                    }
                }
            }
            HRelation::H2 => {
                for (i, j, k) in distinct_triples(n) {
                    for u in elems() {
                        b.relator(&[(&h(i, j, u), false), (&h(k, i, u), false), (&h(j, k, u), false)]);
                    }
                }
            }
            HRelation::H3 => {
                for (i, j, k) in distinct_triples(n) {
                    for u in elems() {
                        for v in elems() {
                            b.relator(&[
                                (&h(i, j, u), false),
                                (&h(i, k, v), false),
                                (&h(i, j, u), true),
                                (&h(i, k, u), false),
                                (&h(i, k, g.mul(u, v)), true),
                            ]);
                        }
                    }
                }
            }
            HRelation::H4 => {
                for (i, j, k) in distinct_triples(n) {
                    for u in elems() {
                        for v in elems() {
                            b.relator(&[
                                (&h(i, j, u), false),
                                (&h(k, j, v), false),
                                (&h(i, j, u), true),
                                (&h(k, j, u), false),
                                (&h(k, j, g.mul(v, u)), true),
                            ]);
                        }
                    }
                }
            }
        }
    }
    Ok(b.finish())
}

/// `HS_n(G)`: relations R0–R4.
pub fn hs_presentation(n: usize, g: &FiniteGroup) -> Result<Presentation> {
    h_presentation(n, g, &HRelation::R)
}

/// `H_n(G)` with the requested subset of H1–H5. Non-H entries are ignored.
pub fn hn_presentation(n: usize, g: &FiniteGroup, include: &[HRelation]) -> Result<Presentation> {
    let fams: Vec<HRelation> = HRelation::H.iter().copied().filter(|r| include.contains(r)).collect();
    h_presentation(n, g, &fams)
}

/// The nonabelian exterior square `G ∧ G` on generators `w(g, h)` with
/// `w(g, g) = 1`, `w(gg', h) = w(g^{g'}, h^{g'}) w(g', h)` and
/// `w(g, hh') = w(g, h') w(g^{h'}, h^{h'})`, where `x^y = y⁻¹xy`.
pub fn exterior_square_presentation(g: &FiniteGroup) -> Result<Presentation> {
    if g.order() > EXTERIOR_SQUARE_MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            size: g.order() as u128,
            cap: EXTERIOR_SQUARE_MAX_ORDER as u128,
        });
    }
    let w = |x: usize, y: usize| Sym::Wedge { left: x, right: y };
    let gens = g.elements().flat_map(|x| g.elements().map(move |y| w(x, y))).collect();
    let mut b = Builder::new(gens, Family::ExteriorSquare, 0, Some(g.clone()));
    for x in g.elements() {
        b.relator(&[(&w(x, x), false)]);
    }
    for x in g.elements() {
        for x2 in g.elements() {
            for y in g.elements() {
                b.relator(&[
                    (&w(g.mul(x, x2), y), false),
                    (&w(x2, y), true),
                    (&w(g.conj(x, x2), g.conj(y, x2)), true),
                ]);
            }
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            for y2 in g.elements() {
                b.relator(&[
                    (&w(x, g.mul(y, y2)), false),
                    (&w(g.conj(x, y2), g.conj(y, y2)), true),
                    (&w(x, y2), true),
                ]);
            }
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_builtin;

    #[test]
    fn coxeter_relator_count() {
        // (n-1)|G| squares + (n-2)|G|³ braid relators + no commuting pairs at n = 3
        let p = coxeter_presentation(3, &FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(p.generator_count(), 4);
        assert_eq!(p.relators().len(), 2 * 2 + 8);
        // n = 4 adds the commuting pair (1, 3): |G|² relators
        let p = coxeter_presentation(4, &FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(p.relators().len(), 3 * 2 + 2 * 8 + 4);
    }

    #[test]
    fn coxeter_n2_has_only_squares() {
        let p = coxeter_presentation(2, &FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(
            p.generators(),
            &[Sym::Coxeter { i: 1, label: 0 }, Sym::Coxeter { i: 1, label: 1 }]
        );
        assert_eq!(p.relators().len(), 2);
        assert!(p.relators().iter().all(|r| r.len() == 2));
        assert!(matches!(coxeter_presentation(1, &FiniteGroup::cyclic(2)), Err(Error::NTooSmall { .. })));
    }

    #[test]
    fn small_n_is_rejected() {
        let g = FiniteGroup::cyclic(2);
        assert!(transposition_presentation(2, &g).is_err());
        assert!(reflection_presentation_sn(2).is_err());
        assert!(hs_presentation(2, &g).is_err());
        assert!(matches!(interpolating_presentation(3, 3, &g), Err(Error::TOutOfRange { .. })));
        assert!(matches!(interpolating_presentation(3, 0, &g), Err(Error::TOutOfRange { .. })));
    }

    #[test]
    fn interpolating_generators() {
        let g = FiniteGroup::cyclic(2);
        assert_eq!(interpolating_presentation(4, 1, &g).unwrap().generator_count(), 3 * 2);
        assert_eq!(interpolating_presentation(4, 2, &g).unwrap().generator_count(), 5 * 2);
        assert_eq!(interpolating_presentation(4, 3, &g).unwrap().generator_count(), 6 * 2);
    }

    #[test]
    fn amalgam_identification_count() {
        // For each s ≠ 1 there are |G|ⁿ·|Fix(s)| ordered pairs (g, h) with s fixing hg⁻¹;
        // dropping g = h and keeping one of each inverse pair leaves
        // |G|ⁿ(|Fix(s)| - 1)/2 identification relators.
        let g = FiniteGroup::cyclic(2);
        let n = 3;
        let copies = Tuple::all(&g, n);
        let mut pairs_total = 0;
        let mut expected = 0;
        for s in Permutation::all(n) {
            if s.is_identity() {
                continue;
            }
            let fixed = copies.iter().filter(|t| t.is_fixed_by(&s)).count();
            let pairs = copies
                .iter()
                .flat_map(|x| copies.iter().map(move |y| (x, y)))
                .filter(|(x, y)| y.mul(&g, &x.inv(&g)).is_fixed_by(&s))
                .count();
            assert_eq!(pairs, copies.len() * fixed);
            pairs_total += pairs;
            expected += copies.len() * (fixed - 1) / 2;
        }
        assert_eq!(pairs_total, 8 * (3 * 4 + 2 * 2));
        let per_copy = reflection_presentation_sn(n).unwrap().relators().len();
        let p = amalgam_presentation(n, &g, AMALGAM_SIZE_CAP).unwrap();
        assert_eq!(p.relators().len(), copies.len() * per_copy + expected);
    }

    #[test]
    fn amalgam_respects_size_cap() {
        let g = make_builtin("klein").unwrap();
        assert!(matches!(amalgam_presentation(3, &g, 100), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn builders_are_deterministic() {
        let g = make_builtin("s3").unwrap();
        let a = transposition_presentation(3, &g).unwrap().dump();
        let b = transposition_presentation(3, &g).unwrap().dump();
        assert_eq!(a, b);
        let a = h_presentation(3, &g, &HRelation::H).unwrap().dump();
        let b = hn_presentation(3, &g, &HRelation::H).unwrap().dump();
        assert_eq!(a, b);
    }

    #[test]
    fn generators_are_sorted() {
        let g = make_builtin("c3").unwrap();
        for p in [
            transposition_presentation(3, &g).unwrap(),
            coxeter_presentation(3, &g).unwrap(),
            hs_presentation(4, &g).unwrap(),
            amalgam_presentation(3, &g, AMALGAM_SIZE_CAP).unwrap(),
        ] {
            assert!(p.generators().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn hn_subset_omits_h3() {
        let g = FiniteGroup::cyclic(2);
        let full = hn_presentation(3, &g, &HRelation::H).unwrap();
        let partial =
            hn_presentation(3, &g, &[HRelation::H1, HRelation::H2, HRelation::H4, HRelation::H5]).unwrap();
        assert!(partial.relators().len() < full.relators().len());
        assert_eq!(
            partial.family(),
            &Family::H(vec![HRelation::H1, HRelation::H2, HRelation::H4, HRelation::H5])
        );
    }
}
