use std::collections::{HashSet, VecDeque};

use super::CheckOutcome;
use crate::enumeration::RegularGroup;
use crate::error::{Error, Result};
use crate::group::{
    abelian_invariants_of_subgroup, d_vector, subgroup_closure, AbelianInvariants, FiniteGroup, GroupLaw, Permutation,
    WreathElement, WreathGroup,
};
use crate::presentation::{transposition_presentation, GeneratorSymbol, Presentation, Word};

/// `μ` on a single generator symbol.
///
/// * `(ij)_a ↦ (d_{ij}(a), (ij))`
/// * `s_i(a) ↦ μ((i, i+1)_a)`
/// * `(ij)^{(g)} ↦ (ij)^g = (g⁻¹ g^{(ij)}, (ij))`
/// * `h_{ij}(a) ↦ (d_{ij}(a), 1)`
/// * `(ij) ↦ (1, (ij))`
pub fn mu_of_generator(sym: &GeneratorSymbol, n: usize, g: &FiniteGroup) -> Result<WreathElement> {
    let w = WreathGroup::new(g, n);
    let check = |i: usize, j: usize| {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            Err(Error::IndexOutOfRange(format!("({i},{j}) with n = {n}")))
        } else {
            Ok(())
        }
    };
    match sym {
        GeneratorSymbol::Transposition { i, j, label } => {
            check(*i, *j)?;
            d_vector(g, n, *i, *j, *label)?;
            Ok(w.transposition_image(i - 1, j - 1, *label))
        }
        GeneratorSymbol::Coxeter { i, label } => {
            mu_of_generator(&GeneratorSymbol::Transposition { i: *i, j: i + 1, label: *label }, n, g)
        }
        GeneratorSymbol::Copy { i, j, copy } => {
            check(*i, *j)?;
            if copy.len() != n {
                return Err(Error::DegreeMismatch(copy.len(), n));
            }
            Ok(w.conjugate_perm_by_vector(&Permutation::transposition(n, i - 1, j - 1), copy))
        }
        GeneratorSymbol::H { i, j, label } => Ok(w.from_vector(d_vector(g, n, *i, *j, *label)?)),
        GeneratorSymbol::Reflection { i, j } => {
            check(*i, *j)?;
            Ok(w.from_perm(Permutation::transposition(n, i - 1, j - 1)))
        }
        other => Err(Error::UnsupportedSymbol(other.display(Some(g)))),
    }
}

/// `μ` on every generator of `p`.
pub fn mu_images(p: &Presentation, n: usize, g: &FiniteGroup) -> Result<Vec<WreathElement>> {
    p.generators().iter().map(|s| mu_of_generator(s, n, g)).collect()
}

/// Images of the generators of one presentation as words over another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMap {
    pub images: Vec<Word>,
}

impl GenMap {
    /// Builds the map generator by generator; `f` returns the image as
    /// `(symbol, inverse?)` letters over `target`.
    pub fn from_fn<F>(source: &Presentation, target: &Presentation, f: F) -> Result<GenMap>
    where
        F: Fn(&GeneratorSymbol) -> Vec<(GeneratorSymbol, bool)>,
    {
        let mut images = Vec::with_capacity(source.generator_count());
        for sym in source.generators() {
            let mut letters = Vec::new();
            for (s, inv) in f(sym) {
                let k = target
                    .index_of(&s)
                    .ok_or_else(|| Error::InvalidSymbol(s.display(target.group())))?;
                letters.push(crate::presentation::Letter::new(k, inv));
            }
            images.push(Word(letters));
        }
        Ok(GenMap { images })
    }

    /// Generator `k` to generator `k`, for presentations on the same alphabet.
    pub fn identity(p: &Presentation) -> GenMap {
        GenMap { images: (0..p.generator_count()).map(Word::gen).collect() }
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }
}

/// The product of generator images along `w`.
pub fn evaluate_in<L: GroupLaw>(law: &L, images: &[L::Elem], w: &Word) -> L::Elem {
    w.letters().iter().fold(law.identity(), |acc, l| {
        let x = &images[l.gen as usize];
        if l.inverse {
            law.mul(&acc, &law.inv(x))
        } else {
            law.mul(&acc, x)
        }
    })
}

/// Checks that sending generator `k` to `images[k]` kills every relator.
pub fn verify_homomorphism<L: GroupLaw>(p: &Presentation, law: &L, images: &[L::Elem]) -> CheckOutcome {
    let id = law.identity();
    for (k, r) in p.relators().iter().enumerate() {
        if evaluate_in(law, images, r) != id {
            return CheckOutcome::fail(k + 1, format!("relator {k}: {}", p.display_word(r)));
        }
    }
    CheckOutcome::pass(p.relators().len())
}

/// Image of every element of `r` under the homomorphism given on
/// generators, found by walking the Cayley graph. Fails if two paths to the
/// same element disagree, i.e. the map is not well defined.
pub fn images_of_elements<L>(r: &RegularGroup, law: &L, generator_images: &[L::Elem]) -> Result<Vec<L::Elem>>
where
    L: GroupLaw,
{
    let mut images: Vec<Option<L::Elem>> = vec![None; r.order()];
    images[0] = Some(law.identity());
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let x = images[c].clone().expect("visited");
        for (k, gk) in generator_images.iter().enumerate() {
            let d = r.mul_letter(c, crate::presentation::Letter::pos(k));
            let y = law.mul(&x, gk);
            match &images[d] {
                Some(prev) if *prev != y => {
                    return Err(Error::NotAHomomorphism(format!("two paths to element {d} disagree")));
                }
                Some(_) => {}
                None => {
                    images[d] = Some(y);
                    queue.push_back(d);
                }
            }
        }
    }
    Ok(images.into_iter().map(|x| x.expect("Cayley graph is connected")).collect())
}

/// `|Im μ|`: the closure of the `μ`-images of all `(ij)_a` in `G ≀ S_n`,
/// computed directly in the wreath product.
pub fn image_subgroup_order(n: usize, g: &FiniteGroup) -> usize {
    let w = WreathGroup::new(g, n);
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for a in g.elements() {
                    gens.push(w.transposition_image(i, j, a));
                }
            }
        }
    }
    subgroup_closure(&w, &gens).len()
}

/// `S_n(G)` realized from the transposition presentation, with `μ`
/// evaluated on every element.
#[derive(Clone, Debug)]
pub struct MuData {
    pub presentation: Presentation,
    pub group: RegularGroup,
    /// `μ` of every element, indexed like `group`.
    pub images: Vec<WreathElement>,
    /// Elements with trivial image, sorted.
    pub kernel: Vec<usize>,
    pub kernel_invariants: AbelianInvariants,
    pub image_order: usize,
}

impl MuData {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Enumerates `S_n(G)` and computes `ker μ` with its abelian invariants.
pub fn kernel_of_mu(n: usize, g: &FiniteGroup, max_cosets: usize) -> Result<MuData> {
    let p = transposition_presentation(n, g)?;
    let r = RegularGroup::enumerate(&p, max_cosets)?;
    let w = WreathGroup::new(g, n);
    let gen_images = mu_images(&p, n, g)?;
    let images = images_of_elements(&r, &w, &gen_images)?;
    let kernel: Vec<usize> = (0..r.order()).filter(|&c| images[c].is_identity()).collect();
    let kernel_invariants = abelian_invariants_of_subgroup(&r, &kernel)?;
    let image_order = images.iter().collect::<HashSet<_>>().len();
    Ok(MuData { presentation: p, group: r, images, kernel, kernel_invariants, image_order })
}

/// Every element of `subset` commutes with every generator of `r`.
pub fn verify_central(r: &RegularGroup, subset: &[usize]) -> CheckOutcome {
    let gens = r.table().generator_count();
    for &k in subset {
        for x in 0..gens {
            let gx = r.generator(x);
            if r.mul(&k, &gx) != r.mul(&gx, &k) {
                return CheckOutcome::fail(subset.len() * gens, format!("element {k} vs generator {x}"));
            }
        }
    }
    CheckOutcome::pass(subset.len() * gens)
}

/// For a homomorphism `f: G → H` given on elements, the induced map
/// `S_n(G) → S_n(H)`, `(ij)_a ↦ (ij)_{f(a)}`, restricted to `ker μ`.
/// Returns the images of the kernel elements of the source inside the
/// target realization, or an error if `f` is not a homomorphism.
pub fn induced_kernel_map(source: &MuData, target: &MuData, f: &[usize]) -> Result<Vec<usize>> {
    let (gs, gt) = match (source.presentation.group(), target.presentation.group()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::UnsupportedSymbol("presentation without a parameter group".into())),
    };
    if f.len() != gs.order() || f.iter().any(|&x| x >= gt.order()) {
        return Err(Error::IndexOutOfRange("map does not fit the groups".into()));
    }
    for a in gs.elements() {
        for b in gs.elements() {
            if f[gs.mul(a, b)] != gt.mul(f[a], f[b]) {
                return Err(Error::NotAHomomorphism(format!("f({a}·{b}) != f({a})·f({b})")));
            }
        }
    }
    let gen_images: Vec<usize> = source
        .presentation
        .generators()
        .iter()
        .map(|s| match s {
            GeneratorSymbol::Transposition { i, j, label } => {
                let sym = GeneratorSymbol::Transposition { i: *i, j: *j, label: f[*label] };
                target.presentation.index_of(&sym).map(|k| target.group.generator(k))
            }
            _ => None,
        })
        .collect::<Option<_>>()
        .ok_or_else(|| Error::UnsupportedSymbol("non-transposition generator".into()))?;
    let all = images_of_elements(&source.group, &target.group, &gen_images)?;
    Ok(source.kernel.iter().map(|&k| all[k]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_MAX_COSETS;
    use crate::group::{make_builtin, Tuple};

    #[test]
    fn mu_examples() {
        let c2 = make_builtin("c2").unwrap();
        let e = mu_of_generator(&GeneratorSymbol::Transposition { i: 1, j: 2, label: 0 }, 3, &c2).unwrap();
        assert_eq!(e.vector, Tuple::identity(3));
        assert_eq!(e.perm, Permutation::transposition(3, 0, 1));
        let a = mu_of_generator(&GeneratorSymbol::Transposition { i: 1, j: 2, label: 1 }, 3, &c2).unwrap();
        assert_eq!(a.vector, Tuple(vec![1, 1, 0]));
        let c4 = make_builtin("c4").unwrap();
        let h = mu_of_generator(&GeneratorSymbol::H { i: 1, j: 3, label: 1 }, 3, &c4).unwrap();
        assert_eq!(h.vector, Tuple(vec![1, 0, 3]));
        assert!(h.perm.is_identity());
        assert!(mu_of_generator(&GeneratorSymbol::Wedge { left: 0, right: 1 }, 3, &c2).is_err());
    }

    #[test]
    fn copy_symbols_agree_with_transpositions() {
        // (ij)_a corresponds to the copy indexed by a[j]
        let g = make_builtin("s3").unwrap();
        for a in g.elements() {
            let t = mu_of_generator(&GeneratorSymbol::Transposition { i: 1, j: 3, label: a }, 3, &g).unwrap();
            let c = mu_of_generator(&GeneratorSymbol::Copy { i: 1, j: 3, copy: Tuple::single(3, 2, a) }, 3, &g)
                .unwrap();
            assert_eq!(t, c);
        }
    }

    #[test]
    fn mu_is_a_homomorphism() {
        for name in ["c2", "c3", "klein", "s3", "q8"] {
            let g = make_builtin(name).unwrap();
            for n in [3, 4] {
                let p = transposition_presentation(n, &g).unwrap();
                let w = WreathGroup::new(&g, n);
                let out = verify_homomorphism(&p, &w, &mu_images(&p, n, &g).unwrap());
                assert!(out.passed, "{name} n={n}: {:?}", out.witness);
            }
        }
    }

    /// The wreath law with the tuple action read the other way round.
    struct Flipped<'g>(WreathGroup<'g>);

    impl GroupLaw for Flipped<'_> {
        type Elem = WreathElement;
        fn identity(&self) -> WreathElement {
            self.0.identity()
        }
        fn mul(&self, x: &WreathElement, y: &WreathElement) -> WreathElement {
            let g = self.0.group;
            let moved = y.vector.act(&x.perm);
            WreathElement { vector: x.vector.mul(g, &moved), perm: x.perm.then(&y.perm) }
        }
        fn inv(&self, x: &WreathElement) -> WreathElement {
            // solve x · y = 1 by brute force over the small wreath product
            let n = self.0.n;
            for v in Tuple::all(self.0.group, n) {
                let y = WreathElement { vector: v, perm: x.perm.inverse() };
                if self.mul(x, &y).is_identity() {
                    return y;
                }
            }
            unreachable!("every element has a right inverse")
        }
    }

    #[test]
    fn flipped_convention_breaks_mu() {
        let g = make_builtin("c3").unwrap();
        let p = transposition_presentation(3, &g).unwrap();
        let flipped = Flipped(WreathGroup::new(&g, 3));
        let out = verify_homomorphism(&p, &flipped, &mu_images(&p, 3, &g).unwrap());
        assert!(!out.passed);
        assert!(out.witness.is_some());
    }

    #[test]
    fn trivial_map_is_a_homomorphism() {
        let g = make_builtin("klein").unwrap();
        let p = transposition_presentation(3, &g).unwrap();
        let images = vec![0usize; p.generator_count()];
        assert!(verify_homomorphism(&p, &FiniteGroup::trivial(), &images).passed);
    }

    #[test]
    fn image_orders() {
        for (name, expected) in [("c2", 24), ("klein", 96), ("s3", 648)] {
            assert_eq!(image_subgroup_order(3, &make_builtin(name).unwrap()), expected, "{name}");
        }
    }

    #[test]
    fn kernels() {
        let c2 = kernel_of_mu(3, &make_builtin("c2").unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(c2.kernel.len(), 1);
        assert!(c2.kernel_invariants.is_trivial());
        let klein = kernel_of_mu(3, &make_builtin("klein").unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(klein.kernel_invariants.factors(), &[2]);
        assert_eq!(klein.image_order, 96);
        assert!(verify_central(&klein.group, &klein.kernel).passed);
    }

    #[test]
    fn naturality_klein_into_c2cubed() {
        let klein = make_builtin("klein").unwrap();
        let cube = make_builtin("c2cubed").unwrap();
        // (a, b) ↦ (a, b, 0) in the coordinates of the direct products
        let f: Vec<usize> = klein.elements().map(|k| 2 * k).collect();
        let source = kernel_of_mu(3, &klein, DEFAULT_MAX_COSETS).unwrap();
        let target = kernel_of_mu(3, &cube, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(target.kernel_invariants.factors(), &[2, 2, 2]);
        let images = induced_kernel_map(&source, &target, &f).unwrap();
        assert!(images.iter().all(|x| target.kernel.binary_search(x).is_ok()));
        assert_eq!(images.iter().collect::<HashSet<_>>().len(), images.len());
    }
}
