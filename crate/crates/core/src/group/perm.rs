use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..n`, stored as its image list.
///
/// Products are read left to right: `p.then(q)` applies `p` first, so
/// `p.then(q).apply(i) == q.apply(p.apply(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidSymbol(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u32).collect() })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.iter().map(|&x| x as usize).collect()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// The transposition swapping `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` (0-based).
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for (k, &x) in cycle.iter().enumerate() {
            p.images[x] = cycle[(k + 1) % cycle.len()] as u32;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `t⁻¹ · self · t`.
    pub fn conjugate_by(&self, t: &Permutation) -> Permutation {
        t.inverse().then(self).then(t)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i == x as usize).count()
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// A fixed factorization into transpositions `(a, b)` with `a < b`:
    /// the product, read left to right, equals `self`.
    pub fn transposition_factorization(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for cycle in self.cycles() {
            // (c0 c1 ... ck) = (c0 c1)(c0 c2)...(c0 ck) when applied left to right
            for &x in &cycle[1..] {
                let (a, b) = (cycle[0].min(x), cycle[0].max(x));
                out.push((a, b));
            }
        }
        out
    }

    /// All permutations of `0..n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (0..n as u32).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for cycle in self.cycles() {
            let s: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}
