use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::perm::Permutation;

/// Largest order for which associativity is checked on every triple.
const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
const MAX_TABLE_ORDER: usize = 10_000;

/// A finite group stored as its multiplication table. Element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("abelian", &self.is_abelian())
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major `order × order` table, validating the
    /// identity position, the Latin-square property and associativity.
    pub fn from_table(order: usize, table: Vec<u32>, names: Option<Vec<String>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("order must be positive".into()));
        }
        if order > MAX_TABLE_ORDER {
            return Err(Error::NotAGroup(format!("order {order} exceeds {MAX_TABLE_ORDER}")));
        }
        if table.len() != order * order {
            return Err(Error::NotAGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(names) = &names {
            if names.len() != order {
                return Err(Error::NotAGroup(format!(
                    "{} names given for {order} elements",
                    names.len()
                )));
            }
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::IdentityNotZero);
            }
        }
        let mut seen = vec![0usize; order];
        for r in 0..order {
            for c in 0..order {
                let v = table[r * order + c] as usize;
                if seen[v] == r * 2 + 1 {
                    return Err(Error::NotAGroup(format!("row {r} repeats element {v}")));
                }
                seen[v] = r * 2 + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for c in 0..order {
            for r in 0..order {
                let v = table[r * order + c] as usize;
                if seen[v] == c * 2 + 1 {
                    return Err(Error::NotAGroup(format!("column {c} repeats element {v}")));
                }
                seen[v] = c * 2 + 1;
            }
        }
        let mut inverses = vec![0u32; order];
        for x in 0..order {
            inverses[x] = (0..order)
                .find(|&y| table[x * order + y] == 0)
                .expect("Latin square row contains the identity") as u32;
        }
        let group = FiniteGroup { order, table, inverses, names };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::NotAGroup(format!("associativity fails on ({a}, {b}, {c})")))
            } else {
                Ok(())
            }
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..10 * n * n {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Closes a set of permutations and returns the group they generate,
    /// with elements ordered by breadth-first discovery (identity first).
    pub fn from_permutations(generators: &[Permutation]) -> Result<Self> {
        let degree = generators.first().map_or(0, |g| g.degree());
        let identity = Permutation::identity(degree);
        let elements = crate::group::closure::closure_bfs(generators, identity, |a, b| a.then(b));
        let index: std::collections::HashMap<&Permutation, u32> =
            elements.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.then(b)]);
            }
        }
        FiniteGroup::from_table(order, table, None)
    }

    pub fn cyclic(m: usize) -> Self {
        let table = (0..m * m).map(|k| ((k / m + k % m) % m) as u32).collect();
        FiniteGroup::from_table(m, table, None).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Direct product; the pair `(a, b)` is element `a * |right| + b`.
    pub fn direct_product(&self, right: &FiniteGroup) -> FiniteGroup {
        let (m, k) = (self.order, right.order);
        let order = m * k;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let a = self.mul(x / k, y / k);
                let b = right.mul(x % k, y % k);
                table.push((a * k + b) as u32);
            }
        }
        FiniteGroup { order, table, inverses: Vec::new(), names: None }.with_inverses()
    }

    fn with_inverses(mut self) -> Self {
        let n = self.order;
        self.inverses = (0..n)
            .map(|x| (0..n).find(|&y| self.table[x * n + y] == 0).unwrap() as u32)
            .collect();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `a^b = b⁻¹ a b`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label: the stored name if any, otherwise `e` / `g<k>`.
    pub fn label(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None if a == 0 => "e".to_string(),
            None => format!("g{a}"),
        }
    }

    /// Resolves a label produced by [`FiniteGroup::label`] or a stored name.
    pub fn parse_label(&self, s: &str) -> Option<usize> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == s) {
                return Some(i);
            }
        }
        if s == "e" {
            return Some(0);
        }
        s.strip_prefix('g')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k < self.order)
    }

    pub fn table_row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }
}

/// Names accepted by [`make_builtin`], besides `AxB` products of them.
pub const BUILTIN_NAMES: &[&str] = &[
    "trivial", "c2", "c3", "c4", "c6", "klein", "c4xc2", "c2cubed", "s3", "d4", "q8", "a4",
];

/// Constructs one of the builtin groups. `AxB` (e.g. `c3xs3`) denotes a direct product.
pub fn make_builtin(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    match name {
        "trivial" | "c1" => Ok(FiniteGroup::trivial()),
        "c2" => Ok(FiniteGroup::cyclic(2)),
        "c3" => Ok(FiniteGroup::cyclic(3)),
        "c4" => Ok(FiniteGroup::cyclic(4)),
        "c6" => Ok(FiniteGroup::cyclic(6)),
        "klein" => Ok(FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))),
        "c2cubed" => Ok(make_builtin("c2xc2xc2")?),
        "s3" => FiniteGroup::from_permutations(&[
            Permutation::from_cycle(3, &[0, 1]),
            Permutation::from_cycle(3, &[0, 1, 2]),
        ]),
        "d4" => FiniteGroup::from_permutations(&[
            Permutation::from_cycle(4, &[0, 1, 2, 3]),
            Permutation::from_cycle(4, &[1, 3]),
        ]),
        "a4" => FiniteGroup::from_permutations(&[
            Permutation::from_cycle(4, &[0, 1, 2]),
            Permutation::from_cycle(4, &[1, 2, 3]),
        ]),
        "q8" => Ok(quaternion()),
        _ if name.contains('x') => {
            let mut parts = name.split('x');
            let first = parts.next().unwrap_or_default();
            let mut group = make_builtin(first)?;
            for part in parts {
                group = group.direct_product(&make_builtin(part)?);
            }
            Ok(group)
        }
        _ => Err(Error::UnknownGroup(name.to_string())),
    }
}

/// Q8 as ±{1, i, j, k}; element `2u + s` is the unit `u` with sign `(-1)^s`.
fn quaternion() -> FiniteGroup {
    // unit products: (sign, unit) for 1, i, j, k
    const UNIT: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8u32 {
        for y in 0..8u32 {
            let (s, u) = UNIT[(x / 2) as usize][(y / 2) as usize];
            let sign = (s + x % 2 + y % 2) % 2;
            table.push(2 * u + sign);
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
    FiniteGroup::from_table(8, table, Some(names.iter().map(|s| s.to_string()).collect()))
        .expect("quaternion table is a group")
}

/// Parses the multiplication-table text format: the order on the first line,
/// one row per following line, and an optional trailing `names:` line.
pub fn parse_multiplication_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let order: usize = first.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        msg: format!("expected the group order, got `{}`", first.trim()),
    })?;
    if order == 0 || order > MAX_TABLE_ORDER {
        return Err(Error::Parse { line: 1, msg: format!("order {order} out of range") });
    }
    let mut table = Vec::with_capacity(order * order);
    for row in 0..order {
        let (ln, line) = lines.next().ok_or(Error::Parse {
            line: row + 2,
            msg: format!("missing row {row}"),
        })?;
        let before = table.len();
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                line: ln + 1,
                msg: format!("bad entry `{tok}`"),
            })?;
            table.push(v);
        }
        if table.len() - before != order {
            return Err(Error::Parse {
                line: ln + 1,
                msg: format!("expected {order} entries, found {}", table.len() - before),
            });
        }
    }
    let mut names = None;
    if let Some((ln, line)) = lines.next() {
        let rest = line.trim().strip_prefix("names:").ok_or(Error::Parse {
            line: ln + 1,
            msg: "unexpected trailing content".into(),
        })?;
        let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if list.len() != order {
            return Err(Error::Parse {
                line: ln + 1,
                msg: format!("expected {order} names, found {}", list.len()),
            });
        }
        names = Some(list);
        if let Some((ln, _)) = lines.next() {
            return Err(Error::Parse { line: ln + 1, msg: "content after names line".into() });
        }
    }
    FiniteGroup::from_table(order, table, names)
}

/// Writes a group in the text format read by [`parse_multiplication_table`].
pub fn format_multiplication_table(group: &FiniteGroup) -> String {
    let mut out = format!("{}\n", group.order());
    for a in group.elements() {
        let row: Vec<String> = group.table_row(a).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(names) = group.names() {
        out.push_str("names: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}
