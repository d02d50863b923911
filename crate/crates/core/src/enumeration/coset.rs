//! Todd–Coxeter coset enumeration (HLT and Felsch strategies) with a
//! coincidence queue.

use crate::error::Result;
use crate::presentation::{Letter, Presentation, Word};

/// Default bound on the number of cosets held at once.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationStatus {
    Complete,
    CapacityExceeded,
}

/// A coset table. Cosets are numbered from 0; coset 0 is the subgroup
/// itself. Column `2k` holds the action of generator `k`, column `2k + 1`
/// that of its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generator_count: usize,
    coset_count: usize,
    table: Vec<u32>,
    status: EnumerationStatus,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.coset_count
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == EnumerationStatus::Complete
    }

    /// Image of `coset` under one letter, if defined.
    #[inline]
    pub fn image(&self, coset: usize, letter: Letter) -> Option<usize> {
        let v = self.table[coset * 2 * self.generator_count + letter.column()];
        (v != NONE).then_some(v as usize)
    }

    /// Follows `word` from `coset`; `None` if an entry is missing.
    pub fn trace(&self, coset: usize, word: &Word) -> Option<usize> {
        word.letters().iter().try_fold(coset, |c, &l| self.image(c, l))
    }

    /// One line per coset: the images under every column, space separated.
    pub fn dump(&self) -> String {
        let cols = 2 * self.generator_count;
        let mut out = String::new();
        for c in 0..self.coset_count {
            let row: Vec<String> = self.table[c * cols..(c + 1) * cols]
                .iter()
                .map(|&v| if v == NONE { "-".to_string() } else { v.to_string() })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// How new cosets are defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Scan every relator at each coset in turn, defining cosets as needed.
    Hlt,
    /// Fill the first empty entry, then follow all consequences of it.
    Felsch,
}

/// Presentations with more generators than this use [`Strategy::Felsch`]
/// by default.
pub const FELSCH_GENERATOR_THRESHOLD: usize = 64;

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`, holding at most `max_cosets` live cosets. Running out of
/// room is reported through [`CosetTable::status`], not as an error.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable> {
    let strategy =
        if p.generator_count() > FELSCH_GENERATOR_THRESHOLD { Strategy::Felsch } else { Strategy::Hlt };
    todd_coxeter_with(p, subgroup, max_cosets, strategy)
}

/// [`todd_coxeter`] with an explicit strategy.
pub fn todd_coxeter_with(
    p: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
    strategy: Strategy,
) -> Result<CosetTable> {
    for w in subgroup {
        p.check_word(w)?;
    }
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| r.free_reduce())
        .filter(|r| !r.is_empty())
        .map(|r| r.letters().iter().map(|l| l.column()).collect())
        .collect();
    let subgroup: Vec<Vec<usize>> = subgroup
        .iter()
        .map(|w| w.free_reduce().letters().iter().map(|l| l.column()).collect())
        .collect();
    let mut e = Engine::new(2 * p.generator_count(), max_cosets.max(1));
    let status = match strategy {
        Strategy::Hlt => e.run(&subgroup, &relators),
        Strategy::Felsch => e.run_felsch(&subgroup, &relators),
    };
    Ok(e.into_table(p.generator_count(), status))
}

struct Full;

struct Engine {
    cols: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    live: usize,
    cap: usize,
    queue: Vec<u32>,
    /// Entries set since the last deduction pass (Felsch only).
    deductions: Vec<(u32, usize)>,
    track: bool,
}

impl Engine {
    fn new(cols: usize, cap: usize) -> Self {
        Engine {
            cols,
            table: vec![NONE; cols],
            forward: vec![0],
            live: 1,
            cap,
            queue: Vec::new(),
            deductions: Vec::new(),
            track: false,
        }
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.cols + x] = v;
    }

    fn allocated(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut k = c;
        while self.forward[k as usize] != r {
            let next = self.forward[k as usize];
            self.forward[k as usize] = r;
            k = next;
        }
        r
    }

    fn define(&mut self, f: u32, x: usize) -> std::result::Result<(), Full> {
        if self.allocated() >= self.cap {
            return Err(Full);
        }
        let new = self.allocated() as u32;
        self.forward.push(new);
        self.table.extend(std::iter::repeat(NONE).take(self.cols));
        self.live += 1;
        self.set(f, x, new);
        self.set(new, x ^ 1, f);
        self.deduce(f, x);
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.forward[drop as usize] = keep;
        self.live -= 1;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut idx = 0;
        while idx < self.queue.len() {
            let g = self.queue[idx];
            idx += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let m = self.rep(g);
                let n = self.rep(d);
                let mx = self.get(m, x);
                if mx != NONE {
                    self.merge(n, mx);
                } else {
                    let nx = self.get(n, x ^ 1);
                    if nx != NONE {
                        self.merge(m, nx);
                    } else {
                        self.set(m, x, n);
                        self.set(n, x ^ 1, m);
                        self.deduce(m, x);
                    }
                }
            }
        }
    }

    /// Scans `w` from `a` in both directions, defining cosets as needed and
    /// recording the deduction or coincidence that closes the scan.
    fn scan_and_fill(&mut self, a: u32, w: &[usize]) -> std::result::Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = a;
        let mut b = a;
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j {
                let next = self.get(f, w[i as usize]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != a {
                    self.coincidence(f, a);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, w[j as usize] ^ 1);
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                self.deduce(f, x);
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    #[inline]
    fn deduce(&mut self, c: u32, x: usize) {
        if self.track {
            self.deductions.push((c, x));
        }
    }

    /// Like [`Engine::scan_and_fill`] but never defines a coset.
    fn scan(&mut self, a: u32, w: &[usize]) {
        let mut f = a;
        let mut i = 0;
        while i < w.len() {
            let next = self.get(f, w[i]);
            if next == NONE {
                break;
            }
            f = next;
            i += 1;
        }
        if i == w.len() {
            if f != a {
                self.coincidence(f, a);
            }
            return;
        }
        let mut b = a;
        let mut j = w.len() - 1;
        while j > i {
            let next = self.get(b, w[j] ^ 1);
            if next == NONE {
                return;
            }
            b = next;
            j -= 1;
        }
        // exactly one gap left at position i
        let x = w[i];
        match (self.get(f, x), self.get(b, x ^ 1)) {
            (NONE, NONE) => {
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                self.deduce(f, x);
            }
            (d, _) if d != NONE => {
                if d != b {
                    self.coincidence(d, b);
                }
            }
            (_, e) => {
                if e != f {
                    self.coincidence(e, f);
                }
            }
        }
    }

    /// Scans every cyclic conjugate through each newly set entry.
    fn process_deductions(&mut self, by_col: &[Vec<Vec<usize>>]) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.alive(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE {
                continue;
            }
            for w in &by_col[x] {
                if !self.alive(c) {
                    break;
                }
                self.scan(c, w);
            }
            let d = self.rep(d);
            for w in &by_col[x ^ 1] {
                if !self.alive(d) {
                    break;
                }
                self.scan(d, w);
            }
        }
    }

    fn run_felsch(&mut self, subgroup: &[Vec<usize>], relators: &[Vec<usize>]) -> EnumerationStatus {
        // cyclic conjugates of relators and their inverses, by first letter
        let mut by_col: Vec<Vec<Vec<usize>>> = vec![Vec::new(); self.cols];
        let mut seen = std::collections::HashSet::new();
        for r in relators {
            let inv: Vec<usize> = r.iter().rev().map(|&x| x ^ 1).collect();
            for w in [r, &inv] {
                for k in 0..w.len() {
                    let mut c = w[k..].to_vec();
                    c.extend_from_slice(&w[..k]);
                    if seen.insert(c.clone()) {
                        by_col[c[0]].push(c);
                    }
                }
            }
        }
        self.track = true;
        let mut zero = 0u32;
        for w in subgroup {
            loop {
                match self.scan_and_fill(0, w) {
                    Ok(()) => break,
                    Err(Full) => {
                        self.process_deductions(&by_col);
                        if !self.compact(&mut zero) {
                            return EnumerationStatus::CapacityExceeded;
                        }
                    }
                }
            }
            self.process_deductions(&by_col);
        }
        for r in relators {
            self.scan(0, r);
        }
        self.process_deductions(&by_col);
        let mut c = 0u32;
        let mut x = 0usize;
        loop {
            while (c as usize) < self.allocated() && (!self.alive(c) || x == self.cols) {
                c += 1;
                x = 0;
            }
            if c as usize >= self.allocated() {
                return EnumerationStatus::Complete;
            }
            if self.get(c, x) != NONE {
                x += 1;
                continue;
            }
            if self.define(c, x).is_err() {
                if !self.compact(&mut c) {
                    return EnumerationStatus::CapacityExceeded;
                }
                x = 0;
                continue;
            }
            self.process_deductions(&by_col);
        }
    }

    fn process(&mut self, a: u32, relators: &[Vec<usize>]) -> std::result::Result<(), Full> {
        for r in relators {
            self.scan_and_fill(a, r)?;
            if !self.alive(a) {
                return Ok(());
            }
        }
        for x in 0..self.cols {
            if self.get(a, x) == NONE {
                self.define(a, x)?;
            }
        }
        Ok(())
    }

    /// Drops dead cosets, keeping the relative order of live ones. Returns
    /// false when there is too little to reclaim.
    fn compact(&mut self, cursor: &mut u32) -> bool {
        let dead = self.allocated() - self.live;
        if dead == 0 || dead * 8 < self.cap {
            return false;
        }
        self.renumber(cursor);
        true
    }

    fn renumber(&mut self, cursor: &mut u32) {
        let n = self.allocated();
        let mut map = vec![NONE; n];
        let mut next = 0u32;
        for c in 0..n {
            if self.forward[c] == c as u32 {
                map[c] = next;
                next += 1;
            }
        }
        // the cursor moves to the first live coset at or after it
        let mut cur = *cursor as usize;
        while cur < n && map[cur] == NONE {
            cur += 1;
        }
        *cursor = if cur < n { map[cur] } else { next };
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..n {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.cols {
                let v = self.table[c * self.cols + x];
                table.push(if v == NONE { NONE } else { map[v as usize] });
            }
        }
        self.table = table;
        self.forward = (0..next).collect();
        self.live = next as usize;
    }

    fn run(&mut self, subgroup: &[Vec<usize>], relators: &[Vec<usize>]) -> EnumerationStatus {
        let mut zero = 0u32;
        for w in subgroup {
            loop {
                match self.scan_and_fill(0, w) {
                    Ok(()) => break,
                    Err(Full) => {
                        if !self.compact(&mut zero) {
                            return EnumerationStatus::CapacityExceeded;
                        }
                    }
                }
            }
        }
        let mut a = 0u32;
        while (a as usize) < self.allocated() {
            if self.alive(a) {
                loop {
                    match self.process(a, relators) {
                        Ok(()) => break,
                        Err(Full) => {
                            let before = a;
                            if !self.compact(&mut a) {
                                return EnumerationStatus::CapacityExceeded;
                            }
                            // `a` was live, so it survives renumbering
                            debug_assert!(a <= before);
                        }
                    }
                }
            }
            a += 1;
        }
        EnumerationStatus::Complete
    }

    fn into_table(mut self, generator_count: usize, status: EnumerationStatus) -> CosetTable {
        let mut end = 0;
        self.renumber(&mut end);
        CosetTable { generator_count, coset_count: self.live, table: self.table, status }
    }
}
