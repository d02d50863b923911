//! Abelian invariants of a presented group via the integer Smith normal form
//! of its relation matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Presentation;
use crate::error::{Error, Result};
use crate::group::AbelianInvariants;

/// Invariant factors of `G^ab` where `G` is presented by `p`.
pub fn abelian_invariants_of_presentation(p: &Presentation) -> Result<AbelianInvariants> {
    let m = p.generator_count();
    let rows: Vec<Vec<i64>> = p.relators().iter().map(|r| r.exponent_sums(m)).collect();
    invariants_of_relation_matrix(&rows, m)
}

/// Invariant factors of `ℤ^columns / rowspan(rows)`.
pub fn invariants_of_relation_matrix(rows: &[Vec<i64>], columns: usize) -> Result<AbelianInvariants> {
    let echelon = echelon_form(rows, columns);
    let diagonal = smith_diagonal(echelon, columns);
    let rank = diagonal.len();
    let mut factors = Vec::new();
    for d in diagonal {
        if d.is_one() {
            continue;
        }
        let v = d.to_u64().ok_or(Error::SizeCapExceeded { size: u128::MAX, cap: u64::MAX as u128 })?;
        factors.push(v);
    }
    factors.extend(std::iter::repeat(0).take(columns - rank));
    AbelianInvariants::from_chain(factors.clone()).or_else(|_| Ok(AbelianInvariants::from_cyclic_orders(&factors)))
}

/// Row-reduces the rows one at a time into a Hermite-like echelon basis of
/// their span, so the full relator list never has to be held as a matrix.
fn echelon_form(rows: &[Vec<i64>], columns: usize) -> Vec<Vec<BigInt>> {
    let mut pivots: BTreeMap<usize, Vec<BigInt>> = BTreeMap::new();
    for row in rows {
        assert_eq!(row.len(), columns);
        let mut r: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        for c in 0..columns {
            if r[c].is_zero() {
                continue;
            }
            match pivots.get_mut(&c) {
                None => {
                    if r[c].is_negative() {
                        r.iter_mut().for_each(|x| *x = -&*x);
                    }
                    pivots.insert(c, r);
                    break;
                }
                Some(p) => eliminate(p, &mut r, c),
            }
        }
    }
    pivots.into_values().collect()
}

/// Unimodular 2-row operation leaving `gcd(p[c], r[c])` in `p[c]` and zero in `r[c]`.
fn eliminate(p: &mut [BigInt], r: &mut [BigInt], c: usize) {
    if (&r[c] % &p[c]).is_zero() {
        let q = &r[c] / &p[c];
        for k in c..p.len() {
            let t = &q * &p[k];
            r[k] -= t;
        }
        return;
    }
    let e = p[c].extended_gcd(&r[c]);
    let (g, x, y) = (e.gcd, e.x, e.y);
    let a = &p[c] / &g;
    let b = &r[c] / &g;
    for k in c..p.len() {
        let np = &x * &p[k] + &y * &r[k];
        let nr = &b * &p[k] - &a * &r[k];
        p[k] = np;
        r[k] = nr;
    }
    if p[c].is_negative() {
        p.iter_mut().for_each(|v| *v = -&*v);
    }
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
fn smith_diagonal(mut a: Vec<Vec<BigInt>>, columns: usize) -> Vec<BigInt> {
    let rows = a.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(columns) {
        // pick the smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..columns {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..columns {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..columns {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // divisibility: fold a violating row into row t and repeat
            let d = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..columns).any(|j| !(&a[i][j] % &d).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..columns {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}
