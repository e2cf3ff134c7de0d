//! Smith normal form by unimodular row and column operations.
//!
//! Boundary matrices of order complexes are sparse and full of `±1`
//! entries, so the first pass pivots on units directly in the sparse rows.
//! Each unit pivot contributes an invariant factor of 1 and removes one row
//! and one column. Whatever is left is small and goes through a dense
//! elimination on the smallest entry.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors, positive, each dividing the next.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let ncols = m.ncols();
    let mut rows: Vec<BTreeMap<usize, BigInt>> = m.clone().into_rows();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut units = 0usize;

    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..ncols {
            let pivot = col_rows[c]
                .iter()
                .copied()
                .filter(|&r| rows[r][&c].abs().is_one())
                .min_by_key(|&r| rows[r].len());
            let Some(p) = pivot else { continue };
            progress = true;
            units += 1;
            let pivot_row = std::mem::take(&mut rows[p]);
            alive[p] = false;
            for &k in pivot_row.keys() {
                col_rows[k].remove(&p);
            }
            let pv = &pivot_row[&c];
            let targets: Vec<usize> = col_rows[c].iter().copied().collect();
            for t in targets {
                // Since pv = ±1, dividing by it is multiplying by it.
                let factor = &rows[t][&c] * pv;
                for (&k, v) in &pivot_row {
                    let entry = rows[t].entry(k).or_default();
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        rows[t].remove(&k);
                        col_rows[k].remove(&t);
                    } else {
                        col_rows[k].insert(t);
                    }
                }
            }
            // The pivot column now holds only the pivot; clearing the rest of
            // the pivot row by column operations touches nothing else.
            debug_assert!(col_rows[c].is_empty());
        }
    }

    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| alive[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..ncols).filter(|&c| !col_rows[c].is_empty()).collect();
    let col_index: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&r| {
            let mut row = vec![BigInt::zero(); live_cols.len()];
            for (c, v) in &rows[r] {
                row[col_index[c]] = v.clone();
            }
            row
        })
        .collect();

    let mut diagonal = vec![BigInt::one(); units];
    diagonal.extend(dense_diagonalize(&mut dense));
    normalize_divisibility(&mut diagonal);
    let rank = diagonal.len();
    SmithForm { diagonal, rank }
}

/// Reduces to a diagonal and returns its nonzero entries (not yet in
/// divisibility order).
fn dense_diagonalize(a: &mut [Vec<BigInt>]) -> Vec<BigInt> {
    let nr = a.len();
    let nc = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let Some((pr, pc)) = min_abs_entry(a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for r in t + 1..nr {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(r);
                for (target, pivot) in tail[0][t..].iter_mut().zip(&head[t][t..]) {
                    *target -= &q * pivot;
                }
                if !a[r][t].is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..nc {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let sub = &q * &row[t];
                    row[c] -= sub;
                }
                if !a[t][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // A remainder smaller than the pivot exists; move it into place.
            let (pr, pc) = min_abs_in_cross(a, t);
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| v.abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` (beyond the corner).
fn min_abs_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for (r, row) in a.iter().enumerate().skip(t) {
        if !row[t].is_zero() && row[t].abs() < a[best.0][best.1].abs() {
            best = (r, t);
        }
    }
    for c in t..a[t].len() {
        if !a[t][c].is_zero() && a[t][c].abs() < a[best.0][best.1].abs() {
            best = (t, c);
        }
    }
    best
}

/// Replaces pairs by `(gcd, lcm)` until each entry divides the next.
fn normalize_divisibility(d: &mut [BigInt]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
}
