//! Coatoms of `L_n` and the representation of elements as meets of coatoms.

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numtheory;
use crate::progression::Progression;

/// Above this many coatoms the subset cross-check is skipped.
pub const SUBSET_SEARCH_LIMIT: usize = 20;

fn pr(base: u32, step: u32, len: u32) -> Progression {
    Progression::new(base, step, len).expect("valid coatom progression")
}

/// The coatoms of `L_k` as progressions, in canonical order.
///
/// For `k >= 4` these are `12⋯(k-1)`, `23⋯k` and `{1, 1+p, …, k}` for every
/// prime `p | k-1`.
pub fn coatom_progressions(k: u32) -> Vec<Progression> {
    let mut out = match k {
        0 => Vec::new(),
        1 => vec![Progression::Empty],
        2 => vec![pr(1, 0, 1), pr(2, 0, 1)],
        3 => vec![pr(1, 1, 2), pr(1, 2, 2), pr(2, 1, 2)],
        _ => {
            let mut v = vec![pr(1, 1, k - 1), pr(2, 1, k - 1)];
            let f = numtheory::factorize(u64::from(k - 1)).expect("k - 1 >= 3");
            v.extend(f.primes().map(|p| {
                let p = p as u32;
                pr(1, p, (k - 1) / p + 1)
            }));
            v
        }
    };
    out.sort();
    out
}

/// Coatom ids of the lattice, sorted.
pub fn coatoms(lattice: &Lattice) -> Vec<usize> {
    let mut ids: Vec<usize> = coatom_progressions(lattice.n())
        .iter()
        .map(|c| lattice.require_id(c).expect("coatoms lie in the lattice"))
        .collect();
    ids.sort_unstable();
    ids
}

/// The unique set of coatoms whose meet is `x`, or `None` if `x` is not a
/// meet of coatoms.
///
/// Derived structurally: the part of `x` strictly between 1 and `n` must be
/// `(1 + dℤ) ∩ {2..n-1}` for a squarefree `d | n-1`, which fixes the
/// prime-step coatoms; the endpoints fix the two long ones. When there are at
/// most [`SUBSET_SEARCH_LIMIT`] coatoms the answer is checked against a
/// subset search.
pub fn meet_of_coatoms_representation(lattice: &Lattice, x: usize) -> Result<Option<Vec<usize>>> {
    let structural = structural_representation(lattice, x)?;
    let atoms = coatoms(lattice);
    if atoms.len() <= SUBSET_SEARCH_LIMIT {
        let found = representations_by_subset_search(lattice, x)?;
        let brute = match found.as_slice() {
            [] => None,
            [s] => Some(s.clone()),
            _ => return Err(Error::Internal(format!("element {x} has {} coatom representations", found.len()))),
        };
        if brute != structural {
            return Err(Error::Internal(format!(
                "coatom representation of {} disagrees: structural {structural:?}, search {brute:?}",
                lattice.element(x).render(lattice.n())
            )));
        }
    }
    Ok(structural)
}

fn check_domain(lattice: &Lattice, x: usize) -> Result<()> {
    lattice.check_id(x)?;
    if lattice.n() < 4 {
        return Err(Error::Domain(format!("coatom representations need n >= 4, got {}", lattice.n())));
    }
    if x == lattice.top() {
        return Err(Error::Domain("[n] is the meet of the empty set of coatoms only".into()));
    }
    Ok(())
}

pub fn structural_representation(lattice: &Lattice, x: usize) -> Result<Option<Vec<usize>>> {
    check_domain(lattice, x)?;
    let n = lattice.n();
    let xp = lattice.element(x);
    let middle: Vec<u32> = xp.elements().into_iter().filter(|&e| e > 1 && e < n).collect();
    let d = match middle.first() {
        None => n - 1,
        Some(&m) => m - 1,
    };
    if !(n - 1).is_multiple_of(d) {
        return Ok(None);
    }
    let expected: Vec<u32> = (1..(n - 1) / d).map(|j| 1 + j * d).collect();
    if middle != expected {
        return Ok(None);
    }
    let f = numtheory::factorize(u64::from(d))?;
    if !f.is_squarefree() {
        return Ok(None);
    }
    let mut chosen = Vec::new();
    if !xp.contains(n) {
        chosen.push(pr(1, 1, n - 1));
    }
    if !xp.contains(1) {
        chosen.push(pr(2, 1, n - 1));
    }
    for p in f.primes() {
        let p = p as u32;
        chosen.push(pr(1, p, (n - 1) / p + 1));
    }
    let mut ids: Vec<usize> = chosen.iter().map(|c| lattice.require_id(c)).collect::<Result<_>>()?;
    ids.sort_unstable();
    if ids.is_empty() || lattice.meet_all(ids.iter().copied()) != x {
        return Ok(None);
    }
    Ok(Some(ids))
}

/// Every nonempty subset of coatoms whose meet is `x`.
pub fn representations_by_subset_search(lattice: &Lattice, x: usize) -> Result<Vec<Vec<usize>>> {
    check_domain(lattice, x)?;
    let atoms = coatoms(lattice);
    if atoms.len() > SUBSET_SEARCH_LIMIT {
        return Err(Error::Domain(format!("{} coatoms is too many for subset search", atoms.len())));
    }
    Ok(subsets_with_meet(lattice, &atoms, x))
}

/// Nonempty subsets of `pool` whose meet equals `target`.
pub(crate) fn subsets_with_meet(lattice: &Lattice, pool: &[usize], target: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << pool.len()) {
        let subset: Vec<usize> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
        if lattice.meet_all(subset.iter().copied()) == target {
            out.push(subset);
        }
    }
    out
}
