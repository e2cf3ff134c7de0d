//! Left-modular elements and comodernism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{IntervalRef, Lattice};

/// Largest `n` for which [`check_comodernism`] walks every interval.
pub const COMODERNISM_BOUND: u32 = 8;

/// `m` is left-modular in `interval` if `(x ∨ m) ∧ y = x ∨ (m ∧ y)` for all
/// `x < y` in the interval.
pub fn is_left_modular_in(interval: &IntervalRef<'_>, m: usize) -> Result<bool> {
    let l = interval.lattice();
    if !interval.contains(m) {
        return Err(Error::Domain(format!("element {m} is not in the interval")));
    }
    let elems = interval.elements();
    for &x in &elems {
        let x_join_m = l.join(x, m);
        for &y in &elems {
            if !l.lt(x, y) {
                continue;
            }
            if l.meet(x_join_m, y) != l.join(x, l.meet(m, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Definitional left-modularity in the whole lattice.
pub fn is_left_modular(lattice: &Lattice, m: usize) -> Result<bool> {
    let whole = IntervalRef::new(lattice, lattice.bottom(), lattice.top())?;
    is_left_modular_in(&whole, m)
}

/// Coatom criterion: a coatom `m` of the interval is left-modular iff every
/// `y` with `y ≰ m` covers `m ∧ y`.
pub fn is_left_modular_coatom(interval: &IntervalRef<'_>, m: usize) -> Result<bool> {
    let l = interval.lattice();
    if !interval.coatoms().contains(&m) {
        return Err(Error::Domain(format!("element {m} is not a coatom of the interval")));
    }
    Ok(interval.elements().into_iter().filter(|&y| !l.leq(y, m)).all(|y| l.covers(y, l.meet(m, y))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalWitness {
    pub lo: usize,
    pub hi: usize,
    pub coatom: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComodernismReport {
    pub n: u32,
    pub intervals_checked: usize,
    pub witnesses: Vec<IntervalWitness>,
    pub counterexample: Option<(usize, usize)>,
}

impl ComodernismReport {
    pub fn is_comodernistic(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Candidate coatoms of `[lo, hi]` in witness order: the two "drop an
/// endpoint" coatoms first, then the others by increasing relative step.
pub fn witness_candidates(interval: &IntervalRef<'_>) -> Vec<usize> {
    let l = interval.lattice();
    let top = *l.element(interval.hi());
    let mut candidates: Vec<(bool, u32, usize)> = interval
        .coatoms()
        .into_iter()
        .map(|c| {
            let rel = l.element(c).relabel_from(&top).expect("coatom lies below hi");
            let endpoint_form = rel.len() + 1 == top.len() && rel.step() <= 1;
            (!endpoint_form, rel.step(), c)
        })
        .collect();
    candidates.sort_unstable();
    candidates.into_iter().map(|(_, _, c)| c).collect()
}

/// Walks every interval `[x, y]` with `x < y` and looks for a coatom that is
/// left-modular in it (checked from the definition).
pub fn check_comodernism(lattice: &Lattice) -> Result<ComodernismReport> {
    check_comodernism_with_bound(lattice, COMODERNISM_BOUND)
}

pub fn check_comodernism_with_bound(lattice: &Lattice, bound: u32) -> Result<ComodernismReport> {
    if lattice.n() > bound {
        return Err(Error::OutOfBounds { n: lattice.n(), bound });
    }
    let mut report = ComodernismReport { n: lattice.n(), intervals_checked: 0, witnesses: Vec::new(), counterexample: None };
    for hi in 0..lattice.len() {
        for lo in 0..hi {
            if !lattice.leq(lo, hi) {
                continue;
            }
            let interval = IntervalRef::new(lattice, lo, hi)?;
            report.intervals_checked += 1;
            let mut witness = None;
            for c in witness_candidates(&interval) {
                if is_left_modular_in(&interval, c)? {
                    witness = Some(c);
                    break;
                }
            }
            match witness {
                Some(coatom) => report.witnesses.push(IntervalWitness { lo, hi, coatom }),
                None => {
                    report.counterexample = Some((lo, hi));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

pub fn is_comodernistic(lattice: &Lattice) -> Result<bool> {
    Ok(check_comodernism(lattice)?.is_comodernistic())
}
