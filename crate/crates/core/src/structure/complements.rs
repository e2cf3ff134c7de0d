//! Complements and upper semicomplements.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numtheory;
use crate::progression::Progression;

/// All `y` with `x ∨ y = [n]` and `x ∧ y = ∅`.
pub fn complements_of(lattice: &Lattice, x: usize) -> Result<Vec<usize>> {
    lattice.check_id(x)?;
    Ok((0..lattice.len())
        .filter(|&y| lattice.join(x, y) == lattice.top() && lattice.meet(x, y) == lattice.bottom())
        .collect())
}

/// All `y` with `x ∨ y = [n]`.
pub fn upper_semicomplements(lattice: &Lattice, x: usize) -> Result<Vec<usize>> {
    lattice.check_id(x)?;
    Ok((0..lattice.len()).filter(|&y| lattice.join(x, y) == lattice.top()).collect())
}

/// Exhaustive search for an element without a complement.
pub fn uncomplemented_element(lattice: &Lattice) -> Option<usize> {
    (0..lattice.len()).find(|&x| complements_of(lattice, x).map(|c| c.is_empty()).unwrap_or(true))
}

pub fn is_complemented(lattice: &Lattice) -> bool {
    uncomplemented_element(lattice).is_none()
}

#[derive(Debug, Clone, Serialize)]
pub struct SemicomplementWitness {
    /// Smallest prime whose square divides `n - 1`.
    pub prime: u64,
    pub element: Progression,
    pub id: usize,
    pub upper_semicomplements: Vec<usize>,
}

impl SemicomplementWitness {
    /// Whether `[n]` is the only upper semicomplement.
    pub fn only_top(&self, lattice: &Lattice) -> bool {
        self.upper_semicomplements == [lattice.top()]
    }
}

/// For `n - 1` divisible by `p²`, the progression
/// `{1 + (n-1)/p, 1 + 2(n-1)/p, …, n - (n-1)/p}` together with its upper
/// semicomplements; `None` when `n - 1` is squarefree.
pub fn semicomplement_witness(lattice: &Lattice) -> Result<Option<SemicomplementWitness>> {
    let n = lattice.n();
    if n < 2 {
        return Err(Error::Domain(format!("complements are considered for n >= 2, got {n}")));
    }
    let f = numtheory::factorize(u64::from(n - 1))?;
    let Some(&(prime, _)) = f.factors().iter().find(|&&(_, e)| e >= 2) else {
        return Ok(None);
    };
    let stride = (n - 1) / prime as u32;
    let element = Progression::new(1 + stride, stride, prime as u32 - 1)?;
    let id = lattice.require_id(&element)?;
    let upper_semicomplements = upper_semicomplements(lattice, id)?;
    Ok(Some(SemicomplementWitness { prime, element, id, upper_semicomplements }))
}
