//! The lattice `L_n` of arithmetic progressions contained in `[n]`.
//!
//! Elements get dense ids in canonical order (size, base, step), so id 0 is
//! the empty progression and the last id is `[n]`. Strict containment always
//! increases size, which makes id order a linear extension of the lattice
//! order.

mod counting;
mod export;

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::progression::Progression;
use crate::structure::coatom_progressions;

pub use counting::{count_progressions_formula, gf_coefficients, lattice_size_formula};

/// Largest `n` accepted by [`Lattice::build`].
pub const DEFAULT_BOUND: u32 = 30;

#[derive(Debug, Clone)]
pub struct Lattice {
    n: u32,
    elements: Vec<Progression>,
    id_of: HashMap<Progression, usize>,
    covers_up: Vec<Vec<usize>>,
    covers_down: Vec<Vec<usize>>,
}

impl Lattice {
    pub fn build(n: u32) -> Result<Self> {
        Self::build_with_bound(n, DEFAULT_BOUND)
    }

    pub fn build_with_bound(n: u32, bound: u32) -> Result<Self> {
        if n > bound {
            return Err(Error::OutOfBounds { n, bound });
        }
        let mut elements = vec![Progression::Empty];
        elements.extend((1..=n).map(|a| Progression::NonEmpty { base: a, step: 0, len: 1 }));
        for a in 1..n {
            for r in 1..=(n - a) {
                for len in 2..=((n - a) / r + 1) {
                    elements.push(Progression::NonEmpty { base: a, step: r, len });
                }
            }
        }
        elements.sort();
        let id_of: HashMap<Progression, usize> = elements.iter().enumerate().map(|(i, p)| (*p, i)).collect();

        // The elements covered by y are the coatoms of L_{|y|} carried into ↓y.
        let mut covers_down = Vec::with_capacity(elements.len());
        for y in &elements {
            let mut below = Vec::new();
            for c in coatom_progressions(y.len()) {
                let image = c.relabel_into(y)?;
                let id = *id_of
                    .get(&image)
                    .ok_or_else(|| Error::Internal(format!("coatom image {image} missing from L_{n}")))?;
                below.push(id);
            }
            below.sort_unstable();
            covers_down.push(below);
        }
        let mut covers_up = vec![Vec::new(); elements.len()];
        for (hi, below) in covers_down.iter().enumerate() {
            for &lo in below {
                covers_up[lo].push(hi);
            }
        }
        Ok(Lattice { n, elements, id_of, covers_up, covers_down })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Progression] {
        &self.elements
    }

    /// Panics on an out-of-range id.
    pub fn element(&self, id: usize) -> &Progression {
        &self.elements[id]
    }

    pub fn id_of(&self, p: &Progression) -> Option<usize> {
        self.id_of.get(p).copied()
    }

    pub fn require_id(&self, p: &Progression) -> Result<usize> {
        self.id_of(p).ok_or_else(|| Error::NotInLattice(p.render(self.n), self.n))
    }

    pub fn check_id(&self, id: usize) -> Result<()> {
        if id < self.len() {
            Ok(())
        } else {
            Err(Error::BadId(id))
        }
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn covers_up(&self, id: usize) -> &[usize] {
        &self.covers_up[id]
    }

    pub fn covers_down(&self, id: usize) -> &[usize] {
        &self.covers_down[id]
    }

    /// All cover edges `(lower, upper)`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .covers_up
            .iter()
            .enumerate()
            .flat_map(|(lo, ups)| ups.iter().map(move |&hi| (lo, hi)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a].leq(&self.elements[b])
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Whether `upper` covers `lower`.
    pub fn covers(&self, upper: usize, lower: usize) -> bool {
        self.covers_down[upper].binary_search(&lower).is_ok()
    }

    /// Cover test on progressions, both of which must lie in the lattice.
    pub fn covers_progressions(&self, upper: &Progression, lower: &Progression) -> Result<bool> {
        Ok(self.covers(self.require_id(upper)?, self.require_id(lower)?))
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].meet(&self.elements[b]);
        self.id_of[&m]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let j = self.elements[a].join(&self.elements[b]);
        self.id_of[&j]
    }

    /// Meet of a set of ids; the top element for an empty set.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, ids: I) -> usize {
        ids.into_iter().fold(self.top(), |acc, id| self.meet(acc, id))
    }

    /// Join of a set of ids; the bottom element for an empty set.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, ids: I) -> usize {
        ids.into_iter().fold(self.bottom(), |acc, id| self.join(acc, id))
    }

    /// Principal ideal `↓x`, sorted by id.
    pub fn ideal(&self, x: usize) -> Result<Vec<usize>> {
        self.check_id(x)?;
        Ok((0..=x).filter(|&z| self.leq(z, x)).collect())
    }

    /// Principal filter `↑x`, sorted by id.
    pub fn filter(&self, x: usize) -> Result<Vec<usize>> {
        self.check_id(x)?;
        Ok((x..self.len()).filter(|&z| self.leq(x, z)).collect())
    }

    pub fn interval(&self, lo: usize, hi: usize) -> Result<Vec<usize>> {
        self.check_id(lo)?;
        self.check_id(hi)?;
        if !self.leq(lo, hi) {
            return Err(Error::NotAnInterval { lo, hi });
        }
        Ok((lo..=hi).filter(|&z| self.leq(lo, z) && self.leq(z, hi)).collect())
    }

    /// Number of elements of size `k`, by direct scan.
    pub fn count_of_size(&self, k: u32) -> u64 {
        self.elements.iter().filter(|p| p.len() == k).count() as u64
    }

    /// The relabeling `a + ir ↦ i + 1` from `↓x` onto `L_{|x|}`, as a map
    /// from ids of this lattice to ids of `L_{|x|}`.
    pub fn ideal_isomorphism(&self, x: usize) -> Result<BTreeMap<usize, usize>> {
        self.check_id(x)?;
        let outer = self.elements[x];
        if outer.is_empty() {
            return Err(Error::Domain("the ideal isomorphism needs a nonempty progression".into()));
        }
        let target = Lattice::build_with_bound(outer.len(), u32::MAX)?;
        let mut map = BTreeMap::new();
        for z in self.ideal(x)? {
            let image = self.elements[z].relabel_from(&outer)?;
            map.insert(z, target.require_id(&image)?);
        }
        Ok(map)
    }
}

/// A closed interval `[lo, hi]` of a lattice.
#[derive(Debug, Clone, Copy)]
pub struct IntervalRef<'a> {
    lattice: &'a Lattice,
    lo: usize,
    hi: usize,
}

impl<'a> IntervalRef<'a> {
    pub fn new(lattice: &'a Lattice, lo: usize, hi: usize) -> Result<Self> {
        lattice.check_id(lo)?;
        lattice.check_id(hi)?;
        if !lattice.leq(lo, hi) {
            return Err(Error::NotAnInterval { lo, hi });
        }
        Ok(IntervalRef { lattice, lo, hi })
    }

    pub fn lattice(&self) -> &'a Lattice {
        self.lattice
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn contains(&self, z: usize) -> bool {
        self.lattice.leq(self.lo, z) && self.lattice.leq(z, self.hi)
    }

    pub fn elements(&self) -> Vec<usize> {
        (self.lo..=self.hi).filter(|&z| self.contains(z)).collect()
    }

    /// Elements covered by `hi` inside the interval.
    pub fn coatoms(&self) -> Vec<usize> {
        self.lattice.covers_down(self.hi).iter().copied().filter(|&c| self.lattice.leq(self.lo, c)).collect()
    }
}

/// Cover relations computed from the definition alone: `y` covers `x` iff
/// `x < y` and nothing lies strictly between. Returns, per id, the sorted ids
/// it covers.
pub fn brute_force_covers(lattice: &Lattice) -> Vec<Vec<usize>> {
    let len = lattice.len();
    (0..len)
        .map(|hi| {
            (0..hi)
                .filter(|&lo| lattice.lt(lo, hi))
                .filter(|&lo| !(lo + 1..hi).any(|z| lattice.lt(lo, z) && lattice.lt(z, hi)))
                .collect()
        })
        .collect()
}
