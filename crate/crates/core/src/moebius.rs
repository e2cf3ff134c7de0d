//! The Möbius function of `L_n` and its intervals, by four independent
//! routes:
//!
//! * `Definition`: the recursion `μ(x,x) = 1`, `μ(x,y) = -Σ_{x≤z<y} μ(x,z)`
//!   run over the lattice.
//! * `PnkRecurrence`: `M_n = -Σ_{k<n} M_k p_{nk}` using only the closed-form
//!   progression counts.
//! * `ChainAlternatingSum`: `M_n = Σ_k (-1)^k b_{nk}` from chain counts.
//! * `CoatomMeet`: the cross-cut sum over subsets of the elements covered by
//!   the top of the interval.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complexes::chain_counts;
use crate::error::{Error, Result};
use crate::lattice::{count_progressions_formula, IntervalRef, Lattice};
use crate::progression::Progression;
use crate::structure::{self, coatom_progressions, SUBSET_SEARCH_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MoebiusMethod {
    Definition,
    PnkRecurrence,
    ChainAlternatingSum,
    CoatomMeet,
}

impl MoebiusMethod {
    pub const ALL: [MoebiusMethod; 4] = [
        MoebiusMethod::Definition,
        MoebiusMethod::PnkRecurrence,
        MoebiusMethod::ChainAlternatingSum,
        MoebiusMethod::CoatomMeet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoebiusMethod::Definition => "definition",
            MoebiusMethod::PnkRecurrence => "pnk",
            MoebiusMethod::ChainAlternatingSum => "chain",
            MoebiusMethod::CoatomMeet => "coatom",
        }
    }
}

impl fmt::Display for MoebiusMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoebiusMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "definition" | "def" => Ok(MoebiusMethod::Definition),
            "pnk" | "recurrence" | "pnk-recurrence" => Ok(MoebiusMethod::PnkRecurrence),
            "chain" | "chains" | "chain-alternating-sum" => Ok(MoebiusMethod::ChainAlternatingSum),
            "coatom" | "coatoms" | "coatom-meet" => Ok(MoebiusMethod::CoatomMeet),
            other => Err(Error::Domain(format!("unknown Möbius method {other:?}"))),
        }
    }
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("Möbius sum"))
}

/// Memoized definitional Möbius values over one lattice.
///
/// Rows `μ(lo, ·)` are filled on demand. Values on `[∅, x]` are routed
/// through the ideal isomorphism `↓x ≅ L_{|x|}` and cached by `|x|`.
#[derive(Debug)]
pub struct MoebiusTable<'a> {
    lattice: &'a Lattice,
    rows: HashMap<usize, Vec<i64>>,
    bottom_by_size: BTreeMap<u32, i64>,
}

impl<'a> MoebiusTable<'a> {
    pub fn new(lattice: &'a Lattice) -> Self {
        MoebiusTable { lattice, rows: HashMap::new(), bottom_by_size: BTreeMap::new() }
    }

    /// `μ(lo, z)` for every id `z`, zero where `lo ≰ z`.
    pub fn row(&mut self, lo: usize) -> Result<&[i64]> {
        self.lattice.check_id(lo)?;
        if !self.rows.contains_key(&lo) {
            let row = definitional_row(self.lattice, lo)?;
            self.rows.insert(lo, row);
        }
        Ok(&self.rows[&lo])
    }

    pub fn value(&mut self, lo: usize, hi: usize) -> Result<i64> {
        IntervalRef::new(self.lattice, lo, hi)?;
        if lo == self.lattice.bottom() {
            let size = self.lattice.element(hi).len();
            return self.bottom_top_of_size(size);
        }
        Ok(self.row(lo)?[hi])
    }

    /// `μ_k(∅, [k])`, computed definitionally in `L_k`.
    fn bottom_top_of_size(&mut self, k: u32) -> Result<i64> {
        if let Some(&v) = self.bottom_by_size.get(&k) {
            return Ok(v);
        }
        let v = if k == self.lattice.n() {
            let top = self.lattice.top();
            self.row(0)?[top]
        } else {
            let small = Lattice::build_with_bound(k, u32::MAX)?;
            definitional_row(&small, 0)?[small.top()]
        };
        self.bottom_by_size.insert(k, v);
        Ok(v)
    }
}

fn definitional_row(lattice: &Lattice, lo: usize) -> Result<Vec<i64>> {
    let mut row = vec![0i64; lattice.len()];
    row[lo] = 1;
    let above: Vec<usize> = lattice.filter(lo)?;
    for (i, &z) in above.iter().enumerate().skip(1) {
        let mut sum = 0i64;
        for &w in &above[..i] {
            if lattice.lt(w, z) {
                sum = add(sum, row[w])?;
            }
        }
        row[z] = -sum;
    }
    Ok(row)
}

/// Cross-cut sum over subsets of the interval's coatoms whose meet is `lo`.
fn coatom_meet_value(lattice: &Lattice, lo: usize, hi: usize) -> Result<i64> {
    let interval = IntervalRef::new(lattice, lo, hi)?;
    if lo == hi {
        return Ok(1);
    }
    let pool = interval.coatoms();
    if pool.len() <= SUBSET_SEARCH_LIMIT {
        return structure::subsets_with_meet(lattice, &pool, lo)
            .iter()
            .try_fold(0i64, |acc, s| add(acc, if s.len() % 2 == 0 { 1 } else { -1 }));
    }
    // Too many coatoms to enumerate: use the structural description in L_{|hi|}.
    let outer = *lattice.element(hi);
    let small = Lattice::build_with_bound(outer.len(), u32::MAX)?;
    let x = small.require_id(&lattice.element(lo).relabel_from(&outer)?)?;
    coatom_theorem_value(&small, x)
}

/// `μ(x, [n])` from the coatom description: `(-1)^{|S|}` when `x` is the meet
/// of the coatom set `S`, otherwise 0.
pub fn coatom_theorem_value(lattice: &Lattice, x: usize) -> Result<i64> {
    if x == lattice.top() {
        return Ok(1);
    }
    Ok(match structure::structural_representation(lattice, x)? {
        Some(s) if s.len() % 2 == 0 => 1,
        Some(_) => -1,
        None => 0,
    })
}

pub fn mobius_interval(lattice: &Lattice, lo: usize, hi: usize, method: MoebiusMethod) -> Result<i64> {
    match method {
        MoebiusMethod::CoatomMeet => coatom_meet_value(lattice, lo, hi),
        _ => MoebiusTable::new(lattice).value(lo, hi),
    }
}

/// `M_n = μ_n(∅, [n])`.
pub fn mobius_bottom_top(n: u32, method: MoebiusMethod) -> Result<i64> {
    match method {
        MoebiusMethod::Definition => {
            let lattice = Lattice::build(n)?;
            MoebiusTable::new(&lattice).value(lattice.bottom(), lattice.top())
        }
        MoebiusMethod::PnkRecurrence => {
            Ok(*pnk_recurrence(n)?.last().expect("recurrence has n + 1 terms"))
        }
        MoebiusMethod::ChainAlternatingSum => {
            if n == 0 {
                // The only chain is {∅} = {∅, [0]}, of length 0.
                return Ok(1);
            }
            let table = chain_counts(n)?;
            let mut total: i128 = 0;
            for k in 1..=n {
                let b = i128::try_from(table.get(n, k)).map_err(|_| Error::Overflow("chain count"))?;
                total = if k % 2 == 0 { total.checked_add(b) } else { total.checked_sub(b) }
                    .ok_or(Error::Overflow("alternating chain sum"))?;
            }
            i64::try_from(total).map_err(|_| Error::Overflow("alternating chain sum"))
        }
        MoebiusMethod::CoatomMeet => {
            if n == 0 {
                return Ok(1);
            }
            let atoms = coatom_progressions(n);
            let mut total = 0i64;
            for mask in 1u64..(1u64 << atoms.len()) {
                let meet = (0..atoms.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(Progression::interval(n), |acc, i| acc.meet(&atoms[i]));
                if meet.is_empty() {
                    total = add(total, if mask.count_ones() % 2 == 0 { 1 } else { -1 })?;
                }
            }
            Ok(total)
        }
    }
}

/// `M_0, …, M_n` from `M_0 = 1`, `M_m = -Σ_{k<m} M_k p_{mk}`.
pub fn pnk_recurrence(n: u32) -> Result<Vec<i64>> {
    let mut m = vec![1i64];
    for size in 1..=u64::from(n) {
        let mut sum = 0i64;
        for (k, &mk) in m.iter().enumerate() {
            let p = i64::try_from(count_progressions_formula(size, k as u64)).map_err(|_| Error::Overflow("p_nk"))?;
            sum = add(sum, mk.checked_mul(p).ok_or(Error::Overflow("M_k p_nk"))?)?;
        }
        m.push(-sum);
    }
    Ok(m)
}

/// Every `x` with `μ_n(x, [n]) ≠ 0`, with its value.
pub fn mobius_support(lattice: &Lattice) -> Result<Vec<(usize, i64)>> {
    if lattice.n() < 4 {
        return Err(Error::Domain(format!("the Möbius support is computed for n >= 4, got {}", lattice.n())));
    }
    let mut table = MoebiusTable::new(lattice);
    let top = lattice.top();
    let mut out = Vec::new();
    for x in 0..lattice.len() {
        let v = table.value(x, top)?;
        if v != 0 {
            out.push((x, v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory;

    fn p(xs: &[u32]) -> Progression {
        Progression::from_set(xs.iter().copied()).unwrap()
    }

    /// μ(x, y) straight from the recursion, without memoization or routing.
    fn naive(l: &Lattice, x: usize, y: usize) -> i64 {
        if x == y {
            return 1;
        }
        -(0..l.len()).filter(|&z| l.leq(x, z) && l.lt(z, y)).map(|z| naive(l, x, z)).sum::<i64>()
    }

    #[test]
    fn interval_examples() {
        let l7 = Lattice::build(7).unwrap();
        let x = l7.require_id(&p(&[2, 3, 4, 5, 6])).unwrap();
        for method in MoebiusMethod::ALL {
            assert_eq!(mobius_interval(&l7, x, l7.top(), method).unwrap(), 1);
            assert_eq!(mobius_interval(&l7, x, x, method).unwrap(), 1);
        }
        assert_eq!(naive(&l7, x, l7.top()), 1);
        let l4 = Lattice::build(4).unwrap();
        assert_eq!(mobius_interval(&l4, 0, l4.top(), MoebiusMethod::Definition).unwrap(), -1);
        assert!(mobius_interval(&l4, l4.top(), 0, MoebiusMethod::Definition).is_err());
    }

    #[test]
    fn bottom_top_examples() {
        for method in MoebiusMethod::ALL {
            assert_eq!(mobius_bottom_top(0, method).unwrap(), 1, "{method}");
            assert_eq!(mobius_bottom_top(1, method).unwrap(), -1, "{method}");
            assert_eq!(mobius_bottom_top(5, method).unwrap(), 0, "{method}");
            assert_eq!(mobius_bottom_top(7, method).unwrap(), 1, "{method}");
        }
    }

    #[test]
    fn four_methods_agree_with_classical_mobius() {
        for n in 0..=12u32 {
            let expected = match n {
                0 => 1,
                1 => -1,
                _ => numtheory::classical_mobius(u64::from(n - 1)).unwrap(),
            };
            for method in MoebiusMethod::ALL {
                assert_eq!(mobius_bottom_top(n, method).unwrap(), expected, "n = {n}, {method}");
            }
        }
    }

    #[test]
    fn lattice_free_methods_reach_thirty() {
        for n in 2..=30u32 {
            let expected = numtheory::classical_mobius(u64::from(n - 1)).unwrap();
            for method in [MoebiusMethod::PnkRecurrence, MoebiusMethod::ChainAlternatingSum, MoebiusMethod::CoatomMeet] {
                assert_eq!(mobius_bottom_top(n, method).unwrap(), expected, "n = {n}, {method}");
            }
        }
    }

    #[test]
    fn rows_sum_to_zero() {
        for n in 0..=8 {
            let l = Lattice::build(n).unwrap();
            let mut table = MoebiusTable::new(&l);
            for lo in 0..l.len() {
                let row = table.row(lo).unwrap().to_vec();
                for hi in 0..l.len() {
                    if l.lt(lo, hi) {
                        let s: i64 = l.interval(lo, hi).unwrap().iter().map(|&z| row[z]).sum();
                        assert_eq!(s, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn table_matches_naive_recursion() {
        let l = Lattice::build(5).unwrap();
        let mut table = MoebiusTable::new(&l);
        for lo in 0..l.len() {
            for hi in lo..l.len() {
                if l.leq(lo, hi) {
                    assert_eq!(table.value(lo, hi).unwrap(), naive(&l, lo, hi));
                }
            }
        }
    }

    #[test]
    fn coatom_meet_equals_definition_on_all_intervals_of_l7() {
        let l = Lattice::build(7).unwrap();
        let mut table = MoebiusTable::new(&l);
        for lo in 0..l.len() {
            for hi in lo..l.len() {
                if l.leq(lo, hi) {
                    let def = table.value(lo, hi).unwrap();
                    assert_eq!(coatom_meet_value(&l, lo, hi).unwrap(), def);
                    assert!((-1..=1).contains(&def));
                }
            }
        }
    }

    #[test]
    fn support_sizes() {
        for (n, size) in [(5u32, 8usize), (7, 16)] {
            let l = Lattice::build(n).unwrap();
            let support = mobius_support(&l).unwrap();
            assert_eq!(support.len(), size);
            assert!(support.iter().all(|&(_, v)| v == 1 || v == -1));
        }
        assert!(mobius_support(&Lattice::build(3).unwrap()).is_err());
    }

    #[test]
    fn coatom_theorem_matches_definition() {
        for n in 4..=9 {
            let l = Lattice::build(n).unwrap();
            let mut table = MoebiusTable::new(&l);
            for x in 0..l.len() {
                assert_eq!(coatom_theorem_value(&l, x).unwrap(), table.value(x, l.top()).unwrap(), "n = {n}");
            }
        }
    }

    #[test]
    fn bottom_routing_matches_row() {
        let l = Lattice::build(9).unwrap();
        let mut table = MoebiusTable::new(&l);
        let row = table.row(0).unwrap().to_vec();
        for (x, &expected) in row.iter().enumerate() {
            assert_eq!(table.value(0, x).unwrap(), expected);
        }
    }

    #[test]
    fn method_names_parse() {
        for m in MoebiusMethod::ALL {
            assert_eq!(m.name().parse::<MoebiusMethod>().unwrap(), m);
        }
        assert!("fourier".parse::<MoebiusMethod>().is_err());
    }
}
