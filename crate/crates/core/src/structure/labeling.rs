//! Edge labelings of the Hasse diagram and an exhaustive ER/EL verifier.
//!
//! A labeling is ER if every interval has exactly one maximal chain whose
//! labels strictly increase. It is EL if, in addition, that chain's label
//! sequence precedes every other maximal chain's sequence in the
//! lexicographic order where a prefix precedes its extensions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Largest `n` the verifier enumerates.
pub const LABELING_BOUND: u32 = 7;

#[derive(Debug, Clone)]
pub struct EdgeLabeling<'a> {
    lattice: &'a Lattice,
    labels: BTreeMap<(usize, usize), i64>,
}

impl<'a> EdgeLabeling<'a> {
    /// Rejects labelings that miss a cover edge or label a non-edge.
    pub fn new(lattice: &'a Lattice, labels: BTreeMap<(usize, usize), i64>) -> Result<Self> {
        for &(lo, hi) in labels.keys() {
            if lo >= lattice.len() || hi >= lattice.len() || !lattice.covers(hi, lo) {
                return Err(Error::Labeling(format!("({lo}, {hi}) is not a cover edge")));
            }
        }
        if let Some((lo, hi)) = lattice.cover_edges().into_iter().find(|e| !labels.contains_key(e)) {
            return Err(Error::Labeling(format!("cover edge ({lo}, {hi}) has no label")));
        }
        Ok(EdgeLabeling { lattice, labels })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> i64>(lattice: &'a Lattice, mut f: F) -> Self {
        let labels = lattice.cover_edges().into_iter().map(|(lo, hi)| ((lo, hi), f(lo, hi))).collect();
        EdgeLabeling { lattice, labels }
    }

    /// Parses one `lowerId upperId label` triple per line. Blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse(lattice: &'a Lattice, text: &str) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Labeling(format!("line {}: expected `lowerId upperId label`, got {line:?}", lineno + 1));
            let [lo, hi, label] = fields.as_slice() else {
                return Err(bad());
            };
            let lo: usize = lo.parse().map_err(|_| bad())?;
            let hi: usize = hi.parse().map_err(|_| bad())?;
            let label: i64 = label.parse().map_err(|_| bad())?;
            if labels.insert((lo, hi), label).is_some() {
                return Err(Error::Labeling(format!("line {}: edge ({lo}, {hi}) labeled twice", lineno + 1)));
            }
        }
        Self::new(lattice, labels)
    }

    pub fn to_text(&self) -> String {
        self.labels.iter().map(|(&(lo, hi), l)| format!("{lo} {hi} {l}\n")).collect()
    }

    pub fn lattice(&self) -> &'a Lattice {
        self.lattice
    }

    pub fn label(&self, lo: usize, hi: usize) -> Option<i64> {
        self.labels.get(&(lo, hi)).copied()
    }
}

/// `a ⪯ b`: `a` is a prefix of `b`, or `a` is smaller at the first place
/// they differ.
pub fn lex_preceq(a: &[i64], b: &[i64]) -> bool {
    match a.iter().zip(b).find(|(x, y)| x != y) {
        Some((x, y)) => x < y,
        None => a.len() <= b.len(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LabelingFailure {
    /// The interval does not have exactly one strictly rising maximal chain.
    RisingChainCount { lo: usize, hi: usize, count: usize },
    /// The rising chain is not lexicographically first.
    NotLexFirst { lo: usize, hi: usize, rising: Vec<i64>, other: Vec<i64> },
}

/// A chain whose label sequence extends the rising chain's or is extended by
/// it. The lexicographic order gives no guidance on which is "first" in the
/// intended sense, so these are reported rather than resolved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixTie {
    pub lo: usize,
    pub hi: usize,
    pub rising: Vec<i64>,
    pub other: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LabelingVerdict {
    pub holds: bool,
    pub intervals_checked: usize,
    pub failures: Vec<LabelingFailure>,
    pub prefix_ties: Vec<PrefixTie>,
}

/// Label sequences of all maximal chains of `[lo, hi]`.
fn maximal_chain_labels(labeling: &EdgeLabeling<'_>, lo: usize, hi: usize) -> Vec<Vec<i64>> {
    let l = labeling.lattice;
    let mut out = Vec::new();
    let mut stack = vec![(lo, Vec::new())];
    while let Some((z, seq)) = stack.pop() {
        if z == hi {
            out.push(seq);
            continue;
        }
        for &w in l.covers_up(z) {
            if l.leq(w, hi) {
                let mut next = seq.clone();
                next.push(labeling.labels[&(z, w)]);
                stack.push((w, next));
            }
        }
    }
    out
}

fn is_rising(seq: &[i64]) -> bool {
    seq.windows(2).all(|w| w[0] < w[1])
}

fn verify(labeling: &EdgeLabeling<'_>, lexicographic: bool) -> Result<LabelingVerdict> {
    let l = labeling.lattice;
    if l.n() > LABELING_BOUND {
        return Err(Error::OutOfBounds { n: l.n(), bound: LABELING_BOUND });
    }
    let mut verdict = LabelingVerdict { holds: true, intervals_checked: 0, failures: Vec::new(), prefix_ties: Vec::new() };
    for hi in 0..l.len() {
        for lo in 0..hi {
            if !l.leq(lo, hi) {
                continue;
            }
            verdict.intervals_checked += 1;
            let chains = maximal_chain_labels(labeling, lo, hi);
            let rising: Vec<usize> = (0..chains.len()).filter(|&i| is_rising(&chains[i])).collect();
            if rising.len() != 1 {
                verdict.failures.push(LabelingFailure::RisingChainCount { lo, hi, count: rising.len() });
                continue;
            }
            if !lexicographic {
                continue;
            }
            let r = &chains[rising[0]];
            for (i, other) in chains.iter().enumerate() {
                if i == rising[0] {
                    continue;
                }
                if !lex_preceq(r, other) {
                    verdict.failures.push(LabelingFailure::NotLexFirst { lo, hi, rising: r.clone(), other: other.clone() });
                    break;
                }
                if r.iter().zip(other).all(|(a, b)| a == b) {
                    verdict.prefix_ties.push(PrefixTie { lo, hi, rising: r.clone(), other: other.clone() });
                }
            }
        }
    }
    verdict.holds = verdict.failures.is_empty();
    Ok(verdict)
}

pub fn verify_er_labeling(labeling: &EdgeLabeling<'_>) -> Result<LabelingVerdict> {
    verify(labeling, false)
}

pub fn verify_el_labeling(labeling: &EdgeLabeling<'_>) -> Result<LabelingVerdict> {
    verify(labeling, true)
}

/// On a boolean lattice `L_n` (`n <= 3`), label each cover edge by the one
/// element it adds.
pub fn element_added_labeling(lattice: &Lattice) -> Result<EdgeLabeling<'_>> {
    let mut labels = BTreeMap::new();
    for (lo, hi) in lattice.cover_edges() {
        let below = lattice.element(lo).elements();
        let added: Vec<u32> = lattice.element(hi).elements().into_iter().filter(|e| !below.contains(e)).collect();
        match added.as_slice() {
            [e] => {
                labels.insert((lo, hi), i64::from(*e));
            }
            _ => return Err(Error::Labeling(format!("cover edge ({lo}, {hi}) adds {} elements", added.len()))),
        }
    }
    EdgeLabeling::new(lattice, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order() {
        assert!(lex_preceq(&[1, 2], &[1, 2, 0]));
        assert!(!lex_preceq(&[1, 2, 0], &[1, 2]));
        assert!(lex_preceq(&[1, 2], &[1, 3]));
        assert!(lex_preceq(&[0, 9], &[1]));
        assert!(lex_preceq(&[], &[5]));
    }

    #[test]
    fn element_added_is_el_on_l3() {
        let l = Lattice::build(3).unwrap();
        let lab = element_added_labeling(&l).unwrap();
        let v = verify_el_labeling(&lab).unwrap();
        assert!(v.holds, "{:?}", v.failures);
        assert!(v.prefix_ties.is_empty());
        assert!(verify_er_labeling(&lab).unwrap().holds);
    }

    #[test]
    fn rising_chain_not_lexicographically_first() {
        // L_2: ∅ -1-> 1 -5-> 12 rises; ∅ -0-> 2 -(-1)-> 12 does not, but starts lower.
        let l = Lattice::build(2).unwrap();
        let lab = EdgeLabeling::parse(&l, "0 1 1\n1 3 5\n0 2 0\n2 3 -1\n").unwrap();
        assert!(verify_er_labeling(&lab).unwrap().holds);
        let el = verify_el_labeling(&lab).unwrap();
        assert!(!el.holds);
        assert_eq!(
            el.failures,
            vec![LabelingFailure::NotLexFirst { lo: 0, hi: 3, rising: vec![1, 5], other: vec![0, -1] }]
        );
    }

    #[test]
    fn constant_labeling_is_not_er() {
        let l = Lattice::build(4).unwrap();
        let lab = EdgeLabeling::from_fn(&l, |_, _| 7);
        let v = verify_er_labeling(&lab).unwrap();
        assert!(!v.holds);
        assert!(!verify_el_labeling(&lab).unwrap().holds);
    }

    #[test]
    fn partial_and_bogus_labelings_rejected() {
        let l = Lattice::build(3).unwrap();
        let mut labels: BTreeMap<(usize, usize), i64> = l.cover_edges().into_iter().map(|e| (e, 0)).collect();
        let first = *labels.keys().next().unwrap();
        labels.remove(&first);
        assert!(EdgeLabeling::new(&l, labels.clone()).is_err());
        labels.insert(first, 0);
        labels.insert((0, l.top()), 1);
        assert!(EdgeLabeling::new(&l, labels).is_err());
    }

    #[test]
    fn text_round_trip() {
        let l = Lattice::build(3).unwrap();
        let lab = element_added_labeling(&l).unwrap();
        let parsed = EdgeLabeling::parse(&l, &lab.to_text()).unwrap();
        assert_eq!(parsed.to_text(), lab.to_text());
        assert!(EdgeLabeling::parse(&l, "0 1").is_err());
        assert!(EdgeLabeling::parse(&l, "# nothing\n").is_err());
    }

    #[test]
    fn bound_enforced() {
        let l = Lattice::build(8).unwrap();
        let lab = EdgeLabeling::from_fn(&l, |_, _| 0);
        assert!(verify_er_labeling(&lab).is_err());
    }
}
