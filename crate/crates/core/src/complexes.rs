//! Chain counts in `L_n` and the simplicial complexes built from it: the
//! order complex `Δ_n` of the proper part and the coatom cross-cut complex.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{count_progressions_formula, Lattice};
use crate::structure::coatoms;

/// `b(m, k)`: chains of length `k` in `L_m` containing both `∅` and `[m]`,
/// for `0 <= m <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTable {
    n: u32,
    b: Vec<Vec<u128>>,
}

impl ChainTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Zero outside the table.
    pub fn get(&self, m: u32, k: u32) -> u128 {
        self.b.get(m as usize).and_then(|row| row.get(k as usize)).copied().unwrap_or(0)
    }

    /// `b(m, 1), …, b(m, m)`.
    pub fn row(&self, m: u32) -> &[u128] {
        match self.b.get(m as usize) {
            Some(row) if m > 0 => &row[1..],
            _ => &[],
        }
    }
}

/// Fills `b(m, k) = Σ_{i=1}^{m-1} w(m, i) b(i, k-1)` with `b(m, 1) = 1`.
/// With `w = p_{mi}` this counts chains in `L_m`; with binomial weights it
/// counts chains in the boolean lattice.
pub fn chain_counts_from<W>(n: u32, mut weight: W) -> Result<ChainTable>
where
    W: FnMut(u32, u32) -> Result<u128>,
{
    let mut b: Vec<Vec<u128>> = vec![vec![1]];
    for m in 1..=n {
        let mut row = vec![0u128; m as usize + 1];
        row[1] = 1;
        for k in 2..=m {
            let mut total: u128 = 0;
            for i in 1..m {
                let prev = b[i as usize].get(k as usize - 1).copied().unwrap_or(0);
                if prev == 0 {
                    continue;
                }
                let term = weight(m, i)?.checked_mul(prev).ok_or(Error::Overflow("chain count"))?;
                total = total.checked_add(term).ok_or(Error::Overflow("chain count"))?;
            }
            row[k as usize] = total;
        }
        b.push(row);
    }
    Ok(ChainTable { n, b })
}

pub fn chain_counts(n: u32) -> Result<ChainTable> {
    if n == 0 {
        return Err(Error::Domain("chain counts start at n = 1".into()));
    }
    chain_counts_from(n, |m, i| Ok(u128::from(count_progressions_formula(m.into(), i.into()))))
}

/// Chain counts by dynamic programming over the lattice order itself:
/// entry `k` is the number of chains `∅ = x_0 < … < x_k = [n]`.
pub fn enumerate_chain_counts(lattice: &Lattice) -> Result<Vec<u128>> {
    let len = lattice.len();
    let n = lattice.n() as usize;
    let mut counts = vec![vec![0u128; n + 1]; len];
    counts[0][0] = 1;
    for z in 1..len {
        for w in 0..z {
            if !lattice.lt(w, z) {
                continue;
            }
            for k in 1..=n {
                let add = counts[w][k - 1];
                counts[z][k] = counts[z][k].checked_add(add).ok_or(Error::Overflow("chain enumeration"))?;
            }
        }
    }
    Ok(counts[lattice.top()].clone())
}

/// An abstract simplicial complex stored with all of its faces, the empty
/// face included. Vertices are dense indices; `translation[v]` records the
/// lattice id a vertex came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces_by_dim: Vec<Vec<Vec<usize>>>,
    translation: Vec<usize>,
}

impl SimplicialComplex {
    /// Sorts faces and checks downward closure.
    fn new(vertex_count: usize, mut faces_by_dim: Vec<Vec<Vec<usize>>>, translation: Vec<usize>) -> Result<Self> {
        while faces_by_dim.last().is_some_and(|d| d.is_empty()) {
            faces_by_dim.pop();
        }
        for faces in &mut faces_by_dim {
            faces.sort();
            faces.dedup();
        }
        let complex = SimplicialComplex { vertex_count, faces_by_dim, translation };
        if !complex.is_downward_closed() {
            return Err(Error::Internal("face set is not closed under taking subsets".into()));
        }
        Ok(complex)
    }

    /// The smallest complex containing every generator, on vertices
    /// `0..vertex_count`.
    pub fn from_generators<I>(vertex_count: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for mut g in generators {
            g.sort_unstable();
            g.dedup();
            if g.iter().any(|&v| v >= vertex_count) {
                return Err(Error::Domain(format!("face {g:?} uses a vertex outside 0..{vertex_count}")));
            }
            if g.len() > 24 {
                return Err(Error::Domain("generator too large to close downward".into()));
            }
            for mask in 1u32..(1 << g.len()) {
                seen.insert((0..g.len()).filter(|i| mask >> i & 1 == 1).map(|i| g[i]).collect());
            }
        }
        let mut faces_by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for f in seen {
            let d = f.len() - 1;
            if faces_by_dim.len() <= d {
                faces_by_dim.resize(d + 1, Vec::new());
            }
            faces_by_dim[d].push(f);
        }
        Self::new(vertex_count, faces_by_dim, (0..vertex_count).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn includes_empty_face(&self) -> bool {
        true
    }

    /// `-1` when only the empty face is present.
    pub fn dimension(&self) -> isize {
        self.faces_by_dim.len() as isize - 1
    }

    /// Faces of dimension `d`, lexicographically sorted; the single empty
    /// face for `d = -1`.
    pub fn faces(&self, d: isize) -> Vec<Vec<usize>> {
        match d {
            -1 => vec![Vec::new()],
            _ if d < -1 => Vec::new(),
            _ => self.faces_by_dim.get(d as usize).cloned().unwrap_or_default(),
        }
    }

    pub fn faces_ref(&self, d: usize) -> &[Vec<usize>] {
        self.faces_by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    pub fn translation(&self) -> &[usize] {
        &self.translation
    }

    pub fn is_downward_closed(&self) -> bool {
        let sets: Vec<HashSet<&Vec<usize>>> = self.faces_by_dim.iter().map(|d| d.iter().collect()).collect();
        for (d, faces) in self.faces_by_dim.iter().enumerate() {
            for f in faces {
                if f.len() != d + 1 || f.windows(2).any(|w| w[0] >= w[1]) || f.iter().any(|&v| v >= self.vertex_count) {
                    return false;
                }
                if d == 0 {
                    continue;
                }
                for skip in 0..f.len() {
                    let sub: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    if !sets[d - 1].contains(&sub) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct ComplexJson {
            vertices: Vec<usize>,
            faces_by_dim: BTreeMap<isize, Vec<Vec<usize>>>,
            translation: Vec<usize>,
        }
        let faces_by_dim = (-1..=self.dimension()).map(|d| (d, self.faces(d))).collect();
        let doc = ComplexJson { vertices: (0..self.vertex_count).collect(), faces_by_dim, translation: self.translation.clone() };
        serde_json::to_string_pretty(&doc).expect("complex serializes")
    }
}

/// The order complex of `L_n ∖ {∅, [n]}`: vertex `v` is lattice id `v + 1`,
/// faces are chains.
pub fn order_complex(lattice: &Lattice) -> Result<SimplicialComplex> {
    if lattice.n() < 2 {
        return Err(Error::Domain(format!("the proper part of L_{} is empty", lattice.n())));
    }
    let proper: Vec<usize> = (1..lattice.top()).collect();
    let vertex_count = proper.len();
    let above: Vec<Vec<usize>> = proper
        .iter()
        .map(|&a| proper.iter().filter(|&&b| lattice.lt(a, b)).map(|&b| b - 1).collect())
        .collect();
    let mut faces_by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut chain = Vec::new();
    fn extend(above: &[Vec<usize>], chain: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let d = chain.len() - 1;
        if out.len() <= d {
            out.push(Vec::new());
        }
        out[d].push(chain.clone());
        let last = *chain.last().unwrap();
        for &next in &above[last] {
            chain.push(next);
            extend(above, chain, out);
            chain.pop();
        }
    }
    for v in 0..vertex_count {
        chain.push(v);
        extend(&above, &mut chain, &mut faces_by_dim);
        chain.pop();
    }
    SimplicialComplex::new(vertex_count, faces_by_dim, proper)
}

/// Whether `set` is a cross-cut: an antichain avoiding `∅` and `[n]` that
/// meets every maximal chain.
pub fn is_crosscut(lattice: &Lattice, set: &[usize]) -> bool {
    if set.iter().any(|&c| c == lattice.bottom() || c == lattice.top()) {
        return false;
    }
    if set.iter().any(|&a| set.iter().any(|&b| lattice.lt(a, b))) {
        return false;
    }
    // A maximal chain avoiding the set is a cover path from ∅ to [n] through
    // elements outside it.
    let blocked: HashSet<usize> = set.iter().copied().collect();
    let mut seen = vec![false; lattice.len()];
    let mut queue = VecDeque::from([lattice.bottom()]);
    seen[lattice.bottom()] = true;
    while let Some(z) = queue.pop_front() {
        if z == lattice.top() {
            return false;
        }
        for &w in lattice.covers_up(z) {
            if !seen[w] && !blocked.contains(&w) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    true
}

/// The complex on the coatoms whose faces are the non-spanning subsets
/// (those whose meet is not `∅` or whose join is not `[n]`).
pub fn crosscut_complex(lattice: &Lattice) -> Result<SimplicialComplex> {
    if lattice.n() < 4 {
        return Err(Error::Domain(format!("the coatom cross-cut is used for n >= 4, got {}", lattice.n())));
    }
    let cut = coatoms(lattice);
    if !is_crosscut(lattice, &cut) {
        return Err(Error::Internal(format!("coatoms of L_{} do not form a cross-cut", lattice.n())));
    }
    let mut faces_by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); cut.len()];
    for mask in 1u64..(1u64 << cut.len()) {
        let face: Vec<usize> = (0..cut.len()).filter(|i| mask >> i & 1 == 1).collect();
        let meet = lattice.meet_all(face.iter().map(|&i| cut[i]));
        let join = lattice.join_all(face.iter().map(|&i| cut[i]));
        let spanning = meet == lattice.bottom() && join == lattice.top();
        if !spanning {
            faces_by_dim[face.len() - 1].push(face);
        }
    }
    SimplicialComplex::new(cut.len(), faces_by_dim, cut)
}

/// `Σ_d (-1)^d f_d - 1`.
pub fn reduced_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum::<i64>()
        - 1
}
