//! Reduced integral homology of simplicial complexes.

mod matrix;
mod snf;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};

pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};

/// `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    /// Keyed by dimension. Dimension `-1` appears only for the complex whose
    /// sole face is the empty one.
    pub groups: BTreeMap<isize, HomologyGroup>,
}

impl HomologyResult {
    pub fn group(&self, d: isize) -> Option<&HomologyGroup> {
        self.groups.get(&d)
    }

    /// Ranks `(d, rank)` of the nontrivial free parts.
    pub fn nonzero_ranks(&self) -> Vec<(isize, usize)> {
        self.groups.iter().filter(|(_, g)| g.free_rank > 0).map(|(&d, g)| (d, g.free_rank)).collect()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(|g| g.torsion.is_empty())
    }

    /// `Σ (-1)^d rank H̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups.iter().map(|(&d, g)| if d.rem_euclid(2) == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) }).sum()
    }

    pub fn to_json(&self) -> String {
        let groups: BTreeMap<String, &HomologyGroup> = self.groups.iter().map(|(d, g)| (d.to_string(), g)).collect();
        serde_json::to_string_pretty(&serde_json::json!({ "reduced_homology": groups })).expect("homology serializes")
    }
}

/// `∂_d : C_d → C_{d-1}` with rows indexed by `(d-1)`-faces and columns by
/// `d`-faces, both in the complex's sorted order. `∂_0` maps every vertex
/// to the empty face.
pub fn boundary_matrix(complex: &SimplicialComplex, d: isize) -> IntegerMatrix {
    let cols = complex.faces(d);
    let rows = complex.faces(d - 1);
    let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
    if d < 0 || cols.is_empty() {
        return m;
    }
    if d == 0 {
        for c in 0..cols.len() {
            m.set(0, c, BigInt::from(1));
        }
        return m;
    }
    let index: HashMap<&[usize], usize> = rows.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut sub = Vec::with_capacity(d as usize);
    for (c, face) in cols.iter().enumerate() {
        for skip in 0..face.len() {
            sub.clear();
            sub.extend(face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            let r = index[sub.as_slice()];
            m.set(r, c, BigInt::from(if skip % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

pub fn reduced_homology(complex: &SimplicialComplex) -> Result<HomologyResult> {
    let dim = complex.dimension();
    let mut groups = BTreeMap::new();
    if dim < 0 {
        groups.insert(-1, HomologyGroup { free_rank: 1, torsion: Vec::new() });
        return Ok(HomologyResult { groups });
    }
    // forms[i] is the Smith form of ∂_i for i in 0..=dim+1; ∂_{dim+1} = 0.
    let forms: Vec<SmithForm> = (0..=dim + 1).map(|d| smith_normal_form(&boundary_matrix(complex, d))).collect();
    for d in 0..=dim {
        let f = complex.faces_ref(d as usize).len();
        let rank_out = forms[d as usize].rank;
        let incoming = &forms[d as usize + 1];
        let free_rank = f
            .checked_sub(rank_out + incoming.rank)
            .ok_or_else(|| Error::Internal(format!("boundary ranks exceed f_{d}")))?;
        let torsion = incoming
            .torsion()
            .iter()
            .map(|t| t.to_u64().ok_or(Error::Overflow("torsion coefficient")))
            .collect::<Result<Vec<u64>>>()?;
        groups.insert(d, HomologyGroup { free_rank, torsion });
    }
    Ok(HomologyResult { groups })
}
