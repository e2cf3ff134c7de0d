use std::fmt::Write;

use serde::Serialize;

use super::Lattice;

#[derive(Serialize)]
struct LatticeJson {
    n: u32,
    elements: Vec<Vec<u32>>,
    cover_edges: Vec<(usize, usize)>,
}

impl Lattice {
    /// Hasse diagram in Graphviz DOT, edges pointing from covered to covering
    /// element.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph L{} {{", self.n).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=plaintext];").unwrap();
        for (id, p) in self.elements.iter().enumerate() {
            writeln!(out, "  {id} [label=\"{}\"];", p.render(self.n)).unwrap();
        }
        for (lo, hi) in self.cover_edges() {
            writeln!(out, "  {lo} -> {hi};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = LatticeJson {
            n: self.n,
            elements: self.elements.iter().map(|p| p.elements()).collect(),
            cover_edges: self.cover_edges(),
        };
        serde_json::to_string_pretty(&doc).expect("lattice serializes")
    }
}
