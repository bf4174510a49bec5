//! Hardness gadgets and the brute-force oracles for their source problems.
//!
//! Each constructor returns a labelled digraph so a failing cross-check can
//! be read off vertex by vertex.

mod cnf;
mod linkage;
mod nae;

use std::fmt::Write as _;

use crate::digraph::Digraph;

pub use cnf::{oracle_nae3sat, Clause, CnfInstance, Literal, MAX_ORACLE_VARIABLES};
pub use linkage::{build_linkage_kappa_gadget, oracle_2linkage, split_vertices, LinkageInstance, LinkagePaths};
pub use nae::{build_nae_gadget, forest_from_assignment, lift_forest_gadget, to_one_perfect_gadget, OnePerfectMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetOutput {
    pub digraph: Digraph,
    pub terminal_set: Option<Vec<usize>>,
    pub threshold: Option<usize>,
    pub provenance: String,
}

impl GadgetOutput {
    /// Digraph text format preceded by `#` comment lines for the provenance,
    /// threshold and terminal set. The result parses with [`Digraph::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for line in self.provenance.lines() {
            let _ = writeln!(s, "# {line}");
        }
        if let Some(t) = self.threshold {
            let _ = writeln!(s, "# threshold {t}");
        }
        if let Some(ts) = &self.terminal_set {
            let list: Vec<String> = ts.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "# terminals {}", list.join(","));
        }
        s.push_str(&self.digraph.serialize());
        s
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.digraph.vertex_by_label(label)
    }
}
