//! Digraph packing algorithms: perfect out-forests and Steiner cycle packing.
//!
//! The crate is organised around a single carrier type, [`Digraph`], and a
//! handful of solver modules:
//!
//! * [`digraph`]: representation, text format, structural classes.
//! * [`matching`]: maximum cardinality matching in general graphs.
//! * [`outforest`]: `i`-perfect out-forests (verification, exact search,
//!   the polynomial semicomplete algorithm).
//! * [`steiner`]: S-cycle enumeration and exact `kappa`/`lambda` packing.
//! * [`symmetric`]: the partition/skeleton decision procedure for
//!   internally disjoint S-cycles in symmetric digraphs.
//! * [`reductions`]: hardness gadgets and brute-force oracles for the
//!   source problems (NAE-3-SAT, directed 2-linkage).
//! * [`verify`]: randomized cross-check suites tying the above together.
//!
//! Every search that can blow up takes a [`Budget`]; running out of time is
//! reported as [`Error::BudgetExceeded`] and never confused with a negative
//! answer.

pub mod budget;
pub mod cli;
pub mod digraph;
pub mod error;
pub mod generate;
pub mod matching;
pub mod outforest;
pub mod reductions;
pub mod steiner;
pub mod symmetric;
pub mod verify;

pub use budget::Budget;
pub use digraph::{ClassReport, Digraph, UGraph};
pub use error::{Error, Result};
pub use matching::{maximum_matching, Matching};
pub use outforest::{ForestReport, OutForest};
pub use steiner::{DisjointMode, PackingCertificate, SCycle};
