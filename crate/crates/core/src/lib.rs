//! Recognition algorithms for the well-covered graph hierarchy.
//!
//! The crate covers well-covered graphs, the `W_k` hierarchy, `k`-extendable
//! and `E_s` graphs, B-graphs and shedding vertices, through three routes:
//!
//! * [`recognizers`]: exact brute-force checks written from the definitions,
//! * [`oracle`]: the independence-number binary search and partial
//!   extendability test over a pluggable SAT oracle,
//! * [`chordal`]: linear-time characterizations for chordal inputs.
//!
//! [`gadgets`] builds the reduction instances that tie the hierarchy to
//! 3-SAT, MIS-equality and dominating set, and [`verify`] checks their
//! claimed equivalences exhaustively on small instances.

pub mod bitset;
pub mod chordal;
pub mod cnf;
pub mod domination;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod mis;
pub mod oracle;
pub mod recognizers;
pub mod verdict;
pub mod verify;

pub use cnf::{Assignment, CnfError, CnfFormula, Evaluation};
pub use graph::{Graph, GraphError, InducedSubgraph, VertexSet};
pub use recognizers::{ClassQuery, RecognizerError};
pub use verdict::{Certificate, CertificateError, RemovalWitness, Verdict};
