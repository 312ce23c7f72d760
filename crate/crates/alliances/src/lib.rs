//! Exact computation of defensive-alliance numbers of graphs and of their
//! line graphs.
//!
//! A nonempty vertex set S is a defensive alliance when every member has,
//! counting itself, at least as many neighbors inside S as outside; strong,
//! global and connected variants tighten that condition. This crate
//! computes the six resulting minimum-cardinality numbers exactly, with
//! witnesses, and ships the degree-based bounds, closed forms and
//! small-value classifiers that govern them on line graphs, together with
//! a verification harness that cross-checks everything against a
//! brute-force oracle on exhaustive small-graph corpora.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `alliances` command-line tool.

pub mod bitset;
pub mod bounds;
pub mod corpus;
pub mod edgelist;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod kernel;
pub mod linegraph;
pub mod metrics;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use bitset::VertexSet;
pub use bounds::{bound_report, BoundReport, SmallAllianceClass};
pub use family::GraphFamily;
pub use graph::Graph;
pub use kernel::AllianceKind;
pub use linegraph::{line_graph, LineGraph};
pub use metrics::{metrics, Metrics};
pub use oracle::brute_force_oracle;
pub use solver::{line_alliance_number, min_alliance, Budget, SolveResult};
