//! Simultaneous feedback vertex set on edge-colored multigraphs.
//!
//! Given a multigraph whose edges carry one of `alpha` colors, find at most `k`
//! vertices whose removal leaves every color class acyclic. The crate provides
//! the graph model, the cleanup reductions, an exact iterative-compression
//! solver, a kernelizer, instance generators from hitting-set style problems,
//! a brute-force oracle and the text formats used by the command-line tool.

pub mod cli;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod kernel;
pub mod matching;
pub mod oracle;
pub mod reductions;
pub mod solver;

pub use graph::{ColorId, ColorView, EdgeColoredGraph, GraphError, OriginTag, VertexId};
pub use oracle::{brute_force_min_simfvs, verify_solution};
pub use reductions::{reduce_exhaustive, ReducedInstance, ReductionTrace, Rule, TraceEvent};
pub use solver::{solve, solve_with, SolverConfig};
