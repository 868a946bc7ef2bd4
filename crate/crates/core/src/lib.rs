//! Exact solvers for the maximum weighted digraph partition problem.
//!
//! An instance is a digraph whose arcs carry a nonnegative cost and a 2x2
//! matrix; the weight of a bipartition `(X1, X2)` sums, over all arcs, the
//! cost times the matrix entry selected by the sides of the tail and head.
//!
//! * [`classify`] decides whether a matrix family is tractable.
//! * [`solve_poly`] holds the polynomial solvers (trivial and min-cut) and
//!   the dispatcher [`solve`].
//! * [`solve_exact`] holds exhaustive search and local search.
//! * [`reductions`] builds the hardness gadgets as concrete instances.
//! * [`apps`] maps games and graph problems onto instances.
//! * [`random`] generates seeded instances for tests and benchmarks.

pub mod apps;
pub mod classify;
pub mod error;
mod eval;
pub mod flow;
pub mod graph;
pub mod instance;
pub mod matrix;
pub mod partition;
pub mod random;
pub mod rational;
pub mod reductions;
pub mod solve_exact;
pub mod solve_poly;

pub use classify::{classify, Case, PropertyFlags, Verdict, Witnesses};
pub use error::{Error, Result};
pub use instance::{validate, Arc, Instance, InstanceBuilder, Kind, RawArc, RawInstance};
pub use matrix::{Matrix2x2, Property};
pub use partition::{arc_weight, partition_weight, Partition, Side};
pub use rational::Rational;
pub use solve_exact::{brute_force, brute_force_with, exhaustive_with_separator, local_search, TieBreak};
pub use solve_poly::{
    build_cut_graph, min_st_cut, solve, solve_mincut, solve_trivial_b, solve_trivial_c,
    solve_with, CutGraph, Method, MinCut, Solution, SolveOptions, Strategy,
    DEFAULT_BRUTE_FORCE_CAP,
};
