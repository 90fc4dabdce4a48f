//! Exact solving and analysis for two-player labeling games on small
//! graphs. Players alternately place labels on vertices and/or edges
//! under a structural rule (magic weights, distance gaps, distinct edge
//! differences or sums, locally distinct weights); winning conventions
//! cover last-move (normal and misere), board-completion, and explicit
//! goal predicates, with biased move schedules and one-sided legality.
//!
//! - [`graph`]: small simple graphs, generators, graph6 I/O, distances,
//!   brute-force automorphisms.
//! - [`games`]: game specifications, positions, and the move/outcome
//!   rules for every variant and convention.
//! - [`solver`]: exhaustive perfect-play solving with a transposition
//!   table over symmetry-canonical keys, plus a plain recursion oracle.
//! - [`analysis`]: batch experiments — minimal spans, monotonicity and
//!   implication scans, trend tables, and a fixed verification suite.
//! - [`parallel`]: the data-parallel map the batch layers run on, with a
//!   sequential fallback when the `parallel` feature is disabled.

pub mod analysis;
pub mod games;
pub mod graph;
pub mod parallel;
pub mod solver;
