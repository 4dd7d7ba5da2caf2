//! Totient sums over finite groups.
//!
//! For a finite group `G`, `phi(G)` is the sum of `phi(o(g))` over its
//! elements. This crate computes that invariant on Cayley-table groups,
//! builds directed power graphs, and checks by brute force the inequalities
//! relating `phi(G)` to the cyclic group of the same order, the rational
//! quantity `Q`, and normal cyclic Sylow subgroups.
//!
//! - [`numtheory`]: factorization, totients, `Q`, exact inequality checks.
//! - [`groups`]: Cayley tables, constructions, subgroups, Sylow subgroups.
//! - [`powergraph`]: directed power graphs and their exports.
//! - [`verify`]: executable statements and verification reports.

pub mod groups;
pub mod numtheory;
pub mod powergraph;
pub mod verify;

pub use groups::{FiniteGroup, GroupError, GroupFactory, GroupSpec, SemidirectSpec, Subgroup};
pub use numtheory::{ExactRational, Factorization, NumberError};
pub use powergraph::PowerGraph;
