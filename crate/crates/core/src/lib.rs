//! Exact combinatorics of classical, free, Boolean and monotone cumulants.
//!
//! The crate expresses each cumulant family as an exact polynomial in formal
//! moment symbols `m_S` (one symbol per nonempty subset `S` of `[n]`) and
//! checks the conversion formulas between the families as polynomial
//! identities. The supporting machinery lives in separate modules:
//!
//! * [`algebra`]: rationals, univariate polynomials, truncated power series,
//!   Bernoulli numbers and the moment-polynomial ring.
//! * [`partitions`]: set partitions, their classes, closures, lattice
//!   operations and Möbius functions.
//! * [`forests`]: nesting forests, tree factorials and labelling polynomials.
//! * [`graphs`]: crossing and anti-interval graphs, Tutte evaluations,
//!   acyclic orientations and heaps.
//! * [`permutations`]: runs, cycle runs, Eulerian numbers and the bijections
//!   between cyclic permutations and pyramidal heaps.
//! * [`cumulants`]: cumulant polynomials, the β coefficients, transforms and
//!   the identity catalog.
//!
//! No floating point is used anywhere.

pub mod algebra;
pub mod cli;
pub mod cumulants;
mod error;
pub mod forests;
pub mod graphs;
pub mod partitions;
pub mod permutations;

pub use error::{Error, Result};
