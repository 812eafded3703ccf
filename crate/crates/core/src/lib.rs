//! Exact and bounded guessing numbers of undirected graphs.
//!
//! A guessing game on a graph assigns each vertex one of `s` colors; each
//! vertex must guess its own color from the colors of its neighbors, and
//! every vertex must be right at once. The guessing number `gn(G, s)` is the
//! base-`s` logarithm of the largest family of colorings on which some
//! strategy succeeds — equivalently, the largest set of colorings in which
//! every vertex's color is determined by its neighborhood.
//!
//! This crate computes that quantity exactly at small scale and brackets it
//! elsewhere:
//!
//! * [`graph`] — graph type, the standard families, graph6 I/O, canonical
//!   forms, and exhaustive enumeration up to isomorphism;
//! * [`invariants`] — independence, matching, chromatic and clique-cover
//!   numbers with certificates, and the resulting guessing-number sandwich;
//! * [`guessing`] — fixed-point codes, protocols, exact `gn(G, s)`, and the
//!   dominating-vertex strategy extension;
//! * [`entropy`] — an exact rational LP over the Shannon polytope giving
//!   alphabet-independent upper bounds;
//! * [`extremal`] — extremal and saturation searches for bounded guessing
//!   number, the named constructions, and minimal forbidden families.
//!
//! The `book/` directory of the repository walks through the theory with
//! runnable examples; those snippets compile and run as doc-tests of this
//! crate (see the [`guide`] module).

pub mod entropy;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod guessing;
pub mod invariants;

mod guide;


pub use error::{Error, Result};
