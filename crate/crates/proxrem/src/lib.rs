//! Proximity and remoteness in triangle-free and C4-free graphs.
//!
//! The average distance of a vertex `v` in a connected graph of order `n` is
//! `sigma(v)/(n-1)`, where `sigma(v)` is the sum of distances from `v` to all
//! other vertices. The *proximity* `pi(G)` is the smallest average distance of
//! a vertex, the *remoteness* `rho(G)` the largest. This crate provides:
//!
//! - exact (rational) computation of these invariants and their relatives
//!   ([`graph`]);
//! - the distance-degree sequence machinery that drives sharp upper bounds on
//!   proximity and remoteness under triangle-freeness or C4-freeness:
//!   constraint families, extremal sequence constructors, and an independent
//!   branch-and-bound maximizer ([`seq`], [`family`], [`extremal`],
//!   [`search`]);
//! - graph constructions realizing the extremal sequences: layered joins,
//!   palindromic layered graphs, and the GF(q) polarity-graph pipeline used in
//!   the C4-free constructions ([`layered`], [`gf`], [`polarity`]);
//! - a bound catalog and audit machinery that measures a graph against every
//!   applicable bound with exact arithmetic, distinguishing
//!   *sequence-certified* bounds (computed from an extremal sequence, and
//!   operative) from *closed-form-as-stated* bounds (informational)
//!   ([`bounds`], [`audit`]);
//! - an edge-list text format ([`edgelist`]) and a thin CLI
//!   (`proxrem`, see [`cli`]) exposing all of the above.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example graph_metrics`.

pub mod audit;
pub mod bounds;
pub mod cli;
pub mod edgelist;
pub mod extremal;
pub mod family;
pub mod gf;
pub mod graph;
pub mod layered;
pub mod polarity;
pub mod search;
pub mod seq;

pub use bounds::Rational;
pub use family::{ConstraintFamily, FamilyKind, FamilyReport};
pub use graph::{DistanceVector, Graph, SpanningTree};
pub use seq::DistSeq;
