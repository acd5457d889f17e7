//! Exact invariants of edge ideals of finite simple graphs.
//!
//! Every graph lives on at most 64 vertices so that a vertex set is a single
//! machine word. On top of that representation the crate computes the
//! independence f-vector, the reduced Hilbert series and h-polynomial, the
//! v-number, and the Castelnuovo–Mumford regularity of `R/I(G)` over the
//! rationals or a prime field (through reduced homology of independence
//! complexes of induced subgraphs). It also builds the attachment
//! constructions `H_n` and `H(v, d)` and enumerates small graphs up to
//! isomorphism.
//!
//! The crate is `no_std` and only needs `alloc`. File IO, parallel scans and
//! the command-line front end live in the `eil` crate.
#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop, clippy::same_item_push)]

extern crate alloc;

pub mod constructions;
mod error;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod invariants;
pub mod poly;
pub mod regularity;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use invariants::{FVector, HilbertSeries};
pub use poly::IntPolynomial;
pub use regularity::FieldSpec;
