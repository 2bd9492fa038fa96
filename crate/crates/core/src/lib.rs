//! Judicious bipartitions, good bisections and graphic-sequence
//! realizations.
//!
//! The modules mirror the layers of the toolkit:
//!
//! - [`graph`]: labeled graphs, bipartitions, bisections and their statistics.
//! - [`degseq`]: degree sequences, laying off, graphicality.
//! - [`realization`]: realizations whose parity bisection is good.
//! - [`multipartite`]: good bisections of complete multipartite graphs.
//! - [`bounds`]: `t(m)` bounds, exact and heuristic judicious bipartitions.
//! - [`counterexamples`]: the triple-clique family and its integer pairs.
//! - [`io`]: file formats.

pub mod bounds;
pub mod counterexamples;
pub mod degseq;
pub mod error;
pub mod exact;
pub mod graph;
pub mod io;
pub mod multipartite;
pub mod realization;

pub use error::{Error, Result};
