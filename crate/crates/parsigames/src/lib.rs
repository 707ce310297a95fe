//! Exact combinatorics engine for parsimonious games: constant-sum
//! homogeneous weighted majority games with exactly `n` minimal winning
//! coalitions.
//!
//! The crate converts among the three representations of such games (free
//! binary, free type, minimal homogeneous), certifies the defining properties
//! by brute force, counts self-twin games via modified Pascal triangles, and
//! generates the complete genealogical tree of self-twin games together with
//! its pivot triangles. All arithmetic is exact; weights use unbounded
//! integers.

pub mod census;
pub mod cli;
pub mod error;
pub mod genealogy;
pub mod oracle;
pub mod pivots;
pub mod representations;
pub mod symmetry;

pub use error::{Error, Result};
