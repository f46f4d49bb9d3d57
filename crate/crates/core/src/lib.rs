//! Binary storage codes on graphs with parity repair.
//!
//! Each vertex of a graph is a storage server holding one bit, and a failed
//! server restores its bit as the XOR of its neighbours' bits. The words that
//! survive every such repair form a linear code: the nullspace of the graph's
//! augmented adjacency matrix. Its rate is `1 - rank/n` and its locality is
//! the maximum degree.
//!
//! Modules:
//!
//! * [`gf2`]: bit-packed vectors and matrices over GF(2).
//! * [`graph`]: simple graphs, augmented adjacency, edge-list and DOT formats.
//! * [`constructions`]: clique-partition, chained-clique and complete graphs.
//! * [`code`]: the storage code of a graph, encoding and single-bit repair.
//! * [`bounds`]: capacity bounds and rank certificates.
//! * [`sim`]: sequential single-failure repair simulation.
//! * [`sweep`]: rate tables over ranges of `n`.

pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod sim;
pub mod sweep;

pub use bounds::{
    capacity_bounds, rank_certificate, verify_certificate, CapacityBounds, Pick, RankCertificate,
};
pub use code::{CodeSummary, StorageCode};
pub use error::{Error, ErrorKind, Result};
pub use gf2::{BitMatrix, BitVector};
pub use graph::Graph;

/// Exact rational used for rates and bounds.
pub type Rational = num_rational::Ratio<u64>;

/// Formats a rational as `num/den`, keeping the denominator even when it is 1.
pub fn ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Lossy conversion for plotting columns.
pub fn ratio_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
