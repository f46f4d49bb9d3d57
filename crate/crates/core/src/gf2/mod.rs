//! Dense linear algebra over GF(2).
//!
//! Vectors and matrices are bit-packed into 64-bit words. The word size is an
//! internal detail: every public index and length is in logical bits.

mod matrix;
mod vector;

pub use matrix::BitMatrix;
pub use vector::BitVector;
