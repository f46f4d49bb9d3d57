//! The binary storage code supported by a graph under parity repair.
//!
//! A word `c ∈ {0,1}^n` is a codeword iff every vertex stores the XOR of its
//! neighbours: `c_v = Σ_{u ∈ N(v)} c_u`. Equivalently `Ā · c = 0` where `Ā` is
//! the augmented adjacency matrix, so the code is the nullspace of `Ā` and its
//! rate is `1 - rank(Ā) / n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::Graph;
use crate::Rational;

#[derive(Clone, Debug)]
pub struct StorageCode {
    graph: Graph,
    parity: BitMatrix,
    rank: usize,
    basis: Vec<BitVector>,
}

/// Serializable summary of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub n: usize,
    /// Locality, i.e. the maximum degree of the graph.
    pub r: usize,
    pub rank: usize,
    pub dimension: usize,
    pub rate_num: u64,
    pub rate_den: u64,
}

impl StorageCode {
    /// Derives the code of `graph`. Graphs with an isolated vertex are
    /// rejected: that server would have nobody to query.
    pub fn build(graph: Graph) -> Result<Self> {
        if let Some(v) = graph.isolated_vertices().next() {
            return Err(Error::IsolatedVertex(v));
        }
        let parity = graph.augmented_adjacency();
        let basis = parity.nullspace_basis();
        let rank = graph.n() - basis.len();
        Ok(Self {
            graph,
            parity,
            rank,
            basis,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Parity-check matrix `Ā`.
    pub fn parity(&self) -> &BitMatrix {
        &self.parity
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dimension(&self) -> usize {
        self.n() - self.rank
    }

    pub fn locality(&self) -> usize {
        self.graph.max_degree()
    }

    /// Exact rate `dimension / n`.
    pub fn rate(&self) -> Rational {
        Rational::new(self.dimension() as u64, self.n() as u64)
    }

    /// Generator basis: the canonical nullspace basis of `Ā`.
    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    pub fn summary(&self) -> CodeSummary {
        let rate = self.rate();
        CodeSummary {
            n: self.n(),
            r: self.locality(),
            rank: self.rank,
            dimension: self.dimension(),
            rate_num: *rate.numer(),
            rate_den: *rate.denom(),
        }
    }

    fn check_len(&self, c: &BitVector) -> Result<()> {
        if c.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: c.len(),
            });
        }
        Ok(())
    }

    fn neighborhood_parity(&self, c: &BitVector, v: usize) -> bool {
        self.graph
            .neighbors(v)
            .iter()
            .fold(false, |acc, &u| acc ^ c.get(u - 1))
    }

    /// First vertex whose stored bit differs from its neighbourhood parity.
    pub fn first_violation(&self, c: &BitVector) -> Result<Option<usize>> {
        self.check_len(c)?;
        Ok(self
            .graph
            .vertices()
            .find(|&v| c.get(v - 1) != self.neighborhood_parity(c, v)))
    }

    pub fn is_codeword(&self, c: &BitVector) -> Result<bool> {
        Ok(self.first_violation(c)?.is_none())
    }

    /// XOR of the basis vectors selected by `message`.
    pub fn encode(&self, message: &BitVector) -> Result<BitVector> {
        if message.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: message.len(),
            });
        }
        let mut word = BitVector::zeros(self.n());
        for i in message.ones() {
            word.xor_assign(&self.basis[i])?;
        }
        Ok(word)
    }

    /// All `2^dimension` codewords, provided that count is at most `limit`.
    ///
    /// Message index `m` is encoded with message bit `i` equal to bit
    /// `dimension - 1 - i` of `m`, so the output follows the lexicographic
    /// order of the message strings.
    pub fn enumerate_codewords(&self, limit: u64) -> Result<Vec<BitVector>> {
        let k = self.dimension();
        let exceeded = Error::LimitExceeded {
            dimension: k,
            limit: limit.into(),
        };
        if k >= 64 {
            return Err(exceeded);
        }
        let count = 1u64 << k;
        if count > limit {
            return Err(exceeded);
        }
        (0..count)
            .map(|m| {
                let message = BitVector::from_bools((0..k).map(|i| (m >> (k - 1 - i)) & 1 == 1));
                self.encode(&message)
            })
            .collect()
    }

    /// Recovers the bit of `failed` by asking `read` for each neighbour's bit.
    ///
    /// `read` is called exactly once per neighbour, in ascending order, and
    /// never for `failed` itself.
    pub fn repair_with<F>(&self, failed: usize, mut read: F) -> Result<bool>
    where
        F: FnMut(usize) -> bool,
    {
        if failed == 0 || failed > self.n() {
            return Err(Error::IndexOutOfRange {
                index: failed,
                min: 1,
                max: self.n(),
            });
        }
        Ok(self
            .graph
            .neighbors(failed)
            .iter()
            .fold(false, |acc, &u| acc ^ read(u)))
    }

    /// Parity repair from a stored word. The word is trusted: only the
    /// neighbours of `failed` are read.
    pub fn repair(&self, stored: &BitVector, failed: usize) -> Result<bool> {
        self.check_len(stored)?;
        self.repair_with(failed, |u| stored.get(u - 1))
    }

    /// Like [`repair`](Self::repair), but first checks that `stored` is a
    /// codeword.
    pub fn repair_checked(&self, stored: &BitVector, failed: usize) -> Result<bool> {
        if let Some(v) = self.first_violation(stored)? {
            return Err(Error::NotCodeword(v));
        }
        self.repair(stored, failed)
    }
}

/// `rank(Ā(g))` computed one connected component at a time.
///
/// `Ā` is block diagonal up to a vertex permutation, so the rank is the sum
/// of the component ranks. Much cheaper than a full elimination for graphs
/// made of many small components.
pub fn rank_by_components(g: &Graph) -> usize {
    // slot[v] is the row of vertex v inside its component's matrix
    let mut slot = vec![0usize; g.n() + 1];
    g.components()
        .iter()
        .map(|comp| {
            for (i, &v) in comp.iter().enumerate() {
                slot[v] = i;
            }
            let mut m = BitMatrix::identity(comp.len()).expect("components are non-empty");
            for (i, &v) in comp.iter().enumerate() {
                for &u in g.neighbors(v) {
                    m.set(i, slot[u], true);
                }
            }
            m.rank()
        })
        .sum()
}
