//! Graph families that achieve the capacity lower bound.
//!
//! All builders take the vertex count `n` and the locality budget `r` and
//! require `n >= 2` and `2 <= r <= n - 1`. Locality is an upper bound: for
//! some `(n, r)` every part is smaller than `r + 1` and the maximum degree
//! ends up below `r`.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partition of `1..=n` into consecutive intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionPlan {
    n: usize,
    parts: Vec<RangeInclusive<usize>>,
}

impl PartitionPlan {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[RangeInclusive<usize>] {
        &self.parts
    }

    /// Number of parts.
    pub fn p(&self) -> usize {
        self.parts.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|r| r.end() + 1 - r.start()).collect()
    }

    /// Parts of size `r + 1` followed by one remainder part (which may hold a
    /// single vertex).
    fn uniform(n: usize, r: usize) -> Self {
        let block = r + 1;
        let parts = (0..n.div_ceil(block))
            .map(|i| i * block + 1..=((i + 1) * block).min(n))
            .collect();
        Self { n, parts }
    }
}

/// `⌈n / (r + 1)⌉`.
pub fn part_count(n: usize, r: usize) -> usize {
    n.div_ceil(r + 1)
}

pub(crate) fn check_params(n: usize, r: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2, got n = {n}"
        )));
    }
    if r < 2 || r > n - 1 {
        return Err(Error::InvalidParameters(format!(
            "need 2 <= r <= n - 1, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// Partition used by [`clique_partition`]: parts of size `r + 1` and a
/// remainder, except that when `n ≡ 1 (mod r + 1)` the would-be singleton is
/// avoided by shrinking the second-to-last part to `r` and ending with a part
/// of size 2. Every part has between 2 and `r + 1` vertices.
pub fn partition_plan(n: usize, r: usize) -> Result<PartitionPlan> {
    check_params(n, r)?;
    let block = r + 1;
    if n % block != 1 {
        return Ok(PartitionPlan::uniform(n, r));
    }
    let p = part_count(n, r);
    let mut parts: Vec<_> = (1..=p - 2)
        .map(|i| (i - 1) * block + 1..=i * block)
        .collect();
    parts.push((p - 2) * block + 1..=(p - 1) * block - 1);
    parts.push((p - 1) * block..=n);
    Ok(PartitionPlan { n, parts })
}

/// Disjoint union of cliques on the parts of [`partition_plan`].
///
/// The augmented adjacency matrix has one distinct row per part, so its rank
/// is exactly `⌈n / (r + 1)⌉`.
pub fn clique_partition(n: usize, r: usize) -> Result<Graph> {
    let plan = partition_plan(n, r)?;
    Graph::from_edges(
        n,
        plan.parts()
            .iter()
            .flat_map(|part| clique_edges(part.clone())),
    )
}

/// Connected graph with locality `r` and rank at most `3⌈n / (r + 1)⌉`.
///
/// Vertices are cut into parts of size `r + 1` plus a remainder. Each full
/// part is a clique minus the edge between its first and last vertex, and the
/// last vertex of part `i` is bridged to the first vertex of part `i + 1`.
/// The final part is handled by size:
///
/// * 3 or more: clique minus the first-last edge, as above;
/// * 2: its two vertices are joined to each other;
/// * 1: the vertex hangs off the bridge from the previous part only.
pub fn connected_chain(n: usize, r: usize) -> Result<Graph> {
    check_params(n, r)?;
    let plan = PartitionPlan::uniform(n, r);
    let (last, full) = plan
        .parts()
        .split_last()
        .expect("n >= 2 gives at least one part");
    let mut edges = Vec::new();
    for part in full {
        let (first, end) = (*part.start(), *part.end());
        edges.extend(clique_edges(part.clone()).filter(|&e| e != (first, end)));
        edges.push((end, end + 1));
    }
    let (first, end) = (*last.start(), *last.end());
    match end + 1 - first {
        1 => {}
        2 => edges.push((first, end)),
        _ => edges.extend(clique_edges(last.clone()).filter(|&e| e != (first, end))),
    }
    Graph::from_edges(n, edges)
}

/// The complete graph `K_n`, whose code is the single parity check code.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2, got n = {n}"
        )));
    }
    Graph::from_edges(n, clique_edges(1..=n))
}

fn clique_edges(part: RangeInclusive<usize>) -> impl Iterator<Item = (usize, usize)> {
    let (lo, hi) = (*part.start(), *part.end());
    (lo..=hi).flat_map(move |u| (u + 1..=hi).map(move |v| (u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_sizes() {
        assert_eq!(partition_plan(19, 5).unwrap().sizes(), [6, 6, 5, 2]);
        assert_eq!(partition_plan(23, 5).unwrap().sizes(), [6, 6, 6, 5]);
        assert_eq!(partition_plan(6, 5).unwrap().sizes(), [6]);
        // n ≡ 1 (mod r + 1) with p = 2
        assert_eq!(partition_plan(5, 3).unwrap().sizes(), [3, 2]);
        assert_eq!(partition_plan(4, 2).unwrap().sizes(), [2, 2]);
    }

    #[test]
    fn plan_19_5_intervals() {
        let plan = partition_plan(19, 5).unwrap();
        assert_eq!(plan.parts(), &[1..=6, 7..=12, 13..=17, 18..=19]);
        assert_eq!(plan.p(), part_count(19, 5));
    }

    #[test]
    fn parameter_errors() {
        for (n, r) in [(5, 10), (5, 5), (5, 1), (1, 2), (2, 1), (0, 0)] {
            assert!(
                matches!(partition_plan(n, r), Err(Error::InvalidParameters(_))),
                "{n} {r}"
            );
            assert!(clique_partition(n, r).is_err());
            assert!(connected_chain(n, r).is_err());
        }
        assert!(complete(1).is_err());
    }

    #[test]
    fn clique_partition_full_range_is_complete_graph() {
        for n in 3..12 {
            assert_eq!(clique_partition(n, n - 1).unwrap(), complete(n).unwrap());
        }
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete(2).unwrap().edges(), vec![(1, 2)]);
        assert_eq!(complete(3).unwrap().edges(), vec![(1, 2), (1, 3), (2, 3)]);
        let k6 = complete(6).unwrap();
        assert!(k6.vertices().all(|v| k6.degree(v) == 5));
    }

    #[test]
    fn chain_single_part() {
        // n = r + 1: one part, clique minus (1, n)
        let g = connected_chain(4, 3).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert!(g.is_connected());
    }
}
