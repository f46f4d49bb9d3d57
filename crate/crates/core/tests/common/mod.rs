//! Test-only oracles. Nothing here goes through the elimination code in the
//! library: ranks are obtained by counting the row span and codewords by
//! exhaustive search with plain integer bitmasks.

#![allow(dead_code)]

use std::collections::HashSet;

use paritygraph::constructions::{clique_partition, complete, connected_chain};
use paritygraph::{BitMatrix, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Rank as `log2 |row span|`, enumerating every subset of rows in Gray-code
/// order. Only sensible for up to ~20 rows.
pub fn span_rank(m: &BitMatrix) -> usize {
    assert!(m.n_rows() <= 20 && m.n_cols() <= 64);
    let rows: Vec<u64> = (0..m.n_rows())
        .map(|r| {
            (0..m.n_cols())
                .filter(|&c| m.get(r, c))
                .fold(0u64, |acc, c| acc | 1 << c)
        })
        .collect();
    let mut span = HashSet::from([0u64]);
    let mut combo = 0u64;
    for step in 1u32..1 << rows.len() {
        combo ^= rows[step.trailing_zeros() as usize];
        span.insert(combo);
    }
    let size = span.len();
    assert!(size.is_power_of_two());
    size.trailing_zeros() as usize
}

/// Neighbourhood masks with vertex `v` at bit `v - 1`.
pub fn neighbor_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 31);
    g.vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |acc, &u| acc | 1 << (u - 1))
        })
        .collect()
}

/// Every `c ∈ {0,1}^n` with `c_v = ⊕_{u ∈ N(v)} c_u` for all `v`, as
/// strings, sorted.
pub fn brute_force_codewords(g: &Graph) -> Vec<String> {
    let n = g.n();
    assert!(n <= 20);
    let masks = neighbor_masks(g);
    let mut out: Vec<String> = (0u32..1 << n)
        .filter(|&c| (0..n).all(|v| (c >> v & 1) == (c & masks[v]).count_ones() & 1))
        .map(|c| {
            (0..n)
                .map(|v| if c >> v & 1 == 1 { '1' } else { '0' })
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// Random graph on `n >= 2` vertices with maximum degree at most `r >= 2`
/// and no isolated vertex.
///
/// A random matching covers all but possibly one vertex, the leftover vertex
/// is attached to a random vertex of spare degree, then random extra edges
/// are tried under the degree cap.
pub fn random_graph<R: Rng>(n: usize, r: usize, rng: &mut R) -> Graph {
    assert!(n >= 2 && r >= 2);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut degree = vec![0usize; n + 1];
    let mut edges = HashSet::new();
    let add = |u: usize, v: usize, degree: &mut Vec<usize>, edges: &mut HashSet<(usize, usize)>| {
        let key = (u.min(v), u.max(v));
        if u != v && degree[u] < r && degree[v] < r && edges.insert(key) {
            degree[u] += 1;
            degree[v] += 1;
        }
    };
    for pair in order.chunks_exact(2) {
        add(pair[0], pair[1], &mut degree, &mut edges);
    }
    if n % 2 == 1 {
        let last = *order.last().unwrap();
        let partner = order[rng.gen_range(0..n - 1)];
        add(last, partner, &mut degree, &mut edges);
    }
    let extra = rng.gen_range(0..=n * r / 2);
    for _ in 0..extra {
        let u = rng.gen_range(1..=n);
        let v = rng.gen_range(1..=n);
        add(u, v, &mut degree, &mut edges);
    }
    let g = Graph::from_edges(n, edges).unwrap();
    assert!(!g.has_isolated_vertex() && g.max_degree() <= r);
    g
}

/// Every construction output with `n <= n_max`, labelled for messages.
pub fn construction_fixtures(n_max: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.push((format!("complete({n})"), complete(n).unwrap()));
        for r in 2..n {
            out.push((
                format!("clique_partition({n},{r})"),
                clique_partition(n, r).unwrap(),
            ));
            out.push((
                format!("connected_chain({n},{r})"),
                connected_chain(n, r).unwrap(),
            ));
        }
    }
    out
}
