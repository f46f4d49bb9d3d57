//! Simple undirected graphs on vertices `1..=n`.
//!
//! Vertex labels are 1-based throughout, matching the partition arithmetic of
//! the constructions. Internally vertex `v` is stored at slot `v - 1`.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// A simple undirected graph: no self-loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    /// `adjacency[v - 1]` is the sorted neighbour list of vertex `v`.
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range labels are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adjacency })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, [])
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n()
    }

    /// Sorted neighbours of `v`.
    ///
    /// # Panics
    /// Panics if `v` is not in `1..=n`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        assert!(
            (1..=self.n()).contains(&v),
            "vertex {v} out of range 1..={}",
            self.n()
        );
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Each undirected edge once as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices()
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&&v| v > u)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    /// The locality of the graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices().filter(|&v| self.degree(v) == 0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.isolated_vertices().next().is_some()
    }

    /// Connected components, each as a sorted vertex list, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Adjacency matrix with every diagonal entry set to 1. Row/column `v - 1`
    /// corresponds to vertex `v`.
    pub fn augmented_adjacency(&self) -> BitMatrix {
        let n = self.n();
        let mut m = BitMatrix::identity(n).expect("graph has at least one vertex");
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                m.set(u - 1, v - 1, true);
            }
        }
        m
    }

    /// Subgraph induced on `vertices` (sorted, distinct), relabelled
    /// `1..=vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut slot = vec![0usize; self.n() + 1];
        for (i, &v) in vertices.iter().enumerate() {
            if v == 0 || v > self.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
            slot[v] = i + 1;
        }
        let edges = vertices.iter().flat_map(|&u| {
            let slot = &slot;
            self.neighbors(u)
                .iter()
                .filter(move |&&w| slot[w] != 0 && w > u)
                .map(move |&w| (slot[u], slot[w]))
        });
        Self::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// Edge-list text: header `"n m"` then one `"u v"` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Graphviz DOT with one `u -- v;` line per undirected edge (`u < v`).
    /// Isolated vertices are listed on their own so the vertex set survives.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in self.isolated_vertices() {
            let _ = writeln!(s, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Parses the edge-list format written by [`Graph::to_edge_list`].
    /// Blank lines and lines starting with `#` are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_pair = |line: usize, text: &str| -> Result<(usize, usize)> {
            let nums: Vec<usize> = text
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse {
                    line,
                    msg: format!("{e}"),
                })?;
            match nums.as_slice() {
                &[a, b] => Ok((a, b)),
                _ => Err(Error::Parse {
                    line,
                    msg: format!("expected two integers, found {}", nums.len()),
                }),
            }
        };
        let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    msg: format!("more than the declared {m} edges"),
                });
            }
            edges.push(parse_pair(line, text)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: header_line,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edges(n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn single_edge_is_k2() {
        let g = Graph::from_edges(2, [(1, 2)]).unwrap();
        assert_eq!(g.augmented_adjacency(), BitMatrix::ones(2, 2).unwrap());
        assert!(!g.has_isolated_vertex());
        assert_eq!(g.max_degree(), 1);
    }

    #[test]
    fn duplicates_are_merged() {
        let a = Graph::from_edges(3, [(1, 2), (2, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(a, path3());
        assert_eq!(a.edge_count(), 2);
    }

    #[test]
    fn rejects_self_loops_and_bad_labels() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 0, n: 3 })
        );
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn path_augmented_rows() {
        let a = path3().augmented_adjacency();
        let rows: Vec<String> = (0..3).map(|r| a.row(r).unwrap().to_string()).collect();
        assert_eq!(rows, ["110", "111", "011"]);
    }

    #[test]
    fn isolated_and_connectivity() {
        let lone = Graph::empty(1).unwrap();
        assert!(lone.has_isolated_vertex());
        assert!(lone.is_connected());
        let g = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![1, 2], vec![3, 4]]);
        assert!(path3().is_connected());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, [(4, 2), (1, 5), (2, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "5 3\n1 5\n2 3\n2 4\n");
        assert_eq!(text.parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert!(matches!("".parse::<Graph>(), Err(Error::Parse { .. })));
        assert!(matches!(
            "3 2\n1 2\n".parse::<Graph>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "3 1\n1 2 3\n".parse::<Graph>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "3 1\n1 x\n".parse::<Graph>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!("3 1\n2 2\n".parse::<Graph>(), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn dot_lists_each_edge_once() {
        let g = Graph::from_edges(4, [(2, 1), (1, 2), (3, 2)]).unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  4;\n  1 -- 2;\n  2 -- 3;\n}\n");
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let h = g.induced(&[2, 3, 5]).unwrap();
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert_eq!(h.n(), 3);
    }
}
