//! Multigraphs with loops and parallel edges, their embeddings, face tracing,
//! and the brute-force genus / Euler-genus oracles.
//!
//! Edge `i` owns darts `2i` (at its first endpoint) and `2i + 1` (at its
//! second endpoint). A loop puts both darts on the same vertex.

pub mod embedding;
pub mod io;
pub mod named;
pub mod ops;
pub mod oracle;
pub mod random;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

pub use embedding::{trace_faces, EmbeddingRep, FaceLabels, FaceSet};
pub use oracle::{euler_distribution_oracle, genus_distribution_oracle, DistKind, EmbeddingDistribution, Oracle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    darts_at: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut darts_at = vec![Vec::new(); vertex_count];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge {i} = ({a}, {b}) has an endpoint out of range")));
            }
            darts_at[a].push(2 * i);
            darts_at[b].push(2 * i + 1);
        }
        Ok(Graph { n: vertex_count, edges, darts_at })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Darts incident to `v`, in increasing order.
    pub fn darts_at(&self, v: usize) -> &[usize] {
        &self.darts_at[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_at[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Vertex carrying dart `d`.
    pub fn dart_vertex(&self, d: usize) -> usize {
        let (a, b) = self.edges[d / 2];
        if d.is_multiple_of(2) {
            a
        } else {
            b
        }
    }

    /// Neighbour reached through dart `d`.
    pub fn dart_target(&self, d: usize) -> usize {
        self.dart_vertex(d ^ 1)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    /// Connected-component index of every vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.darts_at[v] {
                    let w = self.dart_target(d);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Cycle rank `|E| - |V| + c`; equals `|E| - |V| + 1` for connected graphs.
    pub fn betti(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    /// Lowest-index BFS spanning forest: `true` marks tree edges.
    ///
    /// Each component is searched from its lowest vertex, and darts are scanned in
    /// increasing order.
    pub fn spanning_tree(&self) -> Vec<bool> {
        let mut tree = vec![false; self.edges.len()];
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.darts_at[v] {
                    let w = self.dart_target(d);
                    if !seen[w] {
                        seen[w] = true;
                        tree[d / 2] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        tree
    }

    /// Number of rotation systems, `prod_v (d_v - 1)!`.
    pub fn rotation_count(&self) -> BigInt {
        (0..self.n).fold(BigInt::one(), |acc, v| acc * factorial(self.degree(v).saturating_sub(1)))
    }

    /// Number of general embeddings, `2^beta prod_v (d_v - 1)!`.
    pub fn embedding_count(&self) -> BigInt {
        self.rotation_count() << self.betti()
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidGraph(format!("vertex {v} out of range (graph has {})", self.n)))
        }
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// A bijection `phi: U1 -> U2` given as ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingSpec {
    pub pairs: Vec<(usize, usize)>,
    /// Both sides live in the same graph.
    pub self_gluing: bool,
}

impl GluingSpec {
    pub fn new(pairs: Vec<(usize, usize)>, self_gluing: bool) -> Result<Self> {
        let spec = GluingSpec { pairs, self_gluing };
        spec.check_bijective()?;
        Ok(spec)
    }

    /// Parse `"1>0,3>2"`, optionally prefixed by `glue`.
    pub fn parse(s: &str, self_gluing: bool) -> Result<Self> {
        let body = s.trim().strip_prefix("glue").unwrap_or(s.trim()).trim();
        let mut pairs = Vec::new();
        for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("gluing pair {part:?} lacks '>'")))?;
            let a = a.trim().parse().map_err(|_| Error::Parse(format!("bad vertex {a:?}")))?;
            let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad vertex {b:?}")))?;
            pairs.push((a, b));
        }
        Self::new(pairs, self_gluing)
    }

    pub fn sources(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn targets(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    fn check_bijective(&self) -> Result<()> {
        let mut src = self.sources();
        let mut dst = self.targets();
        src.sort_unstable();
        dst.sort_unstable();
        if src.windows(2).any(|w| w[0] == w[1]) || dst.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGluing("repeated source or target vertex".into()));
        }
        if self.self_gluing && src.iter().any(|s| dst.binary_search(s).is_ok()) {
            return Err(Error::InvalidGluing("U1 and U2 overlap".into()));
        }
        Ok(())
    }

    pub fn validate_on(&self, g: &Graph, h: Option<&Graph>) -> Result<()> {
        if self.pairs.is_empty() {
            return Err(Error::InvalidGluing("empty gluing".into()));
        }
        let target = h.unwrap_or(g);
        for &(a, b) in &self.pairs {
            g.check_vertex(a).map_err(|e| Error::InvalidGluing(e.to_string()))?;
            target.check_vertex(b).map_err(|e| Error::InvalidGluing(e.to_string()))?;
        }
        Ok(())
    }
}

impl std::fmt::Display for GluingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}>{b}")).collect();
        write!(f, "glue {}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_loop_is_b1() {
        let g = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(g.dart_count(), 2);
        assert_eq!(g.betti(), 1);
        assert_eq!(g.darts_at(0), &[0, 1]);
    }

    #[test]
    fn dipole_degrees() {
        let g = Graph::new(2, vec![(0, 1); 3]).unwrap();
        assert_eq!(g.degrees(), vec![3, 3]);
        assert_eq!(g.betti(), 2);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn four_parallel_edges_have_36_rotations() {
        let g = Graph::new(2, vec![(0, 1); 4]).unwrap();
        assert_eq!(g.rotation_count(), BigInt::from(36));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::new(0, vec![]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn bfs_tree_prefers_low_edges() {
        // Triangle 0-1, 1-2, 0-2 plus a parallel 0-1.
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2), (0, 1)]).unwrap();
        assert_eq!(g.spanning_tree(), vec![true, false, true, false]);
    }

    #[test]
    fn gluing_parse_and_checks() {
        let s = GluingSpec::parse("glue 1>0, 3>2", true).unwrap();
        assert_eq!(s.pairs, vec![(1, 0), (3, 2)]);
        assert_eq!(s.to_string(), "glue 1>0,3>2");
        assert!(GluingSpec::parse("1>0,1>2", true).is_err());
        assert!(GluingSpec::parse("1>0,0>2", true).is_err());
        assert!(GluingSpec::parse("1-0", true).is_err());
    }
}
