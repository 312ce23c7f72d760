//! Immutable simple undirected graphs over dense 0-based vertex ids.

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("empty vertex set")]
    EmptySet,
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Immutable after construction. Adjacency is stored as one bitmask row
/// per vertex; the degree sequence is cached non-increasing.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
    degrees: Vec<usize>,
    degree_sequence: Vec<usize>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            degrees: vec![0; n],
            degree_sequence: vec![0; n],
        }
    }

    /// Builds a graph from an explicit edge list, validating simplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<VertexSet> = (0..n).map(|_| VertexSet::new(n)).collect();
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
            m += 1;
        }
        let degrees: Vec<usize> = adj.iter().map(|row| row.len()).collect();
        let mut degree_sequence = degrees.clone();
        degree_sequence.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Graph {
            n,
            m,
            adj,
            degrees,
            degree_sequence,
        })
    }

    /// Order (vertex count).
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size (edge count).
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    /// Neighborhood of `v` as a bitmask row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// Non-increasing degree multiset δ1 ≥ δ2 ≥ … ≥ δn.
    pub fn degree_sequence(&self) -> &[usize] {
        &self.degree_sequence
    }

    pub fn max_degree(&self) -> usize {
        self.degree_sequence.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degree_sequence.last().copied().unwrap_or(0)
    }

    /// Returns `Some(d)` if every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 || self.max_degree() == self.min_degree() {
            if self.n == 0 {
                return None;
            }
            Some(self.max_degree())
        } else {
            None
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Subgraph induced by `s`, relabeled to `0..|s|` by ascending original id.
    ///
    /// The empty set is rejected; no operation here is defined on ⟨∅⟩.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let members = s.to_vec();
        if let Some(&v) = members.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        let mut edges = Vec::new();
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(members.len(), &edges)
    }

    /// True iff the subgraph induced by `s` is connected (vacuously false for ∅).
    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else { return false };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut frontier = vec![start];
        let mut count = 1;
        while let Some(v) = frontier.pop() {
            for u in self.adj[v].iter() {
                if s.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    count += 1;
                    frontier.push(u);
                }
            }
        }
        count == s.len()
    }

    /// Connected components of the subgraph induced by `s`, each sorted, in
    /// order of their smallest member.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::new(self.n);
            comp.insert(start);
            remaining.remove(start);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                for u in self.adj[v].iter() {
                    if remaining.contains(u) {
                        remaining.remove(u);
                        comp.insert(u);
                        frontier.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_validates() {
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn handshake_and_degree_sequence() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.degree_sequence(), &[3, 1, 1, 1]);
        assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn induced_subgraph_of_k4_triple_is_triangle() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = VertexSet::from_vertices(4, &[0, 1, 2]);
        let sub = k4.induced_subgraph(&s).unwrap();
        assert_eq!((sub.order(), sub.size()), (3, 3));
    }

    #[test]
    fn induced_subgraph_rejects_empty() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.induced_subgraph(&VertexSet::new(2)), Err(GraphError::EmptySet));
    }

    #[test]
    fn induced_subgraph_nonadjacent_pair() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let sub = c5.induced_subgraph(&VertexSet::from_vertices(5, &[0, 2])).unwrap();
        assert_eq!((sub.order(), sub.size()), (2, 0));
    }

    #[test]
    fn components_within_splits_paths() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let all = g.vertex_set();
        let comps = g.components_within(&all);
        assert_eq!(comps.len(), 3);
        assert!(g.is_connected_within(&comps[0]));
        assert!(!g.is_connected_within(&all));
    }
}
