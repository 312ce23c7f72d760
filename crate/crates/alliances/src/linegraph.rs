//! Line-graph construction with full provenance between the edges of the
//! base graph and the vertices of the line graph.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LineGraphError {
    #[error("line graph of an edgeless graph is empty")]
    EdgelessGraph,
    #[error("{{{0}, {1}}} is not an edge")]
    NonEdge(usize, usize),
    #[error("empty line-vertex selection")]
    EmptySelection,
    #[error("line vertex {id} out of range for line graph of order {order}")]
    LineVertexOutOfRange { id: usize, order: usize },
}

/// The line graph of a base graph Γ.
///
/// Line-vertex ids are assigned in lexicographic order of the edge pairs
/// `(min endpoint, max endpoint)`, so ids are stable across runs. Two line
/// vertices are adjacent iff their edges share an endpoint; the degree of
/// line vertex `{u, v}` is `δ(u) + δ(v) - 2`.
#[derive(Debug, Clone)]
pub struct LineGraph {
    base: Graph,
    graph: Graph,
    edge_of: Vec<(usize, usize)>,
}

impl LineGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The line graph itself, a plain graph over `0..m`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The base edge behind a line vertex.
    pub fn edge_of(&self, line_vertex: usize) -> (usize, usize) {
        self.edge_of[line_vertex]
    }

    /// All base edges, indexed by line-vertex id.
    pub fn edge_map(&self) -> &[(usize, usize)] {
        &self.edge_of
    }

    /// Line vertex carrying the base edge `{u, v}`, if it is an edge.
    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edge_of.binary_search(&key).ok()
    }

    /// Line vertices incident to base vertex `v` (the edges through `v`).
    pub fn star_of(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::new(self.graph.order());
        for (id, &(a, b)) in self.edge_of.iter().enumerate() {
            if a == v || b == v {
                s.insert(id);
            }
        }
        s
    }
}

pub fn line_graph(g: &Graph) -> Result<LineGraph, LineGraphError> {
    if g.size() == 0 {
        return Err(LineGraphError::EdgelessGraph);
    }
    let edge_of: Vec<(usize, usize)> = g.edges().collect();
    let m = edge_of.len();

    // Edges through a common vertex form a clique of line vertices. Distinct
    // edges of a simple graph share at most one endpoint, so no pair is
    // produced twice.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (id, &(u, v)) in edge_of.iter().enumerate() {
        incident[u].push(id);
        incident[v].push(id);
    }
    let mut line_edges = Vec::new();
    for ids in &incident {
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                line_edges.push((a.min(b), a.max(b)));
            }
        }
    }
    let graph = Graph::from_edges(m, &line_edges).expect("line adjacency is simple");
    Ok(LineGraph {
        base: g.clone(),
        graph,
        edge_of,
    })
}

/// Degree that the edge `{u, v}` has as a line-graph vertex: δ(u) + δ(v) − 2.
pub fn edge_vertex_degree(g: &Graph, u: usize, v: usize) -> Result<usize, LineGraphError> {
    if !g.has_edge(u, v) {
        return Err(LineGraphError::NonEdge(u, v));
    }
    Ok(g.degree(u) + g.degree(v) - 2)
}

/// Characteristic set of a line-vertex selection: every base vertex covered
/// by a selected edge.
///
/// If the selection induces a connected subgraph of the line graph, the
/// result induces a connected subgraph of the base and has at most
/// `|selection| + 1` vertices.
pub fn characteristic_set(lg: &LineGraph, selection: &VertexSet) -> Result<VertexSet, LineGraphError> {
    if selection.is_empty() {
        return Err(LineGraphError::EmptySelection);
    }
    let order = lg.graph.order();
    let mut out = VertexSet::new(lg.base.order());
    for id in selection.iter() {
        if id >= order {
            return Err(LineGraphError::LineVertexOutOfRange { id, order });
        }
        let (u, v) = lg.edge_of[id];
        out.insert(u);
        out.insert(v);
    }
    Ok(out)
}
