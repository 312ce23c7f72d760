//! Structural metrics: components, diameter, girth.

use serde::ser::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Diameter is finite exactly when the graph is connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

/// Girth of a forest is a distinct value, never a sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(x) => Some(x),
            Girth::Acyclic => None,
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Acyclic => s.serialize_str("acyclic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Metrics {
    pub connected: bool,
    /// Vertex partition into connected components, by smallest member.
    pub components: Vec<VertexSet>,
    pub diameter: Diameter,
    pub girth: Girth,
}

/// BFS distances from `start`; unreachable vertices are `usize::MAX`.
pub fn bfs_distances(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).iter() {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

pub fn metrics(g: &Graph) -> Metrics {
    let components = g.components_within(&g.vertex_set());
    let connected = components.len() <= 1;

    let mut diameter = Diameter::Infinite;
    if connected {
        let mut max = 0;
        for v in 0..g.order() {
            for &d in bfs_distances(g, v).iter() {
                debug_assert_ne!(d, usize::MAX);
                max = max.max(d);
            }
        }
        diameter = Diameter::Finite(max);
    }

    Metrics {
        connected,
        components,
        diameter,
        girth: girth(g),
    }
}

/// Shortest cycle length via BFS from every root, scanning non-tree edges.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v).iter() {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        for (u, v) in g.edges() {
            if dist[u] == usize::MAX || dist[v] == usize::MAX {
                continue;
            }
            if parent[u] == v || parent[v] == u {
                continue; // tree edge
            }
            best = best.min(dist[u] + dist[v] + 1);
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, GraphFamily};

    #[test]
    fn cycle_eight() {
        let m = metrics(&generate(&GraphFamily::Cycle { len: 8 }).unwrap());
        assert!(m.connected);
        assert_eq!(m.diameter, Diameter::Finite(4));
        assert_eq!(m.girth, Girth::Finite(8));
    }

    #[test]
    fn petersen() {
        let m = metrics(&generate(&GraphFamily::Petersen).unwrap());
        assert_eq!(m.diameter, Diameter::Finite(2));
        assert_eq!(m.girth, Girth::Finite(5));
    }

    #[test]
    fn path_is_acyclic() {
        let m = metrics(&generate(&GraphFamily::Path { order: 4 }).unwrap());
        assert_eq!(m.diameter, Diameter::Finite(3));
        assert_eq!(m.girth, Girth::Acyclic);
    }

    #[test]
    fn disconnected_diameter_is_infinite() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let m = metrics(&g);
        assert!(!m.connected);
        assert_eq!(m.components.len(), 2);
        assert_eq!(m.diameter, Diameter::Infinite);
    }

    #[test]
    fn single_vertex() {
        let m = metrics(&Graph::edgeless(1));
        assert!(m.connected);
        assert_eq!(m.diameter, Diameter::Finite(0));
        assert_eq!(m.girth, Girth::Acyclic);
    }

    #[test]
    fn triangle_with_tail() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let m = metrics(&g);
        assert_eq!(m.girth, Girth::Finite(3));
        assert_eq!(m.diameter, Diameter::Finite(3));
    }

    #[test]
    fn even_cycle_girth_not_overshot() {
        for len in [4, 6, 10] {
            let g = generate(&GraphFamily::Cycle { len }).unwrap();
            assert_eq!(girth(&g), Girth::Finite(len));
        }
    }

    #[test]
    fn hypercube_girth_four() {
        let g = generate(&GraphFamily::Hypercube { dim: 3 }).unwrap();
        assert_eq!(girth(&g), Girth::Finite(4));
        assert_eq!(metrics(&g).diameter, Diameter::Finite(3));
    }
}
