//! Deterministic generators for the named graph families.
//!
//! Every generator fixes its labeling so that witnesses are reproducible:
//! cycles are labeled in cyclic order, Kneser vertices are the k-subsets in
//! lexicographic order with adjacency given by disjointness, hypercube
//! vertices are coordinate bitmasks.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFamily {
    Path { order: usize },
    Cycle { len: usize },
    Complete { order: usize },
    CompleteBipartite { a: usize, b: usize },
    /// Star K_{1,leaves}: hub 0, leaves 1..=leaves.
    Star { leaves: usize },
    /// Kneser graph K(set_size, subset_size).
    Kneser { set_size: usize, subset_size: usize },
    /// Odd graph O_k = K(2k-1, k-1).
    Odd { k: usize },
    Petersen,
    /// Hypercube Q_dim.
    Hypercube { dim: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid {family} parameter: {reason}")]
pub struct FamilyError {
    pub family: &'static str,
    pub reason: String,
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError { family, reason: reason.into() }
}

pub fn generate(family: &GraphFamily) -> Result<Graph, FamilyError> {
    match *family {
        GraphFamily::Path { order } => {
            if order < 1 {
                return Err(invalid("path", "order must be at least 1"));
            }
            let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
            Ok(Graph::from_edges(order, &edges).unwrap())
        }
        GraphFamily::Cycle { len } => {
            if len < 3 {
                return Err(invalid("cycle", "length must be at least 3"));
            }
            let edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
            Ok(Graph::from_edges(len, &edges).unwrap())
        }
        GraphFamily::Complete { order } => {
            if order < 1 {
                return Err(invalid("complete", "order must be at least 1"));
            }
            let mut edges = Vec::new();
            for u in 0..order {
                for v in u + 1..order {
                    edges.push((u, v));
                }
            }
            Ok(Graph::from_edges(order, &edges).unwrap())
        }
        GraphFamily::CompleteBipartite { a, b } => {
            if a < 1 || b < 1 {
                return Err(invalid("complete-bipartite", "both sides must be nonempty"));
            }
            let mut edges = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    edges.push((u, a + v));
                }
            }
            Ok(Graph::from_edges(a + b, &edges).unwrap())
        }
        GraphFamily::Star { leaves } => {
            if leaves < 1 {
                return Err(invalid("star", "needs at least one leaf"));
            }
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Ok(Graph::from_edges(leaves + 1, &edges).unwrap())
        }
        GraphFamily::Kneser { set_size, subset_size } => kneser(set_size, subset_size),
        GraphFamily::Odd { k } => {
            if k < 2 {
                return Err(invalid("odd-graph", "k must be at least 2"));
            }
            kneser(2 * k - 1, k - 1)
        }
        GraphFamily::Petersen => kneser(5, 2),
        GraphFamily::Hypercube { dim } => {
            if !(1..=16).contains(&dim) {
                return Err(invalid("hypercube", "dimension must be in 1..=16"));
            }
            let n = 1usize << dim;
            let mut edges = Vec::new();
            for u in 0..n {
                for bit in 0..dim {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
    }
}

fn kneser(set_size: usize, subset_size: usize) -> Result<Graph, FamilyError> {
    if subset_size < 1 || subset_size > set_size {
        return Err(invalid("kneser", "need 1 <= subset_size <= set_size"));
    }
    if set_size > 30 {
        return Err(invalid("kneser", "set size above 30 is not supported"));
    }
    let subsets = k_subsets_lex(set_size, subset_size);
    let masks: Vec<u32> = subsets
        .iter()
        .map(|s| s.iter().fold(0u32, |acc, &e| acc | 1 << e))
        .collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(masks.len(), &edges).unwrap())
}

/// All k-subsets of `0..n` in lexicographic order of their sorted sequences.
pub fn k_subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost element that can still move.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_two_regular() {
        let g = generate(&GraphFamily::Cycle { len: 5 }).unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
        assert_eq!(g.regularity(), Some(2));
    }

    #[test]
    fn star_degree_sequence() {
        let g = generate(&GraphFamily::Star { leaves: 3 }).unwrap();
        assert_eq!(g.degree_sequence(), &[3, 1, 1, 1]);
    }

    #[test]
    fn petersen_shape() {
        let g = generate(&GraphFamily::Petersen).unwrap();
        assert_eq!((g.order(), g.size()), (10, 15));
        assert_eq!(g.regularity(), Some(3));
    }

    #[test]
    fn odd_graph_five() {
        // C(9,4) = 126 vertices, 5-regular, 126*5/2 = 315 edges.
        let g = generate(&GraphFamily::Odd { k: 5 }).unwrap();
        assert_eq!((g.order(), g.size()), (126, 315));
        assert_eq!(g.regularity(), Some(5));
    }

    #[test]
    fn hypercube_q3() {
        let g = generate(&GraphFamily::Hypercube { dim: 3 }).unwrap();
        assert_eq!((g.order(), g.size()), (8, 12));
        assert_eq!(g.regularity(), Some(3));
    }

    #[test]
    fn complete_bipartite_sides() {
        let g = generate(&GraphFamily::CompleteBipartite { a: 2, b: 3 }).unwrap();
        assert_eq!(g.degree_sequence(), &[3, 3, 2, 2, 2]);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(generate(&GraphFamily::Cycle { len: 2 }).is_err());
        assert!(generate(&GraphFamily::Star { leaves: 0 }).is_err());
        assert!(generate(&GraphFamily::Kneser { set_size: 3, subset_size: 0 }).is_err());
    }

    #[test]
    fn lex_subsets_order() {
        let subs = k_subsets_lex(4, 2);
        assert_eq!(
            subs,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
