//! Exhaustive isomorph-free corpora of small graphs, generated in-process.
//!
//! Graphs on k+1 vertices are built by attaching a new vertex to every
//! canonical graph on k vertices in all 2^k ways and deduplicating by
//! canonical code, so no external corpus files are needed. The canonical
//! code of a graph is the smallest upper-triangle bitstring over all
//! vertex orderings that sort degrees non-increasingly (a degree-sorted
//! minimizer exists in every isomorphism class, so this is a complete
//! invariant).

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::graph::Graph;

/// Largest supported corpus order; canonicalization is factorial in the
/// degree multiplicities and stays comfortable through 8.
pub const MAX_CORPUS_ORDER: usize = 8;

static LEVELS: [OnceLock<Vec<u32>>; MAX_CORPUS_ORDER] =
    [const { OnceLock::new() }; MAX_CORPUS_ORDER];

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn graph_from_code(code: u32, n: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("triangle codes are simple")
}

fn degrees_of_code(code: u32, n: usize) -> [usize; MAX_CORPUS_ORDER] {
    let mut deg = [0usize; MAX_CORPUS_ORDER];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg
}

fn apply_perm(code: u32, perm: &[usize], n: usize) -> u32 {
    let mut out = 0u32;
    for j in 1..n {
        for i in 0..j {
            let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            if code >> pair_index(a, b) & 1 == 1 {
                out |= 1 << pair_index(i, j);
            }
        }
    }
    out
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn canonical_code(code: u32, n: usize) -> u32 {
    let deg = degrees_of_code(code, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last_mut() {
            Some(group) if deg[group[0]] == deg[v] => group.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let group_perms: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations_of(g)).collect();

    let mut best = u32::MAX;
    let mut perm = vec![0usize; n];
    fill(0, &groups, &group_perms, &mut perm, 0, code, n, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn fill(
    gi: usize,
    groups: &[Vec<usize>],
    group_perms: &[Vec<Vec<usize>>],
    perm: &mut Vec<usize>,
    offset: usize,
    code: u32,
    n: usize,
    best: &mut u32,
) {
    if gi == groups.len() {
        let candidate = apply_perm(code, perm, n);
        if candidate < *best {
            *best = candidate;
        }
        return;
    }
    for ordering in &group_perms[gi] {
        perm[offset..offset + ordering.len()].copy_from_slice(ordering);
        fill(gi + 1, groups, group_perms, perm, offset + ordering.len(), code, n, best);
    }
}

/// Canonical codes of all graphs on exactly `n` vertices, ascending.
fn codes(n: usize) -> &'static [u32] {
    assert!((1..=MAX_CORPUS_ORDER).contains(&n), "corpus supports 1..={MAX_CORPUS_ORDER}");
    LEVELS[n - 1].get_or_init(|| {
        if n == 1 {
            return vec![0];
        }
        let parents = codes(n - 1);
        let k = n - 1;
        let mut seen = HashSet::new();
        for &parent in parents {
            for mask in 0u32..1 << k {
                let mut code = parent;
                for i in 0..k {
                    if mask >> i & 1 == 1 {
                        code |= 1 << pair_index(i, k);
                    }
                }
                seen.insert(canonical_code(code, n));
            }
        }
        let mut out: Vec<u32> = seen.into_iter().collect();
        out.sort_unstable();
        out
    })
}

/// All graphs on exactly `n` vertices, one per isomorphism class, in
/// ascending canonical-code order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    codes(n).iter().map(|&c| graph_from_code(c, n)).collect()
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.components_within(&g.vertex_set()).len() == 1)
        .collect()
}

/// Connected graphs of every order `1..=max_n`, smaller orders first.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_the_literature() {
        // Numbers of graphs per order up to isomorphism: 1, 2, 4, 11, 34, 156.
        assert_eq!(all_graphs(1).len(), 1);
        assert_eq!(all_graphs(2).len(), 2);
        assert_eq!(all_graphs(3).len(), 4);
        assert_eq!(all_graphs(4).len(), 11);
        assert_eq!(all_graphs(5).len(), 34);
        assert_eq!(all_graphs(6).len(), 156);
    }

    #[test]
    fn connected_counts_match_the_literature() {
        // Connected: 1, 1, 2, 6, 21, 112.
        assert_eq!(connected_graphs(1).len(), 1);
        assert_eq!(connected_graphs(2).len(), 1);
        assert_eq!(connected_graphs(3).len(), 2);
        assert_eq!(connected_graphs(4).len(), 6);
        assert_eq!(connected_graphs(5).len(), 21);
        assert_eq!(connected_graphs(6).len(), 112);
    }

    #[test]
    fn canonicalization_identifies_isomorphic_labelings() {
        // C_4 labeled two ways.
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (0, 3)]).unwrap();
        let code = |g: &Graph| {
            let mut c = 0u32;
            for (u, v) in g.edges() {
                c |= 1 << pair_index(u, v);
            }
            canonical_code(c, 4)
        };
        assert_eq!(code(&a), code(&b));
    }

    #[test]
    fn corpus_is_deterministic() {
        let a: Vec<usize> = all_graphs(5).iter().map(|g| g.size()).collect();
        let b: Vec<usize> = all_graphs(5).iter().map(|g| g.size()).collect();
        assert_eq!(a, b);
    }
}
