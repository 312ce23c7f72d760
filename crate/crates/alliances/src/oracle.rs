//! Brute-force reference solver.
//!
//! Walks every nonempty vertex subset in increasing size (lexicographic
//! within a size) and reports the first alliance found. It leans on the
//! kernel predicates alone and shares no code with the search paths in
//! `solver`, so agreement between the two certifies both.

use crate::graph::Graph;
use crate::kernel::{self, AllianceKind};
use crate::bitset::VertexSet;
use crate::solver::{Method, SolveError, SolveResult};

pub const ORACLE_DEFAULT_CAP: usize = 16;

/// Exact minimum alliance by exhaustive subset sweep, default order cap.
pub fn brute_force_oracle(g: &Graph, kind: AllianceKind) -> Result<SolveResult, SolveError> {
    brute_force_oracle_capped(g, kind, ORACLE_DEFAULT_CAP)
}

/// Exhaustive sweep with an explicit order cap.
pub fn brute_force_oracle_capped(
    g: &Graph,
    kind: AllianceKind,
    cap: usize,
) -> Result<SolveResult, SolveError> {
    let n = g.order();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > cap {
        return Err(SolveError::OracleCapExceeded { order: n, cap });
    }

    let mut tested = 0u64;
    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            tested += 1;
            let s = VertexSet::from_vertices(n, &combo);
            if kernel::is_alliance(g, &s, kind).expect("combo members are in range") {
                return Ok(SolveResult {
                    kind,
                    value: size,
                    witness: Some(s),
                    witness_edges: None,
                    method: Method::Oracle,
                    nodes_explored: tested,
                    certified: true,
                });
            }
            if !advance_combination(&mut combo, n) {
                break;
            }
        }
    }
    Err(SolveError::Infeasible { kind })
}

/// Steps a sorted combination to its lexicographic successor.
fn advance_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if combo[i] != i + n - k {
            break;
        }
    }
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, GraphFamily};

    #[test]
    fn strong_pair_in_even_cycle() {
        let g = generate(&GraphFamily::Cycle { len: 6 }).unwrap();
        let r = brute_force_oracle(&g, AllianceKind::Strong).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn strong_triangle_in_k4() {
        let g = generate(&GraphFamily::Complete { order: 4 }).unwrap();
        assert_eq!(brute_force_oracle(&g, AllianceKind::Strong).unwrap().value, 3);
    }

    #[test]
    fn single_edge_defensive_singleton() {
        let g = generate(&GraphFamily::Complete { order: 2 }).unwrap();
        assert_eq!(brute_force_oracle(&g, AllianceKind::Defensive).unwrap().value, 1);
    }

    #[test]
    fn global_defensive_of_five_cycle() {
        let g = generate(&GraphFamily::Cycle { len: 5 }).unwrap();
        let r = brute_force_oracle(&g, AllianceKind::GlobalDefensive).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn connected_kind_on_disconnected_graph_is_infeasible() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            brute_force_oracle(&g, AllianceKind::GlobalConnectedDefensive),
            Err(SolveError::Infeasible { .. })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate(&GraphFamily::Cycle { len: 20 }).unwrap();
        assert!(matches!(
            brute_force_oracle(&g, AllianceKind::Defensive),
            Err(SolveError::OracleCapExceeded { order: 20, cap: 16 })
        ));
    }

    #[test]
    fn combination_stepping_is_lexicographic() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while advance_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
