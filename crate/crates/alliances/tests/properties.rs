//! Randomized invariants over arbitrary simple graphs.

use proptest::prelude::*;

use alliances::bitset::VertexSet;
use alliances::edgelist;
use alliances::graph::Graph;
use alliances::graph6;
use alliances::kernel::{self, AllianceKind};
use alliances::oracle;
use alliances::solver::{self, Budget};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |flags| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if flags[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("upper-triangle edges are simple")
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrips(g in arb_graph(40)) {
        let encoded = graph6::encode_graph6(&g).unwrap();
        prop_assert_eq!(graph6::parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn edge_list_roundtrips(g in arb_graph(12)) {
        let encoded = edgelist::encode_edge_list(&g);
        prop_assert_eq!(edgelist::parse_edge_list(&encoded).unwrap(), g);
    }

    #[test]
    fn boundary_counts_partition_the_neighborhood(g in arb_graph(9), mask in any::<u32>()) {
        let n = g.order();
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let s = VertexSet::from_vertices(n, &members);
        for v in 0..n {
            let bc = kernel::boundary_counts(&g, &s, v).unwrap();
            prop_assert_eq!(bc.inside + bc.outside, g.degree(v));
        }
    }

    #[test]
    fn stronger_kinds_imply_weaker_ones(g in arb_graph(8), mask in 1u32..) {
        let n = g.order();
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!members.is_empty());
        let s = VertexSet::from_vertices(n, &members);
        let holds = |k: AllianceKind| kernel::is_alliance(&g, &s, k).unwrap();
        for (stronger, weaker) in [
            (AllianceKind::Strong, AllianceKind::Defensive),
            (AllianceKind::GlobalDefensive, AllianceKind::Defensive),
            (AllianceKind::GlobalStrong, AllianceKind::Strong),
            (AllianceKind::GlobalStrong, AllianceKind::GlobalDefensive),
            (AllianceKind::GlobalConnectedDefensive, AllianceKind::GlobalDefensive),
            (AllianceKind::GlobalConnectedStrong, AllianceKind::GlobalStrong),
        ] {
            if holds(stronger) {
                prop_assert!(holds(weaker), "{} held but {} failed on {:?}", stronger, weaker, s);
            }
        }
    }

    #[test]
    fn connected_enumeration_matches_mask_sweep(g in arb_graph(7)) {
        let n = g.order();
        let mut expected = 0usize;
        for mask in 1u32..1 << n {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if g.is_connected_within(&VertexSet::from_vertices(n, &members)) {
                expected += 1;
            }
        }
        let got = solver::enumerate_connected_subsets(&g, n).count();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn solver_agrees_with_oracle(g in arb_graph(7), kind_idx in 0usize..6) {
        let kind = AllianceKind::ALL[kind_idx];
        let solved = solver::min_alliance(&g, kind, Budget::unlimited());
        let oracled = oracle::brute_force_oracle(&g, kind);
        match (solved, oracled) {
            (Ok(s), Ok(o)) => {
                prop_assert_eq!(s.value, o.value);
                prop_assert_eq!(s.witness, o.witness);
            }
            (Err(solver::SolveError::Infeasible { .. }), Err(solver::SolveError::Infeasible { .. })) => {}
            (s, o) => prop_assert!(false, "disagreement: {:?} vs {:?}", s, o),
        }
    }
}
