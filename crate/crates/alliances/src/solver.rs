//! Exact alliance-number solvers with witnesses.
//!
//! Defensive, strong and global-connected kinds are solved by enumerating
//! connected vertex subsets in increasing size: a minimum defensive or
//! strong alliance induces a connected subgraph (a disconnected one would
//! contain a component that is itself an alliance), and the connected
//! global kinds are connected by definition, so the first size with a hit
//! is optimal. Plain global kinds go through branch and bound, since their
//! minimum witnesses may be disconnected.

use std::fmt;
use std::time::{Duration, Instant};

use serde::ser::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::bounds;
use crate::graph::Graph;
use crate::kernel::{self, required_inside, AllianceKind};
use crate::linegraph::{self, LineGraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Enumeration,
    BranchAndBound,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Enumeration => "enumeration",
            Method::BranchAndBound => "branch-and-bound",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Outcome of a minimum-alliance computation.
///
/// When `certified` is true, `value` is the exact minimum and `witness`
/// attains it; the witness is the lexicographically least minimum witness
/// (compared as sorted id sequences) whenever the run finished within
/// budget. When `certified` is false the search ran out of budget:
/// enumeration reports the largest size proven empty plus one (a lower
/// bound) with no witness, branch and bound reports its best incumbent (an
/// upper bound) with that witness.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SolveResult {
    pub kind: AllianceKind,
    pub value: usize,
    pub witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edges: Option<Vec<(usize, usize)>>,
    pub method: Method,
    pub nodes_explored: u64,
    pub certified: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("no {kind} alliance exists: the graph is disconnected")]
    Infeasible { kind: AllianceKind },
    #[error("order {order} exceeds the oracle cap {cap}")]
    OracleCapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    LineGraph(#[from] LineGraphError),
}

/// Node-count and wall-clock limits for a solve. Both default to unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_secs: Option<f64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max: u64) -> Self {
        Budget { max_nodes: Some(max), max_secs: None }
    }
}

struct Clock {
    budget: Budget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
}

impl Clock {
    fn new(budget: Budget) -> Self {
        Clock { budget, start: Instant::now(), nodes: 0, exhausted: false }
    }

    /// Counts one search node; false once the budget is gone.
    #[inline]
    fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.exhausted = true;
                return false;
            }
        }
        if let Some(max_secs) = self.budget.max_secs {
            // Instant::now is not free; sample it.
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() > Duration::from_secs_f64(max_secs) {
                self.exhausted = true;
                return false;
            }
        }
        true
    }
}

/// Exact minimum alliance of the given kind, with a witness.
pub fn min_alliance(g: &Graph, kind: AllianceKind, budget: Budget) -> Result<SolveResult, SolveError> {
    if g.order() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let connected = g.components_within(&g.vertex_set()).len() == 1;
    if kind.connected() && !connected {
        return Err(SolveError::Infeasible { kind });
    }
    let mut clock = Clock::new(budget);
    if kind.global() && !kind.connected() {
        if connected {
            solve_global(g, kind, &mut clock)
        } else {
            solve_global_per_component(g, kind, &mut clock)
        }
    } else {
        solve_by_connected_enumeration(g, kind, &mut clock)
    }
}

/// Minimum alliance of the line graph; the witness is reported both as
/// line-vertex ids and as base edges.
pub fn line_alliance_number(
    g: &Graph,
    kind: AllianceKind,
    budget: Budget,
) -> Result<SolveResult, SolveError> {
    let lg = linegraph::line_graph(g)?;
    let mut res = min_alliance(lg.graph(), kind, budget)?;
    res.witness_edges = res
        .witness
        .as_ref()
        .map(|w| w.iter().map(|id| lg.edge_of(id)).collect());
    Ok(res)
}

// ---------------------------------------------------------------------------
// Connected-subset enumeration (defensive, strong, global-connected kinds)
// ---------------------------------------------------------------------------

fn solve_by_connected_enumeration(
    g: &Graph,
    kind: AllianceKind,
    clock: &mut Clock,
) -> Result<SolveResult, SolveError> {
    let n = g.order();
    let strong = kind.strong();
    for size in 1..=n {
        let mut best: Option<VertexSet> = None;
        let complete = {
            let best = &mut best;
            visit_connected_exact(g, size, clock, &mut |p, slots_left| {
                p.iter().any(|v| {
                    required_inside(g.degree(v), strong)
                        .saturating_sub(g.neighbors(v).intersection_len(p))
                        > slots_left
                })
            }, &mut |s| {
                if kernel::is_alliance(g, s, kind).expect("enumerated sets are in range")
                    && best.as_ref().is_none_or(|b| s < b)
                {
                    *best = Some(s.clone());
                }
            })
        };
        if let Some(witness) = best {
            return Ok(SolveResult {
                kind,
                value: size,
                witness: Some(witness),
                witness_edges: None,
                method: Method::Enumeration,
                nodes_explored: clock.nodes,
                certified: true,
            });
        }
        if !complete {
            // Sizes below `size` are proven empty, so `size` is a lower bound.
            return Ok(SolveResult {
                kind,
                value: size,
                witness: None,
                witness_edges: None,
                method: Method::Enumeration,
                nodes_explored: clock.nodes,
                certified: false,
            });
        }
    }
    // Every kind reaching this path admits V itself, so this is unreachable
    // for nonempty graphs of the right connectivity.
    Err(SolveError::Infeasible { kind })
}

/// Visits every size-k vertex subset inducing a connected subgraph exactly
/// once (ascending roots, ascending extension order). `prune` may cut a
/// subtree when no completion of the current partial set can qualify.
/// Returns false if the budget ran out.
fn visit_connected_exact(
    g: &Graph,
    k: usize,
    clock: &mut Clock,
    prune: &mut dyn FnMut(&VertexSet, usize) -> bool,
    emit: &mut dyn FnMut(&VertexSet),
) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.order();
    for root in 0..n {
        let mut p = VertexSet::singleton(n, root);
        // covered = P ∪ N(P) ∪ {0..=root}: candidates may only be new
        // neighbors above the root, which makes every set reachable along
        // exactly one path.
        let mut covered = g.neighbors(root).clone();
        for v in 0..=root {
            covered.insert(v);
        }
        let mut ext = g.neighbors(root).clone();
        for v in 0..=root {
            ext.remove(v);
        }
        if !extend_connected(g, k, &mut p, &ext, &covered, clock, prune, emit) {
            return false;
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn extend_connected(
    g: &Graph,
    k: usize,
    p: &mut VertexSet,
    ext: &VertexSet,
    covered: &VertexSet,
    clock: &mut Clock,
    prune: &mut dyn FnMut(&VertexSet, usize) -> bool,
    emit: &mut dyn FnMut(&VertexSet),
) -> bool {
    if !clock.tick() {
        return false;
    }
    let have = p.len();
    if have == k {
        emit(p);
        return true;
    }
    if prune(p, k - have) {
        return true;
    }
    let mut ext_rest = ext.clone();
    while let Some(w) = ext_rest.pop_first() {
        let mut fresh = g.neighbors(w).clone();
        fresh.difference_with(covered);
        let mut child_ext = ext_rest.clone();
        child_ext.union_with(&fresh);
        let mut child_covered = covered.clone();
        child_covered.union_with(&fresh);
        p.insert(w);
        let ok = extend_connected(g, k, p, &child_ext, &child_covered, clock, prune, emit);
        p.remove(w);
        if !ok {
            return false;
        }
    }
    true
}

/// Every vertex subset of size 1..=max_size inducing a connected subgraph,
/// each exactly once, in non-decreasing size order.
pub fn enumerate_connected_subsets(g: &Graph, max_size: usize) -> impl Iterator<Item = VertexSet> + '_ {
    (1..=max_size.min(g.order())).flat_map(move |k| {
        let mut batch = Vec::new();
        let mut clock = Clock::new(Budget::unlimited());
        visit_connected_exact(g, k, &mut clock, &mut |_, _| false, &mut |s| batch.push(s.clone()));
        batch.into_iter()
    })
}

// ---------------------------------------------------------------------------
// Branch and bound (global-defensive, global-strong)
// ---------------------------------------------------------------------------

struct GlobalSearch<'g> {
    g: &'g Graph,
    kind: AllianceKind,
    order: Vec<usize>,
    incumbent_value: usize,
    incumbent: Option<VertexSet>,
    floor: usize,
}

fn solve_global(g: &Graph, kind: AllianceKind, clock: &mut Clock) -> Result<SolveResult, SolveError> {
    let n = g.order();

    // Branch on high-degree vertices first; they dominate and defend most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let (gamma_floor, gamma_hat_floor) = bounds::global_degree_bounds(g);
    let degree_floor = if kind.strong() { gamma_hat_floor } else { gamma_floor };
    let domination_floor = n.div_ceil(g.max_degree() + 1);
    let membership_floor = 1 + required_inside(g.min_degree(), kind.strong());
    let floor = degree_floor.max(domination_floor).max(membership_floor);

    let mut search = GlobalSearch {
        g,
        kind,
        order,
        // V is always a global (strong) alliance: no outside vertices exist.
        incumbent_value: n,
        incumbent: Some(g.vertex_set()),
        floor,
    };
    let chosen = VertexSet::new(n);
    let excluded = VertexSet::new(n);
    let dominated = VertexSet::new(n);
    search.descend(0, &chosen, &excluded, &dominated, clock);

    let value = search.incumbent_value;
    if clock.exhausted {
        return Ok(SolveResult {
            kind,
            value,
            witness: search.incumbent,
            witness_edges: None,
            method: Method::BranchAndBound,
            nodes_explored: clock.nodes,
            certified: false,
        });
    }

    // The incumbent from the value search is not necessarily the canonical
    // witness; rerun a lexicographic first-fit at the optimal size. The
    // value stays certified even if the budget dies during this pass.
    let witness = lex_least_global_witness(g, kind, value, clock);
    Ok(SolveResult {
        kind,
        value,
        witness: witness.or(search.incumbent),
        witness_edges: None,
        method: Method::BranchAndBound,
        nodes_explored: clock.nodes,
        certified: true,
    })
}

impl GlobalSearch<'_> {
    fn descend(
        &mut self,
        idx: usize,
        chosen: &VertexSet,
        excluded: &VertexSet,
        dominated: &VertexSet,
        clock: &mut Clock,
    ) {
        if !clock.tick() || self.incumbent_value == self.floor {
            return;
        }
        let g = self.g;
        let n = g.order();
        let size = chosen.len();

        // A valid chosen set closes this subtree: supersets only grow.
        let strong = self.kind.strong();
        let mut deficit_max = 0usize;
        for v in chosen.iter() {
            let d = required_inside(g.degree(v), strong)
                .saturating_sub(g.neighbors(v).intersection_len(chosen));
            deficit_max = deficit_max.max(d);
        }
        let undominated = n - dominated.len();
        if !chosen.is_empty() && deficit_max == 0 && undominated == 0 {
            if size < self.incumbent_value
                && kernel::is_alliance(g, chosen, self.kind).expect("chosen is in range")
            {
                self.incumbent_value = size;
                self.incumbent = Some(chosen.clone());
            }
            return;
        }

        // Completion bounds: each further vertex dominates at most Δ+1 new
        // vertices and repairs each member's deficit by at most one.
        let dom_need = undominated.div_ceil(g.max_degree() + 1);
        if size + dom_need.max(deficit_max).max(1) >= self.incumbent_value {
            return;
        }

        if idx == n {
            return;
        }

        // Feasibility: a member short on inside neighbors must still have
        // enough undecided neighbors, an undominated excluded vertex must
        // still have an undecided neighbor.
        for v in chosen.iter() {
            let deficit = required_inside(g.degree(v), strong)
                .saturating_sub(g.neighbors(v).intersection_len(chosen));
            let undecided = g.degree(v)
                - g.neighbors(v).intersection_len(chosen)
                - g.neighbors(v).intersection_len(excluded);
            if deficit > undecided {
                return;
            }
        }
        for u in excluded.iter() {
            if !dominated.contains(u) && g.neighbors(u).is_subset_of(excluded) {
                return;
            }
        }

        let v = self.order[idx];

        let mut with_v = chosen.clone();
        with_v.insert(v);
        let mut dom_with = dominated.clone();
        dom_with.insert(v);
        dom_with.union_with(g.neighbors(v));
        self.descend(idx + 1, &with_v, excluded, &dom_with, clock);

        let mut without_v = excluded.clone();
        without_v.insert(v);
        self.descend(idx + 1, chosen, &without_v, dominated, clock);
    }
}

/// First valid size-k global alliance in lexicographic order of sorted id
/// sequences; this is the canonical witness.
fn lex_least_global_witness(
    g: &Graph,
    kind: AllianceKind,
    k: usize,
    clock: &mut Clock,
) -> Option<VertexSet> {
    let n = g.order();
    let mut chosen = VertexSet::new(n);
    lex_witness_descend(g, kind, k, 0, &mut chosen, clock)
}

fn lex_witness_descend(
    g: &Graph,
    kind: AllianceKind,
    k: usize,
    next: usize,
    chosen: &mut VertexSet,
    clock: &mut Clock,
) -> Option<VertexSet> {
    if !clock.tick() {
        return None;
    }
    let picked = chosen.len();
    if picked == k {
        if kernel::is_alliance(g, chosen, kind).expect("witness candidates are in range") {
            return Some(chosen.clone());
        }
        return None;
    }
    let slots = k - picked;
    let n = g.order();
    let strong = kind.strong();
    // Everything still addable lies at ids >= next.
    for v in chosen.iter() {
        let inside = g.neighbors(v).intersection_len(chosen);
        let deficit = required_inside(g.degree(v), strong).saturating_sub(inside);
        if deficit > slots {
            return None;
        }
        let addable_neighbors = g.neighbors(v).iter().filter(|&u| u >= next && !chosen.contains(u)).count();
        if deficit > addable_neighbors {
            return None;
        }
    }
    for u in 0..n {
        if chosen.contains(u) || u >= next {
            continue;
        }
        // u is already passed over; it must be dominated by the chosen
        // prefix or by some future pick.
        if g.neighbors(u).intersection_len(chosen) > 0 {
            continue;
        }
        if !g.neighbors(u).iter().any(|w| w >= next) {
            return None;
        }
    }
    if n - next < slots {
        return None;
    }
    for v in next..n {
        chosen.insert(v);
        let hit = lex_witness_descend(g, kind, k, v + 1, chosen, clock);
        chosen.remove(v);
        if hit.is_some() || clock.exhausted {
            return hit;
        }
    }
    None
}

/// Global kinds on a disconnected graph: solve each component and take the
/// union. Alliance and domination conditions are component-local, and
/// composing per-component lexicographic minima yields the overall
/// lexicographic minimum.
fn solve_global_per_component(
    g: &Graph,
    kind: AllianceKind,
    clock: &mut Clock,
) -> Result<SolveResult, SolveError> {
    let comps = g.components_within(&g.vertex_set());
    let mut total = 0usize;
    let mut witness = VertexSet::new(g.order());
    let mut certified = true;
    for comp in &comps {
        let members = comp.to_vec();
        let sub = g.induced_subgraph(comp).expect("component is nonempty");
        let res = solve_global(&sub, kind, clock)?;
        total += res.value;
        certified &= res.certified;
        match res.witness {
            Some(w) if res.certified => {
                for local in w.iter() {
                    witness.insert(members[local]);
                }
            }
            _ => certified = false,
        }
    }
    Ok(SolveResult {
        kind,
        value: total,
        witness: certified.then_some(witness),
        witness_edges: None,
        method: Method::BranchAndBound,
        nodes_explored: clock.nodes,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, GraphFamily};
    use crate::oracle::brute_force_oracle;

    fn solve(g: &Graph, kind: AllianceKind) -> SolveResult {
        min_alliance(g, kind, Budget::unlimited()).unwrap()
    }

    #[test]
    fn endpoint_of_path_is_a_defensive_singleton() {
        let g = generate(&GraphFamily::Path { order: 4 }).unwrap();
        let r = solve(&g, AllianceKind::Defensive);
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn global_defensive_of_c5_is_three() {
        let g = generate(&GraphFamily::Cycle { len: 5 }).unwrap();
        let r = solve(&g, AllianceKind::GlobalDefensive);
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(r.method, Method::BranchAndBound);
    }

    #[test]
    fn defensive_of_k5_needs_a_triangle() {
        let g = generate(&GraphFamily::Complete { order: 5 }).unwrap();
        assert_eq!(solve(&g, AllianceKind::Defensive).value, 3);
    }

    #[test]
    fn connected_subset_counts() {
        let c4 = generate(&GraphFamily::Cycle { len: 4 }).unwrap();
        assert_eq!(enumerate_connected_subsets(&c4, 2).count(), 8);
        let k3 = generate(&GraphFamily::Complete { order: 3 }).unwrap();
        assert_eq!(enumerate_connected_subsets(&k3, 3).count(), 7);
        let p3 = generate(&GraphFamily::Path { order: 3 }).unwrap();
        assert_eq!(enumerate_connected_subsets(&p3, 2).count(), 5);
    }

    #[test]
    fn connected_subsets_match_mask_sweep() {
        // Cross-check the enumerator against the definition on small graphs.
        for fam in [
            GraphFamily::Cycle { len: 6 },
            GraphFamily::Star { leaves: 4 },
            GraphFamily::CompleteBipartite { a: 2, b: 3 },
        ] {
            let g = generate(&fam).unwrap();
            let n = g.order();
            let mut expected: Vec<VertexSet> = Vec::new();
            for size in 1..=n {
                for mask in 1u32..1 << n {
                    if mask.count_ones() as usize != size {
                        continue;
                    }
                    let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                    let s = VertexSet::from_vertices(n, &vs);
                    if g.is_connected_within(&s) {
                        expected.push(s);
                    }
                }
            }
            let mut got: Vec<VertexSet> = enumerate_connected_subsets(&g, n).collect();
            assert_eq!(got.len(), expected.len(), "{fam:?}");
            got.sort_by_key(|a| (a.len(), a.clone()));
            expected.sort_by_key(|a| (a.len(), a.clone()));
            assert_eq!(got, expected, "{fam:?}");
        }
    }

    #[test]
    fn enumeration_sizes_are_nondecreasing() {
        let g = generate(&GraphFamily::Petersen).unwrap();
        let sizes: Vec<usize> = enumerate_connected_subsets(&g, 3).map(|s| s.len()).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn agrees_with_oracle_on_mixed_graphs() {
        let graphs = [
            generate(&GraphFamily::Cycle { len: 6 }).unwrap(),
            generate(&GraphFamily::Star { leaves: 4 }).unwrap(),
            generate(&GraphFamily::CompleteBipartite { a: 2, b: 3 }).unwrap(),
            generate(&GraphFamily::Hypercube { dim: 3 }).unwrap(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap(),
        ];
        for g in &graphs {
            for kind in AllianceKind::ALL {
                let s = solve(g, kind);
                let o = brute_force_oracle(g, kind).unwrap();
                assert_eq!(s.value, o.value, "{kind} on {g:?}");
                assert_eq!(s.witness, o.witness, "{kind} on {g:?}");
            }
        }
    }

    #[test]
    fn disconnected_local_takes_component_minimum() {
        // K_2 plus C_5: the K_2 side gives a defensive singleton.
        let g = Graph::from_edges(7, &[(0, 1), (2, 3), (3, 4), (4, 5), (5, 6), (2, 6)]).unwrap();
        let r = solve(&g, AllianceKind::Defensive);
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn disconnected_global_sums_components() {
        // Two triangles: each needs a global-defensive pair.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = solve(&g, AllianceKind::GlobalDefensive);
        assert_eq!(r.value, 4);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 1, 3, 4]);
        let o = brute_force_oracle(&g, AllianceKind::GlobalDefensive).unwrap();
        assert_eq!(o.value, 4);
    }

    #[test]
    fn connected_global_on_disconnected_graph_is_infeasible() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            min_alliance(&g, AllianceKind::GlobalConnectedDefensive, Budget::unlimited()),
            Err(SolveError::Infeasible { kind: AllianceKind::GlobalConnectedDefensive })
        ));
    }

    #[test]
    fn node_budget_yields_uncertified_partial() {
        let g = generate(&GraphFamily::Hypercube { dim: 4 }).unwrap();
        let r = min_alliance(&g, AllianceKind::Defensive, Budget::nodes(3)).unwrap();
        assert!(!r.certified);
        assert!(r.witness.is_none());
        assert!(r.value >= 1);
    }

    #[test]
    fn line_alliance_reports_edges() {
        let g = generate(&GraphFamily::Complete { order: 4 }).unwrap();
        let r = line_alliance_number(&g, AllianceKind::Defensive, Budget::unlimited()).unwrap();
        assert_eq!(r.value, 3);
        let edges = r.witness_edges.unwrap();
        assert_eq!(edges.len(), 3);
        for (u, v) in edges {
            assert!(g.has_edge(u, v));
        }
    }

    #[test]
    fn line_alliance_of_cycles_is_two() {
        for len in 3..=8 {
            let g = generate(&GraphFamily::Cycle { len }).unwrap();
            let r = line_alliance_number(&g, AllianceKind::Defensive, Budget::unlimited()).unwrap();
            assert_eq!(r.value, 2, "cycle length {len}");
        }
    }

    #[test]
    fn repeated_runs_are_identical() {
        let g = generate(&GraphFamily::Petersen).unwrap();
        for kind in AllianceKind::ALL {
            let a = solve(&g, kind);
            let b = solve(&g, kind);
            assert_eq!(a.value, b.value);
            assert_eq!(a.witness, b.witness);
            assert_eq!(a.nodes_explored, b.nodes_explored);
        }
    }
}
