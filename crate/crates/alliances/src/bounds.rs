//! Degree-based bounds, closed forms and small-value classifiers for the
//! six alliance numbers of a graph and of its line graph.
//!
//! Everything here is evaluated from the graph's degree data and small
//! pattern scans; none of it consults the solvers, so cross-checking the
//! two sides in the verification harness is meaningful.

use serde::ser::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::family::k_subsets_lex;
use crate::graph::Graph;
use crate::kernel::{self, AllianceKind};
use crate::linegraph;
use crate::metrics;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {order} exceeds the exhaustive cap {cap}")]
    CapExceeded { order: usize, cap: usize },
}

/// ⌈√x⌉ − 1, exactly, for the square-root style lower bounds.
fn ceil_sqrt_minus_one(x: usize) -> usize {
    let s = x.isqrt();
    if s * s == x {
        s - 1
    } else {
        s
    }
}

// ---------------------------------------------------------------------------
// Degree sandwich for a(L) and â(L)
// ---------------------------------------------------------------------------

/// Interval bounds on the line graph's alliance numbers from the two
/// smallest and the largest degree of the base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LineSandwich {
    /// Bounds on a(L): [⌈(δn+δn−1−1)/2⌉, δ1], upper δ1−1 with a unique
    /// vertex of maximum degree.
    pub defensive: (usize, usize),
    /// Bounds on â(L): [⌈(δn+δn−1)/2⌉, δ1].
    pub strong: (usize, usize),
    pub unique_max_degree: bool,
}

pub fn line_alliance_sandwich(g: &Graph) -> Result<LineSandwich, BoundsError> {
    if g.size() == 0 {
        return Err(BoundsError::EdgelessGraph);
    }
    let seq = g.degree_sequence();
    let n = seq.len();
    let d1 = seq[0];
    let (dn, dn1) = (seq[n - 1], seq[n - 2]);
    let unique_max_degree = n == 1 || seq[1] < d1;
    let defensive_upper = if unique_max_degree { d1 - 1 } else { d1 };
    Ok(LineSandwich {
        defensive: ((dn + dn1).saturating_sub(1).div_ceil(2), defensive_upper),
        strong: ((dn + dn1).div_ceil(2), d1),
        unique_max_degree,
    })
}

/// For a δ-regular graph with δ > 0, a(L) = â(L) = δ.
pub fn regular_line_exact(g: &Graph) -> Option<usize> {
    match g.regularity() {
        Some(d) if d > 0 => Some(d),
        _ => None,
    }
}

/// Bipartition with constant degree δ1 on one side and δ2 on the other,
/// returned as (δ1, δ2) with δ1 ≥ δ2. None if no such bipartition exists.
pub fn semiregular_bipartition(g: &Graph) -> Option<(usize, usize)> {
    if g.size() == 0 {
        return None;
    }
    let n = g.order();
    // 2-color each component, then orient the per-component degree pairs
    // consistently.
    let mut color = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != usize::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v).iter() {
                if color[u] == usize::MAX {
                    color[u] = color[v] ^ 1;
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return None; // odd cycle
                }
            }
        }
    }
    // Each component offers its (side-0 degree, side-1 degree) pair in
    // either orientation; all components must agree on a single (a, b).
    let comps = g.components_within(&g.vertex_set());
    let mut pairs = Vec::new();
    for comp in &comps {
        let mut side = [None::<usize>; 2];
        for v in comp.iter() {
            let s = color[v];
            match side[s] {
                None => side[s] = Some(g.degree(v)),
                Some(d) if d == g.degree(v) => {}
                Some(_) => return None,
            }
        }
        // A one-sided component is a single isolated vertex.
        let a = side[0];
        let b = side[1];
        pairs.push((a, b));
    }
    let candidates: Vec<(usize, usize)> = {
        // Try to unify orientations; degrees involved are tiny, brute force
        // over the two choices per component via successive constraint.
        let mut options: Vec<(Option<usize>, Option<usize>)> = vec![(None, None)];
        for &(a, b) in &pairs {
            let mut next = Vec::new();
            for &(x, y) in &options {
                for (p, q) in [(a, b), (b, a)] {
                    let nx = merge(x, p);
                    let ny = merge(y, q);
                    if let (Ok(nx), Ok(ny)) = (nx, ny) {
                        if !next.contains(&(nx, ny)) {
                            next.push((nx, ny));
                        }
                    }
                }
            }
            options = next;
            if options.is_empty() {
                return None;
            }
        }
        options
            .into_iter()
            .filter_map(|(x, y)| match (x, y) {
                (Some(x), Some(y)) => Some((x.max(y), x.min(y))),
                _ => None,
            })
            .collect()
    };
    let best = candidates.into_iter().max()?;
    // Isolated vertices would surface as a constant degree-0 side, which
    // only happens with no edges at all; m >= 1 excludes that.
    if best.1 == 0 {
        return None;
    }
    Some(best)
}

fn merge(current: Option<usize>, incoming: Option<usize>) -> Result<Option<usize>, ()> {
    match (current, incoming) {
        (None, x) => Ok(x),
        (x, None) => Ok(x),
        (Some(a), Some(b)) if a == b => Ok(Some(a)),
        _ => Err(()),
    }
}

/// For a (δ1, δ2)-semiregular bipartite graph:
/// a(L) = ⌈(δ1+δ2−1)/2⌉ and â(L) = ⌈(δ1+δ2)/2⌉.
pub fn semiregular_line_exact(g: &Graph) -> Option<(usize, usize)> {
    let (d1, d2) = semiregular_bipartition(g)?;
    Some(((d1 + d2 - 1).div_ceil(2), (d1 + d2).div_ceil(2)))
}

// ---------------------------------------------------------------------------
// Small-value classifiers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassValue {
    One,
    Two,
    Three,
    AtLeastFour,
}

impl ClassValue {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassValue::One => "1",
            ClassValue::Two => "2",
            ClassValue::Three => "3",
            ClassValue::AtLeastFour => ">=4",
        }
    }

    /// Numeric class for 1..3, None for ≥4.
    pub fn exact(self) -> Option<usize> {
        match self {
            ClassValue::One => Some(1),
            ClassValue::Two => Some(2),
            ClassValue::Three => Some(3),
            ClassValue::AtLeastFour => None,
        }
    }

    pub fn of_value(v: usize) -> ClassValue {
        match v {
            1 => ClassValue::One,
            2 => ClassValue::Two,
            3 => ClassValue::Three,
            _ => ClassValue::AtLeastFour,
        }
    }
}

impl Serialize for ClassValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// A vertex of degree at most one.
    LowDegreeVertex,
    /// Two adjacent vertices of degree at most three.
    AdjacentLowDegreePair,
    /// Induced path u-v-w with end degrees ≤ 3 and middle degree ≤ 5.
    InducedPathTriple,
    /// Triangle under the applicable degree caps.
    Triangle,
    /// A connected component that is a single edge.
    K2Component,
    /// Degree-1 vertex adjacent to a degree-2 vertex.
    PendantAtDegreeTwo,
    /// Path u-v-w (as a subgraph) with δ(u)+δ(v) ≤ 5 and δ(v)+δ(w) ≤ 5.
    LightPathTriple,
    /// Path u-v-w-x (as a subgraph) with end-pair sums ≤ 5, middle sum ≤ 7.
    LightPathQuad,
    /// Star K_{1,3} with hub-leaf degree sums ≤ 7.
    LightClaw,
}

impl Pattern {
    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::LowDegreeVertex => "low-degree-vertex",
            Pattern::AdjacentLowDegreePair => "adjacent-low-degree-pair",
            Pattern::InducedPathTriple => "induced-path-triple",
            Pattern::Triangle => "triangle",
            Pattern::K2Component => "k2-component",
            Pattern::PendantAtDegreeTwo => "pendant-at-degree-two",
            Pattern::LightPathTriple => "light-path-triple",
            Pattern::LightPathQuad => "light-path-quad",
            Pattern::LightClaw => "light-claw",
        }
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    /// Pattern vertices in path order (hub first for the claw).
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SmallAllianceClass {
    pub class: ClassValue,
    pub witness: Option<PatternWitness>,
}

/// Classifies a(Γ) into {1, 2, 3, ≥4} by degree-constrained pattern scans.
///
/// Cases are tried in order, so class k implies every smaller class failed.
pub fn classify_small_alliance(g: &Graph) -> SmallAllianceClass {
    let n = g.order();
    // a = 1: some vertex of degree ≤ 1.
    if let Some(v) = (0..n).find(|&v| g.degree(v) <= 1) {
        return SmallAllianceClass {
            class: ClassValue::One,
            witness: Some(PatternWitness { pattern: Pattern::LowDegreeVertex, vertices: vec![v] }),
        };
    }
    // a = 2: two adjacent vertices of degree ≤ 3 (min degree ≥ 2 holds here).
    for (u, v) in g.edges() {
        if g.degree(u) <= 3 && g.degree(v) <= 3 {
            return SmallAllianceClass {
                class: ClassValue::Two,
                witness: Some(PatternWitness {
                    pattern: Pattern::AdjacentLowDegreePair,
                    vertices: vec![u, v],
                }),
            };
        }
    }
    // a = 3 (a): induced P_3 with end degrees ≤ 3 and middle degree ≤ 5.
    for v in 0..n {
        if g.degree(v) > 5 {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v).to_vec();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.degree(u) <= 3 && g.degree(w) <= 3 && !g.has_edge(u, w) {
                    return SmallAllianceClass {
                        class: ClassValue::Three,
                        witness: Some(PatternWitness {
                            pattern: Pattern::InducedPathTriple,
                            vertices: vec![u, v, w],
                        }),
                    };
                }
            }
        }
    }
    // a = 3 (b): triangle with all degrees ≤ 5.
    if let Some(t) = find_triangle(g, |a, b| g.degree(a) <= 5 && g.degree(b) <= 5) {
        return SmallAllianceClass {
            class: ClassValue::Three,
            witness: Some(PatternWitness { pattern: Pattern::Triangle, vertices: t }),
        };
    }
    SmallAllianceClass { class: ClassValue::AtLeastFour, witness: None }
}

/// Classifies a(L(Γ)) into {1, 2, 3, ≥4} directly on Γ via subgraph scans
/// with degree-sum caps.
pub fn classify_small_line_alliance(g: &Graph) -> Result<SmallAllianceClass, BoundsError> {
    if g.size() == 0 {
        return Err(BoundsError::EdgelessGraph);
    }
    let n = g.order();
    // a(L) = 1: K_2 component or a pendant vertex at a degree-2 vertex.
    for u in 0..n {
        if g.degree(u) != 1 {
            continue;
        }
        let v = g.neighbors(u).first().expect("degree one");
        if g.degree(v) == 1 {
            return Ok(SmallAllianceClass {
                class: ClassValue::One,
                witness: Some(PatternWitness {
                    pattern: Pattern::K2Component,
                    vertices: vec![u.min(v), u.max(v)],
                }),
            });
        }
        if g.degree(v) == 2 {
            return Ok(SmallAllianceClass {
                class: ClassValue::One,
                witness: Some(PatternWitness {
                    pattern: Pattern::PendantAtDegreeTwo,
                    vertices: vec![u, v],
                }),
            });
        }
    }
    // a(L) = 2: subgraph P_3 with both incident degree sums ≤ 5.
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).to_vec();
        for (i, &u) in nbrs.iter().enumerate() {
            if g.degree(u) + g.degree(v) > 5 {
                continue;
            }
            for &w in &nbrs[i + 1..] {
                if g.degree(v) + g.degree(w) <= 5 {
                    return Ok(SmallAllianceClass {
                        class: ClassValue::Two,
                        witness: Some(PatternWitness {
                            pattern: Pattern::LightPathTriple,
                            vertices: vec![u, v, w],
                        }),
                    });
                }
            }
        }
    }
    // a(L) = 3 (a): subgraph P_4, end-pair sums ≤ 5, middle sum ≤ 7.
    for v in 0..n {
        for w in g.neighbors(v).iter() {
            if g.degree(v) + g.degree(w) > 7 {
                continue;
            }
            for u in g.neighbors(v).iter() {
                if u == w || g.degree(u) + g.degree(v) > 5 {
                    continue;
                }
                for x in g.neighbors(w).iter() {
                    if x == v || x == u {
                        continue;
                    }
                    if g.degree(w) + g.degree(x) <= 5 {
                        return Ok(SmallAllianceClass {
                            class: ClassValue::Three,
                            witness: Some(PatternWitness {
                                pattern: Pattern::LightPathQuad,
                                vertices: vec![u, v, w, x],
                            }),
                        });
                    }
                }
            }
        }
    }
    // a(L) = 3 (b): triangle with pairwise degree sums ≤ 7.
    if let Some(t) = find_triangle(g, |a, b| g.degree(a) + g.degree(b) <= 7) {
        return Ok(SmallAllianceClass {
            class: ClassValue::Three,
            witness: Some(PatternWitness { pattern: Pattern::Triangle, vertices: t }),
        });
    }
    // a(L) = 3 (c): K_{1,3} with hub-leaf degree sums ≤ 7.
    for v in 0..n {
        let light: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter(|&u| g.degree(v) + g.degree(u) <= 7)
            .collect();
        if light.len() >= 3 {
            return Ok(SmallAllianceClass {
                class: ClassValue::Three,
                witness: Some(PatternWitness {
                    pattern: Pattern::LightClaw,
                    vertices: vec![v, light[0], light[1], light[2]],
                }),
            });
        }
    }
    Ok(SmallAllianceClass { class: ClassValue::AtLeastFour, witness: None })
}

/// First triangle (ascending) whose three edges all satisfy `edge_ok`.
fn find_triangle(g: &Graph, edge_ok: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let n = g.order();
    for u in 0..n {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            if !edge_ok(u, v) {
                continue;
            }
            for w in g.neighbors(u).iter().filter(|&w| w > v) {
                if g.has_edge(v, w) && edge_ok(u, w) && edge_ok(v, w) {
                    return Some(vec![u, v, w]);
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Global-alliance lower bounds
// ---------------------------------------------------------------------------

/// γ_a(L) ≥ ⌈√(m+4) − 1⌉, valid for m > 6.
pub fn global_line_sqrt_bound(g: &Graph) -> Option<usize> {
    let m = g.size();
    if m > 6 {
        Some(ceil_sqrt_minus_one(m + 4))
    } else {
        None
    }
}

/// Lower bounds on the line graph's global numbers from the two largest
/// degrees: γ_a(L) ≥ ⌈2m/(δ1+δ2+1)⌉ and γ_â(L) ≥ ⌈2m/(δ1+δ2)⌉.
pub fn line_global_degree_bounds(g: &Graph) -> Result<(usize, usize), BoundsError> {
    if g.size() == 0 {
        return Err(BoundsError::EdgelessGraph);
    }
    let seq = g.degree_sequence();
    let (d1, d2) = (seq[0], seq[1]);
    let m2 = 2 * g.size();
    Ok((m2.div_ceil(d1 + d2 + 1), m2.div_ceil(d1 + d2)))
}

/// Lower bounds on the graph's own global numbers:
/// γ_a ≥ ⌈2n/(δ1+3)⌉ and γ_â ≥ ⌈n/(⌊δ1/2⌋+1)⌉.
pub fn global_degree_bounds(g: &Graph) -> (usize, usize) {
    let n = g.order();
    if n == 0 {
        return (0, 0);
    }
    let d1 = g.max_degree();
    ((2 * n).div_ceil(d1 + 3), n.div_ceil(d1 / 2 + 1))
}

/// Diameter-based lower bounds on the connected-global numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ConnectedGlobalBounds {
    /// γ_ca(Γ) ≥ ⌈√(D+n) − 1⌉.
    pub graph_lower: usize,
    /// γ_ca(L) ≥ ⌈√(D+m−1) − 1⌉; None for the edgeless single vertex.
    pub line_lower: Option<usize>,
}

pub fn connected_global_bounds(g: &Graph) -> Result<ConnectedGlobalBounds, BoundsError> {
    let m = metrics::metrics(g);
    let Some(diameter) = m.diameter.finite() else {
        return Err(BoundsError::Disconnected);
    };
    let graph_lower = ceil_sqrt_minus_one(diameter + g.order());
    let line_lower = if g.size() >= 1 {
        Some(ceil_sqrt_minus_one(diameter + g.size() - 1))
    } else {
        None
    };
    Ok(ConnectedGlobalBounds { graph_lower, line_lower })
}

// ---------------------------------------------------------------------------
// Comparing a(Γ) with a(L(Γ))
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonVerdict {
    /// a(Γ) ≤ a(L(Γ)) is forced by degrees alone.
    Guaranteed,
    Inconclusive,
}

impl ComparisonVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ComparisonVerdict::Guaranteed => "a(G) <= a(L(G)) guaranteed",
            ComparisonVerdict::Inconclusive => "inconclusive",
        }
    }
}

impl Serialize for ComparisonVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// a(Γ) ≤ ⌈n/2⌉ always holds, so ⌈n/2⌉ ≤ ⌈(δn+δn−1−1)/2⌉ (in particular
/// n/2 < δn) forces a(Γ) ≤ a(L(Γ)).
pub fn comparison_verdict(g: &Graph) -> Result<ComparisonVerdict, BoundsError> {
    let sandwich = line_alliance_sandwich(g)?;
    let n = g.order();
    let dn = g.min_degree();
    if n.div_ceil(2) <= sandwich.defensive.0 || n < 2 * dn {
        Ok(ComparisonVerdict::Guaranteed)
    } else {
        Ok(ComparisonVerdict::Inconclusive)
    }
}

/// Outcome of testing the characteristic sets of all minimum defensive
/// alliances of L(Γ).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum CharacteristicSetVerdict {
    /// Some minimum defensive alliance of L(Γ) has a characteristic set
    /// that is a defensive alliance of Γ; then a(Γ) ≤ a(L(Γ)).
    HypothesisMet {
        a_graph: usize,
        a_line: usize,
        witness_selection: Vec<usize>,
        holds: bool,
    },
    /// No minimum defensive alliance of L(Γ) has that property.
    HypothesisNotMet { a_line: usize },
}

pub const CHARACTERISTIC_SCAN_CAP: usize = 16;

/// Enumerates all minimum defensive alliances of L(Γ) by exhaustive sweep
/// and tests their characteristic sets in Γ.
pub fn characteristic_set_comparison(g: &Graph) -> Result<CharacteristicSetVerdict, BoundsError> {
    if g.size() == 0 {
        return Err(BoundsError::EdgelessGraph);
    }
    if g.size() > CHARACTERISTIC_SCAN_CAP {
        return Err(BoundsError::CapExceeded { order: g.size(), cap: CHARACTERISTIC_SCAN_CAP });
    }
    if g.order() > CHARACTERISTIC_SCAN_CAP {
        return Err(BoundsError::CapExceeded { order: g.order(), cap: CHARACTERISTIC_SCAN_CAP });
    }
    let lg = linegraph::line_graph(g).expect("m >= 1 checked");
    let a_line = min_by_sweep(lg.graph());
    let minima = all_alliances_of_size(lg.graph(), a_line);

    for selection in &minima {
        let c = linegraph::characteristic_set(&lg, selection).expect("selection is nonempty");
        if kernel::is_alliance(g, &c, AllianceKind::Defensive).expect("in range") {
            let a_graph = min_by_sweep(g);
            return Ok(CharacteristicSetVerdict::HypothesisMet {
                a_graph,
                a_line,
                witness_selection: selection.to_vec(),
                holds: a_graph <= a_line,
            });
        }
    }
    Ok(CharacteristicSetVerdict::HypothesisNotMet { a_line })
}

/// Minimum defensive-alliance size by plain subset sweep (kernel only).
fn min_by_sweep(g: &Graph) -> usize {
    let n = g.order();
    for size in 1..=n {
        for combo in k_subsets_lex(n, size) {
            let s = VertexSet::from_vertices(n, &combo);
            if kernel::is_alliance(g, &s, AllianceKind::Defensive).expect("in range") {
                return size;
            }
        }
    }
    unreachable!("the full vertex set is always a defensive alliance")
}

fn all_alliances_of_size(g: &Graph, size: usize) -> Vec<VertexSet> {
    let n = g.order();
    k_subsets_lex(n, size)
        .into_iter()
        .map(|combo| VertexSet::from_vertices(n, &combo))
        .filter(|s| kernel::is_alliance(g, s, AllianceKind::Defensive).expect("in range"))
        .collect()
}

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundEntry {
    pub id: &'static str,
    /// Which alliance number of which graph this entry bounds, e.g. "a(L)".
    pub target: &'static str,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    pub formula: &'static str,
}

impl BoundEntry {
    fn not_applicable(id: &'static str, target: &'static str, reason: String, formula: &'static str) -> Self {
        BoundEntry {
            id,
            target,
            applicable: false,
            reason: Some(reason),
            lower: None,
            upper: None,
            exact: None,
            formula,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundReport {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    /// Per-target interval consistency: merged lower ≤ exact ≤ merged upper.
    pub fn consistent(&self) -> bool {
        let targets: std::collections::BTreeSet<&str> =
            self.entries.iter().map(|e| e.target).collect();
        for target in targets {
            let entries: Vec<&BoundEntry> =
                self.entries.iter().filter(|e| e.target == target && e.applicable).collect();
            let lower = entries.iter().filter_map(|e| e.lower).max().unwrap_or(0);
            let upper = entries.iter().filter_map(|e| e.upper).min().unwrap_or(usize::MAX);
            if lower > upper {
                return false;
            }
            for exact in entries.iter().filter_map(|e| e.exact) {
                if exact < lower || exact > upper {
                    return false;
                }
            }
        }
        true
    }
}

/// Evaluates every bound and classifier on one graph.
pub fn bound_report(g: &Graph) -> BoundReport {
    let mut entries = Vec::new();

    const SANDWICH_DEF: &str = "ceil((dn+dn1-1)/2) <= a(L) <= d1 (d1-1 with a unique max degree)";
    const SANDWICH_STR: &str = "ceil((dn+dn1)/2) <= a_hat(L) <= d1";
    match line_alliance_sandwich(g) {
        Ok(s) => {
            let exact_def = (s.defensive.0 == s.defensive.1).then_some(s.defensive.0);
            let exact_str = (s.strong.0 == s.strong.1).then_some(s.strong.0);
            entries.push(BoundEntry {
                id: "degree-sandwich",
                target: "a(L)",
                applicable: true,
                reason: None,
                lower: Some(s.defensive.0),
                upper: Some(s.defensive.1),
                exact: exact_def,
                formula: SANDWICH_DEF,
            });
            entries.push(BoundEntry {
                id: "degree-sandwich-strong",
                target: "a_hat(L)",
                applicable: true,
                reason: None,
                lower: Some(s.strong.0),
                upper: Some(s.strong.1),
                exact: exact_str,
                formula: SANDWICH_STR,
            });
        }
        Err(e) => {
            entries.push(BoundEntry::not_applicable("degree-sandwich", "a(L)", e.to_string(), SANDWICH_DEF));
            entries.push(BoundEntry::not_applicable(
                "degree-sandwich-strong",
                "a_hat(L)",
                e.to_string(),
                SANDWICH_STR,
            ));
        }
    }

    const REGULAR: &str = "d-regular, d > 0: a(L) = a_hat(L) = d";
    match regular_line_exact(g) {
        Some(d) => {
            for (id, target) in [("regular-exact", "a(L)"), ("regular-exact-strong", "a_hat(L)")] {
                entries.push(BoundEntry {
                    id,
                    target,
                    applicable: true,
                    reason: None,
                    lower: Some(d),
                    upper: Some(d),
                    exact: Some(d),
                    formula: REGULAR,
                });
            }
        }
        None => {
            entries.push(BoundEntry::not_applicable(
                "regular-exact",
                "a(L)",
                "graph is not d-regular with d > 0".into(),
                REGULAR,
            ));
        }
    }

    const SEMIREGULAR: &str = "(d1,d2)-semiregular bipartite: a(L) = ceil((d1+d2-1)/2), a_hat(L) = ceil((d1+d2)/2)";
    match semiregular_line_exact(g) {
        Some((a, a_hat)) => {
            entries.push(BoundEntry {
                id: "semiregular-exact",
                target: "a(L)",
                applicable: true,
                reason: None,
                lower: Some(a),
                upper: Some(a),
                exact: Some(a),
                formula: SEMIREGULAR,
            });
            entries.push(BoundEntry {
                id: "semiregular-exact-strong",
                target: "a_hat(L)",
                applicable: true,
                reason: None,
                lower: Some(a_hat),
                upper: Some(a_hat),
                exact: Some(a_hat),
                formula: SEMIREGULAR,
            });
        }
        None => entries.push(BoundEntry::not_applicable(
            "semiregular-exact",
            "a(L)",
            "no semiregular bipartition".into(),
            SEMIREGULAR,
        )),
    }

    const CLASS: &str = "pattern classification of a into {1, 2, 3, >=4}";
    let class = classify_small_alliance(g);
    entries.push(BoundEntry {
        id: "small-class",
        target: "a(G)",
        applicable: true,
        reason: class.witness.as_ref().map(|w| format!("{}: {:?}", w.pattern.as_str(), w.vertices)),
        lower: class.exact_or_floor().0,
        upper: class.exact_or_floor().1,
        exact: class.class.exact(),
        formula: CLASS,
    });

    const LINE_CLASS: &str = "pattern classification of a(L) into {1, 2, 3, >=4}";
    match classify_small_line_alliance(g) {
        Ok(class) => entries.push(BoundEntry {
            id: "line-small-class",
            target: "a(L)",
            applicable: true,
            reason: class.witness.as_ref().map(|w| format!("{}: {:?}", w.pattern.as_str(), w.vertices)),
            lower: class.exact_or_floor().0,
            upper: class.exact_or_floor().1,
            exact: class.class.exact(),
            formula: LINE_CLASS,
        }),
        Err(e) => entries.push(BoundEntry::not_applicable("line-small-class", "a(L)", e.to_string(), LINE_CLASS)),
    }

    const SQRT: &str = "m > 6: gamma_a(L) >= ceil(sqrt(m+4) - 1)";
    match global_line_sqrt_bound(g) {
        Some(b) => entries.push(BoundEntry {
            id: "global-sqrt",
            target: "gamma_a(L)",
            applicable: true,
            reason: None,
            lower: Some(b),
            upper: None,
            exact: None,
            formula: SQRT,
        }),
        None => entries.push(BoundEntry::not_applicable(
            "global-sqrt",
            "gamma_a(L)",
            format!("needs m > 6, graph has m = {}", g.size()),
            SQRT,
        )),
    }

    const LINE_DEGREE: &str = "gamma_a(L) >= ceil(2m/(d1+d2+1)), gamma_a_hat(L) >= ceil(2m/(d1+d2))";
    match line_global_degree_bounds(g) {
        Ok((ga, gah)) => {
            entries.push(BoundEntry {
                id: "line-global-degree",
                target: "gamma_a(L)",
                applicable: true,
                reason: None,
                lower: Some(ga),
                upper: None,
                exact: None,
                formula: LINE_DEGREE,
            });
            entries.push(BoundEntry {
                id: "line-global-degree-strong",
                target: "gamma_a_hat(L)",
                applicable: true,
                reason: None,
                lower: Some(gah),
                upper: None,
                exact: None,
                formula: LINE_DEGREE,
            });
        }
        Err(e) => entries.push(BoundEntry::not_applicable(
            "line-global-degree",
            "gamma_a(L)",
            e.to_string(),
            LINE_DEGREE,
        )),
    }

    const DEGREE: &str = "gamma_a(G) >= ceil(2n/(d1+3)), gamma_a_hat(G) >= ceil(n/(floor(d1/2)+1))";
    let (ga, gah) = global_degree_bounds(g);
    entries.push(BoundEntry {
        id: "global-degree",
        target: "gamma_a(G)",
        applicable: true,
        reason: None,
        lower: Some(ga),
        upper: None,
        exact: None,
        formula: DEGREE,
    });
    entries.push(BoundEntry {
        id: "global-degree-strong",
        target: "gamma_a_hat(G)",
        applicable: true,
        reason: None,
        lower: Some(gah),
        upper: None,
        exact: None,
        formula: DEGREE,
    });

    const CONNECTED: &str = "gamma_ca(G) >= ceil(sqrt(D+n) - 1), gamma_ca(L) >= ceil(sqrt(D+m-1) - 1)";
    match connected_global_bounds(g) {
        Ok(b) => {
            entries.push(BoundEntry {
                id: "connected-global",
                target: "gamma_ca(G)",
                applicable: true,
                reason: None,
                lower: Some(b.graph_lower),
                upper: None,
                exact: None,
                formula: CONNECTED,
            });
            if let Some(line_lower) = b.line_lower {
                entries.push(BoundEntry {
                    id: "connected-global-line",
                    target: "gamma_ca(L)",
                    applicable: true,
                    reason: None,
                    lower: Some(line_lower),
                    upper: None,
                    exact: None,
                    formula: CONNECTED,
                });
            }
        }
        Err(e) => entries.push(BoundEntry::not_applicable(
            "connected-global",
            "gamma_ca(G)",
            e.to_string(),
            CONNECTED,
        )),
    }

    const COMPARISON: &str = "ceil(n/2) <= ceil((dn+dn1-1)/2) or n/2 < dn forces a(G) <= a(L)";
    match comparison_verdict(g) {
        Ok(v) => entries.push(BoundEntry {
            id: "graph-vs-line-comparison",
            target: "a(G) vs a(L)",
            applicable: v == ComparisonVerdict::Guaranteed,
            reason: Some(v.as_str().to_string()),
            lower: None,
            upper: None,
            exact: None,
            formula: COMPARISON,
        }),
        Err(e) => entries.push(BoundEntry::not_applicable(
            "graph-vs-line-comparison",
            "a(G) vs a(L)",
            e.to_string(),
            COMPARISON,
        )),
    }

    BoundReport {
        graph6: crate::graph6::encode_graph6(g).unwrap_or_else(|_| "(order too large)".into()),
        order: g.order(),
        size: g.size(),
        entries,
    }
}

impl SmallAllianceClass {
    /// (lower, upper) view of the class: exact classes pin both ends,
    /// class ≥4 is a bare lower bound.
    fn exact_or_floor(&self) -> (Option<usize>, Option<usize>) {
        match self.class.exact() {
            Some(v) => (Some(v), Some(v)),
            None => (Some(4), None),
        }
    }
}
