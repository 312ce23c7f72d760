//! Alliance predicates: the semantic ground truth every solver and bound
//! in this crate is tested against.
//!
//! A nonempty S ⊆ V is a defensive alliance when every v ∈ S satisfies
//! 2|N_S(v)| + 1 ≥ δ(v), and a strong one when 2|N_S(v)| ≥ δ(v). Global
//! variants additionally dominate V∖S; connected variants additionally
//! induce a connected subgraph.

use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Sets larger than this fall back from exhaustive minimality checking to
/// an explicit "unverifiable" error.
pub const MINIMALITY_SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AllianceKind {
    Defensive,
    Strong,
    GlobalDefensive,
    GlobalStrong,
    GlobalConnectedDefensive,
    GlobalConnectedStrong,
}

impl AllianceKind {
    pub const ALL: [AllianceKind; 6] = [
        AllianceKind::Defensive,
        AllianceKind::Strong,
        AllianceKind::GlobalDefensive,
        AllianceKind::GlobalStrong,
        AllianceKind::GlobalConnectedDefensive,
        AllianceKind::GlobalConnectedStrong,
    ];

    /// Strong variants use 2|N_S(v)| ≥ δ(v) instead of 2|N_S(v)| + 1 ≥ δ(v).
    pub fn strong(self) -> bool {
        matches!(
            self,
            AllianceKind::Strong | AllianceKind::GlobalStrong | AllianceKind::GlobalConnectedStrong
        )
    }

    /// Global variants must dominate every outside vertex.
    pub fn global(self) -> bool {
        !matches!(self, AllianceKind::Defensive | AllianceKind::Strong)
    }

    /// Connected variants must induce a connected subgraph.
    pub fn connected(self) -> bool {
        matches!(
            self,
            AllianceKind::GlobalConnectedDefensive | AllianceKind::GlobalConnectedStrong
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            AllianceKind::Defensive => "defensive",
            AllianceKind::Strong => "strong",
            AllianceKind::GlobalDefensive => "global-defensive",
            AllianceKind::GlobalStrong => "global-strong",
            AllianceKind::GlobalConnectedDefensive => "global-connected-defensive",
            AllianceKind::GlobalConnectedStrong => "global-connected-strong",
        }
    }
}

impl fmt::Display for AllianceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AllianceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        AllianceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown alliance kind {s:?}"))
    }
}

impl Serialize for AllianceKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AllianceError {
    #[error("the empty set is not a legal alliance candidate")]
    EmptySet,
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("set is not a {kind} alliance")]
    NotAnAlliance { kind: AllianceKind },
    #[error("minimality of a {size}-vertex set exceeds the exhaustive cap of {MINIMALITY_SUBSET_CAP}")]
    MinimalityUnverifiable { size: usize },
}

/// Partition of a vertex's neighborhood by membership in S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct BoundaryCount {
    pub inside: usize,
    pub outside: usize,
}

/// Splits v's neighborhood into |N_S(v)| and |N_{V∖S}(v)|.
pub fn boundary_counts(g: &Graph, s: &VertexSet, v: usize) -> Result<BoundaryCount, AllianceError> {
    if v >= g.order() {
        return Err(AllianceError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let inside = g.neighbors(v).intersection_len(s);
    Ok(BoundaryCount {
        inside,
        outside: g.degree(v) - inside,
    })
}

/// Minimum |N_S(v)| a member of degree `degree` needs.
#[inline]
pub fn required_inside(degree: usize, strong: bool) -> usize {
    if strong {
        degree.div_ceil(2)
    } else {
        degree / 2
    }
}

#[inline]
fn defended(g: &Graph, s: &VertexSet, v: usize, strong: bool) -> bool {
    g.neighbors(v).intersection_len(s) >= required_inside(g.degree(v), strong)
}

/// Decides whether `s` is an alliance of the given kind.
pub fn is_alliance(g: &Graph, s: &VertexSet, kind: AllianceKind) -> Result<bool, AllianceError> {
    if s.is_empty() {
        return Err(AllianceError::EmptySet);
    }
    if let Some(v) = s.iter().find(|&v| v >= g.order()) {
        return Err(AllianceError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    for v in s.iter() {
        if !defended(g, s, v, kind.strong()) {
            return Ok(false);
        }
    }
    if kind.global() {
        let outside = s.complement();
        for u in outside.iter() {
            if !g.neighbors(u).intersects(s) {
                return Ok(false);
            }
        }
    }
    if kind.connected() && !g.is_connected_within(s) {
        return Ok(false);
    }
    Ok(true)
}

/// Decides whether `s` is a minimal alliance: no nonempty proper subset is
/// an alliance of the same kind.
///
/// Cheap rejections run first: a disconnected defensive or strong alliance
/// contains a component that is itself an alliance, and single-vertex
/// removals catch most of the rest. The exhaustive proper-subset sweep
/// settles whatever remains, up to [`MINIMALITY_SUBSET_CAP`] members.
pub fn is_minimal_alliance(g: &Graph, s: &VertexSet, kind: AllianceKind) -> Result<bool, AllianceError> {
    if !is_alliance(g, s, kind)? {
        return Err(AllianceError::NotAnAlliance { kind });
    }
    let members = s.to_vec();
    let k = members.len();
    if k == 1 {
        return Ok(true);
    }

    // The per-vertex condition only looks at neighbors inside S, so for the
    // non-global kinds every component of ⟨S⟩ is an alliance on its own.
    if !kind.global() && !g.is_connected_within(s) {
        return Ok(false);
    }

    for &v in &members {
        let mut t = s.clone();
        t.remove(v);
        if is_alliance(g, &t, kind)? {
            return Ok(false);
        }
    }

    if k > MINIMALITY_SUBSET_CAP {
        return Err(AllianceError::MinimalityUnverifiable { size: k });
    }
    for mask in 1u32..(1 << k) - 1 {
        if mask.count_ones() as usize >= k - 1 {
            continue; // size k-1 already covered above
        }
        let mut t = VertexSet::new(s.universe());
        for (i, &v) in members.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t.insert(v);
            }
        }
        if is_alliance(g, &t, kind)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, GraphFamily};

    fn c5() -> Graph {
        generate(&GraphFamily::Cycle { len: 5 }).unwrap()
    }

    fn k4() -> Graph {
        generate(&GraphFamily::Complete { order: 4 }).unwrap()
    }

    fn set(g: &Graph, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(g.order(), vs)
    }

    #[test]
    fn boundary_count_examples() {
        let g = c5();
        let bc = boundary_counts(&g, &set(&g, &[0, 1]), 0).unwrap();
        assert_eq!((bc.inside, bc.outside), (1, 1));

        let g = k4();
        let bc = boundary_counts(&g, &set(&g, &[0, 1, 2]), 0).unwrap();
        assert_eq!((bc.inside, bc.outside), (2, 1));

        let bc = boundary_counts(&g, &VertexSet::new(4), 3).unwrap();
        assert_eq!((bc.inside, bc.outside), (0, 3));

        assert!(boundary_counts(&g, &VertexSet::new(4), 9).is_err());
    }

    #[test]
    fn adjacent_pair_in_cycle_is_defensive() {
        let g = c5();
        assert!(is_alliance(&g, &set(&g, &[0, 1]), AllianceKind::Defensive).unwrap());
        assert!(!is_alliance(&g, &set(&g, &[0]), AllianceKind::Defensive).unwrap());
    }

    #[test]
    fn global_needs_domination() {
        let g = c5();
        assert!(is_alliance(&g, &set(&g, &[0, 1, 2]), AllianceKind::GlobalDefensive).unwrap());
        // vertex 3 has no neighbor in {0, 1}
        assert!(!is_alliance(&g, &set(&g, &[0, 1]), AllianceKind::GlobalDefensive).unwrap());
    }

    #[test]
    fn empty_set_is_an_error_not_false() {
        let g = c5();
        assert_eq!(
            is_alliance(&g, &VertexSet::new(5), AllianceKind::Defensive),
            Err(AllianceError::EmptySet)
        );
    }

    #[test]
    fn whole_vertex_set_is_global_strong() {
        for fam in [GraphFamily::Cycle { len: 6 }, GraphFamily::Petersen, GraphFamily::Path { order: 5 }] {
            let g = generate(&fam).unwrap();
            assert!(is_alliance(&g, &g.vertex_set(), AllianceKind::GlobalStrong).unwrap());
        }
        // Disconnected: V stays global-strong but fails the connected kinds.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_alliance(&g, &g.vertex_set(), AllianceKind::GlobalStrong).unwrap());
        assert!(!is_alliance(&g, &g.vertex_set(), AllianceKind::GlobalConnectedStrong).unwrap());
    }

    #[test]
    fn strong_implies_defensive() {
        let g = k4();
        let s = set(&g, &[0, 1, 2]);
        assert!(is_alliance(&g, &s, AllianceKind::Strong).unwrap());
        assert!(is_alliance(&g, &s, AllianceKind::Defensive).unwrap());
    }

    #[test]
    fn minimality_examples() {
        let g = c5();
        assert!(is_minimal_alliance(&g, &set(&g, &[0, 1]), AllianceKind::Defensive).unwrap());
        assert!(!is_minimal_alliance(&g, &set(&g, &[0, 1, 2]), AllianceKind::Defensive).unwrap());

        let g = k4();
        assert!(is_minimal_alliance(&g, &set(&g, &[0, 1, 2]), AllianceKind::Strong).unwrap());
    }

    #[test]
    fn minimality_requires_an_alliance() {
        let g = c5();
        assert_eq!(
            is_minimal_alliance(&g, &set(&g, &[0]), AllianceKind::Defensive),
            Err(AllianceError::NotAnAlliance { kind: AllianceKind::Defensive })
        );
    }

    #[test]
    fn disconnected_local_alliance_is_not_minimal() {
        let g = generate(&GraphFamily::Cycle { len: 6 }).unwrap();
        // Two opposite adjacent pairs: an alliance, but each pair already is one.
        let s = set(&g, &[0, 1, 3, 4]);
        assert!(is_alliance(&g, &s, AllianceKind::Defensive).unwrap());
        assert!(!is_minimal_alliance(&g, &s, AllianceKind::Defensive).unwrap());
    }

    #[test]
    fn required_inside_thresholds() {
        assert_eq!(required_inside(0, false), 0);
        assert_eq!(required_inside(1, false), 0);
        assert_eq!(required_inside(2, false), 1);
        assert_eq!(required_inside(5, false), 2);
        assert_eq!(required_inside(8, false), 4);
        assert_eq!(required_inside(1, true), 1);
        assert_eq!(required_inside(2, true), 1);
        assert_eq!(required_inside(5, true), 3);
    }

    #[test]
    fn kind_names_roundtrip() {
        for kind in AllianceKind::ALL {
            assert_eq!(kind.name().parse::<AllianceKind>().unwrap(), kind);
        }
        assert!("offensive".parse::<AllianceKind>().is_err());
    }
}
