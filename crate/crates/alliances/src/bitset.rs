//! Vertex sets as packed bitmasks over dense 0-based vertex ids.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

const WORD_BITS: usize = 64;

/// A subset of the vertices `0..universe` of some graph.
///
/// Backed by `u64` words so that membership tests, unions and boundary
/// counts in the solver inner loops are word-parallel. Ordering compares
/// the sorted vertex-id sequences lexicographically, which is the
/// tie-breaking rule used for witness reporting.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    /// Empty set over the universe `0..universe`.
    pub fn new(universe: usize) -> Self {
        VertexSet {
            words: vec![0; universe.div_ceil(WORD_BITS)],
            universe,
        }
    }

    /// The full set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for w in 0..s.words.len() {
            s.words[w] = !0;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::new(universe);
        s.insert(v);
        s
    }

    pub fn from_vertices(universe: usize, vs: &[usize]) -> Self {
        let mut s = Self::new(universe);
        for &v in vs {
            s.insert(v);
        }
        s
    }

    /// Clears bits at or above `universe`.
    fn trim(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Removes and returns the smallest member.
    pub fn pop_first(&mut self) -> Option<usize> {
        let v = self.first()?;
        self.remove(v);
        Some(v)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Vertices<'_> {
        Vertices {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over set members.
pub struct Vertices<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Vertices<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on the sorted vertex-id sequences.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_across_words() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 127, 129] {
            s.insert(v);
            assert!(s.contains(v));
        }
        assert_eq!(s.len(), 5);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 129]);
    }

    #[test]
    fn complement_respects_universe() {
        let s = VertexSet::from_vertices(70, &[0, 69]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(0) && !c.contains(69));
        assert!(c.contains(68));
    }

    #[test]
    fn lex_order_is_sequence_order() {
        let u = 10;
        let a = VertexSet::from_vertices(u, &[0, 5]);
        let b = VertexSet::from_vertices(u, &[1, 2]);
        let c = VertexSet::from_vertices(u, &[0, 6]);
        assert!(a < b, "{{0,5}} < {{1,2}}");
        assert!(a < c);
        let prefix = VertexSet::from_vertices(u, &[0]);
        assert!(prefix < a, "shorter prefix sorts first");
    }

    #[test]
    fn pop_first_drains_ascending(){
        let mut s = VertexSet::from_vertices(100, &[3, 77, 12]);
        assert_eq!(s.pop_first(), Some(3));
        assert_eq!(s.pop_first(), Some(12));
        assert_eq!(s.pop_first(), Some(77));
        assert_eq!(s.pop_first(), None);
    }
}
