//! Vertex sets over a fixed universe `{0, .., n-1}`, stored as bit vectors.
//!
//! Every set operation is word-parallel. Sets over universes of up to 128
//! vertices live inline; larger universes spill to the heap. All binary
//! operations require both operands to share the same universe.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A set of vertex ids drawn from a fixed universe of size `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: u32,
    words: SmallVec<[u64; 2]>,
}

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// The empty set over a universe of size `universe`.
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe: universe as u32,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    /// The full set `{0, .., universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.mask_tail();
        s
    }

    /// The singleton `{v}`.
    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut s = Self::empty(universe);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Size of the universe this set draws from (not the cardinality).
    #[inline]
    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.universe());
        self.words[v / WORD_BITS] & (1 << (v % WORD_BITS)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe());
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    /// `self ∪ {v}` as a new set.
    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    /// `self ∖ {v}` as a new set.
    pub fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.mask_tail();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Cardinality of `self ∩ other` without materializing it.
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
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

    /// Members in ascending order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// The same set over a different universe size. Panics if shrinking would
    /// drop a member.
    pub fn resized(&self, new_universe: usize) -> Self {
        let mut s = VertexSet {
            universe: new_universe as u32,
            words: SmallVec::from_elem(0, word_count(new_universe)),
        };
        for (i, &w) in self.words.iter().enumerate() {
            if i < s.words.len() {
                s.words[i] = w;
            } else {
                assert_eq!(w, 0, "resize would drop members");
            }
        }
        let before = self.len();
        s.mask_tail();
        assert_eq!(s.len(), before, "resize would drop members");
        s
    }

    #[inline]
    fn mask_tail(&mut self) {
        let used = self.universe() % WORD_BITS;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }

    #[inline]
    fn check_universe(&self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe, "universe mismatch");
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: lexicographic on the ascending member sequence, so `{0,2}`
/// sorts before `{1}` and a set sorts before its proper extensions.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

pub struct Members<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Members<'a>;
    fn into_iter(self) -> Members<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = VertexSet::from_members(10, [0, 2, 5]);
        let b = VertexSet::from_members(10, [2, 3]);
        assert_eq!(a.union(&b), VertexSet::from_members(10, [0, 2, 3, 5]));
        assert_eq!(a.intersection(&b), VertexSet::from_members(10, [2]));
        assert_eq!(a.difference(&b), VertexSet::from_members(10, [0, 5]));
        assert_eq!(a.len(), 3);
        assert!(a.contains(5) && !a.contains(4));
        assert_eq!(a.intersection_len(&b), 1);
    }

    #[test]
    fn complement_respects_universe() {
        let a = VertexSet::from_members(5, [0, 4]);
        assert_eq!(a.complement(), VertexSet::from_members(5, [1, 2, 3]));
        assert_eq!(VertexSet::full(5).complement(), VertexSet::empty(5));
        // multi-word universe
        let b = VertexSet::from_members(70, [0, 69]);
        assert_eq!(b.complement().len(), 68);
        assert_eq!(b.complement().complement(), b);
    }

    #[test]
    fn members_ascend() {
        let a = VertexSet::from_members(130, [129, 0, 64, 63]);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(a.first(), Some(0));
        assert_eq!(VertexSet::empty(130).first(), None);
    }

    #[test]
    fn order_matches_member_list_order() {
        let sets: Vec<VertexSet> = (0u16..64)
            .map(|m| VertexSet::from_members(6, (0..6).filter(|i| m >> i & 1 == 1)))
            .collect();
        for a in &sets {
            for b in &sets {
                let la: Vec<usize> = a.iter().collect();
                let lb: Vec<usize> = b.iter().collect();
                assert_eq!(a.cmp(b), la.cmp(&lb), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn resize_grows_and_shrinks() {
        let a = VertexSet::from_members(4, [1, 3]);
        let b = a.resized(9);
        assert_eq!(b.universe(), 9);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(b.resized(4), a);
    }
}
