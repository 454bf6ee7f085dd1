//! Vertex subsets as 128-bit masks.

use core::fmt;

use crate::error::{Error, Result};

/// A subset of `0..128`; used both for switching sets and adjacency rows.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    /// Builds a set from vertex indices, checking them against `order`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, it: I) -> Result<Self> {
        let mut s = VertexSet::EMPTY;
        for v in it {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            s.insert(v);
        }
        Ok(s)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 128 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member.
    #[inline]
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Iter {}
