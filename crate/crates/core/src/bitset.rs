//! Fixed-width index sets for planes with at most 128 points.

use std::fmt;

/// Largest number of points (and lines) a plane may have.
pub const MAX_POINTS: usize = 128;

/// A set of indices in `0..128`, stored as one machine word pair.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u128);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u128::MAX)
        } else {
            PointSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1u128 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_POINTS && (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
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
    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> PointSet {
        PointSet(!self.0).intersection(PointSet::full(n))
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn bits(self) -> u128 {
        self.0
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`PointSet`].
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: PointSet = [1, 5, 127].into_iter().collect();
        let b: PointSet = [5, 6].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(127));
        assert!(!a.contains(128));
        assert_eq!(a.intersection(b).iter().collect::<Vec<_>>(), vec![5]);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), vec![1, 127]);
        assert_eq!(a.first(), Some(1));
        assert_eq!(PointSet::full(128).len(), 128);
        assert_eq!(PointSet::full(7).complement(7), PointSet::EMPTY);
        assert_eq!(
            b.complement(8).iter().collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4, 7]
        );
    }
}
