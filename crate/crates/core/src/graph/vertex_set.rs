use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Serialize, Serializer};

/// A set of vertices of a graph with at most 64 vertices, stored as one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[derive(Clone)]
pub struct Iter(u64);

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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
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

macro_rules! bit_op {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $tra for VertexSet {
            #[inline]
            fn $fa(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

bit_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
bit_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
