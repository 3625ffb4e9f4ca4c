//! Subsets of a finite universe stored as bit-vectors.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset `X ⊆ U` of a universe of `universe_size` elements.
///
/// Bit `i` is set iff element `i` belongs to the subset. Masks order as
/// big-endian integers (element `n - 1` is the most significant bit), after
/// first ordering by universe size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: FixedBitSet,
}

impl SubsetMask {
    pub fn empty(universe_size: usize) -> Self {
        SubsetMask {
            bits: FixedBitSet::with_capacity(universe_size),
        }
    }

    pub fn full(universe_size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe_size);
        bits.insert_range(..);
        SubsetMask { bits }
    }

    pub fn singleton(universe_size: usize, element: usize) -> Self {
        let mut m = Self::empty(universe_size);
        m.insert(element);
        m
    }

    /// Builds a mask from element indices, rejecting indices outside the universe.
    pub fn from_indices<I>(universe_size: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut m = Self::empty(universe_size);
        for i in indices {
            if i >= universe_size {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    size: universe_size,
                });
            }
            m.bits.insert(i);
        }
        Ok(m)
    }

    /// The mask whose bit pattern is the binary expansion of `code`.
    ///
    /// Used to sweep all `2^n` subsets; `universe_size` must not exceed 64.
    pub fn from_code(universe_size: usize, code: u64) -> Self {
        assert!(universe_size <= 64, "subset codes cover at most 64 elements");
        let mut m = Self::empty(universe_size);
        let mut rest = code;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            m.bits.insert(i);
            rest &= rest - 1;
        }
        m
    }

    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.bits.contains(element)
    }

    pub fn insert(&mut self, element: usize) {
        self.bits.insert(element);
    }

    pub fn remove(&mut self, element: usize) {
        self.bits.set(element, false);
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.universe_size()
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersects(&self, other: &SubsetMask) -> bool {
        !self.bits.is_disjoint(&other.bits)
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        let mut out = self.clone();
        out.bits.difference_with(&other.bits);
        out
    }

    pub fn complement(&self) -> SubsetMask {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn union_with(&mut self, other: &SubsetMask) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &SubsetMask) {
        self.bits.intersect_with(&other.bits);
    }

    /// Element indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn check_size(&self, expected: usize) -> Result<()> {
        if self.universe_size() == expected {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected,
                found: self.universe_size(),
            })
        }
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe_size()
            .cmp(&other.universe_size())
            .then_with(|| {
                let a = self.bits.as_slice();
                let b = other.bits.as_slice();
                a.iter().rev().cmp(b.iter().rev())
            })
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Brace notation over indices, e.g. `{0,2}`.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}
