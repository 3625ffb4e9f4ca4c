#![allow(dead_code)]

pub mod gen;
pub mod oracle;
pub mod strategy;

use std::sync::Arc;

use roughlattice::{Relation, RoughSet, SubsetMask, Universe};

pub fn mask(n: usize, idx: &[usize]) -> SubsetMask {
    SubsetMask::from_indices(n, idx.iter().copied()).unwrap()
}

pub fn rs(n: usize, lower: &[usize], upper: &[usize]) -> RoughSet {
    RoughSet::new(mask(n, lower), mask(n, upper))
}

pub fn relation(n: usize, pairs: &[(usize, usize)]) -> Relation {
    Relation::from_pairs(Arc::new(Universe::indexed(n).unwrap()), pairs.iter().copied()).unwrap()
}

/// Identity on `0..n` plus the given pairs.
pub fn reflexive_plus(n: usize, extra: &[(usize, usize)]) -> Relation {
    let pairs: Vec<_> = (0..n).map(|i| (i, i)).chain(extra.iter().copied()).collect();
    relation(n, &pairs)
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    (0..1u64 << n).map(move |c| SubsetMask::from_code(n, c))
}
