//! proptest strategies for relations and subsets.

use proptest::collection::vec;
use proptest::prelude::*;

use roughlattice::{Relation, SubsetMask};

use super::oracle::{from_matrix, naive_transitive_closure, Mat};

pub fn matrix(max_n: usize) -> impl Strategy<Value = Mat> {
    (1..=max_n).prop_flat_map(|n| vec(vec(any::<bool>(), n), n))
}

/// `k` matrices over one common universe size.
pub fn matrices(max_n: usize, k: usize) -> impl Strategy<Value = Vec<Mat>> {
    (1..=max_n).prop_flat_map(move |n| vec(vec(vec(any::<bool>(), n), n), k))
}

pub fn relation(max_n: usize) -> impl Strategy<Value = Relation> {
    matrix(max_n).prop_map(|m| from_matrix(&m))
}

/// Sparse matrices closed reflexively and transitively.
pub fn quasiorder(max_n: usize) -> impl Strategy<Value = Relation> {
    (1..=max_n)
        .prop_flat_map(|n| vec(vec(prop::bool::weighted((1.2 / n as f64).min(1.0)), n), n))
        .prop_map(|mut m| {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = true;
            }
            from_matrix(&naive_transitive_closure(&m))
        })
}

pub fn subset(n: usize) -> impl Strategy<Value = SubsetMask> {
    vec(any::<bool>(), n).prop_map(move |bits| {
        SubsetMask::from_indices(n, (0..n).filter(|&i| bits[i])).unwrap()
    })
}

/// A relation together with `k` subsets of its universe.
pub fn with_subsets<S>(rel: S, k: usize) -> impl Strategy<Value = (Relation, Vec<SubsetMask>)>
where
    S: Strategy<Value = Relation>,
{
    rel.prop_flat_map(move |r| {
        let n = r.size();
        (Just(r), vec(subset(n), k))
    })
}

/// A relation with a nonempty family of at most `max_len` subsets.
pub fn with_family<S>(
    rel: S,
    max_len: usize,
) -> impl Strategy<Value = (Relation, Vec<SubsetMask>)>
where
    S: Strategy<Value = Relation>,
{
    rel.prop_flat_map(move |r| {
        let n = r.size();
        (Just(r), vec(subset(n), 1..=max_len))
    })
}
