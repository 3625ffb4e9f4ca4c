//! Seeded random instances. Closures are taken with the naive oracle so the
//! generators do not lean on the code under test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use roughlattice::{Relation, SubsetMask};

use super::oracle::{from_matrix, naive_transitive_closure, Mat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, density: f64) -> Mat {
    (0..n)
        .map(|_| (0..n).map(|_| rng.gen_bool(density)).collect())
        .collect()
}

pub fn random_relation(rng: &mut impl Rng, n: usize) -> Relation {
    let density = rng.gen_range(0.0..0.6);
    from_matrix(&random_matrix(rng, n, density))
}

fn reflexive_closure(mut m: Mat) -> Mat {
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
    }
    naive_transitive_closure(&m)
}

/// Reflexive-transitive closure of a sparse random relation. Densities are
/// kept low so that the closure is not usually the full relation.
pub fn random_quasiorder(rng: &mut impl Rng, n: usize) -> Relation {
    let density = rng.gen_range(0.0..1.6) / n as f64;
    from_matrix(&reflexive_closure(random_matrix(rng, n, density.min(1.0))))
}

pub fn random_equivalence(rng: &mut impl Rng, n: usize) -> Relation {
    let classes = rng.gen_range(1..=n);
    let label: Vec<usize> = (0..n).map(|_| rng.gen_range(0..classes)).collect();
    let m: Mat = (0..n)
        .map(|x| (0..n).map(|y| label[x] == label[y]).collect())
        .collect();
    from_matrix(&m)
}

/// Closure of a random DAG oriented along a random permutation.
pub fn random_partial_order(rng: &mut impl Rng, n: usize) -> Relation {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let density = rng.gen_range(0.0..0.5);
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                m[perm[i]][perm[j]] = true;
            }
        }
    }
    from_matrix(&reflexive_closure(m))
}

/// A partial order containing a V: two minimal elements `a`, `b` below a
/// common `c`. Further elements are only ever placed above existing ones, so
/// `a` and `b` stay minimal and have no common lower bound.
pub fn v_shaped_poset(rng: &mut impl Rng, n: usize) -> Relation {
    assert!(n >= 3);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let (a, b, c) = (order[0], order[1], order[2]);
    let mut m = vec![vec![false; n]; n];
    m[a][c] = true;
    m[b][c] = true;
    for k in 3..n {
        let new = order[k];
        let below = order[rng.gen_range(0..k)];
        m[below][new] = true;
        if rng.gen_bool(0.3) {
            m[order[rng.gen_range(0..k)]][new] = true;
        }
    }
    from_matrix(&reflexive_closure(m))
}

/// A quasiorder with at least two components: the universe is split into
/// labelled blocks and a random quasiorder is placed on each block.
pub fn random_multi_component(rng: &mut impl Rng, n: usize) -> Relation {
    assert!(n >= 2);
    let blocks = rng.gen_range(2..=n.min(4));
    let mut label: Vec<usize> = (0..n).map(|i| i % blocks).collect();
    label.shuffle(rng);
    let density = rng.gen_range(0.2..0.7);
    let mut m = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            if label[x] == label[y] && rng.gen_bool(density) {
                m[x][y] = true;
            }
        }
    }
    from_matrix(&reflexive_closure(m))
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> SubsetMask {
    SubsetMask::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))).unwrap()
}

pub fn random_family(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<SubsetMask> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| random_subset(rng, n)).collect()
}
