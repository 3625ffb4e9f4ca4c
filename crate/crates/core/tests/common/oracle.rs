//! Deliberately naive reference implementations.
//!
//! Everything here works on boolean matrices and vectors, one element at a
//! time, straight from the set-builder definitions. Library types appear
//! only at the boundary.

use std::collections::BTreeSet;
use std::sync::Arc;

use roughlattice::{Relation, RoughSet, SubsetMask, Universe};

pub type Mat = Vec<Vec<bool>>;
pub type Set = Vec<bool>;

pub fn matrix(r: &Relation) -> Mat {
    let n = r.size();
    (0..n)
        .map(|x| (0..n).map(|y| r.contains(x, y)).collect())
        .collect()
}

pub fn from_matrix(m: &Mat) -> Relation {
    let n = m.len();
    let mut pairs = Vec::new();
    for (x, row) in m.iter().enumerate() {
        pairs.extend(row.iter().enumerate().filter(|(_, &b)| b).map(|(y, _)| (x, y)));
    }
    Relation::from_pairs(Arc::new(Universe::indexed(n).unwrap()), pairs).unwrap()
}

pub fn set(x: &SubsetMask) -> Set {
    (0..x.universe_size()).map(|i| x.contains(i)).collect()
}

pub fn to_mask(s: &Set) -> SubsetMask {
    SubsetMask::from_indices(s.len(), (0..s.len()).filter(|&i| s[i])).unwrap()
}

pub fn transpose(m: &Mat) -> Mat {
    let n = m.len();
    (0..n).map(|x| (0..n).map(|y| m[y][x]).collect()).collect()
}

/// `{a : R(a) ⊆ X}`
pub fn lower_m(m: &Mat, x: &Set) -> Set {
    let n = m.len();
    (0..n)
        .map(|a| (0..n).all(|b| !m[a][b] || x[b]))
        .collect()
}

/// `{a : R(a) ∩ X ≠ ∅}`
pub fn upper_m(m: &Mat, x: &Set) -> Set {
    let n = m.len();
    (0..n)
        .map(|a| (0..n).any(|b| m[a][b] && x[b]))
        .collect()
}

pub fn naive_lower(r: &Relation, x: &SubsetMask) -> SubsetMask {
    to_mask(&lower_m(&matrix(r), &set(x)))
}

pub fn naive_upper(r: &Relation, x: &SubsetMask) -> SubsetMask {
    to_mask(&upper_m(&matrix(r), &set(x)))
}

pub fn naive_lower_inv(r: &Relation, x: &SubsetMask) -> SubsetMask {
    to_mask(&lower_m(&transpose(&matrix(r)), &set(x)))
}

pub fn naive_upper_inv(r: &Relation, x: &SubsetMask) -> SubsetMask {
    to_mask(&upper_m(&transpose(&matrix(r)), &set(x)))
}

pub fn naive_rough(r: &Relation, x: &SubsetMask) -> RoughSet {
    RoughSet::new(naive_lower(r, x), naive_upper(r, x))
}

/// Repeats the triple loop until nothing changes.
pub fn naive_transitive_closure(m: &Mat) -> Mat {
    let n = m.len();
    let mut out = m.clone();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if out[x][y] && out[y][z] && !out[x][z] {
                        out[x][z] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return out;
        }
    }
}

pub fn naive_compose(s: &Mat, t: &Mat) -> Mat {
    let n = s.len();
    (0..n)
        .map(|x| (0..n).map(|z| (0..n).any(|y| s[x][y] && t[y][z])).collect())
        .collect()
}

pub fn naive_equivalence_join(m: &Mat) -> Mat {
    let n = m.len();
    let sym: Mat = (0..n)
        .map(|x| (0..n).map(|y| x == y || m[x][y] || m[y][x]).collect())
        .collect();
    naive_transitive_closure(&sym)
}

pub fn is_reflexive(m: &Mat) -> bool {
    (0..m.len()).all(|x| m[x][x])
}

pub fn is_symmetric(m: &Mat) -> bool {
    let n = m.len();
    (0..n).all(|x| (0..n).all(|y| m[x][y] == m[y][x]))
}

pub fn is_transitive(m: &Mat) -> bool {
    let n = m.len();
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| !(m[x][y] && m[y][z]) || m[x][z]))
    })
}

pub fn is_left_total(m: &Mat) -> bool {
    m.iter().all(|row| row.iter().any(|&b| b))
}

pub fn is_antisymmetric(m: &Mat) -> bool {
    let n = m.len();
    (0..n).all(|x| (0..n).all(|y| x == y || !(m[x][y] && m[y][x])))
}

/// Connected components by graph search on the underlying undirected graph,
/// each as a sorted index list, ordered by least member.
pub fn naive_components(m: &Mat) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for y in 0..n {
                if !seen[y] && (m[x][y] || m[y][x]) {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Every pair of the component has a common lower bound `c` with `c R a`
/// and `c R b`.
pub fn naive_down_directed(m: &Mat, comp: &[usize]) -> bool {
    comp.iter().all(|&a| {
        comp.iter()
            .all(|&b| comp.iter().any(|&c| m[c][a] && m[c][b]))
    })
}

pub fn is_union_of_components(m: &Mat, x: &Set) -> bool {
    naive_components(m)
        .iter()
        .all(|c| c.iter().all(|&i| x[i]) || c.iter().all(|&i| !x[i]))
}

/// All rough sets of `r` by scanning every subset, sorted and deduplicated.
pub fn brute_rs(r: &Relation) -> Vec<RoughSet> {
    let m = matrix(r);
    let n = m.len();
    assert!(n <= 10, "brute_rs is for small universes");
    let mut out = BTreeSet::new();
    for code in 0..1u32 << n {
        let x: Set = (0..n).map(|i| code >> i & 1 == 1).collect();
        out.insert(RoughSet::new(to_mask(&lower_m(&m, &x)), to_mask(&upper_m(&m, &x))));
    }
    out.into_iter().collect()
}

fn subset_of(a: &SubsetMask, b: &SubsetMask) -> bool {
    (0..a.universe_size()).all(|i| !a.contains(i) || b.contains(i))
}

pub fn naive_le(a: &RoughSet, b: &RoughSet) -> bool {
    subset_of(&a.lower, &b.lower) && subset_of(&a.upper, &b.upper)
}

fn weight(a: &RoughSet) -> usize {
    a.lower.count() + a.upper.count()
}

/// The greatest element of `candidates`, if one exists. Only the heaviest
/// candidate can be greatest; it is then checked against all the others.
fn greatest(candidates: &[usize], elems: &[RoughSet]) -> Option<usize> {
    let c = *candidates.iter().max_by_key(|&&c| weight(&elems[c]))?;
    candidates
        .iter()
        .all(|&d| naive_le(&elems[d], &elems[c]))
        .then_some(c)
}

fn least(candidates: &[usize], elems: &[RoughSet]) -> Option<usize> {
    let c = *candidates.iter().min_by_key(|&&c| weight(&elems[c]))?;
    candidates
        .iter()
        .all(|&d| naive_le(&elems[c], &elems[d]))
        .then_some(c)
}

/// Order-theoretic meet and join tables of a finite poset given as a list.
/// Panics if some pair has no greatest lower or least upper bound.
pub struct Tables {
    pub elems: Vec<RoughSet>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

impl Tables {
    pub fn new(elems: Vec<RoughSet>) -> Tables {
        let k = elems.len();
        let all: Vec<usize> = (0..k).collect();
        let bottom = least(&all, &elems).expect("poset has a least element");
        let top = greatest(&all, &elems).expect("poset has a greatest element");
        let mut meet = vec![vec![0; k]; k];
        let mut join = vec![vec![0; k]; k];
        for a in 0..k {
            for b in 0..k {
                let lower: Vec<usize> = (0..k)
                    .filter(|&c| naive_le(&elems[c], &elems[a]) && naive_le(&elems[c], &elems[b]))
                    .collect();
                let upper: Vec<usize> = (0..k)
                    .filter(|&c| naive_le(&elems[a], &elems[c]) && naive_le(&elems[b], &elems[c]))
                    .collect();
                meet[a][b] = greatest(&lower, &elems).expect("pair has a meet");
                join[a][b] = least(&upper, &elems).expect("pair has a join");
            }
        }
        Tables {
            elems,
            meet,
            join,
            bottom,
            top,
        }
    }

    pub fn index(&self, a: &RoughSet) -> usize {
        self.elems
            .iter()
            .position(|e| e == a)
            .expect("element of the lattice")
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    /// Greatest `b` with `a ∧ b = 0`.
    pub fn pseudo(&self, a: usize) -> usize {
        let cands: Vec<usize> = (0..self.len())
            .filter(|&b| self.meet[a][b] == self.bottom)
            .collect();
        greatest(&cands, &self.elems).expect("pseudocomplement exists")
    }

    /// Least `b` with `a ∨ b = 1`.
    pub fn dual_pseudo(&self, a: usize) -> usize {
        let cands: Vec<usize> = (0..self.len())
            .filter(|&b| self.join[a][b] == self.top)
            .collect();
        least(&cands, &self.elems).expect("dual pseudocomplement exists")
    }

    /// Has some `b` with `a ∧ b = 0` and `a ∨ b = 1`.
    pub fn is_complemented(&self, a: usize) -> bool {
        (0..self.len()).any(|b| self.meet[a][b] == self.bottom && self.join[a][b] == self.top)
    }

    /// `x* ∨ x** = 1` for every `x`.
    pub fn is_stone(&self) -> bool {
        (0..self.len()).all(|x| {
            let p = self.pseudo(x);
            self.join[p][self.pseudo(p)] == self.top
        })
    }

    /// Join of a set of elements (bottom for the empty set).
    pub fn join_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.bottom, |acc, &i| self.join[acc][i])
    }

    pub fn meet_all(&self, items: &[usize]) -> usize {
        items.iter().fold(self.top, |acc, &i| self.meet[acc][i])
    }

    /// Elements different from the join of everything strictly below them.
    pub fn join_irreducibles(&self) -> Vec<RoughSet> {
        (0..self.len())
            .filter(|&a| {
                let below: Vec<usize> = (0..self.len())
                    .filter(|&b| b != a && naive_le(&self.elems[b], &self.elems[a]))
                    .collect();
                self.join_all(&below) != a
            })
            .map(|a| self.elems[a].clone())
            .collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<RoughSet> {
        (0..self.len())
            .filter(|&a| {
                let above: Vec<usize> = (0..self.len())
                    .filter(|&b| b != a && naive_le(&self.elems[a], &self.elems[b]))
                    .collect();
                self.meet_all(&above) != a
            })
            .map(|a| self.elems[a].clone())
            .collect()
    }
}

/// Pseudocomplement of `a` by linear scan of the definition.
pub fn brute_pseudo(elems: &[RoughSet], a: &RoughSet) -> RoughSet {
    let t = Tables::new(elems.to_vec());
    t.elems[t.pseudo(t.index(a))].clone()
}

pub fn brute_join_irr(elems: &[RoughSet]) -> Vec<RoughSet> {
    Tables::new(elems.to_vec()).join_irreducibles()
}

/// The approximation-side conditions for left-totality, reflexivity,
/// symmetry and transitivity, each checked over every subset.
pub fn naive_frame_sides(m: &Mat) -> [bool; 4] {
    let n = m.len();
    let mut out = [true; 4];
    for code in 0..1u32 << n {
        let x: Set = (0..n).map(|i| code >> i & 1 == 1).collect();
        let up = upper_m(m, &x);
        let low = lower_m(m, &x);
        let up_low = lower_m(m, &up);
        let up_up = upper_m(m, &up);
        let within = |a: &Set, b: &Set| (0..n).all(|i| !a[i] || b[i]);
        out[0] &= within(&low, &up);
        out[1] &= within(&x, &up);
        out[2] &= within(&x, &up_low);
        out[3] &= within(&up_up, &up);
    }
    out
}
