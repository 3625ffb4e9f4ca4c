//! Binary relations on a finite universe, one successor bit-vector per element.
//!
//! Composition follows the left-to-right convention
//!
//! ```text
//! (x, z) ∈ S ∘ T  ⟺  ∃y. (x, y) ∈ S ∧ (y, z) ∈ T
//! ```
//!
//! so that `inverse(R) ∘ R` relates `x` and `z` exactly when they share a
//! predecessor. This is the reading under which `{x}▲△ = (R⁻¹ ∘ R)(x)`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::universe::Universe;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    universe: Arc<Universe>,
    rows: Vec<SubsetMask>,
}

impl Relation {
    pub fn empty(universe: Arc<Universe>) -> Self {
        let n = universe.size();
        Relation {
            rows: vec![SubsetMask::empty(n); n],
            universe,
        }
    }

    pub fn identity(universe: Arc<Universe>) -> Self {
        let n = universe.size();
        Relation {
            rows: (0..n).map(|i| SubsetMask::singleton(n, i)).collect(),
            universe,
        }
    }

    pub fn full(universe: Arc<Universe>) -> Self {
        let n = universe.size();
        Relation {
            rows: vec![SubsetMask::full(n); n],
            universe,
        }
    }

    pub fn from_pairs<I>(universe: Arc<Universe>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(universe);
        let n = r.size();
        for (x, y) in pairs {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, size: n });
                }
            }
            r.rows[x].insert(y);
        }
        Ok(r)
    }

    pub fn from_rows(universe: Arc<Universe>, rows: Vec<SubsetMask>) -> Result<Self> {
        let n = universe.size();
        if rows.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        for row in &rows {
            row.check_size(n)?;
        }
        Ok(Relation { universe, rows })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `R(x)`, the successors of `x`.
    pub fn successors(&self, x: usize) -> &SubsetMask {
        &self.rows[x]
    }

    pub fn rows(&self) -> &[SubsetMask] {
        &self.rows
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(SubsetMask::count).sum()
    }

    pub(crate) fn check_same_universe(&self, other: &Relation) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.size() == other.size()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.check_same_universe(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.union(b))
            .collect();
        Ok(Relation {
            universe: self.universe.clone(),
            rows,
        })
    }

    pub fn inverse(&self) -> Relation {
        let mut inv = Relation::empty(self.universe.clone());
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                inv.rows[y].insert(x);
            }
        }
        inv
    }

    /// `self ∘ other`, left to right: first a step of `self`, then a step of `other`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.check_same_universe(other)?;
        let n = self.size();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = SubsetMask::empty(n);
                for y in row.iter() {
                    out.union_with(&other.rows[y]);
                }
                out
            })
            .collect();
        Ok(Relation {
            universe: self.universe.clone(),
            rows,
        })
    }

    /// Smallest transitive relation containing `self` (Warshall over bit rows).
    pub fn transitive_closure(&self) -> Relation {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let via = rows[k].clone();
            for row in rows.iter_mut() {
                if row.contains(k) {
                    row.union_with(&via);
                }
            }
        }
        Relation {
            universe: self.universe.clone(),
            rows,
        }
    }

    /// Smallest quasiorder containing `self`.
    pub fn reflexive_transitive_closure(&self) -> Relation {
        let mut r = self.clone();
        for (x, row) in r.rows.iter_mut().enumerate() {
            row.insert(x);
        }
        r.transitive_closure()
    }

    /// `R ∨ R⁻¹`: the smallest equivalence containing `self`.
    ///
    /// The identity is added explicitly, so this is also correct for
    /// relations that are not reflexive.
    pub fn equivalence_join(&self) -> Relation {
        let mut r = self.union(&self.inverse()).expect("same universe");
        for (x, row) in r.rows.iter_mut().enumerate() {
            row.insert(x);
        }
        r.transitive_closure()
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, row)| row.contains(x))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.inverse()
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self)
            .map(|sq| sq.is_subset(self))
            .unwrap_or(false)
    }

    pub fn is_left_total(&self) -> bool {
        self.rows.iter().all(|row| !row.is_empty())
    }

    pub fn is_antisymmetric(&self) -> bool {
        let inv = self.inverse();
        self.rows.iter().zip(&inv.rows).enumerate().all(|(x, (fwd, back))| {
            let both = fwd.intersection(back);
            both.is_empty() || (both.count() == 1 && both.contains(x))
        })
    }

    pub fn is_quasiorder(&self) -> bool {
        self.quasiorder_violation().is_none()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_quasiorder() && self.is_symmetric()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_quasiorder() && self.is_antisymmetric()
    }

    /// First failure of reflexivity or transitivity, in canonical element order.
    pub fn quasiorder_violation(&self) -> Option<QuasiorderViolation> {
        if let Some(x) = (0..self.size()).find(|&x| !self.rows[x].contains(x)) {
            return Some(QuasiorderViolation::NotReflexive { element: x });
        }
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                let missing = self.rows[y].difference(row);
                if let Some(z) = missing.first() {
                    return Some(QuasiorderViolation::NotTransitive { x, y, z });
                }
            }
        }
        None
    }

    pub fn properties(&self) -> PropertyReport {
        let reflexive = self.is_reflexive();
        let symmetric = self.is_symmetric();
        let transitive = self.is_transitive();
        let antisymmetric = self.is_antisymmetric();
        let quasiorder = reflexive && transitive;
        PropertyReport {
            reflexive,
            symmetric,
            transitive,
            left_total: self.is_left_total(),
            antisymmetric,
            quasiorder,
            partial_order: quasiorder && antisymmetric,
            equivalence: quasiorder && symmetric,
        }
    }

    /// Equivalence classes of `R ∨ R⁻¹`, ordered by least member.
    pub fn connected_components(&self) -> ComponentPartition {
        let eq = self.equivalence_join();
        let n = self.size();
        let mut blocks: Vec<SubsetMask> = Vec::new();
        let mut block_of = vec![usize::MAX; n];
        for x in 0..n {
            if block_of[x] != usize::MAX {
                continue;
            }
            let class = eq.rows[x].clone();
            for y in class.iter() {
                block_of[y] = blocks.len();
            }
            blocks.push(class);
        }
        ComponentPartition { blocks, block_of }
    }

    /// Restriction of the relation to `block`, re-indexed `0..|block|`.
    ///
    /// Returns the restricted relation and the map from local to global indices.
    pub fn restrict(&self, block: &SubsetMask) -> Result<(Relation, Vec<usize>)> {
        block.check_size(self.size())?;
        let global: Vec<usize> = block.to_indices();
        if global.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let names = global.iter().map(|&g| self.universe.name(g).to_string());
        let universe = Arc::new(Universe::new(names)?);
        let m = global.len();
        let rows = global
            .iter()
            .map(|&gx| {
                let local = global
                    .iter()
                    .enumerate()
                    .filter(|&(_, &gy)| self.rows[gx].contains(gy))
                    .map(|(ly, _)| ly);
                SubsetMask::from_indices(m, local).expect("local index in range")
            })
            .collect();
        Ok((Relation { universe, rows }, global))
    }
}

/// Witness that a relation is not a quasiorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuasiorderViolation {
    NotReflexive { element: usize },
    /// `(x, y)` and `(y, z)` are present but `(x, z)` is not.
    NotTransitive { x: usize, y: usize, z: usize },
}

impl fmt::Display for QuasiorderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QuasiorderViolation::NotReflexive { element } => {
                write!(f, "pair ({element},{element}) missing (reflexivity)")
            }
            QuasiorderViolation::NotTransitive { x, y, z } => write!(
                f,
                "pair ({x},{z}) missing although ({x},{y}) and ({y},{z}) are present (transitivity)"
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub left_total: bool,
    pub antisymmetric: bool,
    pub quasiorder: bool,
    pub partial_order: bool,
    pub equivalence: bool,
}

/// The connected components of a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<SubsetMask>,
    block_of: Vec<usize>,
}

impl ComponentPartition {
    pub fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, element: usize) -> usize {
        self.block_of[element]
    }

    pub fn universe_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn position(&self, block: &SubsetMask) -> Option<usize> {
        let first = block.first()?;
        let idx = *self.block_of.get(first)?;
        (self.blocks[idx] == *block).then_some(idx)
    }

    /// Whether `x` is a union of blocks.
    pub fn is_union_of_blocks(&self, x: &SubsetMask) -> bool {
        x.iter().all(|e| self.blocks[self.block_of[e]].is_subset(x))
    }
}
