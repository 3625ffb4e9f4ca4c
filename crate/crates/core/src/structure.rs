//! Global structure of `RS`: the component decomposition, direct
//! indecomposability and the Stone criterion.
//!
//! `RS` is a Stone lattice exactly when `R⁻¹ ∘ R = R ∨ R⁻¹`, which is
//! decided here on the relation in polynomial time.

use rayon::prelude::*;

use crate::approx::ApproxContext;
use crate::error::{Error, Result};
use crate::lattice::{RoughSet, RsLattice};
use crate::mask::SubsetMask;
use crate::relation::{ComponentPartition, PropertyReport, Relation};

/// First element whose rows of `R⁻¹ ∘ R` and `R ∨ R⁻¹` differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneWitness {
    pub element: usize,
    /// `(R⁻¹ ∘ R)(element)`
    pub composed: SubsetMask,
    /// `(R ∨ R⁻¹)(element)`
    pub component: SubsetMask,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneVerdict {
    pub is_stone: bool,
    pub witness: Option<StoneWitness>,
}

pub fn is_stone(r: &Relation) -> Result<StoneVerdict> {
    if let Some(v) = r.quasiorder_violation() {
        return Err(Error::NotQuasiorder(v));
    }
    let composed = r.inverse().compose(r)?;
    let joined = r.equivalence_join();
    let witness = (0..r.size())
        .find(|&x| composed.successors(x) != joined.successors(x))
        .map(|x| StoneWitness {
            element: x,
            composed: composed.successors(x).clone(),
            component: joined.successors(x).clone(),
        });
    Ok(StoneVerdict {
        is_stone: witness.is_none(),
        witness,
    })
}

/// `(a.lower ∩ C, a.upper ∩ C)` for a connected component `C`.
pub fn restrict_rough(
    components: &ComponentPartition,
    a: &RoughSet,
    c: &SubsetMask,
) -> Result<RoughSet> {
    c.check_size(components.universe_size())?;
    a.lower.check_size(components.universe_size())?;
    a.upper.check_size(components.universe_size())?;
    if components.position(c).is_none() {
        return Err(Error::NotAComponent(c.to_string()));
    }
    Ok(RoughSet::new(a.lower.intersection(c), a.upper.intersection(c)))
}

/// Reassembles a rough set from one rough set per component.
///
/// The components must be pairwise disjoint and cover the universe, and each
/// part must live inside its component.
pub fn combine_rough(parts: &[(SubsetMask, RoughSet)]) -> Result<RoughSet> {
    let (first, _) = parts
        .first()
        .ok_or_else(|| Error::InvalidCover("no components given".into()))?;
    let n = first.universe_size();
    let mut covered = SubsetMask::empty(n);
    let mut lower = SubsetMask::empty(n);
    let mut upper = SubsetMask::empty(n);
    for (c, part) in parts {
        c.check_size(n)?;
        part.lower.check_size(n)?;
        part.upper.check_size(n)?;
        if c.is_empty() {
            return Err(Error::InvalidCover("empty component".into()));
        }
        if c.intersects(&covered) {
            return Err(Error::InvalidCover(format!("component {c} overlaps another")));
        }
        if !part.lower.is_subset(c) || !part.upper.is_subset(c) {
            return Err(Error::InvalidCover(format!("{part} leaves component {c}")));
        }
        covered.union_with(c);
        lower.union_with(&part.lower);
        upper.union_with(&part.upper);
    }
    if !covered.is_full() {
        return Err(Error::InvalidCover(format!(
            "elements {} are not covered",
            covered.complement()
        )));
    }
    Ok(RoughSet::new(lower, upper))
}

/// Class counts of an equivalence: `RS ≅ 2^singletons × 3^larger`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceShape {
    pub singletons: usize,
    pub larger: usize,
}

impl EquivalenceShape {
    /// `2^singletons · 3^larger`, if it fits in a `u128`.
    pub fn predicted_rs_size(&self) -> Option<u128> {
        let twos = 2u128.checked_pow(u32::try_from(self.singletons).ok()?)?;
        let threes = 3u128.checked_pow(u32::try_from(self.larger).ok()?)?;
        twos.checked_mul(threes)
    }
}

pub fn equivalence_shape(r: &Relation) -> Result<EquivalenceShape> {
    if !r.is_equivalence() {
        return Err(Error::NotEquivalence);
    }
    let comps = r.connected_components();
    let singletons = comps.blocks().iter().filter(|b| b.count() == 1).count();
    Ok(EquivalenceShape {
        singletons,
        larger: comps.len() - singletons,
    })
}

/// For a partial order, whether each component has a common lower bound for
/// every pair of its members.
pub fn down_directed_check(r: &Relation) -> Result<Vec<(SubsetMask, bool)>> {
    if !r.is_partial_order() {
        return Err(Error::NotPartialOrder);
    }
    let inv = r.inverse();
    let comps = r.connected_components();
    Ok(comps
        .blocks()
        .iter()
        .map(|c| {
            let directed = c.iter().all(|a| {
                c.iter().all(|b| {
                    inv.successors(a)
                        .intersection(inv.successors(b))
                        .intersects(c)
                })
            });
            (c.clone(), directed)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub properties: PropertyReport,
    pub components: ComponentPartition,
    /// `|RS(C)|` per component, `None` when the component exceeds the cap.
    pub per_component_rs_size: Vec<Option<usize>>,
    pub is_stone: bool,
    pub stone_witness: Option<StoneWitness>,
    pub is_directly_indecomposable: bool,
    pub equivalence_shape: Option<EquivalenceShape>,
    pub down_directed_components: Option<Vec<bool>>,
}

impl StructureReport {
    /// `|RS| = ∏ |RS(C)|`, when every factor is known and the product fits.
    pub fn rs_size(&self) -> Option<u128> {
        self.per_component_rs_size
            .iter()
            .try_fold(1u128, |acc, s| acc.checked_mul(u128::try_from((*s)?).ok()?))
    }
}

/// Full structural analysis of a quasiorder. Components up to `cap`
/// elements have their rough-set lattices enumerated.
pub fn analyze(r: &Relation, cap: usize) -> Result<StructureReport> {
    let verdict = is_stone(r)?;
    let components = r.connected_components();
    let per_component_rs_size = components
        .blocks()
        .par_iter()
        .map(|block| {
            if block.count() > cap {
                return Ok(None);
            }
            let (sub, _) = r.restrict(block)?;
            Ok(Some(RsLattice::enumerate_capped(&ApproxContext::new(sub), cap)?.len()))
        })
        .collect::<Result<Vec<_>>>()?;
    let properties = r.properties();
    let equivalence_shape = if properties.equivalence {
        Some(equivalence_shape(r)?)
    } else {
        None
    };
    let down_directed_components = if properties.partial_order {
        Some(down_directed_check(r)?.into_iter().map(|(_, d)| d).collect())
    } else {
        None
    };
    Ok(StructureReport {
        properties,
        is_directly_indecomposable: components.len() == 1,
        components,
        per_component_rs_size,
        is_stone: verdict.is_stone,
        stone_witness: verdict.witness,
        equivalence_shape,
        down_directed_components,
    })
}
