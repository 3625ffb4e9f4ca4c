//! The lattice `RS` of rough sets of a quasiorder.
//!
//! For a quasiorder, `RS` is a complete sublattice of `℘(U) × ℘(U)`: meets
//! and joins of any family of rough sets are computed coordinatewise. The
//! witness constructions [`witness_meet`] and [`witness_join`] produce,
//! without enumeration, a subset whose rough set is that meet or join.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::approx::ApproxContext;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

/// Default cap on `|U|` for [`RsLattice::enumerate`].
pub const DEFAULT_RS_CAP: usize = 20;

/// Default cap on `|upper \ lower|` for [`is_realizable`].
pub const DEFAULT_REALIZE_CAP: usize = 20;

/// A pair `(lower, upper)` of subsets, ordered coordinatewise.
///
/// The derived `Ord` is the canonical total order (lower first, then upper,
/// each as a big-endian integer); the lattice order is [`RoughSet::le`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoughSet {
    pub lower: SubsetMask,
    pub upper: SubsetMask,
}

impl RoughSet {
    pub fn new(lower: SubsetMask, upper: SubsetMask) -> Self {
        RoughSet { lower, upper }
    }

    pub fn universe_size(&self) -> usize {
        self.lower.universe_size()
    }

    /// Coordinatewise inclusion.
    pub fn le(&self, other: &RoughSet) -> bool {
        self.lower.is_subset(&other.lower) && self.upper.is_subset(&other.upper)
    }

    pub fn meet(&self, other: &RoughSet) -> RoughSet {
        RoughSet::new(
            self.lower.intersection(&other.lower),
            self.upper.intersection(&other.upper),
        )
    }

    pub fn join(&self, other: &RoughSet) -> RoughSet {
        RoughSet::new(self.lower.union(&other.lower), self.upper.union(&other.upper))
    }

    fn check_size(&self, n: usize) -> Result<()> {
        self.lower.check_size(n)?;
        self.upper.check_size(n)
    }
}

impl fmt::Debug for RoughSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

impl fmt::Display for RoughSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

pub fn leq(a: &RoughSet, b: &RoughSet) -> Result<bool> {
    b.check_size(a.universe_size())?;
    Ok(a.le(b))
}

/// Explicit enumeration of `RS`, sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsLattice {
    universe_size: usize,
    elements: Vec<RoughSet>,
    representatives: Vec<SubsetMask>,
}

impl RsLattice {
    pub fn enumerate(ctx: &ApproxContext) -> Result<Self> {
        Self::enumerate_capped(ctx, DEFAULT_RS_CAP)
    }

    /// Sweeps all `2^|U|` subsets. Each element's representative is the
    /// numerically least subset realizing it, so the result does not depend
    /// on how the sweep is scheduled.
    pub fn enumerate_capped(ctx: &ApproxContext, cap: usize) -> Result<Self> {
        ctx.require_quasiorder()?;
        let n = ctx.size();
        if n > cap || n >= 64 {
            return Err(Error::CapExceeded { size: n, cap });
        }
        let total = 1u64 << n;
        let chunk = 1u64 << n.saturating_sub(6).min(12);
        let found = (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut local: BTreeMap<RoughSet, u64> = BTreeMap::new();
                for code in c * chunk..((c + 1) * chunk).min(total) {
                    let x = SubsetMask::from_code(n, code);
                    local.entry(ctx.rough(&x)).or_insert(code);
                }
                local
            })
            .reduce(BTreeMap::new, |mut acc, other| {
                for (rs, code) in other {
                    acc.entry(rs)
                        .and_modify(|c| *c = (*c).min(code))
                        .or_insert(code);
                }
                acc
            });
        let (elements, representatives) = found
            .into_iter()
            .map(|(rs, code)| (rs, SubsetMask::from_code(n, code)))
            .unzip();
        Ok(RsLattice {
            universe_size: n,
            elements,
            representatives,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn elements(&self) -> &[RoughSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `(∅, ∅)`, the least element in the canonical order.
    pub fn bottom(&self) -> &RoughSet {
        &self.elements[0]
    }

    /// `(U, U)`, the greatest element in the canonical order.
    pub fn top(&self) -> &RoughSet {
        self.elements.last().expect("lattice is never empty")
    }

    pub fn index_of(&self, rs: &RoughSet) -> Option<usize> {
        self.elements.binary_search(rs).ok()
    }

    pub fn contains(&self, rs: &RoughSet) -> bool {
        self.index_of(rs).is_some()
    }

    pub fn representative(&self, index: usize) -> &SubsetMask {
        &self.representatives[index]
    }

    pub fn representative_of(&self, rs: &RoughSet) -> Option<&SubsetMask> {
        self.index_of(rs).map(|i| &self.representatives[i])
    }

    /// Cover pairs `(a, b)` of the Hasse diagram by element index, sorted.
    ///
    /// Quadratic in `|RS|`; meant for lattices small enough to draw.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        let mut above: Vec<usize> = Vec::new();
        for (i, a) in self.elements.iter().enumerate() {
            above.clear();
            above.extend(
                (0..self.len()).filter(|&j| j != i && a.le(&self.elements[j])),
            );
            for &j in &above {
                let b = &self.elements[j];
                let covered = above
                    .iter()
                    .all(|&k| k == j || !self.elements[k].le(b));
                if covered {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

/// Meet of a family of rough sets: coordinatewise intersection.
///
/// The empty family meets to the top element `(U, U)`.
pub fn meet_family(ctx: &ApproxContext, family: &[RoughSet]) -> Result<RoughSet> {
    let n = ctx.size();
    let mut acc = ctx.rough(&ctx.full_set());
    for rs in family {
        rs.check_size(n)?;
        acc.lower.intersect_with(&rs.lower);
        acc.upper.intersect_with(&rs.upper);
    }
    Ok(acc)
}

/// Join of a family of rough sets: coordinatewise union.
///
/// The empty family joins to the bottom element `(∅, ∅)`.
pub fn join_family(ctx: &ApproxContext, family: &[RoughSet]) -> Result<RoughSet> {
    let n = ctx.size();
    let mut acc = ctx.rough(&ctx.empty_set());
    for rs in family {
        rs.check_size(n)?;
        acc.lower.union_with(&rs.lower);
        acc.upper.union_with(&rs.upper);
    }
    Ok(acc)
}

/// Two disjoint subsets of `ground`, each meeting `R(x)` for every `x ∈ ground`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofinalSplit {
    pub ground: SubsetMask,
    pub part_a: SubsetMask,
    pub part_b: SubsetMask,
}

impl CofinalSplit {
    pub fn is_valid(&self, ctx: &ApproxContext) -> bool {
        let r = ctx.relation();
        self.part_a.is_subset(&self.ground)
            && self.part_b.is_subset(&self.ground)
            && self.part_a.is_disjoint(&self.part_b)
            && self.ground.iter().all(|x| {
                r.successors(x).intersects(&self.part_a) && r.successors(x).intersects(&self.part_b)
            })
    }
}

/// Splits off two disjoint cofinal subsets of `ground`.
///
/// Requires every `x ∈ ground` to satisfy `R(x) ⊆ ground` and `|R(x)| ≥ 2`.
/// In a finite quasiorder a subset is cofinal iff it meets every maximal
/// class, and the class of a maximal `x` is `R(x)` itself. Each maximal class
/// gives its least element to `part_a` and its second least to `part_b`;
/// the rest of `ground` goes to neither part.
pub fn cofinal_split(ctx: &ApproxContext, ground: &SubsetMask) -> Result<CofinalSplit> {
    ctx.require_quasiorder()?;
    ground.check_size(ctx.size())?;
    let r = ctx.relation();
    let inv = ctx.inverse();
    let n = ctx.size();
    let mut part_a = SubsetMask::empty(n);
    let mut part_b = SubsetMask::empty(n);
    for x in ground.iter() {
        let succ = r.successors(x);
        if !succ.is_subset(ground) {
            return Err(Error::CofinalPrecondition {
                element: x,
                reason: "a successor lies outside the ground set",
            });
        }
        if succ.count() < 2 {
            return Err(Error::CofinalPrecondition {
                element: x,
                reason: "fewer than two successors in the ground set",
            });
        }
    }
    for x in ground.iter() {
        let class = r.successors(x);
        let maximal = class.is_subset(inv.successors(x));
        if maximal && class.first() == Some(x) {
            let mut members = class.iter();
            part_a.insert(members.next().expect("class has two members"));
            part_b.insert(members.next().expect("class has two members"));
        }
    }
    Ok(CofinalSplit {
        ground: ground.clone(),
        part_a,
        part_b,
    })
}

/// The intermediate sets of the meet construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetConstruction {
    /// `∩ Xᵢ`
    pub intersection: SubsetMask,
    /// `Z = ∩ Xᵢ▲ \ (∩ Xᵢ)▲`
    pub defect: SubsetMask,
    /// Cofinal split of `Z▼`.
    pub split: CofinalSplit,
    /// `W = (∩ Xᵢ) ∪ (Z \ A)`
    pub witness: SubsetMask,
}

/// The intermediate sets of the join construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinConstruction {
    /// `∪ Xᵢ▼`
    pub lower_union: SubsetMask,
    /// `S = (∪ Xᵢ)▲ \ ∪ Xᵢ▼`
    pub defect: SubsetMask,
    /// `H = { a ∈ S : R(a) ⊄ (∪ Xᵢ)▲ }`
    pub escaping: SubsetMask,
    /// Cofinal split of `S▼`.
    pub split: CofinalSplit,
    /// `V = (∪ Xᵢ▼) ∪ H ∪ A`
    pub witness: SubsetMask,
}

fn check_family(ctx: &ApproxContext, subsets: &[SubsetMask]) -> Result<()> {
    ctx.require_quasiorder()?;
    subsets.iter().try_for_each(|x| x.check_size(ctx.size()))
}

fn assert_two_successors(ctx: &ApproxContext, set: &SubsetMask) {
    for a in set.iter() {
        assert!(
            ctx.relation().successors(a).count() >= 2,
            "element {a} of the defect set has a single successor"
        );
    }
}

pub fn meet_construction(ctx: &ApproxContext, subsets: &[SubsetMask]) -> Result<MeetConstruction> {
    check_family(ctx, subsets)?;
    let mut intersection = ctx.full_set();
    let mut upper_meet = ctx.full_set();
    for x in subsets {
        intersection.intersect_with(x);
        upper_meet.intersect_with(&ctx.up(x));
    }
    let defect = upper_meet.difference(&ctx.up(&intersection));
    assert_two_successors(ctx, &defect);
    let split = cofinal_split(ctx, &ctx.low(&defect))
        .expect("the lower approximation of the defect set admits a cofinal split");
    debug_assert!(split.is_valid(ctx));
    let witness = intersection.union(&defect.difference(&split.part_a));
    Ok(MeetConstruction {
        intersection,
        defect,
        split,
        witness,
    })
}

pub fn join_construction(ctx: &ApproxContext, subsets: &[SubsetMask]) -> Result<JoinConstruction> {
    check_family(ctx, subsets)?;
    let mut union = ctx.empty_set();
    let mut lower_union = ctx.empty_set();
    for x in subsets {
        union.union_with(x);
        lower_union.union_with(&ctx.low(x));
    }
    let union_upper = ctx.up(&union);
    let defect = union_upper.difference(&lower_union);
    assert_two_successors(ctx, &defect);
    let mut escaping = ctx.empty_set();
    for a in defect.iter() {
        if !ctx.relation().successors(a).is_subset(&union_upper) {
            escaping.insert(a);
        }
    }
    let split = cofinal_split(ctx, &ctx.low(&defect))
        .expect("the lower approximation of the defect set admits a cofinal split");
    debug_assert!(split.is_valid(ctx));
    let mut witness = lower_union.union(&escaping);
    witness.union_with(&split.part_a);
    Ok(JoinConstruction {
        lower_union,
        defect,
        escaping,
        split,
        witness,
    })
}

/// A set `W` with `A(W) = (∩ Xᵢ▼, ∩ Xᵢ▲)`.
pub fn witness_meet(ctx: &ApproxContext, subsets: &[SubsetMask]) -> Result<SubsetMask> {
    Ok(meet_construction(ctx, subsets)?.witness)
}

/// A set `V` with `A(V) = (∪ Xᵢ▼, ∪ Xᵢ▲)`.
pub fn witness_join(ctx: &ApproxContext, subsets: &[SubsetMask]) -> Result<SubsetMask> {
    Ok(join_construction(ctx, subsets)?.witness)
}

/// Searches `lower ⊆ X ⊆ upper` for a set with `A(X) = pair`.
///
/// Returns the numerically least such `X`, or `None` when `pair ∉ RS`.
pub fn is_realizable(ctx: &ApproxContext, pair: &RoughSet, cap: usize) -> Result<Option<SubsetMask>> {
    pair.check_size(ctx.size())?;
    if !pair.lower.is_subset(&pair.upper) {
        return Ok(None);
    }
    let free = pair.upper.difference(&pair.lower).to_indices();
    if free.len() > cap || free.len() >= 64 {
        return Err(Error::CapExceeded {
            size: free.len(),
            cap,
        });
    }
    for code in 0..(1u64 << free.len()) {
        let mut x = pair.lower.clone();
        for (bit, &e) in free.iter().enumerate() {
            if code >> bit & 1 == 1 {
                x.insert(e);
            }
        }
        if ctx.rough(&x) == *pair {
            return Ok(Some(x));
        }
    }
    Ok(None)
}
