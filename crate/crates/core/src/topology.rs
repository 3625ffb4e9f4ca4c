//! The two Alexandrov topologies of a quasiorder.
//!
//! `T▼` consists of the up-sets of `R` (the sets `X▼`), with smallest
//! neighbourhoods `N(x) = R(x)`. `T▲` consists of the down-sets (the sets
//! `X▲`), with `N(x) = R⁻¹(x)`. A topology is stored as its point
//! neighbourhoods; the open sets are generated only on request.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::relation::Relation;
use crate::universe::Universe;

/// Default cap on `|U|` for [`AlexandrovTopology::enumerate_opens`].
pub const DEFAULT_OPENS_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyKind {
    /// `T▼`, open sets are up-sets of `R`.
    Up,
    /// `T▲`, open sets are down-sets of `R`.
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexandrovTopology {
    universe: Arc<Universe>,
    kind: TopologyKind,
    /// `N(x)` for each point.
    points: Vec<SubsetMask>,
    /// Distinct point neighbourhoods, sorted.
    base: Vec<SubsetMask>,
}

/// `T▼`, the topology of up-sets of the quasiorder `r`.
pub fn topology_up(r: &Relation) -> Result<AlexandrovTopology> {
    if let Some(v) = r.quasiorder_violation() {
        return Err(Error::NotQuasiorder(v));
    }
    Ok(AlexandrovTopology::from_points(
        r.universe().clone(),
        TopologyKind::Up,
        r.rows().to_vec(),
    ))
}

/// `T▲`, the topology of down-sets of the quasiorder `r`.
pub fn topology_down(r: &Relation) -> Result<AlexandrovTopology> {
    if let Some(v) = r.quasiorder_violation() {
        return Err(Error::NotQuasiorder(v));
    }
    Ok(AlexandrovTopology::from_points(
        r.universe().clone(),
        TopologyKind::Down,
        r.inverse().rows().to_vec(),
    ))
}

impl AlexandrovTopology {
    fn from_points(universe: Arc<Universe>, kind: TopologyKind, points: Vec<SubsetMask>) -> Self {
        let base: BTreeSet<SubsetMask> = points.iter().cloned().collect();
        AlexandrovTopology {
            universe,
            kind,
            points,
            base: base.into_iter().collect(),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn kind(&self) -> TopologyKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// The smallest base `{ N(x) : x ∈ U }`, deduplicated and sorted.
    pub fn base(&self) -> &[SubsetMask] {
        &self.base
    }

    /// `N(x)` for a single point.
    pub fn point_neighbourhood(&self, x: usize) -> &SubsetMask {
        &self.points[x]
    }

    /// Smallest open set containing `x`: the union of `N(p)` over `p ∈ x`.
    pub fn neighbourhood(&self, x: &SubsetMask) -> Result<SubsetMask> {
        x.check_size(self.size())?;
        let mut out = SubsetMask::empty(self.size());
        for p in x.iter() {
            out.union_with(&self.points[p]);
        }
        Ok(out)
    }

    pub fn is_open(&self, x: &SubsetMask) -> Result<bool> {
        x.check_size(self.size())?;
        Ok(x.iter().all(|p| self.points[p].is_subset(x)))
    }

    /// Largest open set inside `x`.
    pub fn interior(&self, x: &SubsetMask) -> Result<SubsetMask> {
        x.check_size(self.size())?;
        let mut out = SubsetMask::empty(self.size());
        for (p, nb) in self.points.iter().enumerate() {
            if nb.is_subset(x) {
                out.insert(p);
            }
        }
        Ok(out)
    }

    /// Smallest closed set containing `x`.
    pub fn closure_op(&self, x: &SubsetMask) -> Result<SubsetMask> {
        Ok(self.interior(&x.complement())?.complement())
    }

    /// The quasiorder `x R y ⟺ y ∈ N(x)` of an up-set topology.
    pub fn quasiorder_of(&self) -> Result<Relation> {
        if self.kind != TopologyKind::Up {
            return Err(Error::WrongTopologyKind);
        }
        Relation::from_rows(self.universe.clone(), self.points.clone())
    }

    /// All open sets (unions of base members), sorted canonically.
    pub fn enumerate_opens(&self, cap: usize) -> Result<Vec<SubsetMask>> {
        let n = self.size();
        if n > cap {
            return Err(Error::CapExceeded { size: n, cap });
        }
        let mut opens: BTreeSet<SubsetMask> = BTreeSet::new();
        opens.insert(SubsetMask::empty(n));
        for b in &self.base {
            let grown: Vec<SubsetMask> = opens.iter().map(|o| o.union(b)).collect();
            opens.extend(grown);
        }
        Ok(opens.into_iter().collect())
    }
}
