//! The four rough approximation operators.
//!
//! With respect to `R`:
//! - lower `X▼ = { a : R(a) ⊆ X }`
//! - upper `X▲ = { a : R(a) ∩ X ≠ ∅ }`
//!
//! and the same two operators taken with respect to `R⁻¹`, written `X▽` and
//! `X△`. Each operator is a sweep over the successor rows, `O(|U|²/w)` word
//! operations for word width `w`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::RoughSet;
use crate::mask::SubsetMask;
use crate::relation::{QuasiorderViolation, Relation};

/// Default cap on `|U|` for exhaustive sweeps over all subsets in
/// [`frame_correspondence`].
pub const DEFAULT_FRAME_CAP: usize = 16;

/// A relation together with its cached inverse.
#[derive(Debug, Clone)]
pub struct ApproxContext {
    relation: Relation,
    inv: Relation,
    violation: Option<QuasiorderViolation>,
}

impl ApproxContext {
    pub fn new(relation: Relation) -> Self {
        let inv = relation.inverse();
        let violation = relation.quasiorder_violation();
        ApproxContext {
            relation,
            inv,
            violation,
        }
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn inverse(&self) -> &Relation {
        &self.inv
    }

    pub fn size(&self) -> usize {
        self.relation.size()
    }

    pub fn is_quasiorder(&self) -> bool {
        self.violation.is_none()
    }

    pub(crate) fn require_quasiorder(&self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::NotQuasiorder(v)),
        }
    }

    pub fn empty_set(&self) -> SubsetMask {
        SubsetMask::empty(self.size())
    }

    pub fn full_set(&self) -> SubsetMask {
        SubsetMask::full(self.size())
    }

    /// `X▼`
    pub fn lower(&self, x: &SubsetMask) -> Result<SubsetMask> {
        x.check_size(self.size())?;
        Ok(lower_wrt(&self.relation, x))
    }

    /// `X▲`
    pub fn upper(&self, x: &SubsetMask) -> Result<SubsetMask> {
        x.check_size(self.size())?;
        Ok(upper_wrt(&self.relation, x))
    }

    /// `X▽`
    pub fn lower_inv(&self, x: &SubsetMask) -> Result<SubsetMask> {
        x.check_size(self.size())?;
        Ok(lower_wrt(&self.inv, x))
    }

    /// `X△`
    pub fn upper_inv(&self, x: &SubsetMask) -> Result<SubsetMask> {
        x.check_size(self.size())?;
        Ok(upper_wrt(&self.inv, x))
    }

    /// `A(X) = (X▼, X▲)`
    pub fn rough_pair(&self, x: &SubsetMask) -> Result<RoughSet> {
        x.check_size(self.size())?;
        Ok(self.rough(x))
    }

    pub(crate) fn low(&self, x: &SubsetMask) -> SubsetMask {
        lower_wrt(&self.relation, x)
    }

    pub(crate) fn up(&self, x: &SubsetMask) -> SubsetMask {
        upper_wrt(&self.relation, x)
    }

    pub(crate) fn low_inv(&self, x: &SubsetMask) -> SubsetMask {
        lower_wrt(&self.inv, x)
    }

    pub(crate) fn up_inv(&self, x: &SubsetMask) -> SubsetMask {
        upper_wrt(&self.inv, x)
    }

    pub(crate) fn rough(&self, x: &SubsetMask) -> RoughSet {
        RoughSet::new(self.low(x), self.up(x))
    }
}

fn lower_wrt(r: &Relation, x: &SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::empty(r.size());
    for (a, row) in r.rows().iter().enumerate() {
        if row.is_subset(x) {
            out.insert(a);
        }
    }
    out
}

fn upper_wrt(r: &Relation, x: &SubsetMask) -> SubsetMask {
    let mut out = SubsetMask::empty(r.size());
    for (a, row) in r.rows().iter().enumerate() {
        if row.intersects(x) {
            out.insert(a);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameProperty {
    LeftTotal,
    Reflexive,
    Symmetric,
    Transitive,
}

/// One relational property, decided both on the relation and through the
/// approximation operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorrespondenceRow {
    pub property: FrameProperty,
    pub relational: bool,
    pub approximation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub rows: Vec<CorrespondenceRow>,
}

impl CorrespondenceReport {
    pub fn row(&self, property: FrameProperty) -> &CorrespondenceRow {
        self.rows
            .iter()
            .find(|r| r.property == property)
            .expect("every property has a row")
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.relational == r.approximation)
    }
}

/// Decides left-totality, reflexivity, symmetry and transitivity twice: on
/// the relation, and by quantifying the matching approximation law over
/// every `X ⊆ U`:
///
/// | property    | approximation law |
/// |-------------|-------------------|
/// | left-total  | `X▼ ⊆ X▲`         |
/// | reflexive   | `X ⊆ X▲`          |
/// | symmetric   | `X ⊆ X▲▼`         |
/// | transitive  | `X▲▲ ⊆ X▲`        |
///
/// Exponential in `|U|`; refuses universes larger than `cap`.
pub fn frame_correspondence(r: &Relation, cap: usize) -> Result<CorrespondenceReport> {
    let n = r.size();
    if n > cap || n >= 64 {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let ctx = ApproxContext::new(r.clone());
    let (mut left_total, mut reflexive, mut symmetric, mut transitive) = (true, true, true, true);
    for code in 0..(1u64 << n) {
        let x = SubsetMask::from_code(n, code);
        let up = ctx.up(&x);
        left_total &= ctx.low(&x).is_subset(&up);
        reflexive &= x.is_subset(&up);
        symmetric &= x.is_subset(&ctx.low(&up));
        transitive &= ctx.up(&up).is_subset(&up);
    }
    let row = |property, relational, approximation| CorrespondenceRow {
        property,
        relational,
        approximation,
    };
    Ok(CorrespondenceReport {
        rows: vec![
            row(FrameProperty::LeftTotal, r.is_left_total(), left_total),
            row(FrameProperty::Reflexive, r.is_reflexive(), reflexive),
            row(FrameProperty::Symmetric, r.is_symmetric(), symmetric),
            row(FrameProperty::Transitive, r.is_transitive(), transitive),
        ],
    })
}
