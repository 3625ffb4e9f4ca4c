//! Complementation operations on `RS`: the de Morgan map, the
//! pseudocomplement and the dual pseudocomplement.

use crate::approx::ApproxContext;
use crate::error::Result;
use crate::lattice::RoughSet;
use crate::relation::ComponentPartition;

/// `c(X▼, X▲) = (X▲ᶜ, X▼ᶜ)`, which is `A(Xᶜ)`.
pub fn de_morgan(a: &RoughSet) -> RoughSet {
    RoughSet::new(a.upper.complement(), a.lower.complement())
}

/// `A(X)* = A(X▲△ᶜ)`. Depends on the upper component only.
pub fn pseudocomplement(ctx: &ApproxContext, a: &RoughSet) -> Result<RoughSet> {
    ctx.require_quasiorder()?;
    a.upper.check_size(ctx.size())?;
    Ok(ctx.rough(&ctx.up_inv(&a.upper).complement()))
}

/// `A(X)⁺ = A(X▼▽ᶜ)`. Depends on the lower component only.
pub fn dual_pseudocomplement(ctx: &ApproxContext, a: &RoughSet) -> Result<RoughSet> {
    ctx.require_quasiorder()?;
    a.lower.check_size(ctx.size())?;
    Ok(ctx.rough(&ctx.low_inv(&a.lower).complement()))
}

pub fn is_exact(a: &RoughSet) -> bool {
    a.lower == a.upper
}

/// Complemented in `RS` iff exact with the common set a union of connected
/// components. Decided without enumerating the lattice.
pub fn is_complemented_in_rs(ctx: &ApproxContext, a: &RoughSet) -> Result<bool> {
    ctx.require_quasiorder()?;
    a.lower.check_size(ctx.size())?;
    let components = ctx.relation().connected_components();
    Ok(complemented_given(&components, a))
}

fn complemented_given(components: &ComponentPartition, a: &RoughSet) -> bool {
    is_exact(a) && components.is_union_of_blocks(&a.lower)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementReport {
    pub element: RoughSet,
    pub de_morgan: RoughSet,
    pub pseudo: RoughSet,
    pub dual_pseudo: RoughSet,
    pub is_exact: bool,
    pub is_complemented: bool,
}

pub fn complement_report(ctx: &ApproxContext, a: &RoughSet) -> Result<ComplementReport> {
    let components = ctx.relation().connected_components();
    complement_report_with(ctx, &components, a)
}

/// Reports for many elements, sharing one component computation.
pub fn complement_reports<'a, I>(ctx: &ApproxContext, elements: I) -> Result<Vec<ComplementReport>>
where
    I: IntoIterator<Item = &'a RoughSet>,
{
    let components = ctx.relation().connected_components();
    elements
        .into_iter()
        .map(|a| complement_report_with(ctx, &components, a))
        .collect()
}

fn complement_report_with(
    ctx: &ApproxContext,
    components: &ComponentPartition,
    a: &RoughSet,
) -> Result<ComplementReport> {
    Ok(ComplementReport {
        element: a.clone(),
        de_morgan: de_morgan(a),
        pseudo: pseudocomplement(ctx, a)?,
        dual_pseudo: dual_pseudocomplement(ctx, a)?,
        is_exact: is_exact(a),
        is_complemented: complemented_given(components, a),
    })
}
