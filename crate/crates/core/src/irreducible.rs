//! Completely join- and meet-irreducible elements of `RS`.
//!
//! The join-irreducibles come from two generator families:
//! - `(∅, {x}▲)` for every `x` with `|R(x)| ≥ 2`,
//! - `({x}△, {x}△▲)` for every `x`.
//!
//! The meet-irreducibles are their images under the de Morgan map.

use std::collections::HashSet;

use serde::Serialize;

use crate::approx::ApproxContext;
use crate::complement::de_morgan;
use crate::error::Result;
use crate::lattice::RoughSet;
use crate::mask::SubsetMask;

/// Which generator produced a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "x", rename_all = "snake_case")]
pub enum Origin {
    /// `(∅, {x}▲)`
    SingletonUpper(usize),
    /// `({x}△, {x}△▲)`
    Neighbourhood(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleCatalog {
    pub join_irr: Vec<RoughSet>,
    pub meet_irr: Vec<RoughSet>,
    /// Producer of `join_irr[i]`; `meet_irr[i]` is its de Morgan image.
    pub origin: Vec<Origin>,
}

fn singleton_upper(ctx: &ApproxContext, x: usize) -> RoughSet {
    RoughSet::new(ctx.empty_set(), ctx.inverse().successors(x).clone())
}

fn neighbourhood(ctx: &ApproxContext, x: usize) -> RoughSet {
    let nb = ctx.relation().successors(x).clone();
    let up = ctx.up(&nb);
    RoughSet::new(nb, up)
}

fn has_two_successors(ctx: &ApproxContext, x: usize) -> bool {
    ctx.relation().successors(x).count() >= 2
}

/// The catalog of all completely join- and meet-irreducible elements.
///
/// Entries appear in generator order: first family by increasing `x`, then
/// second family by increasing `x`; a duplicate keeps its first origin.
pub fn join_irreducibles(ctx: &ApproxContext) -> Result<IrreducibleCatalog> {
    ctx.require_quasiorder()?;
    let n = ctx.size();
    let first = (0..n)
        .filter(|&x| has_two_successors(ctx, x))
        .map(|x| (singleton_upper(ctx, x), Origin::SingletonUpper(x)));
    let second = (0..n).map(|x| (neighbourhood(ctx, x), Origin::Neighbourhood(x)));
    let mut seen = HashSet::new();
    let mut join_irr = Vec::new();
    let mut origin = Vec::new();
    for (rs, o) in first.chain(second) {
        if seen.insert(rs.clone()) {
            join_irr.push(rs);
            origin.push(o);
        }
    }
    let meet_irr = join_irr.iter().map(de_morgan).collect();
    Ok(IrreducibleCatalog {
        join_irr,
        meet_irr,
        origin,
    })
}

pub fn meet_irreducibles(ctx: &ApproxContext) -> Result<Vec<RoughSet>> {
    Ok(join_irreducibles(ctx)?.meet_irr)
}

/// Join-irreducibles below `A(X)` whose join is `A(X)`:
/// `(∅, {y}▲)` for `y ∈ X` with `|R(y)| ≥ 2`, and `({y}△, {y}△▲)` for
/// `{y}△ ⊆ X`, without repeats.
///
/// The family depends on `X`, not only on `A(X)`; its join does not.
pub fn join_decomposition(ctx: &ApproxContext, x: &SubsetMask) -> Result<Vec<RoughSet>> {
    ctx.require_quasiorder()?;
    x.check_size(ctx.size())?;
    let n = ctx.size();
    let first = x
        .iter()
        .filter(|&y| has_two_successors(ctx, y))
        .map(|y| singleton_upper(ctx, y));
    let second = (0..n)
        .filter(|&y| ctx.relation().successors(y).is_subset(x))
        .map(|y| neighbourhood(ctx, y));
    let mut seen = HashSet::new();
    Ok(first.chain(second).filter(|rs| seen.insert(rs.clone())).collect())
}

/// Meet-irreducibles whose meet is `A(X)`: the de Morgan image of the join
/// decomposition of `Xᶜ`.
pub fn meet_decomposition(ctx: &ApproxContext, x: &SubsetMask) -> Result<Vec<RoughSet>> {
    x.check_size(ctx.size())?;
    Ok(join_decomposition(ctx, &x.complement())?
        .iter()
        .map(de_morgan)
        .collect())
}
