//! Dispensable members, saturated closures and cognate classes.

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph;

/// Closed under unions of intersecting members.
pub fn is_saturated(h: &Hypergraph) -> bool {
    let m = h.members().as_slice();
    m.iter().enumerate().all(|(i, a)| {
        m[i + 1..]
            .iter()
            .all(|b| a.is_disjoint(b) || h.contains(&a.union(b)))
    })
}

/// Atomic, saturated and connected.
pub fn is_asc(h: &Hypergraph) -> bool {
    h.is_atomic() && h.is_connected() && is_saturated(h)
}

fn covers_connectedly(family: &Family, y: &AtomSet) -> bool {
    !family.is_empty() && family.union_all() == *y && family.is_connected()
}

/// The members strictly inside `y` form a connected hypergraph on `y`.
pub fn is_dispensable(h: &Hypergraph, y: &AtomSet) -> Result<bool> {
    if !y.is_subset(h.carrier()) {
        return Err(Error::NotSubset);
    }
    let inner = h.members().restrict(y).without(y);
    Ok(covers_connectedly(&inner, y))
}

/// Every nonempty `Y` on which the members inside `Y` form a connected
/// hypergraph covering `Y`.
pub fn saturated_closure(h: &Hypergraph) -> Hypergraph {
    let members: Family = h
        .carrier()
        .nonempty_subsets_by_size()
        .into_iter()
        .filter(|y| covers_connectedly(&h.members().restrict(y), y))
        .collect();
    h.derive(members)
}

pub fn are_cognate(h1: &Hypergraph, h2: &Hypergraph) -> Result<bool> {
    if h1.carrier() != h2.carrier() {
        return Err(Error::CarrierMismatch {
            declared: h1.format_set(h1.carrier()),
            actual: h2.format_set(h2.carrier()),
        });
    }
    Ok(saturated_closure(h1) == saturated_closure(h2))
}

/// Deletes dispensable members, largest first, until none is left.
pub fn bare_representative(h: &Hypergraph) -> Hypergraph {
    let mut current = h.clone();
    loop {
        let next = current
            .members()
            .iter()
            .rev()
            .find(|y| is_dispensable(&current, y).unwrap_or(false))
            .cloned();
        match next {
            Some(y) => current = current.derive(current.members().without(&y)),
            None => return current,
        }
    }
}

/// All subsets of the carrier that are dispensable in `h`.
pub fn dispensable_sets(h: &Hypergraph) -> Family {
    h.carrier()
        .nonempty_subsets_by_size()
        .into_iter()
        .filter(|y| is_dispensable(h, y).unwrap_or(false))
        .collect()
}

/// The greatest and least members of a cognate class, with the sets that may
/// be freely added or removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CognateClassSummary {
    pub saturated_top: Hypergraph,
    pub bare_bottom: Hypergraph,
    pub dispensables: Family,
}

pub fn cognate_class(h: &Hypergraph) -> CognateClassSummary {
    CognateClassSummary {
        saturated_top: saturated_closure(h),
        bare_bottom: bare_representative(h),
        dispensables: dispensable_sets(h),
    }
}
