//! Constructions and constructs of atomic hypergraphs.
//!
//! Enumeration follows the inductive clauses directly: the empty hypergraph
//! has the single construction `∅`; a connected `H` has the constructions
//! `K ∪ {⋃H}` with `K` a construction of `H_{⋃H−{x}}`; a disconnected one has
//! the unions of constructions of its components. Recognition uses the
//! noninductive antichain characterization instead, so the two can be played
//! against each other.

use std::collections::{BTreeSet, HashMap};

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph;
use crate::saturation::{is_asc, saturated_closure};

/// All constructions of an atomic hypergraph, in canonical order.
pub fn enumerate_constructions(h: &Hypergraph) -> Result<Vec<Family>> {
    if !h.is_atomic() {
        return Err(Error::NotAtomic);
    }
    let mut memo = HashMap::new();
    Ok(constructions_on(h, h.carrier(), &mut memo))
}

fn constructions_on(
    h: &Hypergraph,
    y: &AtomSet,
    memo: &mut HashMap<AtomSet, Vec<Family>>,
) -> Vec<Family> {
    if let Some(done) = memo.get(y) {
        return done.clone();
    }
    let result = if y.is_empty() {
        vec![Family::new()]
    } else {
        let blocks = h.members().restrict(y).component_carriers();
        let mut out: Vec<Family> = if blocks.len() == 1 {
            // Distinct choices of x give distinct results, since x is the
            // only atom of y missing from the union of K.
            let mut out = Vec::new();
            for x in y.iter() {
                let rest = y.difference(&AtomSet::singleton(x));
                for k in constructions_on(h, &rest, memo) {
                    out.push(k.with(y.clone()));
                }
            }
            out
        } else {
            let mut acc = vec![Family::new()];
            for b in &blocks {
                let part = constructions_on(h, b, memo);
                acc = acc
                    .iter()
                    .flat_map(|k| part.iter().map(move |p| k.union(p)))
                    .collect();
            }
            acc
        };
        out.sort();
        out.dedup();
        out
    };
    memo.insert(y.clone(), result.clone());
    result
}

/// Searches for an antichain of at least two members of `m` whose union lies
/// in `h`. Returns the first one found, in canonical order.
pub fn find_unmissed_antichain(h: &Family, m: &Family) -> Option<Vec<AtomSet>> {
    fn extend(
        h: &Family,
        sets: &[AtomSet],
        start: usize,
        chosen: &mut Vec<usize>,
        union: &AtomSet,
    ) -> bool {
        for i in start..sets.len() {
            let s = &sets[i];
            if chosen
                .iter()
                .any(|&j| sets[j].is_subset(s) || s.is_subset(&sets[j]))
            {
                continue;
            }
            chosen.push(i);
            let u = union.union(s);
            if chosen.len() >= 2 && h.contains(&u) {
                return true;
            }
            if extend(h, sets, i + 1, chosen, &u) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let sets = m.as_slice();
    let mut chosen = Vec::new();
    extend(h, sets, 0, &mut chosen, &AtomSet::new())
        .then(|| chosen.iter().map(|&i| sets[i].clone()).collect())
}

/// Every antichain of `m` misses `h`.
pub fn satisfies_antichain_condition(h: &Family, m: &Family) -> bool {
    find_unmissed_antichain(h, m).is_none()
}

/// Antichain test for a construction of an ASC hypergraph: `m ⊆ h`, every
/// `m`-antichain misses `h`, and `|m| = |⋃h|`.
pub fn is_construction(h: &Hypergraph, m: &Family) -> Result<bool> {
    if !is_asc(h) {
        return Err(Error::NotAsc);
    }
    Ok(m.len() == h.carrier().len()
        && m.is_subfamily(h.members())
        && satisfies_antichain_condition(h.members(), m))
}

/// Antichain test for a construct of an ASC hypergraph: `m ⊆ h`, every
/// `m`-antichain misses `h`, and `⋃h ∈ m`.
pub fn is_construct(h: &Hypergraph, m: &Family) -> Result<bool> {
    if !is_asc(h) {
        return Err(Error::NotAsc);
    }
    if h.is_empty() {
        return Ok(m.is_empty());
    }
    Ok(m.contains(h.carrier())
        && m.is_subfamily(h.members())
        && satisfies_antichain_condition(h.members(), m))
}

/// Splits `m` along the components of the saturated closure of `h` and
/// applies `test` to each piece. Fails when a member of `m` straddles two
/// components.
fn blockwise(
    h: &Hypergraph,
    m: &Family,
    test: impl Fn(&Hypergraph, &Family) -> Result<bool>,
) -> Result<bool> {
    if !h.is_atomic() {
        return Err(Error::NotAtomic);
    }
    let closure = saturated_closure(h);
    let blocks = closure.finest_partition().blocks;
    let mut covered = 0;
    for b in &blocks {
        let part = m.restrict(b.carrier());
        covered += part.len();
        if !test(b, &part)? {
            return Ok(false);
        }
    }
    Ok(covered == m.len())
}

/// Whether `m` is a construction of an arbitrary atomic hypergraph.
pub fn is_construction_of(h: &Hypergraph, m: &Family) -> Result<bool> {
    blockwise(h, m, is_construction)
}

/// Whether `m` is a construct of an arbitrary atomic hypergraph.
pub fn is_construct_of(h: &Hypergraph, m: &Family) -> Result<bool> {
    blockwise(h, m, is_construct)
}

/// All constructs of an atomic hypergraph: subfamilies of constructions that
/// keep every connected component of the carrier. Canonical order.
pub fn enumerate_constructs(h: &Hypergraph) -> Result<Vec<Family>> {
    let constructions = enumerate_constructions(h)?;
    let components: Family = h.members().component_carriers().into_iter().collect();
    let mut all = BTreeSet::new();
    for k in &constructions {
        let optional: Vec<&AtomSet> = k.iter().filter(|x| !components.contains(x)).collect();
        for mask in 0u64..1 << optional.len() {
            let mut face = components.clone();
            for (i, x) in optional.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    face.insert((*x).clone());
                }
            }
            all.insert(face);
        }
    }
    Ok(all.into_iter().collect())
}

/// Atoms of `x` that lie in no proper subset of `x` belonging to `m`.
pub fn superficial_elements(m: &Family, x: &AtomSet) -> Result<AtomSet> {
    if !m.contains(x) {
        return Err(Error::NotMember);
    }
    Ok(m.iter()
        .filter(|y| y.is_proper_subset(x))
        .fold(x.clone(), |acc, y| acc.difference(y)))
}
