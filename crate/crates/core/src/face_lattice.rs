//! The abstract polytope of an atomic hypergraph.
//!
//! Faces are the constructs, ordered by reverse inclusion, plus a least face
//! [`Face::Bottom`]. A construct `C` has rank `|⋃H| − |C|`.

use crate::atoms::AtomSet;
use crate::construction::{enumerate_constructs, is_construction, is_construction_of};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph;
use crate::poset::FacePoset;
use crate::saturation::is_asc;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    Bottom,
    Construct(Family),
}

impl Face {
    pub fn family(&self) -> Option<&Family> {
        match self {
            Face::Bottom => None,
            Face::Construct(c) => Some(c),
        }
    }

    pub fn label(&self, h: &Hypergraph) -> String {
        match self {
            Face::Bottom => "F-1".to_string(),
            Face::Construct(c) => h.format_family(c),
        }
    }
}

/// Face counts by rank, from vertices up to the top face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// Counts below the top face: vertices, edges, ... , facets.
    pub fn proper(&self) -> &[usize] {
        &self.0[..self.0.len().saturating_sub(1)]
    }
}

/// `A(h)` as a ranked poset.
pub fn abstract_polytope(h: &Hypergraph) -> Result<FacePoset<Face>> {
    let constructs = enumerate_constructs(h)?;
    let n = h.carrier().len() as i32;
    let components: Family = h.members().component_carriers().into_iter().collect();
    let mut faces = vec![Face::Bottom];
    let mut ranks = vec![-1];
    for c in &constructs {
        ranks.push(n - c.len() as i32);
        faces.push(Face::Construct(c.clone()));
    }
    let position = |f: &Family| {
        constructs
            .binary_search(f)
            .expect("constructs are closed under removal")
            + 1
    };
    let mut relations = Vec::new();
    for (i, c) in constructs.iter().enumerate() {
        let here = i + 1;
        if ranks[here] == 0 {
            relations.push((0, here));
        }
        for x in c.iter().filter(|x| !components.contains(x)) {
            relations.push((here, position(&c.without(x))));
        }
    }
    FacePoset::from_relations(faces, &relations, Some(ranks))
}

pub fn f_vector<F: Clone + Eq + std::hash::Hash>(p: &FacePoset<F>) -> FVector {
    let r = p.rank();
    FVector((0..=r).map(|k| p.faces_of_rank(k).len()).collect())
}

/// Greatest lower bound: the union when it is a face, otherwise `Bottom`.
pub fn meet(p: &FacePoset<Face>, c1: &Face, c2: &Face) -> Face {
    match (c1, c2) {
        (Face::Construct(a), Face::Construct(b)) => {
            let u = Face::Construct(a.union(b));
            if p.index_of(&u).is_some() {
                u
            } else {
                Face::Bottom
            }
        }
        _ => Face::Bottom,
    }
}

/// Least upper bound: the intersection, with `Bottom` as a unit.
pub fn join(c1: &Face, c2: &Face) -> Face {
    match (c1, c2) {
        (Face::Bottom, other) | (other, Face::Bottom) => other.clone(),
        (Face::Construct(a), Face::Construct(b)) => Face::Construct(a.intersection(b)),
    }
}

fn carrier_of(p: &FacePoset<Face>) -> Result<AtomSet> {
    let top = p
        .top()
        .ok_or_else(|| Error::MalformedPoset("no greatest face".into()))?;
    Ok(p.face(top)
        .family()
        .map(Family::union_all)
        .unwrap_or_default())
}

/// Product of face posets over disjoint carriers: nonbottom faces are unions
/// `C1 ∪ C2`, ordered componentwise, and the two bottoms are identified.
pub fn otimes(p1: &FacePoset<Face>, p2: &FacePoset<Face>) -> Result<FacePoset<Face>> {
    if carrier_of(p1)?.intersects(&carrier_of(p2)?) {
        return Err(Error::CarrierOverlap);
    }
    let proper = |p: &FacePoset<Face>| -> Vec<usize> {
        (0..p.len())
            .filter(|&i| *p.face(i) != Face::Bottom)
            .collect()
    };
    let (a, b) = (proper(p1), proper(p2));
    let pos = |i: usize, j: usize| 1 + i * b.len() + j;
    let slot_a: std::collections::HashMap<usize, usize> =
        a.iter().enumerate().map(|(s, &i)| (i, s)).collect();
    let slot_b: std::collections::HashMap<usize, usize> =
        b.iter().enumerate().map(|(s, &i)| (i, s)).collect();
    let mut faces = vec![Face::Bottom];
    let mut ranks = vec![-1];
    let mut relations = Vec::new();
    for (si, &i) in a.iter().enumerate() {
        for (sj, &j) in b.iter().enumerate() {
            let (fi, fj) = (p1.face(i).family().unwrap(), p2.face(j).family().unwrap());
            faces.push(Face::Construct(fi.union(fj)));
            let r = p1.rank_of(i) + p2.rank_of(j);
            ranks.push(r);
            if r == 0 {
                relations.push((0, pos(si, sj)));
            }
            for k in p1.covers_up(i) {
                relations.push((pos(si, sj), pos(slot_a[k], sj)));
            }
            for k in p2.covers_up(j) {
                relations.push((pos(si, sj), pos(si, slot_b[k])));
            }
        }
    }
    FacePoset::from_relations(faces, &relations, Some(ranks))
}

pub fn otimes_all(posets: &[FacePoset<Face>]) -> Result<FacePoset<Face>> {
    let (first, rest) = posets
        .split_first()
        .ok_or_else(|| Error::MalformedPoset("empty product".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, p| otimes(&acc, p))
}

/// `X ∪_H Y`: the union when it belongs to `h`, otherwise `X`.
pub fn union_within(h: &Hypergraph, x: &AtomSet, y: &AtomSet) -> AtomSet {
    let u = x.union(y);
    if h.contains(&u) {
        u
    } else {
        x.clone()
    }
}

/// `K ∗ J = K ∪ {X ∪_H Y : X ∈ J}` for `K` a construction of `H_Y` and `J`
/// a construction of the quotient on `⋃H − Y`.
pub fn continuation(h: &Hypergraph, y: &AtomSet, k: &Family, j: &Family) -> Result<Family> {
    if !is_asc(h) {
        return Err(Error::NotAsc);
    }
    if !h.contains(y) {
        return Err(Error::BadFactor);
    }
    let restricted = h.restrict_unchecked(y);
    if !is_construction(&restricted, k)? {
        return Err(Error::BadFactor);
    }
    let quotient = h.quotient(&h.carrier().difference(y))?;
    if !is_construction_of(&quotient, j)? {
        return Err(Error::BadFactor);
    }
    Ok(k.union(&j.iter().map(|x| union_within(h, x, y)).collect()))
}

/// Constructs of `h` containing `y`, with `Bottom`: the section below the
/// facet `{y, ⋃h}`.
pub fn facet_section(h: &Hypergraph, y: &AtomSet) -> Result<FacePoset<Face>> {
    if !is_asc(h) {
        return Err(Error::NotAsc);
    }
    if !h.contains(y) || y == h.carrier() {
        return Err(Error::NotFacet);
    }
    let p = abstract_polytope(h)?;
    let facet: Family = [y.clone(), h.carrier().clone()].into_iter().collect();
    let f = p.index_of(&Face::Construct(facet)).ok_or(Error::NotFacet)?;
    let b = p.index_of(&Face::Bottom).expect("bottom face");
    p.section(f, b)
}
