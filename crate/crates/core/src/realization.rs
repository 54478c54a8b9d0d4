//! Exact realization by truncating a simplex.
//!
//! Every member `X` contributes the halfspace `Σ_{i∈X} x_i ≥ 3^|X|`, and the
//! polytope lives in the hyperplanes `Σ_{i∈C} x_i = 3^|C|` of the connected
//! components `C` of the carrier. The vertex of a construction `K` is the
//! unique point where the equations of all members of `K` hold; it is found by
//! processing members of `K` from small to large, since each member adds
//! exactly one fresh (superficial) coordinate. All arithmetic is exact.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::atoms::AtomSet;
use crate::construction::{enumerate_constructions, is_construction};
use crate::error::{Error, Result};
use crate::face_lattice::{abstract_polytope, Face};
use crate::family::Family;
use crate::hypergraph::Hypergraph;
use crate::saturation::{is_asc, saturated_closure};

pub fn level(size: usize) -> BigUint {
    BigUint::from(3u32).pow(size as u32)
}

/// The hyperplane `Σ_{i∈support} x_i = 3^|support|`, bounding the halfspace
/// where the sum is at least the level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneSpec {
    pub support: AtomSet,
    pub level: BigUint,
}

impl HyperplaneSpec {
    pub fn new(support: AtomSet) -> Self {
        let level = level(support.len());
        Self { support, level }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizedVertex {
    pub construction: Family,
    /// One coordinate per carrier atom, in carrier order.
    pub coordinates: Vec<BigUint>,
}

#[derive(Clone, Debug)]
pub struct RealizedPolytope {
    pub hypergraph: Hypergraph,
    pub dimension: usize,
    /// Carrier atoms, in the order used for coordinates.
    pub axes: Vec<usize>,
    pub vertices: Vec<RealizedVertex>,
    /// Facet-defining hyperplanes: members other than component carriers
    /// that pass through at least one vertex.
    pub facet_specs: Vec<HyperplaneSpec>,
    /// The hyperplanes of the component carriers, containing every vertex.
    pub component_specs: Vec<HyperplaneSpec>,
    /// `incidence[v][f]`: vertex `v` lies on facet hyperplane `f`, decided by
    /// evaluating the sum.
    pub incidence: Vec<Vec<bool>>,
}

fn sum_over(axes: &[usize], point: &[BigUint], set: &AtomSet) -> BigUint {
    axes.iter()
        .zip(point)
        .filter(|(a, _)| set.contains(**a))
        .fold(BigUint::zero(), |acc, (_, x)| acc + x)
}

/// Coordinates of the vertex of `k`, indexed like `axes`. `k` must be a
/// construction of some atomic hypergraph on those axes.
fn solve(k: &Family, axes: &[usize]) -> Vec<BigUint> {
    let mut value: Vec<Option<BigUint>> = vec![None; axes.len()];
    let slot = |a: usize| axes.iter().position(|&b| b == a).expect("atom on an axis");
    for x in k.iter() {
        let mut fresh = None;
        let mut known = BigUint::zero();
        for a in x.iter() {
            match &value[slot(a)] {
                Some(v) => known += v,
                None => {
                    assert!(fresh.is_none(), "member with two unassigned atoms");
                    fresh = Some(a);
                }
            }
        }
        let s = fresh.expect("member without a superficial atom");
        let target = level(x.len());
        assert!(known < target, "coordinate sum overshoots its level");
        let v = target - known;
        assert!(
            v > level(x.len() - 1),
            "superficial coordinate below 3^(|X|-1)"
        );
        value[slot(s)] = Some(v);
    }
    value
        .into_iter()
        .map(|v| v.expect("every atom is covered"))
        .collect()
}

/// The unique solution of `Σ_{i∈X} x_i = 3^|X|` over `X ∈ k`, for `h` an ASC
/// hypergraph. Coordinates follow the carrier order.
pub fn vertex_coordinates(h: &Hypergraph, k: &Family) -> Result<Vec<BigUint>> {
    if !is_asc(h) {
        return Err(Error::NotAsc);
    }
    if !is_construction(h, k)? {
        return Err(Error::NotAConstruction);
    }
    let axes: Vec<usize> = h.carrier().iter().collect();
    Ok(solve(k, &axes))
}

/// Realizes an atomic hypergraph through its saturated closure; a
/// disconnected closure gives the product of the realizations of its
/// components, with each coordinate kept on its own atom's axis.
pub fn realize(h: &Hypergraph) -> Result<RealizedPolytope> {
    if !h.is_atomic() {
        return Err(Error::NotAtomic);
    }
    let closure = saturated_closure(h);
    let axes: Vec<usize> = h.carrier().iter().collect();
    let components: Family = closure.members().component_carriers().into_iter().collect();
    let vertices: Vec<RealizedVertex> = enumerate_constructions(&closure)?
        .into_iter()
        .map(|k| RealizedVertex {
            coordinates: solve(&k, &axes),
            construction: k,
        })
        .collect();
    let facet_specs: Vec<HyperplaneSpec> = closure
        .members()
        .iter()
        .filter(|x| !components.contains(x))
        .map(|x| HyperplaneSpec::new(x.clone()))
        .filter(|spec| {
            vertices
                .iter()
                .any(|v| sum_over(&axes, &v.coordinates, &spec.support) == spec.level)
        })
        .collect();
    let incidence = vertices
        .iter()
        .map(|v| {
            facet_specs
                .iter()
                .map(|f| sum_over(&axes, &v.coordinates, &f.support) == f.level)
                .collect()
        })
        .collect();
    Ok(RealizedPolytope {
        dimension: axes.len() - components.len(),
        component_specs: components
            .iter()
            .cloned()
            .map(HyperplaneSpec::new)
            .collect(),
        hypergraph: closure,
        axes,
        vertices,
        facet_specs,
        incidence,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    StrictInterior,
    OnBoundary,
    Outside,
}

/// Compares `Σ_{i∈X} x_i` with `3^|X|` for every member `X` of `h`.
pub fn check_vertex_membership(
    h: &Hypergraph,
    point: &[BigUint],
) -> Result<Vec<(AtomSet, Position)>> {
    let axes: Vec<usize> = h.carrier().iter().collect();
    if point.len() != axes.len() {
        return Err(Error::DimensionMismatch {
            expected: axes.len(),
            got: point.len(),
        });
    }
    Ok(h.members()
        .iter()
        .map(|x| {
            let s = sum_over(&axes, point, x);
            let lv = level(x.len());
            let pos = match s.cmp(&lv) {
                std::cmp::Ordering::Greater => Position::StrictInterior,
                std::cmp::Ordering::Equal => Position::OnBoundary,
                std::cmp::Ordering::Less => Position::Outside,
            };
            (x.clone(), pos)
        })
        .collect())
}

impl RealizedPolytope {
    /// Number of facet hyperplanes through each vertex.
    pub fn tight_counts(&self) -> Vec<usize> {
        self.incidence
            .iter()
            .map(|row| row.iter().filter(|&&b| b).count())
            .collect()
    }

    /// Pairs of vertices joined by an edge: they share `d − 1` facets.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        if self.dimension == 0 {
            return out;
        }
        for a in 0..n {
            for b in a + 1..n {
                let shared = (0..self.facet_specs.len())
                    .filter(|&f| self.incidence[a][f] && self.incidence[b][f])
                    .count();
                if shared + 1 == self.dimension {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Affine coordinates in dimension `d`: the last atom of each component
    /// is dropped, since its value is determined by the others.
    pub fn affine_coordinates(&self, v: usize) -> Vec<BigInt> {
        let dropped: Vec<usize> = self
            .component_specs
            .iter()
            .map(|c| c.support.iter().last().expect("nonempty component"))
            .collect();
        self.axes
            .iter()
            .zip(&self.vertices[v].coordinates)
            .filter(|(a, _)| !dropped.contains(a))
            .map(|(_, x)| BigInt::from(x.clone()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let atoms = self.hypergraph.atoms();
        let names =
            |s: &AtomSet| -> Vec<String> { s.iter().map(|a| atoms.name(a).to_string()).collect() };
        json!({
            "dimension": self.dimension,
            "carrier": self.axes.iter().map(|&a| atoms.name(a)).collect::<Vec<_>>(),
            "vertices": self.vertices.iter().map(|v| json!({
                "construction": self.hypergraph.format_family(&v.construction),
                "coordinates": v.coordinates.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "facets": self.facet_specs.iter().map(|f| json!({
                "support": names(&f.support),
                "level": f.level.to_string(),
            })).collect::<Vec<_>>(),
            "components": self.component_specs.iter().map(|f| json!({
                "support": names(&f.support),
                "level": f.level.to_string(),
            })).collect::<Vec<_>>(),
            "incidence": self.incidence,
        })
    }

    /// Geomview OFF text for polytopes of dimension at most three. Points are
    /// the affine coordinates padded with zeros; polygons are the facets of a
    /// 3-polytope, or the polygon itself in dimension two, listed as vertex
    /// cycles oriented outward.
    pub fn to_off(&self) -> Result<String> {
        let d = self.dimension;
        if d > 3 {
            return Err(Error::DimensionTooLarge { max: 3, got: d });
        }
        let points: Vec<Vec<BigInt>> = (0..self.vertices.len())
            .map(|v| {
                let mut p = self.affine_coordinates(v);
                p.resize(3, BigInt::zero());
                p
            })
            .collect();
        let edges = self.edges();
        let mut polygons: Vec<Vec<usize>> = Vec::new();
        if d == 2 {
            let all: Vec<usize> = (0..self.vertices.len()).collect();
            polygons.push(walk_cycle(&all, &edges));
        } else if d == 3 {
            let centroid_scaled: Vec<BigInt> = (0..3)
                .map(|c| points.iter().fold(BigInt::zero(), |acc, p| acc + &p[c]))
                .collect();
            let count = BigInt::from(points.len());
            for f in 0..self.facet_specs.len() {
                let on: Vec<usize> = (0..self.vertices.len())
                    .filter(|&v| self.incidence[v][f])
                    .collect();
                let mut cycle = walk_cycle(&on, &edges);
                let (p0, p1, p2) = (&points[cycle[0]], &points[cycle[1]], &points[cycle[2]]);
                let u: Vec<BigInt> = (0..3).map(|c| &p1[c] - &p0[c]).collect();
                let w: Vec<BigInt> = (0..3).map(|c| &p2[c] - &p0[c]).collect();
                let normal = [
                    &u[1] * &w[2] - &u[2] * &w[1],
                    &u[2] * &w[0] - &u[0] * &w[2],
                    &u[0] * &w[1] - &u[1] * &w[0],
                ];
                let inward: BigInt = (0..3)
                    .map(|c| &normal[c] * (&centroid_scaled[c] - &count * &p0[c]))
                    .sum();
                if inward > BigInt::zero() {
                    cycle.reverse();
                }
                polygons.push(cycle);
            }
        }
        let mut out = format!("OFF\n{} {} {}\n", points.len(), polygons.len(), edges.len());
        for p in &points {
            out.push_str(&format!("{} {} {}\n", p[0], p[1], p[2]));
        }
        for poly in &polygons {
            out.push_str(&poly.len().to_string());
            for v in poly {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        Ok(out)
    }
}

/// Orders the vertices of a polygon by following its edges.
fn walk_cycle(on: &[usize], edges: &[(usize, usize)]) -> Vec<usize> {
    let inside: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|(a, b)| on.contains(a) && on.contains(b))
        .collect();
    let mut cycle = vec![on[0]];
    let mut prev = usize::MAX;
    while cycle.len() < on.len() {
        let cur = *cycle.last().expect("started");
        let next = inside
            .iter()
            .find_map(|&(a, b)| match (a == cur, b == cur) {
                (true, _) if b != prev && !cycle.contains(&b) => Some(b),
                (_, true) if a != prev && !cycle.contains(&a) => Some(a),
                _ => None,
            })
            .expect("polygon edges form a cycle");
        prev = cur;
        cycle.push(next);
    }
    cycle
}

/// Faces of a simple polytope named by the facets through them: every subset
/// of the facet set of some vertex, plus a bottom written `None`. A larger
/// facet set names a smaller face, so join is intersection and meet is union
/// when the union still lies in one vertex's facet set.
#[derive(Clone, Debug)]
pub struct IncidenceLattice {
    pub elements: Vec<Option<Vec<usize>>>,
    vertex_sets: Vec<Vec<usize>>,
}

impl IncidenceLattice {
    pub fn from_incidence(incidence: &[Vec<bool>]) -> Self {
        let vertex_sets: Vec<Vec<usize>> = incidence
            .iter()
            .map(|row| (0..row.len()).filter(|&f| row[f]).collect())
            .collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for set in &vertex_sets {
            for mask in 0u64..(1u64 << set.len()) {
                seen.insert(
                    (0..set.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| set[i])
                        .collect(),
                );
            }
        }
        let mut elements: Vec<Option<Vec<usize>>> = vec![None];
        elements.extend(seen.into_iter().map(Some));
        Self {
            elements,
            vertex_sets,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        match (&self.elements[a], &self.elements[b]) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(x), Some(y)) => y.iter().all(|f| x.contains(f)),
        }
    }

    pub fn join(&self, a: &Option<Vec<usize>>, b: &Option<Vec<usize>>) -> Option<Vec<usize>> {
        match (a, b) {
            (None, other) | (other, None) => other.clone(),
            (Some(x), Some(y)) => Some(x.iter().copied().filter(|f| y.contains(f)).collect()),
        }
    }

    pub fn meet(&self, a: &Option<Vec<usize>>, b: &Option<Vec<usize>>) -> Option<Vec<usize>> {
        let (x, y) = (a.as_ref()?, b.as_ref()?);
        let mut u: Vec<usize> = x.iter().chain(y).copied().collect();
        u.sort_unstable();
        u.dedup();
        self.vertex_sets
            .iter()
            .any(|v| u.iter().all(|f| v.contains(f)))
            .then_some(u)
    }
}

/// The correspondence between the realized polytope and `A(h)`.
#[derive(Clone, Debug)]
pub struct LatticeIsomorphism {
    pub isomorphic: bool,
    /// Realized vertex index and the construction of the hyperplanes through
    /// it (`γ`).
    pub vertex_map: Vec<(usize, Family)>,
    /// Facet hyperplane index and the abstract facet it names (`β^π`).
    pub facet_map: Vec<(usize, Face)>,
    /// Each element of the incidence lattice, as a set of facet indices
    /// (`None` for the bottom), and its abstract face.
    pub face_map: Vec<(Option<Vec<usize>>, Face)>,
    pub failures: Vec<String>,
}

/// Builds the incidence lattice of the realization and checks that it is
/// order isomorphic to `A(h)` through the maps that send a vertex to the set
/// of members whose hyperplanes contain it and a facet hyperplane `π_X` to
/// the facet of `A(h)` generated by `X`.
pub fn face_lattice_isomorphic(h: &Hypergraph) -> Result<LatticeIsomorphism> {
    let real = realize(h)?;
    let abs = abstract_polytope(h)?;
    let closure = &real.hypergraph;
    let axes = &real.axes;
    let components: Family = real
        .component_specs
        .iter()
        .map(|s| s.support.clone())
        .collect();
    let mut failures = Vec::new();

    let mut vertex_map = Vec::new();
    let mut seen_vertices = HashSet::new();
    for (v, vert) in real.vertices.iter().enumerate() {
        let gamma: Family = closure
            .members()
            .iter()
            .filter(|x| sum_over(axes, &vert.coordinates, x) == level(x.len()))
            .cloned()
            .collect();
        let face = Face::Construct(gamma.clone());
        match abs.index_of(&face) {
            Some(i) if abs.rank_of(i) == 0 => {}
            _ => failures.push(format!(
                "vertex {v} does not name a vertex of the abstract polytope"
            )),
        }
        if gamma != vert.construction {
            failures.push(format!(
                "vertex {v} lies on hyperplanes other than its construction's"
            ));
        }
        if !seen_vertices.insert(gamma.clone()) {
            failures.push(format!("vertex {v} repeats a construction"));
        }
        vertex_map.push((v, gamma));
    }
    if seen_vertices.len() != abs.faces_of_rank(0).len() {
        failures.push("vertex counts differ".into());
    }

    let facet_rank = abs.rank() - 1;
    let mut facet_map = Vec::new();
    for (f, spec) in real.facet_specs.iter().enumerate() {
        let face = Face::Construct(components.with(spec.support.clone()));
        match abs.index_of(&face) {
            Some(i) if abs.rank_of(i) == facet_rank => {}
            _ => failures.push(format!("facet hyperplane {f} names no facet")),
        }
        facet_map.push((f, face));
    }
    if real.dimension >= 1 && facet_map.len() != abs.faces_of_rank(facet_rank).len() {
        failures.push("facet counts differ".into());
    }

    for (v, gamma) in &vertex_map {
        for (f, spec) in real.facet_specs.iter().enumerate() {
            if real.incidence[*v][f] != gamma.contains(&spec.support) {
                failures.push(format!("incidence of vertex {v} and facet {f} disagrees"));
            }
        }
    }

    let lattice = IncidenceLattice::from_incidence(&real.incidence);
    let image = |e: &Option<Vec<usize>>| match e {
        None => Face::Bottom,
        Some(fs) => Face::Construct(
            fs.iter()
                .map(|&f| real.facet_specs[f].support.clone())
                .chain(components.iter().cloned())
                .collect(),
        ),
    };
    let face_map: Vec<(Option<Vec<usize>>, Face)> = lattice
        .elements
        .iter()
        .map(|e| (e.clone(), image(e)))
        .collect();
    let images: HashSet<&Face> = face_map.iter().map(|(_, f)| f).collect();
    if images.len() != face_map.len() || face_map.len() != abs.len() {
        failures.push(format!(
            "{} incidence-lattice elements against {} abstract faces",
            face_map.len(),
            abs.len()
        ));
    }
    let idx: Vec<Option<usize>> = face_map.iter().map(|(_, f)| abs.index_of(f)).collect();
    if idx.iter().any(Option::is_none) {
        failures.push("an incidence-lattice element maps outside the abstract polytope".into());
    } else {
        for a in 0..face_map.len() {
            for b in 0..face_map.len() {
                if lattice.leq(a, b) != abs.leq(idx[a].unwrap(), idx[b].unwrap()) {
                    failures.push(format!("order differs between elements {a} and {b}"));
                }
            }
        }
    }

    Ok(LatticeIsomorphism {
        isomorphic: failures.is_empty(),
        vertex_map,
        facet_map,
        face_map,
        failures,
    })
}
