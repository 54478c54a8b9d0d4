//! Graphs as hypergraphs, tubes and tubings.
//!
//! A graph on vertices `V` with edge set `E` is identified with the saturated
//! closure of `{{v} : v ∈ V} ∪ E ∪ {V}`: its members are the connected vertex
//! sets together with `V` itself, whether or not the graph is connected.

use std::sync::Arc;

use serde::Serialize;

use crate::atoms::{AtomSet, AtomTable};
use crate::construction::{is_construct, satisfies_antichain_condition};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::format::GraphSpec;
use crate::hypergraph::Hypergraph;
use crate::saturation::saturated_closure;

/// Largest carrier for which [`tubings_equal_constructs`] runs by default.
pub const DEFAULT_TUBING_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub struct GraphHypergraph {
    underlying: Hypergraph,
    edges: Vec<(usize, usize)>,
}

/// The graph hypergraph on `atoms` with the given edges.
pub fn as_graph<S: AsRef<str>>(atoms: &[S], edges: &[(S, S)]) -> Result<GraphHypergraph> {
    if atoms.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let table = Arc::new(AtomTable::new(atoms)?);
    let mut pairs = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        let (a, b) = (a.as_ref(), b.as_ref());
        let bad = || Error::BadEdge(format!("{a}-{b}"));
        let i = table.index(a).map_err(|_| bad())?;
        let j = table.index(b).map_err(|_| bad())?;
        if i == j {
            return Err(bad());
        }
        pairs.push((i.min(j), i.max(j)));
    }
    Ok(GraphHypergraph::build(table, pairs))
}

impl GraphHypergraph {
    fn build(table: Arc<AtomTable>, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let all = table.all();
        let mut members: Family = (0..table.len()).map(AtomSet::singleton).collect();
        for &(a, b) in &edges {
            members.insert([a, b].into_iter().collect());
        }
        members.insert(all);
        let underlying = saturated_closure(&Hypergraph::from_family(table, members));
        Self { underlying, edges }
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        as_graph(&spec.vertices, &spec.edges)
    }

    /// Recognizes a hypergraph that is the graph hypergraph of its own
    /// two-element members.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let table = Arc::new(AtomTable::new(
            h.carrier().iter().map(|a| h.atoms().name(a)),
        )?);
        let relabel: Vec<usize> = h.carrier().iter().collect();
        let pos = |a: usize| relabel.iter().position(|&b| b == a).expect("carrier atom");
        let edges = h
            .members()
            .iter()
            .filter(|x| x.len() == 2)
            .map(|x| {
                let v: Vec<usize> = x.iter().map(pos).collect();
                (v[0], v[1])
            })
            .collect();
        let g = Self::build(table, edges);
        let same = g.underlying.members().len() == h.len()
            && h.members().iter().all(|x| {
                let mapped: AtomSet = x.iter().map(pos).collect();
                g.underlying.contains(&mapped)
            });
        if same {
            Ok(g)
        } else {
            Err(Error::NotAGraph)
        }
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.underlying
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn top(&self) -> &AtomSet {
        self.underlying.carrier()
    }

    /// `G ∖ {⋃G}` is disconnected.
    pub fn is_loose(&self) -> bool {
        !self.underlying.members().without(self.top()).is_connected()
    }

    /// Carriers of the blocks of `G ∖ {⋃G}` for a loose graph.
    pub fn loose_components(&self) -> Option<Family> {
        self.is_loose().then(|| {
            self.underlying
                .members()
                .without(self.top())
                .component_carriers()
                .into_iter()
                .collect()
        })
    }
}

pub fn overlapping(x: &AtomSet, y: &AtomSet) -> bool {
    x.intersects(y) && !x.is_subset(y) && !y.is_subset(x)
}

pub fn adjacent(h: &Family, x: &AtomSet, y: &AtomSet) -> bool {
    x.is_disjoint(y) && h.contains(&x.union(y))
}

/// No two members of `t` overlap or are adjacent relative to `h`.
pub fn pairwise_compatible(h: &Family, t: &Family) -> bool {
    let s = t.as_slice();
    (0..s.len())
        .all(|i| (i + 1..s.len()).all(|j| !overlapping(&s[i], &s[j]) && !adjacent(h, &s[i], &s[j])))
}

/// The tubing conditions read literally on any hypergraph: pairwise
/// compatible, containing the top, and not containing every block carrier
/// of `h ∖ {⋃h}` when there are at least two of them. On graph hypergraphs
/// this is [`is_tubing`]; elsewhere it need not agree with constructs.
pub fn tubing_conditions(h: &Hypergraph, t: &Family) -> bool {
    let top = h.carrier();
    if !t.contains(top) || !pairwise_compatible(h.members(), t) {
        return false;
    }
    let blocks = h.members().without(top).component_carriers();
    !(blocks.len() >= 2 && blocks.iter().all(|b| t.contains(b)))
}

pub fn is_tubing(g: &GraphHypergraph, t: &Family) -> Result<bool> {
    if !t.is_subfamily(g.underlying.members()) {
        return Err(Error::NotTubes);
    }
    Ok(tubing_conditions(&g.underlying, t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TubingCheck {
    pub agree: bool,
    pub families_checked: usize,
    pub tubings: usize,
    pub constructs: usize,
    /// A family on which the predicates disagree, printed with atom names.
    pub counterexample: Option<String>,
}

/// Compares [`is_tubing`] with the construct predicate on every subfamily of
/// `g` containing `⋃G`. Both properties fail on all supersets of a family
/// that is not pairwise compatible and violates the antichain condition, so
/// the search skips those branches.
pub fn tubings_equal_constructs(g: &GraphHypergraph, cap: usize) -> Result<TubingCheck> {
    let h = &g.underlying;
    if h.carrier().len() > cap {
        return Err(Error::CarrierTooLarge {
            size: h.carrier().len(),
            cap,
        });
    }
    let top = g.top().clone();
    let rest: Vec<AtomSet> = h.members().iter().filter(|x| **x != top).cloned().collect();
    let mut check = TubingCheck {
        agree: true,
        families_checked: 0,
        tubings: 0,
        constructs: 0,
        counterexample: None,
    };
    let mut current = Family::new();
    current.insert(top);
    search(g, &rest, 0, &mut current, &mut check)?;
    Ok(check)
}

fn search(
    g: &GraphHypergraph,
    rest: &[AtomSet],
    start: usize,
    current: &mut Family,
    check: &mut TubingCheck,
) -> Result<()> {
    let h = &g.underlying;
    let tubing = is_tubing(g, current)?;
    let construct = is_construct(h, current)?;
    check.families_checked += 1;
    check.tubings += usize::from(tubing);
    check.constructs += usize::from(construct);
    if tubing != construct && check.counterexample.is_none() {
        check.agree = false;
        check.counterexample = Some(h.format_family(current));
    }
    for i in start..rest.len() {
        current.insert(rest[i].clone());
        let alive = pairwise_compatible(h.members(), current)
            || satisfies_antichain_condition(h.members(), current);
        if alive {
            search(g, rest, i + 1, current, check)?;
        }
        current.remove(&rest[i]);
    }
    Ok(())
}
