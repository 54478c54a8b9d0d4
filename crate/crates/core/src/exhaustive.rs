//! Exhaustive generators for small carriers.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::atoms::{AtomSet, AtomTable};
use crate::family::Family;
use crate::hypergraph::Hypergraph;
use crate::saturation::is_asc;

/// Every atomic hypergraph whose carrier is exactly the first `n` standard
/// atoms: all singletons plus any choice of larger subsets. There are
/// `2^(2^n − 1 − n)` of them.
pub fn atomic_hypergraphs(n: usize) -> Vec<Hypergraph> {
    assert!(n <= 4, "too many hypergraphs to list");
    let table = Arc::new(AtomTable::standard(n));
    let singletons: Family = (0..n).map(AtomSet::singleton).collect();
    let optional: Vec<AtomSet> = AtomSet::full(n)
        .nonempty_subsets_by_size()
        .into_iter()
        .filter(|s| s.len() >= 2)
        .collect();
    (0u64..1 << optional.len())
        .map(|mask| {
            let mut members = singletons.clone();
            for (i, s) in optional.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    members.insert(s.clone());
                }
            }
            Hypergraph::from_family(table.clone(), members)
        })
        .collect()
}

/// Atomic hypergraphs on carriers of every size up to `max`.
pub fn atomic_up_to(max: usize) -> Vec<Hypergraph> {
    (0..=max).flat_map(atomic_hypergraphs).collect()
}

/// The ASC hypergraphs among [`atomic_up_to`].
pub fn asc_up_to(max: usize) -> Vec<Hypergraph> {
    atomic_up_to(max).into_iter().filter(is_asc).collect()
}

fn edge_index(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// One edge list per isomorphism class of simple graphs on `n` vertices.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n <= 6, "too many graphs to list");
    let edges = edge_index(n);
    let perms = permutations(n);
    let bit = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        edges
            .iter()
            .position(|&e| e == (a, b))
            .expect("edge of K_n")
    };
    let mut classes = BTreeSet::new();
    for mask in 0u64..1 << edges.len() {
        let canonical = perms
            .iter()
            .map(|p| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &(a, b))| acc | 1 << bit(p[a], p[b]))
            })
            .min()
            .expect("at least one permutation");
        classes.insert(canonical);
    }
    classes
        .into_iter()
        .map(|m| {
            edges
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

/// Connected in the usual sense: one vertex, or every vertex reachable
/// along edges.
pub fn is_connected_graph(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (p, q) in [(a, b), (b, a)] {
                if p == v && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}
