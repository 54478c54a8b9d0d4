//! Independent reference implementations on plain bitmasks, shared by the
//! integration tests. Nothing here calls the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use nestohedra::face_lattice::abstract_polytope;
use nestohedra::poset::FacePoset;
use nestohedra::{AtomSet, Family, Hypergraph};

pub fn mask(s: &AtomSet) -> u64 {
    s.iter().fold(0, |m, a| m | 1 << a)
}

pub fn masks(f: &Family) -> Vec<u64> {
    f.iter().map(mask).collect()
}

pub fn family_of(ms: &[u64]) -> Family {
    ms.iter().map(|&m| AtomSet::from_bits(m)).collect()
}

pub fn union(ms: &[u64]) -> u64 {
    ms.iter().fold(0, |a, b| a | b)
}

pub fn subsets(of: u64) -> impl Iterator<Item = u64> {
    let mut s = of;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = s;
        if s == 0 {
            done = true;
        } else {
            s = (s - 1) & of;
        }
        Some(out)
    })
}

/// Connectedness of a set family by repeated merging of intersecting sets.
pub fn connected(ms: &[u64]) -> bool {
    let mut parts: Vec<u64> = ms.to_vec();
    loop {
        let mut merged = false;
        'outer: for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if parts[i] & parts[j] != 0 {
                    parts[i] |= parts[j];
                    parts.swap_remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            return parts.len() <= 1;
        }
    }
}

/// Pairs of atoms of `ms` joined by a chain of members.
pub fn path_connected(ms: &[u64]) -> bool {
    let carrier = union(ms);
    let Some(start) = (0..64).find(|&i| carrier >> i & 1 == 1) else {
        return true;
    };
    let mut reach = 1u64 << start;
    loop {
        let grown = ms
            .iter()
            .filter(|&&m| m & reach != 0)
            .fold(reach, |a, &m| a | m);
        if grown == reach {
            return reach == carrier;
        }
        reach = grown;
    }
}

pub fn components(ms: &[u64]) -> Vec<u64> {
    let mut parts: Vec<u64> = Vec::new();
    for &m in ms {
        let mut acc = m;
        parts.retain(|&p| {
            if p & acc != 0 {
                acc |= p;
                false
            } else {
                true
            }
        });
        // a later merge can join parts that were disjoint before
        let mut changed = true;
        while changed {
            changed = false;
            parts.retain(|&p| {
                if p & acc != 0 {
                    acc |= p;
                    changed = true;
                    false
                } else {
                    true
                }
            });
        }
        parts.push(acc);
    }
    parts.sort_unstable();
    parts
}

pub fn restrict(ms: &[u64], y: u64) -> Vec<u64> {
    ms.iter().copied().filter(|&m| m & !y == 0).collect()
}

/// Every `Y` whose restriction is connected and covers `Y`.
pub fn closure(ms: &[u64]) -> BTreeSet<u64> {
    let carrier = union(ms);
    subsets(carrier)
        .filter(|&y| y != 0)
        .filter(|&y| {
            let r = restrict(ms, y);
            union(&r) == y && connected(&r)
        })
        .collect()
}

/// Number of constructions, from the inductive definition: one atom is
/// removed from a connected carrier, components multiply.
pub fn count_constructions(ms: &[u64]) -> u64 {
    fn go(ms: &[u64], y: u64, memo: &mut HashMap<u64, u64>) -> u64 {
        if y == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(&y) {
            return c;
        }
        let r = restrict(ms, y);
        let parts = components(&r);
        let c = if parts.len() > 1 {
            parts.iter().map(|&p| go(ms, p, memo)).product()
        } else {
            (0..64)
                .filter(|&i| y >> i & 1 == 1)
                .map(|i| go(ms, y & !(1 << i), memo))
                .sum()
        };
        memo.insert(y, c);
        c
    }
    go(ms, union(ms), &mut HashMap::new())
}

/// Every subfamily of at least two pairwise incomparable members of `m`
/// has its union outside `h`.
pub fn antichain_ok(h: &HashSet<u64>, m: &[u64]) -> bool {
    let n = m.len();
    assert!(n < 24, "family too large for the oracle");
    (0u32..1 << n).all(|sel| {
        if sel.count_ones() < 2 {
            return true;
        }
        let chosen: Vec<u64> = (0..n).filter(|i| sel >> i & 1 == 1).map(|i| m[i]).collect();
        let antichain = chosen
            .iter()
            .enumerate()
            .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| a & b != a && a & b != b));
        !antichain || !h.contains(&union(&chosen))
    })
}

/// Families of members of an ASC hypergraph satisfying the antichain
/// condition; the condition passes to subfamilies, so the search stops at
/// the first failure.
pub fn antichain_families(ms: &[u64]) -> Vec<Vec<u64>> {
    let h: HashSet<u64> = ms.iter().copied().collect();
    let mut sorted = ms.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    fn go(h: &HashSet<u64>, ms: &[u64], start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        for i in start..ms.len() {
            cur.push(ms[i]);
            if antichain_ok(h, cur) {
                go(h, ms, i + 1, cur, out);
            }
            cur.pop();
        }
    }
    go(&h, &sorted, 0, &mut Vec::new(), &mut out);
    out
}

/// Constructs of an ASC hypergraph: antichain families containing the top.
pub fn constructs(ms: &[u64]) -> BTreeSet<Vec<u64>> {
    let top = union(ms);
    antichain_families(ms)
        .into_iter()
        .filter(|f| f.contains(&top))
        .collect()
}

pub fn canonical(f: &Family) -> Vec<u64> {
    let mut v = masks(f);
    v.sort_unstable();
    v
}

/// Rank-3 Euler relation and simple vertices, read off the face poset.
pub fn euler_and_simple(h: &Hypergraph) -> (bool, bool) {
    let p = abstract_polytope(h).unwrap();
    let count = |k| p.faces_of_rank(k).len() as i64;
    let euler = count(0) - count(1) + count(2) == 2;
    let simple = p
        .faces_of_rank(0)
        .iter()
        .all(|&v| p.faces_of_rank(2).iter().filter(|&&f| p.leq(v, f)).count() == 3);
    (euler, simple)
}

pub fn poset(n: usize, rel: &[(usize, usize)]) -> FacePoset<usize> {
    FacePoset::from_relations((0..n).collect(), rel, None).unwrap()
}

/// Hand-built posets that are not abstract polytopes.
pub fn negative_corpus() -> Vec<(&'static str, FacePoset<usize>)> {
    let mut out = Vec::new();

    // A(Ā) with one edge removed.
    let a = nestohedra::format::from_compact("x\ny\nz\nu\nx,y\ny,z\nz,u\nx,y,z\ny,z,u\nx,y,z,u\n")
        .unwrap();
    let p = abstract_polytope(&a).unwrap();
    let edge = p.faces_of_rank(1)[0];
    let pruned = p.without(&[edge]).unwrap();
    out.push((
        "associahedron minus an edge",
        pruned.map_faces(|f| p.index_of(f).unwrap()).unwrap(),
    ));

    // Two triangles sharing one vertex under a common top.
    // bottom 0; vertices 1..=5 (3 shared); edges 6..=11; triangles 12, 13; top 14
    out.push((
        "two triangles glued at a vertex",
        poset(
            15,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 6),
                (2, 6),
                (2, 7),
                (3, 7),
                (3, 8),
                (1, 8),
                (3, 9),
                (4, 9),
                (4, 10),
                (5, 10),
                (5, 11),
                (3, 11),
                (6, 12),
                (7, 12),
                (8, 12),
                (9, 13),
                (10, 13),
                (11, 13),
                (12, 14),
                (13, 14),
            ],
        ),
    ));

    // A segment without a bottom: two minimal faces.
    out.push(("two minimal faces", poset(3, &[(0, 2), (1, 2)])));

    // Chains of different lengths between bottom and top.
    out.push((
        "ungraded",
        poset(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]),
    ));

    // Two disjoint quadrilaterals under one top.
    let mut rel = Vec::new();
    for q in 0..2 {
        let v = 1 + 4 * q;
        let e = 9 + 4 * q;
        for i in 0..4 {
            rel.push((0, v + i));
            rel.push((v + i, e + i));
            rel.push((v + (i + 1) % 4, e + i));
            rel.push((e + i, 17 + q));
        }
        rel.push((17 + q, 19));
    }
    out.push(("two disjoint quadrilaterals", poset(20, &rel)));

    // A polygon-like rank-2 poset where one vertex lies in three edges.
    // bottom 0; vertices 1..=4; edges 5..=9; top 10
    out.push((
        "vertex in three edges",
        poset(
            11,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (2, 5),
                (1, 6),
                (3, 6),
                (1, 7),
                (4, 7),
                (2, 8),
                (3, 8),
                (4, 9),
                (2, 9),
                (5, 10),
                (6, 10),
                (7, 10),
                (8, 10),
                (9, 10),
            ],
        ),
    ));

    out.push((
        "rank 1 with three vertices",
        poset(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]),
    ));
    out
}
