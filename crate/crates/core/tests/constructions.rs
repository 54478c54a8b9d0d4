mod common;

use std::collections::{BTreeSet, HashSet};

use common::*;
use nestohedra::construction::*;
use nestohedra::exhaustive::{asc_up_to, atomic_hypergraphs, atomic_up_to};
use nestohedra::saturation::*;
use nestohedra::{AtomSet, Family, Hypergraph};

#[test]
fn restriction_and_partition_invariants() {
    for h in atomic_up_to(4) {
        for y in h.carrier().subsets() {
            let r = h.restriction(&y).unwrap();
            assert!(r.is_atomic());
            assert_eq!(r.carrier(), &y);
            let q = h.quotient(&y).unwrap();
            assert!(r.members().is_subfamily(q.members()));
        }
        let blocks = h.finest_partition().blocks;
        for (i, a) in blocks.iter().enumerate() {
            assert!(a.is_connected());
            for b in &blocks[i + 1..] {
                assert!(a.carrier().is_disjoint(b.carrier()));
            }
        }
        let rejoined: Family = blocks
            .iter()
            .flat_map(|b| b.members().iter().cloned())
            .collect();
        assert_eq!(&rejoined, h.members());
        assert_eq!(h.is_connected(), blocks.len() <= 1);
    }
}

#[test]
fn connectedness_matches_paths() {
    for n in 0..=4 {
        for h in atomic_hypergraphs(n) {
            for y in h.carrier().subsets() {
                let fam = h.members().restrict(&y);
                let ms = masks(&fam);
                assert_eq!(fam.is_connected(), path_connected(&ms));
                assert_eq!(fam.is_connected(), connected(&ms));
            }
        }
    }
}

#[test]
fn closure_matches_oracle() {
    for h in atomic_up_to(4) {
        let ours: BTreeSet<u64> = masks(saturated_closure(&h).members()).into_iter().collect();
        assert_eq!(ours, closure(&masks(h.members())), "{h}");
    }
}

#[test]
fn closure_is_idempotent_and_monotone() {
    let all = atomic_hypergraphs(3);
    for h in &all {
        let c = saturated_closure(h);
        assert_eq!(saturated_closure(&c), c);
        for j in &all {
            if h.members().is_subfamily(j.members()) {
                assert!(c.members().is_subfamily(saturated_closure(j).members()));
            }
        }
    }
}

/// Union of all constructions is the saturated closure.
#[test]
fn constructions_cover_the_closure() {
    for h in atomic_up_to(4) {
        let union: Family = enumerate_constructions(&h)
            .unwrap()
            .iter()
            .flat_map(|k| k.iter().cloned())
            .collect();
        assert_eq!(&union, saturated_closure(&h).members());
    }
}

#[test]
fn counting_recursion_agrees() {
    for h in atomic_up_to(4) {
        let ks = enumerate_constructions(&h).unwrap();
        assert_eq!(
            ks.len() as u64,
            count_constructions(&masks(h.members())),
            "{h}"
        );
        let distinct: HashSet<&Family> = ks.iter().collect();
        assert_eq!(distinct.len(), ks.len());
        assert!(ks.iter().all(|k| k.len() == h.carrier().len()));
    }
}

#[test]
fn antichain_characterization_of_constructions() {
    for h in asc_up_to(4) {
        let n = h.carrier().len();
        let members: Vec<AtomSet> = h.members().iter().cloned().collect();
        let mut by_antichain = BTreeSet::new();
        for_each_subset_of_size(&members, n, &mut |m| {
            if is_construction(&h, m).unwrap() {
                by_antichain.insert(m.clone());
            }
        });
        let enumerated: BTreeSet<Family> =
            enumerate_constructions(&h).unwrap().into_iter().collect();
        assert_eq!(by_antichain, enumerated, "{h}");
    }
}

fn for_each_subset_of_size(items: &[AtomSet], k: usize, f: &mut impl FnMut(&Family)) {
    fn go(
        items: &[AtomSet],
        k: usize,
        start: usize,
        cur: &mut Vec<AtomSet>,
        f: &mut impl FnMut(&Family),
    ) {
        if cur.len() == k {
            f(&cur.iter().cloned().collect());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, k, 0, &mut Vec::new(), f);
}

#[test]
fn constructs_match_brute_force() {
    for h in asc_up_to(4) {
        let ours: BTreeSet<Vec<u64>> = enumerate_constructs(&h)
            .unwrap()
            .iter()
            .map(canonical)
            .collect();
        let brute = if h.is_empty() {
            [Vec::new()].into_iter().collect()
        } else {
            constructs(&masks(h.members()))
        };
        assert_eq!(ours, brute, "{h}");
        for c in &brute {
            assert!(is_construct(&h, &family_of(c)).unwrap());
        }
    }
}

/// A family satisfies the antichain condition exactly when it lies inside
/// some construction.
#[test]
fn antichain_families_are_subconstructions() {
    for h in asc_up_to(4) {
        let ks: Vec<Vec<u64>> = enumerate_constructions(&h)
            .unwrap()
            .iter()
            .map(canonical)
            .collect();
        for f in antichain_families(&masks(h.members())) {
            assert!(
                ks.iter().any(|k| f.iter().all(|x| k.contains(x))),
                "{h}: {f:?}"
            );
            assert!(satisfies_antichain_condition(h.members(), &family_of(&f)));
        }
        let count = antichain_families(&masks(h.members())).len();
        let mut below = BTreeSet::new();
        for k in &ks {
            for sel in 0u32..1 << k.len() {
                let sub: Vec<u64> = (0..k.len())
                    .filter(|i| sel >> i & 1 == 1)
                    .map(|i| k[i])
                    .collect();
                below.insert(sub);
            }
        }
        assert_eq!(below.len(), count);
    }
}

#[test]
fn incomparable_members_of_constructs_are_disjoint() {
    for h in asc_up_to(4) {
        for c in enumerate_constructs(&h).unwrap() {
            for a in c.iter() {
                for b in c.iter() {
                    if !a.is_subset(b) && !b.is_subset(a) {
                        assert!(a.is_disjoint(b));
                    }
                }
            }
        }
    }
}

/// Each member outside a construction sits under a member of it whose
/// superficial atom it contains.
#[test]
fn outside_members_are_caught_by_superficial_atoms() {
    for h in asc_up_to(4) {
        for k in enumerate_constructions(&h).unwrap() {
            for y in h.members().iter().filter(|y| !k.contains(y)) {
                let caught = k.iter().any(|x| {
                    y.is_proper_subset(x) && {
                        let s = superficial_elements(&k, x).unwrap();
                        s.len() == 1 && s.is_subset(y)
                    }
                });
                assert!(caught, "{h}: {y:?}");
            }
        }
    }
}

#[test]
fn dispensability_laws() {
    for h in atomic_up_to(4) {
        let candidates: Vec<AtomSet> = h.carrier().nonempty_subsets_by_size();
        for y in &candidates {
            if h.contains(y) || !is_dispensable(&h, y).unwrap() {
                continue;
            }
            let bigger = h.with(y.clone());
            assert_eq!(h.is_connected(), bigger.is_connected());
            for z in &candidates {
                if h.contains(z) || z == y {
                    continue;
                }
                assert_eq!(
                    is_dispensable(&h, z).unwrap(),
                    is_dispensable(&bigger, z).unwrap()
                );
            }
            assert!(are_cognate(&h, &bigger).unwrap());
        }
    }
}

#[test]
fn cognate_hypergraphs_have_the_same_constructions() {
    let all = atomic_hypergraphs(3);
    for a in &all {
        for b in &all {
            let cognate = are_cognate(a, b).unwrap();
            let same = enumerate_constructions(a).unwrap() == enumerate_constructions(b).unwrap();
            assert_eq!(cognate, same);
            if cognate {
                for z in a.carrier().subsets() {
                    let ca = closure(&masks(&a.members().restrict(&z)));
                    let cb = closure(&masks(&b.members().restrict(&z)));
                    assert_eq!(ca.contains(&mask(&z)), cb.contains(&mask(&z)));
                }
            }
        }
    }
    let sample: Vec<Hypergraph> = atomic_hypergraphs(4).into_iter().step_by(11).collect();
    for a in &sample {
        let bare = bare_representative(a);
        assert!(are_cognate(a, &bare).unwrap());
        assert!(dispensable_sets(&bare).iter().all(|y| !bare.contains(y)));
        assert_eq!(
            enumerate_constructions(a).unwrap(),
            enumerate_constructions(&bare).unwrap()
        );
    }
}

#[test]
fn errors_are_reported() {
    use nestohedra::format::from_compact;
    use nestohedra::Error;
    let not_asc = from_compact("x\ny\n").unwrap();
    assert!(matches!(
        is_construction(&not_asc, &Family::new()),
        Err(Error::NotAsc)
    ));
    let not_atomic = from_compact("x,y\n").unwrap();
    assert!(matches!(
        enumerate_constructions(&not_atomic),
        Err(Error::NotAtomic)
    ));
    let h = from_compact("x\ny\nx,y\n").unwrap();
    let k: Family = [AtomSet::singleton(0)].into_iter().collect();
    assert!(matches!(
        superficial_elements(&k, &AtomSet::full(2)),
        Err(Error::NotMember)
    ));
    assert!(matches!(
        h.restriction(&AtomSet::full(3)),
        Err(Error::NotSubset)
    ));
}
