mod common;

use std::collections::BTreeMap;

use common::*;
use nestohedra::catalog::*;
use nestohedra::face_lattice::{abstract_polytope, f_vector};
use nestohedra::{AtomSet, Hypergraph};

fn entry(name: &str) -> &'static Hypergraph {
    &catalog_lookup(name).unwrap().hypergraph
}

fn set(h: &Hypergraph, names: &[&str]) -> AtomSet {
    h.atoms().set(names.iter()).unwrap()
}

fn plus(name: &str, extra: &[&str]) -> Hypergraph {
    let h = entry(name);
    h.with(set(h, extra))
}

/// Face counts by rank from the brute-force construct oracle, run on the
/// oracle's own closure of `h`. A face picks one construct per component,
/// so the size distributions of the components convolve.
fn oracle_f_vector(h: &Hypergraph) -> Vec<usize> {
    let ms: Vec<u64> = closure(&masks(h.members())).into_iter().collect();
    let n = h.carrier().len();
    let parts = components(&ms);
    let rank = n - parts.len();
    let mut by_size = vec![1usize];
    for p in &parts {
        let mut here = vec![0usize; n + 1];
        for c in constructs(&restrict(&ms, *p)) {
            here[c.len()] += 1;
        }
        let mut next = vec![0usize; by_size.len() + n];
        for (i, a) in by_size.iter().enumerate() {
            for (j, b) in here.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        by_size = next;
    }
    (0..rank)
        .map(|r| by_size.get(n - r).copied().unwrap_or(0))
        .collect()
}

#[test]
fn f_vectors_of_named_polytopes() {
    let frozen: BTreeMap<&str, [usize; 3]> = [
        ("H'_4321", [14, 21, 9]),
        ("H°_4441", [20, 30, 12]),
        ("H_4641", [24, 36, 14]),
        ("H*_4331", [16, 24, 10]),
        ("H_4431", [18, 27, 11]),
        ("H_4541", [22, 33, 13]),
        ("H_4001", [4, 6, 4]),
        ("H_4011", [6, 9, 5]),
        ("H_4201", [8, 12, 6]),
        ("H_4311", [12, 18, 8]),
    ]
    .into_iter()
    .collect();
    for (name, fv) in &frozen {
        let h = entry(name);
        assert_eq!(
            count_constructions(&masks(h.members())) as usize,
            fv[0],
            "{name}"
        );
        assert_eq!(oracle_f_vector(h), fv.to_vec(), "{name}");
        let row = fvector_row(catalog_lookup(name).unwrap()).unwrap();
        assert_eq!(row.f_vector, fv.to_vec(), "{name}");
    }
}

#[test]
fn every_entry_agrees_with_the_oracle() {
    for e in catalog() {
        let row = fvector_row(e).unwrap();
        assert_eq!(row.f_vector, oracle_f_vector(&e.hypergraph), "{}", e.name);
        if let Some(&v) = row.f_vector.first() {
            assert_eq!(
                v as u64,
                count_constructions(&masks(e.hypergraph.members())),
                "{}",
                e.name
            );
        }
    }
}

#[test]
fn nicknames() {
    let expect = [
        ("H'_4321", "associahedron"),
        ("H°_4441", "cyclohedron"),
        ("H_4641", "permutohedron"),
        ("H*_4331", "stellohedron"),
        ("H_4431", "hemiassociahedron"),
        ("H_4541", "hemicyclohedron"),
        ("H_4201", "cube"),
        ("H_4001", "simplex"),
    ];
    for (name, nick) in expect {
        assert_eq!(
            catalog_lookup(name).unwrap().nickname.as_deref(),
            Some(nick)
        );
    }
}

#[test]
fn cross_identities() {
    assert_eq!(&plus("H_4221", &["u", "z"]), entry("H'_4321"));
    assert_eq!(&plus("H_4331", &["z", "u"]), entry("H_4431"));
    assert_eq!(&plus("H'_4331", &["x", "z"]), entry("H_4431"));
    assert_eq!(&plus("H*_4331", &["x", "y"]), entry("H_4431"));
    assert_eq!(&plus("H_4211", &["x", "z"]), entry("H_4311"));
    assert_eq!(&plus("H_4310", &["x", "y", "z", "u"]), entry("H_4311"));
    assert_eq!(&plus("H_4431", &["x", "y", "u"]), entry("H_4441"));
    // {y,z} is already a member of H_4541; the missing edge is {y,u}
    assert!(entry("H_4541").contains(&set(entry("H_4541"), &["y", "z"])));
    assert_eq!(&plus("H_4541", &["y", "u"]), entry("H_4641"));
    assert_eq!(&plus("H_4100", &["z", "u"]), entry("H_4200"));
    assert!(catalog_lookup("H_4200").unwrap().degenerate);
}

#[test]
fn prism_and_cube_coincidences() {
    let fv = |n: &str| f_vector(&abstract_polytope(entry(n)).unwrap()).0;
    assert_eq!(fv("H_4011"), fv("H_4101"));
    assert_eq!(fv("H_4201"), fv("H_4111"));
    assert_eq!(fv("H_4121"), fv("H_4211"));
    assert_eq!(fv("H_4211"), fv("H'_4211"));
    let prism = |n: &str| catalog_lookup(n).unwrap().nickname.clone();
    assert_eq!(prism("H_4121").as_deref(), Some("prism-5"));
}

#[test]
fn rank_three_entries_are_simple_and_satisfy_euler() {
    let mut seen = 0;
    for e in catalog() {
        if abstract_polytope(&e.hypergraph).unwrap().rank() == 3 {
            assert_eq!(euler_and_simple(&e.hypergraph), (true, true), "{}", e.name);
            seen += 1;
        }
    }
    assert_eq!(seen, 36);
}

#[test]
fn degenerate_entries_drop_rank() {
    for e in catalog() {
        let p = abstract_polytope(&e.hypergraph).unwrap();
        let n = e.hypergraph.carrier().len() as i32;
        assert_eq!(e.degenerate, p.rank() < n - 1 && n > 1, "{}", e.name);
    }
    let pairs = [
        ("H_4310", "H_331"),
        ("H_4010", "H_301"),
        ("H_4110", "H_311"),
        ("H_4210", "H_321"),
    ];
    for (a, b) in pairs {
        let pa = abstract_polytope(entry(a)).unwrap();
        let pb = abstract_polytope(entry(b)).unwrap();
        assert!(pa.is_isomorphic(&pb), "{a} {b}");
    }
}

#[test]
fn box_marks_graphical_entries() {
    use nestohedra::tubing::GraphHypergraph;
    for e in catalog().iter().filter(|e| e.chart) {
        let closure = nestohedra::saturation::saturated_closure(&e.hypergraph);
        assert_eq!(
            e.boxed,
            GraphHypergraph::from_hypergraph(&closure).is_ok(),
            "{}",
            e.name
        );
    }
}
