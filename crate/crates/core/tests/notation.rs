use nestohedra::construction::enumerate_constructions;
use nestohedra::exhaustive::atomic_up_to;
use nestohedra::format::from_compact;
use nestohedra::notation::*;
use nestohedra::{AtomSet, Family, Hypergraph};

/// Writes a word for `k` straight from the family, listing the summands of
/// every sum in the order given by `order`.
fn oracle_word(h: &Hypergraph, k: &Family, order: fn(&mut Vec<String>)) -> String {
    fn maximal(k: &Family, inside: Option<&AtomSet>) -> Vec<AtomSet> {
        let pool: Vec<&AtomSet> = k
            .iter()
            .filter(|x| inside.is_none_or(|y| x.is_proper_subset(y)))
            .collect();
        pool.iter()
            .filter(|x| !pool.iter().any(|y| x.is_proper_subset(y)))
            .map(|x| (*x).clone())
            .collect()
    }
    fn tree(h: &Hypergraph, k: &Family, x: &AtomSet, order: fn(&mut Vec<String>)) -> String {
        let below = maximal(k, Some(x));
        let covered = below.iter().fold(AtomSet::new(), |a, b| a.union(b));
        let root = x.difference(&covered);
        assert_eq!(root.len(), 1);
        let mut out = h.atoms().name(root.first().unwrap()).to_string();
        out.push_str(&forest(h, k, &below, order));
        out
    }
    fn forest(
        h: &Hypergraph,
        k: &Family,
        roots: &[AtomSet],
        order: fn(&mut Vec<String>),
    ) -> String {
        match roots {
            [] => String::new(),
            [one] => tree(h, k, one, order),
            many => {
                let mut parts: Vec<String> = many
                    .iter()
                    .map(|x| {
                        let w = tree(h, k, x, order);
                        if x.len() > 1 {
                            format!("({w})")
                        } else {
                            w
                        }
                    })
                    .collect();
                order(&mut parts);
                format!("({})", parts.join("+"))
            }
        }
    }
    forest(h, k, &maximal(k, None), order)
}

#[test]
fn words_round_trip_for_every_small_hypergraph() {
    let mut checked = 0;
    for h in atomic_up_to(4) {
        for k in enumerate_constructions(&h).unwrap() {
            let f = to_f_construction(&h, &k).unwrap();
            let s = s_map(&f);
            assert_eq!(c_map(&s), k, "{h}");
            let printed = s.display(h.atoms()).to_string();
            let parsed = parse_s_construction(&printed, &h).unwrap();
            assert_eq!(parsed, s, "{h}: {printed}");
            for order in [
                |v: &mut Vec<String>| v.sort(),
                |v: &mut Vec<String>| v.reverse(),
                |v: &mut Vec<String>| v.rotate_left(1),
            ] {
                let w = oracle_word(&h, &k, order);
                assert_eq!(parse_s_construction(&w, &h).unwrap(), s, "{h}: {w}");
            }
            checked += 1;
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn summands_commute() {
    let h = from_compact("x\ny\nz\nu\nx,y\ny,z\nz,u\nx,y,z\nx,y,z,u\n").unwrap();
    let a = parse_s_construction("xz(u+y)", &h).unwrap();
    let b = parse_s_construction("xz(y+u)", &h).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.display(h.atoms()).to_string(), "xz(y+u)");
}

#[test]
fn forests_match_the_family() {
    for h in atomic_up_to(3) {
        for k in enumerate_constructions(&h).unwrap() {
            let f = to_f_construction(&h, &k).unwrap();
            let atoms = f
                .trees
                .iter()
                .fold(AtomSet::new(), |a, t| a.union(&t.atoms()));
            assert_eq!(&atoms, h.carrier());
            let roots: Vec<AtomSet> = f.trees.iter().map(|t| t.atoms()).collect();
            assert_eq!(roots.len(), h.finest_partition().blocks.len());
        }
    }
}

#[test]
fn rejects_non_constructions() {
    let h = from_compact("x\ny\nx,y\n").unwrap();
    let k: Family = [AtomSet::singleton(0), AtomSet::singleton(1)]
        .into_iter()
        .collect();
    assert!(to_f_construction(&h, &k).is_err());
    for bad in ["x+y", "xx", "(x+", "xq", ")"] {
        assert!(parse_s_construction(bad, &h).is_err(), "{bad}");
    }
}
