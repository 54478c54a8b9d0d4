//! Abstract-polytope checks for finite ranked posets.
//!
//! [`verify_axioms`] tests the four classical properties: a least and a
//! greatest face, flags of uniform length, strong connectedness and the
//! diamond condition. [`verify_inductive`] rebuilds the poset bottom-up the
//! other way: a polytope of rank `r + 1` is a set of rank-`r` polytopes that is
//! closely connected (facet-sharing neighbours link all of them) and bivalent
//! (every facet of a member lies in exactly two members), crowned by a new top
//! face. The inductive report maps those conditions onto the same four slots:
//! `p1` unique least and greatest face, `p2` consistent ranks, `p3` close
//! connectedness, `p4` bivalence.

use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::FacePoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    P1,
    P2,
    P3,
    P4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub p1_ok: bool,
    pub p2_ok: bool,
    pub p3_ok: bool,
    pub p4_ok: bool,
    pub rank: i32,
    /// Failing property with the faces (by index) that witness it.
    pub counterexamples: Vec<(Property, Vec<usize>)>,
    pub flags_checked: usize,
    pub sections_checked: usize,
}

/// Witnesses kept per property; enough to debug, bounded for huge failures.
const WITNESS_CAP: usize = 16;

impl VerificationReport {
    fn new(rank: i32) -> Self {
        Self {
            p1_ok: true,
            p2_ok: true,
            p3_ok: true,
            p4_ok: true,
            rank,
            counterexamples: Vec::new(),
            flags_checked: 0,
            sections_checked: 0,
        }
    }

    fn fail(&mut self, property: Property, witness: Vec<usize>) {
        let slot = match property {
            Property::P1 => &mut self.p1_ok,
            Property::P2 => &mut self.p2_ok,
            Property::P3 => &mut self.p3_ok,
            Property::P4 => &mut self.p4_ok,
        };
        *slot = false;
        let kept = self
            .counterexamples
            .iter()
            .filter(|(p, _)| *p == property)
            .count();
        if kept < WITNESS_CAP {
            self.counterexamples.push((property, witness));
        }
    }

    pub fn accepted(&self) -> bool {
        self.p1_ok && self.p2_ok && self.p3_ok && self.p4_ok
    }
}

fn check_monotone<F: Clone + Eq + Hash>(p: &FacePoset<F>) -> Result<()> {
    if p.is_empty() {
        return Err(Error::MalformedPoset("no faces".into()));
    }
    for i in 0..p.len() {
        for &j in p.covers_up(i) {
            if p.rank_of(i) >= p.rank_of(j) {
                return Err(Error::MalformedPoset(format!(
                    "face {i} of rank {} is covered by face {j} of rank {}",
                    p.rank_of(i),
                    p.rank_of(j)
                )));
            }
        }
    }
    Ok(())
}

/// Checks the four defining properties directly.
pub fn verify_axioms<F: Clone + Eq + Hash>(p: &FacePoset<F>) -> Result<VerificationReport> {
    check_monotone(p)?;
    let r = p.rank();
    let mut report = VerificationReport::new(r);

    let (lows, highs) = (p.minimal(), p.maximal());
    if lows.len() != 1 || highs.len() != 1 {
        report.fail(
            Property::P1,
            lows.iter().chain(highs.iter()).copied().collect(),
        );
    } else if p.rank_of(lows[0]) != -1 {
        report.fail(Property::P1, lows.clone());
    }

    // Flags: maximal chains, grown upward along covers from each minimal face.
    let mut stack: Vec<Vec<usize>> = lows.iter().map(|&b| vec![b]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty chain");
        let ups = p.covers_up(last);
        if ups.is_empty() {
            report.flags_checked += 1;
            if chain.len() as i32 != r + 2 {
                report.fail(Property::P2, chain);
            }
            continue;
        }
        for &u in ups {
            let mut next = chain.clone();
            next.push(u);
            stack.push(next);
        }
    }
    if report.p2_ok {
        // Flags of one length make the poset graded; ranks must then agree
        // with distance from the bottom.
        for i in 0..p.len() {
            let expected = p.covers_down(i).first().map_or(-1, |&d| p.rank_of(d) + 1);
            if p.rank_of(i) != expected {
                report.fail(Property::P2, vec![i]);
            }
        }
    }

    for g in 0..p.len() {
        for f in p.below_set(g).ones() {
            let gap = p.rank_of(g) - p.rank_of(f);
            if gap == 2 {
                let middle = p.interval(f, g).len() - 2;
                if middle != 2 {
                    report.fail(Property::P4, vec![f, g]);
                }
            }
            if gap >= 3 {
                report.sections_checked += 1;
                if !open_interval_connected(p, f, g) {
                    report.fail(Property::P3, vec![f, g]);
                }
            }
        }
    }
    Ok(report)
}

fn open_interval_connected<F: Clone + Eq + Hash>(p: &FacePoset<F>, f: usize, g: usize) -> bool {
    let inner: Vec<usize> = p
        .interval(f, g)
        .into_iter()
        .filter(|&h| h != f && h != g)
        .collect();
    let Some(&start) = inner.first() else {
        return true;
    };
    let mut seen = vec![start];
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for &k in p.covers_up(h).iter().chain(p.covers_down(h)) {
            if k != f && k != g && inner.contains(&k) && !seen.contains(&k) {
                seen.push(k);
                queue.push(k);
            }
        }
    }
    seen.len() == inner.len()
}

/// Rebuilds the poset through the inductive definition.
pub fn verify_inductive<F: Clone + Eq + Hash>(p: &FacePoset<F>) -> Result<VerificationReport> {
    check_monotone(p)?;
    let mut report = VerificationReport::new(p.rank());
    let (lows, highs) = (p.minimal(), p.maximal());
    if lows.len() != 1 || highs.len() != 1 {
        report.fail(
            Property::P1,
            lows.iter().chain(highs.iter()).copied().collect(),
        );
        return Ok(report);
    }
    let mut memo: Vec<Option<Option<i32>>> = vec![None; p.len()];
    let top = highs[0];
    if let Some(r) = polytope_rank(p, top, &mut memo, &mut report) {
        if r != p.rank_of(top) {
            report.fail(Property::P2, vec![top]);
        }
    }
    Ok(report)
}

/// Rank of the polytope formed by the faces below `x`, or `None` if that
/// downset is not a polytope. Failures are recorded in `report`.
fn polytope_rank<F: Clone + Eq + Hash>(
    p: &FacePoset<F>,
    x: usize,
    memo: &mut Vec<Option<Option<i32>>>,
    report: &mut VerificationReport,
) -> Option<i32> {
    if let Some(done) = memo[x] {
        return done;
    }
    report.sections_checked += 1;
    let facets = p.covers_down(x);
    let result = if facets.is_empty() {
        Some(-1)
    } else {
        let mut ok = true;
        let mut sub_ranks = Vec::with_capacity(facets.len());
        for &f in facets {
            match polytope_rank(p, f, memo, report) {
                Some(r) => sub_ranks.push(r),
                None => ok = false,
            }
        }
        if ok && sub_ranks.iter().any(|&r| r != sub_ranks[0]) {
            report.fail(
                Property::P2,
                std::iter::once(x).chain(facets.iter().copied()).collect(),
            );
            ok = false;
        }
        if ok {
            let r = sub_ranks[0];
            if !closely_connected(p, facets) {
                report.fail(
                    Property::P3,
                    std::iter::once(x).chain(facets.iter().copied()).collect(),
                );
                ok = false;
            }
            // Facets of the members: faces one step below some member.
            let mut ridges: Vec<usize> = facets
                .iter()
                .flat_map(|&f| p.covers_down(f).iter().copied())
                .collect();
            ridges.sort_unstable();
            ridges.dedup();
            for g in ridges {
                let holders: Vec<usize> = facets.iter().copied().filter(|&f| p.leq(g, f)).collect();
                if holders.len() != 2 {
                    report.fail(Property::P4, std::iter::once(g).chain(holders).collect());
                    ok = false;
                }
            }
            if ok && p.rank_of(x) != r + 1 {
                report.fail(Property::P2, vec![x]);
                ok = false;
            }
            ok.then_some(r + 1)
        } else {
            None
        }
    };
    if facets.is_empty() && p.rank_of(x) != -1 {
        report.fail(Property::P2, vec![x]);
    }
    memo[x] = Some(result);
    result
}

fn closely_connected<F: Clone + Eq + Hash>(p: &FacePoset<F>, members: &[usize]) -> bool {
    let neighbours = |a: usize, b: usize| {
        p.covers_down(a)
            .iter()
            .any(|g| p.covers_down(b).contains(g))
    };
    let mut seen = vec![false; members.len()];
    seen[0] = true;
    let mut queue = vec![0];
    while let Some(i) = queue.pop() {
        for j in 0..members.len() {
            if !seen[j] && neighbours(members[i], members[j]) {
                seen[j] = true;
                queue.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(n: usize, rel: &[(usize, usize)]) -> FacePoset<usize> {
        FacePoset::from_relations((0..n).collect(), rel, None).unwrap()
    }

    fn segment() -> FacePoset<usize> {
        poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    /// Triangle: bottom 0, vertices 1..=3, edges 4..=6, top 7.
    fn triangle() -> FacePoset<usize> {
        poset(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (2, 4),
                (2, 5),
                (3, 5),
                (3, 6),
                (1, 6),
                (4, 7),
                (5, 7),
                (6, 7),
            ],
        )
    }

    #[test]
    fn accepts_small_polytopes() {
        for p in [segment(), triangle(), poset(1, &[]), poset(2, &[(0, 1)])] {
            let a = verify_axioms(&p).unwrap();
            let b = verify_inductive(&p).unwrap();
            assert!(a.accepted(), "{a:?}");
            assert!(b.accepted(), "{b:?}");
        }
        assert_eq!(verify_axioms(&triangle()).unwrap().flags_checked, 6);
    }

    #[test]
    fn rejects_three_vertex_segment() {
        let p = poset(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]);
        assert!(!verify_axioms(&p).unwrap().p4_ok);
        assert!(!verify_inductive(&p).unwrap().p4_ok);
    }

    #[test]
    fn rejects_ungraded() {
        let p = poset(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]);
        assert!(!verify_axioms(&p).unwrap().p2_ok);
        assert!(!verify_inductive(&p).unwrap().accepted());
    }

    #[test]
    fn malformed_ranks() {
        let p = FacePoset::from_relations(vec![0, 1], &[(0, 1)], Some(vec![0, 0])).unwrap();
        assert!(matches!(verify_axioms(&p), Err(Error::MalformedPoset(_))));
        assert!(matches!(
            verify_inductive(&p),
            Err(Error::MalformedPoset(_))
        ));
    }
}
