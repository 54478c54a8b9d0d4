//! Finite ranked posets stored as Hasse diagrams.

use std::collections::HashMap;
use std::hash::Hash;

use fixedbitset::FixedBitSet;
use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::DiGraph;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A finite poset with a rank attached to every face.
///
/// Faces are addressed by index. `below[j]` holds every `i ≤ j`, and the
/// covering relation is derived from it, so callers may hand over any
/// generating set of relations.
#[derive(Clone, Debug)]
pub struct FacePoset<F> {
    faces: Vec<F>,
    ranks: Vec<i32>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    below: Vec<FixedBitSet>,
    index: HashMap<F, usize>,
}

impl<F: Clone + Eq + Hash> FacePoset<F> {
    /// Builds the poset generated by `relations` (pairs `a < b`). Ranks are
    /// taken from `ranks` when given and otherwise set to the length of the
    /// longest chain below each face, minus one.
    pub fn from_relations(
        faces: Vec<F>,
        relations: &[(usize, usize)],
        ranks: Option<Vec<i32>>,
    ) -> Result<Self> {
        let n = faces.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::MalformedPoset(format!(
                    "relation ({a}, {b}) out of range"
                )));
            }
            if a == b {
                return Err(Error::MalformedPoset(format!("face {a} below itself")));
            }
            succ[a].push(b);
        }
        let order = topological_order(&succ)
            .ok_or_else(|| Error::MalformedPoset("the relations contain a cycle".into()))?;
        let mut below: Vec<FixedBitSet> = (0..n)
            .map(|i| {
                let mut b = FixedBitSet::with_capacity(n);
                b.insert(i);
                b
            })
            .collect();
        for &a in &order {
            let from = below[a].clone();
            for &b in &succ[a] {
                below[b].union_with(&from);
            }
        }
        Self::from_below(faces, below, ranks)
    }

    /// Builds the poset of `faces` under `leq`, which must be a partial order.
    pub fn from_order(
        faces: Vec<F>,
        leq: impl Fn(&F, &F) -> bool,
        ranks: Option<Vec<i32>>,
    ) -> Result<Self> {
        let n = faces.len();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for j in 0..n {
            for i in 0..n {
                if i == j || leq(&faces[i], &faces[j]) {
                    below[j].insert(i);
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if below[j].contains(i) && below[i].contains(j) {
                    return Err(Error::MalformedPoset(format!(
                        "faces {i} and {j} are mutually below"
                    )));
                }
            }
        }
        Self::from_below(faces, below, ranks)
    }

    fn from_below(faces: Vec<F>, below: Vec<FixedBitSet>, ranks: Option<Vec<i32>>) -> Result<Self> {
        let n = faces.len();
        let mut index = HashMap::with_capacity(n);
        for (i, f) in faces.iter().enumerate() {
            if index.insert(f.clone(), i).is_some() {
                return Err(Error::MalformedPoset(format!("face {i} is listed twice")));
            }
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for j in 0..n {
            for i in below[j].ones() {
                if i == j {
                    continue;
                }
                let between = below[j]
                    .ones()
                    .any(|k| k != i && k != j && below[k].contains(i));
                if !between {
                    up[i].push(j);
                    down[j].push(i);
                }
            }
        }
        let ranks = match ranks {
            Some(r) if r.len() == n => r,
            Some(r) => {
                return Err(Error::MalformedPoset(format!(
                    "{} ranks for {n} faces",
                    r.len()
                )));
            }
            None => longest_chain_ranks(&down),
        };
        Ok(Self {
            faces,
            ranks,
            up,
            down,
            below,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[F] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &F {
        &self.faces[i]
    }

    pub fn index_of(&self, face: &F) -> Option<usize> {
        self.index.get(face).copied()
    }

    pub fn rank_of(&self, i: usize) -> i32 {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[i32] {
        &self.ranks
    }

    /// The largest rank present, or -1 for an empty poset.
    pub fn rank(&self) -> i32 {
        self.ranks.iter().copied().max().unwrap_or(-1)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Faces covering `i`.
    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Faces covered by `i`.
    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn below_set(&self, j: usize) -> &FixedBitSet {
        &self.below[j]
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.down[i].is_empty())
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        match self.minimal().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// Faces of a given rank.
    pub fn faces_of_rank(&self, k: i32) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.ranks[i] == k).collect()
    }

    /// Indices `h` with `f ≤ h ≤ g`, ascending.
    pub fn interval(&self, f: usize, g: usize) -> Vec<usize> {
        self.below[g].ones().filter(|&h| self.leq(f, h)).collect()
    }

    /// The section `g/f`, reranked so that `f` has rank -1.
    pub fn section(&self, g: usize, f: usize) -> Result<Self> {
        if !self.leq(f, g) {
            return Err(Error::NotComparable);
        }
        let keep = self.interval(f, g);
        let shift = self.ranks[f] + 1;
        self.induced(&keep, |r| r - shift)
    }

    /// The subposet on `keep`, with ranks transformed by `rerank`.
    pub fn induced(&self, keep: &[usize], rerank: impl Fn(i32) -> i32) -> Result<Self> {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let m = keep.len();
        let below = keep
            .iter()
            .map(|&o| {
                let mut b = FixedBitSet::with_capacity(m);
                for i in self.below[o].ones() {
                    if let Some(&n) = pos.get(&i) {
                        b.insert(n);
                    }
                }
                b
            })
            .collect();
        let faces = keep.iter().map(|&o| self.faces[o].clone()).collect();
        let ranks = keep.iter().map(|&o| rerank(self.ranks[o])).collect();
        Self::from_below(faces, below, Some(ranks))
    }

    /// The subposet obtained by deleting some faces; ranks are kept.
    pub fn without(&self, drop: &[usize]) -> Result<Self> {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !drop.contains(i)).collect();
        self.induced(&keep, |r| r)
    }

    pub fn map_faces<G: Clone + Eq + Hash>(&self, f: impl Fn(&F) -> G) -> Result<FacePoset<G>> {
        let faces = self.faces.iter().map(f).collect();
        FacePoset::from_below(faces, self.below.clone(), Some(self.ranks.clone()))
    }

    fn hasse_graph(&self) -> DiGraph<i32, ()> {
        let mut g = DiGraph::with_capacity(self.len(), 0);
        let nodes: Vec<_> = self.ranks.iter().map(|&r| g.add_node(r)).collect();
        for (i, ups) in self.up.iter().enumerate() {
            for &j in ups {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
        g
    }

    /// Order isomorphism that also respects ranks.
    pub fn is_isomorphic<G: Clone + Eq + Hash>(&self, other: &FacePoset<G>) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut a = self.ranks.clone();
        let mut b = other.ranks.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        is_isomorphic_matching(
            &self.hasse_graph(),
            &other.hasse_graph(),
            |x, y| x == y,
            |_, _| true,
        )
    }

    /// Hasse diagram in DOT, one subgraph per rank. A unique face of rank -1
    /// is labelled `F-1`.
    pub fn to_dot(&self, label: impl Fn(&F) -> String) -> String {
        let mut out = String::from("digraph faces {\n  rankdir=BT;\n  node [shape=box];\n");
        let (lo, hi) = (self.ranks.iter().copied().min().unwrap_or(0), self.rank());
        for k in lo..=hi {
            out.push_str("  { rank=same;");
            for i in self.faces_of_rank(k) {
                out.push_str(&format!(" f{i};"));
            }
            out.push_str(" }\n");
        }
        for (i, f) in self.faces.iter().enumerate() {
            let text = if self.ranks[i] == -1 && self.faces_of_rank(-1).len() == 1 {
                "F-1".to_string()
            } else {
                label(f)
            };
            out.push_str(&format!(
                "  f{i} [label=\"{}\"];\n",
                text.replace('"', "\\\"")
            ));
        }
        for (i, ups) in self.up.iter().enumerate() {
            for &j in ups {
                out.push_str(&format!("  f{i} -> f{j};\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, label: impl Fn(&F) -> String) -> Value {
        let faces: Vec<Value> = self
            .faces
            .iter()
            .enumerate()
            .map(|(i, f)| json!({"id": i, "rank": self.ranks[i], "label": label(f)}))
            .collect();
        let covers: Vec<[usize; 2]> = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| [i, j]))
            .collect();
        json!({"rank": self.rank(), "faces": faces, "covers": covers})
    }
}

fn topological_order(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for s in succ {
        for &b in s {
            indegree[b] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(a) = ready.pop() {
        order.push(a);
        for &b in &succ[a] {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(b);
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn longest_chain_ranks(down: &[Vec<usize>]) -> Vec<i32> {
    fn visit(i: usize, down: &[Vec<usize>], memo: &mut [Option<i32>]) -> i32 {
        if let Some(r) = memo[i] {
            return r;
        }
        let r = down[i]
            .iter()
            .map(|&j| visit(j, down, memo) + 1)
            .max()
            .unwrap_or(-1);
        memo[i] = Some(r);
        r
    }
    let mut memo = vec![None; down.len()];
    (0..down.len()).map(|i| visit(i, down, &mut memo)).collect()
}
