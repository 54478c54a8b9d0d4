//! Forest and word notations for constructions.
//!
//! A construction `K` becomes an f-construction (a forest whose nodes are
//! atoms) by taking each maximal member of `K` as a tree: its root is the
//! member's superficial atom, its subtrees are the maximal members of `K`
//! strictly inside it. The forest reads off as a word in which juxtaposition
//! prefixes an atom and `+` builds a commutative sum, e.g. `xz(y+u)`.
//!
//! Text grammar, whitespace ignored:
//!
//! ```text
//! top   := ε | seq
//! seq   := atom* (atom | group)
//! group := '(' seq ('+' seq)* ')'
//! atom  := any single character other than ( ) + [ ]  |  '[' name ']'
//! ```
//!
//! A group with one summand is plain grouping, so `y(x+(zu))` parses.

use std::fmt;

use crate::atoms::{AtomSet, AtomTable};
use crate::construction::{is_construction_of, superficial_elements};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph;

/// A tree of an f-construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FTree {
    pub root: usize,
    /// Sorted by root.
    pub children: Vec<FTree>,
}

/// A forest of atom-labelled trees, sorted by root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FConstruction {
    pub trees: Vec<FTree>,
}

/// Words modulo commutativity of `+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum STerm {
    Empty,
    Prefix(usize, Box<STerm>),
    /// At least two summands, none of them `Empty` or a `Sum`, ordered by
    /// leading atom.
    Sum(Vec<STerm>),
}

impl FTree {
    pub fn atoms(&self) -> AtomSet {
        let mut s = AtomSet::singleton(self.root);
        for c in &self.children {
            s = s.union(&c.atoms());
        }
        s
    }

    fn display_into(&self, atoms: &AtomTable, out: &mut String) {
        out.push('{');
        out.push_str(atoms.name(self.root));
        for c in &self.children {
            out.push(',');
            c.display_into(atoms, out);
        }
        out.push('}');
    }
}

impl FConstruction {
    /// `{{x,{z,{y},{u}}}}`.
    pub fn display(&self, atoms: &AtomTable) -> String {
        let mut out = String::from("{");
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            t.display_into(atoms, &mut out);
        }
        out.push('}');
        out
    }
}

/// The map `f` from constructions to forests.
pub fn f_map(k: &Family) -> Result<FConstruction> {
    fn maximal_inside(k: &Family, bound: Option<&AtomSet>) -> Vec<AtomSet> {
        let candidates: Vec<&AtomSet> = k
            .iter()
            .filter(|x| bound.is_none_or(|b| x.is_proper_subset(b)))
            .collect();
        candidates
            .iter()
            .filter(|x| !candidates.iter().any(|y| x.is_proper_subset(y)))
            .map(|x| (*x).clone())
            .collect()
    }
    fn tree(k: &Family, x: &AtomSet) -> Result<FTree> {
        let sup = superficial_elements(k, x)?;
        if sup.len() != 1 {
            return Err(Error::NotAConstruction);
        }
        let mut children = maximal_inside(k, Some(x))
            .iter()
            .map(|c| tree(k, c))
            .collect::<Result<Vec<_>>>()?;
        children.sort_by_key(|t| t.root);
        Ok(FTree {
            root: sup.first().expect("one atom"),
            children,
        })
    }
    let mut trees = maximal_inside(k, None)
        .iter()
        .map(|x| tree(k, x))
        .collect::<Result<Vec<_>>>()?;
    trees.sort_by_key(|t| t.root);
    Ok(FConstruction { trees })
}

/// The map `s` from forests to words.
pub fn s_map(f: &FConstruction) -> STerm {
    fn forest(trees: &[FTree]) -> STerm {
        match trees {
            [] => STerm::Empty,
            [t] => STerm::Prefix(t.root, Box::new(forest(&t.children))),
            _ => STerm::Sum(
                trees
                    .iter()
                    .map(|t| STerm::Prefix(t.root, Box::new(forest(&t.children))))
                    .collect(),
            ),
        }
    }
    forest(&f.trees)
}

/// The map `c` from words to constructions.
pub fn c_map(t: &STerm) -> Family {
    let mut out = Family::new();
    collect_c(t, &mut out);
    out
}

fn collect_c(t: &STerm, out: &mut Family) {
    match t {
        STerm::Empty => {}
        STerm::Prefix(_, rest) => {
            out.insert(t.atoms());
            collect_c(rest, out);
        }
        STerm::Sum(ts) => ts.iter().for_each(|s| collect_c(s, out)),
    }
}

impl STerm {
    pub fn atoms(&self) -> AtomSet {
        match self {
            STerm::Empty => AtomSet::new(),
            STerm::Prefix(x, rest) => rest.atoms().union(&AtomSet::singleton(*x)),
            STerm::Sum(ts) => ts.iter().fold(AtomSet::new(), |a, t| a.union(&t.atoms())),
        }
    }

    fn lead(&self) -> usize {
        match self {
            STerm::Prefix(x, _) => *x,
            STerm::Sum(ts) => ts[0].lead(),
            STerm::Empty => usize::MAX,
        }
    }

    /// Builds a sum, flattening nested sums and fixing the summand order.
    /// A single summand is returned as is.
    pub fn sum(parts: Vec<STerm>) -> STerm {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                STerm::Sum(inner) => flat.extend(inner),
                STerm::Empty => {}
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => STerm::Empty,
            1 => flat.pop().expect("one summand"),
            _ => {
                flat.sort_by_key(STerm::lead);
                STerm::Sum(flat)
            }
        }
    }

    pub fn display<'a>(&'a self, atoms: &'a AtomTable) -> STermDisplay<'a> {
        STermDisplay { term: self, atoms }
    }

    fn write(&self, atoms: &AtomTable, out: &mut String) {
        match self {
            STerm::Empty => {}
            STerm::Prefix(x, rest) => {
                write_atom(atoms.name(*x), out);
                rest.write(atoms, out);
            }
            STerm::Sum(ts) => {
                out.push('(');
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        out.push('+');
                    }
                    match t {
                        STerm::Prefix(x, rest) if **rest == STerm::Empty => {
                            write_atom(atoms.name(*x), out)
                        }
                        _ => {
                            out.push('(');
                            t.write(atoms, out);
                            out.push(')');
                        }
                    }
                }
                out.push(')');
            }
        }
    }
}

fn write_atom(name: &str, out: &mut String) {
    let mut chars = name.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if !"()+[]".contains(c) && !c.is_whitespace() => out.push(c),
        _ => {
            out.push('[');
            out.push_str(name);
            out.push(']');
        }
    }
}

pub struct STermDisplay<'a> {
    term: &'a STerm,
    atoms: &'a AtomTable,
}

impl fmt::Display for STermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.term.write(self.atoms, &mut out);
        f.write_str(&out)
    }
}

/// The f-construction of a construction of `h`.
pub fn to_f_construction(h: &Hypergraph, k: &Family) -> Result<FConstruction> {
    if !is_construction_of(h, k)? {
        return Err(Error::NotAConstruction);
    }
    f_map(k)
}

/// The s-construction of a construction of `h`.
pub fn to_s_construction(h: &Hypergraph, k: &Family) -> Result<STerm> {
    Ok(s_map(&to_f_construction(h, k)?))
}

/// Reads a word over the carrier of `h`.
pub fn parse_s_construction(text: &str, h: &Hypergraph) -> Result<STerm> {
    let mut p = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        len: text.len(),
        h,
        seen: AtomSet::new(),
    };
    if p.chars.is_empty() {
        return Ok(STerm::Empty);
    }
    let t = p.seq()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    h: &'a Hypergraph,
    seen: AtomSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.offset(),
            msg: msg.to_string(),
        }
    }

    fn seq(&mut self) -> Result<STerm> {
        let mut prefix = Vec::new();
        let tail = loop {
            match self.peek() {
                Some('(') => break self.group()?,
                Some(c) if !")+]".contains(c) => prefix.push(self.atom()?),
                _ => break STerm::Empty,
            }
        };
        if prefix.is_empty() && tail == STerm::Empty {
            return Err(self.error("expected an atom or `(`"));
        }
        Ok(prefix
            .into_iter()
            .rev()
            .fold(tail, |t, x| STerm::Prefix(x, Box::new(t))))
    }

    fn group(&mut self) -> Result<STerm> {
        self.pos += 1;
        let mut parts = vec![self.seq()?];
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    parts.push(self.seq()?);
                }
                Some(')') => {
                    self.pos += 1;
                    return Ok(STerm::sum(parts));
                }
                _ => return Err(self.error("expected `+` or `)`")),
            }
        }
    }

    fn atom(&mut self) -> Result<usize> {
        let name = match self.peek() {
            Some('[') => {
                self.pos += 1;
                let mut name = String::new();
                loop {
                    match self.peek() {
                        Some(']') => break,
                        Some(c) => name.push(c),
                        None => return Err(self.error("unterminated `[`")),
                    }
                    self.pos += 1;
                }
                self.pos += 1;
                name
            }
            Some(c) => {
                self.pos += 1;
                c.to_string()
            }
            None => return Err(self.error("expected an atom")),
        };
        let index = self.h.atoms().index(&name)?;
        if !self.h.carrier().contains(index) {
            return Err(Error::UnknownAtom(name));
        }
        if self.seen.contains(index) {
            return Err(Error::RepeatedAtom(name));
        }
        self.seen.insert(index);
        Ok(index)
    }
}
