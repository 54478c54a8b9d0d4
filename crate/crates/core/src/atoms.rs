//! Atom identifiers and finite sets of atoms.
//!
//! Atoms are externally named by strings and internally addressed by dense
//! indices into an [`AtomTable`]. An [`AtomSet`] is a bitset over those
//! indices: one inline machine word covers carriers of up to 64 atoms, and
//! larger carriers spill onto the heap without changing any call site.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A finite set of atom indices.
///
/// Trailing zero words are never stored, so structural equality and hashing
/// coincide with set equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AtomSet {
    words: SmallVec<[u64; 1]>,
}

impl AtomSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(atom: usize) -> Self {
        let mut s = Self::new();
        s.insert(atom);
        s
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = smallvec![u64::MAX; n / WORD];
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn from_bits(bits: u64) -> Self {
        let mut s = Self {
            words: smallvec![bits],
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, atom: usize) {
        let (w, b) = (atom / WORD, atom % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, atom: usize) {
        let (w, b) = (atom / WORD, atom % WORD);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.normalize();
        }
    }

    pub fn contains(&self, atom: usize) -> bool {
        let (w, b) = (atom / WORD, atom % WORD);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The low word, for callers that know the carrier fits in 64 atoms.
    pub fn bits(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.normalize();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        let mut s = Self { words };
        s.normalize();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    /// Ascending atom indices.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Every subset of `self`, the empty set first and `self` last.
    ///
    /// Panics when `self` has 64 or more atoms; no exhaustive pass over
    /// such a power set could finish anyway.
    pub fn subsets(&self) -> impl Iterator<Item = AtomSet> + '_ {
        let atoms: Vec<usize> = self.iter().collect();
        assert!(atoms.len() < WORD, "power set of {} atoms", atoms.len());
        (0u64..1 << atoms.len()).map(move |mask| {
            let mut s = AtomSet::new();
            for (bit, &atom) in atoms.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    s.insert(atom);
                }
            }
            s
        })
    }

    /// Every nonempty subset, ordered by cardinality and then canonically.
    pub fn nonempty_subsets_by_size(&self) -> Vec<AtomSet> {
        let mut all: Vec<AtomSet> = self.subsets().filter(|s| !s.is_empty()).collect();
        all.sort();
        all
    }
}

/// Canonical order: by cardinality, then lexicographically on the ascending
/// index sequences.
impl Ord for AtomSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for AtomSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for AtomSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = AtomSet::new();
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Names of atoms, in the stable order used for canonical printing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomTable {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl AtomTable {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut table = AtomTable {
            names: Vec::new(),
            lookup: HashMap::new(),
        };
        for name in names {
            let name = name.as_ref();
            if table.lookup.contains_key(name) {
                return Err(Error::DuplicateAtom(name.to_string()));
            }
            table.push(name);
        }
        Ok(table)
    }

    /// `n` atoms named `x, y, z, u, v, w` and then `a6, a7, ...`.
    pub fn standard(n: usize) -> Self {
        const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
        let names = (0..n).map(|i| match NAMES.get(i) {
            Some(s) => s.to_string(),
            None => format!("a{i}"),
        });
        AtomTable::new(names).expect("standard names are distinct")
    }

    pub(crate) fn push(&mut self, name: &str) -> usize {
        let index = self.names.len();
        self.names.push(name.to_string());
        self.lookup.insert(name.to_string(), index);
        index
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, atom: usize) -> &str {
        &self.names[atom]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<AtomSet> {
        names.into_iter().map(|n| self.index(n.as_ref())).collect()
    }

    pub fn all(&self) -> AtomSet {
        AtomSet::full(self.len())
    }

    /// `{x,y,z}` in carrier order.
    pub fn format_set(&self, set: &AtomSet) -> String {
        let inner: Vec<&str> = set.iter().map(|a| self.name(a)).collect();
        format!("{{{}}}", inner.join(","))
    }
}
