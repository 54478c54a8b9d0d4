//! Hypergraphs over a named carrier.

use std::fmt;
use std::sync::Arc;

use crate::atoms::{AtomSet, AtomTable};
use crate::error::{Error, Result};
use crate::family::Family;

/// A finite family of nonempty sets whose union is the carrier.
///
/// The atom table is shared between a hypergraph and everything derived from
/// it (restrictions, quotients, closures), so atom indices stay comparable.
#[derive(Clone)]
pub struct Hypergraph {
    atoms: Arc<AtomTable>,
    carrier: AtomSet,
    members: Family,
}

/// The finest partition of a hypergraph into connected blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphPartition {
    pub blocks: Vec<Hypergraph>,
}

impl Hypergraph {
    /// Checks a declared carrier and member list and returns the canonical
    /// hypergraph they describe.
    pub fn validate(
        atoms: Arc<AtomTable>,
        carrier: AtomSet,
        members: Vec<AtomSet>,
    ) -> Result<Self> {
        let universe = atoms.all();
        let mut family = Family::new();
        for m in members {
            if m.is_empty() {
                return Err(Error::EmptyMember);
            }
            if !m.is_subset(&universe) {
                return Err(Error::UnknownAtom(format!("{:?}", m.difference(&universe))));
            }
            if !family.insert(m.clone()) {
                return Err(Error::DuplicateMember(atoms.format_set(&m)));
            }
        }
        let actual = family.union_all();
        if actual != carrier {
            return Err(Error::CarrierMismatch {
                declared: atoms.format_set(&carrier),
                actual: atoms.format_set(&actual),
            });
        }
        Ok(Self {
            atoms,
            carrier,
            members: family,
        })
    }

    /// Builds a hypergraph from atom names; the carrier order fixes the
    /// printing order.
    pub fn from_names<S: AsRef<str>>(carrier: &[S], members: &[&[S]]) -> Result<Self> {
        let atoms = Arc::new(AtomTable::new(carrier)?);
        let sets = members
            .iter()
            .map(|m| atoms.set(m.iter()))
            .collect::<Result<Vec<_>>>()?;
        let all = atoms.all();
        Self::validate(atoms, all, sets)
    }

    /// The hypergraph on the union of `members`. Empty sets are dropped.
    pub fn from_family(atoms: Arc<AtomTable>, members: Family) -> Self {
        let members: Family = members
            .into_vec()
            .into_iter()
            .filter(|m| !m.is_empty())
            .collect();
        Self {
            carrier: members.union_all(),
            atoms,
            members,
        }
    }

    pub fn empty(atoms: Arc<AtomTable>) -> Self {
        Self::from_family(atoms, Family::new())
    }

    pub fn atoms(&self) -> &Arc<AtomTable> {
        &self.atoms
    }

    pub fn carrier(&self) -> &AtomSet {
        &self.carrier
    }

    pub fn members(&self) -> &Family {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &AtomSet) -> bool {
        self.members.contains(set)
    }

    /// Another hypergraph over the same atom table.
    pub fn derive(&self, members: Family) -> Self {
        Self::from_family(self.atoms.clone(), members)
    }

    pub fn with(&self, set: AtomSet) -> Self {
        self.derive(self.members.with(set))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.derive(self.members.union(&other.members))
    }

    pub fn is_atomic(&self) -> bool {
        self.carrier
            .iter()
            .all(|a| self.members.contains(&AtomSet::singleton(a)))
    }

    /// Connectedness of the intersection graph; the empty hypergraph counts
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.members.is_connected()
    }

    /// Number of connected components of the carrier.
    pub fn connectedness_number(&self) -> usize {
        self.members.component_carriers().len()
    }

    pub fn finest_partition(&self) -> HypergraphPartition {
        HypergraphPartition {
            blocks: self
                .members
                .component_carriers()
                .iter()
                .map(|c| self.derive(self.members.restrict(c)))
                .collect(),
        }
    }

    /// `H_Y`: the members contained in `y`.
    pub fn restriction(&self, y: &AtomSet) -> Result<Self> {
        if !self.is_atomic() {
            return Err(Error::NotAtomic);
        }
        if !y.is_subset(&self.carrier) {
            return Err(Error::NotSubset);
        }
        Ok(self.restrict_unchecked(y))
    }

    /// Members contained in `y`, with no precondition checks.
    pub fn restrict_unchecked(&self, y: &AtomSet) -> Self {
        self.derive(self.members.restrict(y))
    }

    /// `_Z H`: the nonempty traces of the members on `z`.
    pub fn quotient(&self, z: &AtomSet) -> Result<Self> {
        if !z.is_subset(&self.carrier) {
            return Err(Error::NotSubset);
        }
        Ok(self.derive(self.members.quotient(z)))
    }

    /// Member sizes: entry `j` counts the `j`-element members.
    pub fn census(&self) -> Vec<usize> {
        let mut counts = vec![0; self.carrier.len() + 1];
        for m in &self.members {
            counts[m.len()] += 1;
        }
        counts
    }

    pub fn format_set(&self, set: &AtomSet) -> String {
        self.atoms.format_set(set)
    }

    pub fn format_family(&self, family: &Family) -> String {
        family.display(&self.atoms).to_string()
    }

    /// Atom names of the carrier, in table order.
    pub fn carrier_names(&self) -> Vec<&str> {
        self.carrier.iter().map(|a| self.atoms.name(a)).collect()
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.members == other.members
            && (Arc::ptr_eq(&self.atoms, &other.atoms)
                || self
                    .carrier
                    .iter()
                    .all(|a| self.atoms.name(a) == other.atoms.name(a)))
    }
}

impl Eq for Hypergraph {}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.members.display(&self.atoms).fmt(f)
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph{self}")
    }
}
