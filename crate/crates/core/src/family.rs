//! Canonically ordered families of atom sets.

use std::fmt;

use crate::atoms::{AtomSet, AtomTable};

/// A set of atom sets kept sorted in canonical order without duplicates.
///
/// Hypergraphs, constructions and constructs are all families; the type
/// carries no atom names, so printing goes through [`Family::display`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family(Vec<AtomSet>);

impl Family {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, AtomSet> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[AtomSet] {
        &self.0
    }

    pub fn contains(&self, set: &AtomSet) -> bool {
        self.0.binary_search(set).is_ok()
    }

    /// Adds `set`; returns false if it was already present.
    pub fn insert(&mut self, set: AtomSet) -> bool {
        match self.0.binary_search(&set) {
            Ok(_) => false,
            Err(i) => {
                self.0.insert(i, set);
                true
            }
        }
    }

    pub fn remove(&mut self, set: &AtomSet) -> bool {
        match self.0.binary_search(set) {
            Ok(i) => {
                self.0.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, set: AtomSet) -> Self {
        let mut f = self.clone();
        f.insert(set);
        f
    }

    pub fn without(&self, set: &AtomSet) -> Self {
        let mut f = self.clone();
        f.remove(set);
        f
    }

    pub fn union_all(&self) -> AtomSet {
        self.0.iter().fold(AtomSet::new(), |acc, s| acc.union(s))
    }

    /// Members contained in `y`.
    pub fn restrict(&self, y: &AtomSet) -> Self {
        Self(self.0.iter().filter(|x| x.is_subset(y)).cloned().collect())
    }

    /// Nonempty traces `X ∩ z` of the members.
    pub fn quotient(&self, z: &AtomSet) -> Self {
        self.0
            .iter()
            .map(|x| x.intersection(z))
            .filter(|x| !x.is_empty())
            .collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.0.iter().chain(other.0.iter()).cloned().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .filter(|x| other.contains(x))
                .cloned()
                .collect(),
        )
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .filter(|x| !other.contains(x))
                .cloned()
                .collect(),
        )
    }

    pub fn is_subfamily(&self, other: &Self) -> bool {
        self.0.iter().all(|x| other.contains(x))
    }

    /// Carriers of the connected pieces: two members belong to the same
    /// piece when a chain of pairwise intersecting members joins them.
    pub fn component_carriers(&self) -> Vec<AtomSet> {
        component_carriers(&self.0)
    }

    pub fn is_connected(&self) -> bool {
        self.component_carriers().len() <= 1
    }

    pub fn display<'a>(&'a self, atoms: &'a AtomTable) -> FamilyDisplay<'a> {
        FamilyDisplay {
            family: self,
            atoms,
        }
    }

    pub fn into_vec(self) -> Vec<AtomSet> {
        self.0
    }
}

/// Carrier blocks of the intersection graph of `sets`, in canonical order.
pub fn component_carriers(sets: &[AtomSet]) -> Vec<AtomSet> {
    let mut blocks: Vec<AtomSet> = Vec::new();
    for s in sets {
        let mut merged = s.clone();
        blocks.retain(|b| {
            if b.intersects(&merged) {
                merged = merged.union(b);
                false
            } else {
                true
            }
        });
        blocks.push(merged);
    }
    blocks.sort();
    blocks
}

impl FromIterator<AtomSet> for Family {
    fn from_iter<I: IntoIterator<Item = AtomSet>>(iter: I) -> Self {
        let mut v: Vec<AtomSet> = iter.into_iter().collect();
        v.sort();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<AtomSet>> for Family {
    fn from(v: Vec<AtomSet>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a AtomSet;
    type IntoIter = std::slice::Iter<'a, AtomSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

pub struct FamilyDisplay<'a> {
    family: &'a Family,
    atoms: &'a AtomTable,
}

impl fmt::Display for FamilyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, set) in self.family.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.atoms.format_set(set))?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(a: &[usize]) -> AtomSet {
        a.iter().copied().collect()
    }

    #[test]
    fn dedups_and_sorts() {
        let f: Family = vec![set(&[0, 1]), set(&[2]), set(&[0, 1]), set(&[0])].into();
        assert_eq!(f.len(), 3);
        assert_eq!(f.as_slice()[0], set(&[0]));
        assert!(f.contains(&set(&[0, 1])));
        assert!(!f.contains(&set(&[1])));
    }

    #[test]
    fn components_merge_through_chains() {
        let f: Family = vec![set(&[0, 1]), set(&[2, 3]), set(&[1, 2]), set(&[5])].into();
        assert_eq!(f.component_carriers(), vec![set(&[5]), set(&[0, 1, 2, 3])]);
        assert!(Family::new().is_connected());
    }

    #[test]
    fn quotient_drops_empty_traces() {
        let f: Family = vec![set(&[0]), set(&[3]), set(&[2, 3]), set(&[1, 2, 3])].into();
        let q = f.quotient(&set(&[0, 1]));
        assert_eq!(q, vec![set(&[0]), set(&[1])].into());
    }

    #[test]
    fn prints_in_carrier_order() {
        let t = AtomTable::standard(4);
        let l: Family = vec![set(&[3]), set(&[2, 3]), set(&[1, 2, 3]), set(&[0, 1, 2, 3])].into();
        assert_eq!(l.display(&t).to_string(), "{{u},{z,u},{y,z,u},{x,y,z,u}}");
    }
}
