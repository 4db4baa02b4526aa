use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// Finite multiset of rationals with strictly positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalMultiset {
    entries: BTreeMap<Rational, u64>,
}

/// One `(value, multiplicity)` pair, in the JSON shape `{"alpha": .., "mult": ..}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetEntry {
    pub alpha: Rational,
    pub mult: u64,
}

impl RationalMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(value: Rational) -> Self {
        let mut m = Self::new();
        m.insert(value, 1);
        m
    }

    /// Adds `mult` copies of `value`. Zero multiplicities are ignored.
    pub fn insert(&mut self, value: Rational, mult: u64) {
        if mult == 0 {
            return;
        }
        let slot = self.entries.entry(value).or_insert(0);
        *slot = slot.checked_add(mult).expect("multiplicity overflow");
    }

    /// Removes one copy of `value`; returns false if it was absent.
    pub fn remove_one(&mut self, value: &Rational) -> bool {
        match self.entries.get_mut(value) {
            None => false,
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.entries.remove(value);
                true
            }
        }
    }

    pub fn multiplicity(&self, value: &Rational) -> u64 {
        self.entries.get(value).copied().unwrap_or(0)
    }

    pub fn contains(&self, value: &Rational) -> bool {
        self.entries.contains_key(value)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn distinct_len(&self) -> usize {
        self.entries.len()
    }

    /// Distinct values with multiplicities, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.entries.iter().map(|(v, m)| (v, *m))
    }

    pub fn distinct(&self) -> impl Iterator<Item = &Rational> {
        self.entries.keys()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }

    /// Multiset of pairwise sums `a + b`, multiplicities multiplied.
    pub fn sumset(&self, other: &RationalMultiset) -> RationalMultiset {
        let mut out = RationalMultiset::new();
        for (a, ma) in &self.entries {
            for (b, mb) in &other.entries {
                out.insert(a + b, ma.checked_mul(*mb).expect("multiplicity overflow"));
            }
        }
        out
    }

    pub fn to_entries(&self) -> Vec<MultisetEntry> {
        self.iter()
            .map(|(alpha, mult)| MultisetEntry { alpha: alpha.clone(), mult })
            .collect()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = MultisetEntry>) -> Self {
        let mut m = Self::new();
        for e in entries {
            m.insert(e.alpha, e.mult);
        }
        m
    }
}

impl FromIterator<Rational> for RationalMultiset {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        let mut m = Self::new();
        for v in iter {
            m.insert(v, 1);
        }
        m
    }
}

impl FromIterator<(Rational, u64)> for RationalMultiset {
    fn from_iter<I: IntoIterator<Item = (Rational, u64)>>(iter: I) -> Self {
        let mut m = Self::new();
        for (v, k) in iter {
            m.insert(v, k);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ms(items: &[(&str, u64)]) -> RationalMultiset {
        items.iter().map(|(v, m)| (r(v), *m)).collect()
    }

    #[test]
    fn singleton_sum() {
        let a = ms(&[("3/2", 1)]);
        assert_eq!(a.sumset(&a), ms(&[("3", 1)]));
    }

    #[test]
    fn cusp_square() {
        let a = ms(&[("5/6", 1), ("7/6", 1)]);
        assert_eq!(a.sumset(&a), ms(&[("5/3", 1), ("2", 2), ("7/3", 1)]));
    }

    #[test]
    fn empty_absorbs() {
        let a = ms(&[("1/2", 3)]);
        assert!(RationalMultiset::new().sumset(&a).is_empty());
        assert!(a.sumset(&RationalMultiset::new()).is_empty());
    }

    #[test]
    fn remove_one_copy() {
        let mut a = ms(&[("1", 2)]);
        assert!(a.remove_one(&r("1")));
        assert_eq!(a.multiplicity(&r("1")), 1);
        assert!(a.remove_one(&r("1")));
        assert!(!a.remove_one(&r("1")));
        assert!(a.is_empty());
    }

    #[test]
    fn zero_multiplicity_not_stored() {
        let mut a = RationalMultiset::new();
        a.insert(r("1/3"), 0);
        assert!(a.is_empty());
    }
}
