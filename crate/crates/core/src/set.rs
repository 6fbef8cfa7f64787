//! Bitsets of element indices over a fixed carrier.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of `0..carrier_order`, stored as a bitset.
///
/// Equality is structural, so two sets built in different ways compare equal
/// exactly when they have the same members. The ordering sorts by carrier,
/// then by size, then lexicographically on the sorted member list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    carrier: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(carrier: usize) -> Self {
        Self {
            carrier,
            words: vec![0; carrier.div_ceil(64)],
        }
    }

    pub fn full(carrier: usize) -> Self {
        let mut s = Self::empty(carrier);
        for i in 0..carrier {
            s.insert(i);
        }
        s
    }

    pub fn singleton(carrier: usize, x: usize) -> Self {
        let mut s = Self::empty(carrier);
        s.insert(x);
        s
    }

    /// Panics if an index is outside the carrier.
    pub fn from_indices<I: IntoIterator<Item = usize>>(carrier: usize, items: I) -> Self {
        let mut s = Self::empty(carrier);
        for x in items {
            s.insert(x);
        }
        s
    }

    pub fn carrier_order(&self) -> usize {
        self.carrier
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.carrier && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Returns true if `x` was not already present.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(
            x < self.carrier,
            "index {x} outside carrier of order {}",
            self.carrier
        );
        let w = &mut self.words[x / 64];
        let bit = 1u64 << (x % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.carrier {
            self.words[x / 64] &= !(1u64 << (x % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        Self {
            carrier: self.carrier,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        Self {
            carrier: self.carrier,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Image of the set under an index map into a carrier of order `carrier`.
    pub fn map_into(&self, carrier: usize, map: &[usize]) -> Self {
        Self::from_indices(carrier, self.iter().map(|x| map[x]))
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.carrier, other.carrier,
            "element sets over different carriers"
        );
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.carrier
            .cmp(&other.carrier)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

/// Deserialized sets have no carrier information; the carrier is taken as
/// one past the largest member. Use [`ElementSet::from_indices`] when the
/// carrier is known.
impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        let carrier = items.iter().max().map_or(0, |m| m + 1);
        Ok(Self::from_indices(carrier, items))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_membership() {
        let mut s = ElementSet::empty(130);
        assert!(s.is_empty());
        assert!(s.insert(129));
        assert!(!s.insert(129));
        s.insert(0);
        s.insert(64);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 129]);
        assert!(!s.contains(500));
    }

    #[test]
    fn ordering_is_size_then_lex() {
        let a = ElementSet::from_indices(8, [0, 5]);
        let b = ElementSet::from_indices(8, [0, 1, 2]);
        let c = ElementSet::from_indices(8, [0, 3]);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn serializes_as_sorted_array() {
        let s = ElementSet::from_indices(10, [7, 2, 3]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,3,7]");
    }

    proptest! {
        #[test]
        fn set_algebra_matches_vec_model(
            xs in proptest::collection::vec(0usize..150, 0..40),
            ys in proptest::collection::vec(0usize..150, 0..40),
        ) {
            let a = ElementSet::from_indices(150, xs.iter().copied());
            let b = ElementSet::from_indices(150, ys.iter().copied());
            let mut u: Vec<usize> = xs.iter().chain(&ys).copied().collect();
            u.sort();
            u.dedup();
            prop_assert_eq!(a.union(&b).to_vec(), u);
            let i: Vec<usize> = a.iter().filter(|x| b.contains(*x)).collect();
            prop_assert_eq!(a.intersection(&b).to_vec(), i);
            prop_assert!(a.intersection(&b).is_subset(&a));
            prop_assert!(a.is_subset(&a.union(&b)));
        }
    }
}
