use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::Error;

const BITS: usize = u64::BITS as usize;

/// A subset of the states `0..universe` of some automaton, stored as a dense
/// bitset.
///
/// Ordering is lexicographic on the ascending member lists, so among sets of
/// equal cardinality the smallest one is the one that wins every tie-break
/// in the solvers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    universe: usize,
    words: Vec<u64>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            universe,
            words: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, word) in set.words.iter_mut().enumerate() {
            let remaining = universe - i * BITS;
            *word = if remaining >= BITS {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    pub fn singleton(universe: usize, state: usize) -> Result<Self, Error> {
        let mut set = Self::empty(universe);
        set.try_insert(state)?;
        Ok(set)
    }

    /// Builds a set from explicit indices; duplicates are ignored.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for state in indices {
            set.try_insert(state)?;
        }
        Ok(set)
    }

    /// Number of states of the automaton this set lives in.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, state: usize) -> bool {
        state < self.universe && self.words[state / BITS] & (1 << (state % BITS)) != 0
    }

    /// Inserts `state`, panicking if it is outside the universe.
    pub fn insert(&mut self, state: usize) {
        assert!(state < self.universe, "state {state} outside universe");
        self.words[state / BITS] |= 1 << (state % BITS);
    }

    pub fn try_insert(&mut self, state: usize) -> Result<(), Error> {
        if state >= self.universe {
            return Err(Error::InvalidState {
                state,
                states: self.universe,
            });
        }
        self.insert(state);
        Ok(())
    }

    pub fn remove(&mut self, state: usize) {
        if state < self.universe {
            self.words[state / BITS] &= !(1 << (state % BITS));
        }
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// Intersection with another set over the same universe.
    pub fn intersection(&self, other: &StateSet) -> StateSet {
        debug_assert_eq!(self.universe, other.universe);
        StateSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// The only member, if the set has exactly one.
    pub fn single(&self) -> Option<usize> {
        let mut iter = self.iter();
        match (iter.next(), iter.next()) {
            (Some(q), None) => Some(q),
            _ => None,
        }
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for StateSet {
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
                return Some(self.index * BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a StateSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn full_and_empty() {
        for n in [1, 63, 64, 65, 130] {
            let full = StateSet::full(n);
            assert_eq!(full.len(), n);
            assert_eq!(full.to_vec(), (0..n).collect::<Vec<_>>());
            assert!(StateSet::empty(n).is_empty());
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            StateSet::from_indices(3, [0, 3]),
            Err(Error::InvalidState {
                state: 3,
                states: 3
            })
        );
    }

    #[test]
    fn lexicographic_order() {
        let a = StateSet::from_indices(6, [0, 4]).unwrap();
        let b = StateSet::from_indices(6, [1, 2]).unwrap();
        let c = StateSet::from_indices(6, [0, 4, 5]).unwrap();
        assert!(a < b);
        assert!(a < c);
        assert!(c < b);
    }

    #[test]
    fn single_and_subset() {
        let s = StateSet::from_indices(100, [70]).unwrap();
        assert_eq!(s.single(), Some(70));
        let t = StateSet::from_indices(100, [3, 70]).unwrap();
        assert_eq!(t.single(), None);
        assert!(s.is_subset(&t));
        assert!(!t.is_subset(&s));
        assert_eq!(t.intersection(&s), s);
    }
}
