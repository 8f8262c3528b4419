use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, StateSet};

/// A complete deterministic automaton `(Q, Σ, δ)` without initial or final
/// states.
///
/// States are `0..state_count()` and letters `0..alphabet_size()`. The
/// transition table is stored row-major: one row of `alphabet_size()`
/// successors per state. Optional labels are descriptive only and never
/// influence any computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    states: usize,
    alphabet: usize,
    delta: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Automaton {
    /// Builds an automaton from a row-major transition table of exactly
    /// `states * alphabet` entries.
    pub fn new(states: usize, alphabet: usize, delta: Vec<usize>) -> Result<Self, Error> {
        if states == 0 {
            return Err(Error::NoStates);
        }
        if alphabet == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let expected = states.checked_mul(alphabet).ok_or(Error::TooLarge {
            what: "transition table",
            limit: usize::MAX,
            got: states,
        })?;
        if delta.len() != expected {
            return Err(Error::TableSize {
                expected,
                found: delta.len(),
            });
        }
        if let Some(pos) = delta.iter().position(|&t| t >= states) {
            return Err(Error::TransitionOutOfRange {
                state: pos / alphabet,
                letter: pos % alphabet,
                target: delta[pos],
                states,
            });
        }
        Ok(Automaton {
            states,
            alphabet,
            delta,
            labels: None,
        })
    }

    /// Builds an automaton from a transition function evaluated on every
    /// `(state, letter)` pair.
    pub fn from_fn(
        states: usize,
        alphabet: usize,
        mut next: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, Error> {
        let mut delta = Vec::with_capacity(states.saturating_mul(alphabet));
        for q in 0..states {
            for a in 0..alphabet {
                delta.push(next(q, a));
            }
        }
        Self::new(states, alphabet, delta)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.states {
            return Err(Error::LabelCount {
                expected: self.states,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, state: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[state].as_str())
    }

    /// `δ(state, letter)`. Panics on out-of-range arguments.
    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        assert!(letter < self.alphabet);
        self.delta[state * self.alphabet + letter]
    }

    /// Successors of `state`, one per letter.
    pub fn row(&self, state: usize) -> &[usize] {
        &self.delta[state * self.alphabet..(state + 1) * self.alphabet]
    }

    pub fn is_unary(&self) -> bool {
        self.alphabet == 1
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet == 2
    }

    fn check_set(&self, set: &StateSet) -> Result<(), Error> {
        if set.universe() != self.states {
            return Err(Error::UniverseMismatch {
                expected: self.states,
                found: set.universe(),
            });
        }
        Ok(())
    }

    fn check_letter(&self, letter: usize) -> Result<(), Error> {
        if letter >= self.alphabet {
            return Err(Error::InvalidLetter {
                letter,
                alphabet: self.alphabet,
            });
        }
        Ok(())
    }

    /// Image `{δ(s, letter) : s ∈ set}`.
    pub fn apply_letter(&self, set: &StateSet, letter: usize) -> Result<StateSet, Error> {
        self.check_set(set)?;
        self.check_letter(letter)?;
        Ok(self.image(set, letter))
    }

    /// Image of `set` under `word`, read left to right.
    pub fn apply_word(&self, set: &StateSet, word: &Word) -> Result<StateSet, Error> {
        self.check_set(set)?;
        word.validate(self.alphabet)?;
        Ok(word
            .letters()
            .iter()
            .fold(set.clone(), |acc, &a| self.image(&acc, a)))
    }

    /// `δ(state, word)` for a single state.
    pub fn run(&self, state: usize, word: &Word) -> usize {
        word.letters().iter().fold(state, |q, &a| self.next(q, a))
    }

    pub(crate) fn image(&self, set: &StateSet, letter: usize) -> StateSet {
        let mut out = StateSet::empty(self.states);
        for s in set {
            out.insert(self.delta[s * self.alphabet + letter]);
        }
        out
    }

    /// Full preimage `{q : δ(q, letter) ∈ target}`.
    pub fn preimage(&self, target: &StateSet, letter: usize) -> Result<StateSet, Error> {
        self.check_set(target)?;
        self.check_letter(letter)?;
        Ok(self.preimage_unchecked(target, letter))
    }

    pub(crate) fn preimage_unchecked(&self, target: &StateSet, letter: usize) -> StateSet {
        let mut out = StateSet::empty(self.states);
        for q in 0..self.states {
            if target.contains(self.delta[q * self.alphabet + letter]) {
                out.insert(q);
            }
        }
        out
    }

    /// True iff every cycle of the transition graph is a self-loop.
    ///
    /// Self-loop edges are dropped and the remaining digraph is checked for
    /// a topological order (Kahn's algorithm).
    pub fn is_weakly_acyclic(&self) -> bool {
        let n = self.states;
        let mut indegree = vec![0usize; n];
        for q in 0..n {
            for &t in self.row(q) {
                if t != q {
                    indegree[t] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&q| indegree[q] == 0).collect();
        let mut removed = 0;
        while let Some(q) = queue.pop_front() {
            removed += 1;
            for &t in self.row(q) {
                if t != q {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        removed == n
    }

    /// States reachable from `roots` by some word (the roots included).
    pub fn reachable_from(&self, roots: &StateSet) -> Result<StateSet, Error> {
        self.check_set(roots)?;
        let mut seen = roots.clone();
        let mut stack: Vec<usize> = roots.to_vec();
        while let Some(q) = stack.pop() {
            for &t in self.row(q) {
                if !seen.contains(t) {
                    seen.insert(t);
                    stack.push(t);
                }
            }
        }
        Ok(seen)
    }

    /// Restriction to `keep`, renumbering the kept states in ascending order.
    ///
    /// `keep` must be closed under transitions, otherwise `None` is returned.
    pub fn restrict(&self, keep: &StateSet) -> Option<(Automaton, Vec<usize>)> {
        let kept = keep.to_vec();
        let mut new_index = vec![usize::MAX; self.states];
        for (i, &q) in kept.iter().enumerate() {
            new_index[q] = i;
        }
        let mut delta = Vec::with_capacity(kept.len() * self.alphabet);
        for &q in &kept {
            for &t in self.row(q) {
                if new_index[t] == usize::MAX {
                    return None;
                }
                delta.push(new_index[t]);
            }
        }
        let mut restricted = Automaton::new(kept.len(), self.alphabet, delta).ok()?;
        if let Some(labels) = &self.labels {
            restricted.labels = Some(kept.iter().map(|&q| labels[q].clone()).collect());
        }
        Some((restricted, kept))
    }
}

/// A finite word over the letters `0..k` of some automaton.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `letter` repeated `count` times.
    pub fn repeat(letter: usize, count: usize) -> Self {
        Word(vec![letter; count])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn validate(&self, alphabet: usize) -> Result<(), Error> {
        match self.0.iter().find(|&&a| a >= alphabet) {
            Some(&letter) => Err(Error::InvalidLetter { letter, alphabet }),
            None => Ok(()),
        }
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}
