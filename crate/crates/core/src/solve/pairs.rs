//! Whole-automaton synchronization through the pair automaton.
//!
//! An automaton is synchronizing iff every pair of states can be merged. A
//! breadth-first search backwards from the merged pairs labels each
//! mergeable pair `{p, q}` with the first letter of a shortest merging word;
//! following those letters replays the word.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Automaton, StateSet, Word};

const UNREACHED: u32 = u32::MAX;

/// Letter predecessors in compressed rows: `pred[a][offsets[a][t]..offsets[a][t+1]]`.
struct Predecessors {
    offsets: Vec<Vec<usize>>,
    sources: Vec<Vec<usize>>,
}

impl Predecessors {
    fn new(a: &Automaton) -> Self {
        let n = a.state_count();
        let mut offsets = Vec::with_capacity(a.alphabet_size());
        let mut sources = Vec::with_capacity(a.alphabet_size());
        for letter in 0..a.alphabet_size() {
            let mut start = vec![0usize; n + 1];
            for q in 0..n {
                start[a.next(q, letter) + 1] += 1;
            }
            for t in 0..n {
                start[t + 1] += start[t];
            }
            let mut fill = start.clone();
            let mut src = vec![0; n];
            for q in 0..n {
                let t = a.next(q, letter);
                src[fill[t]] = q;
                fill[t] += 1;
            }
            offsets.push(start);
            sources.push(src);
        }
        Predecessors { offsets, sources }
    }

    fn of(&self, letter: usize, state: usize) -> &[usize] {
        let o = &self.offsets[letter];
        &self.sources[letter][o[state]..o[state + 1]]
    }
}

struct PairTable {
    n: usize,
    letter: Vec<u32>,
}

impl PairTable {
    /// Index of the unordered pair `{p, q}`, `p != q`, in the upper triangle.
    fn index(&self, p: usize, q: usize) -> usize {
        let (lo, hi) = if p < q { (p, q) } else { (q, p) };
        lo * (2 * self.n - lo - 1) / 2 + (hi - lo - 1)
    }

    fn build(a: &Automaton) -> Self {
        let n = a.state_count();
        let mut table = PairTable {
            n,
            letter: vec![UNREACHED; n * n.saturating_sub(1) / 2],
        };
        let preds = Predecessors::new(a);
        let mut queue = VecDeque::new();
        for t in 0..n {
            for letter in 0..a.alphabet_size() {
                let group = preds.of(letter, t);
                for (i, &p) in group.iter().enumerate() {
                    for &q in &group[i + 1..] {
                        table.mark(p, q, letter, &mut queue);
                    }
                }
            }
        }
        while let Some((x, y)) = queue.pop_front() {
            for letter in 0..a.alphabet_size() {
                for &p in preds.of(letter, x) {
                    for &q in preds.of(letter, y) {
                        table.mark(p, q, letter, &mut queue);
                    }
                }
            }
        }
        table
    }

    fn mark(&mut self, p: usize, q: usize, letter: usize, queue: &mut VecDeque<(usize, usize)>) {
        let idx = self.index(p, q);
        if self.letter[idx] == UNREACHED {
            self.letter[idx] = letter as u32;
            queue.push_back((p, q));
        }
    }

    fn all_mergeable(&self) -> bool {
        self.letter.iter().all(|&l| l != UNREACHED)
    }

    /// A shortest word merging `p` and `q`, if one exists.
    fn merging_word(&self, a: &Automaton, mut p: usize, mut q: usize) -> Option<Word> {
        let mut word = Word::empty();
        while p != q {
            let letter = self.letter[self.index(p, q)];
            if letter == UNREACHED {
                return None;
            }
            let letter = letter as usize;
            word.push(letter);
            p = a.next(p, letter);
            q = a.next(q, letter);
        }
        Some(word)
    }
}

/// True iff some word maps every state to one common state.
///
/// Quadratic in the number of states (memory and time).
pub fn is_synchronizing(automaton: &Automaton) -> bool {
    automaton.state_count() == 1 || PairTable::build(automaton).all_mergeable()
}

/// A synchronizing word for the whole automaton, or `None` if it is not
/// synchronizing.
///
/// Greedy: while more than one state remains, merge the two lowest-indexed
/// remaining states with a shortest merging word. The result has length at
/// most cubic in `n` but is not minimal in general.
pub fn find_sync_word(automaton: &Automaton) -> Option<Word> {
    let n = automaton.state_count();
    if n == 1 {
        return Some(Word::empty());
    }
    let table = PairTable::build(automaton);
    if !table.all_mergeable() {
        return None;
    }
    let mut current = StateSet::full(n);
    let mut word = Word::empty();
    while current.len() > 1 {
        let mut members = current.iter();
        let p = members.next()?;
        let q = members.next()?;
        let merge = table.merging_word(automaton, p, q)?;
        current = automaton.apply_word(&current, &merge).ok()?;
        word = word.concat(&merge);
    }
    Some(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_automaton;
    use crate::solve::{decide_sync_set, SolverConfig};

    /// Cycle letter plus a letter that moves state 0 to 1 and fixes the rest.
    fn cerny(n: usize) -> Automaton {
        Automaton::from_fn(n, 2, |q, l| match l {
            0 => (q + 1) % n,
            _ if q == 0 => 1,
            _ => q,
        })
        .unwrap()
    }

    #[test]
    fn small_cases() {
        let one = Automaton::new(1, 1, vec![0]).unwrap();
        assert!(is_synchronizing(&one));
        assert_eq!(find_sync_word(&one), Some(Word::empty()));

        let cycle = Automaton::from_fn(3, 1, |q, _| (q + 1) % 3).unwrap();
        assert!(!is_synchronizing(&cycle));
        assert_eq!(find_sync_word(&cycle), None);

        let merge = Automaton::new(2, 1, vec![1, 1]).unwrap();
        assert_eq!(find_sync_word(&merge), Some(Word::from(vec![0])));
    }

    #[test]
    fn cerny_automaton_synchronizes() {
        let a = cerny(4);
        assert!(is_synchronizing(&a));
        let full = StateSet::full(4);
        let w = decide_sync_set(&a, &full, &SolverConfig::default())
            .unwrap()
            .unwrap();
        // shortest word of the 4-state Černý automaton has length (n-1)^2
        assert_eq!(w.word.len(), 9);
        let greedy = find_sync_word(&a).unwrap();
        assert_eq!(a.apply_word(&full, &greedy).unwrap().len(), 1);
    }

    #[test]
    fn pair_index_is_a_bijection() {
        let table = PairTable {
            n: 7,
            letter: vec![],
        };
        let mut seen = [false; 21];
        for p in 0..7 {
            for q in p + 1..7 {
                let i = table.index(p, q);
                assert!(!seen[i]);
                seen[i] = true;
                assert_eq!(i, table.index(q, p));
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn agrees_with_subset_search() {
        for seed in 0..300 {
            let n = 1 + seed as usize % 8;
            let k = 1 + seed as usize % 3;
            let a = random_automaton(n, k, seed).unwrap();
            let full = StateSet::full(n);
            let by_subsets = decide_sync_set(&a, &full, &SolverConfig::default())
                .unwrap()
                .is_some();
            assert_eq!(is_synchronizing(&a), by_subsets, "seed {seed}");
            match find_sync_word(&a) {
                Some(w) => assert_eq!(a.apply_word(&full, &w).unwrap().len(), 1),
                None => assert!(!by_subsets),
            }
        }
    }
}
