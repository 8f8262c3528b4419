use super::arena::Arena;
use super::{check_set, SolveError, SolverConfig, SyncWitness};
use crate::{Automaton, StateSet, Word};

/// Decides whether `set` is synchronizing.
///
/// Breadth-first search over the distinct images `δ(set, w)`, trying letters
/// in ascending order. The first singleton discovered gives the shortest
/// synchronizing word, and among shortest words the lexicographically
/// smallest. Returns `Ok(None)` once the reachable family of images is closed
/// without containing a singleton.
pub fn decide_sync_set(
    automaton: &Automaton,
    set: &StateSet,
    config: &SolverConfig,
) -> Result<Option<SyncWitness>, SolveError> {
    check_set(automaton, set)?;
    if let Some(target) = set.single() {
        return Ok(Some(SyncWitness {
            set: set.clone(),
            word: Word::empty(),
            target,
        }));
    }

    let mut arena = Arena::new();
    arena.push_root(set.clone());
    let mut head = 0;
    while head < arena.len() {
        for letter in 0..automaton.alphabet_size() {
            let image = automaton.image(arena.set(head), letter);
            if arena.contains(&image) {
                continue;
            }
            if arena.len() >= config.budget {
                return Err(SolveError::BudgetExhausted {
                    explored: arena.len(),
                    best: None,
                });
            }
            let single = image.single();
            let id = arena.push(image, head, letter);
            if let Some(target) = single {
                return Ok(Some(SyncWitness {
                    set: set.clone(),
                    word: arena.forward_word(id),
                    target,
                }));
            }
        }
        head += 1;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_automaton;
    use crate::Error;
    use alloc::vec;
    use alloc::vec::Vec;

    fn cycle3() -> Automaton {
        Automaton::from_fn(3, 1, |q, _| (q + 1) % 3).unwrap()
    }

    #[test]
    fn singleton_needs_no_word() {
        let a = cycle3();
        let s = StateSet::singleton(3, 2).unwrap();
        let w = decide_sync_set(&a, &s, &SolverConfig::default())
            .unwrap()
            .unwrap();
        assert!(w.word.is_empty());
        assert_eq!(w.target, 2);
    }

    #[test]
    fn permutation_never_synchronizes() {
        let s = StateSet::from_indices(3, [0, 1]).unwrap();
        assert_eq!(
            decide_sync_set(&cycle3(), &s, &SolverConfig::default()).unwrap(),
            None
        );
    }

    #[test]
    fn empty_set_rejected() {
        assert_eq!(
            decide_sync_set(&cycle3(), &StateSet::empty(3), &SolverConfig::default()),
            Err(SolveError::Input(Error::EmptySet))
        );
    }

    #[test]
    fn budget_is_reported() {
        // x -> x+1 (mod n) and x -> max(x-1, 0): many distinct images
        let n = 16;
        let a = Automaton::from_fn(n, 2, |q, l| {
            if l == 0 {
                (q + 1) % n
            } else {
                q.saturating_sub(1)
            }
        })
        .unwrap();
        let full = StateSet::full(n);
        let err = decide_sync_set(&a, &full, &SolverConfig::with_budget(3)).unwrap_err();
        assert!(matches!(
            err,
            SolveError::BudgetExhausted { explored: 3, .. }
        ));
        let w = decide_sync_set(&a, &full, &SolverConfig::default())
            .unwrap()
            .unwrap();
        assert!(w.verify(&a));
    }

    /// All words of length `len` over `k` letters in lexicographic order.
    fn words(k: usize, len: usize) -> impl Iterator<Item = Word> {
        let total = k.pow(len as u32);
        (0..total).map(move |mut code| {
            let mut letters = vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = code % k;
                code /= k;
            }
            Word::from(letters)
        })
    }

    fn synchronizes(a: &Automaton, s: &StateSet, w: &Word) -> bool {
        a.apply_word(s, w).unwrap().len() == 1
    }

    #[test]
    fn returned_word_is_shortest_then_smallest() {
        let mut checked = 0;
        for seed in 0..300u64 {
            let n = 2 + seed as usize % 5;
            let k = 1 + seed as usize % 3;
            let a = random_automaton(n, k, seed).unwrap();
            let members: Vec<usize> = (0..n).filter(|q| (seed >> q) & 1 == 1 || *q == 0).collect();
            let s = StateSet::from_indices(n, members).unwrap();
            let Some(w) = decide_sync_set(&a, &s, &SolverConfig::default()).unwrap() else {
                continue;
            };
            assert!(w.verify(&a));
            let len = w.word.len();
            if k.pow(len as u32) > 1 << 14 {
                continue;
            }
            for shorter in 0..len {
                assert!(
                    words(k, shorter).all(|u| !synchronizes(&a, &s, &u)),
                    "seed {seed}"
                );
            }
            let first = words(k, len).find(|u| synchronizes(&a, &s, u)).unwrap();
            assert_eq!(first, w.word, "seed {seed}");
            checked += 1;
        }
        assert!(checked > 100);
    }
}
