//! Backward search over full preimages.
//!
//! Every synchronizing set `S` with word `w` and target `q` lies inside the
//! full preimage `δ_w⁻¹(q)`, which is itself synchronizing. The maximal
//! synchronizing sets are therefore exactly the maximal members of the family
//! reached from the singletons by taking letter preimages
//! `T ↦ {q : δ(q, a) ∈ T}`, and a breadth-first walk of that family finds
//! every one of them at the length of its shortest word.

use alloc::boxed::Box;
use core::cmp::Ordering;

use super::arena::Arena;
use super::forward::decide_sync_set;
use super::{check_set, MaxSyncResult, SolveError, SolverConfig, SyncWitness};
use crate::{Automaton, StateSet};

enum Exploration {
    Complete(Arena),
    Stopped,
    Exhausted(Arena),
}

/// Walks the preimage family in breadth-first order, calling `stop` on every
/// stored subset. The singletons `{0}, …, {n-1}` are the roots.
fn explore(
    automaton: &Automaton,
    config: &SolverConfig,
    mut stop: impl FnMut(&Arena, usize) -> bool,
) -> Exploration {
    let mut arena = Arena::new();
    let n = automaton.state_count();
    for q in 0..n {
        if arena.len() >= config.budget {
            return Exploration::Exhausted(arena);
        }
        let id = arena.push_root(StateSet::singleton(n, q).expect("state in range"));
        if stop(&arena, id) {
            return Exploration::Stopped;
        }
    }
    let mut head = 0;
    while head < arena.len() {
        for letter in 0..automaton.alphabet_size() {
            let pre = automaton.preimage_unchecked(arena.set(head), letter);
            if pre.is_empty() || arena.contains(&pre) {
                continue;
            }
            if config.antichain_pruning && arena.dominates(&pre) {
                continue;
            }
            if arena.len() >= config.budget {
                return Exploration::Exhausted(arena);
            }
            let id = arena.push(pre, head, letter);
            if stop(&arena, id) {
                return Exploration::Stopped;
            }
        }
        head += 1;
    }
    Exploration::Complete(arena)
}

/// Larger first, then lexicographically smaller.
fn better(candidate: &StateSet, incumbent: &StateSet) -> bool {
    match candidate.len().cmp(&incumbent.len()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => candidate < incumbent,
    }
}

fn chain_witness(automaton: &Automaton, arena: &Arena, id: usize) -> SyncWitness {
    let word = arena.backward_word(id);
    let root = arena.root_of(id);
    let target = arena.set(root).first().expect("roots are singletons");
    debug_assert_eq!(automaton.run(arena.set(id).first().unwrap(), &word), target);
    SyncWitness {
        set: arena.set(id).clone(),
        word,
        target,
    }
}

/// Replaces the witness word by the shortest, lexicographically smallest
/// one when the forward search fits in the budget.
fn canonical_witness(
    automaton: &Automaton,
    fallback: SyncWitness,
    config: &SolverConfig,
) -> SyncWitness {
    match decide_sync_set(automaton, &fallback.set, config) {
        Ok(Some(witness)) => {
            debug_assert!(witness.word.len() <= fallback.word.len());
            witness
        }
        _ => fallback,
    }
}

/// A largest synchronizing set, exactly.
///
/// Among several maxima the lexicographically smallest set is returned, with
/// its shortest (then lexicographically smallest) synchronizing word.
/// `explored` counts the subsets stored by the backward search. When the
/// budget runs out the error carries the best set found so far.
pub fn max_sync_set_exact(
    automaton: &Automaton,
    config: &SolverConfig,
) -> Result<MaxSyncResult, SolveError> {
    let mut best = 0;
    let outcome = explore(automaton, config, |arena, id| {
        if id == 0 || better(arena.set(id), arena.set(best)) {
            best = id;
        }
        false
    });
    match outcome {
        Exploration::Complete(arena) => {
            let witness =
                canonical_witness(automaton, chain_witness(automaton, &arena, best), config);
            Ok(MaxSyncResult {
                size: witness.set.len(),
                best: witness,
                explored: arena.len(),
            })
        }
        Exploration::Exhausted(arena) => Err(SolveError::BudgetExhausted {
            explored: arena.len(),
            best: (arena.len() > 0).then(|| {
                let witness = chain_witness(automaton, &arena, best);
                Box::new(MaxSyncResult {
                    size: witness.set.len(),
                    best: witness,
                    explored: arena.len(),
                })
            }),
        }),
        Exploration::Stopped => unreachable!("exact search never stops early"),
    }
}

/// Whether some synchronizing set has at least `threshold` states. Stops as
/// soon as the backward search stores a subset that large.
pub fn max_sync_set_decision(
    automaton: &Automaton,
    threshold: usize,
    config: &SolverConfig,
) -> Result<bool, SolveError> {
    if threshold <= 1 {
        return Ok(true);
    }
    if threshold > automaton.state_count() {
        return Ok(false);
    }
    let mut largest = 0;
    let outcome = explore(automaton, config, |arena, id| {
        largest = largest.max(arena.set(id).len());
        largest >= threshold
    });
    match outcome {
        Exploration::Stopped => Ok(true),
        Exploration::Complete(_) => Ok(false),
        Exploration::Exhausted(arena) => Err(SolveError::Indeterminate {
            explored: arena.len(),
            best_size: largest,
        }),
    }
}

/// A largest synchronizing subset of `candidates`.
///
/// Every synchronizing subset of `candidates` lies in some full preimage, so
/// the answer is the largest intersection of a preimage with `candidates`
/// (ties broken lexicographically).
pub fn max_sync_subset_within(
    automaton: &Automaton,
    candidates: &StateSet,
    config: &SolverConfig,
) -> Result<MaxSyncResult, SolveError> {
    check_set(automaton, candidates)?;
    let mut best: Option<(StateSet, usize)> = None;
    let outcome = explore(automaton, config, |arena, id| {
        let part = arena.set(id).intersection(candidates);
        if !part.is_empty() && best.as_ref().is_none_or(|(b, _)| better(&part, b)) {
            best = Some((part, id));
        }
        false
    });
    let witness_for = |arena: &Arena, (part, id): (StateSet, usize)| {
        let chain = chain_witness(automaton, arena, id);
        SyncWitness {
            set: part,
            word: chain.word,
            target: chain.target,
        }
    };
    match outcome {
        Exploration::Complete(arena) => {
            let found = best.expect("candidates are nonempty and singletons are roots");
            let witness = canonical_witness(automaton, witness_for(&arena, found), config);
            Ok(MaxSyncResult {
                size: witness.set.len(),
                best: witness,
                explored: arena.len(),
            })
        }
        Exploration::Exhausted(arena) => Err(SolveError::BudgetExhausted {
            explored: arena.len(),
            best: best.map(|found| {
                let witness = witness_for(&arena, found);
                Box::new(MaxSyncResult {
                    size: witness.set.len(),
                    best: witness,
                    explored: arena.len(),
                })
            }),
        }),
        Exploration::Stopped => unreachable!("subset search never stops early"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_automaton;
    use crate::solve::max_sync_set_naive;
    use alloc::vec;

    #[test]
    fn trivial_instances() {
        let one = Automaton::new(1, 1, vec![0]).unwrap();
        let r = max_sync_set_exact(&one, &SolverConfig::default()).unwrap();
        assert_eq!(r.size, 1);
        assert!(r.best.verify(&one));

        let merge = Automaton::new(2, 1, vec![1, 1]).unwrap();
        let r = max_sync_set_exact(&merge, &SolverConfig::default()).unwrap();
        assert_eq!(r.size, 2);
        assert_eq!(r.best.word.letters(), &[0]);

        let cycle = Automaton::from_fn(3, 1, |q, _| (q + 1) % 3).unwrap();
        let r = max_sync_set_exact(&cycle, &SolverConfig::default()).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.best.set, StateSet::singleton(3, 0).unwrap());
    }

    #[test]
    fn decision_thresholds() {
        let config = SolverConfig::default();
        let one = Automaton::new(1, 1, vec![0]).unwrap();
        assert!(max_sync_set_decision(&one, 1, &config).unwrap());
        let cycle = Automaton::from_fn(3, 1, |q, _| (q + 1) % 3).unwrap();
        assert!(!max_sync_set_decision(&cycle, 2, &config).unwrap());
        assert!(max_sync_set_decision(&cycle, 0, &config).unwrap());
        assert!(!max_sync_set_decision(&cycle, 4, &config).unwrap());
    }

    #[test]
    fn exhaustion_carries_a_lower_bound() {
        let a = random_automaton(30, 2, 5).unwrap();
        match max_sync_set_exact(&a, &SolverConfig::with_budget(10)) {
            Err(SolveError::BudgetExhausted {
                explored,
                best: Some(best),
            }) => {
                assert_eq!(explored, 10);
                assert!(best.best.verify(&a));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            max_sync_set_decision(&a, 25, &SolverConfig::with_budget(40)),
            Err(SolveError::Indeterminate { .. })
        ));
    }

    #[test]
    fn pruning_does_not_change_the_answer() {
        let pruned = SolverConfig {
            antichain_pruning: true,
            ..SolverConfig::default()
        };
        for seed in 0..60 {
            let a = random_automaton(7, 2, seed).unwrap();
            let plain = max_sync_set_exact(&a, &SolverConfig::default()).unwrap();
            let fast = max_sync_set_exact(&a, &pruned).unwrap();
            assert_eq!(plain.best, fast.best);
            assert!(fast.explored <= plain.explored);
        }
    }

    #[test]
    fn agrees_with_naive_on_fixed_seed() {
        let a = random_automaton(8, 2, 7).unwrap();
        let exact = max_sync_set_exact(&a, &SolverConfig::default()).unwrap();
        let naive = max_sync_set_naive(&a, &SolverConfig::default()).unwrap();
        assert_eq!(exact.size, naive.size);
        assert_eq!(exact.best, naive.best);
    }

    #[test]
    fn subset_within_restricts_to_candidates() {
        let cycle = Automaton::from_fn(4, 1, |q, _| (q + 1) % 4).unwrap();
        let c = StateSet::from_indices(4, [1, 3]).unwrap();
        let r = max_sync_subset_within(&cycle, &c, &SolverConfig::default()).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.best.set, StateSet::singleton(4, 1).unwrap());
        assert!(r.best.verify(&cycle));
    }
}
