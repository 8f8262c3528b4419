use alloc::vec;
use alloc::vec::Vec;

use super::{MaxSyncResult, SyncWitness};
use crate::{Automaton, Error, StateSet, Word};

/// `f^e` for a self-map `f` of `0..n`, by repeated squaring.
fn power(map: &[usize], mut e: usize) -> Vec<usize> {
    let mut result: Vec<usize> = (0..map.len()).collect();
    let mut base = map.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = result.iter().map(|&q| base[q]).collect();
        }
        base = base.iter().map(|&q| base[q]).collect();
        e >>= 1;
    }
    result
}

/// Max Sync Set for unary automata in polynomial time.
///
/// After `n` steps every state sits on a cycle, and from then on the letter
/// permutes the occupied states, so no further merging happens. The answer
/// is the largest class of states sharing the same image under `aⁿ` (ties:
/// the class with the smallest member), witnessed by the word `aⁿ`.
pub fn max_sync_set_unary(automaton: &Automaton) -> Result<MaxSyncResult, Error> {
    if !automaton.is_unary() {
        return Err(Error::NotUnary(automaton.alphabet_size()));
    }
    let n = automaton.state_count();
    let map: Vec<usize> = (0..n).map(|q| automaton.next(q, 0)).collect();
    let image = power(&map, n);

    let mut counts = vec![0usize; n];
    for &t in &image {
        counts[t] += 1;
    }
    let mut target = image[0];
    for &t in &image {
        if counts[t] > counts[target] {
            target = t;
        }
    }
    let set = StateSet::from_indices(n, (0..n).filter(|&q| image[q] == target))?;
    Ok(MaxSyncResult {
        size: counts[target],
        best: SyncWitness {
            set,
            word: Word::repeat(0, n),
            target,
        },
        explored: n,
    })
}
