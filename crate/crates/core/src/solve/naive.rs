use itertools::Itertools;

use super::forward::decide_sync_set;
use super::{MaxSyncResult, SolveError, SolverConfig};
use crate::{Automaton, Error, StateSet};

/// Largest automaton accepted by [`max_sync_set_naive`].
pub const NAIVE_MAX_STATES: usize = 12;

/// Brute-force Max Sync Set: tries every subset, largest cardinality first
/// and lexicographic order within a cardinality, and returns the first one
/// [`decide_sync_set`] accepts. `explored` counts the subsets tried.
pub fn max_sync_set_naive(
    automaton: &Automaton,
    config: &SolverConfig,
) -> Result<MaxSyncResult, SolveError> {
    let n = automaton.state_count();
    if n > NAIVE_MAX_STATES {
        return Err(Error::TooLarge {
            what: "naive Max Sync Set input",
            limit: NAIVE_MAX_STATES,
            got: n,
        }
        .into());
    }
    let mut explored = 0;
    for size in (1..=n).rev() {
        for members in (0..n).combinations(size) {
            explored += 1;
            let set = StateSet::from_indices(n, members)?;
            if let Some(best) = decide_sync_set(automaton, &set, config)? {
                return Ok(MaxSyncResult {
                    best,
                    size,
                    explored,
                });
            }
        }
    }
    unreachable!("every singleton is synchronizing")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_cases() {
        let config = SolverConfig::default();
        let merge = Automaton::new(2, 1, vec![1, 1]).unwrap();
        assert_eq!(max_sync_set_naive(&merge, &config).unwrap().size, 2);
        let cycle = Automaton::from_fn(3, 1, |q, _| (q + 1) % 3).unwrap();
        assert_eq!(max_sync_set_naive(&cycle, &config).unwrap().size, 1);
    }

    #[test]
    fn size_limit_enforced() {
        let big = Automaton::from_fn(13, 1, |q, _| q).unwrap();
        assert!(matches!(
            max_sync_set_naive(&big, &SolverConfig::default()),
            Err(SolveError::Input(Error::TooLarge { .. }))
        ));
    }
}
