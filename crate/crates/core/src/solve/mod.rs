//! Decision and optimization procedures for synchronizing sets.
//!
//! | problem | routine | cost |
//! |---|---|---|
//! | is `Q` synchronizing? | [`is_synchronizing`], [`find_sync_word`] | polynomial (pair automaton) |
//! | is `S` synchronizing? | [`decide_sync_set`] | forward search over images of `S` |
//! | largest synchronizing set | [`max_sync_set_exact`] | backward search over full preimages |
//! | same, unary automata | [`max_sync_set_unary`] | polynomial |
//! | same, brute force | [`max_sync_set_naive`] | all `2^n` subsets, `n <= 12` |
//!
//! The exponential searches count every distinct subset they store against
//! [`SolverConfig::budget`] and report exhaustion as an error of its own, so
//! a resource limit is never mistaken for a negative answer.

use alloc::boxed::Box;

use thiserror::Error;

use crate::{Automaton, Error, StateSet, Word};

mod arena;
mod backward;
mod forward;
mod naive;
mod pairs;
mod unary;

pub use backward::{max_sync_set_decision, max_sync_set_exact, max_sync_subset_within};
pub use forward::decide_sync_set;
pub use naive::{max_sync_set_naive, NAIVE_MAX_STATES};
pub use pairs::{find_sync_word, is_synchronizing};
pub use unary::max_sync_set_unary;

/// Default node budget of the exponential searches.
pub const DEFAULT_BUDGET: usize = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of distinct subsets a search may store.
    pub budget: usize,
    /// Skip preimages contained in an already stored subset during the
    /// backward search. Costs a linear scan per candidate.
    pub antichain_pruning: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            antichain_pruning: false,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: usize) -> Self {
        SolverConfig {
            budget,
            ..Self::default()
        }
    }
}

/// A nonempty set together with a word mapping all of it onto `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncWitness {
    pub set: StateSet,
    pub word: Word,
    pub target: usize,
}

impl SyncWitness {
    /// Replays the word: true iff it maps the set exactly onto `{target}`.
    pub fn verify(&self, automaton: &Automaton) -> bool {
        !self.set.is_empty()
            && automaton
                .apply_word(&self.set, &self.word)
                .is_ok_and(|image| image.single() == Some(self.target))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSyncResult {
    pub best: SyncWitness,
    pub size: usize,
    /// Subsets (or candidates) examined; diagnostics only.
    pub explored: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Input(#[from] Error),
    /// The node budget ran out. For optimization searches `best` carries the
    /// largest synchronizing set found so far, a lower bound on the optimum.
    #[error("node budget exhausted after {explored} subsets")]
    BudgetExhausted {
        explored: usize,
        best: Option<Box<MaxSyncResult>>,
    },
    /// A threshold query ran out of budget before either reaching the
    /// threshold or closing the search.
    #[error("undetermined: budget exhausted after {explored} subsets, largest set found has size {best_size}")]
    Indeterminate { explored: usize, best_size: usize },
}

fn check_set(automaton: &Automaton, set: &StateSet) -> Result<(), Error> {
    if set.universe() != automaton.state_count() {
        return Err(Error::UniverseMismatch {
            expected: automaton.state_count(),
            found: set.universe(),
        });
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}
