//! Synchronizing sets of states in complete deterministic automata.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only the pure
//! algorithmic parts:
//!
//! - [`Automaton`], [`StateSet`] and [`Word`] with image/preimage operations
//!   and the unary, binary and weakly acyclic classifications;
//! - [`solve`]: a polynomial whole-automaton check via the pair automaton,
//!   exact forward (Sync Set) and backward (Max Sync Set) lattice searches,
//!   the polynomial unary algorithm, and a brute-force oracle;
//! - [`graph`]: simple undirected graphs with an exact maximum independent
//!   set oracle;
//! - [`reductions`]: builders for the padding construction and the three
//!   independent-set gadgets, each annotated with its predicted optimum.
//!
//! File formats, rendering and the command-line tool live in the `syncset`
//! crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod automaton;
mod error;
pub mod graph;
pub mod random;
pub mod reductions;
pub mod solve;
mod state_set;

pub use automaton::{Automaton, Word};
pub use error::Error;
pub use graph::{Graph, IndependentSetResult};
pub use state_set::StateSet;
