//! Seeded instance generators.
//!
//! Every generator draws from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `SeedableRng::seed_from_u64(seed)`, and samples integers with
//! `Rng::gen_range` / `Rng::gen_bool` from `rand` 0.8. Both algorithms are
//! value-stable and platform-independent, so a seed pins the instance.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Automaton, Error};

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An automaton whose `n * k` transitions are drawn independently and
/// uniformly from `0..n`, in row-major order.
pub fn random_automaton(n: usize, k: usize, seed: u64) -> Result<Automaton, Error> {
    if n == 0 {
        return Err(Error::NoStates);
    }
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let mut rng = seeded_rng(seed);
    let delta: Vec<usize> = (0..n * k).map(|_| rng.gen_range(0..n)).collect();
    Automaton::new(n, k, delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_state_is_a_self_loop() {
        for seed in 0..5 {
            let a = random_automaton(1, 1, seed).unwrap();
            assert_eq!(a.next(0, 0), 0);
        }
    }

    #[test]
    fn reproducible_and_seed_sensitive() {
        let a = random_automaton(5, 2, 42).unwrap();
        assert_eq!(a, random_automaton(5, 2, 42).unwrap());
        assert_ne!(a, random_automaton(5, 2, 43).unwrap());
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert_eq!(random_automaton(0, 2, 1), Err(Error::NoStates));
        assert_eq!(random_automaton(3, 0, 1), Err(Error::EmptyAlphabet));
    }
}
