use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};

use crate::{StateSet, Word};

const ROOT: usize = usize::MAX;

pub(crate) struct Node {
    pub set: StateSet,
    parent: usize,
    letter: usize,
}

/// Deduplicated store of the subsets reached by a breadth-first search,
/// each remembering the node and letter it was reached from.
pub(crate) struct Arena {
    nodes: Vec<Node>,
    index: HashTable<usize>,
    hasher: DefaultHashBuilder,
}

impl Arena {
    pub fn new() -> Self {
        Arena {
            nodes: Vec::new(),
            index: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn set(&self, id: usize) -> &StateSet {
        &self.nodes[id].set
    }

    pub fn contains(&self, set: &StateSet) -> bool {
        let hash = self.hasher.hash_one(set);
        self.index
            .find(hash, |&id| self.nodes[id].set == *set)
            .is_some()
    }

    /// Any stored set that contains `set`.
    pub fn dominates(&self, set: &StateSet) -> bool {
        self.nodes.iter().any(|node| set.is_subset(&node.set))
    }

    pub fn push_root(&mut self, set: StateSet) -> usize {
        self.push(set, ROOT, 0)
    }

    /// Stores a set not yet present (callers check [`Arena::contains`]).
    pub fn push(&mut self, set: StateSet, parent: usize, letter: usize) -> usize {
        let id = self.nodes.len();
        let hash = self.hasher.hash_one(&set);
        let nodes = &self.nodes;
        let hasher = &self.hasher;
        self.index
            .insert_unique(hash, id, |&other| hasher.hash_one(&nodes[other].set));
        self.nodes.push(Node {
            set,
            parent,
            letter,
        });
        id
    }

    /// Letters on the path from the root to `id`, root side first.
    pub fn path(&self, mut id: usize) -> Vec<usize> {
        let mut letters = Vec::new();
        while self.nodes[id].parent != ROOT {
            letters.push(self.nodes[id].letter);
            id = self.nodes[id].parent;
        }
        letters.reverse();
        letters
    }

    pub fn root_of(&self, mut id: usize) -> usize {
        while self.nodes[id].parent != ROOT {
            id = self.nodes[id].parent;
        }
        id
    }

    /// Word along the path when the search applies letters forwards.
    pub fn forward_word(&self, id: usize) -> Word {
        Word::from(self.path(id))
    }

    /// Word along the path when the search takes preimages: the last
    /// preimage taken is the first letter read.
    pub fn backward_word(&self, id: usize) -> Word {
        let mut letters = self.path(id);
        letters.reverse();
        Word::from(letters)
    }
}
