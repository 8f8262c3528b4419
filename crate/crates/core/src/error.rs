use thiserror::Error;

/// Input validation failures shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("alphabet must have at least one letter")]
    EmptyAlphabet,
    #[error("transition table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("transition ({state}, {letter}) -> {target} is out of range for {states} states")]
    TransitionOutOfRange {
        state: usize,
        letter: usize,
        target: usize,
        states: usize,
    },
    #[error("expected {expected} state labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("letter {letter} is out of range for an alphabet of size {alphabet}")]
    InvalidLetter { letter: usize, alphabet: usize },
    #[error("state {state} is out of range for {states} states")]
    InvalidState { state: usize, states: usize },
    #[error("state set over {found} states used with an automaton of {expected} states")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("state set must not be empty")]
    EmptySet,
    #[error("automaton is not unary (alphabet size {0})")]
    NotUnary(usize),
    #[error("{what} is limited to {limit}, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {index} is a self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index} duplicates edge {{{u}, {v}}}")]
    DuplicateEdge { index: usize, u: usize, v: usize },
    #[error("edge {index} has endpoint {vertex} out of range for {vertices} vertices")]
    EndpointOutOfRange {
        index: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("edge probability must lie in [0, 1]")]
    InvalidProbability,
}
