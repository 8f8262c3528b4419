//! Instance builders for the hardness reductions.
//!
//! Each builder returns a [`GadgetArtifact`]: the automaton, the construction
//! role of every state, and the Max Sync Set value (or bounds, or threshold)
//! the construction predicts.
//!
//! Layered gadgets number their states in contiguous blocks:
//!
//! 1. `v(i)_j` for layers `i = 1..p`, vertex `j = 1..p` (layer-major),
//! 2. `u(i)_j` in the same order,
//! 3. the sink `f`,
//! 4. cycle states `c2..cp` (cyclic variant only),
//! 5. extra copies `2..` of the first layer, each copy as `v(1)_1..v(1)_p`
//!    followed by `u(1)_1..u(1)_p`.
//!
//! So the unreplicated automaton is a prefix of the replicated one.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::max_independent_set;
use crate::{Automaton, Error, Graph, StateSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    /// Padding by `n + 1` fresh states per chosen state.
    Padding,
    /// One letter per vertex, states `s_i, t_i, f`.
    WeaklyAcyclic,
    /// Layered binary gadget with a `p`-cycle, first layer repeated `p` times.
    Binary,
    /// Layered binary gadget with its cycle, first layer not repeated.
    BinaryFirstLayer,
    /// Layered binary gadget with absorbing sink, first layer repeated `p²` times.
    BinaryWeaklyAcyclic,
}

impl GadgetKind {
    /// Short command-line name.
    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Padding => "thm1",
            GadgetKind::WeaklyAcyclic => "thm2",
            GadgetKind::Binary => "thm3",
            GadgetKind::BinaryFirstLayer => "lemma2",
            GadgetKind::BinaryWeaklyAcyclic => "thm4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LayerState {
    V,
    U,
}

/// What a gadget state stands for. Vertex, layer and copy numbers are
/// 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// State of the source automaton of the padding construction.
    Original {
        state: usize,
    },
    /// Fresh state number `index` sending every letter to `target`.
    Padding {
        target: usize,
        index: usize,
    },
    /// `s_i`: sent to the sink by its own letter.
    Source {
        vertex: usize,
    },
    /// `t_i`: where `s_i` goes on a neighbour's letter.
    Blocked {
        vertex: usize,
    },
    Sink,
    Layer {
        state: LayerState,
        layer: usize,
        vertex: usize,
        copy: usize,
    },
    /// Cycle state at distance `position` (`1..p`) after the sink.
    Cycle {
        position: usize,
    },
}

impl Role {
    /// Human-readable name in construction notation (1-based).
    pub fn label(&self) -> String {
        match *self {
            Role::Original { state } => format!("q{state}"),
            Role::Padding { target, index } => format!("pad{target}.{index}"),
            Role::Source { vertex } => format!("s{}", vertex + 1),
            Role::Blocked { vertex } => format!("t{}", vertex + 1),
            Role::Sink => String::from("f"),
            Role::Layer {
                state,
                layer,
                vertex,
                copy,
            } => {
                let kind = match state {
                    LayerState::V => 'v',
                    LayerState::U => 'u',
                };
                if copy == 0 {
                    format!("{kind}({})_{}", layer + 1, vertex + 1)
                } else {
                    format!("{kind}({})_{}#{}", layer + 1, vertex + 1, copy + 1)
                }
            }
            Role::Cycle { position } => format!("c{}", position + 1),
        }
    }

    pub fn is_first_layer_v(&self) -> bool {
        matches!(
            self,
            Role::Layer {
                state: LayerState::V,
                layer: 0,
                ..
            }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Largest synchronizing set of the whole automaton.
    Automaton,
    /// Largest synchronizing subset of the first-layer `v` states.
    FirstLayer,
}

/// The quantity a construction predicts for its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Exact {
        value: usize,
        scope: Scope,
        /// False when the prediction relies on a hypothesis the input does
        /// not satisfy (binary gadget with `α(G) = 1`).
        precondition_met: bool,
    },
    Bounds {
        lower: usize,
        upper: usize,
    },
    /// A synchronizing set of at least `c` states exists iff the source set
    /// is synchronizing in the source automaton.
    Threshold {
        c: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Params {
    Padding {
        source: Automaton,
        set: StateSet,
        /// States of the source automaton.
        n: usize,
        c: usize,
    },
    Graph {
        graph: Graph,
        p: usize,
        alpha: usize,
        /// How many times the first layer occurs (1 for the unlayered gadget).
        copies: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetArtifact {
    pub kind: GadgetKind,
    pub automaton: Automaton,
    pub roles: Vec<Role>,
    pub expected: Expected,
    pub params: Params,
}

impl GadgetArtifact {
    fn assemble(
        kind: GadgetKind,
        states: usize,
        alphabet: usize,
        roles: Vec<Role>,
        next: impl FnMut(usize, usize) -> usize,
        expected: Expected,
        params: Params,
    ) -> Result<Self, Error> {
        debug_assert_eq!(roles.len(), states);
        let labels = roles.iter().map(Role::label).collect();
        let automaton = Automaton::from_fn(states, alphabet, next)?.with_labels(labels)?;
        Ok(GadgetArtifact {
            kind,
            automaton,
            roles,
            expected,
            params,
        })
    }

    /// All states whose role matches `pred`.
    pub fn states_where(&self, pred: impl Fn(&Role) -> bool) -> StateSet {
        let n = self.automaton.state_count();
        StateSet::from_indices(n, (0..n).filter(|&q| pred(&self.roles[q]))).expect("in range")
    }

    /// The `v` states of the first layer, every copy included.
    pub fn first_layer(&self) -> StateSet {
        self.states_where(Role::is_first_layer_v)
    }

    /// Drops states unreachable from the first layer. Only the layered
    /// gadgets have a first layer; other artifacts are returned unchanged.
    pub fn prune_unreachable(&self) -> GadgetArtifact {
        let roots = self.first_layer();
        if roots.is_empty() {
            return self.clone();
        }
        let keep = self
            .automaton
            .reachable_from(&roots)
            .expect("same universe");
        let (automaton, kept) = self
            .automaton
            .restrict(&keep)
            .expect("reachable sets are closed");
        GadgetArtifact {
            automaton,
            roles: kept.iter().map(|&q| self.roles[q]).collect(),
            ..self.clone()
        }
    }
}

/// Padding construction: a copy of `source` plus, for each `s ∈ set`, `n + 1`
/// fresh states sending every letter to `s`. The threshold is
/// `c = (n + 1)|set|`.
pub fn padding_construction(source: &Automaton, set: &StateSet) -> Result<GadgetArtifact, Error> {
    let n = source.state_count();
    if set.universe() != n {
        return Err(Error::UniverseMismatch {
            expected: n,
            found: set.universe(),
        });
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let chosen = set.to_vec();
    let c = (n + 1) * chosen.len();
    let mut roles: Vec<Role> = (0..n).map(|state| Role::Original { state }).collect();
    for &target in &chosen {
        roles.extend((0..=n).map(|index| Role::Padding { target, index }));
    }
    GadgetArtifact::assemble(
        GadgetKind::Padding,
        roles.len(),
        source.alphabet_size(),
        roles,
        |q, a| {
            if q < n {
                source.next(q, a)
            } else {
                chosen[(q - n) / (n + 1)]
            }
        },
        Expected::Threshold { c },
        Params::Padding {
            source: source.clone(),
            set: set.clone(),
            n,
            c,
        },
    )
}

/// The weakly acyclic gadget over one letter per vertex.
///
/// States `s_i, t_i` per vertex and a sink `f` (`2p + 1` states). Letter
/// `i` sends `s_i` to `f`, and for every edge `{i, j}` letter `j` sends `s_i`
/// to `t_i` and letter `i` sends `s_j` to `t_j`. All other transitions are
/// self-loops. The predicted optimum is `α(G) + 1`.
pub fn gadget_weakly_acyclic(graph: &Graph) -> Result<GadgetArtifact, Error> {
    let p = graph.vertex_count();
    let alpha = max_independent_set(graph)?.size;
    let sink = 2 * p;
    let mut roles: Vec<Role> = (0..p).map(|vertex| Role::Source { vertex }).collect();
    roles.extend((0..p).map(|vertex| Role::Blocked { vertex }));
    roles.push(Role::Sink);
    GadgetArtifact::assemble(
        GadgetKind::WeaklyAcyclic,
        2 * p + 1,
        p,
        roles,
        |q, letter| {
            if q >= p {
                q
            } else if letter == q {
                sink
            } else if graph.has_edge(q, letter) {
                p + q
            } else {
                q
            }
        },
        Expected::Exact {
            value: alpha + 1,
            scope: Scope::Automaton,
            precondition_met: true,
        },
        Params::Graph {
            graph: graph.clone(),
            p,
            alpha,
            copies: 1,
        },
    )
}

struct Layout {
    p: usize,
    cycle: bool,
    copies: usize,
}

impl Layout {
    fn v(&self, layer: usize, vertex: usize) -> usize {
        layer * self.p + vertex
    }

    fn u(&self, layer: usize, vertex: usize) -> usize {
        self.p * self.p + layer * self.p + vertex
    }

    fn sink(&self) -> usize {
        2 * self.p * self.p
    }

    fn cycle_state(&self, position: usize) -> usize {
        self.sink() + position
    }

    fn copy_base(&self, copy: usize) -> usize {
        let after_sink = self.sink() + 1 + if self.cycle { self.p - 1 } else { 0 };
        after_sink + (copy - 1) * 2 * self.p
    }

    fn first_layer_v(&self, vertex: usize, copy: usize) -> usize {
        if copy == 0 {
            self.v(0, vertex)
        } else {
            self.copy_base(copy) + vertex
        }
    }

    fn first_layer_u(&self, vertex: usize, copy: usize) -> usize {
        if copy == 0 {
            self.u(0, vertex)
        } else {
            self.copy_base(copy) + self.p + vertex
        }
    }

    fn state_count(&self) -> usize {
        self.copy_base(self.copies)
    }

    fn roles(&self) -> Vec<Role> {
        let p = self.p;
        let mut roles = Vec::with_capacity(self.state_count());
        for state in [LayerState::V, LayerState::U] {
            for layer in 0..p {
                roles.extend((0..p).map(|vertex| Role::Layer {
                    state,
                    layer,
                    vertex,
                    copy: 0,
                }));
            }
        }
        roles.push(Role::Sink);
        if self.cycle {
            roles.extend((1..p).map(|position| Role::Cycle { position }));
        }
        for copy in 1..self.copies {
            for state in [LayerState::V, LayerState::U] {
                roles.extend((0..p).map(|vertex| Role::Layer {
                    state,
                    layer: 0,
                    vertex,
                    copy,
                }));
            }
        }
        roles
    }

    /// Successor of a layered state; letter 0 diverts `v(i)_i`, letter 1
    /// diverts `v(i)_j` for every edge `{v_i, v_j}`.
    fn next(&self, graph: &Graph, role: Role, letter: usize) -> usize {
        match role {
            Role::Layer {
                state: LayerState::U,
                layer,
                vertex,
                copy,
            } => {
                if layer == 0 {
                    self.first_layer_u(vertex, copy)
                } else {
                    self.u(layer, vertex)
                }
            }
            Role::Layer {
                state: LayerState::V,
                layer,
                vertex,
                copy,
            } => {
                let diverted = match letter {
                    0 => layer == vertex,
                    _ => graph.has_edge(layer, vertex),
                };
                if diverted {
                    if layer == 0 {
                        self.first_layer_u(vertex, copy)
                    } else {
                        self.u(layer, vertex)
                    }
                } else if layer + 1 == self.p {
                    self.sink()
                } else {
                    self.v(layer + 1, vertex)
                }
            }
            Role::Sink if self.cycle => self.cycle_state(1),
            Role::Sink => self.sink(),
            Role::Cycle { position } if position + 1 == self.p => self.sink(),
            Role::Cycle { position } => self.cycle_state(position + 1),
            _ => unreachable!("not a layered role"),
        }
    }
}

fn layered(
    graph: &Graph,
    kind: GadgetKind,
    cycle: bool,
    copies: usize,
    expected: impl FnOnce(usize, usize) -> Expected,
) -> Result<GadgetArtifact, Error> {
    let p = graph.vertex_count();
    if p < 2 {
        return Err(Error::TooSmall {
            what: "layered gadget vertex count",
            min: 2,
            got: p,
        });
    }
    let alpha = max_independent_set(graph)?.size;
    let layout = Layout { p, cycle, copies };
    let roles = layout.roles();
    debug_assert_eq!(roles.len(), layout.state_count());
    debug_assert!(roles.iter().enumerate().all(|(q, role)| match *role {
        Role::Layer {
            state: LayerState::V,
            layer: 0,
            vertex,
            copy,
        } => layout.first_layer_v(vertex, copy) == q,
        _ => true,
    }));
    GadgetArtifact::assemble(
        kind,
        roles.len(),
        2,
        roles.clone(),
        |q, letter| layout.next(graph, roles[q], letter),
        expected(p, alpha),
        Params::Graph {
            graph: graph.clone(),
            p,
            alpha,
            copies,
        },
    )
}

/// The binary gadget: `p` layers, a `p`-cycle through the sink, and the
/// first layer repeated `p` times, `4p² − p` states in total. Predicts
/// `p·α(G) + 1`, a prediction that requires `α(G) > 1`.
pub fn gadget_binary(graph: &Graph) -> Result<GadgetArtifact, Error> {
    let p = graph.vertex_count();
    layered(graph, GadgetKind::Binary, true, p, |p, alpha| {
        Expected::Exact {
            value: p * alpha + 1,
            scope: Scope::Automaton,
            precondition_met: alpha > 1,
        }
    })
}

/// The binary gadget before first-layer repetition (`2p² + p` states). Its
/// largest synchronizing subset of first-layer `v` states has `α(G)`
/// states.
pub fn gadget_binary_pre_replication(graph: &Graph) -> Result<GadgetArtifact, Error> {
    layered(graph, GadgetKind::BinaryFirstLayer, true, 1, |_, alpha| {
        Expected::Exact {
            value: alpha,
            scope: Scope::FirstLayer,
            precondition_met: true,
        }
    })
}

/// The binary weakly acyclic gadget: no cycle, the sink absorbs both letters,
/// and the first layer is repeated `p²` times (`2p³ + 2p(p−1) + 1` states).
/// The optimum lies in `[p²α(G), p²α(G) + p(p−1) + 1]`.
pub fn gadget_binary_weakly_acyclic(graph: &Graph) -> Result<GadgetArtifact, Error> {
    let p = graph.vertex_count();
    layered(
        graph,
        GadgetKind::BinaryWeaklyAcyclic,
        false,
        p * p,
        |p, alpha| Expected::Bounds {
            lower: p * p * alpha,
            upper: p * p * alpha + p * (p - 1) + 1,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{max_sync_set_naive, SolverConfig};
    use crate::Word;
    use alloc::vec;

    /// Three vertices, one edge between the second and third.
    fn path_graph() -> Graph {
        Graph::new(3, [(1, 2)]).unwrap()
    }

    fn by_label(a: &Automaton, label: &str) -> usize {
        a.labels().unwrap().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn padding_sizes() {
        let a = Automaton::new(2, 1, vec![1, 1]).unwrap();
        let s = StateSet::full(2);
        let art = padding_construction(&a, &s).unwrap();
        assert_eq!(art.automaton.state_count(), 2 + 3 * 2);
        assert_eq!(art.expected, Expected::Threshold { c: 6 });
        assert_eq!(art.automaton.alphabet_size(), 1);
        assert_eq!(
            padding_construction(&a, &StateSet::empty(2)).unwrap_err(),
            Error::EmptySet
        );
    }

    #[test]
    fn weakly_acyclic_gadget_shape() {
        let single = gadget_weakly_acyclic(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(single.automaton.state_count(), 3);
        assert_eq!(
            single.expected,
            Expected::Exact {
                value: 2,
                scope: Scope::Automaton,
                precondition_met: true
            }
        );
        let art = gadget_weakly_acyclic(&path_graph()).unwrap();
        let a = &art.automaton;
        assert_eq!((a.state_count(), a.alphabet_size()), (7, 3));
        assert!(a.is_weakly_acyclic());
        // s1 -> f on letter 1; s2 -> t2 on letter 3; s3 -> t3 on letter 2
        assert_eq!(a.next(0, 0), 6);
        assert_eq!(a.next(1, 2), 4);
        assert_eq!(a.next(2, 1), 5);
        assert_eq!(a.next(0, 1), 0);
        let naive = max_sync_set_naive(a, &SolverConfig::default()).unwrap();
        assert_eq!(naive.size, 3);
    }

    #[test]
    fn binary_gadget_sizes_and_replication() {
        for p in 2..=4 {
            let g = Graph::complete(p).unwrap();
            let full = gadget_binary(&g).unwrap();
            assert_eq!(full.automaton.state_count(), 4 * p * p - p);
            let pre = gadget_binary_pre_replication(&g).unwrap();
            assert_eq!(pre.automaton.state_count(), 2 * p * p + p);
            let wa = gadget_binary_weakly_acyclic(&g).unwrap();
            assert_eq!(
                wa.automaton.state_count(),
                2 * p * p * p + 2 * p * (p - 1) + 1
            );
            assert!(wa.automaton.is_weakly_acyclic());
            assert!(!full.automaton.is_weakly_acyclic());
            assert_eq!(full.first_layer().len(), p * p);
            assert_eq!(wa.first_layer().len(), p * p * p);

            // the replicated automaton extends the unreplicated one
            for q in 0..pre.automaton.state_count() {
                assert_eq!(pre.automaton.row(q), full.automaton.row(q));
            }
        }
        assert!(gadget_binary(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn copies_mirror_the_first_layer() {
        let art = gadget_binary(&path_graph()).unwrap();
        let a = &art.automaton;
        for (q, role) in art.roles.iter().enumerate() {
            if let Role::Layer {
                state: LayerState::V,
                layer: 0,
                vertex,
                copy,
            } = *role
            {
                let original = by_label(a, &format!("v(1)_{}", vertex + 1));
                for letter in 0..2 {
                    let (t, t0) = (a.next(q, letter), a.next(original, letter));
                    match art.roles[t0] {
                        Role::Layer {
                            state: LayerState::U,
                            ..
                        } => assert_eq!(
                            art.roles[t],
                            Role::Layer {
                                state: LayerState::U,
                                layer: 0,
                                vertex,
                                copy
                            }
                        ),
                        _ => assert_eq!(t, t0),
                    }
                }
            }
        }
    }

    #[test]
    fn first_layer_word_from_an_independent_set() {
        // letter i is 1 exactly for the vertices of the independent set
        let art = gadget_binary_pre_replication(&Graph::empty(3).unwrap()).unwrap();
        let a = &art.automaton;
        let image = a
            .apply_word(&art.first_layer(), &Word::from(vec![1, 1, 1]))
            .unwrap();
        assert_eq!(image.single(), Some(by_label(a, "f")));
    }

    #[test]
    fn prune_keeps_drawn_states() {
        let art = gadget_binary_pre_replication(&path_graph()).unwrap();
        let pruned = art.prune_unreachable();
        let mut labels: Vec<&str> = pruned
            .automaton
            .labels()
            .unwrap()
            .iter()
            .map(String::as_str)
            .collect();
        labels.sort_unstable();
        let mut drawn = vec![
            "v(1)_1", "v(2)_1", "v(3)_1", "u(1)_1", "v(1)_2", "v(2)_2", "v(3)_2", "u(2)_2",
            "v(1)_3", "v(2)_3", "v(3)_3", "u(2)_3", "u(3)_2", "u(3)_3", "f", "c2", "c3",
        ];
        drawn.sort_unstable();
        assert_eq!(labels, drawn);
        assert_eq!(pruned.roles.len(), 17);
    }
}
