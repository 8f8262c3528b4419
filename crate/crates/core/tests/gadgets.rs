use syncset_core::graph::{all_graphs, max_independent_set};
use syncset_core::reductions::{
    gadget_binary, gadget_binary_pre_replication, gadget_binary_weakly_acyclic,
    gadget_weakly_acyclic, padding_construction, Expected,
};
use syncset_core::solve::{
    decide_sync_set, max_sync_set_decision, max_sync_set_exact, max_sync_set_naive,
    max_sync_subset_within, SolverConfig,
};
use syncset_core::{Automaton, Graph, StateSet, Word};

fn one_edge_graph() -> Graph {
    Graph::new(3, [(1, 2)]).unwrap()
}

fn state(a: &Automaton, label: &str) -> usize {
    a.labels()
        .unwrap()
        .iter()
        .position(|l| l == label)
        .unwrap_or_else(|| panic!("no state {label}"))
}

fn set_of(a: &Automaton, labels: &[&str]) -> StateSet {
    StateSet::from_indices(a.state_count(), labels.iter().map(|l| state(a, l))).unwrap()
}

/// Non-self-loop transitions of the pruned unreplicated gadget of
/// `one_edge_graph`, as
/// (from, letters, to).
const PRUNED_EDGES: &[(&str, &[usize], &str)] = &[
    ("v(1)_1", &[1], "v(2)_1"),
    ("v(1)_1", &[0], "u(1)_1"),
    ("v(2)_1", &[0, 1], "v(3)_1"),
    ("v(3)_1", &[0, 1], "f"),
    ("v(1)_2", &[0, 1], "v(2)_2"),
    ("v(2)_2", &[1], "v(3)_2"),
    ("v(2)_2", &[0], "u(2)_2"),
    ("v(3)_2", &[0], "f"),
    ("v(3)_2", &[1], "u(3)_2"),
    ("v(1)_3", &[0, 1], "v(2)_3"),
    ("v(2)_3", &[0], "v(3)_3"),
    ("v(2)_3", &[1], "u(2)_3"),
    ("v(3)_3", &[1], "f"),
    ("v(3)_3", &[0], "u(3)_3"),
    ("f", &[0, 1], "c2"),
    ("c2", &[0, 1], "c3"),
    ("c3", &[0, 1], "f"),
];

#[test]
fn pruned_unreplicated_gadget_edge_list() {
    let art = gadget_binary_pre_replication(&one_edge_graph())
        .unwrap()
        .prune_unreachable();
    let a = &art.automaton;
    let mut drawn = Vec::new();
    for &(from, letters, to) in PRUNED_EDGES {
        for &letter in letters {
            drawn.push((state(a, from), letter, state(a, to)));
        }
    }
    drawn.sort_unstable();
    let mut actual = Vec::new();
    for q in 0..a.state_count() {
        for letter in 0..2 {
            let t = a.next(q, letter);
            if t != q {
                actual.push((q, letter, t));
            }
        }
    }
    actual.sort_unstable();
    assert_eq!(actual, drawn);
    assert_eq!(a.state_count(), 17);
    assert!(!a.is_weakly_acyclic());
    assert!(a.is_binary());
}

#[test]
fn letter_images_in_the_unreplicated_gadget() {
    let a = gadget_binary_pre_replication(&one_edge_graph())
        .unwrap()
        .automaton;
    let first = set_of(&a, &["v(1)_1", "v(1)_2", "v(1)_3"]);
    assert_eq!(
        a.apply_letter(&first, 1).unwrap(),
        set_of(&a, &["v(2)_1", "v(2)_2", "v(2)_3"])
    );
    // the edge {v2, v3} diverts v(2)_3 on letter 1
    let mixed = set_of(&a, &["v(1)_1", "v(1)_2", "v(2)_3"]);
    assert_eq!(
        a.apply_letter(&mixed, 1).unwrap(),
        set_of(&a, &["v(2)_1", "v(2)_2", "u(2)_3"])
    );
}

#[test]
fn independent_pair_is_synchronized_by_its_indicator_word() {
    let a = gadget_binary_pre_replication(&one_edge_graph())
        .unwrap()
        .automaton;
    let pair = set_of(&a, &["v(1)_1", "v(1)_2"]);
    // letter i is 1 iff v_i is in the independent set {v1, v2}
    let image = a.apply_word(&pair, &Word::from(vec![1, 1, 0])).unwrap();
    assert_eq!(image, set_of(&a, &["f"]));
    let w = decide_sync_set(&a, &pair, &SolverConfig::default())
        .unwrap()
        .unwrap();
    assert_eq!(w.word, Word::from(vec![1, 1, 0]));
    assert_eq!(w.target, state(&a, "f"));
    // v1 is diverted by letter 0 in the first layer
    let blocked = a.apply_word(&pair, &Word::from(vec![0, 1, 1])).unwrap();
    assert_eq!(blocked.len(), 2);
}

#[test]
fn weakly_acyclic_gadget_on_small_graphs() {
    let config = SolverConfig::default();
    let mut cases = vec![
        (one_edge_graph(), 3),
        (Graph::complete(3).unwrap(), 2),
        (Graph::empty(1).unwrap(), 2),
    ];
    for (g, expected) in cases.drain(..) {
        let art = gadget_weakly_acyclic(&g).unwrap();
        assert!(matches!(art.expected, Expected::Exact { value, .. } if value == expected));
        let exact = max_sync_set_exact(&art.automaton, &config).unwrap();
        let naive = max_sync_set_naive(&art.automaton, &config).unwrap();
        assert_eq!(exact.size, expected);
        assert_eq!(naive.size, expected);
        assert!(exact.best.verify(&art.automaton));
    }
}

#[test]
fn first_layer_values_without_replication() {
    let config = SolverConfig::default();
    for (g, alpha) in [
        (one_edge_graph(), 2),
        (Graph::complete(2).unwrap(), 1),
        (Graph::empty(3).unwrap(), 3),
    ] {
        let art = gadget_binary_pre_replication(&g).unwrap();
        let r = max_sync_subset_within(&art.automaton, &art.first_layer(), &config).unwrap();
        assert_eq!(r.size, alpha);
        assert!(r.best.verify(&art.automaton));
    }
    let art = gadget_binary_pre_replication(&Graph::empty(3).unwrap()).unwrap();
    let r = max_sync_subset_within(&art.automaton, &art.first_layer(), &config).unwrap();
    assert_eq!(r.best.word, Word::from(vec![1, 1, 1]));
}

#[test]
fn binary_gadget_on_one_edge_graph_and_empty_pair() {
    let config = SolverConfig::default();
    let art = gadget_binary(&one_edge_graph()).unwrap();
    assert_eq!(art.automaton.state_count(), 33);
    let r = max_sync_set_exact(&art.automaton, &config).unwrap();
    assert_eq!(r.size, 7);
    assert!(r.best.verify(&art.automaton));

    let art = gadget_binary(&Graph::empty(2).unwrap()).unwrap();
    assert_eq!(art.automaton.state_count(), 14);
    assert_eq!(max_sync_set_exact(&art.automaton, &config).unwrap().size, 5);
}

#[test]
fn weakly_acyclic_binary_bounds_for_two_vertices() {
    let config = SolverConfig::default();
    for (g, lo, hi) in [
        (Graph::empty(2).unwrap(), 8, 11),
        (Graph::complete(2).unwrap(), 4, 7),
    ] {
        let art = gadget_binary_weakly_acyclic(&g).unwrap();
        assert_eq!(art.automaton.state_count(), 21);
        assert_eq!(
            art.expected,
            Expected::Bounds {
                lower: lo,
                upper: hi
            }
        );
        let size = max_sync_set_exact(&art.automaton, &config).unwrap().size;
        assert!((lo..=hi).contains(&size), "size {size}");
    }
}

#[test]
fn padding_examples() {
    let config = SolverConfig::default();
    let merge = Automaton::new(2, 1, vec![1, 1]).unwrap();
    let art = padding_construction(&merge, &StateSet::full(2)).unwrap();
    assert_eq!(art.automaton.state_count(), 8);
    assert!(max_sync_set_decision(&art.automaton, 6, &config).unwrap());

    let cycle = Automaton::from_fn(3, 1, |q, _| (q + 1) % 3).unwrap();
    let s = StateSet::from_indices(3, [0, 1]).unwrap();
    let art = padding_construction(&cycle, &s).unwrap();
    assert_eq!(art.expected, Expected::Threshold { c: 8 });
    assert!(!max_sync_set_decision(&art.automaton, 8, &config).unwrap());
}

#[test]
fn alpha_matches_exhaustive_for_every_graph_on_four_vertices() {
    for g in all_graphs(4) {
        let r = max_independent_set(&g).unwrap();
        let brute = (0u32..16)
            .filter(|m| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap();
        assert_eq!(r.size, brute);
    }
}
