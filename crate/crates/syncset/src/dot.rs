//! Graphviz rendering of automata.

use std::fmt::Write;

use syncset_core::{Automaton, StateSet};

#[derive(Debug, Clone, Default)]
pub struct DotOptions {
    pub omit_self_loops: bool,
    /// Draw only these states (and edges between them).
    pub keep: Option<StateSet>,
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One node per state and one edge per (source, target) pair, labelled with
/// the comma-joined letters that take it.
pub fn export_dot(automaton: &Automaton, options: &DotOptions) -> String {
    let n = automaton.state_count();
    let drawn = |q: usize| options.keep.as_ref().is_none_or(|k| k.contains(q));
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for q in (0..n).filter(|&q| drawn(q)) {
        let label = automaton
            .label(q)
            .map(escape)
            .unwrap_or_else(|| q.to_string());
        writeln!(out, "  {q} [label=\"{label}\"];").unwrap();
    }
    for q in (0..n).filter(|&q| drawn(q)) {
        let mut targets: Vec<(usize, Vec<usize>)> = Vec::new();
        for (letter, &t) in automaton.row(q).iter().enumerate() {
            if (t == q && options.omit_self_loops) || !drawn(t) {
                continue;
            }
            match targets.iter_mut().find(|(target, _)| *target == t) {
                Some((_, letters)) => letters.push(letter),
                None => targets.push((t, vec![letter])),
            }
        }
        targets.sort_by_key(|(t, _)| *t);
        for (t, letters) in targets {
            let label: Vec<String> = letters.iter().map(usize::to_string).collect();
            writeln!(out, "  {q} -> {t} [label=\"{}\"];", label.join(",")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    fn nodes(dot: &str) -> usize {
        dot.lines()
            .filter(|l| l.contains("[label=") && !l.contains("->"))
            .count()
    }

    #[test]
    fn self_loop_suppression() {
        let a = Automaton::new(1, 1, vec![0]).unwrap();
        let with = export_dot(&a, &DotOptions::default());
        assert_eq!((nodes(&with), edges(&with)), (1, 1));
        let without = export_dot(
            &a,
            &DotOptions {
                omit_self_loops: true,
                keep: None,
            },
        );
        assert_eq!((nodes(&without), edges(&without)), (1, 0));
    }

    #[test]
    fn parallel_letters_share_an_edge() {
        let a = Automaton::new(2, 2, vec![1, 1, 0, 1]).unwrap();
        let dot = export_dot(&a, &DotOptions::default());
        assert!(dot.contains("  0 -> 1 [label=\"0,1\"];"));
        assert!(dot.contains("  1 -> 0 [label=\"0\"];"));
        assert!(dot.contains("  1 -> 1 [label=\"1\"];"));
        assert_eq!(edges(&dot), 3);
    }

    #[test]
    fn labels_are_escaped() {
        let a = Automaton::new(1, 1, vec![0])
            .unwrap()
            .with_labels(vec!["say \"hi\"".into()])
            .unwrap();
        assert!(export_dot(&a, &DotOptions::default()).contains(r#"[label="say \"hi\""]"#));
    }
}
