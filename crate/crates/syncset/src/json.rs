//! JSON documents.
//!
//! Automaton: `{"states":n,"alphabet":k,"delta":[[..k..], ..n rows..],"labels":[..]}`
//! with `labels` optional. Graph: `{"vertices":p,"edges":[[i,j],...]}`,
//! 0-indexed. Gadget artifacts flatten the automaton document and add
//! `kind`, `roles`, `expected` and `params`, so any artifact file is also
//! a valid automaton file.
//!
//! All writers emit compact JSON with a fixed key order.

use serde::{Deserialize, Serialize};
use syncset_core::reductions::{Expected, GadgetArtifact, LayerState, Params, Role, Scope};
use syncset_core::solve::{MaxSyncResult, SyncWitness};
use syncset_core::{Automaton, Graph, StateSet};

use crate::FormatError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDoc {
    pub states: usize,
    pub alphabet: usize,
    pub delta: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Automaton> for AutomatonDoc {
    fn from(a: &Automaton) -> Self {
        AutomatonDoc {
            states: a.state_count(),
            alphabet: a.alphabet_size(),
            delta: (0..a.state_count()).map(|q| a.row(q).to_vec()).collect(),
            labels: a.labels().map(<[String]>::to_vec),
        }
    }
}

impl AutomatonDoc {
    pub fn to_automaton(&self) -> Result<Automaton, FormatError> {
        if self.delta.len() != self.states {
            return Err(FormatError::shape(
                "delta",
                format!("expected {} rows, found {}", self.states, self.delta.len()),
            ));
        }
        for (q, row) in self.delta.iter().enumerate() {
            if row.len() != self.alphabet {
                return Err(FormatError::shape(
                    format!("delta[{q}]"),
                    format!("expected {} entries, found {}", self.alphabet, row.len()),
                ));
            }
        }
        let flat: Vec<usize> = self.delta.iter().flatten().copied().collect();
        let automaton = Automaton::new(self.states, self.alphabet, flat).map_err(|e| {
            let location = match e {
                syncset_core::Error::TransitionOutOfRange { state, letter, .. } => {
                    format!("delta[{state}][{letter}]")
                }
                syncset_core::Error::NoStates => "states".into(),
                syncset_core::Error::EmptyAlphabet => "alphabet".into(),
                _ => "delta".into(),
            };
            FormatError::invalid(location, e)
        })?;
        match &self.labels {
            Some(labels) => automaton
                .with_labels(labels.clone())
                .map_err(|e| FormatError::invalid("labels", e)),
            None => Ok(automaton),
        }
    }
}

pub fn parse_automaton(text: &str) -> Result<Automaton, FormatError> {
    serde_json::from_str::<AutomatonDoc>(text)?.to_automaton()
}

pub fn serialize_automaton(a: &Automaton) -> String {
    to_json(&AutomatonDoc::from(a))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        Graph::new(self.vertices, self.edges.iter().map(|&[u, v]| (u, v))).map_err(|e| {
            let location = match e {
                syncset_core::Error::SelfLoop { index, .. }
                | syncset_core::Error::DuplicateEdge { index, .. }
                | syncset_core::Error::EndpointOutOfRange { index, .. } => {
                    format!("edges[{index}]")
                }
                _ => "vertices".into(),
            };
            FormatError::invalid(location, e)
        })
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<GraphDoc>(text)?.to_graph()
}

pub fn serialize_graph(g: &Graph) -> String {
    to_json(&GraphDoc::from(g))
}

/// `{"set":[...],"word":[...],"target":t}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub set: Vec<usize>,
    pub word: Vec<usize>,
    pub target: usize,
}

impl From<&SyncWitness> for WitnessDoc {
    fn from(w: &SyncWitness) -> Self {
        WitnessDoc {
            set: w.set.to_vec(),
            word: w.word.letters().to_vec(),
            target: w.target,
        }
    }
}

/// `{"set":[...],"word":[...],"target":t,"size":s,"explored":e}`, plus
/// `"partial":true` for a lower bound reported after budget exhaustion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxSyncDoc {
    pub set: Vec<usize>,
    pub word: Vec<usize>,
    pub target: usize,
    pub size: usize,
    pub explored: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
}

impl MaxSyncDoc {
    pub fn new(r: &MaxSyncResult, partial: bool) -> Self {
        let w = WitnessDoc::from(&r.best);
        MaxSyncDoc {
            set: w.set,
            word: w.word,
            target: w.target,
            size: r.size,
            explored: r.explored,
            partial,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum RoleDoc {
    Original {
        state: usize,
    },
    Padding {
        target: usize,
        index: usize,
    },
    Source {
        vertex: usize,
    },
    Blocked {
        vertex: usize,
    },
    Sink,
    V {
        layer: usize,
        vertex: usize,
        copy: usize,
    },
    U {
        layer: usize,
        vertex: usize,
        copy: usize,
    },
    Cycle {
        position: usize,
    },
}

impl From<Role> for RoleDoc {
    fn from(role: Role) -> Self {
        match role {
            Role::Original { state } => RoleDoc::Original { state },
            Role::Padding { target, index } => RoleDoc::Padding { target, index },
            Role::Source { vertex } => RoleDoc::Source { vertex },
            Role::Blocked { vertex } => RoleDoc::Blocked { vertex },
            Role::Sink => RoleDoc::Sink,
            Role::Layer {
                state: LayerState::V,
                layer,
                vertex,
                copy,
            } => RoleDoc::V {
                layer,
                vertex,
                copy,
            },
            Role::Layer {
                state: LayerState::U,
                layer,
                vertex,
                copy,
            } => RoleDoc::U {
                layer,
                vertex,
                copy,
            },
            Role::Cycle { position } => RoleDoc::Cycle { position },
        }
    }
}

/// `{"exact":v}` (with `scope` and `precondition_met` when they are not the
/// defaults), `{"lower":l,"upper":u}`, or `{"threshold":c}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scope: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precondition_met: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<usize>,
}

impl From<Expected> for ExpectedDoc {
    fn from(e: Expected) -> Self {
        let mut doc = ExpectedDoc {
            exact: None,
            scope: None,
            precondition_met: None,
            lower: None,
            upper: None,
            threshold: None,
        };
        match e {
            Expected::Exact {
                value,
                scope,
                precondition_met,
            } => {
                doc.exact = Some(value);
                if scope == Scope::FirstLayer {
                    doc.scope = Some("first_layer".into());
                }
                if !precondition_met {
                    doc.precondition_met = Some(false);
                }
            }
            Expected::Bounds { lower, upper } => {
                doc.lower = Some(lower);
                doc.upper = Some(upper);
            }
            Expected::Threshold { c } => doc.threshold = Some(c),
        }
        doc
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub copies: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<AutomatonDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
}

impl From<&Params> for ParamsDoc {
    fn from(params: &Params) -> Self {
        match params {
            Params::Padding { source, set, n, c } => ParamsDoc {
                graph: None,
                p: None,
                alpha: None,
                copies: None,
                source: Some(AutomatonDoc::from(source)),
                set: Some(set.to_vec()),
                n: Some(*n),
                c: Some(*c),
            },
            Params::Graph {
                graph,
                p,
                alpha,
                copies,
            } => ParamsDoc {
                graph: Some(GraphDoc::from(graph)),
                p: Some(*p),
                alpha: Some(*alpha),
                copies: Some(*copies),
                source: None,
                set: None,
                n: None,
                c: None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArtifactDoc {
    #[serde(flatten)]
    pub automaton: AutomatonDoc,
    pub kind: String,
    pub roles: Vec<RoleDoc>,
    pub expected: ExpectedDoc,
    pub params: ParamsDoc,
}

impl From<&GadgetArtifact> for ArtifactDoc {
    fn from(art: &GadgetArtifact) -> Self {
        ArtifactDoc {
            automaton: AutomatonDoc::from(&art.automaton),
            kind: art.kind.name().into(),
            roles: art.roles.iter().map(|&r| RoleDoc::from(r)).collect(),
            expected: ExpectedDoc::from(art.expected),
            params: ParamsDoc::from(&art.params),
        }
    }
}

pub fn serialize_artifact(art: &GadgetArtifact) -> String {
    to_json(&ArtifactDoc::from(art))
}

/// Parses an automaton file; when it is a gadget artifact, also returns the
/// first-layer `v` states recorded in its roles.
pub fn parse_automaton_with_roles(
    text: &str,
) -> Result<(Automaton, Option<StateSet>), FormatError> {
    #[derive(Deserialize)]
    struct WithRoles {
        #[serde(flatten)]
        automaton: AutomatonDoc,
        #[serde(default)]
        roles: Option<Vec<RoleDoc>>,
    }
    let doc: WithRoles = serde_json::from_str(text)?;
    let automaton = doc.automaton.to_automaton()?;
    let first_layer = match doc.roles {
        None => None,
        Some(roles) => {
            if roles.len() != automaton.state_count() {
                return Err(FormatError::shape(
                    "roles",
                    format!(
                        "expected {} entries, found {}",
                        automaton.state_count(),
                        roles.len()
                    ),
                ));
            }
            let members = roles
                .iter()
                .enumerate()
                .filter(|(_, r)| matches!(r, RoleDoc::V { layer: 0, .. }))
                .map(|(q, _)| q);
            Some(StateSet::from_indices(automaton.state_count(), members).expect("in range"))
        }
    };
    Ok((automaton, first_layer))
}

/// Parses a comma-separated list of state indices such as `0,3,4`.
pub fn parse_state_list(text: &str, states: usize) -> Result<StateSet, FormatError> {
    let mut set = StateSet::empty(states);
    for (i, item) in text.split(',').map(str::trim).enumerate() {
        if item.is_empty() {
            continue;
        }
        let q: usize = item.parse().map_err(|_| {
            FormatError::shape(format!("set[{i}]"), format!("not an index: {item:?}"))
        })?;
        set.try_insert(q)
            .map_err(|e| FormatError::invalid(format!("set[{i}]"), e))?;
    }
    Ok(set)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use syncset_core::random::random_automaton;
    use syncset_core::reductions::gadget_binary;

    #[test]
    fn parses_the_two_state_example() {
        let a = parse_automaton(r#"{"states":2,"alphabet":1,"delta":[[1],[1]]}"#).unwrap();
        assert_eq!(a, Automaton::new(2, 1, vec![1, 1]).unwrap());
        assert_eq!(
            serialize_automaton(&a),
            r#"{"states":2,"alphabet":1,"delta":[[1],[1]]}"#
        );
    }

    #[test]
    fn errors_carry_locations() {
        let err = parse_automaton(r#"{"states":2,"alphabet":1,"delta":[[2],[1]]}"#).unwrap_err();
        assert_eq!(
            err.to_string(),
            "delta[0][0]: transition (0, 0) -> 2 is out of range for 2 states"
        );
        let err = parse_automaton(r#"{"states":2,"alphabet":2,"delta":[[0,1],[1]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("delta[1]:"));
        let err = parse_automaton(r#"{"states":2,"alphabet":1,"delta":[[0]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("delta:"));
        let err = parse_automaton("{\"states\":2,\n\"alphabet\":").unwrap_err();
        assert!(matches!(err, FormatError::Json(ref e) if e.line() == 2));
        let err =
            parse_automaton(r#"{"states":1,"alphabet":1,"delta":[[0]],"labels":[]}"#).unwrap_err();
        assert!(err.to_string().starts_with("labels:"));
    }

    #[test]
    fn graph_documents() {
        let g = parse_graph(r#"{"vertices":3,"edges":[[0,1],[0,2],[1,2]]}"#).unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
        let err = parse_graph(r#"{"vertices":3,"edges":[[0,1],[2,2]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("edges[1]:"));
        let empty = Graph::empty(4).unwrap();
        assert_eq!(parse_graph(&serialize_graph(&empty)).unwrap(), empty);
    }

    #[test]
    fn artifacts_are_automaton_files() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        let art = gadget_binary(&g).unwrap();
        let text = serialize_artifact(&art);
        let (a, first) = parse_automaton_with_roles(&text).unwrap();
        assert_eq!(a, art.automaton);
        assert_eq!(first.unwrap(), art.first_layer());
        assert!(text.contains(r#""expected":{"exact":7}"#));
        assert!(text.contains(r#""kind":"thm3""#));
    }

    #[test]
    fn state_lists() {
        let s = parse_state_list("0, 2,2", 3).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2]);
        assert!(parse_state_list("0,3", 3).is_err());
        assert!(parse_state_list("x", 3).is_err());
    }

    proptest::proptest! {
        #[test]
        fn serialization_round_trips(n in 1usize..20, k in 1usize..4, seed: u64) {
            let a = random_automaton(n, k, seed).unwrap();
            let text = serialize_automaton(&a);
            proptest::prop_assert_eq!(parse_automaton(&text).unwrap(), a.clone());
            proptest::prop_assert_eq!(serialize_automaton(&random_automaton(n, k, seed).unwrap()), text);
        }
    }
}
