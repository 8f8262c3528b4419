//! Seeded and exhaustive checks of gadget predictions and solver agreement.
//!
//! Trial `t` of a run started at seed `s` is generated from seed `s + t`
//! alone, so any failure replays with `--trials 1 --seed <failure seed>`.
//! In exhaustive mode the "seed" of an instance is its position in the
//! enumeration of all graphs on `p_min..=p` vertices.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use serde::Serialize;
use syncset_core::graph::{all_graphs, max_independent_set, random_graph};
use syncset_core::random::{random_automaton, seeded_rng};
use syncset_core::reductions::{
    gadget_binary, gadget_binary_pre_replication, gadget_binary_weakly_acyclic,
    gadget_weakly_acyclic, padding_construction, Expected,
};
use syncset_core::solve::{
    decide_sync_set, max_sync_set_decision, max_sync_set_exact, max_sync_set_naive,
    max_sync_set_unary, max_sync_subset_within, SolveError, SolverConfig, DEFAULT_BUDGET,
    NAIVE_MAX_STATES,
};
use syncset_core::{Automaton, Graph, StateSet};

use crate::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerifyKind {
    #[serde(rename = "thm1")]
    Thm1,
    #[serde(rename = "thm2")]
    Thm2,
    #[serde(rename = "thm3")]
    Thm3,
    #[serde(rename = "lemma2")]
    Lemma2,
    #[serde(rename = "thm4")]
    Thm4,
    #[serde(rename = "unary")]
    Unary,
    #[serde(rename = "oracle-equiv")]
    OracleEquiv,
}

impl VerifyKind {
    pub const ALL: [VerifyKind; 7] = [
        VerifyKind::Thm1,
        VerifyKind::Thm2,
        VerifyKind::Thm3,
        VerifyKind::Lemma2,
        VerifyKind::Thm4,
        VerifyKind::Unary,
        VerifyKind::OracleEquiv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::Thm1 => "thm1",
            VerifyKind::Thm2 => "thm2",
            VerifyKind::Thm3 => "thm3",
            VerifyKind::Lemma2 => "lemma2",
            VerifyKind::Thm4 => "thm4",
            VerifyKind::Unary => "unary",
            VerifyKind::OracleEquiv => "oracle-equiv",
        }
    }

    fn is_graph_kind(self) -> bool {
        matches!(
            self,
            VerifyKind::Thm2 | VerifyKind::Thm3 | VerifyKind::Lemma2 | VerifyKind::Thm4
        )
    }

    /// Smallest and default largest vertex count for graph kinds.
    fn vertex_range(self) -> (usize, usize) {
        match self {
            VerifyKind::Thm2 => (1, 4),
            VerifyKind::Thm3 | VerifyKind::Lemma2 => (2, 3),
            _ => (2, 2),
        }
    }
}

impl fmt::Display for VerifyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        VerifyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown verify kind {s:?}"))
    }
}

/// Size parameters. `p`, `n` and `k` are upper bounds; each trial draws its
/// own sizes below them.
#[derive(Debug, Clone)]
pub struct VerifyParams {
    pub trials: usize,
    pub seed: u64,
    pub p: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub edge_prob: f64,
    /// Enumerate every graph instead of sampling (graph kinds only).
    pub exhaustive: bool,
    pub budget: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            trials: 100,
            seed: 0,
            p: None,
            n: None,
            k: None,
            edge_prob: 0.5,
            exhaustive: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub kind: VerifyKind,
    pub trials: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result of a single trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The instance falls outside the prediction's hypothesis.
    Skip,
    Fail(Failure),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamError(pub String);

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParamError {}

fn check_params(kind: VerifyKind, params: &VerifyParams) -> Result<(), ParamError> {
    let err = |m: String| Err(ParamError(m));
    if !(0.0..=1.0).contains(&params.edge_prob) {
        return err(format!(
            "edge probability {} is not in [0, 1]",
            params.edge_prob
        ));
    }
    if kind.is_graph_kind() {
        let (lo, _) = kind.vertex_range();
        let p = params.p.unwrap_or(kind.vertex_range().1);
        let limit = match kind {
            VerifyKind::Thm2 => 12,
            VerifyKind::Thm4 => 3,
            _ => 4,
        };
        if p < lo || p > limit {
            return err(format!("--p must be in {lo}..={limit} for {kind}"));
        }
        if params.exhaustive && p > 5 {
            return err("exhaustive enumeration supports p <= 5".into());
        }
    } else {
        if params.exhaustive {
            return err(format!("--exhaustive applies to graph kinds, not {kind}"));
        }
        let n = params.n.unwrap_or(default_n(kind));
        let limit = match kind {
            VerifyKind::Thm1 => 7,
            VerifyKind::Unary => NAIVE_MAX_STATES,
            _ => 10,
        };
        if n == 0 || n > limit {
            return err(format!("--n must be in 1..={limit} for {kind}"));
        }
        let k = params.k.unwrap_or(default_k(kind));
        if k == 0 || (kind == VerifyKind::Unary && k != 1) || k > 4 {
            return err(format!("--k is out of range for {kind}"));
        }
    }
    Ok(())
}

fn default_n(kind: VerifyKind) -> usize {
    match kind {
        VerifyKind::Thm1 => 6,
        VerifyKind::Unary => 12,
        _ => 10,
    }
}

fn default_k(kind: VerifyKind) -> usize {
    match kind {
        VerifyKind::Thm1 => 2,
        VerifyKind::Unary => 1,
        _ => 3,
    }
}

/// Runs a whole battery. Failures are sorted by seed.
pub fn run(kind: VerifyKind, params: &VerifyParams) -> Result<VerifyReport, ParamError> {
    check_params(kind, params)?;
    let start = Instant::now();
    let config = SolverConfig::with_budget(params.budget);
    let mut outcomes = Vec::new();
    if params.exhaustive {
        let (lo, default_hi) = kind.vertex_range();
        let hi = params.p.unwrap_or(default_hi);
        let graphs = (lo..=hi).flat_map(all_graphs);
        for (index, g) in graphs.enumerate() {
            outcomes.push(check_graph(kind, &g, index as u64, &config));
        }
    } else {
        for t in 0..params.trials {
            let seed = params.seed.wrapping_add(t as u64);
            outcomes.push(run_trial(kind, params, seed)?);
        }
    }
    let trials = outcomes.len();
    let skipped = outcomes.iter().filter(|o| **o == Outcome::Skip).count();
    let mut failures: Vec<Failure> = outcomes
        .into_iter()
        .filter_map(|o| match o {
            Outcome::Fail(f) => Some(f),
            _ => None,
        })
        .collect();
    failures.sort_by_key(|f| f.seed);
    Ok(VerifyReport {
        kind,
        trials,
        skipped,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// One sampled trial, generated from `seed` alone.
pub fn run_trial(
    kind: VerifyKind,
    params: &VerifyParams,
    seed: u64,
) -> Result<Outcome, ParamError> {
    check_params(kind, params)?;
    let config = SolverConfig::with_budget(params.budget);
    let mut rng = seeded_rng(seed);
    let outcome = if kind.is_graph_kind() {
        let (lo, default_hi) = kind.vertex_range();
        let p = rng.gen_range(lo..=params.p.unwrap_or(default_hi));
        let g = random_graph(p, params.edge_prob, rng.gen()).expect("checked parameters");
        check_graph(kind, &g, seed, &config)
    } else {
        let n = rng.gen_range(1..=params.n.unwrap_or(default_n(kind)));
        let k = match kind {
            VerifyKind::Thm1 => params.k.unwrap_or(2),
            VerifyKind::Unary => 1,
            _ => rng.gen_range(1..=params.k.unwrap_or(3)),
        };
        let a = random_automaton(n, k, rng.gen()).expect("checked parameters");
        match kind {
            VerifyKind::Thm1 => {
                let mut set = StateSet::empty(n);
                for q in 0..n {
                    if rng.gen_bool(0.5) {
                        set.insert(q);
                    }
                }
                if set.is_empty() {
                    set.insert(rng.gen_range(0..n));
                }
                check_padding(&a, &set, seed, &config)
            }
            VerifyKind::Unary => check_unary(&a, seed, &config),
            _ => check_oracle(&a, seed, &config),
        }
    };
    Ok(outcome)
}

struct Checker {
    seed: u64,
    instance: String,
}

impl Checker {
    fn fail(&self, expected: impl fmt::Display, actual: impl fmt::Display) -> Outcome {
        Outcome::Fail(Failure {
            seed: self.seed,
            instance: self.instance.clone(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }

    fn solve_error(&self, e: SolveError) -> Outcome {
        self.fail("a solver answer", e)
    }
}

/// Runs the gadget of `kind` on `g` and compares against its prediction.
pub fn check_graph(kind: VerifyKind, g: &Graph, seed: u64, config: &SolverConfig) -> Outcome {
    let c = Checker {
        seed,
        instance: json::serialize_graph(g),
    };
    let p = g.vertex_count();
    let alpha = match max_independent_set(g) {
        Ok(r) => r.size,
        Err(e) => return c.fail("an independence number", e),
    };
    let built = match kind {
        VerifyKind::Thm2 => gadget_weakly_acyclic(g),
        VerifyKind::Thm3 => gadget_binary(g),
        VerifyKind::Lemma2 => gadget_binary_pre_replication(g),
        VerifyKind::Thm4 => gadget_binary_weakly_acyclic(g),
        _ => unreachable!("not a graph kind"),
    };
    let art = match built {
        Ok(art) => art,
        Err(e) => return c.fail("a gadget", e),
    };
    let a = &art.automaton;
    if kind == VerifyKind::Thm3 && alpha <= 1 {
        return Outcome::Skip;
    }

    let (states, weakly_acyclic, binary) = match kind {
        VerifyKind::Thm2 => (2 * p + 1, Some(true), None),
        VerifyKind::Thm3 => (4 * p * p - p, Some(false), Some(true)),
        VerifyKind::Lemma2 => (2 * p * p + p, None, Some(true)),
        _ => (2 * p * p * p + 2 * p * (p - 1) + 1, Some(true), Some(true)),
    };
    if a.state_count() != states {
        return c.fail(
            format!("{states} states"),
            format!("{} states", a.state_count()),
        );
    }
    if let Some(w) = weakly_acyclic {
        if a.is_weakly_acyclic() != w {
            return c.fail(
                format!("weakly_acyclic = {w}"),
                format!("weakly_acyclic = {}", !w),
            );
        }
    }
    if binary == Some(true) && !a.is_binary() {
        return c.fail(
            "a binary alphabet",
            format!("{} letters", a.alphabet_size()),
        );
    }
    if kind == VerifyKind::Thm2 && a.alphabet_size() != p {
        return c.fail(
            format!("{p} letters"),
            format!("{} letters", a.alphabet_size()),
        );
    }

    let result = if kind == VerifyKind::Lemma2 {
        max_sync_subset_within(a, &art.first_layer(), config)
    } else {
        max_sync_set_exact(a, config)
    };
    let r = match result {
        Ok(r) => r,
        Err(e) => return c.solve_error(e),
    };
    if !r.best.verify(a) {
        return c.fail("a replayable witness", format!("{:?}", r.best));
    }
    match art.expected {
        Expected::Exact { value, .. } => {
            let want = match kind {
                VerifyKind::Thm2 => alpha + 1,
                VerifyKind::Thm3 => p * alpha + 1,
                _ => alpha,
            };
            if value != want {
                return c.fail(format!("predicted {want}"), format!("predicted {value}"));
            }
            if r.size != value {
                return c.fail(format!("size {value}"), format!("size {}", r.size));
            }
        }
        Expected::Bounds { lower, upper } => {
            let (lo, hi) = (p * p * alpha, p * p * alpha + p * (p - 1) + 1);
            if (lower, upper) != (lo, hi) {
                return c.fail(
                    format!("bounds [{lo}, {hi}]"),
                    format!("bounds [{lower}, {upper}]"),
                );
            }
            if !(lower..=upper).contains(&r.size) {
                return c.fail(
                    format!("size in [{lower}, {upper}]"),
                    format!("size {}", r.size),
                );
            }
        }
        Expected::Threshold { .. } => unreachable!("graph gadgets predict values"),
    }
    Outcome::Pass
}

fn automaton_instance(a: &Automaton, set: Option<&StateSet>) -> String {
    let mut s = json::serialize_automaton(a);
    if let Some(set) = set {
        s.push_str(&format!(" set={:?}", set.to_vec()));
    }
    s
}

/// `set` synchronizes in `a` iff the padded automaton has a synchronizing
/// set of at least `(n + 1)|set|` states.
pub fn check_padding(a: &Automaton, set: &StateSet, seed: u64, config: &SolverConfig) -> Outcome {
    let c = Checker {
        seed,
        instance: automaton_instance(a, Some(set)),
    };
    let n = a.state_count();
    let art = match padding_construction(a, set) {
        Ok(art) => art,
        Err(e) => return c.fail("a padded automaton", e),
    };
    let padded = &art.automaton;
    let size = n + (n + 1) * set.len();
    if padded.state_count() != size {
        return c.fail(
            format!("{size} states"),
            format!("{} states", padded.state_count()),
        );
    }
    if padded.alphabet_size() != a.alphabet_size() {
        return c.fail(
            "alphabet preserved",
            format!("{} letters", padded.alphabet_size()),
        );
    }
    let threshold = (n + 1) * set.len();
    if art.expected != (Expected::Threshold { c: threshold }) {
        return c.fail(
            format!("threshold {threshold}"),
            format!("{:?}", art.expected),
        );
    }
    let source = match decide_sync_set(a, set, config) {
        Ok(w) => w,
        Err(e) => return c.solve_error(e),
    };
    if source.as_ref().is_some_and(|w| !w.verify(a)) {
        return c.fail("a replayable witness", format!("{source:?}"));
    }
    let target = match max_sync_set_decision(padded, threshold, config) {
        Ok(b) => b,
        Err(e) => return c.solve_error(e),
    };
    if source.is_some() != target {
        return c.fail(
            format!("padded answer {}", source.is_some()),
            format!("padded answer {target}"),
        );
    }
    Outcome::Pass
}

/// The unary algorithm against subset enumeration.
pub fn check_unary(a: &Automaton, seed: u64, config: &SolverConfig) -> Outcome {
    let c = Checker {
        seed,
        instance: automaton_instance(a, None),
    };
    let fast = match max_sync_set_unary(a) {
        Ok(r) => r,
        Err(e) => return c.fail("a unary answer", e),
    };
    if !fast.best.verify(a) || fast.best.word.len() != a.state_count() {
        return c.fail(
            "a replayable witness of length n",
            format!("{:?}", fast.best),
        );
    }
    let naive = match max_sync_set_naive(a, config) {
        Ok(r) => r,
        Err(e) => return c.solve_error(e),
    };
    if fast.size != naive.size {
        return c.fail(
            format!("size {}", naive.size),
            format!("size {}", fast.size),
        );
    }
    Outcome::Pass
}

/// The backward search against subset enumeration.
pub fn check_oracle(a: &Automaton, seed: u64, config: &SolverConfig) -> Outcome {
    let c = Checker {
        seed,
        instance: automaton_instance(a, None),
    };
    let exact = match max_sync_set_exact(a, config) {
        Ok(r) => r,
        Err(e) => return c.solve_error(e),
    };
    if !exact.best.verify(a) {
        return c.fail("a replayable witness", format!("{:?}", exact.best));
    }
    let naive = match max_sync_set_naive(a, config) {
        Ok(r) => r,
        Err(e) => return c.solve_error(e),
    };
    if exact.size != naive.size {
        return c.fail(
            format!("size {}", naive.size),
            format!("size {}", exact.size),
        );
    }
    Outcome::Pass
}
