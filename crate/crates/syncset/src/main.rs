use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use syncset::dot::{export_dot, DotOptions};
use syncset::json::{self, MaxSyncDoc, WitnessDoc};
use syncset::verify::{self, VerifyKind, VerifyParams};
use syncset::{dimacs, parse_graph_any, FormatError};
use syncset_core::graph::{max_independent_set, random_graph};
use syncset_core::random::random_automaton;
use syncset_core::reductions::{
    gadget_binary, gadget_binary_pre_replication, gadget_binary_weakly_acyclic,
    gadget_weakly_acyclic, padding_construction,
};
use syncset_core::solve::{
    decide_sync_set, find_sync_word, is_synchronizing, max_sync_set_decision, max_sync_set_exact,
    max_sync_set_naive, max_sync_set_unary, max_sync_subset_within, SolveError, SolverConfig,
    DEFAULT_BUDGET,
};
use syncset_core::Automaton;

#[derive(Parser)]
#[command(
    name = "syncset",
    version,
    about = "Synchronizing sets of states in finite automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural flags of an automaton.
    Classify { file: PathBuf },
    /// Decide whether a set of states is synchronizing.
    Decide {
        file: PathBuf,
        /// Comma-separated state indices, e.g. `0,2,5`.
        set: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Find a largest synchronizing set.
    Maxsync {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Only answer whether a synchronizing set of this size exists.
        #[arg(long, conflicts_with = "first_layer")]
        threshold: Option<usize>,
        /// Restrict to the first-layer states of a gadget artifact.
        #[arg(long)]
        first_layer: bool,
    },
    /// Find a synchronizing word for the whole automaton.
    SyncWord { file: PathBuf },
    /// Build a reduction instance.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetArg,
        /// Graph file (JSON or DIMACS), or an automaton file for `thm1`.
        input: PathBuf,
        /// State set for `thm1`.
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        prune_unreachable: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Independence number of a graph.
    Alpha { file: PathBuf },
    /// Check gadget predictions and solver agreement on many instances.
    Verify {
        kind: VerifyKind,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest vertex count (graph kinds).
        #[arg(long)]
        p: Option<usize>,
        /// Largest state count (automaton kinds).
        #[arg(long)]
        n: Option<usize>,
        /// Alphabet size (`thm1`) or its upper bound (`oracle-equiv`).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        /// Enumerate every graph up to `--p` vertices instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Generate a uniformly random automaton.
    RandomAutomaton {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random graph.
    RandomGraph {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render an automaton in Graphviz format.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        no_self_loops: bool,
        /// Draw only states reachable from a gadget's first layer.
        #[arg(long)]
        prune_unreachable: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Naive,
    Unary,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetArg {
    Thm1,
    Thm2,
    Thm3,
    Lemma2,
    Thm4,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dimacs,
}

/// Ways a command can end other than success.
enum Failure {
    Input(String),
    /// Machine-readable partial result for standard output.
    Budget {
        message: String,
        partial: String,
    },
    Verify(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<syncset_core::Error> for Failure {
    fn from(e: syncset_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        #[derive(Serialize)]
        struct Undetermined {
            explored: usize,
            best_size: usize,
            partial: bool,
        }
        let message = e.to_string();
        match e {
            SolveError::Input(e) => Failure::Input(e.to_string()),
            SolveError::BudgetExhausted { explored, best } => Failure::Budget {
                message,
                partial: match best {
                    Some(best) => json::to_json(&MaxSyncDoc::new(&best, true)),
                    None => json::to_json(&Undetermined {
                        explored,
                        best_size: 0,
                        partial: true,
                    }),
                },
            },
            SolveError::Indeterminate {
                explored,
                best_size,
            } => Failure::Budget {
                message,
                partial: json::to_json(&Undetermined {
                    explored,
                    best_size,
                    partial: true,
                }),
            },
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result
        .map(|_| text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_automaton(path: &Path) -> Result<Automaton, Failure> {
    Ok(json::parse_automaton(&read_input(path)?)?)
}

/// Writes `text` to `out` or standard output, with a trailing newline.
fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("standard output: {e}"))),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Classify { file } => {
            #[derive(Serialize)]
            struct Flags {
                states: usize,
                alphabet: usize,
                unary: bool,
                binary: bool,
                weakly_acyclic: bool,
                synchronizing: bool,
            }
            let a = read_automaton(&file)?;
            emit(
                &json::to_json(&Flags {
                    states: a.state_count(),
                    alphabet: a.alphabet_size(),
                    unary: a.is_unary(),
                    binary: a.is_binary(),
                    weakly_acyclic: a.is_weakly_acyclic(),
                    synchronizing: is_synchronizing(&a),
                }),
                None,
            )
        }
        Command::Decide { file, set, budget } => {
            let a = read_automaton(&file)?;
            let set = json::parse_state_list(&set, a.state_count())?;
            match decide_sync_set(&a, &set, &SolverConfig::with_budget(budget))? {
                Some(w) => emit(&json::to_json(&WitnessDoc::from(&w)), None),
                None => emit("\"no\"", None),
            }
        }
        Command::Maxsync {
            file,
            mode,
            budget,
            threshold,
            first_layer,
        } => {
            let config = SolverConfig::with_budget(budget);
            let (a, layer) = json::parse_automaton_with_roles(&read_input(&file)?)?;
            if let Some(c) = threshold {
                if !matches!(mode, Mode::Exact) {
                    return Err(Failure::Input("--threshold requires --mode exact".into()));
                }
                #[derive(Serialize)]
                struct Answer {
                    threshold: usize,
                    answer: bool,
                }
                let answer = max_sync_set_decision(&a, c, &config)?;
                return emit(
                    &json::to_json(&Answer {
                        threshold: c,
                        answer,
                    }),
                    None,
                );
            }
            let result = if first_layer {
                if !matches!(mode, Mode::Exact) {
                    return Err(Failure::Input("--first-layer requires --mode exact".into()));
                }
                let layer = layer.filter(|l| !l.is_empty()).ok_or_else(|| {
                    Failure::Input("the automaton file records no first layer".into())
                })?;
                max_sync_subset_within(&a, &layer, &config)?
            } else {
                match mode {
                    Mode::Exact => max_sync_set_exact(&a, &config)?,
                    Mode::Naive => max_sync_set_naive(&a, &config)?,
                    Mode::Unary => max_sync_set_unary(&a)?,
                }
            };
            emit(&json::to_json(&MaxSyncDoc::new(&result, false)), None)
        }
        Command::SyncWord { file } => {
            #[derive(Serialize)]
            struct Answer {
                synchronizing: bool,
                word: Option<Vec<usize>>,
            }
            let a = read_automaton(&file)?;
            let word = find_sync_word(&a);
            emit(
                &json::to_json(&Answer {
                    synchronizing: word.is_some(),
                    word: word.map(|w| w.into_letters()),
                }),
                None,
            )
        }
        Command::Gadget {
            kind,
            input,
            set,
            prune_unreachable,
            out,
        } => {
            let text = read_input(&input)?;
            let art = match kind {
                GadgetArg::Thm1 => {
                    let a = json::parse_automaton(&text)?;
                    let set = set.ok_or_else(|| Failure::Input("thm1 needs --set".into()))?;
                    let set = json::parse_state_list(&set, a.state_count())?;
                    padding_construction(&a, &set)?
                }
                _ => {
                    if set.is_some() {
                        return Err(Failure::Input("--set only applies to thm1".into()));
                    }
                    let g = parse_graph_any(&text)?;
                    match kind {
                        GadgetArg::Thm2 => gadget_weakly_acyclic(&g)?,
                        GadgetArg::Thm3 => gadget_binary(&g)?,
                        GadgetArg::Lemma2 => gadget_binary_pre_replication(&g)?,
                        _ => gadget_binary_weakly_acyclic(&g)?,
                    }
                }
            };
            let art = if prune_unreachable {
                art.prune_unreachable()
            } else {
                art
            };
            emit(&json::serialize_artifact(&art), out.as_deref())
        }
        Command::Alpha { file } => {
            #[derive(Serialize)]
            struct Answer {
                vertices: usize,
                alpha: usize,
                witness: Vec<usize>,
            }
            let g = parse_graph_any(&read_input(&file)?)?;
            let r = max_independent_set(&g)?;
            emit(
                &json::to_json(&Answer {
                    vertices: g.vertex_count(),
                    alpha: r.size,
                    witness: r.witness,
                }),
                None,
            )
        }
        Command::Verify {
            kind,
            trials,
            seed,
            p,
            n,
            k,
            edge_prob,
            exhaustive,
            budget,
        } => {
            let params = VerifyParams {
                trials,
                seed,
                p,
                n,
                k,
                edge_prob,
                exhaustive,
                budget,
            };
            let report = verify::run(kind, &params).map_err(|e| Failure::Input(e.to_string()))?;
            eprintln!(
                "verify {kind}: {} instances, {} skipped, {} failures, {} ms",
                report.trials,
                report.skipped,
                report.failures.len(),
                report.elapsed_ms
            );
            emit(&json::to_json(&report), None)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verify(format!(
                    "{} failures",
                    report.failures.len()
                )))
            }
        }
        Command::RandomAutomaton { n, k, seed, out } => {
            let a = random_automaton(n, k, seed)?;
            emit(&json::serialize_automaton(&a), out.as_deref())
        }
        Command::RandomGraph {
            p,
            edge_prob,
            seed,
            format,
            out,
        } => {
            let g = random_graph(p, edge_prob, seed)?;
            let text = match format {
                GraphFormat::Json => json::serialize_graph(&g),
                GraphFormat::Dimacs => dimacs::serialize_graph(&g),
            };
            emit(&text, out.as_deref())
        }
        Command::ExportDot {
            file,
            no_self_loops,
            prune_unreachable,
            out,
        } => {
            let (a, layer) = json::parse_automaton_with_roles(&read_input(&file)?)?;
            let keep = if prune_unreachable {
                let layer = layer.filter(|l| !l.is_empty()).ok_or_else(|| {
                    Failure::Input("the automaton file records no first layer".into())
                })?;
                Some(a.reachable_from(&layer)?)
            } else {
                None
            };
            let options = DotOptions {
                omit_self_loops: no_self_loops,
                keep,
            };
            emit(&export_dot(&a, &options), out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Budget { message, partial }) => {
            eprintln!("error: {message}");
            let _ = emit(&partial, None);
            ExitCode::from(3)
        }
    }
}
