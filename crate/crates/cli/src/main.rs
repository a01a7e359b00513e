//! Command-line front end: verification, induced graphs, constructions,
//! counts, t-representant builders and the exhaustive oracle, with plain
//! text or JSON output.
//!
//! Exit codes: 0 success/verified, 1 verification or representability
//! failure, 2 input error, 3 unsupported pattern shape, 4 budget truncation.

use std::io::Read;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use wordrep::construct::{
    compose_components, count_cycle_min, count_path_min, count_tree_min, cycle_graph,
    cycle_min_representant, cycle_min_representant_of, ell_cycle,
    enumerate_cycle_min_representants, enumerate_tree_min_representants, path_graph,
    star_min_representants, tree_min_representant,
};
use wordrep::oracle::{search_min_representants, SearchConfig, SearchMode};
use wordrep::pattern::{induced_graph_t, kitaev_induced_graph, represents_kitaev, represents_t};
use wordrep::trep::{build_t_representant, DeletionTrace, Growth};
use wordrep::word::RepresentationReport;
use wordrep::{Error, Graph, Pattern, Word};

#[derive(Parser)]
#[command(
    name = "wordrep",
    version,
    about = "Graph representation by words under pattern avoidance"
)]
struct Cli {
    /// Emit a machine-readable JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the oracle
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Maximum word length the oracle searches (default 2|V|)
    #[arg(long, global = true)]
    max_len: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a word represents a graph under a pattern
    Verify {
        /// Graph file (edge list; `-` for stdin)
        graph: String,
        /// The candidate word
        word: String,
        /// Avoidance pattern, e.g. aa, aab, 112
        #[arg(long, default_value = "aa")]
        pattern: String,
        /// Use the order-sensitive Kitaev variant
        #[arg(long)]
        kitaev: bool,
    },
    /// Print the graph a word induces
    Induce {
        word: String,
        /// Interpret the word over this graph's vertices
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value = "aa")]
        pattern: String,
        #[arg(long)]
        kitaev: bool,
    },
    /// Build minimal-length word-representants
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// List all minimal-length word-representants
    Enumerate {
        #[command(subcommand)]
        what: FamilyCmd,
    },
    /// Closed-form counts of minimal-length word-representants
    Count {
        #[command(subcommand)]
        what: FamilyCmd,
    },
    /// Build a t-representant of an arbitrary graph by edge deletion
    BuildT {
        graph: String,
        #[arg(long)]
        pattern: String,
        /// A word that 11-represents the graph (required for aab/abb)
        #[arg(long)]
        seed: Option<String>,
        /// Print the deletion trace
        #[arg(long)]
        trace: bool,
        /// Builder size cap (default 12 vertices)
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Exhaustive search for minimal representants
    Oracle {
        graph: String,
        #[arg(long, default_value = "aa")]
        pattern: String,
        /// Restrict to k-uniform words
        #[arg(long)]
        uniform: Option<usize>,
        /// Collect every minimal word instead of the first
        #[arg(long)]
        all: bool,
        /// Collect every verifying word of exactly this length
        #[arg(long)]
        at_len: Option<usize>,
        /// Disable prefix pruning (results are identical, just slower)
        #[arg(long)]
        no_prune: bool,
        /// Candidate budget before giving up (default 10^9)
        #[arg(long)]
        max_explored: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// One minimal representant of the tree in a graph file
    Tree { graph: String },
    /// The canonical minimal representant of the cycle C_n
    Cycle { n: usize },
    /// All minimal representants of the star S_k
    Star { k: usize },
    /// Compose per-component minimal words for disjoint graphs (order is
    /// kept; put a largest component last for minimal length)
    Components { graphs: Vec<String> },
}

#[derive(Subcommand)]
enum FamilyCmd {
    Tree { graph: String },
    Cycle { n: usize },
    Path { k: usize },
    Star { k: usize },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::UnsupportedPattern(..) => 3,
            Error::NotAbRepresentable | Error::BadSeed => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// The stable JSON envelope shared by every subcommand.
struct Output {
    command: &'static str,
    inputs: Value,
    result: Value,
    words: Option<Vec<String>>,
    ell: Option<usize>,
    count: Option<String>,
    truncated: Option<bool>,
    text: String,
}

impl Output {
    fn new(command: &'static str, inputs: Value) -> Output {
        Output {
            command,
            inputs,
            result: Value::Null,
            words: None,
            ell: None,
            count: None,
            truncated: None,
            text: String::new(),
        }
    }

    fn print(&self, json_mode: bool) {
        if json_mode {
            let obj = json!({
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "words": self.words,
                "ell": self.ell,
                "count": self.count,
                "truncated": self.truncated,
            });
            println!("{obj}");
        } else if !self.text.is_empty() {
            println!("{}", self.text.trim_end());
        }
    }
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure {
                code: 2,
                message: format!("cannot read stdin: {e}"),
            })?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("cannot read {path}: {e}"),
        })?
    };
    Ok(Graph::parse(&text)?)
}

/// A word with no graph in scope: its own letters become the vertices, in
/// first-appearance order.
fn graph_from_word_text(text: &str) -> Result<(Graph, Word), Failure> {
    let mut g = Graph::new();
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Failure {
            code: 2,
            message: "empty word".into(),
        });
    }
    if trimmed.split_whitespace().nth(1).is_some() {
        for tok in trimmed.split_whitespace() {
            g.intern_vertex(tok)?;
        }
    } else {
        for c in trimmed.chars() {
            g.intern_vertex(&c.to_string())?;
        }
    }
    let w = g.parse_word(trimmed)?;
    Ok((g, w))
}

fn report_json(report: &RepresentationReport) -> Value {
    let edges = |faults: &[wordrep::word::PairFault]| {
        faults.iter().map(|f| json!([f.x, f.y])).collect::<Vec<_>>()
    };
    let witnesses: Vec<Value> = report
        .spurious_edges
        .iter()
        .chain(report.missing_edges.iter())
        .map(|f| {
            json!({
                "x": f.x,
                "y": f.y,
                "restriction": f.restriction,
                "factor": f.factor,
            })
        })
        .collect();
    json!({
        "verdict": if report.represents() { "represents" } else { "fails" },
        "missing_vertices": report.missing_vertices,
        "spurious_edges": edges(&report.spurious_edges),
        "missing_edges": edges(&report.missing_edges),
        "witnesses": witnesses,
    })
}

fn report_text(report: &RepresentationReport) -> String {
    if report.represents() {
        return "verified".into();
    }
    let mut lines = vec![format!(
        "fails: {} missing vertices, {} spurious edges, {} missing edges",
        report.missing_vertices.len(),
        report.spurious_edges.len(),
        report.missing_edges.len()
    )];
    for v in &report.missing_vertices {
        lines.push(format!("missing vertex {v}"));
    }
    for f in &report.spurious_edges {
        lines.push(format!(
            "spurious edge {} {}: restriction {} avoids the pattern",
            f.x, f.y, f.restriction
        ));
    }
    for f in &report.missing_edges {
        lines.push(format!(
            "missing edge {} {}: restriction {} contains {}",
            f.x,
            f.y,
            f.restriction,
            f.factor.as_deref().unwrap_or("the pattern")
        ));
    }
    lines.join("\n")
}

/// Graph rendered in the same format the parser accepts.
fn graph_text(g: &Graph) -> String {
    let mut lines = Vec::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            lines.push(format!("vertex {}", g.label(v)));
        }
    }
    for (u, v) in g.edges() {
        lines.push(format!("edge {} {}", g.label(u), g.label(v)));
    }
    lines.join("\n")
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.labels(),
        "edges": g.edges().map(|(u, v)| json!([g.label(u), g.label(v)])).collect::<Vec<_>>(),
    })
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

/// Auto-construct a minimal representant for one component graph.
fn component_word(g: &Graph) -> Result<Word, Failure> {
    if g.vertex_count() == 1 {
        Ok(Word::new(vec![0]))
    } else if g.is_tree() {
        Ok(tree_min_representant(g)?)
    } else if g.is_cycle() {
        Ok(cycle_min_representant_of(g)?)
    } else {
        Err(Failure {
            code: 2,
            message:
                "component is neither a tree nor a cycle; no minimal construction is available"
                    .into(),
        })
    }
}

fn trace_json(g: &Graph, trace: &DeletionTrace) -> Value {
    json!({
        "start": g.word_string(&trace.start_word),
        "steps": trace.steps.iter().map(|s| {
            let (kind, seg) = match &s.growth {
                Growth::Appended(w) => ("appended", g.word_string(w)),
                Growth::Prepended(w) => ("prepended", g.word_string(w)),
            };
            json!({
                "edge": [g.label(s.edge.0), g.label(s.edge.1)],
                "growth": kind,
                "segment": seg,
            })
        }).collect::<Vec<_>>(),
        "final": g.word_string(&trace.final_word),
    })
}

fn run(cli: Cli) -> Result<(Output, i32), Failure> {
    match cli.command {
        Command::Verify {
            graph,
            word,
            pattern,
            kitaev,
        } => {
            let g = read_graph(&graph)?;
            let w = g.parse_word(&word)?;
            let t = Pattern::parse(&pattern)?;
            let report = if kitaev {
                represents_kitaev(&w, &g, &t)
            } else {
                represents_t(&w, &g, &t)
            };
            let mut out = Output::new(
                "verify",
                json!({"graph": graph, "word": word, "pattern": pattern, "kitaev": kitaev}),
            );
            out.result = report_json(&report);
            out.text = report_text(&report);
            let code = if report.represents() { 0 } else { 1 };
            Ok((out, code))
        }

        Command::Induce {
            word,
            graph,
            pattern,
            kitaev,
        } => {
            let (host, w) = match &graph {
                Some(path) => {
                    let g = read_graph(path)?;
                    let w = g.parse_word(&word)?;
                    (g, w)
                }
                None => graph_from_word_text(&word)?,
            };
            let t = Pattern::parse(&pattern)?;
            let induced = if kitaev {
                kitaev_induced_graph(&w, &t, &host)
            } else {
                induced_graph_t(&w, &t, &host)
            };
            let mut out = Output::new(
                "induce",
                json!({"word": word, "graph": graph, "pattern": pattern, "kitaev": kitaev}),
            );
            out.result = graph_json(&induced);
            out.text = graph_text(&induced);
            Ok((out, 0))
        }

        Command::Construct { what } => match what {
            ConstructCmd::Tree { graph } => {
                let g = read_graph(&graph)?;
                let w = tree_min_representant(&g)?;
                let rendered = g.word_string(&w);
                let mut out = Output::new("construct", json!({"family": "tree", "graph": graph}));
                out.ell = Some(w.len());
                out.words = Some(vec![rendered.clone()]);
                out.text = rendered;
                Ok((out, 0))
            }
            ConstructCmd::Cycle { n } => {
                let g = cycle_graph(n);
                let w = cycle_min_representant(n)?;
                let rendered = g.word_string(&w);
                let mut out = Output::new("construct", json!({"family": "cycle", "n": n}));
                out.ell = Some(w.len());
                out.words = Some(vec![rendered.clone()]);
                out.text = rendered;
                Ok((out, 0))
            }
            ConstructCmd::Star { k } => {
                let (g, words) = star_min_representants(k)?;
                let rendered: Vec<String> = words.iter().map(|w| g.word_string(w)).collect();
                let mut out = Output::new("construct", json!({"family": "star", "k": k}));
                out.ell = words.first().map(|w| w.len());
                out.count = Some(words.len().to_string());
                out.text = rendered.join("\n");
                out.words = Some(rendered);
                Ok((out, 0))
            }
            ConstructCmd::Components { graphs } => {
                if graphs.is_empty() {
                    return Err(Failure {
                        code: 2,
                        message: "construct components needs at least one graph file".into(),
                    });
                }
                let parsed: Vec<Graph> =
                    graphs.iter().map(|p| read_graph(p)).collect::<Result<_, _>>()?;
                let words: Vec<Word> =
                    parsed.iter().map(component_word).collect::<Result<_, _>>()?;
                let parts: Vec<(&Graph, &Word)> =
                    parsed.iter().zip(words.iter()).collect();
                let (union, composed) = compose_components(&parts)?;
                let rendered = union.word_string(&composed);
                let mut out =
                    Output::new("construct", json!({"family": "components", "graphs": graphs}));
                out.ell = Some(composed.len());
                out.words = Some(vec![rendered.clone()]);
                out.text = rendered;
                Ok((out, 0))
            }
        },

        Command::Enumerate { what } => {
            let (inputs, g, words) = match what {
                FamilyCmd::Tree { graph } => {
                    let g = read_graph(&graph)?;
                    let words = enumerate_tree_min_representants(&g)?;
                    (json!({"family": "tree", "graph": graph}), g, words)
                }
                FamilyCmd::Cycle { n } => {
                    let words = enumerate_cycle_min_representants(n)?;
                    (json!({"family": "cycle", "n": n}), cycle_graph(n), words)
                }
                FamilyCmd::Path { k } => {
                    let g = path_graph(k);
                    let words = enumerate_tree_min_representants(&g)?;
                    (json!({"family": "path", "k": k}), g, words)
                }
                FamilyCmd::Star { k } => {
                    let (g, words) = star_min_representants(k)?;
                    (json!({"family": "star", "k": k}), g, words)
                }
            };
            let rendered: Vec<String> = words.iter().map(|w| g.word_string(w)).collect();
            let mut out = Output::new("enumerate", inputs);
            out.ell = words.first().map(|w| w.len());
            out.count = Some(words.len().to_string());
            out.text = rendered.join("\n");
            out.words = Some(rendered);
            Ok((out, 0))
        }

        Command::Count { what } => {
            let (inputs, ell, count) = match what {
                FamilyCmd::Tree { graph } => {
                    let g = read_graph(&graph)?;
                    let count = count_tree_min(&g)?;
                    (
                        json!({"family": "tree", "graph": graph}),
                        2 * g.vertex_count() - 2,
                        count,
                    )
                }
                FamilyCmd::Cycle { n } => (
                    json!({"family": "cycle", "n": n}),
                    ell_cycle(n)?,
                    BigUint::from(count_cycle_min(n)?),
                ),
                FamilyCmd::Path { k } => (
                    json!({"family": "path", "k": k}),
                    2 * k - 2,
                    count_path_min(k)?,
                ),
                FamilyCmd::Star { k } => {
                    if k < 1 {
                        return Err(Error::TooFewVertices { need: 2, got: k + 1 }.into());
                    }
                    (
                        json!({"family": "star", "k": k}),
                        2 * k,
                        BigUint::from(2u32) * factorial(k),
                    )
                }
            };
            let mut out = Output::new("count", inputs);
            out.ell = Some(ell);
            out.count = Some(count.to_string());
            out.text = count.to_string();
            Ok((out, 0))
        }

        Command::BuildT {
            graph,
            pattern,
            seed,
            trace,
            max_vertices,
        } => {
            let g = read_graph(&graph)?;
            let t = Pattern::parse(&pattern)?;
            let seed_word = seed.as_deref().map(|s| g.parse_word(s)).transpose()?;
            let (w, deletions) = build_t_representant(&g, &t, seed_word.as_ref(), max_vertices)?;
            let rendered = g.word_string(&w);
            let mut out = Output::new(
                "build-t",
                json!({"graph": graph, "pattern": pattern, "seed": seed, "max_vertices": max_vertices}),
            );
            out.result = json!({"word": rendered, "trace": trace_json(&g, &deletions)});
            out.ell = Some(w.len());
            out.words = Some(vec![rendered.clone()]);
            out.text = if trace {
                let mut lines = vec![format!("start {}", g.word_string(&deletions.start_word))];
                for step in &deletions.steps {
                    let (kind, seg) = match &step.growth {
                        Growth::Appended(s) => ("append", g.word_string(s)),
                        Growth::Prepended(s) => ("prepend", g.word_string(s)),
                    };
                    lines.push(format!(
                        "delete {} {}: {} {}",
                        g.label(step.edge.0),
                        g.label(step.edge.1),
                        kind,
                        seg
                    ));
                }
                lines.push(rendered);
                lines.join("\n")
            } else {
                rendered
            };
            Ok((out, 0))
        }

        Command::Oracle {
            graph,
            pattern,
            uniform,
            all,
            at_len,
            no_prune,
            max_explored,
        } => {
            let g = read_graph(&graph)?;
            let mut cfg = SearchConfig::new(&g);
            cfg.pattern = Pattern::parse(&pattern)?;
            cfg.uniform_k = uniform;
            cfg.threads = cli.threads;
            cfg.prune = !no_prune;
            if let Some(budget) = max_explored {
                cfg.max_explored = budget;
            }
            if let Some(l) = cli.max_len {
                cfg.max_len = l;
            }
            cfg.mode = match (at_len, uniform, all) {
                (Some(l), _, _) => SearchMode::AllAtLength(l),
                // a uniform search is a fixed-length enumeration; collect all
                (None, Some(k), _) => SearchMode::AllAtLength(k.max(1) * g.vertex_count()),
                (None, None, true) => SearchMode::AllMinimal,
                (None, None, false) => SearchMode::First,
            };
            let result = search_min_representants(&g, &cfg)?;
            let rendered: Vec<String> = result.words.iter().map(|w| g.word_string(w)).collect();
            let mut out = Output::new(
                "oracle",
                json!({
                    "graph": graph, "pattern": pattern, "uniform": uniform,
                    "max_len": cfg.max_len, "threads": cfg.threads, "prune": cfg.prune,
                }),
            );
            out.result = json!({"explored": result.explored});
            out.ell = result.ell;
            out.count = Some(result.words.len().to_string());
            out.truncated = Some(result.truncated);
            let mut lines = Vec::new();
            if let Some(ell) = result.ell {
                lines.push(format!("ell {ell}"));
            }
            lines.push(format!("count {}", result.words.len()));
            lines.extend(rendered.iter().cloned());
            if result.truncated {
                lines.push("truncated (budget exhausted)".into());
            } else if result.words.is_empty() {
                lines.push(format!("no representant of length <= {}", cfg.max_len));
            }
            out.text = lines.join("\n");
            out.words = Some(rendered);
            let code = if result.truncated {
                4
            } else if result.words.is_empty() {
                1
            } else {
                0
            };
            Ok((out, code))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(cli) {
        Ok((out, code)) => {
            out.print(json_mode);
            std::process::exit(code);
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}
