//! Command-line front end: every command reads MGRAPH text (a file or `-`
//! for standard input) and writes a JSON document or terse text.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample,
//! 2 on malformed input or a failed precondition.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgecon::harness::{
    enumerate_multigraphs, random_k_edge_connected, verify_propositions, verify_theorem,
    verify_trees, EnumSpec, VerificationReport,
};
use edgecon::{
    decompose, global_edge_connectivity, is_edge_minimal, is_exactly_k_edge_connected,
    check_quotient_properties, parse_mgraph, quotient_graph, reduce_to_edge_minimal,
    scan_witnesses, theorem_witnesses, to_mgraph, Error, Multigraph,
};
use serde_json::{json, Value};

/// Version of every JSON document this tool emits.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "edgecon", version, about = "Edge-connectivity analysis of small multigraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Edge connectivity and minimality summary.
    Analyze(GraphArgs),
    /// Greedily delete edges while staying k-edge-connected.
    Minimize(GraphArgs),
    /// Quotient by the (k+1)-edge-connectivity classes, with structural checks.
    Quotient(GraphArgs),
    /// Split an exactly k-edge-connected graph along non-trivial minimum cuts.
    Decompose(GraphArgs),
    /// Degree-k vertices of an edge-minimal k-edge-connected graph.
    Witness(GraphArgs),
    /// Exhaustive verification over enumerated graphs.
    Verify(VerifyArgs),
    /// Generate a seeded k-edge-connected graph or an enumeration stream.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(short = 'k')]
    pub k: usize,
    /// MGRAPH file, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 9)]
    pub m_max: usize,
    #[arg(long, default_value_t = 3)]
    pub mult_max: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    pub k_set: Vec<usize>,
    /// Include disconnected graphs in the enumeration.
    #[arg(long)]
    pub all_graphs: bool,
    /// Also check every labelled tree up to this many vertices.
    #[arg(long)]
    pub trees: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(short = 'n', default_value_t = 6)]
    pub n: usize,
    #[arg(short = 'k', default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Stream every graph of the enumeration instead of one random graph.
    #[arg(long)]
    pub enumerate: bool,
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    #[arg(long, default_value_t = 3)]
    pub m_max: usize,
    #[arg(long, default_value_t = 1)]
    pub mult_max: usize,
    #[arg(long)]
    pub all_graphs: bool,
}

/// What a command produced: exit code plus the two output streams.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: exit_code(e),
            stdout: String::new(),
            stderr: format!("edgecon: {}: {e}\n", e.kind()),
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ClaimViolated { .. } => 1,
        _ => 2,
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match dispatch(cli, stdin) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}

fn read_graph(path: &str, stdin: &mut dyn Read) -> Result<Multigraph, Error> {
    let mut text = String::new();
    let read = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {path}: {e}"),
    })?;
    parse_mgraph(&text)
}

fn document(command: &str, body: Value) -> String {
    let mut doc = json!({ "format": FORMAT_VERSION, "command": command });
    if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
        d.extend(b);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn ids<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::Analyze(a) => {
            let g = read_graph(&a.input, stdin)?;
            let report = is_edge_minimal(&g, a.k)?;
            let lambda = global_edge_connectivity(&g)?;
            let exact = is_exactly_k_edge_connected(&g, a.k)?;
            if text {
                let mut s = String::new();
                writeln!(s, "vertices {} edges {}", g.vertex_count(), g.edge_count()).unwrap();
                writeln!(s, "edge connectivity {lambda}").unwrap();
                writeln!(s, "exactly {}-edge-connected: {exact}", a.k).unwrap();
                writeln!(s, "edge-minimal: {}", report.is_minimal).unwrap();
                if !report.violating_edges.is_empty() {
                    writeln!(s, "removable: {}", ids(&report.violating_edges)).unwrap();
                }
                return Ok(Outcome::ok(s));
            }
            Ok(Outcome::ok(document(
                "analyze",
                json!({
                    "k": a.k,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "degrees": g.degrees(),
                    "edge_connectivity": lambda,
                    "k_edge_connected": true,
                    "exactly_k_edge_connected": exact,
                    "minimality": report,
                }),
            )))
        }
        Command::Minimize(a) => {
            let g = read_graph(&a.input, stdin)?;
            let (h, removed) = reduce_to_edge_minimal(&g, a.k)?;
            if text {
                return Ok(Outcome::ok(format!("# removed: {}\n{}", ids(&removed), to_mgraph(&h))));
            }
            Ok(Outcome::ok(document(
                "minimize",
                json!({ "k": a.k, "removed": removed, "mgraph": to_mgraph(&h) }),
            )))
        }
        Command::Quotient(a) => {
            let g = read_graph(&a.input, stdin)?;
            let q = quotient_graph(&g, a.k)?;
            let checks = match check_quotient_properties(&g, a.k) {
                Ok(c) => Some(c),
                Err(Error::NotEdgeMinimal(_)) => None,
                Err(e) => return Err(e),
            };
            let failed = checks.as_ref().is_some_and(|c| !c.all_pass());
            let code = u8::from(failed);
            let stdout = if text {
                let mut s = String::new();
                for (i, class) in q.partition.classes().iter().enumerate() {
                    writeln!(s, "class {i} degree {}: {}", q.graph.degrees()[i], ids(class)).unwrap();
                }
                if let Some(c) = &checks {
                    writeln!(s, "checks pass: {}", c.all_pass()).unwrap();
                }
                s.push_str(&to_mgraph(&q.graph));
                s
            } else {
                document("quotient", json!({ "k": a.k, "quotient": q, "checks": checks }))
            };
            Ok(Outcome {
                code,
                stdout,
                stderr: String::new(),
            })
        }
        Command::Decompose(a) => {
            let g = read_graph(&a.input, stdin)?;
            let tree = decompose(&g, a.k)?;
            if text {
                let mut s = format!("splits {}\n", tree.split_count());
                for leaf in tree.leaves() {
                    writeln!(s, "leaf degrees {:?}", leaf.degrees()).unwrap();
                }
                return Ok(Outcome::ok(s));
            }
            Ok(Outcome::ok(document("decompose", json!({ "k": a.k, "tree": tree }))))
        }
        Command::Witness(a) => {
            let g = read_graph(&a.input, stdin)?;
            let theorem = theorem_witnesses(&g, a.k)?;
            let scan = scan_witnesses(&g, a.k);
            let subset = theorem.witnesses.iter().all(|w| scan.witnesses.contains(w));
            let stdout = if text {
                format!(
                    "witnesses {}\ndegree-{} vertices {}\n",
                    ids(&theorem.witnesses),
                    a.k,
                    ids(&scan.witnesses)
                )
            } else {
                document(
                    "witness",
                    json!({ "k": a.k, "theorem": theorem, "scan": scan, "subset": subset }),
                )
            };
            Ok(Outcome {
                code: u8::from(!subset),
                stdout,
                stderr: String::new(),
            })
        }
        Command::Verify(a) => {
            let spec = EnumSpec::new(a.n_max, a.m_max, a.mult_max, a.k_set.clone(), !a.all_graphs)?;
            let mut reports: Vec<(&str, VerificationReport)> = vec![
                ("theorem", verify_theorem(&spec, a.jobs)),
                ("propositions", verify_propositions(&spec, a.jobs)),
            ];
            if let Some(n) = a.trees {
                reports.push(("trees", verify_trees(n, a.jobs)));
            }
            let clean = reports.iter().all(|(_, r)| r.is_clean());
            let stdout = if text {
                let mut s = String::new();
                for (name, r) in &reports {
                    writeln!(s, "{name}: {} graphs, {} ms", r.graphs_examined, r.elapsed_ms).unwrap();
                    for c in &r.claims {
                        writeln!(s, "  {:<32} {:>9} pass {:>4} fail", c.id, c.passes, c.failures).unwrap();
                    }
                    for c in &r.counterexamples {
                        writeln!(s, "  counterexample [{}] {}\n{}", c.claim, c.detail, c.graph_mgraph).unwrap();
                    }
                }
                s
            } else {
                let body: serde_json::Map<String, Value> = reports
                    .iter()
                    .map(|(name, r)| (name.to_string(), serde_json::to_value(r).unwrap()))
                    .collect();
                document("verify", Value::Object(body))
            };
            Ok(Outcome {
                code: u8::from(!clean),
                stdout,
                stderr: String::new(),
            })
        }
        Command::Gen(a) => {
            if a.enumerate {
                let spec = EnumSpec::new(a.n_max, a.m_max, a.mult_max, vec![1], !a.all_graphs)?;
                let graphs: Vec<String> = enumerate_multigraphs(&spec).map(|g| to_mgraph(&g)).collect();
                return Ok(Outcome::ok(graphs.join("\n")));
            }
            let g = random_k_edge_connected(a.n, a.k, a.seed)?;
            Ok(Outcome::ok(format!(
                "# n={} k={} seed={}\n{}",
                a.n,
                a.k,
                a.seed,
                to_mgraph(&g)
            )))
        }
    }
}
