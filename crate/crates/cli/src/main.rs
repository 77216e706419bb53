use std::collections::BTreeSet;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ppvle::aev::{fixed_length_existence, franaszek_reduce, is_zero, Existence, ExistenceMode};
use ppvle::fixtures;
use ppvle::graphs::{
    graph_power, is_deterministic, parity_subgraph, reduce_to_shannon_cover, LabeledGraph,
    LengthDistribution, ParityAlphabet,
};
use ppvle::io::{load, GraphFile};
use ppvle::kraft::{
    build_exhaustive_prefix_free, build_parity_prefix_free, check_parity_kraft, is_admissible, validate_list,
};
use ppvle::spectral::{adjacency, capacity_ordinary, theta_max, DEFAULT_TOL};
use ppvle::synth::{
    cut_graph, ordinary_principal_states, pp_principal_search, search_none, synthesize, verify_vle, Budget,
    EncoderCandidate, PpSearch, PrincipalResult, Synthesis,
};
use ppvle::tagging::{assign_tags, decode, encode, StreamErrorKind, TaggedEncoder};

const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const MID_EDGE: u8 = 3;
const STREAM_PARSE: u8 = 4;

#[derive(Parser)]
#[command(name = "ppvle", version, about = "Variable-length and parity-preserving constrained encoders")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GraphArg {
    /// Graph file, or `@name` for a bundled fixture.
    graph: String,
    /// Comma-separated odd symbols, replacing the file's partition.
    #[arg(long)]
    partition: Option<String>,
}

#[derive(Args, Clone, Copy)]
struct Counts {
    /// Even input tags.
    #[arg(long, default_value_t = 1)]
    n0: u64,
    /// Odd input tags.
    #[arg(long, default_value_t = 1)]
    n1: u64,
}

#[derive(Args, Clone, Copy)]
struct SearchOpts {
    /// Maximum path-tree nodes per state.
    #[arg(long, default_value_t = Budget::default().max_tree_nodes)]
    budget: u64,
    /// Evaluate states in parallel.
    #[arg(long)]
    parallel: bool,
}

impl SearchOpts {
    fn budget(self) -> Budget {
        Budget {
            max_tree_nodes: self.budget,
            parallel: self.parallel,
            ..Budget::default()
        }
    }
}

#[derive(Args, Clone)]
struct DistArg {
    /// Even word counts by length, comma-separated.
    #[arg(long, value_delimiter = ',')]
    eta: Vec<i64>,
    /// Odd word counts by length, comma-separated.
    #[arg(long, value_delimiter = ',')]
    omega: Vec<i64>,
    /// Word counts by length for the ordinary check (all words even).
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["eta", "omega"])]
    mu: Vec<i64>,
    /// Alphabet size for the ordinary check.
    #[arg(short, conflicts_with_all = ["eta", "omega"])]
    n: Option<u64>,
    #[command(flatten)]
    counts: Counts,
}

impl DistArg {
    /// Distribution and (n0, n1); ordinary mode counts every symbol as even.
    fn resolve(&self) -> Result<(LengthDistribution, u64, u64, bool)> {
        if !self.mu.is_empty() || self.n.is_some() {
            let n = self.n.ok_or_else(|| anyhow!("--mu needs -n"))?;
            if self.mu.is_empty() {
                bail!("-n needs --mu");
            }
            return Ok((LengthDistribution::from_mu(&self.mu), n, 0, false));
        }
        Ok((LengthDistribution::new(self.eta.clone(), self.omega.clone()), self.counts.n0, self.counts.n1, true))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Capacity of the constraint presented by a graph.
    Capacity {
        #[command(flatten)]
        g: GraphArg,
    },
    /// Shannon cover (merge states with equal follower sets).
    Reduce {
        #[command(flatten)]
        g: GraphArg,
    },
    /// t-th power of an ordinary graph.
    Power {
        #[command(flatten)]
        g: GraphArg,
        #[arg(short)]
        t: usize,
    },
    /// Even and odd parity subgraphs.
    ParitySplit {
        #[command(flatten)]
        g: GraphArg,
    },
    /// Kraft conditions for a length distribution.
    KraftCheck {
        #[command(flatten)]
        d: DistArg,
    },
    /// Exhaustive prefix-free list realizing a distribution over digits `0..n0+n1`.
    BuildList {
        #[command(flatten)]
        d: DistArg,
    },
    /// Checks a word list over digits `0..n0+n1` (the first n0 even).
    ValidateList {
        words: Vec<String>,
        #[command(flatten)]
        counts: Counts,
    },
    /// Largest approximate eigenvector below a cap (Franaszek).
    Aev {
        #[command(flatten)]
        g: GraphArg,
        #[arg(short)]
        n: u64,
        /// Use the t-th power of the adjacency matrix.
        #[arg(short, default_value_t = 1)]
        t: u32,
        #[arg(long, default_value_t = ppvle::aev::DEFAULT_CAP)]
        cap: u64,
    },
    /// Existence of a parity-preserving fixed-length encoder at rate t:t.
    FixedExistence {
        #[command(flatten)]
        g: GraphArg,
        #[arg(short)]
        t: u32,
        #[command(flatten)]
        counts: Counts,
        #[arg(long, default_value_t = ppvle::aev::DEFAULT_CAP, conflicts_with = "deterministic")]
        cap: u64,
        /// Only 0-1 vectors (deterministic encoders).
        #[arg(long)]
        deterministic: bool,
    },
    /// Principal states for an ordinary variable-length encoder.
    Principal {
        #[command(flatten)]
        g: GraphArg,
        #[arg(short)]
        n: u64,
        #[arg(short, long = "rmax")]
        r: usize,
    },
    /// Parity-preserving principal states.
    PpPrincipal {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        counts: Counts,
        #[arg(short, long = "rmax")]
        r: usize,
        #[command(flatten)]
        search: SearchOpts,
    },
    /// Principal states, cut graph and trimming into an encoder graph.
    Synth {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        counts: Counts,
        /// Ordinary encoder over n symbols instead of a parity-preserving one.
        #[arg(short)]
        n: Option<u64>,
        #[arg(short, long = "rmax")]
        r: usize,
        #[command(flatten)]
        search: SearchOpts,
    },
    /// Checks an encoder graph against a constraint graph.
    Verify {
        encoder: String,
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        counts: Counts,
        /// Ordinary verification over n symbols.
        #[arg(short)]
        n: Option<u64>,
    },
    /// Assigns binary tags to an encoder graph.
    Tag {
        encoder: String,
        /// Ordinary tags (no parity matching).
        #[arg(long)]
        ordinary: bool,
        #[arg(long)]
        start: Option<String>,
    },
    /// Encodes whitespace-separated tags from standard input.
    Encode {
        encoder: String,
        #[arg(long)]
        start: Option<String>,
    },
    /// Decodes whitespace-separated labels from standard input.
    Decode {
        encoder: String,
        #[arg(long)]
        start: Option<String>,
    },
    /// Whether condition (b) can fail exactly on a set of lengths.
    Admissible {
        #[command(flatten)]
        counts: Counts,
        #[arg(short)]
        r: usize,
        /// Comma-separated lengths in 1..r-1.
        #[arg(long, value_delimiter = ',')]
        zset: Vec<usize>,
    },
    /// Bounded exhaustive search for a deterministic parity-preserving encoder.
    SearchNone {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        counts: Counts,
        #[arg(short, long)]
        rmax: usize,
        #[arg(long, default_value_t = 2)]
        max_states: usize,
        #[command(flatten)]
        search: SearchOpts,
    },
}

fn read_file(spec: &str) -> Result<GraphFile> {
    match spec.strip_prefix('@') {
        Some(name) => Ok(fixtures::file(name)?),
        None => load(&PathBuf::from(spec)).with_context(|| format!("reading {spec}")),
    }
}

fn read_graph(g: &GraphArg) -> Result<LabeledGraph> {
    let graph = read_file(&g.graph)?.graph()?;
    match &g.partition {
        None => Ok(graph),
        Some(p) => {
            let odd: Vec<&str> = p.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            Ok(graph.with_alphabet(graph.alphabet().repartition(odd)?)?)
        }
    }
}

fn read_tagged(spec: &str, start: &Option<String>) -> Result<TaggedEncoder> {
    let t = read_file(spec)?.tagged()?;
    Ok(match start {
        Some(s) => {
            let u = t.graph().state_index(s)?;
            t.with_start(u)?
        }
        None => t,
    })
}

struct Out {
    json: bool,
    text: String,
    value: Value,
    code: u8,
}

impl Out {
    fn new(json: bool) -> Self {
        Out {
            json,
            text: String::new(),
            value: Value::Null,
            code: 0,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn emit(self) -> ExitCode {
        let mut stdout = io::stdout().lock();
        let _ = if self.json {
            writeln!(stdout, "{}", serde_json::to_string_pretty(&self.value).expect("json values serialize"))
        } else {
            write!(stdout, "{}", self.text)
        };
        ExitCode::from(self.code)
    }
}

fn seq<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn principal_json(g: &LabeledGraph, p: &PrincipalResult) -> Value {
    json!({
        "principal_states": p.state_names(g),
        "cuts": p.cuts.iter().map(|c| json!({
            "state": g.state_name(c.state),
            "edges": c.edges.iter().map(|e| json!({
                "label": g.alphabet().render(&e.label),
                "to": g.state_name(e.to),
            })).collect::<Vec<_>>(),
            "distribution": c.distribution,
            "report": c.report,
        })).collect::<Vec<_>>(),
    })
}

fn principal_text(out: &mut Out, g: &LabeledGraph, p: &PrincipalResult) {
    out.line(format!("principal states: {{{}}}", p.state_names(g).join(", ")));
    for c in &p.cuts {
        let mut labels: Vec<String> = c
            .edges
            .iter()
            .map(|e| format!("{} -> {}", g.alphabet().render(&e.label), g.state_name(e.to)))
            .collect();
        labels.sort();
        out.line(format!("  {}: {}", g.state_name(c.state), labels.join(", ")));
        out.line(format!("    {} {}", c.distribution, c.report));
    }
}

fn encoder_file(g: &LabeledGraph, enc: &EncoderCandidate) -> GraphFile {
    let mut f = GraphFile::from_graph(&enc.graph);
    f.principal_states = Some(enc.principal.state_names(g));
    f.trim_log = Some(enc.trim_log.clone());
    f
}

fn read_stream(alphabet: &ParityAlphabet) -> std::result::Result<Vec<usize>, String> {
    let mut input = String::new();
    io::stdin().read_to_string(&mut input).map_err(|e| e.to_string())?;
    input
        .split_whitespace()
        .map(|tok| alphabet.lookup(tok).map_err(|e| e.to_string()))
        .collect()
}

fn stream(json: bool, t: &TaggedEncoder, forward: bool) -> ExitCode {
    let (inp, outp) = if forward {
        (t.tag_alphabet(), t.graph().alphabet())
    } else {
        (t.graph().alphabet(), t.tag_alphabet())
    };
    let symbols = match read_stream(inp) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(STREAM_PARSE);
        }
    };
    let res = if forward { encode(t, &symbols) } else { decode(t, &symbols) };
    let (output, code, err) = match res {
        Ok(o) => (o.output, 0, None),
        Err(e) => {
            let code = match e.kind {
                StreamErrorKind::MidEdge => MID_EDGE,
                StreamErrorKind::Unparseable => STREAM_PARSE,
            };
            let msg = e.to_string();
            (e.output, code, Some(msg))
        }
    };
    let names: Vec<&str> = output.iter().map(|&s| outp.name(s)).collect();
    let mut stdout = io::stdout().lock();
    let _ = if json {
        let v = json!({"output": names, "complete": err.is_none(), "error": err});
        writeln!(stdout, "{}", serde_json::to_string_pretty(&v).expect("json values serialize"))
    } else {
        writeln!(stdout, "{}", names.join(" "))
    };
    if let Some(e) = err {
        eprintln!("error: {e}");
    }
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut out = Out::new(cli.json);
    match cli.command {
        Command::Capacity { g } => {
            let graph = read_graph(&g)?;
            if graph.is_ordinary() {
                let c = capacity_ordinary(&graph, DEFAULT_TOL)?;
                out.line(format!("{c:.4}"));
                out.value = json!({"capacity": c});
            } else {
                let th = theta_max(&graph, DEFAULT_TOL)?;
                out.line(format!("{:.4}", th.log2()));
                out.line(format!("theta_max={th:.6}"));
                out.value = json!({"capacity": th.log2(), "theta_max": th});
            }
        }
        Command::Reduce { g } => {
            let f = GraphFile::from_graph(&reduce_to_shannon_cover(&read_graph(&g)?)?);
            out.line(f.to_json());
            out.value = serde_json::to_value(&f)?;
        }
        Command::Power { g, t } => {
            let f = GraphFile::from_graph(&graph_power(&read_graph(&g)?, t)?);
            out.line(f.to_json());
            out.value = serde_json::to_value(&f)?;
        }
        Command::ParitySplit { g } => {
            let graph = read_graph(&g)?;
            let mut parts = Vec::new();
            for b in 0..2u8 {
                let sub = parity_subgraph(&graph, b);
                out.line(format!("{}:", if b == 0 { "even" } else { "odd" }));
                for e in sub.edges() {
                    out.line(format!(
                        "  {} -> {} {}",
                        sub.state_name(e.from),
                        sub.state_name(e.to),
                        sub.alphabet().render(&e.label)
                    ));
                }
                parts.push(serde_json::to_value(GraphFile::from_graph(&sub))?);
            }
            out.value = json!({"even": parts[0], "odd": parts[1]});
        }
        Command::KraftCheck { d } => {
            let (dist, n0, n1, parity) = d.resolve()?;
            let report = check_parity_kraft(&dist, n0 as i64, n1 as i64)?;
            if parity {
                out.line(format!("{dist}"));
                out.line(format!("{report}"));
            } else {
                out.line(format!("mu=({}) K=({}) equality={}", seq(&dist.mu()), seq(&report.k_plus), report.verdict));
            }
            out.value = json!({"distribution": dist, "report": report});
            if !report.verdict {
                out.code = NEGATIVE;
            }
        }
        Command::BuildList { d } => {
            let (dist, n0, n1, parity) = d.resolve()?;
            let a = ParityAlphabet::with_counts(n0 as usize, n1 as usize)?;
            let words = if parity {
                build_parity_prefix_free(&dist, &a)
            } else {
                build_exhaustive_prefix_free(&dist.mu(), &a)
            };
            match words {
                Ok(words) => {
                    let rendered: Vec<String> = words.iter().map(|w| a.render(w)).collect();
                    for (w, s) in words.iter().zip(&rendered) {
                        if parity {
                            out.line(format!("{s} {}", if a.parity(w) == 0 { "even" } else { "odd" }));
                        } else {
                            out.line(s);
                        }
                    }
                    out.value = json!({"words": rendered});
                }
                Err(e) => {
                    out.line(format!("infeasible: {e}"));
                    out.value = json!({"words": null, "error": e.to_string()});
                    out.code = NEGATIVE;
                }
            }
        }
        Command::ValidateList { words, counts } => {
            let a = ParityAlphabet::with_counts(counts.n0 as usize, counts.n1 as usize)?;
            let parsed = words.iter().map(|w| a.parse(w)).collect::<ppvle::Result<Vec<_>>>()?;
            let v = validate_list(&parsed, &a);
            out.line(format!("prefix-free={} exhaustive={}", v.prefix_free, v.exhaustive));
            out.line(format!("{}", v.distribution));
            out.value = json!({"prefix_free": v.prefix_free, "exhaustive": v.exhaustive, "distribution": v.distribution});
            if !(v.prefix_free && v.exhaustive) {
                out.code = NEGATIVE;
            }
        }
        Command::Aev { g, n, t, cap } => {
            let graph = read_graph(&g)?;
            let a = adjacency(&graph)?.pow(t);
            let x = franaszek_reduce(&a, n, &vec![cap; a.dim()])?;
            if is_zero(&x) {
                out.line(format!("no approximate eigenvector with entries up to {cap}"));
                out.code = NEGATIVE;
            } else {
                out.line(format!("x=({})", seq(&x)));
            }
            out.value = json!({"vector": x, "cap": cap});
        }
        Command::FixedExistence {
            g,
            t,
            counts,
            cap,
            deterministic,
        } => {
            let graph = read_graph(&g)?;
            let mode = if deterministic { ExistenceMode::Deterministic } else { ExistenceMode::Bounded(cap) };
            let e = fixed_length_existence(&graph, t, counts.n0, counts.n1, mode)?;
            match &e {
                Existence::Exists(x) => out.line(format!("exists: x=({})", seq(x))),
                Existence::NoneDeterministic => {
                    out.line("no 0-1 vector: no deterministic encoder");
                    out.code = NEGATIVE;
                }
                Existence::EmptyUnderCap(c) => {
                    out.line(format!("empty under cap {c}"));
                    out.code = NEGATIVE;
                }
            }
            out.value = serde_json::to_value(&e)?;
        }
        Command::Principal { g, n, r } => {
            let graph = read_graph(&g)?;
            let p = ordinary_principal_states(&graph, n, r)?;
            if p.is_empty() {
                out.line(format!("no principal states with r <= {r}"));
                out.code = NEGATIVE;
            } else {
                principal_text(&mut out, &graph, &p);
            }
            out.value = principal_json(&graph, &p);
        }
        Command::PpPrincipal { g, counts, r, search } => {
            let graph = reduce_to_shannon_cover(&read_graph(&g)?)?;
            match pp_principal_search(&graph, counts.n0, counts.n1, r, &search.budget())? {
                PpSearch::Found(p) => {
                    principal_text(&mut out, &graph, &p);
                    let h = cut_graph(&graph, &p)?;
                    let labels: Vec<String> = (0..h.edges().len()).map(|e| h.render_label(e)).collect();
                    out.line(format!("cut labels: {{{}}}", labels.join(", ")));
                    out.value = principal_json(&graph, &p);
                }
                PpSearch::NoneWithin { r } => {
                    out.line(format!("no parity-preserving principal states with r <= {r}"));
                    out.value = json!({"principal_states": [], "r": r});
                    out.code = NEGATIVE;
                }
                PpSearch::Inconclusive(why) => {
                    out.line(format!("inconclusive: {why}"));
                    out.value = json!({"inconclusive": why});
                    out.code = NEGATIVE;
                }
            }
        }
        Command::Synth {
            g,
            counts,
            n,
            r,
            search,
        } => {
            let graph = reduce_to_shannon_cover(&read_graph(&g)?)?;
            let (n0, n1, parity) = match n {
                Some(n) => (n, 0, false),
                None => (counts.n0, counts.n1, true),
            };
            match synthesize(&graph, n0, n1, r, parity, &search.budget())? {
                Synthesis::Encoder(enc) => {
                    let f = encoder_file(&graph, &enc);
                    out.line(f.to_json());
                    out.value = serde_json::to_value(&f)?;
                }
                Synthesis::None { r } => {
                    out.line(format!("no principal states with r <= {r}"));
                    out.value = json!({"encoder": null, "r": r});
                    out.code = NEGATIVE;
                }
                Synthesis::Inconclusive(why) => {
                    out.line(format!("inconclusive: {why}"));
                    out.value = json!({"inconclusive": why});
                    out.code = NEGATIVE;
                }
            }
        }
        Command::Verify { encoder, g, counts, n } => {
            let e = read_file(&encoder)?.graph()?;
            let graph = read_graph(&g)?;
            let e = e.with_alphabet(graph.alphabet().clone()).context("encoder and constraint alphabets differ")?;
            let (n0, n1, parity) = match n {
                Some(n) => (n, 0, false),
                None => (counts.n0, counts.n1, true),
            };
            if !is_deterministic(&e) {
                out.line("not deterministic");
                out.value = json!({"deterministic": false});
                out.code = NEGATIVE;
            } else {
                let rep = verify_vle(&e, &graph, n0, n1, parity)?;
                out.line(format!("containment={}", rep.containment));
                let mut states = Vec::new();
                for s in &rep.states {
                    let mut line = format!("{}: {} kraft-equality={}", s.state, s.distribution, s.kraft_equality);
                    if parity {
                        line.push_str(&format!(" K-=0:{}", s.k_minus_zero));
                        if !s.prefix_failures.is_empty() {
                            line.push_str(&format!(" prefix inequality fails at l={}", seq(&s.prefix_failures)));
                        }
                    }
                    out.line(line);
                    states.push(json!({
                        "state": s.state,
                        "distribution": s.distribution,
                        "report": s.report,
                        "kraft_equality": s.kraft_equality,
                        "prefix_failures": s.prefix_failures,
                        "k_minus_zero": s.k_minus_zero,
                    }));
                }
                out.line(format!("passed={}", rep.passed()));
                out.value = json!({"deterministic": true, "containment": rep.containment, "parity": parity,
                    "states": states, "passed": rep.passed()});
                if !rep.passed() {
                    out.code = NEGATIVE;
                }
            }
        }
        Command::Tag {
            encoder,
            ordinary,
            start,
        } => {
            let e = read_file(&encoder)?.graph()?;
            let s = match &start {
                Some(s) => e.state_index(s)?,
                None => 0,
            };
            let t = assign_tags(&e, &ParityAlphabet::binary(), !ordinary, s)?;
            let f = GraphFile::from_tagged(&t);
            out.line(f.to_json());
            out.value = serde_json::to_value(&f)?;
        }
        Command::Encode { encoder, start } => {
            let t = read_tagged(&encoder, &start)?;
            return Ok(stream(cli.json, &t, true));
        }
        Command::Decode { encoder, start } => {
            let t = read_tagged(&encoder, &start)?;
            return Ok(stream(cli.json, &t, false));
        }
        Command::Admissible { counts, r, zset } => {
            let z: BTreeSet<usize> = zset.into_iter().collect();
            let w = is_admissible(&z, counts.n0 as i64, counts.n1 as i64, r)?;
            let mut line = if w.admissible { "admissible".to_string() } else { "inadmissible".to_string() };
            if let Some(xi) = &w.xi {
                line.push_str(&format!("; xi=({})", seq(xi)));
            }
            out.line(line);
            if let Some(d) = &w.witness {
                out.line(format!("witness {d}"));
            }
            out.value = json!({"zset": w.zset, "xi": w.xi, "witness": w.witness, "admissible": w.admissible});
            if !w.admissible {
                out.code = NEGATIVE;
            }
        }
        Command::SearchNone {
            g,
            counts,
            rmax,
            max_states,
            search,
        } => {
            let graph = read_graph(&g)?;
            let rep = search_none(&graph, counts.n0, counts.n1, rmax, max_states, &search.budget())?;
            let mut cands = Vec::new();
            for c in &rep.candidates {
                let verdict = match &c.failure {
                    None => "passes".to_string(),
                    Some((s, kind)) => format!("{s} fails {kind}"),
                };
                out.line(format!("r={} {{{}}}: {verdict}", c.r, c.states.join(", ")));
                cands.push(json!({
                    "r": c.r,
                    "states": c.states,
                    "failure": c.failure.as_ref().map(|(s, k)| json!({"state": s, "kind": k.to_string()})),
                }));
            }
            let found = rep.found.as_ref().map(|enc| encoder_file(&rep.cover, enc));
            match (&found, &rep.inconclusive) {
                (_, Some(why)) => {
                    out.line(format!("inconclusive: {why}"));
                    out.code = NEGATIVE;
                }
                (Some(_), None) => {
                    let h = &rep.found.as_ref().expect("matched above").graph;
                    let labels: Vec<String> = (0..h.edges().len()).map(|e| h.render_label(e)).collect();
                    out.line(format!("found encoder with labels {{{}}}", labels.join(", ")));
                }
                (None, None) => {
                    out.line(format!(
                        "none found: {} candidates with at most {} states, r <= {}",
                        rep.candidates.len(),
                        rep.max_states,
                        rep.rmax
                    ));
                    out.code = NEGATIVE;
                }
            }
            out.value = json!({
                "rmax": rep.rmax,
                "max_states": rep.max_states,
                "candidates": cands,
                "passing": rep.passing(),
                "found": found,
                "inconclusive": rep.inconclusive,
            });
        }
    }
    Ok(out.emit())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_valid() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ordinary_distribution_args() {
        let d = DistArg {
            eta: vec![],
            omega: vec![],
            mu: vec![1, 1, 2],
            n: Some(2),
            counts: Counts { n0: 1, n1: 1 },
        };
        let (dist, n0, n1, parity) = d.resolve().unwrap();
        assert_eq!((dist.mu(), n0, n1, parity), (vec![1, 1, 2], 2, 0, false));
    }
}
