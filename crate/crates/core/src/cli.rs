//! Command-line front end. Every invocation produces one document: a JSON
//! object in `--format json`, or in text mode the same fields as `# key:
//! value` comment lines followed by the certificate, so text output can be
//! fed straight back to `zsp verify`.
//!
//! Exit codes: 0 success or accepted certificate, 1 rejected certificate or
//! internal failure, 2 invalid input, 3 proven nonexistence, 4 search budget
//! exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::cert::{Certificate, SearchKind};
use crate::error::Error;
use crate::graphs::{
    blowup_even_label, blowup_label, eulerian_bipartite_label, lex_product, obstruction_check,
    Graph, LabeledGraph, Verdict,
};
use crate::group::GroupSpec;
use crate::kotzig::{build_group_kotzig, build_int_kotzig, KotzigArray};
use crate::oracle::{self, KotzigTarget, SearchReport, DEFAULT_BUDGET};
use crate::zsp::{triple_bijection_via, zsp, TripleStrategy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NONEXISTENT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "zsp",
    version,
    about = "Zero-sum partitions, triple bijections, Kotzig arrays and group distance magic labelings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Node budget for exhaustive searches.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, canonical form, involutions and class membership of a group.
    Info { spec: String },
    /// Partition a group into zero-sum blocks of size m.
    Zsp { spec: String, m: usize },
    /// Permutations phi, psi with g + phi(g) + psi(g) = 0.
    Bijection {
        spec: String,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
    },
    /// A j-row Kotzig array over a group, or over 0..k with --int.
    Kotzig {
        /// Group spec, or the column count k with --int.
        target: String,
        j: usize,
        #[arg(long)]
        int: bool,
    },
    /// Label a lexicographic blow-up of the graph in GRAPH with fibres of size N.
    Label {
        #[arg(value_enum)]
        family: Family,
        graph: PathBuf,
        n: usize,
        spec: String,
    },
    /// Re-verify a certificate file (any text output of this tool).
    Verify { file: PathBuf },
    /// Exhaustive search.
    Search {
        #[command(subcommand)]
        kind: SearchCommand,
    },
    /// Search every qualifying group up to MAX_ORDER and every multiset of
    /// parts >= 3 for a zero-sum partition of the non-identity elements.
    Scan { max_order: usize },
}

#[derive(Subcommand, Debug)]
enum SearchCommand {
    Zsp {
        spec: String,
        m: usize,
    },
    Bijection {
        spec: String,
    },
    Kotzig {
        target: String,
        j: usize,
        #[arg(long)]
        int: bool,
    },
    Labeling {
        graph: PathBuf,
        spec: String,
    },
    Conjecture {
        spec: String,
        #[arg(required = true)]
        parts: Vec<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Auto,
    Odd,
    Product,
    Table,
    Klein,
    Z8,
    Search,
}

impl From<Strategy> for TripleStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Auto => TripleStrategy::Auto,
            Strategy::Odd => TripleStrategy::OddClosedForm,
            Strategy::Product => TripleStrategy::Product,
            Strategy::Table => TripleStrategy::BaseTable,
            Strategy::Klein => TripleStrategy::KleinQuotient,
            Strategy::Z8 => TripleStrategy::CyclicEightQuotient,
            Strategy::Search => TripleStrategy::Search,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Blowup,
    Eulerian,
    Even,
}

/// Result of one verb before rendering.
struct Outcome {
    code: i32,
    status: &'static str,
    message: String,
    result: Map<String, Value>,
    certificate: Option<Certificate>,
}

impl Outcome {
    fn ok(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_OK,
            status: "ok",
            message: message.into(),
            result: Map::new(),
            certificate: None,
        }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.result.insert(key.to_string(), value.into());
        self
    }

    fn certificate(mut self, c: Certificate) -> Self {
        self.certificate = Some(c);
        self
    }

    fn from_error(e: &Error) -> Self {
        let (code, status) = match e {
            Error::Impossible(_) | Error::Nonexistence(_) => (EXIT_NONEXISTENT, "nonexistence"),
            Error::Internal(_) => (EXIT_REJECTED, "internal-error"),
            _ => (EXIT_INVALID, "invalid-input"),
        };
        Outcome {
            code,
            status,
            message: e.to_string(),
            result: Map::new(),
            certificate: None,
        }
    }

    fn document(&self, verb: &str) -> Value {
        json!({
            "verb": verb,
            "status": self.status,
            "exit_code": self.code,
            "message": self.message,
            "result": Value::Object(self.result.clone()),
            "certificate": self.certificate.as_ref().map(|c| c.to_string()),
        })
    }
}

fn render_text(doc: &Value) -> String {
    let mut s = String::new();
    let line = |k: &str, v: &Value| match v {
        Value::String(t) => format!("# {k}: {t}\n"),
        other => format!("# {k}: {other}\n"),
    };
    for key in ["verb", "status", "message"] {
        s.push_str(&line(key, &doc[key]));
    }
    if let Some(result) = doc["result"].as_object() {
        for (k, v) in result {
            s.push_str(&line(k, v));
        }
    }
    if let Some(c) = doc["certificate"].as_str() {
        s.push_str(c);
    }
    s
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let verb = verb_name(&cli.command);
    let outcome = execute(&cli).unwrap_or_else(|e| Outcome::from_error(&e));
    let doc = outcome.document(verb);
    let written = match cli.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("JSON values serialise")
        ),
        Format::Text => write!(out, "{}", render_text(&doc)),
    };
    if written.is_err() {
        return EXIT_REJECTED;
    }
    if cli.format == Format::Text && outcome.code != EXIT_OK {
        let _ = writeln!(err, "zsp: {}", outcome.message);
    }
    outcome.code
}

fn verb_name(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::Zsp { .. } => "zsp",
        Command::Bijection { .. } => "bijection",
        Command::Kotzig { .. } => "kotzig",
        Command::Label { .. } => "label",
        Command::Verify { .. } => "verify",
        Command::Search { .. } => "search",
        Command::Scan { .. } => "scan",
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    read(path)?.parse()
}

fn kotzig_target(target: &str, int: bool) -> Result<KotzigTarget, Error> {
    if int {
        target
            .parse()
            .map(KotzigTarget::Int)
            .map_err(|_| Error::Parameter(format!("`{target}` is not a column count")))
    } else {
        target.parse().map(KotzigTarget::Group)
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Info { spec } => info(&spec.parse()?),
        Command::Zsp { spec, m } => {
            let spec: GroupSpec = spec.parse()?;
            let p = zsp(&spec, *m)?;
            Ok(Outcome::ok(format!("{m}-zero-sum partition of {spec}"))
                .with("group", spec.to_string())
                .with("m", *m)
                .with("blocks", p.len())
                .certificate(Certificate::Partition { spec, partition: p }))
        }
        Command::Bijection { spec, strategy } => {
            let spec: GroupSpec = spec.parse()?;
            let tb = triple_bijection_via(&spec, (*strategy).into())?;
            Ok(Outcome::ok(format!("triple bijection of {spec}"))
                .with("group", spec.to_string())
                .with("strategy", format!("{strategy:?}").to_lowercase())
                .certificate(Certificate::Bijection {
                    spec,
                    bijection: tb,
                }))
        }
        Command::Kotzig { target, j, int } => {
            let array = match kotzig_target(target, *int)? {
                KotzigTarget::Group(spec) => KotzigArray::Group(build_group_kotzig(&spec, *j)?),
                KotzigTarget::Int(k) => KotzigArray::Int(build_int_kotzig(*j, k)?),
            };
            let cert = Certificate::Kotzig(array);
            let summary = cert.verify().map_err(Error::Internal)?;
            Ok(Outcome::ok(summary).with("rows", *j).certificate(cert))
        }
        Command::Label {
            family,
            graph,
            n,
            spec,
        } => label(*family, &read_graph(graph)?, *n, &spec.parse()?),
        Command::Verify { file } => {
            let cert: Certificate = read(file)?.parse()?;
            let kind = cert.kind();
            Ok(match cert.verify() {
                Ok(summary) => Outcome::ok(summary)
                    .with("kind", kind)
                    .with("accepted", true),
                Err(violation) => Outcome {
                    code: EXIT_REJECTED,
                    status: "rejected",
                    message: violation,
                    result: Map::new(),
                    certificate: None,
                }
                .with("kind", kind)
                .with("accepted", false),
            })
        }
        Command::Search { kind } => search(kind, cli.budget),
        Command::Scan { max_order } => scan(*max_order, cli.budget),
    }
}

fn info(spec: &GroupSpec) -> Result<Outcome, Error> {
    let inv = spec.involutions();
    let involutions: Vec<String> = inv.elements.iter().map(|e| e.to_string()).collect();
    Ok(Outcome::ok(format!("{spec}"))
        .with("order", spec.order())
        .with("canonical", spec.canonical().to_string())
        .with("involutions", inv.len())
        .with("involution_elements", involutions)
        .with("in_class_g", if spec.in_class_g() { "yes" } else { "no" })
        .with("sum_all", spec.sum_all().to_string()))
}

fn label(family: Family, g: &Graph, n: usize, spec: &GroupSpec) -> Result<Outcome, Error> {
    let built = match family {
        Family::Blowup => blowup_label(g, n, spec),
        Family::Eulerian => eulerian_bipartite_label(g, n, spec),
        Family::Even => blowup_even_label(g, n, spec),
    };
    let LabeledGraph { graph, labeling } = match built {
        Ok(l) => l,
        Err(e) if e.is_nonexistence() => {
            let blown = lex_product(g, &Graph::empty(n));
            let mut o = Outcome::from_error(&e);
            if blown.vertex_count() == spec.order() {
                if let Verdict::Impossible(ob) = obstruction_check(&blown, spec)? {
                    o = o.with("obstruction", ob.name());
                }
            }
            return Ok(o);
        }
        Err(e) => return Err(e),
    };
    let mu = match crate::graphs::verify_labeling(&graph, &labeling)? {
        Verdict::Magic(mu) => mu,
        other => return Err(Error::Internal(format!("constructed labeling: {other}"))),
    };
    Ok(Outcome::ok(format!("magic constant {mu}"))
        .with("vertices", graph.vertex_count())
        .with("edges", graph.edge_count())
        .with("magic_constant", mu.to_string())
        .certificate(Certificate::Labeling { graph, labeling }))
}

fn report_outcome(
    kind: SearchKind,
    instance: String,
    report: SearchReport<Certificate>,
) -> Outcome {
    let (code, status, message) = match (report.found, report.exhausted) {
        (true, _) => (EXIT_OK, "ok", format!("{instance}: found")),
        (false, true) => (
            EXIT_NONEXISTENT,
            "nonexistence",
            format!("{instance}: exhaustive search found none"),
        ),
        (false, false) => (
            EXIT_BUDGET,
            "budget-exhausted",
            format!("{instance}: budget of nodes spent without an answer"),
        ),
    };
    let mut o = Outcome {
        code,
        status,
        message,
        result: Map::new(),
        certificate: None,
    }
    .with("kind", kind.name())
    .with("found", report.found)
    .with("exhausted", report.exhausted)
    .with("nodes", report.nodes);
    o.certificate = Some(Certificate::Search {
        kind,
        report: Box::new(report),
    });
    o
}

fn search(cmd: &SearchCommand, budget: u64) -> Result<Outcome, Error> {
    Ok(match cmd {
        SearchCommand::Zsp { spec, m } => {
            let spec: GroupSpec = spec.parse()?;
            let r = oracle::search_zsp(&spec, *m, budget)?;
            let instance = format!("{m}-zero-sum partition of {spec}");
            report_outcome(
                SearchKind::Zsp,
                instance,
                r.map(|p| Certificate::Partition { spec, partition: p }),
            )
        }
        SearchCommand::Bijection { spec } => {
            let spec: GroupSpec = spec.parse()?;
            let r = oracle::search_triple_bijection(&spec, budget)?;
            let instance = format!("triple bijection of {spec}");
            report_outcome(
                SearchKind::Bijection,
                instance,
                r.map(|tb| Certificate::Bijection {
                    spec,
                    bijection: tb,
                }),
            )
        }
        SearchCommand::Kotzig { target, j, int } => {
            let t = kotzig_target(target, *int)?;
            let r = oracle::search_kotzig(&t, *j, budget)?;
            let over = match &t {
                KotzigTarget::Group(s) => s.to_string(),
                KotzigTarget::Int(k) => format!("0..{k}"),
            };
            let instance = format!("{j}-row Kotzig array over {over}");
            report_outcome(SearchKind::Kotzig, instance, r.map(Certificate::Kotzig))
        }
        SearchCommand::Labeling { graph, spec } => {
            let spec: GroupSpec = spec.parse()?;
            let g = read_graph(graph)?;
            let r = oracle::search_labeling(&g, &spec, budget)?;
            let instance = format!("{spec}-distance magic labeling");
            let verdict = obstruction_check(&g, &spec)?;
            let mut o = report_outcome(
                SearchKind::Labeling,
                instance,
                r.map(|l| Certificate::Labeling {
                    graph: g,
                    labeling: l,
                }),
            );
            if let Verdict::Impossible(ob) = verdict {
                o = o.with("obstruction", ob.name());
            }
            o
        }
        SearchCommand::Conjecture { spec, parts } => {
            let spec: GroupSpec = spec.parse()?;
            let r = oracle::conjecture_scan(&spec, parts, budget)?;
            let instance = format!("zero-sum partition of {spec} minus identity into {parts:?}");
            let parts = parts.clone();
            report_outcome(
                SearchKind::Conjecture,
                instance,
                r.map(|p| Certificate::Unequal {
                    spec,
                    parts,
                    partition: p,
                }),
            )
        }
    })
}

fn scan(max_order: usize, budget: u64) -> Result<Outcome, Error> {
    let records = oracle::scan(max_order, budget)?;
    let mut counterexamples = Vec::new();
    let mut inconclusive = Vec::new();
    let mut rows = Vec::new();
    let mut compositions: u128 = 0;
    for r in &records {
        let label = format!("{} {:?}", r.spec, r.parts);
        compositions += r.compositions;
        if !r.report.found {
            if r.report.exhausted {
                counterexamples.push(label.clone());
            } else {
                inconclusive.push(label.clone());
            }
        }
        rows.push(json!({
            "group": r.spec.to_string(),
            "parts": r.parts,
            "compositions": r.compositions as u64,
            "found": r.report.found,
            "exhausted": r.report.exhausted,
            "nodes": r.report.nodes,
        }));
    }
    let (code, status, message) = if !counterexamples.is_empty() {
        (
            EXIT_NONEXISTENT,
            "counterexample",
            format!("{} instance(s) have no partition", counterexamples.len()),
        )
    } else if !inconclusive.is_empty() {
        (
            EXIT_BUDGET,
            "budget-exhausted",
            format!("{} instance(s) hit the budget", inconclusive.len()),
        )
    } else {
        (
            EXIT_OK,
            "ok",
            format!(
                "no counterexample among {} instances ({compositions} compositions)",
                records.len()
            ),
        )
    };
    Ok(Outcome {
        code,
        status,
        message,
        result: Map::new(),
        certificate: None,
    }
    .with("max_order", max_order)
    .with("instances", records.len())
    .with("compositions", compositions as u64)
    .with("counterexamples", counterexamples)
    .with("inconclusive", inconclusive)
    .with("records", rows))
}
