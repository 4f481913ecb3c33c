//! Line-oriented certificates for every constructed or searched object.
//!
//! ```text
//! certificate partition
//! group Z9
//! m 3
//! block (0) (1) (8)
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Every certificate
//! re-parses to an equal value and can be re-verified with
//! [`Certificate::verify`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphs::{verify_labeling, Graph, Labeling, Verdict};
use crate::group::{GroupElement, GroupSpec};
use crate::kotzig::{
    verify_group_kotzig, verify_int_kotzig, GroupKotzigArray, IntKotzigArray, KotzigArray,
};
use crate::oracle::{verify_unequal_partition, SearchReport, UnequalPartition};
use crate::zsp::{verify_triple_bijection, verify_zsp, TripleBijection, ZeroSumPartition};

/// Which search produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchKind {
    Zsp,
    Bijection,
    Kotzig,
    Labeling,
    Conjecture,
}

impl SearchKind {
    pub fn name(self) -> &'static str {
        match self {
            SearchKind::Zsp => "zsp",
            SearchKind::Bijection => "bijection",
            SearchKind::Kotzig => "kotzig",
            SearchKind::Labeling => "labeling",
            SearchKind::Conjecture => "conjecture",
        }
    }
}

impl FromStr for SearchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            SearchKind::Zsp,
            SearchKind::Bijection,
            SearchKind::Kotzig,
            SearchKind::Labeling,
            SearchKind::Conjecture,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::Parameter(format!("unknown search kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Partition {
        spec: GroupSpec,
        partition: ZeroSumPartition,
    },
    Bijection {
        spec: GroupSpec,
        bijection: TripleBijection,
    },
    Kotzig(KotzigArray),
    Labeling {
        graph: Graph,
        labeling: Labeling,
    },
    Unequal {
        spec: GroupSpec,
        parts: Vec<usize>,
        partition: UnequalPartition,
    },
    Search {
        kind: SearchKind,
        report: Box<SearchReport<Certificate>>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Partition { .. } => "partition",
            Certificate::Bijection { .. } => "bijection",
            Certificate::Kotzig(KotzigArray::Group(_)) => "kotzig",
            Certificate::Kotzig(KotzigArray::Int(_)) => "kotzig-int",
            Certificate::Labeling { .. } => "labeling",
            Certificate::Unequal { .. } => "unequal-partition",
            Certificate::Search { .. } => "search",
        }
    }

    /// Re-runs the owning verifier. `Ok` carries a one-line summary, `Err`
    /// the first violation.
    pub fn verify(&self) -> std::result::Result<String, String> {
        match self {
            Certificate::Partition { spec, partition } => {
                verify_zsp(spec, partition, partition.block_size)
                    .map(|_| {
                        format!(
                            "{}-zero-sum partition of {spec} into {} blocks",
                            partition.block_size,
                            partition.len()
                        )
                    })
                    .map_err(|v| v.to_string())
            }
            Certificate::Bijection { spec, bijection } => verify_triple_bijection(spec, bijection)
                .map(|_| format!("triple bijection of {spec}"))
                .map_err(|v| v.to_string()),
            Certificate::Kotzig(KotzigArray::Group(a)) => verify_group_kotzig(a)
                .map(|mu| {
                    format!(
                        "{}x{} Kotzig array over {} with column sum {mu}",
                        a.rows(),
                        a.cols(),
                        a.spec
                    )
                })
                .map_err(|v| v.to_string()),
            Certificate::Kotzig(KotzigArray::Int(a)) => verify_int_kotzig(a)
                .map(|s| {
                    format!(
                        "{}x{} integer Kotzig array with column sum {s}",
                        a.rows(),
                        a.cols()
                    )
                })
                .map_err(|v| v.to_string()),
            Certificate::Labeling { graph, labeling } => {
                match verify_labeling(graph, labeling).map_err(|e| e.to_string())? {
                    Verdict::Magic(mu) => Ok(format!(
                        "{}-distance magic labeling with magic constant {mu}",
                        labeling.spec()
                    )),
                    other => Err(other.to_string()),
                }
            }
            Certificate::Unequal {
                spec,
                parts,
                partition,
            } => verify_unequal_partition(spec, parts, partition).map(|_| {
                format!("zero-sum partition of {spec} minus identity into parts {parts:?}")
            }),
            Certificate::Search { kind, report } => match &report.witness {
                Some(w) => w
                    .verify()
                    .map(|s| format!("{} search found: {s}", kind.name())),
                None if report.found => Err("report claims a witness but carries none".into()),
                None if report.exhausted => Ok(format!(
                    "{} search exhausted after {} nodes: no witness exists",
                    kind.name(),
                    report.nodes
                )),
                None => Ok(format!(
                    "{} search stopped at the budget after {} nodes: inconclusive",
                    kind.name(),
                    report.nodes
                )),
            },
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate {}", self.kind())?;
        match self {
            Certificate::Partition { spec, partition } => {
                writeln!(f, "group {spec}")?;
                writeln!(f, "m {}", partition.block_size)?;
                for b in &partition.blocks {
                    writeln!(f, "block {}", join(b))?;
                }
            }
            Certificate::Bijection { spec, bijection } => {
                writeln!(f, "group {spec}")?;
                writeln!(f, "# g phi(g) psi(g)")?;
                for row in bijection.rows(spec) {
                    writeln!(f, "row {}", join(&row))?;
                }
            }
            Certificate::Kotzig(KotzigArray::Group(a)) => {
                writeln!(f, "group {}", a.spec)?;
                writeln!(f, "rows {}", a.rows())?;
                writeln!(f, "cols {}", a.cols())?;
                for row in &a.grid {
                    writeln!(f, "row {}", join(row))?;
                }
            }
            Certificate::Kotzig(KotzigArray::Int(a)) => {
                writeln!(f, "rows {}", a.rows())?;
                writeln!(f, "cols {}", a.cols())?;
                for row in &a.grid {
                    writeln!(f, "row {}", join(row))?;
                }
            }
            Certificate::Labeling { graph, labeling } => {
                writeln!(f, "group {}", labeling.spec())?;
                writeln!(f, "graph")?;
                write!(f, "{graph}")?;
                writeln!(f, "end")?;
                for v in 0..labeling.len() {
                    writeln!(f, "{v}\t{}", labeling.label(v))?;
                }
            }
            Certificate::Unequal {
                spec,
                parts,
                partition,
            } => {
                writeln!(f, "group {spec}")?;
                writeln!(f, "parts {}", join(parts))?;
                for b in &partition.blocks {
                    writeln!(f, "block {}", join(b))?;
                }
            }
            Certificate::Search { kind, report } => {
                writeln!(f, "kind {}", kind.name())?;
                writeln!(f, "found {}", report.found)?;
                writeln!(f, "exhausted {}", report.exhausted)?;
                writeln!(f, "nodes {}", report.nodes)?;
                if let Some(w) = &report.witness {
                    writeln!(f, "witness")?;
                    write!(f, "{w}")?;
                }
            }
        }
        Ok(())
    }
}

/// Significant lines with their 1-based numbers.
struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(lines: Vec<(usize, &'a str)>) -> Self {
        Cursor { lines, pos: 0 }
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(0, |l| l.0)
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Result<(usize, &'a str)> {
        let l = self
            .peek()
            .ok_or_else(|| Error::format(self.last_line(), "unexpected end of certificate"))?;
        self.pos += 1;
        Ok(l)
    }

    /// The next line must read `<key> <value>`; returns the value.
    fn field(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (line, text) = self.next()?;
        match split_key(text) {
            (k, rest) if k == key => Ok((line, rest)),
            _ => Err(Error::format(
                line,
                format!("expected `{key} ...`, got `{text}`"),
            )),
        }
    }

    fn parsed<T: FromStr>(&mut self, key: &str) -> Result<T> {
        let (line, v) = self.field(key)?;
        v.parse()
            .map_err(|_| Error::format(line, format!("cannot parse `{v}` as {key}")))
    }

    /// Consumes lines `<key> ...` while they last.
    fn repeated(&mut self, key: &str) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        while let Some((line, text)) = self.peek() {
            match split_key(text) {
                (k, rest) if k == key => {
                    out.push((line, rest));
                    self.pos += 1;
                }
                _ => break,
            }
        }
        out
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some((line, text)) => Err(Error::format(line, format!("unexpected line `{text}`"))),
        }
    }
}

fn split_key(text: &str) -> (&str, &str) {
    match text.split_once(char::is_whitespace) {
        Some((k, rest)) => (k, rest.trim()),
        None => (text, ""),
    }
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Format { .. } => e,
        other => Error::format(line, other.to_string()),
    })
}

/// Whitespace-separated group elements.
fn elements(spec: &GroupSpec, line: usize, text: &str) -> Result<Vec<GroupElement>> {
    text.split_whitespace()
        .map(|t| {
            let e: GroupElement = at_line(line, t.parse())?;
            at_line(line, spec.check(&e))?;
            Ok(e)
        })
        .collect()
}

fn integers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::format(line, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

fn parse_bool(line: usize, text: &str) -> Result<bool> {
    text.parse()
        .map_err(|_| Error::format(line, format!("expected true or false, got `{text}`")))
}

fn parse_cursor(c: &mut Cursor) -> Result<Certificate> {
    let (line, kind) = c.field("certificate")?;
    let cert = match kind {
        "partition" => {
            let spec: GroupSpec = c.parsed("group")?;
            let m = c.parsed("m")?;
            let blocks = c
                .repeated("block")
                .into_iter()
                .map(|(l, t)| elements(&spec, l, t))
                .collect::<Result<_>>()?;
            Certificate::Partition {
                spec,
                partition: ZeroSumPartition {
                    block_size: m,
                    blocks,
                },
            }
        }
        "bijection" => {
            let spec: GroupSpec = c.parsed("group")?;
            let mut rows = Vec::new();
            for (l, t) in c.repeated("row") {
                let row = elements(&spec, l, t)?;
                let row: [GroupElement; 3] = row
                    .try_into()
                    .map_err(|_| Error::format(l, "a row needs exactly three elements"))?;
                rows.push(row);
            }
            let bijection = at_line(line, TripleBijection::from_rows(&spec, &rows))?;
            Certificate::Bijection { spec, bijection }
        }
        "kotzig" => {
            let spec: GroupSpec = c.parsed("group")?;
            let j: usize = c.parsed("rows")?;
            let (kl, k) = c.field("cols")?;
            if k.parse::<usize>().ok() != Some(spec.order()) {
                return Err(Error::format(
                    kl,
                    format!("cols must equal the order of {spec}"),
                ));
            }
            let grid: Vec<_> = c
                .repeated("row")
                .into_iter()
                .map(|(l, t)| elements(&spec, l, t))
                .collect::<Result<_>>()?;
            if grid.len() != j {
                return Err(Error::format(
                    line,
                    format!("declared {j} rows, found {}", grid.len()),
                ));
            }
            Certificate::Kotzig(KotzigArray::Group(GroupKotzigArray { spec, grid }))
        }
        "kotzig-int" => {
            let j: usize = c.parsed("rows")?;
            let k: usize = c.parsed("cols")?;
            let grid: Vec<_> = c
                .repeated("row")
                .into_iter()
                .map(|(l, t)| integers(l, t))
                .collect::<Result<_>>()?;
            if grid.len() != j {
                return Err(Error::format(
                    line,
                    format!("declared {j} rows, found {}", grid.len()),
                ));
            }
            Certificate::Kotzig(KotzigArray::Int(IntKotzigArray { k, grid }))
        }
        "labeling" => {
            let spec: GroupSpec = c.parsed("group")?;
            c.field("graph")?;
            let mut graph_text = String::new();
            let mut graph_line = line;
            loop {
                let (l, t) = c.next()?;
                if t == "end" {
                    break;
                }
                graph_line = l;
                graph_text.push_str(t);
                graph_text.push('\n');
            }
            let graph: Graph = at_line(graph_line, graph_text.parse())?;
            let mut labels = Vec::new();
            while let Some((l, t)) = c.peek() {
                let (v, e) = t
                    .split_once('\t')
                    .or_else(|| t.split_once(' '))
                    .ok_or_else(|| Error::format(l, "expected `vertex <tab> element`"))?;
                if v.trim().parse::<usize>().ok() != Some(labels.len()) {
                    return Err(Error::format(
                        l,
                        format!("expected vertex {}", labels.len()),
                    ));
                }
                labels.extend(elements(&spec, l, e)?);
                c.pos += 1;
            }
            let labeling = at_line(c.last_line(), Labeling::new(&spec, &labels))?;
            Certificate::Labeling { graph, labeling }
        }
        "unequal-partition" => {
            let spec: GroupSpec = c.parsed("group")?;
            let (pl, p) = c.field("parts")?;
            let parts = integers(pl, p)?;
            let blocks = c
                .repeated("block")
                .into_iter()
                .map(|(l, t)| elements(&spec, l, t))
                .collect::<Result<_>>()?;
            Certificate::Unequal {
                spec,
                parts,
                partition: UnequalPartition { blocks },
            }
        }
        "search" => {
            let kind = c.parsed("kind")?;
            let (fl, f) = c.field("found")?;
            let found = parse_bool(fl, f)?;
            let (el, e) = c.field("exhausted")?;
            let exhausted = parse_bool(el, e)?;
            let nodes = c.parsed("nodes")?;
            let witness = match c.peek() {
                Some((_, "witness")) => {
                    c.pos += 1;
                    Some(parse_cursor(c)?)
                }
                _ => None,
            };
            if found != witness.is_some() {
                return Err(Error::format(
                    fl,
                    "`found` disagrees with the presence of a witness",
                ));
            }
            Certificate::Search {
                kind,
                report: Box::new(SearchReport {
                    found,
                    witness,
                    nodes,
                    exhausted,
                }),
            }
        }
        other => {
            return Err(Error::format(
                line,
                format!("unknown certificate kind `{other}`"),
            ))
        }
    };
    Ok(cert)
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let mut c = Cursor::new(lines);
        let cert = parse_cursor(&mut c)?;
        c.finish()?;
        Ok(cert)
    }
}
