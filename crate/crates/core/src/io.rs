//! Line-oriented text formats for instances, approval elections and graphs.
//!
//! ```text
//! c optional comment
//! p maxcover <n> <m> <K>
//! s 1 2
//! s 2 3
//! ```
//!
//! Elections use `p approval <candidates> <voters> <K>` followed by one
//! `v ...` ballot per voter; graphs use `p graph <vertices> <edges> <K>` with
//! `e <u> <v>` lines. All ids are 1-based.

use std::fmt::Write as _;

use crate::election::ApprovalElection;
use crate::error::{Error, Result};
use crate::generators::Graph;
use crate::instance::Instance;

/// Any of the three input formats, distinguished by the header kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Instance(Instance),
    Election(ApprovalElection),
    Graph(Graph),
}

impl Document {
    /// Reduces elections and graphs to MaxCover.
    pub fn into_instance(self) -> Result<Instance> {
        match self {
            Document::Instance(inst) => Ok(inst),
            Document::Election(e) => Ok(e.to_maxcover()),
            Document::Graph(g) => g.to_maxvertexcover(),
        }
    }
}

struct Body<'a> {
    kind: &'a str,
    header_line: usize,
    counts: [usize; 3],
    rows: Vec<(usize, Vec<usize>)>,
}

fn number(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("non-numeric token '{token}'")))
}

fn split_lines<'a>(text: &'a str, row_tag: Option<&str>) -> Result<Body<'a>> {
    let mut header: Option<(usize, &str, [usize; 3])> = None;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        if tag == "p" {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate header"));
            }
            let parts: Vec<&str> = tokens.collect();
            if parts.len() != 4 {
                return Err(Error::parse(line_no, "malformed header"));
            }
            let counts = [
                number(parts[1], line_no)?,
                number(parts[2], line_no)?,
                number(parts[3], line_no)?,
            ];
            header = Some((line_no, parts[0], counts));
            continue;
        }
        let Some((_, kind, _)) = header else {
            return Err(Error::parse(line_no, "data line before header"));
        };
        let expected = row_tag.unwrap_or(match kind {
            "maxcover" => "s",
            "approval" => "v",
            "graph" => "e",
            _ => "",
        });
        if tag != expected {
            return Err(Error::parse(
                line_no,
                format!("expected a '{expected}' line, found '{tag}'"),
            ));
        }
        let ids = tokens
            .map(|t| number(t, line_no))
            .collect::<Result<Vec<_>>>()?;
        rows.push((line_no, ids));
    }
    let (header_line, kind, counts) =
        header.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing header"))?;
    Ok(Body {
        kind,
        header_line,
        counts,
        rows,
    })
}

fn check_row_count(body: &Body<'_>, expected: usize, what: &str) -> Result<()> {
    if body.rows.len() != expected {
        let line = body.rows.last().map_or(body.header_line, |r| r.0);
        return Err(Error::parse(
            line,
            format!(
                "header declares {expected} {what} lines, found {}",
                body.rows.len()
            ),
        ));
    }
    Ok(())
}

/// Converts 1-based ids in `row` to 0-based, checking `1..=limit`.
fn zero_based(
    row: &(usize, Vec<usize>),
    limit: usize,
    name: &str,
    bound: &str,
) -> Result<Vec<usize>> {
    row.1
        .iter()
        .map(|&id| {
            if id == 0 {
                Err(Error::parse(
                    row.0,
                    format!("{name} id 0 is not valid (ids are 1-based)"),
                ))
            } else if id > limit {
                Err(Error::parse(
                    row.0,
                    format!("{name} id {id} exceeds {bound}={limit}"),
                ))
            } else {
                Ok(id - 1)
            }
        })
        .collect()
}

pub fn parse_document(text: &str) -> Result<Document> {
    let body = split_lines(text, None)?;
    match body.kind {
        "maxcover" => build_instance(&body).map(Document::Instance),
        "approval" => build_election(&body).map(Document::Election),
        "graph" => build_graph(&body).map(Document::Graph),
        other => Err(Error::parse(
            body.header_line,
            format!("malformed header: unknown kind '{other}'"),
        )),
    }
}

fn expect_kind(body: &Body<'_>, kind: &str) -> Result<()> {
    if body.kind != kind {
        return Err(Error::parse(
            body.header_line,
            format!(
                "malformed header: expected 'p {kind}', found 'p {}'",
                body.kind
            ),
        ));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let body = split_lines(text, Some("s"))?;
    expect_kind(&body, "maxcover")?;
    build_instance(&body)
}

fn build_instance(body: &Body<'_>) -> Result<Instance> {
    let [n, m, k] = body.counts;
    check_row_count(body, m, "set")?;
    let sets = body
        .rows
        .iter()
        .map(|row| zero_based(row, n, "element", "n"))
        .collect::<Result<Vec<_>>>()?;
    Instance::new(n, sets, k)
}

pub fn parse_election(text: &str) -> Result<ApprovalElection> {
    let body = split_lines(text, Some("v"))?;
    expect_kind(&body, "approval")?;
    build_election(&body)
}

fn build_election(body: &Body<'_>) -> Result<ApprovalElection> {
    let [candidates, voters, k] = body.counts;
    check_row_count(body, voters, "ballot")?;
    let ballots = body
        .rows
        .iter()
        .map(|row| zero_based(row, candidates, "candidate", "num_candidates"))
        .collect::<Result<Vec<_>>>()?;
    ApprovalElection::new(candidates, ballots, k)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let body = split_lines(text, Some("e"))?;
    expect_kind(&body, "graph")?;
    build_graph(&body)
}

fn build_graph(body: &Body<'_>) -> Result<Graph> {
    let [vertices, edges, k] = body.counts;
    check_row_count(body, edges, "edge")?;
    let mut list = Vec::with_capacity(edges);
    for row in &body.rows {
        if row.1.len() != 2 {
            return Err(Error::parse(row.0, "edge line needs exactly two endpoints"));
        }
        let ends = zero_based(row, vertices, "vertex", "num_vertices")?;
        list.push((ends[0], ends[1]));
    }
    Ok(Graph::new(vertices, list, k))
}

fn push_row(out: &mut String, tag: char, ids: &[usize]) {
    out.push(tag);
    for id in ids {
        let _ = write!(out, " {}", id + 1);
    }
    out.push('\n');
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = format!("p maxcover {} {} {}\n", inst.n(), inst.m(), inst.k());
    for set in inst.sets() {
        push_row(&mut out, 's', set);
    }
    out
}

pub fn write_election(e: &ApprovalElection) -> String {
    let mut out = format!(
        "p approval {} {} {}\n",
        e.num_candidates(),
        e.num_voters(),
        e.committee_size()
    );
    for ballot in e.approvals() {
        push_row(&mut out, 'v', ballot);
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!(
        "p graph {} {} {}\n",
        g.num_vertices(),
        g.edges().len(),
        g.k()
    );
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
