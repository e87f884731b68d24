//! Line-oriented text formats. All ids in files are 1-based.
//!
//! Graphs (`.ecg`):
//!
//! ```text
//! c optional comment
//! p ecg <n> <alpha> <m>
//! e <u> <v> <color>        (m lines; repeat a line for multiplicity, u = v for a loop)
//! ```
//!
//! Set systems (`.hss`): `p hss <universe> <groups>`, then `g <index>` opens
//! a group and `s <e1> <e2> ..` adds a set to the open group.
//!
//! Solutions: `s yes` followed by `v <id>` lines in ascending order, or `s no`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::generators::SetSystem;
use crate::graph::{EdgeColoredGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line")]
    MissingHeader,
    #[error("second header line")]
    DuplicateHeader,
    #[error("malformed header")]
    BadHeader,
    #[error("record before header")]
    BeforeHeader,
    #[error("malformed record")]
    BadRecord,
    #[error("unknown record type `{0}`")]
    UnknownRecord(String),
    #[error("vertex {0} out of range")]
    VertexRange(usize),
    #[error("color {0} out of range")]
    ColorRange(usize),
    #[error("element {0} out of range")]
    ElementRange(usize),
    #[error("group {0} out of range")]
    GroupRange(usize),
    #[error("set outside any group")]
    NoGroup,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing `s yes` or `s no` line")]
    MissingStatus,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn numbers(fields: &[&str], line: usize) -> Result<Vec<usize>, ParseError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| err(line, ParseErrorKind::BadRecord))
        })
        .collect()
}

/// A parsed `.ecg` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcgDocument {
    pub n: usize,
    pub alpha: usize,
    /// `(u, v, color)`, 1-based ids, in file order.
    pub edges: Vec<(usize, usize, usize)>,
    pub comments: Vec<String>,
}

impl EcgDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
        let mut comments = Vec::new();
        let mut last = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last = line;
            let fields: Vec<&str> = raw.split_whitespace().collect();
            let Some((&tag, rest)) = fields.split_first() else {
                continue;
            };
            match tag {
                "c" => comments.push(raw.trim_start()[1..].trim().to_string()),
                "p" => {
                    if header.is_some() {
                        return Err(err(line, ParseErrorKind::DuplicateHeader));
                    }
                    if rest.len() != 4 || rest[0] != "ecg" {
                        return Err(err(line, ParseErrorKind::BadHeader));
                    }
                    let v = numbers(&rest[1..], line)
                        .map_err(|_| err(line, ParseErrorKind::BadHeader))?;
                    header = Some((v[0], v[1], v[2]));
                }
                "e" => {
                    let Some((n, alpha, _)) = header else {
                        return Err(err(line, ParseErrorKind::BeforeHeader));
                    };
                    if rest.len() != 3 {
                        return Err(err(line, ParseErrorKind::BadRecord));
                    }
                    let v = numbers(rest, line)?;
                    for &x in &v[..2] {
                        if x == 0 || x > n {
                            return Err(err(line, ParseErrorKind::VertexRange(x)));
                        }
                    }
                    if v[2] == 0 || v[2] > alpha {
                        return Err(err(line, ParseErrorKind::ColorRange(v[2])));
                    }
                    edges.push((v[0], v[1], v[2]));
                }
                other => return Err(err(line, ParseErrorKind::UnknownRecord(other.to_string()))),
            }
        }
        let Some((n, alpha, m)) = header else {
            return Err(err(last.max(1), ParseErrorKind::MissingHeader));
        };
        if m != edges.len() {
            return Err(err(
                last.max(1),
                ParseErrorKind::EdgeCount {
                    declared: m,
                    found: edges.len(),
                },
            ));
        }
        Ok(EcgDocument {
            n,
            alpha,
            edges,
            comments,
        })
    }

    pub fn to_graph(&self) -> EdgeColoredGraph {
        let mut g = EdgeColoredGraph::new(self.n, self.alpha);
        for &(u, v, c) in &self.edges {
            g.add_edge(u - 1, v - 1, c)
                .expect("ranges checked while parsing");
        }
        g
    }

    /// Document for `g` with ids compacted; the second value maps new ids to old ones.
    pub fn from_graph(g: &EdgeColoredGraph) -> (Self, Vec<VertexId>) {
        let (h, map) = g.compacted();
        let mut edges = Vec::new();
        for c in 1..=h.alpha() {
            for (u, v, m) in h.edges(c) {
                for _ in 0..m {
                    edges.push((u + 1, v + 1, c));
                }
            }
        }
        let doc = EcgDocument {
            n: h.num_vertices(),
            alpha: h.alpha(),
            edges,
            comments: Vec::new(),
        };
        (doc, map)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("c\n");
            } else {
                let _ = writeln!(out, "c {c}");
            }
        }
        let _ = writeln!(out, "p ecg {} {} {}", self.n, self.alpha, self.edges.len());
        for (u, v, c) in &self.edges {
            let _ = writeln!(out, "e {u} {v} {c}");
        }
        out
    }
}

pub fn parse_ecg(text: &str) -> Result<EdgeColoredGraph, ParseError> {
    Ok(EcgDocument::parse(text)?.to_graph())
}

/// Serializes `g`, renumbering live vertices densely in id order.
pub fn write_ecg(g: &EdgeColoredGraph) -> String {
    EcgDocument::from_graph(g).0.serialize()
}

/// Parses a `.hss` file. The budget is left at 0.
pub fn parse_hss(text: &str) -> Result<SetSystem, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut groups: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut open: Option<usize> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let Some((&tag, rest)) = fields.split_first() else {
            continue;
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                if rest.len() != 3 || rest[0] != "hss" {
                    return Err(err(line, ParseErrorKind::BadHeader));
                }
                let v =
                    numbers(&rest[1..], line).map_err(|_| err(line, ParseErrorKind::BadHeader))?;
                header = Some((v[0], v[1]));
                groups = vec![Vec::new(); v[1]];
            }
            "g" => {
                let Some((_, count)) = header else {
                    return Err(err(line, ParseErrorKind::BeforeHeader));
                };
                let v = numbers(rest, line)?;
                match v.as_slice() {
                    [g] if *g >= 1 && *g <= count => open = Some(g - 1),
                    [g] => return Err(err(line, ParseErrorKind::GroupRange(*g))),
                    _ => return Err(err(line, ParseErrorKind::BadRecord)),
                }
            }
            "s" => {
                let Some((universe, _)) = header else {
                    return Err(err(line, ParseErrorKind::BeforeHeader));
                };
                let Some(gi) = open else {
                    return Err(err(line, ParseErrorKind::NoGroup));
                };
                let mut set = Vec::new();
                for x in numbers(rest, line)? {
                    if x == 0 || x > universe {
                        return Err(err(line, ParseErrorKind::ElementRange(x)));
                    }
                    set.push(x - 1);
                }
                groups[gi].push(set);
            }
            other => return Err(err(line, ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }
    let Some((universe, _)) = header else {
        return Err(err(last.max(1), ParseErrorKind::MissingHeader));
    };
    Ok(SetSystem {
        universe,
        groups,
        k: 0,
    })
}

pub fn write_hss(sys: &SetSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p hss {} {}", sys.universe, sys.groups.len());
    for (gi, group) in sys.groups.iter().enumerate() {
        let _ = writeln!(out, "g {}", gi + 1);
        for set in group {
            let items: Vec<String> = set.iter().map(|e| (e + 1).to_string()).collect();
            if items.is_empty() {
                out.push_str("s\n");
            } else {
                let _ = writeln!(out, "s {}", items.join(" "));
            }
        }
    }
    out
}

/// Contents of a solution file; vertex ids are 0-based in memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionFile {
    Yes(BTreeSet<VertexId>),
    No,
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, ParseError> {
    let mut status: Option<bool> = None;
    let mut vertices = BTreeSet::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] | ["c", ..] => {}
            ["s", word] if status.is_none() => match *word {
                "yes" => status = Some(true),
                "no" => status = Some(false),
                _ => return Err(err(line, ParseErrorKind::BadRecord)),
            },
            ["s", ..] => return Err(err(line, ParseErrorKind::DuplicateHeader)),
            ["v", id] => {
                if status.is_none() {
                    return Err(err(line, ParseErrorKind::BeforeHeader));
                }
                let id: usize = id
                    .parse()
                    .map_err(|_| err(line, ParseErrorKind::BadRecord))?;
                if id == 0 {
                    return Err(err(line, ParseErrorKind::VertexRange(0)));
                }
                vertices.insert(id - 1);
            }
            [tag, ..] => return Err(err(line, ParseErrorKind::UnknownRecord(tag.to_string()))),
        }
    }
    match status {
        Some(true) => Ok(SolutionFile::Yes(vertices)),
        Some(false) => Ok(SolutionFile::No),
        None => Err(err(last.max(1), ParseErrorKind::MissingStatus)),
    }
}

pub fn write_solution(sol: &SolutionFile) -> String {
    match sol {
        SolutionFile::No => "s no\n".to_string(),
        SolutionFile::Yes(s) => {
            let mut out = String::from("s yes\n");
            for v in s {
                let _ = writeln!(out, "v {}", v + 1);
            }
            out
        }
    }
}
