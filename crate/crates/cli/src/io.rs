//! File formats: the text edge list (`n m` then `u v +|-` lines) and its
//! JSON mirror `{ "n": .., "edges": [[u, v, "+"], ..], "labels": [..]? }`.
//! Both readers reject duplicate same-sign parallel edges.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sigcirc::graph::{Sign, SignedGraph};
use sigcirc::hom::HomCertificate;

#[derive(Debug)]
pub enum IoError {
    Read { path: String, err: std::io::Error },
    Write { path: String, err: std::io::Error },
    Parse { path: String, line: usize, what: String },
    Json { path: String, what: String },
    Graph { path: String, what: String },
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Read { path, err } => write!(f, "{path}: {err}"),
            IoError::Write { path, err } => write!(f, "{path}: {err}"),
            IoError::Parse { path, line, what } => write!(f, "{path}:{line}: {what}"),
            IoError::Json { path, what } => write!(f, "{path}: {what}"),
            IoError::Graph { path, what } => write!(f, "{path}: {what}"),
        }
    }
}

impl std::error::Error for IoError {}

#[derive(Serialize, Deserialize)]
pub struct GraphDto {
    pub n: usize,
    pub edges: Vec<(usize, usize, String)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

impl GraphDto {
    pub fn from_graph(g: &SignedGraph) -> GraphDto {
        GraphDto {
            n: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|e| (e.u, e.v, e.sign.as_char().to_string()))
                .collect(),
            labels: g.labels().map(|l| l.to_vec()),
        }
    }

    pub fn into_graph(self, path: &str) -> Result<SignedGraph, IoError> {
        let mut g = SignedGraph::new(self.n);
        for (i, (u, v, s)) in self.edges.iter().enumerate() {
            let sign = parse_sign(s).ok_or_else(|| IoError::Graph {
                path: path.to_string(),
                what: format!("edge {i}: bad sign {s:?} (expected \"+\" or \"-\")"),
            })?;
            g.add_edge(*u, *v, sign).map_err(|e| IoError::Graph {
                path: path.to_string(),
                what: format!("edge {i}: {e}"),
            })?;
        }
        if let Some(labels) = self.labels {
            g.set_labels(labels).map_err(|e| IoError::Graph {
                path: path.to_string(),
                what: e.to_string(),
            })?;
        }
        Ok(g)
    }
}

fn parse_sign(s: &str) -> Option<Sign> {
    match s {
        "+" => Some(Sign::Positive),
        "-" => Some(Sign::Negative),
        _ => None,
    }
}

pub fn parse_text_graph(path: &str, text: &str) -> Result<SignedGraph, IoError> {
    let err = |line: usize, what: String| IoError::Parse {
        path: path.to_string(),
        line,
        what,
    };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| err(1, "empty file".to_string()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line_no + 1, "expected vertex count".to_string()))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line_no + 1, "expected edge count".to_string()))?;
    if parts.next().is_some() {
        return Err(err(line_no + 1, "trailing tokens after `n m`".to_string()));
    }
    let mut g = SignedGraph::new(n);
    let mut read = 0;
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(line_no + 1, "expected endpoint".to_string()))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err(line_no + 1, "expected endpoint".to_string()))?;
        let sign = parts
            .next()
            .and_then(parse_sign)
            .ok_or_else(|| err(line_no + 1, "expected sign + or -".to_string()))?;
        if parts.next().is_some() {
            return Err(err(line_no + 1, "trailing tokens after edge".to_string()));
        }
        g.add_edge(u, v, sign)
            .map_err(|e| err(line_no + 1, e.to_string()))?;
        read += 1;
    }
    if read != m {
        return Err(err(1, format!("header promises {m} edges, found {read}")));
    }
    Ok(g)
}

pub fn write_text_graph(g: &SignedGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.sign.as_char()));
    }
    out
}

pub fn write_json_graph(g: &SignedGraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphDto::from_graph(g)).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Json,
}

pub fn format_for_path(path: &str) -> Format {
    if Path::new(path)
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
    {
        Format::Json
    } else {
        Format::Text
    }
}

/// Reads a graph, sniffing JSON by the leading `{`.
pub fn read_graph(path: &str) -> Result<SignedGraph, IoError> {
    let text = fs::read_to_string(path).map_err(|err| IoError::Read {
        path: path.to_string(),
        err,
    })?;
    if text.trim_start().starts_with('{') {
        let dto: GraphDto = serde_json::from_str(&text).map_err(|e| IoError::Json {
            path: path.to_string(),
            what: e.to_string(),
        })?;
        dto.into_graph(path)
    } else {
        parse_text_graph(path, &text)
    }
}

pub fn render_graph(g: &SignedGraph, format: Format) -> String {
    match format {
        Format::Text => write_text_graph(g),
        Format::Json => write_json_graph(g),
    }
}

pub fn write_output(target: Option<&str>, content: &str) -> Result<(), IoError> {
    match target {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content).map_err(|err| IoError::Write {
            path: path.to_string(),
            err,
        }),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateDto {
    pub schema_version: u32,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub switch_set: Vec<usize>,
}

impl CertificateDto {
    pub fn from_certificate(c: &HomCertificate) -> CertificateDto {
        CertificateDto {
            schema_version: 1,
            vertex_map: c.vertex_map.clone(),
            edge_map: c.edge_map.clone(),
            switch_set: c.switch_set.iter().collect(),
        }
    }
}
