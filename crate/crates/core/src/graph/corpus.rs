//! The bundled corpus of named graphs.

use std::sync::OnceLock;

use super::{parse_graph6, Graph};
use crate::error::{Error, Result};

const NAMED: &str = include_str!("../../corpus/named.g6");

/// A corpus entry.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

/// Parses the corpus format: `# name` lines each followed by one graph6
/// line. Other comment lines (before the first entry or directly following
/// another comment) are ignored; blank lines are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<NamedGraph>> {
    let mut out = Vec::new();
    let mut pending: Option<String> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('#') {
            pending = Some(name.trim().to_string());
            continue;
        }
        let name = pending
            .take()
            .ok_or_else(|| Error::Input(format!("line {}: graph without a name", lineno + 1)))?;
        let graph = parse_graph6(line).map_err(|e| match e {
            Error::Parse { pos, msg } => {
                Error::Input(format!("line {}, byte {pos}: {msg}", lineno + 1))
            }
            other => other,
        })?;
        out.push(NamedGraph {
            graph: graph.with_name(name.clone()),
            name,
        });
    }
    Ok(out)
}

/// All bundled named graphs.
pub fn corpus() -> &'static [NamedGraph] {
    static CORPUS: OnceLock<Vec<NamedGraph>> = OnceLock::new();
    CORPUS.get_or_init(|| parse_corpus(NAMED).expect("bundled corpus parses"))
}

pub(crate) fn normalize(name: &str) -> String {
    let s: String = name
        .chars()
        .flat_map(|c| {
            let folded = match c {
                'ä' | 'Ä' => "ae",
                'ö' | 'Ö' => "oe",
                'ü' | 'Ü' => "ue",
                _ => "",
            };
            let plain = c.is_ascii_alphanumeric().then(|| c.to_ascii_lowercase());
            folded.chars().chain(plain)
        })
        .collect();
    s.strip_suffix("graph").map(str::to_string).unwrap_or(s)
}

/// Looks up a corpus graph by name, ignoring case, punctuation and a
/// trailing "graph" (`"petersen"` finds "Petersen graph"); umlauts match
/// their two-letter spelling.
pub fn named(name: &str) -> Option<Graph> {
    let key = normalize(name);
    corpus()
        .iter()
        .find(|e| normalize(&e.name) == key)
        .map(|e| e.graph.clone())
}
