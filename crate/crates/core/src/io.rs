//! JSON file formats. Unbounded integers are written as decimal strings.
//!
//! Graph: `{"n": 4, "edges": [[0, 1], ...]}`.
//! Partition: `{"classes": [{"kind": "path", "vertices": [0, 1]}, ...]}`.
//! Drawing: `{"dim": 2, "n": 4, "edges": [...], "points": {"0": ["0", "1"], ...}}`.

use std::fs;
use std::path::Path;

use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawGraph {
            n: self.n(),
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGraph::deserialize(d)?;
        Graph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1]))).map_err(D::Error::custom)
    }
}

/// Parses JSON, reporting the line and column of the first problem.
pub fn from_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::Input(format!(
            "{what}: line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

/// Reads and parses a JSON file.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    from_json(&text, &path.display().to_string())
}

/// Pretty JSON followed by a newline; key order is fixed by the types.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
