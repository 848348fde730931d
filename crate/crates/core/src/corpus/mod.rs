//! Graph corpus sources: the graph6 codec, built-in exhaustive
//! enumeration, census files, and seeded random streams.

mod enumerate;
mod graph6;
mod random;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::Graph;

pub use enumerate::{
    enumerate_connected, enumerate_graphs, CONNECTED_CLASS_COUNTS, MAX_ENUMERATION_ORDER,
};
pub use graph6::{parse_graph6, write_graph6, CodecError};
pub use random::{random_connected, RandomConnectedStream};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("built-in enumeration supports 1 <= n <= {max}, got {n}; ingest a graph6 census file for larger orders")]
    UnsupportedOrder { n: usize, max: usize },
    #[error("{0}")]
    InvalidParams(String),
    #[error("{attempts} consecutive samples were disconnected; increase the edge probability")]
    TooManyRejections { attempts: usize },
    #[error("cannot read corpus file: {0}")]
    Io(#[from] std::io::Error),
}

/// One corpus record: a parsed graph, or a skippable per-line error.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    /// 1-based line number (files) or ordinal (generated sources).
    pub line: usize,
    pub graph: Result<Graph, String>,
}

/// Where a scan's graphs come from.
#[derive(Debug, Clone)]
pub enum CorpusSource {
    BuiltinExhaustive { n: usize, connected_only: bool },
    Graph6File(PathBuf),
    Random { n: usize, edge_probability: f64, count: usize, seed: u64 },
}

impl CorpusSource {
    /// Materializes the corpus. Malformed graph6 lines become error items
    /// (reported and skipped downstream); structural problems with the
    /// source itself fail the whole call.
    pub fn items(&self) -> Result<Vec<CorpusItem>, CorpusError> {
        match self {
            CorpusSource::BuiltinExhaustive { n, connected_only } => {
                let graphs = enumerate_graphs(*n, *connected_only)?;
                Ok(graphs
                    .into_iter()
                    .enumerate()
                    .map(|(i, g)| CorpusItem { line: i + 1, graph: Ok(g) })
                    .collect())
            }
            CorpusSource::Graph6File(path) => read_graph6_file(path),
            CorpusSource::Random { n, edge_probability, count, seed } => {
                let mut stream = RandomConnectedStream::new(*n, *edge_probability, *seed)?;
                (0..*count)
                    .map(|i| Ok(CorpusItem { line: i + 1, graph: Ok(stream.sample()?) }))
                    .collect()
            }
        }
    }
}

/// Reads a graph6 file, one graph per line. Blank lines and an optional
/// `>>graph6<<` header line are skipped; per-line parse failures are
/// returned as error items with their line numbers.
pub fn read_graph6_file(path: &Path) -> Result<Vec<CorpusItem>, CorpusError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_graph6_lines(&text))
}

/// Line-by-line parse of graph6 text; see [`read_graph6_file`].
pub fn parse_graph6_lines(text: &str) -> Vec<CorpusItem> {
    let mut items = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        items.push(CorpusItem {
            line: idx + 1,
            graph: parse_graph6(line).map_err(|e| e.to_string()),
        });
    }
    items
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_source_counts() {
        let items = CorpusSource::BuiltinExhaustive { n: 4, connected_only: true }.items().unwrap();
        assert_eq!(items.len(), 6);
        assert!(items.iter().all(|i| i.graph.is_ok()));
    }

    #[test]
    fn random_source_is_seed_stable() {
        let source = CorpusSource::Random { n: 6, edge_probability: 0.5, count: 5, seed: 42 };
        let a = source.items().unwrap();
        let b = source.items().unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph.as_ref().unwrap(), y.graph.as_ref().unwrap());
        }
    }

    #[test]
    fn lines_with_errors_are_reported_not_dropped() {
        let text = ">>graph6<<\nBg\n\nB\nC~\n";
        let items = parse_graph6_lines(text);
        assert_eq!(items.len(), 3);
        assert!(items[0].graph.is_ok());
        assert_eq!(items[1].line, 4);
        assert!(items[1].graph.is_err());
        assert!(items[2].graph.is_ok());
    }
}
