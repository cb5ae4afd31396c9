//! Reading and writing graphs: graph6 and the 1-indexed edge-list format
//! `n;{(1,2),(2,3)}`, plus the JSON search report.

pub mod edgelist;
pub mod graph6;
pub mod report;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Text formats for single graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    /// Edge lists always contain `{`, `(` or `;`; a graph6 line of the same
    /// length never contains `(` or `;`.
    pub fn detect(line: &str) -> Format {
        let t = line.trim();
        if t.contains('(') || t.contains(';') || t == "{}" {
            Format::EdgeList
        } else {
            Format::Graph6
        }
    }
}

pub fn parse_graph(line: &str) -> Result<Graph> {
    match Format::detect(line) {
        Format::Graph6 => graph6::decode(line),
        Format::EdgeList => edgelist::parse(line),
    }
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => graph6::encode(g),
        Format::EdgeList => edgelist::emit(g),
    }
}

/// One graph per non-empty line; lines starting with `#` are comments and a
/// leading `>>graph6<<` header is ignored. Error positions are byte offsets
/// into `text`.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches(['\n', '\r']);
        let trimmed = body.trim_start();
        let lead = body.len() - trimmed.len();
        if !trimmed.trim().is_empty() && !trimmed.starts_with('#') {
            let g = parse_graph(trimmed).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: pos + offset + lead,
                    msg,
                },
                other => other,
            })?;
            out.push(g);
        }
        offset += line.len();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_input() {
        let text = "# two graphs\nD~{\n{(1,2),(2,3)}\n\n3;{}\n";
        let gs = read_graphs(text).unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[0], Graph::complete(5).unwrap());
        assert_eq!(gs[1], Graph::path(3).unwrap());
        assert_eq!(gs[2], Graph::empty(3).unwrap());
    }

    #[test]
    fn error_positions_are_global() {
        let err = read_graphs("D~{\n{(1,2),(2,x)}\n").unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 14, .. }), "{err:?}");
    }
}
