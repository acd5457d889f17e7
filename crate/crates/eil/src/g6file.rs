//! `.g6` files: one graph6 string per line, `>>` header lines skipped.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use eil_core::graph6::parse_graph6;
use eil_core::Graph;

/// Whether a raw line carries a graph.
pub fn is_graph_line(line: &str) -> bool {
    !line.is_empty() && !line.starts_with(">>")
}

/// Graph lines of `reader`, trailing whitespace removed.
pub fn graph_lines<R: BufRead>(reader: R) -> impl Iterator<Item = io::Result<String>> {
    reader
        .lines()
        .map(|l| l.map(|s| s.trim_end().to_string()))
        .filter(|l| l.as_ref().map_or(true, |s| is_graph_line(s)))
}

pub fn open_lines(path: &Path) -> io::Result<impl Iterator<Item = io::Result<String>>> {
    Ok(graph_lines(BufReader::new(File::open(path)?)))
}

/// Parses every graph in `path`, failing on the first bad line.
pub fn read_graphs(path: &Path) -> io::Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in open_lines(path)?.enumerate() {
        let line = line?;
        let g = parse_graph6(&line).map_err(|e| {
            io::Error::new(io::ErrorKind::InvalidData, format!("{}: graph {}: {e}", path.display(), i + 1))
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_headers_and_blank_lines() {
        let text = ">>graph6<<\nA_\n\nB?\r\n>>x\nC~\n";
        let lines: Vec<String> = graph_lines(text.as_bytes()).map(Result::unwrap).collect();
        assert_eq!(lines, ["A_", "B?", "C~"]);
    }
}
