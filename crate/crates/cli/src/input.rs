use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use edgepoly::{graph6, EdgeId, EdgeLabeling, Multigraph};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Edge list if the first line holds two integers, graph6 otherwise.
    Auto,
    /// `n m` then `u v` per edge.
    EdgeList,
    /// `n m` then `u v label` per edge.
    Labeled,
    Graph6,
}

/// Reads a graph, and its labeling for labeled edge lists, from `path`
/// (`-` for standard input).
pub fn parse_graph_file(
    path: &Path,
    format: GraphFormat,
) -> Result<(Multigraph, Option<EdgeLabeling>), CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?
    };
    parse_graph(&text, format)
}

/// Parses graph text. Blank lines and lines starting with `#` are ignored.
pub fn parse_graph(
    text: &str,
    format: GraphFormat,
) -> Result<(Multigraph, Option<EdgeLabeling>), CliError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let Some(&(first_no, first)) = lines.first() else {
        return Err(CliError::input("empty graph input"));
    };
    let format = match format {
        GraphFormat::Auto => {
            let tokens: Vec<&str> = first.split_whitespace().collect();
            if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
                let labeled = lines
                    .get(1)
                    .is_some_and(|(_, l)| l.split_whitespace().count() == 3);
                if labeled {
                    GraphFormat::Labeled
                } else {
                    GraphFormat::EdgeList
                }
            } else {
                GraphFormat::Graph6
            }
        }
        f => f,
    };
    if format == GraphFormat::Graph6 {
        if lines.len() > 1 {
            return Err(CliError::at(lines[1].0, "graph6 input holds a single graph"));
        }
        let g = graph6::decode(first).map_err(|e| CliError::at(first_no, e.to_string()))?;
        return Ok((g, None));
    }

    let labeled = format == GraphFormat::Labeled;
    let header: Vec<&str> = first.split_whitespace().collect();
    let (n, m) = match header.as_slice() {
        [n, m] => (
            n.parse::<usize>()
                .map_err(|_| CliError::at(first_no, format!("bad vertex count `{n}`")))?,
            m.parse::<usize>()
                .map_err(|_| CliError::at(first_no, format!("bad edge count `{m}`")))?,
        ),
        _ => return Err(CliError::at(first_no, "expected header `n m`")),
    };
    let body = &lines[1..];
    if body.len() != m {
        let line = body.get(m).map_or(first_no, |(no, _)| *no);
        return Err(CliError::at(
            line,
            format!("header announces {m} edges, found {}", body.len()),
        ));
    }
    let width = if labeled { 3 } else { 2 };
    let mut pairs = Vec::with_capacity(m);
    let mut labels = BTreeMap::new();
    for (i, &(no, line)) in body.iter().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != width {
            let shape = if labeled { "`u v label`" } else { "`u v`" };
            return Err(CliError::at(no, format!("expected {shape}, got `{line}`")));
        }
        let end = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| CliError::at(no, format!("bad vertex `{t}`")))
                .and_then(|v| {
                    if v < n {
                        Ok(v)
                    } else {
                        Err(CliError::at(no, format!("vertex {v} out of range for {n} vertices")))
                    }
                })
        };
        pairs.push((end(tokens[0])?, end(tokens[1])?));
        if labeled {
            labels.insert(EdgeId(i as u32), tokens[2].to_string());
        }
    }
    let g = Multigraph::from_edge_list(n, &pairs).map_err(|e| CliError::input(e.to_string()))?;
    let lab = if labeled {
        Some(EdgeLabeling::new(labels).map_err(|e| CliError::input(e.to_string()))?)
    } else {
        None
    };
    Ok((g, lab))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_lists() {
        let (g, lab) = parse_graph("2 1\n0 1\n", GraphFormat::Auto).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), lab), (2, 1, None));
        let (g, _) = parse_graph("1 1\n0 0", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.loop_count(), 1);
        let (g, lab) = parse_graph("3 2\n0 1 a\n1 2 b\n", GraphFormat::Auto).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(lab.unwrap().label(EdgeId(1)), Some("b"));
        let (g, _) = parse_graph("# comment\n\n3 0\n", GraphFormat::Auto).unwrap();
        assert_eq!(g.vertex_count(), 3);
    }

    #[test]
    fn graph6_input() {
        let (g, _) = parse_graph("DQc\n", GraphFormat::Auto).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("3 2\n0 1\n1 x\n", GraphFormat::Auto).unwrap_err();
        assert_eq!(err.line, Some(3));
        let err = parse_graph("2 1\n0 5\n", GraphFormat::Auto).unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = parse_graph("2 2\n0 1\n", GraphFormat::Auto).unwrap_err();
        assert_eq!(err.line, Some(1));
        let err = parse_graph("2 1\n0 1 a b\n", GraphFormat::Auto).unwrap_err();
        assert_eq!(err.line, Some(2));
        assert!(parse_graph("", GraphFormat::Auto).is_err());
        assert!(parse_graph("D~{\n", GraphFormat::Graph6).is_ok());
        assert!(parse_graph("2 1\n0 1 a-b\n", GraphFormat::Labeled).is_err());
    }
}
