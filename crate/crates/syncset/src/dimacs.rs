//! DIMACS edge format: `c` comment lines, one `p edge <vertices> <edges>`
//! header, then `e <u> <v>` lines with 1-indexed endpoints.

use std::fmt::Write;

use syncset_core::Graph;

use crate::FormatError;

fn error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Dimacs {
        line,
        message: message.into(),
    }
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let token = token.ok_or_else(|| error(line, format!("missing {what}")))?;
    token.parse().map_err(|_| {
        error(
            line,
            format!("{what} is not a non-negative integer: {token:?}"),
        )
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(error(line, "second problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(error(
                            line,
                            format!("expected `p edge`, found format {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                let vertices = number(tokens.next(), line, "vertex count")?;
                let count = number(tokens.next(), line, "edge count")?;
                if tokens.next().is_some() {
                    return Err(error(line, "trailing tokens after problem line"));
                }
                if vertices == 0 {
                    return Err(error(line, "graph must have at least one vertex"));
                }
                header = Some((vertices, count, line));
            }
            Some("e") => {
                let (vertices, _, _) =
                    header.ok_or_else(|| error(line, "edge before problem line"))?;
                let u = number(tokens.next(), line, "first endpoint")?;
                let v = number(tokens.next(), line, "second endpoint")?;
                if tokens.next().is_some() {
                    return Err(error(line, "trailing tokens after edge"));
                }
                for x in [u, v] {
                    if x == 0 || x > vertices {
                        return Err(error(
                            line,
                            format!("endpoint {x} out of range 1..={vertices}"),
                        ));
                    }
                }
                if u == v {
                    return Err(error(line, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
                edge_lines.push(line);
            }
            Some(other) => return Err(error(line, format!("unknown line type {other:?}"))),
        }
    }

    let (vertices, count, header_line) = header.ok_or_else(|| error(0, "missing problem line"))?;
    let graph = Graph::new(vertices, edges).map_err(|e| match e {
        syncset_core::Error::DuplicateEdge { index, u, v } => error(
            edge_lines[index],
            format!("duplicate edge {{{}, {}}}", u + 1, v + 1),
        ),
        other => error(0, other.to_string()),
    })?;
    if graph.edge_count() != count {
        return Err(error(
            header_line,
            format!(
                "header declares {count} edges, found {}",
                graph.edge_count()
            ),
        ));
    }
    Ok(graph)
}

pub fn serialize_graph(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
