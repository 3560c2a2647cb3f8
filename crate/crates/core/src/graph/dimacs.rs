use std::fmt::Write;

use crate::error::FormatError;

use super::Graph;

/// Parses the DIMACS `col` edge format. Endpoints are 1-based in the file and
/// 0-based in the returned graph. The edge count on the `p` line is not
/// enforced, since files in the wild often list each edge in both directions.
pub fn parse_dimacs(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, reason: String| FormatError::Dimacs { line, reason };
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate problem line".into()));
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge" | "col")) {
                    return Err(err(line_no, "expected `p edge <n> <m>`".into()));
                }
                let count = parse_field(fields.next(), line_no, "vertex count")?;
                parse_field(fields.next(), line_no, "edge count")?;
                if fields.next().is_some() {
                    return Err(err(
                        line_no,
                        "unexpected fields after `p edge <n> <m>`".into(),
                    ));
                }
                n = Some(count);
            }
            Some("e") => {
                let Some(n) = n else {
                    return Err(err(line_no, "edge line before the problem line".into()));
                };
                let u = parse_field(fields.next(), line_no, "endpoint")?;
                let v = parse_field(fields.next(), line_no, "endpoint")?;
                if fields.next().is_some() {
                    return Err(err(line_no, "unexpected fields after `e <u> <v>`".into()));
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(line_no, format!("endpoint {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(line_no, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(tag) => return Err(err(line_no, format!("unknown line type `{tag}`"))),
        }
    }

    let n = n.ok_or_else(|| err(0, "missing problem line `p edge <n> <m>`".into()))?;
    Ok(Graph::from_edges(n, edges).expect("endpoints validated above"))
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let field = field.ok_or_else(|| FormatError::Dimacs {
        line,
        reason: format!("missing {what}"),
    })?;
    field.parse().map_err(|_| FormatError::Dimacs {
        line,
        reason: format!("invalid {what} `{field}`"),
    })
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = String::from("c generated by fatchroma\n");
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
