//! The native `planegraph 1` text format.
//!
//! ```text
//! planegraph 1
//! <n> <m>
//! <v>: <w1> <w2> ... <wd>     # counterclockwise neighbors of v
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::{GraphError, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `planegraph 1`")]
    MissingHeader,
    #[error("header declares m = {declared} but rotations give {actual} edges")]
    EdgeCountMismatch { declared: usize, actual: usize },
    #[error("vertex {0} has no rotation line")]
    MissingVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_planegraph(text: &str) -> Result<PlaneGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("planegraph") {
        return Err(FormatError::MissingHeader);
    }
    match parts.next() {
        Some("1") => {}
        Some(v) => return Err(syntax(hline, format!("unsupported version `{v}`"))),
        None => return Err(syntax(hline, "missing format version")),
    }

    let (cline, counts) = lines
        .next()
        .ok_or_else(|| syntax(hline + 1, "missing `<n> <m>` line"))?;
    let nums: Vec<usize> = counts
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| syntax(cline, format!("bad count `{t}`"))))
        .collect::<Result<_, _>>()?;
    let [n, m] = nums[..] else {
        return Err(syntax(cline, "expected exactly two counts `<n> <m>`"));
    };

    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for (lineno, line) in lines {
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(lineno, "expected `<v>: <neighbors>`"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| syntax(lineno, format!("bad vertex id `{}`", head.trim())))?;
        if v >= n {
            return Err(syntax(lineno, format!("vertex {v} out of range for n = {n}")));
        }
        if rotation[v].is_some() {
            return Err(syntax(lineno, format!("vertex {v} listed twice")));
        }
        let nbrs = rest
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| syntax(lineno, format!("bad neighbor `{t}`")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        rotation[v] = Some(nbrs);
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(FormatError::MissingVertex(v)))
        .collect::<Result<Vec<_>, _>>()?;
    let degree_sum: usize = rotation.iter().map(Vec::len).sum();
    if degree_sum != 2 * m {
        return Err(FormatError::EdgeCountMismatch {
            declared: m,
            actual: degree_sum / 2,
        });
    }
    Ok(PlaneGraph::new(n, rotation)?)
}

pub fn write_planegraph(pg: &PlaneGraph) -> String {
    let mut out = String::new();
    out.push_str("planegraph 1\n");
    let _ = writeln!(out, "{} {}", pg.vertex_count(), pg.edge_count());
    for (v, rot) in pg.rotations().iter().enumerate() {
        let _ = write!(out, "{v}:");
        for w in rot {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "planegraph 1\n# tetrahedron\n4 6\n\n0: 1 2 3\n1: 0 3 2 # inner\n2: 0 1 3\n3: 0 2 1\n";

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let pg = parse_planegraph(K4).unwrap();
        assert_eq!(pg.vertex_count(), 4);
        assert_eq!(pg.edge_count(), 6);
        assert_eq!(pg.face_count(), 4);
    }

    #[test]
    fn serialize_parse_identity() {
        let pg = parse_planegraph(K4).unwrap();
        let text = write_planegraph(&pg);
        assert_eq!(parse_planegraph(&text).unwrap(), pg);
        assert_eq!(write_planegraph(&parse_planegraph(&text).unwrap()), text);
    }

    #[test]
    fn rejects_edge_count_mismatch() {
        let bad = K4.replace("4 6", "4 5");
        assert_eq!(
            parse_planegraph(&bad).unwrap_err(),
            FormatError::EdgeCountMismatch {
                declared: 5,
                actual: 6
            }
        );
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "planegraph 1\n2 1\n0: 1\n1: x\n";
        assert_eq!(
            parse_planegraph(bad).unwrap_err(),
            FormatError::Syntax {
                line: 4,
                message: "bad neighbor `x`".into()
            }
        );
        assert_eq!(
            parse_planegraph("graph\n").unwrap_err(),
            FormatError::MissingHeader
        );
        assert_eq!(
            parse_planegraph("planegraph 1\n2 1\n0: 1\n").unwrap_err(),
            FormatError::MissingVertex(1)
        );
    }

    #[test]
    fn rejects_inconsistent_rotation() {
        let bad = "planegraph 1\n3 2\n0: 1\n1: 0 2\n2: 0\n";
        assert!(matches!(
            parse_planegraph(bad).unwrap_err(),
            FormatError::Graph(GraphError::InconsistentRotation { .. })
        ));
    }
}
