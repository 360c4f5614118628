//! Graphviz DOT export. Rotations travel as a `rotation` node attribute so
//! the exported text can be read back by [`import_dot`].

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::format::FormatError;
use super::PlaneGraph;

pub fn export_dot(pg: &PlaneGraph) -> String {
    let mut out = String::from("graph planegraph {\n");
    for (v, rot) in pg.rotations().iter().enumerate() {
        let list: Vec<String> = rot.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "  {v} [rotation=\"{}\"];", list.join(" "));
    }
    for &(u, v) in pg.graph().edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Read back the output of [`export_dot`]. Only that dialect is accepted.
pub fn import_dot(text: &str) -> Result<PlaneGraph, FormatError> {
    let err = |line: usize, message: &str| FormatError::Syntax {
        line,
        message: message.to_string(),
    };
    let mut rotations: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut edges = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with("graph") || line == "}" || line.starts_with("//") {
            continue;
        }
        let stmt = line
            .strip_suffix(';')
            .ok_or_else(|| err(lineno, "statement must end with `;`"))?;
        if let Some((u, v)) = stmt.split_once("--") {
            let u: usize = u.trim().parse().map_err(|_| err(lineno, "bad edge endpoint"))?;
            let v: usize = v.trim().parse().map_err(|_| err(lineno, "bad edge endpoint"))?;
            edges.insert((u.min(v), u.max(v)));
        } else if let Some((node, attrs)) = stmt.split_once('[') {
            let v: usize = node.trim().parse().map_err(|_| err(lineno, "bad node id"))?;
            let value = attrs
                .trim()
                .strip_prefix("rotation=\"")
                .and_then(|s| s.strip_suffix("\"]"))
                .ok_or_else(|| err(lineno, "expected rotation attribute"))?;
            let rot = value
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| err(lineno, "bad rotation entry")))
                .collect::<Result<Vec<usize>, _>>()?;
            rotations.push((v, rot));
        } else {
            return Err(err(lineno, "unrecognized statement"));
        }
    }
    rotations.sort_by_key(|(v, _)| *v);
    let n = rotations.len();
    if rotations.iter().enumerate().any(|(i, (v, _))| i != *v) {
        return Err(err(0, "node ids must be 0..n-1, each once"));
    }
    let rotation: Vec<Vec<usize>> = rotations.into_iter().map(|(_, r)| r).collect();
    let pg = PlaneGraph::new(n, rotation)?;
    let listed: BTreeSet<(usize, usize)> = pg.graph().edges().iter().copied().collect();
    if listed != edges {
        return Err(FormatError::EdgeCountMismatch {
            declared: edges.len(),
            actual: listed.len(),
        });
    }
    Ok(pg)
}
