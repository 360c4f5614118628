use std::collections::BTreeSet;

use serde::Serialize;

use super::{edge_contribution, face_contributions, g_eval, BoundSpec, Rational};
use crate::blocks::{canonical_b5c_frame, BlockLabel, Decomposition};
use crate::plane_graph::PlaneGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClusterKind {
    Singleton,
    /// A B5c block together with the four trivial blocks closing its four
    /// surrounding 4-faces.
    BBar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cluster {
    pub id: usize,
    pub kind: ClusterKind,
    pub block_ids: Vec<usize>,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
}

/// Something unexpected around a B5c block. These only arise on inputs that
/// contain the forbidden pattern; the block is then left as a singleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClusterDiagnostic {
    ClusterConflict {
        b5c_block: usize,
        shared_block: usize,
        claimed_by: usize,
    },
    MalformedNeighborhood {
        b5c_block: usize,
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clustering {
    pub clusters: Vec<Cluster>,
    pub diagnostics: Vec<ClusterDiagnostic>,
}

/// Group blocks into clusters. Each B5c block whose four outside faces are
/// all 4-faces absorbs the four trivial blocks on those faces; every other
/// block is its own cluster. BBar clusters come first, in B5c block order,
/// followed by singletons in block order.
pub fn form_clusters(pg: &PlaneGraph, d: &Decomposition, spec: &BoundSpec) -> Clustering {
    let mut claimed_by: Vec<Option<usize>> = vec![None; d.blocks.len()];
    let mut groups: Vec<(ClusterKind, Vec<usize>)> = Vec::new();
    let mut diagnostics = Vec::new();

    for block in d.blocks.iter().filter(|b| b.label == BlockLabel::B5c) {
        match bbar_members(pg, d, block.id) {
            Ok(None) => {}
            Ok(Some(trivial)) => {
                if let Some(&shared) = trivial.iter().find(|&&b| claimed_by[b].is_some()) {
                    diagnostics.push(ClusterDiagnostic::ClusterConflict {
                        b5c_block: block.id,
                        shared_block: shared,
                        claimed_by: claimed_by[shared].expect("claimed"),
                    });
                    continue;
                }
                let mut members = vec![block.id];
                members.extend(trivial);
                for &b in &members {
                    claimed_by[b] = Some(block.id);
                }
                groups.push((ClusterKind::BBar, members));
            }
            Err(reason) => diagnostics.push(ClusterDiagnostic::MalformedNeighborhood {
                b5c_block: block.id,
                reason,
            }),
        }
    }
    for b in &d.blocks {
        if claimed_by[b.id].is_none() {
            groups.push((ClusterKind::Singleton, vec![b.id]));
        }
    }

    let face_totals = face_contributions(pg, d);
    let clusters = groups
        .into_iter()
        .enumerate()
        .map(|(id, (kind, block_ids))| {
            let e: Rational = block_ids
                .iter()
                .map(|&b| edge_contribution(&d.blocks[b]))
                .sum();
            let f: Rational = block_ids.iter().map(|&b| &face_totals[b]).sum();
            let g = g_eval(spec, &e, &f);
            Cluster {
                id,
                kind,
                block_ids,
                e,
                f,
                g,
            }
        })
        .collect();
    Clustering {
        clusters,
        diagnostics,
    }
}

/// `Ok(Some(ids))` with the four trivial block ids when the B5c block at
/// `b5c` is surrounded by 4-faces of the forced shape, `Ok(None)` when some
/// outside face is not a 4-face.
fn bbar_members(pg: &PlaneGraph, d: &Decomposition, b5c: usize) -> Result<Option<Vec<usize>>, String> {
    let block = &d.blocks[b5c];
    let frame = canonical_b5c_frame(pg, block).map_err(|e| e.to_string())?;
    let graph = pg.graph();
    let faces = pg.faces();

    let mut outside = [0usize; 4];
    for (slot, (u, v)) in frame.boundary_pairs().into_iter().enumerate() {
        let e = graph.edge_id(u, v).expect("boundary edge");
        let (f1, f2) = pg.edge_faces(e);
        let (in1, in2) = (block.has_interior_face(f1), block.has_interior_face(f2));
        assert!(
            in1 != in2,
            "boundary edge {u}-{v} of block {b5c} must have exactly one interior side"
        );
        outside[slot] = if in1 { f2 } else { f1 };
    }
    if outside.iter().any(|&f| faces[f].length() != 4) {
        return Ok(None);
    }

    // x1x2 and x2x3 share the face x1 x2 x3 w; x3x4 and x1x4 share x1 x4 x3 v
    let apex = |fa: usize, fb: usize, mid: usize| -> Result<usize, String> {
        if fa != fb {
            return Err(format!("4-faces at x{mid}'s two boundary edges differ"));
        }
        let walk = faces[fa].vertex_walk();
        if walk.len() != 4 {
            return Err(format!("face {fa} is not a 4-cycle"));
        }
        let corner = if mid == 2 { frame.x2 } else { frame.x4 };
        let expected: BTreeSet<usize> = [frame.x1, corner, frame.x3].into_iter().collect();
        let others: Vec<usize> = walk.iter().copied().filter(|v| !expected.contains(v)).collect();
        match others[..] {
            [w] if !block.vertices.contains(&w) => Ok(w),
            _ => Err(format!("face {fa} does not have the shape x1 x{mid} x3 + apex")),
        }
    };
    let w = apex(outside[0], outside[1], 2)?;
    let v = apex(outside[2], outside[3], 4)?;
    if v == w {
        return Err("both 4-faces share the same apex".into());
    }

    let mut trivial = Vec::with_capacity(4);
    for (a, b) in [(frame.x1, v), (frame.x3, v), (frame.x1, w), (frame.x3, w)] {
        let e = graph.edge_id(a, b).expect("edge on a 4-face");
        let tb = d.block_of_edge(e);
        if !tb.is_trivial() {
            return Err(format!("edge {a}-{b} lies in a non-trivial block {}", tb.id));
        }
        trivial.push(tb.id);
    }
    trivial.sort_unstable();
    Ok(Some(trivial))
}
