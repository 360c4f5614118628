//! Triangular-block decomposition.
//!
//! Every edge lies in exactly one block. An edge on no triangular face is a
//! trivial block by itself; otherwise its block is the union of the edges of
//! all triangular faces reachable from it through shared edges.

mod catalog;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

pub use catalog::{catalog_drawing, catalog_graph, catalog_plane_graph, BlockLabel};

use crate::patterns::contains_subgraph;
use crate::plane_graph::{EdgeId, Graph, PlaneGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularBlock {
    pub id: usize,
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    /// Sorted vertex ids touched by the edges.
    pub vertices: Vec<usize>,
    /// Sorted ids of the triangular faces forming the block.
    pub interior_faces: Vec<usize>,
    pub label: BlockLabel,
}

impl TriangularBlock {
    pub fn is_trivial(&self) -> bool {
        self.interior_faces.is_empty()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn has_interior_face(&self, f: usize) -> bool {
        self.interior_faces.binary_search(&f).is_ok()
    }

    /// Block edges as vertex pairs of the host graph.
    pub fn edge_pairs(&self, pg: &PlaneGraph) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&e| pg.graph().edges()[e]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub blocks: Vec<TriangularBlock>,
    /// Block id for each edge id.
    pub edge_to_block: Vec<usize>,
}

impl Decomposition {
    pub fn block_of_edge(&self, e: EdgeId) -> &TriangularBlock {
        &self.blocks[self.edge_to_block[e]]
    }

    pub fn label_counts(&self) -> BTreeMap<BlockLabel, usize> {
        let mut counts = BTreeMap::new();
        for b in &self.blocks {
            *counts.entry(b.label).or_insert(0) += 1;
        }
        counts
    }
}

/// Split the edges of `pg` into triangular blocks.
///
/// Blocks are numbered in order of their smallest edge id.
pub fn decompose(pg: &PlaneGraph) -> Decomposition {
    let m = pg.edge_count();
    let faces = pg.faces();
    let mut edge_to_block = vec![usize::MAX; m];
    let mut blocks = Vec::new();

    for seed in 0..m {
        if edge_to_block[seed] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let (f1, f2) = pg.edge_faces(seed);
        let start = [f1, f2].into_iter().find(|&f| faces[f].is_triangle());
        let (edges, interior) = match start {
            None => (vec![seed], Vec::new()),
            Some(f0) => flood_triangles(pg, f0),
        };
        for &e in &edges {
            assert_eq!(
                edge_to_block[e],
                usize::MAX,
                "edge {e} claimed by two blocks; blocks must partition the edges"
            );
            edge_to_block[e] = id;
        }
        let (sub, vertices) = pg.graph().edge_induced(&edges);
        let label = classify(&sub, interior.len());
        blocks.push(TriangularBlock {
            id,
            edges,
            vertices,
            interior_faces: interior,
            label,
        });
    }
    let decomposition = Decomposition {
        blocks,
        edge_to_block,
    };
    check_closure(pg, &decomposition);
    decomposition
}

/// Breadth-first closure over triangular faces sharing an edge.
fn flood_triangles(pg: &PlaneGraph, start: usize) -> (Vec<EdgeId>, Vec<usize>) {
    let faces = pg.faces();
    let mut interior = BTreeSet::from([start]);
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for &e in faces[f].edge_set() {
            edges.insert(e);
            let (a, b) = pg.edge_faces(e);
            for g in [a, b] {
                if faces[g].is_triangle() && interior.insert(g) {
                    queue.push_back(g);
                }
            }
        }
    }
    (edges.into_iter().collect(), interior.into_iter().collect())
}

/// Every face sharing an edge with a block but not interior to it must not
/// be a triangle, and interior faces of distinct blocks are disjoint.
fn check_closure(pg: &PlaneGraph, d: &Decomposition) {
    let faces = pg.faces();
    let mut owner = vec![usize::MAX; faces.len()];
    for b in &d.blocks {
        for &f in &b.interior_faces {
            assert_eq!(owner[f], usize::MAX, "face {f} interior to two blocks");
            owner[f] = b.id;
        }
        for &e in &b.edges {
            let (f1, f2) = pg.edge_faces(e);
            for f in [f1, f2] {
                assert!(
                    b.has_interior_face(f) || !faces[f].is_triangle(),
                    "triangular face {f} touches block {} without being interior",
                    b.id
                );
            }
        }
    }
}

/// Label a block subgraph by isomorphism type against the catalog.
///
/// The label depends only on the isomorphism type of the subgraph; the same
/// subgraph may arise with different interior-face sets, which matters for
/// contributions but not for the label.
pub fn classify(block_subgraph: &Graph, interior_face_count: usize) -> BlockLabel {
    let _ = interior_face_count;
    let n = block_subgraph.vertex_count();
    let m = block_subgraph.edge_count();
    let degrees = block_subgraph.degree_sequence();
    for label in BlockLabel::CATALOG {
        let candidate = catalog_graph(label).expect("catalog label");
        if candidate.vertex_count() == n
            && candidate.edge_count() == m
            && candidate.degree_sequence() == degrees
            && contains_subgraph(block_subgraph, &candidate).is_some()
        {
            return label;
        }
    }
    BlockLabel::Other
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("block {0} is not a B5c block")]
    NotB5c(usize),
    #[error("block {0} is labeled B5c but its boundary is not the expected 4-cycle")]
    IrregularBoundary(usize),
}

/// Role assignment for a B5c block: `x1 x2 x3 x4` is the 4-cycle on the
/// outside of the block, `x1 x3` the diagonal and `x5` the vertex enclosed by
/// the interior faces (adjacent to `x1`, `x2`, `x3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct B5cFrame {
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
    pub x4: usize,
    pub x5: usize,
}

impl B5cFrame {
    /// `x1x2, x2x3, x3x4, x1x4` as normalized vertex pairs.
    pub fn boundary_pairs(&self) -> [(usize, usize); 4] {
        let norm = |a: usize, b: usize| (a.min(b), a.max(b));
        [
            norm(self.x1, self.x2),
            norm(self.x2, self.x3),
            norm(self.x3, self.x4),
            norm(self.x1, self.x4),
        ]
    }
}

/// Recover the `x1..x5` roles of a B5c block from its embedding.
///
/// The boundary edges are the block edges lying on exactly one interior face.
/// `x1` and `x3` are the two degree-4 vertices (smaller id is `x1`), `x4` the
/// degree-2 vertex, `x2` the degree-3 vertex on the boundary and `x5` the
/// other degree-3 vertex.
pub fn canonical_b5c_frame(
    pg: &PlaneGraph,
    block: &TriangularBlock,
) -> Result<B5cFrame, FrameError> {
    if block.label != BlockLabel::B5c {
        return Err(FrameError::NotB5c(block.id));
    }
    let irregular = || FrameError::IrregularBoundary(block.id);
    let pairs = block.edge_pairs(pg);
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in &pairs {
        *degree.entry(u).or_default() += 1;
        *degree.entry(v).or_default() += 1;
    }
    let with_degree = |d: usize| -> Vec<usize> {
        degree
            .iter()
            .filter(|&(_, &k)| k == d)
            .map(|(&v, _)| v)
            .collect()
    };
    let (deg4, deg3, deg2) = (with_degree(4), with_degree(3), with_degree(2));
    let (&[x1, x3], &[x4]) = (deg4.as_slice(), deg2.as_slice()) else {
        return Err(irregular());
    };
    let boundary: BTreeSet<(usize, usize)> = block
        .edges
        .iter()
        .zip(&pairs)
        .filter(|(&e, _)| {
            let (f1, f2) = pg.edge_faces(e);
            block.has_interior_face(f1) != block.has_interior_face(f2)
        })
        .map(|(_, &p)| p)
        .collect();
    let on_boundary = |v: usize| boundary.iter().any(|&(a, b)| a == v || b == v);
    let (x2, x5) = match *deg3.as_slice() {
        [a, b] if on_boundary(a) && !on_boundary(b) => (a, b),
        [a, b] if on_boundary(b) && !on_boundary(a) => (b, a),
        _ => return Err(irregular()),
    };
    let frame = B5cFrame { x1, x2, x3, x4, x5 };
    let expected: BTreeSet<(usize, usize)> = frame.boundary_pairs().into_iter().collect();
    if boundary != expected {
        return Err(irregular());
    }
    Ok(frame)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn from_drawing(coords: &[(f64, f64)], edges: &[(usize, usize)]) -> PlaneGraph {
        PlaneGraph::from_coordinates(coords, edges).unwrap()
    }

    /// B5c (vertices 0..4 as x1..x5) with apex v = 5 beside x4 and w = 6
    /// beside x2, both joined to x1 and x3.
    pub(crate) fn bbar_gadget() -> PlaneGraph {
        let s3 = 3f64.sqrt();
        let coords = [
            (0.0, 1.0),
            (s3, 0.0),
            (0.0, -1.0),
            (-s3, 0.0),
            (s3 / 3.0, 0.0),
            (-3.0, 0.0),
            (3.0, 0.0),
        ];
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (0, 4),
            (1, 4),
            (2, 4),
            (0, 5),
            (2, 5),
            (0, 6),
            (2, 6),
        ];
        from_drawing(&coords, &edges)
    }

    #[test]
    fn hexagon_gives_trivial_blocks() {
        let c6 = PlaneGraph::new(6, (0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect())
            .unwrap();
        let d = decompose(&c6);
        assert_eq!(d.blocks.len(), 6);
        assert!(d.blocks.iter().all(|b| b.label == BlockLabel::B2 && b.is_trivial()));
    }

    #[test]
    fn k4_is_one_block() {
        let pg = catalog_plane_graph(BlockLabel::B4a).unwrap();
        let d = decompose(&pg);
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].interior_faces.len(), 4);
        assert_eq!(d.blocks[0].label, BlockLabel::B4a);
    }

    #[test]
    fn bbar_gadget_blocks() {
        let pg = bbar_gadget();
        assert_eq!(pg.edge_count(), 12);
        assert_eq!(pg.face_count(), 7);
        let d = decompose(&pg);
        let counts = d.label_counts();
        assert_eq!(counts.get(&BlockLabel::B5c), Some(&1));
        assert_eq!(counts.get(&BlockLabel::B2), Some(&4));
        let b5c = d.blocks.iter().find(|b| b.label == BlockLabel::B5c).unwrap();
        assert_eq!(b5c.interior_faces.len(), 4);
    }

    #[test]
    fn b5c_frame_on_catalog_drawing() {
        let pg = catalog_plane_graph(BlockLabel::B5c).unwrap();
        let d = decompose(&pg);
        let frame = canonical_b5c_frame(&pg, &d.blocks[0]).unwrap();
        assert_eq!(
            frame,
            B5cFrame {
                x1: 0,
                x2: 1,
                x3: 2,
                x4: 3,
                x5: 4
            }
        );
        assert_eq!(frame.boundary_pairs(), [(0, 1), (1, 2), (2, 3), (0, 3)]);
    }

    #[test]
    fn b5c_frame_on_gadget_matches_four_faces() {
        let pg = bbar_gadget();
        let d = decompose(&pg);
        let b = d.blocks.iter().find(|b| b.label == BlockLabel::B5c).unwrap();
        let frame = canonical_b5c_frame(&pg, b).unwrap();
        for (u, v) in frame.boundary_pairs() {
            let e = pg.graph().edge_id(u, v).unwrap();
            let (f1, f2) = pg.edge_faces(e);
            let outside = if b.has_interior_face(f1) { f2 } else { f1 };
            assert_eq!(pg.faces()[outside].length(), 4);
        }
    }

    #[test]
    fn frame_rejects_other_labels() {
        let pg = catalog_plane_graph(BlockLabel::B5b).unwrap();
        let d = decompose(&pg);
        assert_eq!(
            canonical_b5c_frame(&pg, &d.blocks[0]),
            Err(FrameError::NotB5c(0))
        );
    }

    #[test]
    fn classify_basics() {
        assert_eq!(classify(&Graph::new(2, [(0, 1)]).unwrap(), 0), BlockLabel::B2);
        assert_eq!(classify(&Graph::complete(4), 3), BlockLabel::B4a);
        assert_eq!(
            classify(&catalog_graph(BlockLabel::B6).unwrap(), 4),
            BlockLabel::B6
        );
        assert_eq!(classify(&Graph::complete(5), 0), BlockLabel::Other);
    }

    #[test]
    fn tree_with_three_edges_has_no_triangular_face() {
        // the single face of a star has three distinct edges but is no triangle
        let pg = PlaneGraph::new(4, vec![vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        assert_eq!(pg.faces()[0].length(), 3);
        let d = decompose(&pg);
        assert_eq!(d.blocks.len(), 3);
        assert!(d.blocks.iter().all(BlockLabel::B2.matches()));
    }

    impl BlockLabel {
        fn matches(self) -> impl Fn(&TriangularBlock) -> bool {
            move |b| b.label == self
        }
    }
}
