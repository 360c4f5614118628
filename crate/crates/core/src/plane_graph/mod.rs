//! Connected simple plane graphs given by rotation systems.
//!
//! A [`PlaneGraph`] stores, for every vertex, the counterclockwise cyclic
//! order of its neighbors. Faces are traced with a single fixed rule: the
//! successor of the dart `(u, v)` is `(v, w)` where `w` immediately follows
//! `u` in the rotation at `v`. Construction rejects any rotation system whose
//! face count does not satisfy `n - m + f = 2`.

mod dot;
mod format;
mod graph;

use std::collections::BTreeSet;

use thiserror::Error;

pub use dot::{export_dot, import_dot};
pub use format::{parse_planegraph, write_planegraph, FormatError};
pub use graph::{EdgeId, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("rotation at vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("expected {expected} rotations, got {found}")]
    RotationCount { expected: usize, found: usize },
    #[error("inconsistent rotation: {u} lists {v} but {v} does not list {u}")]
    InconsistentRotation { u: usize, v: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("embedding is not planar: n - m + f = {n} - {m} + {f} != 2")]
    NonPlanarEmbedding { n: usize, m: usize, f: usize },
}

/// A directed copy of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

/// A face as traced by the successor rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    walk: Vec<Dart>,
    edge_set: Vec<EdgeId>,
}

impl Face {
    pub fn walk(&self) -> &[Dart] {
        &self.walk
    }

    /// Distinct edges on the boundary walk, sorted.
    pub fn edge_set(&self) -> &[EdgeId] {
        &self.edge_set
    }

    /// Number of distinct boundary edges. A bridge counts once even though
    /// the walk crosses it twice.
    pub fn length(&self) -> usize {
        self.edge_set.len()
    }

    /// Vertices in walk order (tails of the darts).
    pub fn vertex_walk(&self) -> Vec<usize> {
        self.walk.iter().map(|d| d.tail).collect()
    }

    /// A face bounded by exactly three darts, i.e. a triangle.
    pub fn is_triangle(&self) -> bool {
        self.walk.len() == 3
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_set.binary_search(&e).is_ok()
    }
}

/// Connected simple graph together with a planar rotation system.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    dart_offset: Vec<usize>,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
}

impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.rotation == other.rotation
    }
}

impl Eq for PlaneGraph {}

impl PlaneGraph {
    /// Validate a rotation system and trace its faces.
    pub fn new(n: usize, rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if rotation.len() != n {
            return Err(GraphError::RotationCount {
                expected: n,
                found: rotation.len(),
            });
        }
        let mut edges = Vec::new();
        for (v, rot) in rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &w in rot {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
                if w == v {
                    return Err(GraphError::Loop { vertex: v });
                }
                if !seen.insert(w) {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: w,
                    });
                }
                if !rotation[w].contains(&v) {
                    return Err(GraphError::InconsistentRotation { u: v, v: w });
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::new(n, edges)?;
        let components = graph.components().len();
        if components != 1 {
            return Err(GraphError::Disconnected { components });
        }

        let mut dart_offset = Vec::with_capacity(n + 1);
        let mut total = 0;
        for rot in &rotation {
            dart_offset.push(total);
            total += rot.len();
        }
        dart_offset.push(total);

        let mut pg = Self {
            graph,
            rotation,
            dart_offset,
            faces: Vec::new(),
            dart_face: vec![usize::MAX; total],
        };
        pg.trace_faces();

        let (n, m, f) = (pg.vertex_count(), pg.edge_count(), pg.faces.len());
        if n + f != m + 2 {
            return Err(GraphError::NonPlanarEmbedding { n, m, f });
        }
        Ok(pg)
    }

    /// Straight-line drawing: rotations are neighbors sorted by angle.
    ///
    /// Crossing drawings are caught by the Euler check.
    pub fn from_coordinates(
        coords: &[(f64, f64)],
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let n = coords.len();
        let graph = Graph::new(n, edges.iter().copied())?;
        let rotation = (0..n)
            .map(|v| {
                let (x0, y0) = coords[v];
                let mut nbrs: Vec<(f64, usize)> = graph
                    .neighbors(v)
                    .iter()
                    .map(|&w| {
                        let (x, y) = coords[w];
                        ((y - y0).atan2(x - x0), w)
                    })
                    .collect();
                nbrs.sort_by(|a, b| a.0.total_cmp(&b.0));
                nbrs.into_iter().map(|(_, w)| w).collect()
            })
            .collect();
        Self::new(n, rotation)
    }

    fn dart_index(&self, tail: usize, head: usize) -> usize {
        let pos = self.rotation[tail]
            .iter()
            .position(|&w| w == head)
            .expect("dart must exist");
        self.dart_offset[tail] + pos
    }

    fn dart_at(&self, index: usize) -> Dart {
        let tail = self.dart_offset.partition_point(|&o| o <= index) - 1;
        Dart {
            tail,
            head: self.rotation[tail][index - self.dart_offset[tail]],
        }
    }

    /// Successor of a dart under the face-tracing rule.
    pub fn successor(&self, d: Dart) -> Dart {
        let rot = &self.rotation[d.head];
        let pos = rot
            .iter()
            .position(|&w| w == d.tail)
            .expect("dart must exist");
        Dart {
            tail: d.head,
            head: rot[(pos + 1) % rot.len()],
        }
    }

    fn trace_faces(&mut self) {
        if self.graph.edge_count() == 0 {
            // single vertex: one face with an empty boundary
            self.faces.push(Face {
                walk: Vec::new(),
                edge_set: Vec::new(),
            });
            return;
        }
        let total = self.dart_face.len();
        for start in 0..total {
            if self.dart_face[start] != usize::MAX {
                continue;
            }
            let face_id = self.faces.len();
            let first = self.dart_at(start);
            let mut walk = Vec::new();
            let mut d = first;
            loop {
                let idx = self.dart_index(d.tail, d.head);
                self.dart_face[idx] = face_id;
                walk.push(d);
                d = self.successor(d);
                if d == first {
                    break;
                }
            }
            let mut edge_set: Vec<EdgeId> = walk
                .iter()
                .map(|d| self.graph.edge_id(d.tail, d.head).expect("edge"))
                .collect();
            edge_set.sort_unstable();
            edge_set.dedup();
            self.faces.push(Face { walk, edge_set });
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Face containing the dart `tail -> head`.
    pub fn face_of_dart(&self, tail: usize, head: usize) -> usize {
        self.dart_face[self.dart_index(tail, head)]
    }

    /// The two faces on either side of an edge (equal for a bridge).
    pub fn edge_faces(&self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.graph.edges()[e];
        (self.face_of_dart(u, v), self.face_of_dart(v, u))
    }

    /// Same graph with every rotation reversed; the face set is unchanged
    /// up to walk direction.
    pub fn mirrored(&self) -> PlaneGraph {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneGraph::new(self.vertex_count(), rotation).expect("mirror of a plane graph is planar")
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> PlaneGraph {
        let n = self.vertex_count();
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v].iter().map(|&w| perm[w]).collect();
        }
        PlaneGraph::new(n, rotation).expect("relabeling preserves planarity")
    }
}
