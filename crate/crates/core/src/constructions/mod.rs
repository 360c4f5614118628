//! The extremal family for Theta(6,1)-free planar graphs: a C4-free pentagon
//! skeleton glued from two gadgets, with every triangle then replaced by a
//! B5a block.

mod figure;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::{decompose, BlockLabel};
use crate::contribution::{certify, BoundSpec};
use crate::patterns;
use crate::plane_graph::{Graph, GraphError, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("gluing mismatch: {0}")]
    GluingMismatch(String),
    #[error("{stage}: {message}")]
    Invariant { stage: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A plane graph with up to two marked pentagon faces, given as vertex cycles.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub plane_graph: PlaneGraph,
    pub red_pentagon: Option<Vec<usize>>,
    pub blue_pentagon: Option<Vec<usize>>,
}

impl Gadget {
    fn from_drawing(
        (drawing, red, blue): (figure::Drawing, Vec<usize>, Vec<usize>),
        name: &str,
    ) -> Self {
        let plane_graph = PlaneGraph::from_coordinates(&drawing.coords, &drawing.edges)
            .unwrap_or_else(|e| panic!("gadget {name} drawing: {e}"));
        let gadget = Gadget {
            plane_graph,
            red_pentagon: Some(red),
            blue_pentagon: Some(blue),
        };
        if let Err(e) = gadget.validate() {
            panic!("gadget {name}: {e}");
        }
        gadget
    }

    fn marked(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.red_pentagon.iter().chain(self.blue_pentagon.iter())
    }

    /// Checks C4-freeness, that the marked cycles are 5-faces, and the face
    /// pattern: an unmarked edge borders one 3-face and one 5-face, while an
    /// edge of a marked pentagon borders a 3-face or 5-face on its other side
    /// (the pattern there is completed by whatever is glued on).
    pub fn validate(&self) -> Result<(), String> {
        let pg = &self.plane_graph;
        let mut marked_faces = Vec::new();
        for cycle in self.marked() {
            let f = face_of_cycle(pg, cycle)
                .ok_or_else(|| format!("marked cycle {cycle:?} is not a face"))?;
            if pg.faces()[f].length() != 5 {
                return Err(format!("marked face {f} is not a pentagon"));
            }
            marked_faces.push(f);
        }
        if !patterns::is_free(pg.graph(), &Graph::cycle(4)) {
            return Err("contains a 4-cycle".into());
        }
        for e in 0..pg.edge_count() {
            let (f1, f2) = pg.edge_faces(e);
            let (l1, l2) = (pg.faces()[f1].length(), pg.faces()[f2].length());
            let ok = if marked_faces.contains(&f1) {
                l2 == 3 || l2 == 5
            } else if marked_faces.contains(&f2) {
                l1 == 3 || l1 == 5
            } else {
                (l1, l2) == (3, 5) || (l1, l2) == (5, 3)
            };
            if !ok {
                let (u, v) = pg.graph().edges()[e];
                return Err(format!("edge {u}-{v} borders faces of lengths {l1} and {l2}"));
            }
        }
        Ok(())
    }
}

/// 30 vertices, 60 edges; blue pentagon inside, red pentagon outside.
pub fn gadget_a() -> Gadget {
    Gadget::from_drawing(figure::gadget_a(), "a")
}

/// 50 vertices, 100 edges; red pentagon inside, blue pentagon outside.
pub fn gadget_b() -> Gadget {
    Gadget::from_drawing(figure::gadget_b(), "b")
}

/// Face whose boundary walk visits `cycle` in order, in either direction.
fn face_of_cycle(pg: &PlaneGraph, cycle: &[usize]) -> Option<usize> {
    if is_face_walk(pg, cycle) {
        return Some(pg.face_of_dart(cycle[0], cycle[1]));
    }
    let rev: Vec<usize> = cycle.iter().rev().copied().collect();
    is_face_walk(pg, &rev).then(|| pg.face_of_dart(rev[0], rev[1]))
}

fn is_face_walk(pg: &PlaneGraph, seq: &[usize]) -> bool {
    let k = seq.len();
    if k < 3 || !pg.graph().has_edge(seq[0], seq[1]) {
        return false;
    }
    let face = &pg.faces()[pg.face_of_dart(seq[0], seq[1])];
    if face.walk().len() != k {
        return false;
    }
    let mut d = crate::plane_graph::Dart {
        tail: seq[0],
        head: seq[1],
    };
    for i in 1..k {
        d = pg.successor(d);
        if d.tail != seq[i] || d.head != seq[(i + 1) % k] {
            return false;
        }
    }
    true
}

/// Glue `g2` onto `g1` by identifying `c1[i]` with `c2[i]`. Both cycles must
/// bound faces, traversed in opposite senses so the two faces can be laid
/// against each other; both faces disappear and the cycle edges merge.
///
/// Returns the glued graph and the new id of every `g2` vertex (`g1` ids are
/// kept).
pub fn glue(
    g1: &PlaneGraph,
    c1: &[usize],
    g2: &PlaneGraph,
    c2: &[usize],
) -> Result<(PlaneGraph, Vec<usize>), ConstructionError> {
    let k = c1.len();
    if k != c2.len() || k < 3 {
        return Err(ConstructionError::GluingMismatch(format!(
            "cycles of lengths {} and {}",
            c1.len(),
            c2.len()
        )));
    }
    let (c1, c2): (Vec<usize>, Vec<usize>) = if is_face_walk(g1, c1) {
        (c1.to_vec(), c2.to_vec())
    } else {
        (c1.iter().rev().copied().collect(), c2.iter().rev().copied().collect())
    };
    if !is_face_walk(g1, &c1) {
        return Err(ConstructionError::GluingMismatch(format!(
            "{c1:?} is not a face of the first graph"
        )));
    }
    let c2_rev: Vec<usize> = std::iter::once(c2[0]).chain(c2[1..].iter().rev().copied()).collect();
    if !is_face_walk(g2, &c2_rev) {
        return Err(ConstructionError::GluingMismatch(format!(
            "{c2:?} is not a face of the second graph with the opposite orientation"
        )));
    }

    let n1 = g1.vertex_count();
    let mut map2 = vec![usize::MAX; g2.vertex_count()];
    for i in 0..k {
        map2[c2[i]] = c1[i];
    }
    let mut next = n1;
    for slot in map2.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }

    let mut rotation: Vec<Vec<usize>> = g1.rotations().to_vec();
    rotation.resize(next, Vec::new());
    for y in 0..g2.vertex_count() {
        if !c2.contains(&y) {
            rotation[map2[y]] = g2.rotation(y).iter().map(|&z| map2[z]).collect();
        }
    }
    for i in 0..k {
        let (u, v, w) = (c1[(i + k - 1) % k], c1[i], c1[(i + 1) % k]);
        // g1 keeps the sector from w round to u; g2 fills the face sector
        let r1 = g1.rotation(v);
        let start = r1.iter().position(|&x| x == w).expect("cycle edge");
        let mut merged: Vec<usize> = (0..r1.len()).map(|j| r1[(start + j) % r1.len()]).collect();
        debug_assert_eq!(merged.last(), Some(&u));
        let r2: Vec<usize> = g2.rotation(c2[i]).iter().map(|&z| map2[z]).collect();
        let pu = r2.iter().position(|&x| x == u).expect("cycle edge");
        merged.extend(
            (1..r2.len())
                .map(|j| r2[(pu + j) % r2.len()])
                .take_while(|&x| x != w),
        );
        rotation[v] = merged;
    }
    let glued = PlaneGraph::new(next, rotation)
        .map_err(|e| ConstructionError::GluingMismatch(e.to_string()))?;
    Ok((glued, map2))
}

/// The pentagon skeleton before substitution.
#[derive(Clone, Debug)]
pub struct SkeletonGraph {
    pub plane_graph: PlaneGraph,
    pub k: usize,
    pub triangle_faces: Vec<usize>,
}

/// Gadget (a) alone for `k = 0`; each further step glues a copy of (b) onto
/// the open red pentagon and then a copy of (a) onto the resulting blue one.
pub fn build_skeleton(k: usize) -> Result<SkeletonGraph, ConstructionError> {
    let first = gadget_a();
    let mut pg = first.plane_graph;
    let mut red = first.red_pentagon.expect("gadget a has a red pentagon");
    for _ in 0..k {
        let b = gadget_b();
        let b_red = b.red_pentagon.expect("gadget b has a red pentagon");
        let (glued, map) = glue(&pg, &red, &b.plane_graph, &b_red)?;
        let blue: Vec<usize> = b
            .blue_pentagon
            .expect("gadget b has a blue pentagon")
            .iter()
            .map(|&v| map[v])
            .collect();

        let a = gadget_a();
        let a_blue = a.blue_pentagon.expect("gadget a has a blue pentagon");
        let (glued, map) = glue(&glued, &blue, &a.plane_graph, &a_blue)?;
        red = a
            .red_pentagon
            .expect("gadget a has a red pentagon")
            .iter()
            .map(|&v| map[v])
            .collect();
        pg = glued;
    }
    let skeleton = SkeletonGraph {
        triangle_faces: (0..pg.face_count())
            .filter(|&f| pg.faces()[f].is_triangle())
            .collect(),
        plane_graph: pg,
        k,
    };
    skeleton.validate()?;
    Ok(skeleton)
}

impl SkeletonGraph {
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let fail = |message: String| ConstructionError::Invariant {
            stage: "skeleton".into(),
            message,
        };
        let pg = &self.plane_graph;
        let k = self.k;
        let pentagons = pg.faces().iter().filter(|f| f.length() == 5).count();
        let counts = (
            pg.vertex_count(),
            pg.edge_count(),
            self.triangle_faces.len(),
            pentagons,
        );
        let expected = (70 * k + 30, 150 * k + 60, 50 * k + 20, 30 * k + 12);
        if counts != expected {
            return Err(fail(format!(
                "(n, m, triangles, pentagons) = {counts:?}, expected {expected:?}"
            )));
        }
        for e in 0..pg.edge_count() {
            let (f1, f2) = pg.edge_faces(e);
            let mut lens = [pg.faces()[f1].length(), pg.faces()[f2].length()];
            lens.sort_unstable();
            if lens != [3, 5] {
                let (u, v) = pg.graph().edges()[e];
                return Err(fail(format!("edge {u}-{v} borders faces of lengths {lens:?}")));
            }
        }
        if !patterns::is_free(pg.graph(), &Graph::cycle(4)) {
            return Err(fail("contains a 4-cycle".into()));
        }
        Ok(())
    }
}

/// Put a new vertex inside the triangular face traced `a -> b -> c`.
fn insert_in_triangle(rotation: &mut Vec<Vec<usize>>, a: usize, b: usize, c: usize) -> usize {
    let x = rotation.len();
    // at each corner the face sits between the incoming and outgoing neighbors
    for (corner, incoming, outgoing) in [(b, a, c), (c, b, a), (a, c, b)] {
        let rot = &mut rotation[corner];
        let len = rot.len();
        let pos = (0..len)
            .find(|&i| rot[i] == incoming && rot[(i + 1) % len] == outgoing)
            .expect("corner of a triangular face");
        rot.insert(pos + 1, x);
    }
    rotation.push(vec![a, c, b]);
    x
}

/// Replace every triangle of the skeleton by a B5a block: a vertex joined to
/// the three corners, and a second vertex inside one of the new triangles.
pub fn substitute_b5a(skeleton: &SkeletonGraph) -> PlaneGraph {
    let pg = &skeleton.plane_graph;
    let mut rotation = pg.rotations().to_vec();
    for &f in &skeleton.triangle_faces {
        let walk = pg.faces()[f].vertex_walk();
        let (a, b, c) = (walk[0], walk[1], walk[2]);
        let u = insert_in_triangle(&mut rotation, a, b, c);
        insert_in_triangle(&mut rotation, a, b, u);
    }
    let n = rotation.len();
    PlaneGraph::new(n, rotation).expect("substitution preserves planarity")
}

pub fn extremal_graph(k: usize) -> Result<PlaneGraph, ConstructionError> {
    Ok(substitute_b5a(&build_skeleton(k)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub expected_n: usize,
    pub expected_m: usize,
    pub counts_ok: bool,
    /// `17 m == 45 (n - 2)`.
    pub equality_ok: bool,
    pub theta_free: bool,
    pub all_blocks_b5a: bool,
    pub all_g_zero: bool,
    pub failures: Vec<String>,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Build the `k`-th extremal graph and check counts, freeness, the block
/// structure and that certification gives `g = 0` on every cluster.
pub fn verify_extremal(k: usize) -> Result<ExtremalReport, ConstructionError> {
    let pg = extremal_graph(k)?;
    let spec = BoundSpec::theta6_1();
    let (n, m) = (pg.vertex_count(), pg.edge_count());
    let (expected_n, expected_m) = (170 * k + 70, 450 * k + 180);

    let (theta_free, (blocks_b5a, cert)) = rayon::join(
        || patterns::is_free(pg.graph(), spec.pattern.graph()),
        || {
            let d = decompose(&pg);
            let b5a = d.blocks.iter().all(|b| b.label == BlockLabel::B5a);
            (b5a, certify(&pg, &spec))
        },
    );

    let mut failures = Vec::new();
    let counts_ok = (n, m) == (expected_n, expected_m);
    if !counts_ok {
        failures.push(format!(
            "counts: (n, m) = ({n}, {m}), expected ({expected_n}, {expected_m})"
        ));
    }
    let equality_ok = 17 * m == 45 * (n - 2);
    if !equality_ok {
        failures.push(format!("equality: 17 * {m} != 45 * {}", n - 2));
    }
    if !theta_free {
        failures.push("freeness: contains Theta(6,1)".into());
    }
    if !blocks_b5a {
        failures.push("blocks: not every block is B5a".into());
    }
    let all_g_zero = match cert {
        Ok(c) => {
            if !c.all_zero() {
                failures.push(format!(
                    "certify: {} clusters with g != 0",
                    c.clusters.iter().filter(|c| !c.g.is_zero()).count()
                ));
            }
            c.all_zero()
        }
        Err(e) => {
            failures.push(format!("certify: {e}"));
            false
        }
    };
    Ok(ExtremalReport {
        k,
        n,
        m,
        expected_n,
        expected_m,
        counts_ok,
        equality_ok,
        theta_free,
        all_blocks_b5a: blocks_b5a,
        all_g_zero,
        failures,
    })
}

/// A B5c block with both 4-faces across its boundary closed by two apex
/// vertices: the smallest graph in which the B5c cluster rule fires.
pub fn bbar_gadget() -> PlaneGraph {
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
    PlaneGraph::from_coordinates(&coords, &edges).expect("planar drawing")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_lengths(pg: &PlaneGraph) -> (usize, usize) {
        let tri = pg.faces().iter().filter(|f| f.length() == 3).count();
        let pent = pg.faces().iter().filter(|f| f.length() == 5).count();
        (tri, pent)
    }

    #[test]
    fn gadget_a_counts() {
        let a = gadget_a();
        assert_eq!(a.plane_graph.vertex_count(), 30);
        assert_eq!(a.plane_graph.edge_count(), 60);
        assert_eq!(face_lengths(&a.plane_graph), (20, 12));
    }

    #[test]
    fn gadget_b_counts() {
        let b = gadget_b();
        assert_eq!(b.plane_graph.vertex_count(), 50);
        assert_eq!(b.plane_graph.edge_count(), 100);
        // 52 faces by Euler: 30 triangles and 22 pentagons
        assert_eq!(face_lengths(&b.plane_graph), (30, 22));
    }

    #[test]
    fn skeleton_counts() {
        for (k, n, m) in [(0, 30, 60), (1, 100, 210), (2, 170, 360)] {
            let s = build_skeleton(k).unwrap();
            assert_eq!(s.plane_graph.vertex_count(), n);
            assert_eq!(s.plane_graph.edge_count(), m);
        }
    }

    #[test]
    fn glue_rejects_non_faces() {
        let a = gadget_a();
        let b = gadget_b();
        let bogus = vec![5, 6, 7, 8, 9];
        assert!(matches!(
            glue(&a.plane_graph, &a.red_pentagon.clone().unwrap(), &b.plane_graph, &bogus),
            Err(ConstructionError::GluingMismatch(_))
        ));
    }

    #[test]
    fn substitution_k0() {
        let s = build_skeleton(0).unwrap();
        let pg = substitute_b5a(&s);
        assert_eq!((pg.vertex_count(), pg.edge_count()), (70, 180));
        assert_eq!(face_lengths(&pg).0, 100);
        let d = decompose(&pg);
        assert_eq!(d.blocks.len(), 20);
        assert!(d.blocks.iter().all(|b| b.label == BlockLabel::B5a));
    }

    #[test]
    fn extremal_k1_k2_verify() {
        for k in [1, 2] {
            let r = verify_extremal(k).unwrap();
            assert!(r.passed(), "k = {k}: {:?}", r.failures);
            assert_eq!((r.n, r.m), (170 * k + 70, 450 * k + 180));
        }
    }

    #[test]
    fn extremal_k0_verifies() {
        let r = verify_extremal(0).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}
