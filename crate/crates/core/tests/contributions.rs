mod common;

use triblock::blocks::{catalog_drawing, decompose, BlockLabel};
use triblock::constructions::extremal_graph;
use triblock::contribution::{edge_contribution, face_contribution, g_eval, BoundSpec, Rational};
use triblock::plane_graph::PlaneGraph;

use common::with_outer_paths;

/// (e, f, g under theta6-1) of the unique block carrying `label`.
fn block_values(pg: &PlaneGraph, label: BlockLabel) -> (Rational, Rational, Rational) {
    let d = decompose(pg);
    let found: Vec<_> = d.blocks.iter().filter(|b| b.label == label).collect();
    assert_eq!(found.len(), 1, "{label}: {:?}", d.label_counts());
    let e = edge_contribution(found[0]);
    let f = face_contribution(pg, found[0]);
    let g = g_eval(&BoundSpec::theta6_1(), &e, &f);
    (e, f, g)
}

/// Catalog block with a path of `len` edges on every hull edge; the hull is
/// the cycle through the first `hull` vertices.
fn surrounded(label: BlockLabel, hull: usize, len: usize) -> PlaneGraph {
    let (coords, edges) = catalog_drawing(label).unwrap();
    let boundary: Vec<(usize, usize)> = (0..hull).map(|i| (i, (i + 1) % hull)).collect();
    with_outer_paths(&coords, &edges, &boundary, len)
}

#[test]
fn b2_between_two_quadrilaterals() {
    // two unit squares side by side; the middle edge is a trivial block
    let coords = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 1.0), (1.0, 1.0), (2.0, 1.0)];
    let edges = [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)];
    let pg = PlaneGraph::from_coordinates(&coords, &edges).unwrap();
    let d = decompose(&pg);
    let mid = pg.graph().edge_id(1, 4).unwrap();
    let b = &d.blocks[d.edge_to_block[mid]];
    assert_eq!(b.label, BlockLabel::B2);
    let f = face_contribution(&pg, b);
    assert_eq!(f, Rational::new(1, 2));
    assert_eq!(g_eval(&BoundSpec::theta6_1(), &edge_contribution(b), &f), Rational::new(-11, 2));
}

#[test]
fn b3_with_quadrilaterals() {
    let (e, f, g) = block_values(&surrounded(BlockLabel::B3, 3, 3), BlockLabel::B3);
    assert_eq!((e, f, g), (Rational::integer(3), Rational::new(7, 4), Rational::new(-21, 4)));
}

#[test]
fn b4b_with_quadrilaterals() {
    let (e, f, g) = block_values(&surrounded(BlockLabel::B4b, 4, 3), BlockLabel::B4b);
    assert_eq!((e, f, g), (Rational::integer(5), Rational::integer(3), Rational::integer(-5)));
}

#[test]
fn b5b_with_pentagons() {
    let (e, f, g) = block_values(&surrounded(BlockLabel::B5b, 4, 4), BlockLabel::B5b);
    assert_eq!((e, f, g), (Rational::integer(8), Rational::new(24, 5), Rational::integer(-8)));
}

#[test]
fn b5d_with_quadrilaterals() {
    let (e, f, g) = block_values(&surrounded(BlockLabel::B5d, 5, 3), BlockLabel::B5d);
    assert_eq!((e, f, g), (Rational::integer(7), Rational::new(17, 4), Rational::new(-19, 4)));
}

#[test]
fn b6_with_quadrilaterals() {
    let (e, f, g) = block_values(&surrounded(BlockLabel::B6, 6, 3), BlockLabel::B6);
    assert_eq!((e, f, g), (Rational::integer(9), Rational::new(11, 2), Rational::new(-9, 2)));
}

#[test]
fn b4a_with_quadrilaterals_is_positive() {
    // K4 ringed by 4-faces gives g = 3/4 > 0 under theta6-1
    let (e, f, g) = block_values(&surrounded(BlockLabel::B4a, 3, 3), BlockLabel::B4a);
    assert_eq!((e, f, g), (Rational::integer(6), Rational::new(15, 4), Rational::new(3, 4)));
}

#[test]
fn b5a_in_extremal_graph_is_tight() {
    let pg = extremal_graph(0).unwrap();
    let d = decompose(&pg);
    let spec = BoundSpec::theta6_1();
    let mut seen = 0;
    for b in d.blocks.iter().filter(|b| b.label == BlockLabel::B5a) {
        let e = edge_contribution(b);
        let f = face_contribution(&pg, b);
        assert_eq!(e, Rational::integer(9));
        assert_eq!(f, Rational::new(28, 5));
        assert!(g_eval(&spec, &e, &f).is_zero());
        seen += 1;
    }
    assert_eq!(seen, 20);
}

#[test]
fn pendant_edge_on_b5a_breaks_nonpositivity() {
    // K5 - {1,2} plus the pendant edge 0-2: the outer walk 0 2 3 4 2 has four
    // distinct edges, three of them in the block
    let edges = [(0, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];
    let pg = triblock::oracle::embed(&triblock::plane_graph::Graph::new(6, edges).unwrap()).unwrap();
    let (e, f, g) = block_values(&pg, BlockLabel::B5a);
    assert_eq!((e, f, g), (Rational::integer(9), Rational::new(23, 4), Rational::new(27, 4)));
    assert!(BoundSpec::theta6_1().bound_holds(6, 10));
}
