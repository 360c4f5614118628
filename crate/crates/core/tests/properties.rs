mod common;

use proptest::prelude::*;
use triblock::blocks::decompose;
use triblock::contribution::{certify, g_eval, BoundSpec, Rational};
use triblock::plane_graph::{export_dot, import_dot, parse_planegraph, write_planegraph, PlaneGraph};

use common::corpus;

fn entry() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..corpus().len()).prop_flat_map(|i| {
        let n = corpus()[i].pg.vertex_count();
        (Just(i), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn same_embedding(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    a.graph() == b.graph() && a.rotations() == b.rotations()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn native_format_round_trips((i, _) in entry()) {
        let pg = &corpus()[i].pg;
        let back = parse_planegraph(&write_planegraph(pg)).unwrap();
        prop_assert!(same_embedding(pg, &back));
    }

    #[test]
    fn dot_round_trips((i, _) in entry()) {
        let pg = &corpus()[i].pg;
        let back = import_dot(&export_dot(pg)).unwrap();
        prop_assert!(same_embedding(pg, &back));
    }

    #[test]
    fn decomposition_ignores_labels((i, perm) in entry()) {
        let pg = &corpus()[i].pg;
        let moved = pg.relabel(&perm);
        prop_assert_eq!(decompose(pg).label_counts(), decompose(&moved).label_counts());
        prop_assert_eq!(decompose(pg).label_counts(), decompose(&pg.mirrored()).label_counts());
        if pg.vertex_count() >= 6 {
            for spec in BoundSpec::all() {
                let a = certify(pg, &spec).unwrap();
                let b = certify(&moved, &spec).unwrap();
                prop_assert_eq!(a.total_g(), b.total_g());
                let mut ga: Vec<String> = a.clusters.iter().map(|c| c.g.to_string()).collect();
                let mut gb: Vec<String> = b.clusters.iter().map(|c| c.g.to_string()).collect();
                ga.sort();
                gb.sort();
                prop_assert_eq!(ga, gb);
            }
        }
    }

    #[test]
    fn g_is_linear(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20, k in -5i64..5) {
        for spec in BoundSpec::all() {
            let (x, y) = (Rational::new(a, b), Rational::new(c, d));
            let sum = g_eval(&spec, &(x.clone() + y.clone()), &(y.clone() + x.clone()));
            prop_assert_eq!(sum, g_eval(&spec, &x, &y) + g_eval(&spec, &y, &x));
            prop_assert_eq!(g_eval(&spec, &x.scale(k), &y.scale(k)), g_eval(&spec, &x, &y).scale(k));
        }
    }
}
