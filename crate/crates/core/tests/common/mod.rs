//! Shared test corpus and brute-force reference checks.
#![allow(dead_code)]

use std::sync::OnceLock;

use triblock::blocks::{catalog_plane_graph, BlockLabel};
use triblock::constructions::{bbar_gadget, build_skeleton, extremal_graph, gadget_a, gadget_b};
use triblock::oracle::{embed, is_planar, max_edges, OracleConfig, SmallGraph};
use triblock::patterns::PatternSet;
use triblock::plane_graph::{Graph, PlaneGraph};

pub struct Entry {
    pub name: String,
    pub pg: PlaneGraph,
}

/// Every isomorphism class of graphs on `n` vertices passing `keep`, which
/// must be closed under edge deletion. Grouped by edge count.
pub fn enumerate_classes(n: usize, keep: impl Fn(&Graph) -> bool + Sync) -> Vec<Vec<SmallGraph>> {
    let mut levels = vec![vec![SmallGraph::empty(n)]];
    loop {
        let mut codes: Vec<u128> = Vec::new();
        for g in levels.last().unwrap() {
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let h = g.with_edge(u, v);
                        if keep(&h.to_graph()) {
                            codes.push(h.canonical_code());
                        }
                    }
                }
            }
        }
        codes.sort_unstable();
        codes.dedup();
        if codes.is_empty() {
            return levels;
        }
        levels.push(codes.into_iter().map(|c| SmallGraph::from_code(n, c)).collect());
    }
}

/// All connected planar graphs on `n` vertices up to isomorphism.
pub fn connected_planar(n: usize) -> Vec<Graph> {
    enumerate_classes(n, is_planar)
        .into_iter()
        .flatten()
        .map(|g| g.to_graph())
        .filter(|g| g.is_connected())
        .collect()
}

fn build_corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 2..=8 {
        for (i, g) in connected_planar(n).into_iter().enumerate() {
            out.push(Entry {
                name: format!("planar n={n} #{i}"),
                pg: embed(&g).expect("connected planar graph embeds"),
            });
        }
    }
    for label in BlockLabel::CATALOG {
        out.push(Entry {
            name: format!("catalog {label}"),
            pg: catalog_plane_graph(label).unwrap(),
        });
    }
    out.push(Entry {
        name: "gadget a".into(),
        pg: gadget_a().plane_graph,
    });
    out.push(Entry {
        name: "gadget b".into(),
        pg: gadget_b().plane_graph,
    });
    out.push(Entry {
        name: "bbar gadget".into(),
        pg: bbar_gadget(),
    });
    for k in 0..=2 {
        out.push(Entry {
            name: format!("skeleton k={k}"),
            pg: build_skeleton(k).unwrap().plane_graph,
        });
        out.push(Entry {
            name: format!("extremal k={k}"),
            pg: extremal_graph(k).unwrap(),
        });
    }
    for n in 6..=8 {
        for pattern in ["theta6-1", "theta6-2"] {
            for (i, g) in oracle_witnesses(n, pattern).iter().enumerate() {
                out.push(Entry {
                    name: format!("oracle {pattern} n={n} witness {i}"),
                    pg: embed(g).expect("oracle witnesses are connected and planar"),
                });
            }
        }
    }
    out
}

/// The shared corpus: all connected planar graphs on 2..=8 vertices (one
/// embedding each), the catalog, the constructions and the oracle
/// witnesses.
pub fn corpus() -> &'static [Entry] {
    static CORPUS: OnceLock<Vec<Entry>> = OnceLock::new();
    CORPUS.get_or_init(build_corpus)
}

pub fn oracle_witnesses(n: usize, pattern: &str) -> Vec<Graph> {
    let set: PatternSet = pattern.parse().unwrap();
    max_edges(n, &set, &OracleConfig::default()).unwrap().witnesses
}

/// Exhaustive search over injective maps `V(pattern) -> V(host)`, pruning a
/// partial map as soon as one of its pattern edges is missing in the host.
pub fn brute_force_contains(host: &Graph, pattern: &Graph) -> bool {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == pattern.vertex_count() {
            return true;
        }
        for x in 0..host.vertex_count() {
            if used[x] {
                continue;
            }
            let ok = pattern
                .neighbors(i)
                .iter()
                .filter(|&&j| j < i)
                .all(|&j| host.has_edge(map[j], x));
            if ok {
                used[x] = true;
                map.push(x);
                if extend(host, pattern, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    if pattern.vertex_count() > host.vertex_count() {
        return false;
    }
    extend(host, pattern, &mut Vec::new(), &mut vec![false; host.vertex_count()])
}

/// Connected planarity by trying every rotation system; for small graphs
/// only.
pub fn brute_force_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return true;
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    // every cyclic order: fix the first neighbor, permute the rest
    let orders: Vec<Vec<Vec<usize>>> = nbrs
        .iter()
        .map(|list| {
            if list.len() <= 2 {
                return vec![list.clone()];
            }
            let mut all = Vec::new();
            permute(&list[1..], &mut Vec::new(), &mut vec![false; list.len() - 1], &mut |p| {
                let mut o = vec![list[0]];
                o.extend_from_slice(p);
                all.push(o);
            });
            all
        })
        .collect();
    let mut choice = vec![0usize; n];
    loop {
        let rot: Vec<&Vec<usize>> = (0..n).map(|v| &orders[v][choice[v]]).collect();
        if n as i64 - m as i64 + count_faces(&rot) as i64 == 2 {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            choice[v] += 1;
            if choice[v] < orders[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
    }
}

fn permute(items: &[usize], cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == items.len() {
        f(cur);
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            cur.push(items[i]);
            permute(items, cur, used, f);
            cur.pop();
            used[i] = false;
        }
    }
}

fn count_faces(rot: &[&Vec<usize>]) -> usize {
    let mut seen = std::collections::HashSet::new();
    let mut faces = 0;
    for u in 0..rot.len() {
        for &v in rot[u].iter() {
            if seen.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                let r = rot[b];
                let pos = r.iter().position(|&x| x == a).unwrap();
                let c = r[(pos + 1) % r.len()];
                a = b;
                b = c;
            }
        }
    }
    faces
}

/// Outward paths of `len` edges glued along the given boundary edges of a
/// convex straight-line drawing, one per edge. Each closes a face of
/// length `len + 1` against its edge.
pub fn with_outer_paths(
    coords: &[(f64, f64)],
    edges: &[(usize, usize)],
    boundary: &[(usize, usize)],
    len: usize,
) -> PlaneGraph {
    let mut coords = coords.to_vec();
    let mut edges = edges.to_vec();
    let cx = coords.iter().map(|p| p.0).sum::<f64>() / coords.len() as f64;
    let cy = coords.iter().map(|p| p.1).sum::<f64>() / coords.len() as f64;
    for &(u, v) in boundary {
        let (a, b) = (coords[u], coords[v]);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let (mut nx, mut ny) = (-dy, dx);
        let (mx, my) = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        if nx * (mx - cx) + ny * (my - cy) < 0.0 {
            nx = -nx;
            ny = -ny;
        }
        let mut prev = u;
        for i in 1..len {
            let t = i as f64 / len as f64;
            coords.push((a.0 + t * dx + 0.3 * nx, a.1 + t * dy + 0.3 * ny));
            let id = coords.len() - 1;
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, v));
    }
    PlaneGraph::from_coordinates(&coords, &edges).expect("ears keep the drawing planar")
}
