//! Planarity testing and embedding of abstract graphs.
//!
//! Each biconnected component is embedded by the Demoucron-Malgrange-Pertuiset
//! path-addition method; component embeddings are merged at cut vertices by
//! concatenating rotations.

use std::collections::VecDeque;

use crate::plane_graph::{Graph, PlaneGraph};

/// True iff `g` has a planar embedding.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_components(g)
        .iter()
        .all(|block| embed_block(g, block).is_some())
}

/// A planar embedding of a connected graph, or `None` if `g` is not planar
/// or not connected.
pub fn embed(g: &Graph) -> Option<PlaneGraph> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return None;
    }
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_components(g) {
        for (v, rot) in embed_block(g, &block)? {
            rotation[v].extend(rot);
        }
    }
    Some(PlaneGraph::new(n, rotation).expect("merged block embeddings are planar"))
}

/// Edge sets of the biconnected components (bridges are components of one
/// edge). Isolated vertices belong to none.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, parent, next neighbor index)
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = frames.last_mut() {
            let (v, parent) = (top.0, top.1);
            let nbrs = g.neighbors(v);
            if top.2 < nbrs.len() {
                let w = nbrs[top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut comp = Vec::new();
                        while let Some(e) = stack.pop() {
                            comp.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

/// Rotation lists for the vertices of one biconnected block, as
/// `(vertex, neighbors in cyclic order)`.
fn embed_block(g: &Graph, block: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    if block.len() == 1 {
        let (u, v) = block[0];
        return Some(vec![(u, vec![v]), (v, vec![u])]);
    }
    let n = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in block {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let faces = dmp(n, &verts, &adj, block.len())?;

    // dart u->v followed by v->w in a face means w follows u around v
    let mut next: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for face in &faces {
        let k = face.len();
        for i in 0..k {
            let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            next[v].push((u, w));
        }
    }
    let mut out = Vec::with_capacity(verts.len());
    for &v in &verts {
        let succ = &next[v];
        let start = adj[v][0];
        let mut rot = vec![start];
        let mut cur = start;
        loop {
            let nxt = succ.iter().find(|&&(a, _)| a == cur).expect("dart in a face").1;
            if nxt == start {
                break;
            }
            rot.push(nxt);
            cur = nxt;
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((v, rot));
    }
    Some(out)
}

/// Path addition on a biconnected graph. Returns oriented face cycles, or
/// `None` when some fragment fits no face.
fn dmp(n: usize, verts: &[usize], adj: &[Vec<usize>], m: usize) -> Option<Vec<Vec<usize>>> {
    let mut in_h = vec![false; n];
    let mut h_edges = std::collections::HashSet::new();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    let cycle = initial_cycle(verts[0], adj)?;
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges.len() < m {
        let fragments = fragments(verts, adj, &in_h, &h_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_id) = choice.expect("a fragment exists while edges remain");
        let path = fragments[fi].path(adj, &in_h);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }

        let face = faces.swap_remove(face_id);
        let (a, b) = (path[0], *path.last().expect("path"));
        let k = face.len();
        let ia = face.iter().position(|&x| x == a).expect("attachment on face");
        let ib = face.iter().position(|&x| x == b).expect("attachment on face");
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % k;
                out.push(face[i]);
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        // a .. b along the face, then back along the path
        let mut f1 = arc(ia, ib);
        f1.extend(inner.iter().rev());
        // b .. a along the face, then forward along the path
        let mut f2 = arc(ib, ia);
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

fn initial_cycle(start: usize, adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let target = *adj[start].first()?;
    // shortest path start -> target avoiding the edge between them
    let mut prev = vec![usize::MAX; adj.len()];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if v == start && w == target {
                continue;
            }
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    if prev[target] == usize::MAX {
        return None;
    }
    let mut cycle = vec![target];
    let mut v = target;
    while v != start {
        v = prev[v];
        cycle.push(v);
    }
    Some(cycle)
}

struct Fragment {
    attachments: Vec<usize>,
    /// Either a single chord `(u, v)` or the vertices of a component of
    /// `G - V(H)`.
    kind: FragmentKind,
}

enum FragmentKind {
    Chord(usize, usize),
    Component(Vec<usize>),
}

impl Fragment {
    /// A path through the fragment between two distinct attachments.
    fn path(&self, adj: &[Vec<usize>], in_h: &[bool]) -> Vec<usize> {
        match &self.kind {
            FragmentKind::Chord(u, v) => vec![*u, *v],
            FragmentKind::Component(comp) => {
                let a = self.attachments[0];
                let c = *adj[a]
                    .iter()
                    .find(|w| comp.contains(w))
                    .expect("attachment touches component");
                let mut prev = vec![usize::MAX; adj.len()];
                prev[c] = c;
                let mut queue = VecDeque::from([c]);
                while let Some(v) = queue.pop_front() {
                    if let Some(&b) = adj[v].iter().find(|&&b| in_h[b] && b != a) {
                        let mut path = vec![b, v];
                        let mut x = v;
                        while x != c {
                            x = prev[x];
                            path.push(x);
                        }
                        path.push(a);
                        path.reverse();
                        return path;
                    }
                    for &w in &adj[v] {
                        if !in_h[w] && prev[w] == usize::MAX {
                            prev[w] = v;
                            queue.push_back(w);
                        }
                    }
                }
                unreachable!("biconnected fragment has two attachments")
            }
        }
    }
}

fn fragments(
    verts: &[usize],
    adj: &[Vec<usize>],
    in_h: &[bool],
    h_edges: &std::collections::HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &u in verts {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    kind: FragmentKind::Chord(u, v),
                });
            }
        }
    }
    let mut seen = vec![false; adj.len()];
    for &s in verts {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            kind: FragmentKind::Component(comp),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete(5)));
        assert!(!is_planar(&k33()));
        // hexagon with its three long diagonals
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 3), (1, 4), (2, 5)]);
        assert!(!is_planar(&Graph::new(6, edges).unwrap()));
        assert!(is_planar(&Graph::empty(3)));
    }

    #[test]
    fn subdivided_k5_is_not_planar() {
        let mut edges = Vec::new();
        let mut next = 5;
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, next));
                edges.push((next, j));
                next += 1;
            }
        }
        let g = Graph::new(next, edges).unwrap();
        assert!(g.edge_count() <= 3 * g.vertex_count() - 6);
        assert!(!is_planar(&g));
    }

    #[test]
    fn embeddings_validate() {
        let octahedron = Graph::new(
            6,
            (0..6).flat_map(|i| (i + 1..6).filter(move |&j| j != i + 3 || i >= 3).map(move |j| (i, j))),
        )
        .unwrap();
        assert_eq!(octahedron.edge_count(), 12);
        let pg = embed(&octahedron).unwrap();
        assert_eq!(pg.face_count(), 8);
        assert!(pg.faces().iter().all(|f| f.is_triangle()));

        // two triangles sharing a cut vertex plus a pendant edge
        let bowtie = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let pg = embed(&bowtie).unwrap();
        assert_eq!(pg.face_count(), 3);
        assert!(embed(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).is_none());
    }

    #[test]
    fn blocks_partition_edges() {
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)]).unwrap();
        let blocks = biconnected_components(&g);
        assert_eq!(blocks.len(), 4);
        assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), 8);
    }
}
