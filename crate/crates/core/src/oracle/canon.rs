//! Canonical forms for graphs on at most 16 vertices.
//!
//! The canonical labeling is the vertex order, among the leaves of an
//! individualization-refinement search tree, whose adjacency code is largest.
//! The code packs the upper triangle: the pair `i < j` of positions is bit
//! `j (j - 1) / 2 + i`.

use crate::plane_graph::Graph;

pub const MAX_VERTICES: usize = 16;

/// Dense graph as neighbor bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: [u16; MAX_VERTICES],
}

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = (i.min(j), i.max(j));
    (j * (j - 1) / 2 + i) as u32
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Self {
            n,
            adj: [0; MAX_VERTICES],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut s = Self::empty(g.vertex_count());
        for &(u, v) in g.edges() {
            s.add_edge(u, v);
        }
        s
    }

    /// Inverse of [`SmallGraph::code`] under the identity labeling.
    pub fn from_code(n: usize, code: u128) -> Self {
        let mut s = Self::empty(n);
        for j in 1..n {
            for i in 0..j {
                if code >> pair_bit(i, j) & 1 == 1 {
                    s.add_edge(i, j);
                }
            }
        }
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn with_edge(mut self, u: usize, v: usize) -> Self {
        self.add_edge(u, v);
        self
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.n).flat_map(|u| {
            (u + 1..self.n)
                .filter(move |&v| self.has_edge(u, v))
                .map(move |v| (u, v))
        });
        Graph::new(self.n, edges).expect("bitmask graph is simple")
    }

    /// Adjacency code with vertex `order[p]` at position `p`.
    pub fn code(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for j in 1..order.len() {
            for i in 0..j {
                if self.has_edge(order[i], order[j]) {
                    code |= 1 << pair_bit(i, j);
                }
            }
        }
        code
    }

    /// Canonical code and the labeling achieving it (`order[p]` is the
    /// vertex placed at position `p`).
    pub fn canonical(&self) -> (u128, Vec<usize>) {
        let mut best: Option<(u128, Vec<usize>)> = None;
        let cells = vec![(0..self.n).collect::<Vec<usize>>()];
        if self.n == 0 {
            return (0, Vec::new());
        }
        self.search(cells, &mut best);
        best.expect("search reaches a leaf")
    }

    pub fn canonical_code(&self) -> u128 {
        self.canonical().0
    }

    /// Split cells until the ordered partition is equitable.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut changed = false;
            let mut ci = 0;
            while ci < cells.len() {
                let mask: u16 = cells[ci].iter().fold(0, |m, &v| m | 1 << v);
                let mut next = Vec::with_capacity(cells.len());
                for cell in &cells {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> =
                        cell.iter().map(|&v| ((self.adj[v] & mask).count_ones(), v)).collect();
                    keyed.sort_unstable_by_key(|&(k, _)| k);
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            let mut part: Vec<usize> = keyed[start..i].iter().map(|&(_, v)| v).collect();
                            part.sort_unstable();
                            next.push(part);
                            start = i;
                        }
                    }
                }
                if next.len() != cells.len() {
                    changed = true;
                }
                cells = next;
                ci += 1;
            }
            if !changed {
                return cells;
            }
        }
    }

    /// Vertices of `cell` are interchangeable when any two of them have the
    /// same neighbors apart from each other.
    fn is_twin_cell(&self, cell: &[usize]) -> bool {
        let v0 = cell[0];
        cell[1..].iter().all(|&v| {
            let clear = !(1u16 << v0 | 1u16 << v);
            self.adj[v0] & clear == self.adj[v] & clear
        })
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let code = self.code(&order);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, order));
            }
            return;
        };
        let cell = &cells[target];
        let choices: &[usize] = if self.is_twin_cell(cell) { &cell[..1] } else { cell };
        for &v in choices {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&x| x != v).collect());
            next.extend(cells[target + 1..].iter().cloned());
            self.search(next, best);
        }
    }

    /// The graph relabeled into canonical order.
    pub fn canonical_form(&self) -> SmallGraph {
        SmallGraph::from_code(self.n, self.canonical_code())
    }
}
