//! Straight-line drawings of the two pentagon-skeleton gadgets.
//!
//! Points are written the way the drawings were authored: `(r, t)` stands for
//! `(r sin t, r cos t)` with `t` in degrees, and a negative `r` reflects
//! through the origin. Edges are given by endpoint positions and resolved to
//! vertex ids by nearest match.

pub(super) struct Drawing {
    pub coords: Vec<(f64, f64)>,
    pub edges: Vec<(usize, usize)>,
}

fn polar(r: f64, deg: f64) -> (f64, f64) {
    let t = deg.to_radians();
    (r * t.sin(), r * t.cos())
}

struct Builder {
    coords: Vec<(f64, f64)>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Self {
            coords: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Adds `count` points `(r, step * i + offset)`; returns the first id.
    fn ring(&mut self, r: f64, count: usize, step: f64, offset: f64) -> usize {
        let first = self.coords.len();
        for i in 0..count {
            self.coords.push(polar(r, step * i as f64 + offset));
        }
        first
    }

    fn find(&self, p: (f64, f64)) -> usize {
        self.coords
            .iter()
            .position(|&(x, y)| (x - p.0).hypot(y - p.1) < 1e-6)
            .unwrap_or_else(|| panic!("no vertex at ({:.3}, {:.3})", p.0, p.1))
    }

    /// Edges `(r1, t1(a)) -- (r2, t2(a))` for `a` in `0..count`.
    fn edges(&mut self, count: usize, r1: f64, t1: impl Fn(f64) -> f64, r2: f64, t2: impl Fn(f64) -> f64) {
        for a in 0..count {
            let a = a as f64;
            let u = self.find(polar(r1, t1(a)));
            let v = self.find(polar(r2, t2(a)));
            self.edges.push((u, v));
        }
    }

    fn finish(self) -> Drawing {
        Drawing {
            coords: self.coords,
            edges: self.edges,
        }
    }
}

/// Ids of the ring starting at `first`, in drawing order.
pub(super) fn ring_ids(first: usize, len: usize) -> Vec<usize> {
    (first..first + len).collect()
}

/// Gadget (a): inner (blue) pentagon at radius 0.5, outer (red) pentagon at
/// radius 3. Vertex blocks: P 0..5, Q 5..10, R 10..20, S 20..25, T 25..30.
pub(super) fn gadget_a() -> (Drawing, Vec<usize>, Vec<usize>) {
    let mut b = Builder::new();
    let p = b.ring(0.5, 5, 72.0, 0.0);
    b.ring(-1.0, 5, 72.0, 0.0);
    b.ring(1.5, 10, 36.0, 90.0);
    b.ring(2.0, 5, 72.0, 0.0);
    let t = b.ring(-3.0, 5, 72.0, 0.0);

    b.edges(5, 0.5, |a| 72.0 * a, 0.5, |a| 72.0 * a + 72.0);
    b.edges(5, 0.5, |a| 72.0 * a, -1.0, |a| 72.0 * a + 144.0);
    b.edges(5, 0.5, |a| 72.0 * a, -1.0, |a| 72.0 * a - 144.0);
    b.edges(10, 1.5, |a| 36.0 * a + 90.0, 1.5, |a| 36.0 * a + 126.0);
    b.edges(5, 1.5, |a| 72.0 * a + 90.0, -1.0, |a| 72.0 * a - 72.0);
    b.edges(5, 1.5, |a| 72.0 * a + 126.0, -1.0, |a| 72.0 * a - 72.0);
    b.edges(5, 1.5, |a| 72.0 * a + 90.0, 2.0, |a| 72.0 * a + 72.0);
    b.edges(5, 1.5, |a| 72.0 * a + 54.0, 2.0, |a| 72.0 * a + 72.0);
    b.edges(5, -3.0, |a| 72.0 * a, -3.0, |a| 72.0 * a + 72.0);
    b.edges(5, -3.0, |a| 72.0 * a, 2.0, |a| 72.0 * a + 144.0);
    b.edges(5, -3.0, |a| 72.0 * a, 2.0, |a| 72.0 * a - 144.0);

    (b.finish(), ring_ids(t, 5), ring_ids(p, 5))
}

/// Gadget (b): inner (red) pentagon at radius 0.5, outer (blue) pentagon at
/// radius 3. Vertex blocks: U 0..5, V 5..15, W 15..20, X 20..30, Y 30..45,
/// Z 45..50.
pub(super) fn gadget_b() -> (Drawing, Vec<usize>, Vec<usize>) {
    let mut b = Builder::new();
    let u = b.ring(-0.5, 5, 72.0, 0.0);
    b.ring(0.8, 10, 36.0, 90.0);
    b.ring(1.2, 5, 72.0, 0.0);
    b.ring(1.6, 10, 36.0, 90.0);
    b.ring(-2.2, 15, 24.0, 0.0);
    let z = b.ring(3.0, 5, 72.0, 0.0);

    b.edges(5, -0.5, |a| 72.0 * a, -0.5, |a| 72.0 * a + 72.0);
    b.edges(5, 0.8, |a| 72.0 * a + 90.0, 0.8, |a| 72.0 * a + 126.0);
    b.edges(5, 0.8, |a| 72.0 * a + 90.0, -0.5, |a| 72.0 * a - 72.0);
    b.edges(5, 0.8, |a| 72.0 * a + 126.0, -0.5, |a| 72.0 * a - 72.0);
    b.edges(5, 1.2, |a| 72.0 * a + 72.0, 0.8, |a| 72.0 * a + 90.0);
    b.edges(5, 1.2, |a| 72.0 * a + 72.0, 0.8, |a| 72.0 * a + 54.0);
    b.edges(10, 0.8, |a| 36.0 * a + 90.0, 1.6, |a| 36.0 * a + 90.0);
    b.edges(5, 1.2, |a| 72.0 * a + 72.0, 1.6, |a| 72.0 * a + 90.0);
    b.edges(5, 1.2, |a| 72.0 * a + 72.0, 1.6, |a| 72.0 * a + 54.0);
    b.edges(5, -2.2, |a| 72.0 * a - 120.0, 1.6, |a| 72.0 * a + 54.0);
    b.edges(5, -2.2, |a| 72.0 * a - 96.0, 1.6, |a| 72.0 * a + 90.0);
    b.edges(5, -2.2, |a| 72.0 * a - 72.0, 1.6, |a| 72.0 * a + 90.0);
    b.edges(5, -2.2, |a| 72.0 * a - 72.0, 1.6, |a| 72.0 * a + 126.0);
    b.edges(15, -2.2, |a| 24.0 * a, -2.2, |a| 24.0 * a + 24.0);
    b.edges(5, -2.2, |a| 72.0 * a + 168.0, 3.0, |a| 72.0 * a);
    b.edges(5, -2.2, |a| 72.0 * a - 168.0, 3.0, |a| 72.0 * a);
    b.edges(5, 3.0, |a| 72.0 * a, 3.0, |a| 72.0 * a + 72.0);

    (b.finish(), ring_ids(u, 5), ring_ids(z, 5))
}
