//! Edge and face contributions of triangular blocks, clusters, and
//! certification of linear edge bounds `m <= (alpha / beta) (n - 2)`.
//!
//! All arithmetic here is exact. A block `B` contributes `e_B = |E(B)|` and
//! `f_B = sum over faces f of |E(f) & E(B)| / |E(f)|`; summed over all blocks
//! these give exactly `m` and the number of faces. With
//! `g(e, f) = (beta - alpha) e + alpha f`, nonpositive `g` on every cluster
//! implies the bound via Euler's formula.

mod certificate;
mod cluster;
mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use certificate::{certify, certify_checked, Certificate, CertifyError, ClusterReport};
pub use cluster::{form_clusters, Cluster, ClusterDiagnostic, ClusterKind, Clustering};
pub use rational::Rational;

use crate::blocks::{Decomposition, TriangularBlock};
use crate::patterns::ThetaPattern;
use crate::plane_graph::PlaneGraph;

/// Target inequality `m <= (alpha / beta) (n - 2)` for graphs free of `pattern`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSpec {
    pub alpha: i64,
    pub beta: i64,
    pub pattern: ThetaPattern,
    pub name: String,
}

impl BoundSpec {
    /// 45/17 for graphs without the long-chord six-vertex theta.
    pub fn theta6_1() -> Self {
        Self {
            alpha: 45,
            beta: 17,
            pattern: ThetaPattern::theta6_1(),
            name: "theta6-1".into(),
        }
    }

    /// 18/7 for graphs without the short-chord six-vertex theta.
    pub fn theta6_2() -> Self {
        Self {
            alpha: 18,
            beta: 7,
            pattern: ThetaPattern::theta6_2(),
            name: "theta6-2".into(),
        }
    }

    pub fn all() -> [BoundSpec; 2] {
        [Self::theta6_1(), Self::theta6_2()]
    }

    /// Exact integer test of `beta * m <= alpha * (n - 2)`.
    pub fn bound_holds(&self, n: usize, m: usize) -> bool {
        self.beta * m as i64 <= self.alpha * (n as i64 - 2)
    }
}

impl FromStr for BoundSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "theta6-1" => Ok(Self::theta6_1()),
            "theta6-2" => Ok(Self::theta6_2()),
            _ => Err(format!(
                "unknown target `{s}` (expected theta6-1 or theta6-2)"
            )),
        }
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}/{})", self.name, self.alpha, self.beta)
    }
}

pub fn edge_contribution(block: &TriangularBlock) -> Rational {
    Rational::integer(block.edges.len() as i64)
}

pub fn face_contribution(pg: &PlaneGraph, block: &TriangularBlock) -> Rational {
    let mut shared: BTreeMap<usize, i64> = BTreeMap::new();
    for &e in &block.edges {
        let (f1, f2) = pg.edge_faces(e);
        *shared.entry(f1).or_default() += 1;
        if f2 != f1 {
            *shared.entry(f2).or_default() += 1;
        }
    }
    shared
        .into_iter()
        .map(|(f, k)| Rational::new(k, pg.faces()[f].length() as i64))
        .sum()
}

/// `f_B` for every block at once, indexed by block id.
pub fn face_contributions(pg: &PlaneGraph, d: &Decomposition) -> Vec<Rational> {
    let mut totals = vec![Rational::zero(); d.blocks.len()];
    for face in pg.faces() {
        let len = face.length() as i64;
        let mut per_block: BTreeMap<usize, i64> = BTreeMap::new();
        for &e in face.edge_set() {
            *per_block.entry(d.edge_to_block[e]).or_default() += 1;
        }
        for (b, k) in per_block {
            totals[b] += &Rational::new(k, len);
        }
    }
    totals
}

/// `g(e, f) = (beta - alpha) e + alpha f`.
pub fn g_eval(spec: &BoundSpec, e: &Rational, f: &Rational) -> Rational {
    e.scale(spec.beta - spec.alpha) + f.scale(spec.alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{catalog_plane_graph, decompose, BlockLabel};

    #[test]
    fn g_values() {
        let s1 = BoundSpec::theta6_1();
        let s2 = BoundSpec::theta6_2();
        assert_eq!(
            g_eval(&s1, &Rational::integer(9), &Rational::new(28, 5)),
            Rational::zero()
        );
        assert_eq!(
            g_eval(&s1, &Rational::integer(12), &Rational::integer(7)),
            Rational::integer(-21)
        );
        assert_eq!(
            g_eval(&s2, &Rational::integer(12), &Rational::integer(7)),
            Rational::integer(-6)
        );
    }

    #[test]
    fn hexagon_edge_contributions() {
        let c6 = PlaneGraph::new(6, (0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect())
            .unwrap();
        let d = decompose(&c6);
        for b in &d.blocks {
            assert_eq!(edge_contribution(b), Rational::integer(1));
            assert_eq!(face_contribution(&c6, b), Rational::new(1, 3));
        }
    }

    #[test]
    fn batch_matches_single_block() {
        for label in BlockLabel::CATALOG {
            let pg = catalog_plane_graph(label).unwrap();
            let d = decompose(&pg);
            let batch = face_contributions(&pg, &d);
            for b in &d.blocks {
                assert_eq!(batch[b.id], face_contribution(&pg, b));
            }
        }
    }

    #[test]
    fn parse_targets() {
        assert_eq!("theta6-1".parse::<BoundSpec>().unwrap().alpha, 45);
        assert_eq!("theta6-2".parse::<BoundSpec>().unwrap().beta, 7);
        assert!("theta5".parse::<BoundSpec>().is_err());
        assert!(BoundSpec::theta6_1().bound_holds(70, 180));
        assert!(!BoundSpec::theta6_1().bound_holds(70, 181));
    }
}
