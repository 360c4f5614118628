//! Exhaustive computation of planar Turan numbers `ex_P(n, H)` for small `n`.
//!
//! The search runs level by level over edge counts. Level `m` holds one
//! representative of every isomorphism class of planar, pattern-free graphs
//! on `n` vertices with `m` edges; level `m + 1` is obtained by adding each
//! missing edge to each representative and keeping the survivors up to
//! isomorphism. Both properties are closed under edge deletion, so every
//! class is reached. The answer is the last nonempty level.

mod canon;
mod planarity;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use canon::{SmallGraph, MAX_VERTICES};
pub use planarity::{biconnected_components, embed, is_planar};

use crate::patterns::PatternSet;
use crate::plane_graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} is above the cap of {cap}; pass --force to run anyway")]
    CapExceeded { n: usize, cap: usize },
    #[error("n = {n} is outside the supported range 1..={MAX_VERTICES}")]
    OutOfRange { n: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub cap: usize,
    pub force: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub witness_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            cap: 8,
            force: false,
            jobs: None,
            witness_limit: 100,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    pub n: usize,
    pub pattern: String,
    pub max_edges: usize,
    /// Extremal graphs up to isomorphism, in canonical labeling, sorted by
    /// canonical code and truncated to the witness limit.
    pub witnesses: Vec<Graph>,
    pub witness_classes: usize,
    /// Number of isomorphism classes of planar pattern-free graphs at each
    /// edge count `0..=max_edges`.
    pub classes_per_level: Vec<usize>,
    /// Candidate graphs tested (one per representative and missing edge).
    pub explored: u64,
    /// Witnesses re-checked for planarity and freeness from scratch.
    pub audit_ok: bool,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

pub fn max_edges(
    n: usize,
    patterns: &PatternSet,
    config: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(OracleError::OutOfRange { n });
    }
    if n > config.cap && !config.force {
        return Err(OracleError::CapExceeded { n, cap: config.cap });
    }
    match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| OracleError::ThreadPool(e.to_string()))?
            .install(|| Ok(search(n, patterns, config))),
        None => Ok(search(n, patterns, config)),
    }
}

fn search(n: usize, patterns: &PatternSet, config: &OracleConfig) -> OracleResult {
    let start = Instant::now();
    let budget = if n >= 3 { 3 * n - 6 } else { n * (n - 1) / 2 };
    let mut level: Vec<u128> = vec![0];
    let mut classes_per_level = vec![1];
    let mut explored = 0u64;

    while level[0].count_ones() < budget as u32 {
        let (tested, mut next) = level
            .par_iter()
            .map(|&code| children(n, code, patterns))
            .reduce(
                || (0u64, Vec::new()),
                |(t1, mut v1), (t2, v2)| {
                    v1.extend(v2);
                    (t1 + t2, v1)
                },
            );
        explored += tested;
        next.par_sort_unstable();
        next.dedup();
        if next.is_empty() {
            break;
        }
        classes_per_level.push(next.len());
        level = next;
    }

    let max_edges = level[0].count_ones() as usize;
    let witnesses: Vec<Graph> = level
        .iter()
        .take(config.witness_limit)
        .map(|&c| SmallGraph::from_code(n, c).to_graph())
        .collect();
    let audit_ok = witnesses.par_iter().all(|g| {
        g.vertex_count() == n && g.edge_count() == max_edges && is_planar(g) && patterns.is_free(g)
    });
    OracleResult {
        n,
        pattern: patterns.name().to_string(),
        max_edges,
        witnesses,
        witness_classes: level.len(),
        classes_per_level,
        explored,
        audit_ok,
        elapsed: start.elapsed(),
    }
}

/// Canonical codes of the one-edge extensions of `code` that stay planar and
/// pattern-free, plus the number of candidates tested.
fn children(n: usize, code: u128, patterns: &PatternSet) -> (u64, Vec<u128>) {
    let g = SmallGraph::from_code(n, code);
    let mut out = Vec::new();
    let mut tested = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                continue;
            }
            tested += 1;
            let h = g.with_edge(u, v);
            let graph = h.to_graph();
            if patterns.is_free_with_new_edge(&graph, u, v) && is_planar(&graph) {
                out.push(h.canonical_code());
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    (tested, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(name: &str) -> PatternSet {
        name.parse().unwrap()
    }

    #[test]
    fn five_vertices_is_maximal_planar() {
        let r = max_edges(5, &set("theta6-1"), &OracleConfig::default()).unwrap();
        assert_eq!(r.max_edges, 9);
        assert!(r.audit_ok);
        // K5 minus an edge is the only maximal planar graph on 5 vertices
        assert_eq!(r.witness_classes, 1);
    }

    #[test]
    fn small_levels_count_all_planar_graphs() {
        // graphs on 4 vertices: 11 classes, all planar, theta6 needs 6 vertices
        let r = max_edges(4, &set("theta6-1"), &OracleConfig::default()).unwrap();
        assert_eq!(r.max_edges, 6);
        assert_eq!(r.classes_per_level.iter().sum::<usize>(), 11);
    }

    #[test]
    fn cap_enforced() {
        let cfg = OracleConfig::default();
        assert_eq!(
            max_edges(9, &set("theta6-1"), &cfg).unwrap_err(),
            OracleError::CapExceeded { n: 9, cap: 8 }
        );
        assert_eq!(
            max_edges(17, &set("theta6-1"), &OracleConfig { force: true, ..cfg }).unwrap_err(),
            OracleError::OutOfRange { n: 17 }
        );
    }

    #[test]
    fn job_count_does_not_change_result() {
        let a = max_edges(6, &set("theta6-2"), &OracleConfig { jobs: Some(1), ..Default::default() }).unwrap();
        let b = max_edges(6, &set("theta6-2"), &OracleConfig { jobs: Some(4), ..Default::default() }).unwrap();
        assert_eq!(a.max_edges, b.max_edges);
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.classes_per_level, b.classes_per_level);
        assert_eq!(a.explored, b.explored);
    }
}
