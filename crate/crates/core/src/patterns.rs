//! Theta patterns and (non-induced) subgraph containment.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::plane_graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("theta pattern needs k >= 4 and 2 <= d <= k/2, got k = {k}, d = {d}")]
    OutOfRange { k: usize, d: usize },
    #[error("unknown pattern `{0}` (expected theta6-1, theta6-2, theta:<k>:<d> or theta-family:<k>)")]
    UnknownName(String),
}

/// A `k`-cycle plus one chord joining two cycle vertices at cycle distance `d`.
///
/// Cycle vertices are `0..k` in order and the chord is `0 - d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPattern {
    k: usize,
    d: usize,
    graph: Graph,
}

impl ThetaPattern {
    pub fn new(k: usize, d: usize) -> Result<Self, PatternError> {
        if k < 4 || d < 2 || d > k / 2 {
            return Err(PatternError::OutOfRange { k, d });
        }
        let edges = (0..k).map(|i| (i, (i + 1) % k)).chain([(0, d)]);
        let graph = Graph::new(k, edges).expect("theta pattern is simple");
        Ok(Self { k, d, graph })
    }

    /// The long-chord member of the six-vertex family.
    pub fn theta6_1() -> Self {
        Self::new(6, 3).expect("valid parameters")
    }

    /// The short-chord member of the six-vertex family.
    pub fn theta6_2() -> Self {
        Self::new(6, 2).expect("valid parameters")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chord_distance(&self) -> usize {
        self.d
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn name(&self) -> String {
        match (self.k, self.d) {
            (6, 3) => "theta6-1".into(),
            (6, 2) => "theta6-2".into(),
            (k, d) => format!("theta:{k}:{d}"),
        }
    }
}

pub fn theta_pattern(k: usize, d: usize) -> Result<ThetaPattern, PatternError> {
    ThetaPattern::new(k, d)
}

/// All members of the `k`-vertex theta family, one per chord distance.
pub fn theta_family(k: usize) -> Result<Vec<ThetaPattern>, PatternError> {
    if k < 4 {
        return Err(PatternError::OutOfRange { k, d: 2 });
    }
    (2..=k / 2).map(|d| ThetaPattern::new(k, d)).collect()
}

/// A named set of forbidden patterns; a host is free of the set when it
/// contains none of the members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    name: String,
    members: Vec<ThetaPattern>,
}

impl PatternSet {
    pub fn single(pattern: ThetaPattern) -> Self {
        Self {
            name: pattern.name(),
            members: vec![pattern],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[ThetaPattern] {
        &self.members
    }

    pub fn find_in(&self, host: &Graph) -> Option<(usize, EmbeddingWitness)> {
        self.members
            .iter()
            .enumerate()
            .find_map(|(i, p)| contains_subgraph(host, p.graph()).map(|w| (i, w)))
    }

    pub fn is_free(&self, host: &Graph) -> bool {
        self.find_in(host).is_none()
    }

    /// Freeness of `host`, assuming `host` minus the edge `u-v` is free.
    pub fn is_free_with_new_edge(&self, host: &Graph, u: usize, v: usize) -> bool {
        self.members
            .iter()
            .all(|p| contains_subgraph_using_edge(host, p.graph(), u, v).is_none())
    }
}

impl FromStr for PatternSet {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || PatternError::UnknownName(s.to_string());
        match s {
            "theta6-1" => return Ok(Self::single(ThetaPattern::theta6_1())),
            "theta6-2" => return Ok(Self::single(ThetaPattern::theta6_2())),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("theta-family:") {
            let k: usize = rest.parse().map_err(|_| unknown())?;
            return Ok(Self {
                name: s.to_string(),
                members: theta_family(k)?,
            });
        }
        if let Some(rest) = s.strip_prefix("theta:") {
            let (k, d) = rest.split_once(':').ok_or_else(unknown)?;
            let k: usize = k.parse().map_err(|_| unknown())?;
            let d: usize = d.parse().map_err(|_| unknown())?;
            return Ok(Self::single(ThetaPattern::new(k, d)?));
        }
        Err(unknown())
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Injective vertex map from a pattern into a host that sends every pattern
/// edge to a host edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub mapping: Vec<usize>,
}

impl EmbeddingWitness {
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let map = &self.mapping;
        if map.len() != pattern.vertex_count() || map.iter().any(|&h| h >= host.vertex_count()) {
            return false;
        }
        let mut used = map.clone();
        used.sort_unstable();
        used.dedup();
        used.len() == map.len()
            && pattern
                .edges()
                .iter()
                .all(|&(a, b)| host.has_edge(map[a], map[b]))
    }
}

pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<EmbeddingWitness> {
    Matcher::new(host, pattern).run(&[])
}

pub fn is_free(host: &Graph, pattern: &Graph) -> bool {
    contains_subgraph(host, pattern).is_none()
}

/// Search only for copies of `pattern` that use the host edge `u-v`.
pub fn contains_subgraph_using_edge(
    host: &Graph,
    pattern: &Graph,
    u: usize,
    v: usize,
) -> Option<EmbeddingWitness> {
    if !host.has_edge(u, v) {
        return None;
    }
    let matcher = Matcher::new(host, pattern);
    pattern.edges().iter().find_map(|&(a, b)| {
        matcher
            .run(&[(a, u), (b, v)])
            .or_else(|| matcher.run(&[(a, v), (b, u)]))
    })
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        Self { host, pattern }
    }

    /// Pattern vertices in placement order: seeds first, then greedily the
    /// vertex with most already-placed neighbors (ties by degree, then id).
    fn order(&self, seeds: &[(usize, usize)]) -> Vec<usize> {
        let k = self.pattern.vertex_count();
        let mut placed = vec![false; k];
        let mut order = Vec::with_capacity(k);
        for &(p, _) in seeds {
            placed[p] = true;
            order.push(p);
        }
        while order.len() < k {
            let next = (0..k)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| {
                    let links = self
                        .pattern
                        .neighbors(p)
                        .iter()
                        .filter(|&&q| placed[q])
                        .count();
                    (links, self.pattern.degree(p), std::cmp::Reverse(p))
                })
                .expect("unplaced vertex exists");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    fn run(&self, seeds: &[(usize, usize)]) -> Option<EmbeddingWitness> {
        let k = self.pattern.vertex_count();
        if k > self.host.vertex_count() || self.pattern.edge_count() > self.host.edge_count() {
            return None;
        }
        let mut map = vec![usize::MAX; k];
        let mut used = vec![false; self.host.vertex_count()];
        for &(p, h) in seeds {
            if used[h] || self.host.degree(h) < self.pattern.degree(p) {
                return None;
            }
            map[p] = h;
            used[h] = true;
        }
        for &(p, _) in seeds {
            for &q in self.pattern.neighbors(p) {
                if map[q] != usize::MAX && !self.host.has_edge(map[p], map[q]) {
                    return None;
                }
            }
        }
        let order = self.order(seeds);
        if self.extend(&order, seeds.len(), &mut map, &mut used) {
            Some(EmbeddingWitness { mapping: map })
        } else {
            None
        }
    }

    fn extend(&self, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        let need = self.pattern.degree(p);
        let anchors: Vec<usize> = self
            .pattern
            .neighbors(p)
            .iter()
            .filter(|&&q| map[q] != usize::MAX)
            .map(|&q| map[q])
            .collect();
        let candidates: Vec<usize> = match anchors.first() {
            Some(&a) => self.host.neighbors(a).to_vec(),
            None => (0..self.host.vertex_count()).collect(),
        };
        for h in candidates {
            if used[h] || self.host.degree(h) < need {
                continue;
            }
            if !anchors.iter().all(|&a| self.host.has_edge(a, h)) {
                continue;
            }
            map[p] = h;
            used[h] = true;
            if self.extend(order, depth + 1, map, used) {
                return true;
            }
            used[h] = false;
            map[p] = usize::MAX;
        }
        false
    }
}
