use serde::Serialize;
use thiserror::Error;

use super::{form_clusters, BoundSpec, ClusterDiagnostic, ClusterKind, Rational};
use crate::blocks::{decompose, BlockLabel};
use crate::patterns;
use crate::plane_graph::PlaneGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("certification needs at least 6 vertices, got {n}")]
    TooSmall { n: usize },
    #[error("contribution identity failed: {0}")]
    Identity(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterReport {
    pub id: usize,
    pub kind: ClusterKind,
    pub blocks: Vec<usize>,
    pub labels: Vec<BlockLabel>,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub target: String,
    pub alpha: i64,
    pub beta: i64,
    pub n: usize,
    pub m: usize,
    pub faces: usize,
    /// Whether pattern freeness was tested; `pattern_free` is `None` if not.
    pub freeness_checked: bool,
    pub pattern_free: Option<bool>,
    pub clusters: Vec<ClusterReport>,
    pub identities_ok: bool,
    pub all_nonpositive: bool,
    pub bound_holds: bool,
    /// Ids of clusters with `g > 0`.
    pub violations: Vec<usize>,
    pub diagnostics: Vec<ClusterDiagnostic>,
}

impl Certificate {
    pub fn total_g(&self) -> Rational {
        self.clusters.iter().map(|c| &c.g).sum()
    }

    pub fn all_zero(&self) -> bool {
        self.clusters.iter().all(|c| c.g.is_zero())
    }
}

/// Decompose, cluster and evaluate `g` on every cluster. Freeness is not
/// checked; see [`certify_checked`].
pub fn certify(pg: &PlaneGraph, spec: &BoundSpec) -> Result<Certificate, CertifyError> {
    let n = pg.vertex_count();
    if n < 6 {
        return Err(CertifyError::TooSmall { n });
    }
    let m = pg.edge_count();
    let d = decompose(pg);
    let clustering = form_clusters(pg, &d, spec);

    let e_total: Rational = clustering.clusters.iter().map(|c| &c.e).sum();
    let f_total: Rational = clustering.clusters.iter().map(|c| &c.f).sum();
    if e_total != Rational::integer(m as i64) {
        return Err(CertifyError::Identity(format!(
            "edge contributions sum to {e_total}, expected {m}"
        )));
    }
    if f_total != Rational::integer(pg.face_count() as i64) {
        return Err(CertifyError::Identity(format!(
            "face contributions sum to {f_total}, expected {}",
            pg.face_count()
        )));
    }
    // sum of g = beta m - alpha (n - 2) by Euler's formula
    let g_total: Rational = clustering.clusters.iter().map(|c| &c.g).sum();
    let expected = Rational::integer(spec.beta * m as i64 - spec.alpha * (n as i64 - 2));
    if g_total != expected {
        return Err(CertifyError::Identity(format!(
            "g values sum to {g_total}, expected {expected}"
        )));
    }

    let violations: Vec<usize> = clustering
        .clusters
        .iter()
        .filter(|c| c.g.is_positive())
        .map(|c| c.id)
        .collect();
    let all_nonpositive = violations.is_empty();
    let bound_holds = spec.bound_holds(n, m);
    if all_nonpositive && !bound_holds {
        return Err(CertifyError::Identity(
            "all clusters nonpositive but the bound fails".into(),
        ));
    }

    let clusters = clustering
        .clusters
        .into_iter()
        .map(|c| ClusterReport {
            id: c.id,
            kind: c.kind,
            labels: c.block_ids.iter().map(|&b| d.blocks[b].label).collect(),
            blocks: c.block_ids,
            e: c.e,
            f: c.f,
            g: c.g,
        })
        .collect();

    Ok(Certificate {
        target: spec.name.clone(),
        alpha: spec.alpha,
        beta: spec.beta,
        n,
        m,
        faces: pg.face_count(),
        freeness_checked: false,
        pattern_free: None,
        clusters,
        identities_ok: true,
        all_nonpositive,
        bound_holds,
        violations,
        diagnostics: clustering.diagnostics,
    })
}

/// [`certify`] plus a freeness test against the target's pattern.
pub fn certify_checked(pg: &PlaneGraph, spec: &BoundSpec) -> Result<Certificate, CertifyError> {
    let mut cert = certify(pg, spec)?;
    cert.freeness_checked = true;
    cert.pattern_free = Some(patterns::is_free(pg.graph(), spec.pattern.graph()));
    Ok(cert)
}
