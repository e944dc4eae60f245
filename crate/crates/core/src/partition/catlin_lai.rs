//! Vertex arboricity partitions: `⌈Δ/2⌉` classes each inducing a forest.

use serde::Serialize;

use super::{
    exact_free_partition, theorem1_partition, ExceptionCase, PartitionCertificate, PatternSpecList,
    Theorem1Outcome,
};
use crate::error::{Error, Result};
use crate::extremal::enumerate_max_free_sets;
use crate::graph::{Graph, VertexSet};
use crate::patterns::Pattern;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArboricityPartition {
    pub certificate: PartitionCertificate,
    /// Odd `Δ` only: some colouring has an independent class and a maximum acyclic class.
    pub option_a: Option<bool>,
    /// Odd `Δ` only: some colouring has a maximum independent class.
    pub option_b: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CatlinLaiOutcome {
    Partition(ArboricityPartition),
    Exception(ExceptionCase),
}

/// Acyclic classes from the partition theorem with `mindeg>=2` specs, plus a `K2` spec when
/// `Δ` is odd. For odd `Δ` both refinements are decided by exact search.
pub fn catlin_lai_partition(h: &Graph) -> Result<CatlinLaiOutcome> {
    let delta = h.max_degree();
    if delta == 0 {
        return Err(Error::Precondition("host graph needs an edge".into()));
    }
    let acyclic = Pattern::min_degree_family(2)?;
    let edge = Pattern::complete(2)?;
    let mut patterns = vec![acyclic.clone(); delta / 2];
    if delta % 2 == 1 {
        patterns.push(edge.clone());
    }
    let specs = PatternSpecList::new(patterns)?;
    let certificate = match theorem1_partition(h, &specs)? {
        Theorem1Outcome::Exception(e) => return Ok(CatlinLaiOutcome::Exception(e)),
        Theorem1Outcome::Certificate(c) => c,
    };
    let (option_a, option_b) = if delta % 2 == 1 {
        let k = specs.len();
        (
            Some(option_a(h, k, &acyclic, &edge)?),
            Some(option_b(h, k, &acyclic, &edge)?),
        )
    } else {
        (None, None)
    };
    Ok(CatlinLaiOutcome::Partition(ArboricityPartition {
        certificate,
        option_a,
        option_b,
    }))
}

/// Does the rest of `H` split into `k - 1` classes free of `patterns`?
fn rest_splits(h: &Graph, s: VertexSet, patterns: Vec<Pattern>) -> Result<bool> {
    let (rest, _) = h.induced(h.vertices() - s);
    let k = patterns.len();
    Ok(exact_free_partition(&rest, &patterns, k)?.is_some())
}

fn option_a(h: &Graph, k: usize, acyclic: &Pattern, edge: &Pattern) -> Result<bool> {
    for s in enumerate_max_free_sets(h, acyclic)? {
        let mut rest = vec![acyclic.clone(); k - 1];
        if !h.is_independent(s) {
            // one of the remaining classes must be independent
            rest[k - 2] = edge.clone();
        }
        if rest_splits(h, s, rest)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn option_b(h: &Graph, k: usize, acyclic: &Pattern, edge: &Pattern) -> Result<bool> {
    for s in enumerate_max_free_sets(h, edge)? {
        if rest_splits(h, s, vec![acyclic.clone(); k - 1])? {
            return Ok(true);
        }
    }
    Ok(false)
}
