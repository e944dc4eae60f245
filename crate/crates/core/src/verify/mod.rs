//! Exhaustive checks of the partition theorems over every small connected graph.

mod catalog;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{cap, Error, Result};
use crate::graph::{enumerate_connected_graphs, write_graph6, Graph, MAX_ENUMERATE};
use crate::partition::ExceptionCase;

pub use catalog::{compositions, Catalog};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Theorem1,
    Lemma1,
    Bounds,
    Lovasz,
    CatlinBrooks,
    Degenerate,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Theorem1,
        Suite::Lemma1,
        Suite::Bounds,
        Suite::Lovasz,
        Suite::CatlinBrooks,
        Suite::Degenerate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Lemma1 => "lemma1",
            Suite::Bounds => "bounds",
            Suite::Lovasz => "lovasz",
            Suite::CatlinBrooks => "catlin_brooks",
            Suite::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == key)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub k_max: usize,
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    pub catalog: Catalog,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 7,
            k_max: 3,
            workers: 0,
            catalog: Catalog::default(),
        }
    }
}

/// An instance the theorem excludes, with the case it falls in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionRecord {
    pub graph_g6: String,
    pub spec: String,
    pub case: ExceptionCase,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph_g6: String,
    pub spec: String,
    pub stage: String,
    pub witness: String,
    /// A command line that reruns the instance.
    pub replay: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub n_max: usize,
    pub k_max: usize,
    pub graphs: usize,
    pub instances: usize,
    pub tallies: BTreeMap<String, usize>,
    pub exceptions: Vec<ExceptionRecord>,
    pub failures: Vec<Failure>,
    pub passed: bool,
    /// Left out of the JSON so that reports compare byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

/// What one graph (or one fixed instance) contributes to a report.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    instances: usize,
    tallies: BTreeMap<String, usize>,
    exceptions: Vec<ExceptionRecord>,
    failures: Vec<Failure>,
}

impl Outcome {
    fn tally(&mut self, key: impl Into<String>) {
        self.add(key, 1);
    }

    fn add(&mut self, key: impl Into<String>, by: usize) {
        *self.tallies.entry(key.into()).or_default() += by;
    }

    fn fail(
        &mut self,
        h: &Graph,
        spec: impl Into<String>,
        stage: &str,
        witness: impl Into<String>,
        replay: String,
    ) {
        self.failures.push(Failure {
            graph_g6: g6(h),
            spec: spec.into(),
            stage: stage.into(),
            witness: witness.into(),
            replay,
        });
    }

    fn merge(&mut self, other: Outcome) {
        self.instances += other.instances;
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        self.exceptions.extend(other.exceptions);
        self.failures.extend(other.failures);
    }
}

fn g6(h: &Graph) -> String {
    // corpus graphs are far below the graph6 size limit
    write_graph6(h).unwrap_or_default()
}

/// Connected graphs on `1..=n_max` vertices, by order and then canonical label.
pub fn corpus(n_max: usize) -> Result<Vec<Graph>> {
    cap("corpus order", n_max, MAX_ENUMERATE)?;
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.extend(enumerate_connected_graphs(n)?);
    }
    Ok(all)
}

/// Run `suite` over [`corpus`]`(n_max)`. Per-graph work is spread over a thread pool and
/// merged in corpus order, so the report does not depend on the worker count.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerifyReport> {
    let graphs = corpus(config.n_max)?;
    run_suite_on(suite, config, &graphs)
}

/// Like [`run_suite`] on a caller-supplied corpus.
pub fn run_suite_on(suite: Suite, config: &VerifyConfig, graphs: &[Graph]) -> Result<VerifyReport> {
    cap(
        "classes per spec list",
        config.k_max,
        crate::partition::MAX_EXACT_CLASSES,
    )?;
    let start = Instant::now();
    let ctx = suites::Context::new(config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;

    let mut total = suites::fixed(suite);
    let per_graph: Vec<Outcome> = pool.install(|| {
        graphs
            .par_iter()
            .map(|h| suites::check(suite, &ctx, h))
            .collect()
    });
    for o in per_graph {
        total.merge(o);
    }
    Ok(VerifyReport {
        suite,
        n_max: config.n_max,
        k_max: config.k_max,
        graphs: graphs.len(),
        instances: total.instances,
        tallies: total.tallies,
        exceptions: total.exceptions,
        passed: total.failures.is_empty(),
        failures: total.failures,
        wall_time: start.elapsed(),
    })
}

pub fn verify_theorem1(config: &VerifyConfig) -> Result<VerifyReport> {
    run_suite(Suite::Theorem1, config)
}

pub fn verify_lemma1(config: &VerifyConfig) -> Result<VerifyReport> {
    run_suite(Suite::Lemma1, config)
}

pub fn verify_bounds(config: &VerifyConfig) -> Result<VerifyReport> {
    run_suite(Suite::Bounds, config)
}

pub fn verify_lovasz(config: &VerifyConfig) -> Result<VerifyReport> {
    run_suite(Suite::Lovasz, config)
}

pub fn verify_catlin_brooks(config: &VerifyConfig) -> Result<VerifyReport> {
    run_suite(Suite::CatlinBrooks, config)
}

pub fn verify_degenerate(config: &VerifyConfig) -> Result<VerifyReport> {
    run_suite(Suite::Degenerate, config)
}
