//! Partitions of `V(H)` into pattern-free classes.

mod catlin_lai;
mod exact;
mod lovasz;
mod theorem1;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extremal::max_free_size;
use crate::graph::{write_graph6, Graph, VertexSet};
use crate::patterns::{is_free, split_tokens, Pattern};

pub use catlin_lai::{catlin_lai_partition, ArboricityPartition, CatlinLaiOutcome};
pub use exact::{chi_free, exact_free_partition, MAX_EXACT_CLASSES, MAX_EXACT_ORDER};
pub use lovasz::{lovasz_partition, LovaszPartition};
pub use theorem1::{theorem1_partition, Theorem1Outcome};

/// The patterns `G_1, .., G_k` for the classes, with their minimum degrees `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSpecList {
    patterns: Vec<Pattern>,
    degrees: Vec<usize>,
}

impl PatternSpecList {
    pub fn new(patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidPattern(
                "spec list needs at least one pattern".into(),
            ));
        }
        let degrees = patterns.iter().map(Pattern::min_degree).collect();
        Ok(PatternSpecList { patterns, degrees })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// Comma-separated patterns, one per class; use `|` inside an entry for a family.
impl FromStr for PatternSpecList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let patterns = split_tokens(s, ',')
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<Pattern>>>()?;
        PatternSpecList::new(patterns)
    }
}

impl fmt::Display for PatternSpecList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for PatternSpecList {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.patterns)
    }
}

/// The inputs excluded by the partition theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExceptionCase {
    None,
    /// `k = 1` and `H` is itself a forbidden graph.
    SingleIso,
    /// Every pattern forbids `K_{d_i+1}` and `H ≅ K_{Δ+1}`.
    AllCompleteAndHComplete,
    /// Every pattern forbids `K_2` and `H` is an odd cycle.
    AllK2AndOddCycle,
}

impl fmt::Display for ExceptionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExceptionCase::None => "none",
            ExceptionCase::SingleIso => "single_iso",
            ExceptionCase::AllCompleteAndHComplete => "all_complete_and_h_complete",
            ExceptionCase::AllK2AndOddCycle => "all_k2_and_odd_cycle",
        })
    }
}

/// Which of the theorem's excluded cases `(H, specs)` falls in. Requires a connected `H`
/// with `Δ(H) = Σ d_i`.
pub fn exception_classify(h: &Graph, specs: &PatternSpecList) -> Result<ExceptionCase> {
    classify(h, specs.patterns())
}

pub(crate) fn classify(h: &Graph, patterns: &[Pattern]) -> Result<ExceptionCase> {
    if !h.is_connected() {
        return Err(Error::Precondition("host graph must be connected".into()));
    }
    let delta = h.max_degree();
    let sum: usize = patterns.iter().map(Pattern::min_degree).sum();
    if sum != delta {
        return Err(Error::Precondition(format!(
            "pattern minimum degrees sum to {sum}, but the maximum degree is {delta}"
        )));
    }
    if patterns.len() == 1 && patterns[0].forbids_graph(h) {
        return Ok(ExceptionCase::SingleIso);
    }
    if h.is_complete()
        && patterns
            .iter()
            .all(|p| p.forbids_complete(p.min_degree() + 1))
    {
        return Ok(ExceptionCase::AllCompleteAndHComplete);
    }
    if h.is_odd_cycle() && patterns.iter().all(|p| p.forbids_complete(2)) {
        return Ok(ExceptionCase::AllK2AndOddCycle);
    }
    Ok(ExceptionCase::None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodTag {
    /// Every class came from an extremal set, recursing into components.
    ExtremalRecursion,
    /// Some component was finished by exact search.
    ExactFallback,
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MethodTag::ExtremalRecursion => "extremal_recursion",
            MethodTag::ExactFallback => "exact_fallback",
        })
    }
}

/// Independent re-check of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateAudit {
    pub disjoint_cover: bool,
    pub class_free: Vec<bool>,
    pub max_class_size: usize,
    /// Maximum free-set size for the designated class's pattern, by branch and bound.
    pub oracle_max_size: usize,
}

impl CertificateAudit {
    pub fn passed(&self) -> bool {
        self.disjoint_cover
            && self.class_free.iter().all(|&b| b)
            && self.max_class_size == self.oracle_max_size
    }
}

/// Re-validate `classes` from scratch against `patterns`.
pub fn audit_partition(
    h: &Graph,
    patterns: &[Pattern],
    classes: &[VertexSet],
    designated: usize,
) -> Result<CertificateAudit> {
    if classes.len() != patterns.len() || designated >= classes.len() {
        return Err(Error::Precondition(
            "class and pattern counts differ".into(),
        ));
    }
    let mut union = VertexSet::EMPTY;
    let mut disjoint = true;
    for &c in classes {
        disjoint &= union.is_disjoint(c);
        union |= c;
    }
    Ok(CertificateAudit {
        disjoint_cover: disjoint && union == h.vertices(),
        class_free: classes
            .iter()
            .zip(patterns)
            .map(|(&c, p)| is_free(h, c, p))
            .collect(),
        max_class_size: classes[designated].len(),
        oracle_max_size: max_free_size(h, &patterns[designated])?.0,
    })
}

/// A partition `V_1, .., V_k` with `H[V_i]` free of `specs[i]` and one class of maximum size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCertificate {
    pub graph_g6: String,
    pub specs: PatternSpecList,
    pub classes: Vec<VertexSet>,
    pub designated_max_class: usize,
    pub method_tag: MethodTag,
    pub audit: CertificateAudit,
}

impl PartitionCertificate {
    pub(crate) fn build(
        h: &Graph,
        specs: &PatternSpecList,
        classes: Vec<VertexSet>,
        designated_max_class: usize,
        method_tag: MethodTag,
    ) -> Result<Self> {
        let audit = audit_partition(h, specs.patterns(), &classes, designated_max_class)?;
        Ok(PartitionCertificate {
            graph_g6: write_graph6(h)?,
            specs: specs.clone(),
            classes,
            designated_max_class,
            method_tag,
            audit,
        })
    }

    pub fn is_valid(&self) -> bool {
        self.audit.passed()
    }
}
