//! Constructive partition theorem: peel off an extremal set for the first pattern, then
//! recurse into each component of what remains with the other patterns.

use serde::Serialize;

use super::{
    classify, exact_free_partition, ExceptionCase, MethodTag, PartitionCertificate, PatternSpecList,
};
use crate::error::{Error, Result};
use crate::extremal::extremal_set;
use crate::graph::{Graph, VertexSet};
use crate::patterns::Pattern;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem1Outcome {
    Certificate(PartitionCertificate),
    Exception(ExceptionCase),
}

impl Theorem1Outcome {
    pub fn certificate(&self) -> Option<&PartitionCertificate> {
        match self {
            Theorem1Outcome::Certificate(c) => Some(c),
            Theorem1Outcome::Exception(_) => None,
        }
    }
}

/// Partition a connected `H` with `Δ(H) = Σ d_i` into classes free of `specs[i]`, class 0
/// being a maximum free set for `specs[0]`; or report the excluded case `H` falls in.
pub fn theorem1_partition(h: &Graph, specs: &PatternSpecList) -> Result<Theorem1Outcome> {
    let case = classify(h, specs.patterns())?;
    if case != ExceptionCase::None {
        return Ok(Theorem1Outcome::Exception(case));
    }
    let mut fallback = false;
    let classes = split(h, specs.patterns(), &mut fallback)?;
    let method = if fallback {
        MethodTag::ExactFallback
    } else {
        MethodTag::ExtremalRecursion
    };
    let cert = PartitionCertificate::build(h, specs, classes, 0, method)?;
    if !cert.is_valid() {
        return Err(Error::TheoremViolation(format!(
            "certificate for {} with {} failed re-validation: {:?}",
            cert.graph_g6, cert.specs, cert.audit
        )));
    }
    Ok(Theorem1Outcome::Certificate(cert))
}

/// `h` is connected, `Δ(h) = Σ d_i` and `(h, patterns)` is not exceptional.
fn split(h: &Graph, patterns: &[Pattern], fallback: &mut bool) -> Result<Vec<VertexSet>> {
    let k = patterns.len();
    if k == 1 {
        // A copy of G_1 would have all degrees equal to Δ(h) and so be all of h.
        return Ok(vec![h.vertices()]);
    }
    let first = extremal_set(h, &patterns[0])?.set;
    let rest = &patterns[1..];
    let rest_sum: usize = rest.iter().map(Pattern::min_degree).sum();

    let mut classes = vec![VertexSet::EMPTY; k];
    classes[0] = first;
    for comp in h.components(h.vertices() - first) {
        let (sub, map) = h.induced(comp);
        let recurse = sub.max_degree() == rest_sum && classify(&sub, rest)? == ExceptionCase::None;
        let sub_classes = if recurse {
            split(&sub, rest, fallback)?
        } else {
            *fallback = true;
            exact_free_partition(&sub, rest, rest.len())?.ok_or_else(|| {
                Error::TheoremViolation(format!(
                    "no partition of a component of maximum degree {} into {rest:?}",
                    sub.max_degree()
                ))
            })?
        };
        for (i, c) in sub_classes.into_iter().enumerate() {
            for v in c {
                classes[i + 1].insert(map[v]);
            }
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    fn named(n: NamedGraph) -> Graph {
        make_named(&n).unwrap()
    }

    fn cert(h: &Graph, s: &str) -> PartitionCertificate {
        match theorem1_partition(h, &s.parse().unwrap()).unwrap() {
            Theorem1Outcome::Certificate(c) => c,
            Theorem1Outcome::Exception(e) => panic!("unexpected exception {e}"),
        }
    }

    #[test]
    fn petersen_three_colouring() {
        let pet = named(NamedGraph::Petersen);
        let c = cert(&pet, "K2,K2,K2");
        assert_eq!(c.classes.len(), 3);
        assert_eq!(c.classes[0].len(), 4);
        assert!(c.classes.iter().all(|&s| pet.is_independent(s)));
        assert!(c.is_valid());
    }

    #[test]
    fn k333_triangle_free_classes() {
        let k333 = named(NamedGraph::CompleteMultipartite(vec![3, 3, 3]));
        let c = cert(&k333, "K3,K3,K3");
        assert_eq!(c.classes[0].len(), 6);
        assert!(c.is_valid());
    }

    #[test]
    fn even_cycle_bipartition() {
        let c8 = named(NamedGraph::Cycle(8));
        let c = cert(&c8, "K2,K2");
        assert_eq!(c.classes[0].len(), 4);
        assert_eq!(c.classes[1].len(), 4);
    }

    #[test]
    fn complete_graph_is_excluded() {
        let k7 = named(NamedGraph::Complete(7));
        assert_eq!(
            theorem1_partition(&k7, &"K3,K3,K3".parse().unwrap()).unwrap(),
            Theorem1Outcome::Exception(ExceptionCase::AllCompleteAndHComplete)
        );
    }

    #[test]
    fn single_class() {
        let p4 = named(NamedGraph::Path(4));
        let c = cert(&p4, "C4");
        assert_eq!(c.classes, vec![p4.vertices()]);
    }
}
