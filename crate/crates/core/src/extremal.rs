//! Maximum pattern-free sets, the tie-broken extremal set, and an auditor that checks the
//! structure forced on `H \ S` when a `(Δ(H) - d)`-regular component survives.

use serde::Serialize;

use crate::error::{cap, Error, Result};
use crate::graph::{write_graph6, Graph, VertexSet};
use crate::patterns::{all_copies, extends_freely, is_free, is_isomorphic, Pattern};

/// Order cap for [`max_free_size`].
pub const MAX_SEARCH_ORDER: usize = 16;
/// Order cap for anything that enumerates every maximum set.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Size of a maximum pattern-free set and one such set (the first in include-first order).
pub fn max_free_size(h: &Graph, p: &Pattern) -> Result<(usize, VertexSet)> {
    cap(
        "vertex count for maximum free set",
        h.order(),
        MAX_SEARCH_ORDER,
    )?;
    struct Search<'a> {
        h: &'a Graph,
        p: &'a Pattern,
        best: VertexSet,
        found: bool,
    }
    impl Search<'_> {
        fn go(&mut self, v: usize, cur: VertexSet) {
            let n = self.h.order();
            // Nothing below can beat the incumbent.
            if self.found && cur.len() + (n - v) <= self.best.len() {
                return;
            }
            if v == n {
                self.best = cur;
                self.found = true;
                return;
            }
            if extends_freely(self.h, cur, v, self.p) {
                self.go(v + 1, cur.with(v));
            }
            self.go(v + 1, cur);
        }
    }
    let mut s = Search {
        h,
        p,
        best: VertexSet::EMPTY,
        found: false,
    };
    s.go(0, VertexSet::EMPTY);
    Ok((s.best.len(), s.best))
}

/// Every maximum pattern-free set exactly once, in lexicographic order of member lists.
pub fn enumerate_max_free_sets(h: &Graph, p: &Pattern) -> Result<Vec<VertexSet>> {
    cap(
        "vertex count for enumerating maximum free sets",
        h.order(),
        MAX_ENUMERATION_ORDER,
    )?;
    let (size, _) = max_free_size(h, p)?;
    let mut out = Vec::new();
    fn go(h: &Graph, p: &Pattern, size: usize, v: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        let n = h.order();
        if cur.len() + (n - v) < size {
            return;
        }
        if v == n {
            out.push(cur);
            return;
        }
        if cur.len() < size && extends_freely(h, cur, v, p) {
            go(h, p, size, v + 1, cur.with(v), out);
        }
        go(h, p, size, v + 1, cur, out);
    }
    go(h, p, size, 0, VertexSet::EMPTY, &mut out);
    Ok(out)
}

/// Number of components of `H - s` in which every vertex has exactly `r` neighbours.
pub fn count_regular_components(h: &Graph, s: VertexSet, r: usize) -> usize {
    regular_components(h, s, r).len()
}

fn regular_components(h: &Graph, s: VertexSet, r: usize) -> Vec<VertexSet> {
    h.components(h.vertices() - s)
        .into_iter()
        .filter(|&c| c.iter().all(|v| h.degree_in(v, c) == r))
        .collect()
}

/// A maximum pattern-free set chosen to minimise, in order, the number of
/// `(Δ(H) - d)`-regular components of `H - S` and the number of components of `H[S]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalSet {
    pub set: VertexSet,
    pub size: usize,
    pub regular_component_count: usize,
    pub hs_component_count: usize,
    /// `d`, the pattern's minimum degree.
    pub pattern_min_degree: usize,
    /// `Δ(H)`.
    pub max_degree: usize,
}

impl ExtremalSet {
    fn key(&self) -> (usize, usize, usize) {
        (
            usize::MAX - self.size,
            self.regular_component_count,
            self.hs_component_count,
        )
    }
}

fn describe(h: &Graph, p: &Pattern, set: VertexSet) -> ExtremalSet {
    let d = p.min_degree();
    let delta = h.max_degree();
    ExtremalSet {
        set,
        size: set.len(),
        regular_component_count: count_regular_components(h, set, delta - d),
        hs_component_count: h.components(set).len(),
        pattern_min_degree: d,
        max_degree: delta,
    }
}

/// The lexicographically best maximum free set; ties go to the earliest in enumeration order.
pub fn extremal_set(h: &Graph, p: &Pattern) -> Result<ExtremalSet> {
    if h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let d = p.min_degree();
    let delta = h.max_degree();
    if d > delta {
        return Err(Error::Precondition(format!(
            "pattern minimum degree {d} exceeds maximum degree {delta}"
        )));
    }
    let mut best: Option<ExtremalSet> = None;
    for set in enumerate_max_free_sets(h, p)? {
        let cand = describe(h, p, set);
        if best.as_ref().is_none_or(|b| cand.key() < b.key()) {
            best = Some(cand);
        }
    }
    Ok(best.expect("the empty set is always free, so a maximum set exists"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartCCase {
    /// `G ≅ K_{d+1}` and `H ≅ K_{Δ+1}`.
    Complete,
    /// `G ≅ K_2` and `H` an odd cycle.
    OddCycle,
    /// `H ≅ G`.
    HIsoG,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartACheck {
    pub vertex: usize,
    pub neighbors_in_s: VertexSet,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartBCheck {
    pub vertex: usize,
    /// Distinct vertex sets covered by copies of the pattern in `H[S + v]`.
    pub copy_vertex_sets: usize,
    /// Distinct copies, i.e. distinct edge sets.
    pub copies: usize,
    /// Vertex set of the (first) copy.
    pub copy: VertexSet,
    pub unique_vertex_set: bool,
    pub unique_copy: bool,
    /// The copy's vertex set is a component of `H[S + v]` that induces a `d`-regular graph.
    pub regular_component: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub graph_g6: String,
    pub pattern: Pattern,
    pub s: VertexSet,
    pub regular_components: Vec<VertexSet>,
    /// `Δ(H - S) <= Δ(H) - d`.
    pub degree_bound: bool,
    pub part_a: Vec<PartACheck>,
    pub part_b: Vec<PartBCheck>,
    /// `None` when no regular component survives and there is nothing to classify.
    pub part_c_case: Option<PartCCase>,
    pub passed: bool,
}

fn classify_part_c(h: &Graph, g: &Graph, d: usize, delta: usize) -> PartCCase {
    if g.is_complete() && g.order() == d + 1 && h.is_complete() && h.order() == delta + 1 {
        PartCCase::Complete
    } else if g.order() == 2 && h.is_odd_cycle() {
        PartCCase::OddCycle
    } else if is_isomorphic(h, g) {
        PartCCase::HIsoG
    } else {
        PartCCase::Violation
    }
}

/// Check the conclusions (a), (b) and (c) for an extremal set of a connected `H` and a
/// single connected pattern graph.
pub fn lemma1_audit(h: &Graph, p: &Pattern, e: &ExtremalSet) -> Result<AuditReport> {
    let g = p.single_graph().ok_or_else(|| {
        Error::Precondition(format!("audit needs a single pattern graph, got {p}"))
    })?;
    if !h.is_connected() {
        return Err(Error::Precondition(
            "audit needs a connected host graph".into(),
        ));
    }
    let best = extremal_set(h, p)?;
    let actual = describe(h, p, e.set);
    if !is_free(h, e.set, p) {
        return Err(Error::NotExtremal(format!("{} is not {p}-free", e.set)));
    }
    if actual != *e {
        return Err(Error::NotExtremal(format!(
            "recorded statistics do not match {}",
            e.set
        )));
    }
    if actual.key() != best.key() {
        return Err(Error::NotExtremal(format!(
            "{} has (size, regular, components) = ({}, {}, {}), optimum is ({}, {}, {})",
            e.set,
            actual.size,
            actual.regular_component_count,
            actual.hs_component_count,
            best.size,
            best.regular_component_count,
            best.hs_component_count
        )));
    }

    let s = e.set;
    let d = e.pattern_min_degree;
    let delta = e.max_degree;
    let regular = regular_components(h, s, delta - d);
    let degree_bound = h.max_degree_in(h.vertices() - s) <= delta - d;

    let mut part_a = Vec::new();
    let mut part_b = Vec::new();
    for &comp in &regular {
        for v in comp {
            let neighbors_in_s = h.neighbors(v) & s;
            part_a.push(PartACheck {
                vertex: v,
                neighbors_in_s,
                holds: neighbors_in_s.len() == d,
            });

            let host = s.with(v);
            let copies = all_copies(h, host, &g);
            let copy = copies
                .vertex_sets
                .iter()
                .next()
                .copied()
                .unwrap_or_default();
            let regular_component = !copy.is_empty()
                && h.component_of(v, host) == copy
                && h.regular_degree(copy) == Ok(Some(d));
            let unique_vertex_set = copies.vertex_sets.len() == 1;
            let unique_copy = copies.edge_sets.len() == 1;
            part_b.push(PartBCheck {
                vertex: v,
                copy_vertex_sets: copies.vertex_sets.len(),
                copies: copies.edge_sets.len(),
                copy,
                unique_vertex_set,
                unique_copy,
                regular_component,
                holds: unique_vertex_set && unique_copy && regular_component,
            });
        }
    }
    let part_c_case = (!regular.is_empty()).then(|| classify_part_c(h, &g, d, delta));
    let passed = degree_bound
        && part_a.iter().all(|c| c.holds)
        && part_b.iter().all(|c| c.holds)
        && part_c_case != Some(PartCCase::Violation);
    Ok(AuditReport {
        graph_g6: write_graph6(h)?,
        pattern: p.clone(),
        s,
        regular_components: regular,
        degree_bound,
        part_a,
        part_b,
        part_c_case,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    fn named(n: NamedGraph) -> Graph {
        make_named(&n).unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    /// Largest free set by checking all subsets.
    fn brute_max(h: &Graph, p: &Pattern) -> usize {
        (0u64..1 << h.order())
            .map(VertexSet::from_bits)
            .filter(|&s| is_free(h, s, p))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn max_free_examples() {
        let pet = named(NamedGraph::Petersen);
        assert_eq!(brute_max(&pet, &pat("K2")), 4);
        assert_eq!(max_free_size(&pet, &pat("K2")).unwrap().0, 4);
        assert_eq!(
            max_free_size(&named(NamedGraph::Cycle(7)), &pat("K2"))
                .unwrap()
                .0,
            3
        );
        let k333 = named(NamedGraph::CompleteMultipartite(vec![3, 3, 3]));
        assert_eq!(brute_max(&k333, &pat("K3")), 6);
        assert_eq!(max_free_size(&k333, &pat("K3")).unwrap().0, 6);
        assert_eq!(
            max_free_size(&named(NamedGraph::Cycle(6)), &pat("mindeg>=2"))
                .unwrap()
                .0,
            5
        );
        assert!(max_free_size(&Graph::empty(17).unwrap(), &pat("K2")).is_err());
    }

    #[test]
    fn enumerations() {
        let c5 = named(NamedGraph::Cycle(5));
        let sets = enumerate_max_free_sets(&c5, &pat("K2")).unwrap();
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));

        let k4 = named(NamedGraph::Complete(4));
        let sets = enumerate_max_free_sets(&k4, &pat("K2")).unwrap();
        assert_eq!(sets, (0..4).map(VertexSet::singleton).collect::<Vec<_>>());

        let p3 = named(NamedGraph::Path(3));
        let sets = enumerate_max_free_sets(&p3, &pat("K2")).unwrap();
        assert_eq!(sets, vec![[0, 2].into_iter().collect()]);
        assert!(enumerate_max_free_sets(&Graph::empty(11).unwrap(), &pat("K2")).is_err());
    }

    #[test]
    fn regular_components_examples() {
        let c5 = named(NamedGraph::Cycle(5));
        assert_eq!(
            count_regular_components(&c5, [0, 2].into_iter().collect(), 1),
            1
        );
        assert_eq!(count_regular_components(&c5, c5.vertices(), 3), 0);

        // Petersen minus a maximum independent set: brute force the count over every
        // maximum set and compare with the direct component check.
        let pet = named(NamedGraph::Petersen);
        for s in enumerate_max_free_sets(&pet, &pat("K2")).unwrap() {
            let rest = pet.vertices() - s;
            let mut brute = 0;
            for comp in pet.components(rest) {
                if comp.iter().all(|v| (pet.neighbors(v) & comp).len() == 2) {
                    brute += 1;
                }
            }
            assert_eq!(count_regular_components(&pet, s, 2), brute);
        }
    }

    #[test]
    fn extremal_examples() {
        let e = extremal_set(&named(NamedGraph::Cycle(5)), &pat("K2")).unwrap();
        assert_eq!((e.size, e.regular_component_count), (2, 1));
        let e = extremal_set(&named(NamedGraph::Cycle(6)), &pat("K2")).unwrap();
        assert_eq!((e.size, e.regular_component_count), (3, 0));
        let e = extremal_set(&named(NamedGraph::Complete(5)), &pat("K2")).unwrap();
        assert_eq!((e.size, e.regular_component_count), (1, 1));
        assert!(extremal_set(&named(NamedGraph::Path(3)), &pat("K4")).is_err());
    }

    #[test]
    fn audit_odd_cycle() {
        let c9 = named(NamedGraph::Cycle(9));
        let p = pat("K2");
        let e = extremal_set(&c9, &p).unwrap();
        let r = lemma1_audit(&c9, &p, &e).unwrap();
        assert!(r.passed);
        assert!(r.regular_components.iter().all(|c| c.len() == 2));
        assert!(r.part_a.iter().all(|c| c.neighbors_in_s.len() == 1));
        assert_eq!(r.part_c_case, Some(PartCCase::OddCycle));
    }

    #[test]
    fn audit_complete() {
        let k7 = named(NamedGraph::Complete(7));
        let p = pat("K3");
        let e = extremal_set(&k7, &p).unwrap();
        assert_eq!(e.size, 2);
        let r = lemma1_audit(&k7, &p, &e).unwrap();
        assert!(r.passed);
        assert_eq!(r.regular_components.len(), 1);
        assert_eq!(r.regular_components[0].len(), 5);
        assert_eq!(r.part_c_case, Some(PartCCase::Complete));
    }

    #[test]
    fn audit_petersen_against_itself() {
        let pet = named(NamedGraph::Petersen);
        let p = pat("petersen");
        let e = extremal_set(&pet, &p).unwrap();
        assert_eq!(e.size, 9);
        let r = lemma1_audit(&pet, &p, &e).unwrap();
        assert_eq!(r.regular_components.len(), 1);
        assert_eq!(r.part_c_case, Some(PartCCase::HIsoG));
        assert!(r.passed);
    }

    #[test]
    fn audit_rejects_non_extremal() {
        let c6 = named(NamedGraph::Cycle(6));
        let p = pat("K2");
        let mut e = extremal_set(&c6, &p).unwrap();
        e.set = VertexSet::singleton(0);
        assert!(matches!(
            lemma1_audit(&c6, &p, &e),
            Err(Error::NotExtremal(_))
        ));
        assert!(matches!(
            lemma1_audit(&c6, &pat("mindeg>=2"), &e),
            Err(Error::Precondition(_))
        ));
    }
}
