//! Forbidden patterns and containment tests for induced subgraphs `H[S]`.
//!
//! Containment is always the non-induced kind: `H[S]` contains `G` when some injective map
//! sends every edge of `G` onto an edge of `H[S]`.

mod degeneracy;
mod embed;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{make_named, parse_graph6, write_graph6, Graph, NamedGraph, VertexSet};

pub use degeneracy::{clique_number, core, degeneracy, MAX_CLIQUE_ORDER};
pub use embed::is_isomorphic;
use embed::{find_clique, Matcher};

/// Pattern graphs above this order are rejected. Ten admits the Petersen graph.
pub const MAX_PATTERN_ORDER: usize = 10;

/// What a class of a partition must avoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// A connected graph on at least two vertices. `label` is how it is printed.
    Explicit { graph: Graph, label: String },
    /// `K_t`, `t >= 2`.
    CompleteK(usize),
    /// Every connected graph of minimum degree at least `p >= 1`; avoiding all of them is
    /// the same as being `(p-1)`-degenerate.
    MinDegreeFamily(usize),
    /// Avoid every member. Members are never themselves lists.
    FamilyList(Vec<Pattern>),
}

/// Evidence that `H[S]` contains a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// `map[i]` is the host vertex playing pattern vertex `i`.
    Embedding { member: usize, map: Vec<usize> },
    /// A nonempty core: every vertex has at least `p` neighbours inside it.
    Core { member: usize, vertices: VertexSet },
}

impl Witness {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Witness::Embedding { map, .. } => map.iter().copied().collect(),
            Witness::Core { vertices, .. } => *vertices,
        }
    }
}

impl Pattern {
    pub fn explicit(graph: Graph) -> Result<Self> {
        let label = format!("g6:{}", write_graph6(&graph)?);
        Self::explicit_labeled(graph, label)
    }

    pub fn explicit_labeled(graph: Graph, label: impl Into<String>) -> Result<Self> {
        if graph.order() < 2 {
            return Err(Error::InvalidPattern(
                "pattern graph needs at least 2 vertices".into(),
            ));
        }
        if graph.order() > MAX_PATTERN_ORDER {
            return Err(Error::InvalidPattern(format!(
                "pattern graph has {} vertices, above {MAX_PATTERN_ORDER}",
                graph.order()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::InvalidPattern(
                "pattern graph must be connected".into(),
            ));
        }
        Ok(Pattern::Explicit {
            graph,
            label: label.into(),
        })
    }

    pub fn complete(t: usize) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidPattern(format!("K{t}: need t >= 2")));
        }
        Ok(Pattern::CompleteK(t))
    }

    pub fn min_degree_family(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidPattern(
                "mindeg>=0 forbids every vertex".into(),
            ));
        }
        Ok(Pattern::MinDegreeFamily(p))
    }

    /// Nested lists are flattened; a single member collapses to that member.
    pub fn family(members: Vec<Pattern>) -> Result<Self> {
        let mut flat = Vec::new();
        for m in members {
            match m {
                Pattern::FamilyList(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Err(Error::InvalidPattern("empty family".into())),
            1 => Ok(flat.pop().expect("one member")),
            _ => Ok(Pattern::FamilyList(flat)),
        }
    }

    /// Star `K_{1,t}`: avoiding it means maximum degree below `t`.
    pub fn star(t: usize) -> Result<Self> {
        let g = make_named(&NamedGraph::CompleteMultipartite(vec![1, t]))?;
        Self::explicit_labeled(g, format!("K1,{t}"))
    }

    /// Minimum degree of the pattern; for a list, the least over its members.
    pub fn min_degree(&self) -> usize {
        match self {
            Pattern::Explicit { graph, .. } => (0..graph.order())
                .map(|v| graph.degree(v))
                .min()
                .unwrap_or(0),
            Pattern::CompleteK(t) => t - 1,
            Pattern::MinDegreeFamily(p) => *p,
            Pattern::FamilyList(ms) => ms.iter().map(Pattern::min_degree).min().unwrap_or(0),
        }
    }

    /// The single graph this pattern forbids, if it is one.
    pub fn single_graph(&self) -> Option<Graph> {
        match self {
            Pattern::Explicit { graph, .. } => Some(graph.clone()),
            Pattern::CompleteK(t) => make_named(&NamedGraph::Complete(*t)).ok(),
            _ => None,
        }
    }

    fn members(&self) -> &[Pattern] {
        match self {
            Pattern::FamilyList(ms) => ms,
            other => std::slice::from_ref(other),
        }
    }

    /// Whether the forbidden family contains `K_t`.
    pub fn forbids_complete(&self, t: usize) -> bool {
        self.members().iter().any(|m| match m {
            Pattern::Explicit { graph, .. } => graph.order() == t && graph.is_complete(),
            Pattern::CompleteK(s) => *s == t,
            Pattern::MinDegreeFamily(p) => t > *p,
            Pattern::FamilyList(_) => unreachable!("lists are flat"),
        })
    }

    /// Whether the graph `g` itself is (isomorphic to) a member of the forbidden family.
    pub fn forbids_graph(&self, g: &Graph) -> bool {
        self.members().iter().any(|m| match m {
            Pattern::Explicit { graph, .. } => is_isomorphic(graph, g),
            Pattern::CompleteK(t) => g.order() == *t && g.is_complete(),
            Pattern::MinDegreeFamily(p) => {
                g.is_connected() && g.degree_stats().is_ok_and(|s| s.min_degree >= *p)
            }
            Pattern::FamilyList(_) => unreachable!("lists are flat"),
        })
    }
}

pub fn pattern_min_degree(p: &Pattern) -> usize {
    p.min_degree()
}

/// A witness that `H[s]` contains the pattern, or `None` if `H[s]` is pattern-free.
pub fn contains_pattern(h: &Graph, s: VertexSet, p: &Pattern) -> Option<Witness> {
    for (member, m) in p.members().iter().enumerate() {
        let found = match m {
            Pattern::Explicit { graph, .. } => Matcher::new(h, s, graph)
                .find()
                .map(|map| Witness::Embedding { member, map }),
            Pattern::CompleteK(t) => {
                find_clique(h, s, *t).map(|map| Witness::Embedding { member, map })
            }
            Pattern::MinDegreeFamily(q) => {
                let c = core(h, s, *q);
                (!c.is_empty()).then_some(Witness::Core {
                    member,
                    vertices: c,
                })
            }
            Pattern::FamilyList(_) => unreachable!("lists are flat"),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

pub fn is_free(h: &Graph, s: VertexSet, p: &Pattern) -> bool {
    contains_pattern(h, s, p).is_none()
}

/// For a pattern-free `s`, whether `s + v` stays pattern-free. Patterns are connected, so a
/// new copy lies inside the component of `v` in `H[s + v]`.
pub fn extends_freely(h: &Graph, s: VertexSet, v: usize, p: &Pattern) -> bool {
    let with = s.with(v);
    is_free(h, h.component_of(v, with), p)
}

/// Copies of a single-graph pattern in `H[s]`: the distinct vertex sets and the distinct
/// edge sets (subgraphs) that embeddings cover.
#[derive(Clone, Debug, Default)]
pub struct Copies {
    pub vertex_sets: BTreeSet<VertexSet>,
    pub edge_sets: BTreeSet<Vec<(usize, usize)>>,
}

pub fn all_copies(h: &Graph, s: VertexSet, pattern: &Graph) -> Copies {
    let mut out = Copies::default();
    let edges: Vec<(usize, usize)> = pattern.edges().collect();
    let _ = Matcher::new(h, s, pattern).for_each(&mut |map| {
        out.vertex_sets.insert(map.iter().copied().collect());
        let mut image: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map[a], map[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        image.sort_unstable();
        out.edge_sets.insert(image);
        ControlFlow::<()>::Continue(())
    });
    out
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Explicit { label, .. } => write!(f, "{label}"),
            Pattern::CompleteK(t) => write!(f, "K{t}"),
            Pattern::MinDegreeFamily(p) => write!(f, "mindeg>={p}"),
            Pattern::FamilyList(ms) => {
                for (i, m) in ms.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{m}")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Split on `sep`, gluing pure-digit pieces onto the previous piece so that `K1,3` and
/// `K3,3,3` survive as single tokens.
pub(crate) fn split_tokens(s: &str, sep: char) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for piece in s.split(sep) {
        let piece = piece.trim();
        let digits = !piece.is_empty() && piece.bytes().all(|b| b.is_ascii_digit());
        match out.last_mut() {
            Some(last) if digits && last.starts_with(['K', 'k']) => {
                last.push(',');
                last.push_str(piece);
            }
            _ => out.push(piece.to_string()),
        }
    }
    out
}

fn parse_single(tok: &str) -> Result<Pattern> {
    let bad = |why: String| Error::InvalidPattern(format!("{tok:?}: {why}"));
    if let Some(p) = tok.strip_prefix("mindeg>=") {
        let p = p.parse().map_err(|_| bad("expected an integer".into()))?;
        return Pattern::min_degree_family(p);
    }
    if let Some(code) = tok.strip_prefix("g6:") {
        let g = parse_graph6(code).map_err(|e| bad(e.to_string()))?;
        return Pattern::explicit_labeled(g, tok);
    }
    match tok.parse::<NamedGraph>().map_err(|e| bad(e.to_string()))? {
        NamedGraph::Complete(t) => Pattern::complete(t),
        named => Pattern::explicit_labeled(make_named(&named)?, named.to_string()),
    }
}

/// Syntax: `K3`, `C5`, `P4`, `K1,3`, `petersen`, `mindeg>=2`, `g6:<graph6>`; members of a
/// family are separated by `,` or `|`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let members = s
            .split('|')
            .flat_map(|part| split_tokens(part, ','))
            .map(|tok| parse_single(&tok))
            .collect::<Result<Vec<_>>>()?;
        Pattern::family(members)
    }
}
