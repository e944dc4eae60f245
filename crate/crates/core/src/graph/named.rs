use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Standard graph families, with canonical vertex numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    /// Edges `i -- i+1 mod n`.
    Cycle(usize),
    Path(usize),
    /// Parts occupy contiguous vertex ranges in the order given.
    CompleteMultipartite(Vec<usize>),
    /// Outer 5-cycle on 0..5, spokes `i -- i+5`, inner pentagram on 5..10.
    Petersen,
}

pub fn make_named(spec: &NamedGraph) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InvalidGraph(msg));
    match *spec {
        NamedGraph::Complete(n) => {
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return bad(format!("cycle needs at least 3 vertices, got {n}"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        NamedGraph::Path(n) => {
            if n == 0 {
                return bad("path needs at least 1 vertex".into());
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        NamedGraph::CompleteMultipartite(ref parts) => {
            if parts.is_empty() || parts.contains(&0) {
                return bad(format!("multipartite parts must be nonempty: {parts:?}"));
            }
            let mut part_of = Vec::new();
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            let n = part_of.len();
            let part_of = &part_of;
            Graph::from_edges(
                n,
                (0..n).flat_map(|u| {
                    (u + 1..n)
                        .filter(move |&v| part_of[u] != part_of[v])
                        .map(move |v| (u, v))
                }),
            )
        }
        NamedGraph::Petersen => Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]),
        ),
    }
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph> {
        make_named(self)
    }
}

/// Accepts `petersen`, `K7`, `C9`, `P4`, and `K3,3,3` / `K1,3` for multipartite graphs.
impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidGraph(format!("unknown graph name {s:?}"));
        if s.eq_ignore_ascii_case("petersen") {
            return Ok(NamedGraph::Petersen);
        }
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match kind {
            'K' | 'k' if rest.contains(',') => Ok(NamedGraph::CompleteMultipartite(
                rest.split(',').map(num).collect::<Result<_>>()?,
            )),
            'K' | 'k' => Ok(NamedGraph::Complete(num(rest)?)),
            'C' | 'c' => Ok(NamedGraph::Cycle(num(rest)?)),
            'P' | 'p' => Ok(NamedGraph::Path(num(rest)?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "K{}", parts.join(","))
            }
            NamedGraph::Petersen => write!(f, "petersen"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k333() {
        let g = make_named(&NamedGraph::CompleteMultipartite(vec![3, 3, 3])).unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 27));
        let s = g.degree_stats().unwrap();
        assert_eq!((s.max_degree, s.min_degree), (6, 6));
    }

    #[test]
    fn triangle_two_ways() {
        assert_eq!(
            make_named(&NamedGraph::Cycle(3)),
            make_named(&NamedGraph::Complete(3))
        );
    }

    #[test]
    fn petersen_girth_five_by_brute_force() {
        let g = make_named(&NamedGraph::Petersen).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
        // no triangle
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    assert!(!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)));
                }
            }
        }
        // no 4-cycle: two distinct vertices never share two neighbours
        for a in 0..10 {
            for b in a + 1..10 {
                assert!((g.neighbors(a) & g.neighbors(b)).len() <= 1);
            }
        }
        // a 5-cycle exists
        assert!(
            g.has_edge(0, 1)
                && g.has_edge(1, 2)
                && g.has_edge(2, 3)
                && g.has_edge(3, 4)
                && g.has_edge(4, 0)
        );
    }

    #[test]
    fn invalid_sizes() {
        assert!(make_named(&NamedGraph::Cycle(2)).is_err());
        assert!(make_named(&NamedGraph::Path(0)).is_err());
        assert!(make_named(&NamedGraph::CompleteMultipartite(vec![2, 0])).is_err());
        assert!(make_named(&NamedGraph::Complete(63)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!(
            "petersen".parse::<NamedGraph>().unwrap(),
            NamedGraph::Petersen
        );
        assert_eq!("K7".parse::<NamedGraph>().unwrap(), NamedGraph::Complete(7));
        assert_eq!("C9".parse::<NamedGraph>().unwrap(), NamedGraph::Cycle(9));
        assert_eq!(
            "K3,3,3".parse::<NamedGraph>().unwrap(),
            NamedGraph::CompleteMultipartite(vec![3, 3, 3])
        );
        assert!("Q5".parse::<NamedGraph>().is_err());
        assert!("K".parse::<NamedGraph>().is_err());
        assert_eq!(
            NamedGraph::CompleteMultipartite(vec![1, 3]).to_string(),
            "K1,3"
        );
    }
}
