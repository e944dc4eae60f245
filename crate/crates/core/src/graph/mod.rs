//! Simple undirected graphs on at most 62 vertices with one adjacency word per vertex.

mod canon;
mod io;
mod named;
mod vertex_set;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use canon::{
    canonical_form, canonical_graph, enumerate_connected_graphs, MAX_CANONICAL, MAX_ENUMERATE,
};
pub use io::{parse_edge_list, parse_graph, parse_graph6, write_graph6};
pub use named::{make_named, NamedGraph};
pub use vertex_set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Number of neighbours of `v` inside `s`.
    #[inline]
    pub fn degree_in(&self, v: usize, s: VertexSet) -> usize {
        (self.adj[v] & s.bits()).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges of `H[s]`.
    pub fn edge_count_in(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees = (0..self.n).map(|v| self.degree(v));
        let (lo, hi) = degrees.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
        Ok(DegreeStats {
            max_degree: hi,
            min_degree: lo,
        })
    }

    /// Maximum degree, 0 for the graph on no vertices.
    pub fn max_degree(&self) -> usize {
        self.max_degree_in(self.vertices())
    }

    /// Maximum degree of `H[s]`, 0 when `s` is empty.
    pub fn max_degree_in(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).max().unwrap_or(0)
    }

    /// The induced subgraph on `s` with vertices renumbered `0..|s|` in increasing order,
    /// together with the map from new to old vertex numbers.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = s.to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; old.len()];
        for (i, &v) in old.iter().enumerate() {
            for w in self.neighbors(v) & s {
                adj[i] |= 1 << pos[w];
            }
        }
        (Graph { n: old.len(), adj }, old)
    }

    /// Relabel: vertex `v` of `self` becomes vertex `perm[v]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal vertex count"
        );
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected pieces of `H[within]`, ordered by smallest member.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.component_of(start, within);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    /// The vertex set of the component of `H[within]` containing `v`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.neighbors(u);
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// True iff the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0, self.vertices()).len() == self.n
    }

    /// `Some(r)` when every vertex of `within` has exactly `r` neighbours inside `within`.
    pub fn regular_degree(&self, within: VertexSet) -> Result<Option<usize>> {
        let first = within.first().ok_or(Error::EmptyVertexSet)?;
        let r = self.degree_in(first, within);
        Ok(within
            .iter()
            .all(|v| self.degree_in(v, within) == r)
            .then_some(r))
    }

    pub fn is_regular(&self) -> bool {
        self.n > 0 && matches!(self.regular_degree(self.vertices()), Ok(Some(_)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.is_connected()
            && matches!(self.regular_degree(self.vertices()), Ok(Some(2)))
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.n % 2 == 1 && self.is_cycle()
    }

    /// Forest test by edge counting: `|E| = |V| - components`.
    pub fn is_acyclic_in(&self, s: VertexSet) -> bool {
        self.edge_count_in(s) + self.components(s).len() == s.len()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.degree_in(v, s) == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match write_graph6(self) {
            Ok(s) => write!(f, "Graph({s})"),
            Err(_) => write!(f, "Graph(n={})", self.n),
        }
    }
}
