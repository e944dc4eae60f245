//! Non-induced subgraph isomorphism by backtracking over bitset candidate sets.

use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

/// Search state for mapping the vertices of `pattern` injectively into `H[allowed]` so that
/// every pattern edge lands on a host edge.
pub(crate) struct Matcher<'a> {
    host: &'a Graph,
    allowed: VertexSet,
    pattern: &'a Graph,
    /// Pattern vertices in the order they are assigned.
    order: Vec<usize>,
    /// For each step, the earlier steps whose pattern vertices are adjacent to it.
    back_edges: Vec<Vec<usize>>,
    /// Host image of each step.
    image: Vec<usize>,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(host: &'a Graph, allowed: VertexSet, pattern: &'a Graph) -> Self {
        let k = pattern.order();
        let mut order = Vec::with_capacity(k);
        let mut placed = VertexSet::EMPTY;
        // Highest degree first, then always the vertex with most placed neighbours.
        while order.len() < k {
            let next = (0..k)
                .filter(|&u| !placed.contains(u))
                .max_by_key(|&u| {
                    (
                        pattern.degree_in(u, placed),
                        pattern.degree(u),
                        std::cmp::Reverse(u),
                    )
                })
                .expect("unplaced vertex exists");
            order.push(next);
            placed.insert(next);
        }
        let back_edges = order
            .iter()
            .enumerate()
            .map(|(i, &u)| (0..i).filter(|&j| pattern.has_edge(u, order[j])).collect())
            .collect();
        Matcher {
            host,
            allowed,
            pattern,
            order,
            back_edges,
            image: Vec::with_capacity(k),
        }
    }

    /// Calls `f` with each embedding as a map from pattern vertex to host vertex.
    pub(crate) fn for_each<B>(
        &mut self,
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let k = self.pattern.order();
        if k > self.allowed.len()
            || self.pattern.edge_count() > self.host.edge_count_in(self.allowed)
        {
            return ControlFlow::Continue(());
        }
        let mut map = vec![usize::MAX; k];
        self.step(VertexSet::EMPTY, &mut map, f)
    }

    fn step<B>(
        &mut self,
        used: VertexSet,
        map: &mut [usize],
        f: &mut dyn FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let i = self.image.len();
        if i == self.order.len() {
            for (step, &u) in self.order.iter().enumerate() {
                map[u] = self.image[step];
            }
            return f(map);
        }
        let u = self.order[i];
        let need = self.pattern.degree(u);
        let mut cand = self.allowed - used;
        for &j in &self.back_edges[i] {
            cand &= self.host.neighbors(self.image[j]);
        }
        for x in cand {
            if self.host.degree_in(x, self.allowed) < need {
                continue;
            }
            self.image.push(x);
            let r = self.step(used.with(x), map, f);
            self.image.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    pub(crate) fn find(&mut self) -> Option<Vec<usize>> {
        match self.for_each(&mut |m| ControlFlow::Break(m.to_vec())) {
            ControlFlow::Break(m) => Some(m),
            ControlFlow::Continue(()) => None,
        }
    }
}

/// Some clique of size `t` inside `H[s]`, lowest vertices first.
pub(crate) fn find_clique(h: &Graph, s: VertexSet, t: usize) -> Option<Vec<usize>> {
    fn grow(h: &Graph, cand: VertexSet, need: usize, acc: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            if rest.len() + 1 < need {
                break;
            }
            acc.push(v);
            if grow(h, rest & h.neighbors(v), need - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    // A vertex of a t-clique has at least t-1 neighbours in s.
    let cand: VertexSet = s.iter().filter(|&v| h.degree_in(v, s) + 1 >= t).collect();
    let mut acc = Vec::with_capacity(t);
    grow(h, cand, t, &mut acc).then_some(acc)
}

/// Isomorphism test: equal order and size, then a spanning subgraph embedding.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.order()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.order()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && Matcher::new(b, b.vertices(), a).find().is_some()
}
