//! Canonical labels by exhaustive permutation search, and isomorph-free generation of
//! small connected graphs on top of them.

use std::collections::BTreeSet;

use super::{parse_graph6, write_graph6, Graph};
use crate::error::{cap, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL: usize = 10;
/// Largest order accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATE: usize = 8;

/// Depth-first search over vertex orderings that builds the graph6 bit string column by
/// column and abandons an ordering as soon as its prefix exceeds the best one found.
/// The minimum over the pruned tree equals the minimum over all `n!` orderings.
struct MinLabel<'a> {
    g: &'a Graph,
    total_bits: u32,
    order: Vec<usize>,
    best_bits: u64,
    best_order: Vec<usize>,
}

impl MinLabel<'_> {
    fn search(&mut self, placed: u64, prefix: u64) {
        let j = self.order.len();
        let n = self.g.order();
        if j == n {
            if prefix < self.best_bits {
                self.best_bits = prefix;
                self.best_order.clone_from(&self.order);
            }
            return;
        }
        let bits_after = (j * (j + 1) / 2) as u32;
        let shift = self.total_bits - bits_after;
        for v in 0..n {
            if placed >> v & 1 == 1 {
                continue;
            }
            let mut next = prefix;
            for &u in &self.order {
                next = next << 1 | self.g.has_edge(u, v) as u64;
            }
            if self.best_bits != u64::MAX && next > self.best_bits >> shift {
                continue;
            }
            self.order.push(v);
            self.search(placed | 1 << v, next);
            self.order.pop();
        }
    }
}

/// The relabelled copy of `g` whose graph6 string is lexicographically smallest.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let n = g.order();
    cap("vertex count for canonical labelling", n, MAX_CANONICAL)?;
    let mut s = MinLabel {
        g,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        order: Vec::with_capacity(n),
        best_bits: u64::MAX,
        best_order: (0..n).collect(),
    };
    s.search(0, 0);
    let mut perm = vec![0; n];
    for (pos, &v) in s.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permute(&perm))
}

/// Minimum graph6 string over all vertex permutations; equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String> {
    write_graph6(&canonical_graph(g)?)
}

/// One graph per isomorphism class of connected graphs on exactly `n` vertices, in
/// canonical form, sorted by canonical label.
///
/// Every connected graph has a vertex whose removal leaves it connected (a leaf of a
/// spanning tree), so extending each class on `n - 1` vertices by one vertex with every
/// nonempty neighbourhood reaches every class on `n` vertices.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(crate::Error::Precondition(
            "enumeration needs n >= 1".into(),
        ));
    }
    cap("vertex count for enumeration", n, MAX_ENUMERATE)?;
    let mut labels: BTreeSet<String> = BTreeSet::from([write_graph6(&Graph::empty(1)?)?]);
    for m in 2..=n {
        let prev: Vec<Graph> = labels
            .iter()
            .map(|l| parse_graph6(l))
            .collect::<Result<_>>()?;
        let mut next = BTreeSet::new();
        for g in &prev {
            for mask in 1u64..1 << (m - 1) {
                let mut h = Graph::empty(m)?;
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, m - 1);
                    }
                }
                next.insert(canonical_form(&h)?);
            }
        }
        labels = next;
    }
    labels.iter().map(|l| parse_graph6(l)).collect()
}
