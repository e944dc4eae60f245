use crate::error::{cap, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`clique_number`].
pub const MAX_CLIQUE_ORDER: usize = 12;

/// The `p`-core of `H[s]`: what survives repeatedly deleting vertices with fewer than `p`
/// neighbours among the survivors. Nonempty iff `H[s]` has a subgraph of minimum degree
/// at least `p`.
pub fn core(h: &Graph, s: VertexSet, p: usize) -> VertexSet {
    let mut alive = s;
    loop {
        let low: VertexSet = alive
            .iter()
            .filter(|&v| h.degree_in(v, alive) < p)
            .collect();
        if low.is_empty() {
            return alive;
        }
        alive -= low;
    }
}

/// Degeneracy of `H[s]` with its min-degree elimination order (lowest vertex on ties).
/// `H[s]` is `p`-degenerate iff the returned value is at most `p`.
pub fn degeneracy(h: &Graph, s: VertexSet) -> Result<(usize, Vec<usize>)> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut alive = s;
    let mut k = 0;
    let mut order = Vec::with_capacity(s.len());
    while let Some(v) = alive.iter().min_by_key(|&v| h.degree_in(v, alive)) {
        k = k.max(h.degree_in(v, alive));
        order.push(v);
        alive.remove(v);
    }
    Ok((k, order))
}

/// Exact clique number by branch and bound.
pub fn clique_number(h: &Graph) -> Result<usize> {
    cap(
        "vertex count for clique number",
        h.order(),
        MAX_CLIQUE_ORDER,
    )?;
    Ok(max_clique_in(h, h.vertices()).len())
}

fn max_clique_in(h: &Graph, s: VertexSet) -> VertexSet {
    fn go(h: &Graph, acc: VertexSet, cand: VertexSet, best: &mut VertexSet) {
        if cand.is_empty() {
            if acc.len() > best.len() {
                *best = acc;
            }
            return;
        }
        let mut rest = cand;
        for v in cand {
            if acc.len() + rest.len() <= best.len() {
                return;
            }
            rest.remove(v);
            go(h, acc.with(v), rest & h.neighbors(v), best);
        }
        if acc.len() > best.len() {
            *best = acc;
        }
    }
    let mut best = VertexSet::EMPTY;
    go(h, VertexSet::EMPTY, s, &mut best);
    best
}
