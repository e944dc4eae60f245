//! Potential-decreasing local search for degree-bounded partitions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Classes with `Δ(H[V_i]) ≤ d_i - 1`, i.e. `H[V_i]` free of every graph of minimum degree `d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LovaszPartition {
    pub degrees: Vec<usize>,
    pub classes: Vec<VertexSet>,
    pub moves: usize,
}

/// Needs every `d_i ≥ 1` and `Σ d_i ≥ Δ(H) + 1`. Starts with everything in the class with
/// the largest `d_i` and moves the lowest over-full vertex to the first class where it has
/// at most `d_j - 1` neighbours. Each move lowers `Σ_i (|E(H[V_i])| - d_i |V_i|)` by at
/// least one, so the loop stops after at most `|E|` moves.
pub fn lovasz_partition(h: &Graph, degrees: &[usize]) -> Result<LovaszPartition> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::Precondition(
            "degrees must be nonempty and positive".into(),
        ));
    }
    let sum: usize = degrees.iter().sum();
    if sum < h.max_degree() + 1 {
        return Err(Error::Precondition(format!(
            "degrees sum to {sum}, below maximum degree + 1 = {}",
            h.max_degree() + 1
        )));
    }

    let k = degrees.len();
    let top = degrees
        .iter()
        .enumerate()
        .max_by_key(|&(i, &d)| (d, std::cmp::Reverse(i)))
        .map_or(0, |(i, _)| i);
    let mut class_of = vec![top; h.order()];
    let mut classes = vec![VertexSet::EMPTY; k];
    classes[top] = h.vertices();

    let limit = h.edge_count() * degrees.iter().max().copied().unwrap_or(0);
    let mut moves = 0;
    loop {
        let over = h
            .vertices()
            .iter()
            .find(|&v| h.degree_in(v, classes[class_of[v]]) >= degrees[class_of[v]]);
        let Some(v) = over else { break };
        // pigeonhole: the neighbour counts sum to deg(v) < Σ d_j
        let j = (0..k)
            .find(|&j| h.degree_in(v, classes[j]) < degrees[j])
            .ok_or_else(|| Error::TheoremViolation(format!("vertex {v} fits no class")))?;
        classes[class_of[v]].remove(v);
        classes[j].insert(v);
        class_of[v] = j;
        moves += 1;
        if moves > limit {
            return Err(Error::TheoremViolation(format!(
                "local search exceeded {limit} moves"
            )));
        }
    }
    Ok(LovaszPartition {
        degrees: degrees.to_vec(),
        classes,
        moves,
    })
}
