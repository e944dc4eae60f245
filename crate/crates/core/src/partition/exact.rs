//! Exhaustive search for pattern-free partitions.

use crate::error::{cap, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{extends_freely, Pattern};

pub const MAX_EXACT_ORDER: usize = 12;
pub const MAX_EXACT_CLASSES: usize = 12;

/// A partition of `V(H)` into `k` classes with class `i` free of `patterns[i]`, or `None`
/// when none exists. Classes with equal patterns are interchangeable, so a vertex may only
/// open the first empty class of each group of equal patterns.
pub fn exact_free_partition(
    h: &Graph,
    patterns: &[Pattern],
    k: usize,
) -> Result<Option<Vec<VertexSet>>> {
    if patterns.len() != k {
        return Err(Error::Precondition(format!(
            "{} patterns given for {k} classes",
            patterns.len()
        )));
    }
    cap(
        "vertex count for exact partition",
        h.order(),
        MAX_EXACT_ORDER,
    )?;
    cap("class count for exact partition", k, MAX_EXACT_CLASSES)?;
    if k == 0 {
        return Ok((h.order() == 0).then(Vec::new));
    }

    let mut order: Vec<usize> = (0..h.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    // twin[c]: the nearest earlier class with an identical pattern
    let twin: Vec<Option<usize>> = (0..k)
        .map(|c| (0..c).rev().find(|&e| patterns[e] == patterns[c]))
        .collect();

    fn go(
        h: &Graph,
        patterns: &[Pattern],
        twin: &[Option<usize>],
        order: &[usize],
        classes: &mut [VertexSet],
    ) -> bool {
        let Some((&v, rest)) = order.split_first() else {
            return true;
        };
        for c in 0..classes.len() {
            if classes[c].is_empty() && twin[c].is_some_and(|e| classes[e].is_empty()) {
                continue;
            }
            if !extends_freely(h, classes[c], v, &patterns[c]) {
                continue;
            }
            classes[c].insert(v);
            if go(h, patterns, twin, rest, classes) {
                return true;
            }
            classes[c].remove(v);
        }
        false
    }

    let mut classes = vec![VertexSet::EMPTY; k];
    Ok(go(h, patterns, &twin, &order, &mut classes).then_some(classes))
}

/// The pattern-free chromatic number with a witness partition.
pub fn chi_free(h: &Graph, p: &Pattern) -> Result<(usize, Vec<VertexSet>)> {
    cap(
        "vertex count for exact partition",
        h.order(),
        MAX_EXACT_ORDER,
    )?;
    for k in 1..=h.order() {
        if let Some(classes) = exact_free_partition(h, &vec![p.clone(); k], k)? {
            return Ok((k, classes));
        }
    }
    // singletons are free of every pattern, so k = n always succeeds
    Ok((0, Vec::new()))
}
