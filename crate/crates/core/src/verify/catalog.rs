use crate::error::Result;
use crate::partition::PatternSpecList;
use crate::patterns::Pattern;

/// Patterns the suites draw from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub patterns: Vec<Pattern>,
}

impl Default for Catalog {
    fn default() -> Self {
        let patterns = [
            "K2",
            "K3",
            "K4",
            "P3",
            "P4",
            "C4",
            "C5",
            "mindeg>=2",
            "mindeg>=3",
        ]
        .iter()
        .map(|s| s.parse().expect("catalog entries are valid patterns"))
        .collect();
        Catalog { patterns }
    }
}

impl Catalog {
    pub fn new(patterns: Vec<Pattern>) -> Self {
        Catalog { patterns }
    }

    /// Patterns given by a single explicit graph.
    pub fn single_graph_patterns(&self) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter().filter(|p| p.single_graph().is_some())
    }

    /// Every ordered tuple of 1 to `k_max` catalog patterns whose minimum degrees sum to
    /// `total`, shortest first and then in catalog order.
    pub fn spec_lists(&self, total: usize, k_max: usize) -> Result<Vec<PatternSpecList>> {
        let mut out = Vec::new();
        for k in 1..=k_max {
            let mut idx = vec![0usize; k];
            'tuples: loop {
                let sum: usize = idx.iter().map(|&i| self.patterns[i].min_degree()).sum();
                if sum == total {
                    out.push(PatternSpecList::new(
                        idx.iter().map(|&i| self.patterns[i].clone()).collect(),
                    )?);
                }
                // odometer, last slot fastest
                for slot in (0..k).rev() {
                    idx[slot] += 1;
                    if idx[slot] < self.patterns.len() {
                        continue 'tuples;
                    }
                    idx[slot] = 0;
                }
                break;
            }
        }
        Ok(out)
    }
}

/// Ordered compositions of `total` into 1 to `k_max` positive parts, shortest first and
/// then lexicographically.
pub fn compositions(total: usize, k_max: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for first in 1..=left.saturating_sub(parts - 1) {
            acc.push(first);
            go(left - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for k in 1..=k_max {
        go(total, k, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        // C(t-1, k-1) summed over k
        assert_eq!(
            compositions(4, 3),
            vec![
                vec![4],
                vec![1, 3],
                vec![2, 2],
                vec![3, 1],
                vec![1, 1, 2],
                vec![1, 2, 1],
                vec![2, 1, 1],
            ]
        );
        assert_eq!(compositions(7, 3).len(), 1 + 6 + 15);
        assert_eq!(compositions(1, 3), vec![vec![1]]);
        assert!(compositions(0, 3).is_empty());
    }

    #[test]
    fn spec_list_counts() {
        let c = Catalog::default();
        // degrees: three of 1, four of 2, two of 3
        assert_eq!(c.spec_lists(1, 3).unwrap().len(), 3);
        assert_eq!(c.spec_lists(2, 3).unwrap().len(), 4 + 3 * 3);
        assert!(c.spec_lists(0, 3).unwrap().is_empty());
        assert!(c
            .spec_lists(5, 3)
            .unwrap()
            .iter()
            .all(|s| s.degree_sum() == 5 && s.len() >= 2));
        assert_eq!(c.single_graph_patterns().count(), 7);
    }
}
