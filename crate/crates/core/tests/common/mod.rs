//! Brute-force reference implementations shared by the integration tests. None of these
//! call into the crate's algorithms; they only read adjacency through `has_edge`.

#![allow(dead_code)]

use gfree::{Graph, VertexSet};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Upper-triangle adjacency bits in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
pub fn triangle_bits(n: usize, adj: impl Fn(usize, usize) -> bool) -> u64 {
    let mut bits = 0u64;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if adj(i, j) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Smallest triangle-bit pattern over all relabellings, with the automorphism count.
pub fn naive_canon(g: &Graph, perms: &[Vec<usize>]) -> (u64, usize) {
    let n = g.order();
    let mut best = u64::MAX;
    let mut auts = 0;
    let own = triangle_bits(n, |i, j| g.has_edge(i, j));
    for p in perms {
        let b = triangle_bits(n, |i, j| g.has_edge(p[i], p[j]));
        best = best.min(b);
        if b == own {
            auts += 1;
        }
    }
    (best, auts)
}

pub fn naive_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (v, s) in seen.iter_mut().enumerate() {
            if g.has_edge(u, v) && !*s {
                *s = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// graph6 written straight from the format description, for n ≤ 62.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((v + 63) as char);
    }
    s
}

/// Does `H[s]` contain `pattern` as a (not necessarily induced) subgraph? Tries every
/// injective map.
pub fn naive_contains(h: &Graph, s: VertexSet, pattern: &Graph) -> bool {
    let verts = s.to_vec();
    let k = pattern.order();
    fn go(h: &Graph, pat: &Graph, verts: &[usize], map: &mut Vec<usize>, k: usize) -> bool {
        let i = map.len();
        if i == k {
            return true;
        }
        for &v in verts {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| !pat.has_edge(i, j) || h.has_edge(map[j], v)) {
                map.push(v);
                if go(h, pat, verts, map, k) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    k <= verts.len() && go(h, pattern, &verts, &mut Vec::new(), k)
}

/// Nonempty subsets of `s`.
pub fn subsets(s: VertexSet) -> impl Iterator<Item = VertexSet> {
    let verts = s.to_vec();
    (1u64..1 << verts.len()).map(move |m| {
        verts
            .iter()
            .enumerate()
            .filter(|&(i, _)| m >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

fn naive_degree_in(h: &Graph, v: usize, t: VertexSet) -> usize {
    t.iter().filter(|&u| h.has_edge(u, v)).count()
}

/// Some nonempty `T ⊆ s` with every vertex of `H[T]` of degree at least `p`.
pub fn naive_has_min_degree_subgraph(h: &Graph, s: VertexSet, p: usize) -> bool {
    subsets(s).any(|t| t.iter().all(|v| naive_degree_in(h, v, t) >= p))
}

/// Cycle detection by union-find over the edges of `H[s]`.
pub fn naive_acyclic(h: &Graph, s: VertexSet) -> bool {
    let mut parent: Vec<usize> = (0..h.order()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let verts = s.to_vec();
    for (a, &u) in verts.iter().enumerate() {
        for &v in &verts[a + 1..] {
            if h.has_edge(u, v) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    return false;
                }
                parent[ru] = rv;
            }
        }
    }
    true
}

pub fn naive_independent(h: &Graph, s: VertexSet) -> bool {
    let v = s.to_vec();
    v.iter().all(|&a| v.iter().all(|&b| !h.has_edge(a, b)))
}

pub fn naive_max_degree_in(h: &Graph, s: VertexSet) -> usize {
    s.iter()
        .map(|v| naive_degree_in(h, v, s))
        .max()
        .unwrap_or(0)
}

/// Largest subset of `V(H)` satisfying `ok`.
pub fn naive_max_subset(h: &Graph, ok: impl Fn(VertexSet) -> bool) -> usize {
    std::iter::once(VertexSet::EMPTY)
        .chain(subsets(h.vertices()))
        .filter(|&s| ok(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Least `k` such that some map `V → 0..k` has every colour class satisfying `ok`.
pub fn naive_chi(h: &Graph, ok: impl Fn(VertexSet) -> bool) -> usize {
    let n = h.order();
    for k in 1..=n {
        let mut colour = vec![0usize; n];
        loop {
            let classes: Vec<VertexSet> = (0..k)
                .map(|c| (0..n).filter(|&v| colour[v] == c).collect())
                .collect();
            if classes.iter().all(|&c| ok(c)) {
                return k;
            }
            // odometer over colourings
            let mut i = 0;
            while i < n {
                colour[i] += 1;
                if colour[i] < k {
                    break;
                }
                colour[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}
