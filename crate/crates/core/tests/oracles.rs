mod common;

use common::*;
use gfree::extremal::max_free_size;
use gfree::graph::{enumerate_connected_graphs, parse_graph6, write_graph6};
use gfree::partition::chi_free;
use gfree::patterns::{clique_number, degeneracy, is_free};
use gfree::verify::{corpus, Catalog};
use gfree::{Graph, NamedGraph, Pattern, VertexSet};

fn named(s: &str) -> Graph {
    gfree::graph::make_named(&s.parse::<NamedGraph>().unwrap()).unwrap()
}

/// Oracle for `is_free` on any catalog pattern.
fn naive_free(h: &Graph, s: VertexSet, p: &Pattern) -> bool {
    match p.single_graph() {
        Some(g) => !naive_contains(h, s, &g),
        None => !naive_has_min_degree_subgraph(h, s, p.min_degree()),
    }
}

#[test]
fn enumeration_is_complete_and_isomorph_free() {
    // frozen from the brute-force run below
    const COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];
    for n in 1..=7 {
        let perms = permutations(n);
        let graphs = enumerate_connected_graphs(n).unwrap();
        assert_eq!(graphs.len(), COUNTS[n - 1], "n = {n}");

        let mut seen = std::collections::BTreeSet::new();
        let mut labelled_from_classes = 0usize;
        for g in &graphs {
            assert_eq!(g.order(), n);
            assert!(naive_connected(g));
            let (canon, auts) = naive_canon(g, &perms);
            assert!(seen.insert(canon), "duplicate class at n = {n}");
            labelled_from_classes += perms.len() / auts;
        }

        let m = n * (n - 1) / 2;
        let labelled = (0u64..1 << m)
            .filter(|&b| naive_connected(&graph_from_bits(n, b)))
            .count();
        // orbit-stabiliser: the classes account for every labelled connected graph
        assert_eq!(labelled_from_classes, labelled, "n = {n}");
    }
}

#[test]
fn graph6_matches_reference_encoder() {
    for g in corpus(7).unwrap() {
        assert_eq!(write_graph6(&g).unwrap(), reference_graph6(&g));
    }
    let hand = [
        (named("K2"), "A_"),
        (named("P3"), "Bg"),
        (named("C5"), "Dhc"),
        (named("K4"), "C~"),
        (Graph::empty(5).unwrap(), "D??"),
    ];
    for (g, s) in hand {
        assert_eq!(reference_graph6(&g), s);
        assert_eq!(write_graph6(&g).unwrap(), s);
        assert_eq!(parse_graph6(s).unwrap(), g);
    }
}

#[test]
fn containment_matches_naive_search() {
    let mut patterns = Catalog::default().patterns;
    patterns.push(Pattern::star(3).unwrap());
    for h in corpus(6).unwrap() {
        for s in std::iter::once(VertexSet::EMPTY).chain(subsets(h.vertices())) {
            for p in &patterns {
                assert_eq!(is_free(&h, s, p), naive_free(&h, s, p), "{h:?} {s} {p}");
            }
        }
    }
}

#[test]
fn max_free_size_matches_subset_search() {
    let patterns = Catalog::default().patterns;
    for h in corpus(6).unwrap() {
        for p in &patterns {
            let (size, witness) = max_free_size(&h, p).unwrap();
            assert_eq!(
                size,
                naive_max_subset(&h, |s| naive_free(&h, s, p)),
                "{h:?} {p}"
            );
            assert_eq!(witness.len(), size);
            assert!(naive_free(&h, witness, p));
        }
    }
}

#[test]
fn chi_free_matches_colouring_search() {
    let patterns = Catalog::default().patterns;
    for h in corpus(5).unwrap() {
        for p in &patterns {
            let (chi, classes) = chi_free(&h, p).unwrap();
            assert_eq!(chi, naive_chi(&h, |s| naive_free(&h, s, p)), "{h:?} {p}");
            assert_eq!(classes.len(), chi);
        }
    }
    assert_eq!(chi_free(&named("K7"), &"K3".parse().unwrap()).unwrap().0, 4);
}

#[test]
fn clique_and_degeneracy_match_brute_force() {
    for h in corpus(6).unwrap() {
        let omega = naive_max_subset(&h, |s| {
            let v = s.to_vec();
            v.iter()
                .all(|&a| v.iter().all(|&b| a == b || h.has_edge(a, b)))
        });
        assert_eq!(clique_number(&h).unwrap(), omega);
        // H is k-degenerate iff every nonempty subset has a vertex of degree ≤ k
        let (k, _) = degeneracy(&h, h.vertices()).unwrap();
        let naive_k = subsets(h.vertices())
            .map(|t| {
                t.iter()
                    .map(|v| t.iter().filter(|&u| h.has_edge(u, v)).count())
                    .min()
                    .unwrap()
            })
            .max()
            .unwrap();
        assert_eq!(k, naive_k, "{h:?}");
    }
}
