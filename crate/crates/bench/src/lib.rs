//! Fixed inputs for the criterion benches.

use gfree::graph::make_named;
use gfree::{Graph, NamedGraph};

/// Named graphs the benches run on.
pub fn fixture(name: &str) -> Graph {
    let named: NamedGraph = name.parse().expect("fixture names are valid");
    make_named(&named).expect("fixtures fit the vertex cap")
}

/// `(graph name, spec list)` pairs for the partition bench, each with `Σ d_i = Δ`.
pub const PARTITION_CASES: [(&str, &str); 4] = [
    ("petersen", "K2,K2,K2"),
    ("K3,3,3", "K3,K3,K3"),
    ("C8", "K2,K2"),
    ("petersen", "mindeg>=2,K2"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use gfree::partition::theorem1_partition;

    #[test]
    fn partition_cases_are_admissible() {
        for (g, s) in PARTITION_CASES {
            let h = fixture(g);
            let specs = s.parse().unwrap();
            assert!(
                theorem1_partition(&h, &specs)
                    .unwrap()
                    .certificate()
                    .is_some(),
                "{g} {s}"
            );
        }
    }
}
