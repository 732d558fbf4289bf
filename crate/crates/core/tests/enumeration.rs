mod common;

use locdom::enumerate::{canonical_form, connected_graphs, free_trees, tree_code};
use locdom::graph6::to_graph6;

#[test]
fn fixtures_match_oeis_counts_and_enumerator() {
    // OEIS A001349
    let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for n in 1..=8 {
        let fixture = common::connected_fixture(n);
        assert_eq!(fixture.len(), expected[n - 1], "order {n}");
        assert!(fixture.iter().all(|g| g.order() == n && g.is_connected()));
        let codes: std::collections::HashSet<u128> = fixture.iter().map(|g| canonical_form(g).0).collect();
        assert_eq!(
            codes.len(),
            fixture.len(),
            "order {n} has duplicate isomorphism classes"
        );
        if n <= 7 {
            let fresh: Vec<String> = connected_graphs(n).iter().map(|g| to_graph6(g).unwrap()).collect();
            let stored: Vec<String> = fixture.iter().map(|g| to_graph6(g).unwrap()).collect();
            assert_eq!(fresh, stored, "order {n}");
        }
    }
}

#[test]
fn tree_counts_match_oeis() {
    // OEIS A000055
    let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
    for n in 1..=12 {
        let trees = free_trees(n);
        assert_eq!(trees.len(), expected[n - 1], "order {n}");
        assert!(trees.iter().all(|t| t.is_tree() && t.order() == n));
        let codes: std::collections::HashSet<String> = trees.iter().map(tree_code).collect();
        assert_eq!(codes.len(), trees.len());
    }
}
