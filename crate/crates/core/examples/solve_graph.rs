//! Exact domination and location-domination numbers of a few small graphs, with
//! their twins and minimum witnesses.
//!
//!     cargo run --example solve_graph

use locdom::domination::{gamma_l_exact, is_locating_dominating, min_dominating_exact};
use locdom::graph::find_twins;
use locdom::Graph;

fn main() {
    let graphs = [
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("K4", Graph::complete(4)),
        ("K1,3", Graph::star(3)),
        ("Petersen", petersen()),
    ];
    for (name, g) in graphs {
        let dom = min_dominating_exact(&g);
        let opt = gamma_l_exact(&g);
        assert!(is_locating_dominating(&g, opt.witness).unwrap());
        let twins: Vec<String> = find_twins(&g)
            .iter()
            .map(|t| format!("{}~{} {}", t.u, t.v, t.kind))
            .collect();
        println!(
            "{name:9} n = {:2}  gamma = {} {}  gamma_L = {} {}  twins: {}",
            g.order(),
            dom.len(),
            dom,
            opt.value,
            opt.witness,
            if twins.is_empty() {
                "none".into()
            } else {
                twins.join(", ")
            }
        );
    }
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}
