//! Seeded random graphs for property sweeps.

use rand::Rng;

use crate::extremal::{gen_attachable_edge, gen_attachable_star, AttachSpec, Gadget};
use crate::graph::{is_twin_free, Graph, VertexSet};

/// `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("order within limits")
}

/// `G(n, 1/2)` with every isolated vertex then joined to a random other vertex.
/// Needs `n >= 2`.
pub fn random_graph_without_isolated<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "a graph without isolated vertices needs two vertices");
    let g = random_graph(n, 0.5, rng);
    let mut edges: Vec<_> = g.edges().collect();
    for v in g.isolated_vertices() {
        let mut u = rng.gen_range(0..n - 1);
        if u >= v {
            u += 1;
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).expect("order within limits")
}

fn retry<R: Rng>(rng: &mut R, mut attempt: impl FnMut(&mut R) -> Graph) -> Graph {
    loop {
        let g = attempt(rng);
        if g.isolated_vertices().is_empty() && is_twin_free(&g) {
            return g;
        }
    }
}

/// A twin-free split graph of order `n >= 4` without isolated vertices: a clique
/// on `0..c` for random `c`, an independent set on `c..n`, and random cross edges.
/// Resamples until the result qualifies.
pub fn random_twin_free_split<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(
        n >= 4,
        "no twin-free split graph of this order without isolated vertices"
    );
    retry(rng, |rng| {
        let c = rng.gen_range(1..n);
        let p = rng.gen_range(0.2..0.8);
        let mut edges: Vec<_> = (0..c).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for u in 0..c {
            for v in c..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("order within limits")
    })
}

/// A twin-free co-bipartite graph of order `n >= 4` without isolated vertices:
/// cliques on `0..a` and `a..n` with random cross edges.
pub fn random_twin_free_cobipartite<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4, "no twin-free co-bipartite graph of this order");
    retry(rng, |rng| {
        let a = rng.gen_range(1..n);
        let p = rng.gen_range(0.2..0.8);
        let within = |lo: usize, hi: usize| (lo..hi).flat_map(move |j| (lo..j).map(move |i| (i, j)));
        let mut edges: Vec<_> = within(0, a).chain(within(a, n)).collect();
        for u in 0..a {
            for v in a..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("order within limits")
    })
}

/// A host without isolated vertices of order `host_order` and a random choice of
/// built-in gadgets (edges and subdivided stars) keeping the total order at most
/// `max_order`. Needs `2 * host_order <= max_order`.
pub fn random_attach_spec<R: Rng>(host_order: usize, max_order: usize, rng: &mut R) -> AttachSpec {
    assert!(host_order >= 2 && 2 * host_order <= max_order);
    let host = random_graph_without_isolated(host_order, rng);
    let mut gadgets: Vec<Gadget> = (0..host_order).map(|_| gen_attachable_edge()).collect();
    let mut budget = max_order - 2 * host_order;
    let mut slots: Vec<usize> = (0..host_order).collect();
    while budget >= 2 && !slots.is_empty() && rng.gen_bool(0.7) {
        let slot = slots.swap_remove(rng.gen_range(0..slots.len()));
        // star(p) adds 2p + 1 vertices, the edge it replaces only 1
        let max_p = budget / 2;
        let p = rng.gen_range(1..=max_p);
        gadgets[slot] = gen_attachable_star(p).expect("small star");
        budget -= 2 * p;
    }
    AttachSpec { host, gadgets }
}

/// A uniformly random subset of `0..n`.
pub fn random_subset<R: Rng>(n: usize, rng: &mut R) -> VertexSet {
    VertexSet::from_bits(rng.gen::<u64>()) & VertexSet::full(n)
}
