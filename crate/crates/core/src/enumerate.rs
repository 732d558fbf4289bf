//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Connected graphs are built by vertex addition (every connected graph has a
//! vertex whose removal keeps it connected) and deduplicated by a canonical code;
//! free trees are built by leaf addition and deduplicated by their center-rooted
//! AHU encoding. Practical up to order 8 for graphs and about 16 for trees.

use std::collections::{BTreeMap, HashSet};

use crate::graph::{Graph, VertexSet};

/// Largest order [`canonical_form`] accepts (the code is a `u128` over vertex pairs).
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Color refinement to the coarsest equitable partition finer than `colors`.
/// Colors are renumbered `0..k` by sorting on (old color, neighbor color multiset),
/// which does not depend on the vertex labels.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.order();
    let mut cells = colors.iter().copied().collect::<HashSet<_>>().len();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
        };
        for v in 0..n {
            colors[v] = ranks[&keys[v]];
        }
        let now = ranks.len();
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<(u128, Vec<usize>)>) {
    let n = g.order();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let mut order = vec![0; n];
        for v in 0..n {
            order[colors[v]] = v;
        }
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let mut next: Vec<usize> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + (u != v) as usize)
            .collect();
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Canonical relabeling by exhaustive individualization-refinement: the largest
/// adjacency code over all leaves of the search tree. Two graphs are isomorphic iff
/// their codes (and orders) agree. Cost grows with the automorphism group, which is
/// fine at the orders enumerated here.
pub fn canonical_form(g: &Graph) -> (u128, Graph) {
    let n = g.order();
    assert!(
        n <= MAX_CANONICAL_ORDER,
        "canonical form supports up to {MAX_CANONICAL_ORDER} vertices"
    );
    let mut colors = vec![0; n];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    let (code, order) = best.unwrap_or((0, Vec::new()));
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (code, g.relabel(&perm).expect("order is a permutation"))
}

/// All connected graphs of order `n`, one per isomorphism class, in canonical
/// labeling, sorted by canonical code.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    match n {
        0 => return vec![],
        1 => return vec![Graph::complete(1)],
        _ => {}
    }
    let smaller = connected_graphs(n - 1);
    let mut found: BTreeMap<u128, Graph> = BTreeMap::new();
    for g in &smaller {
        for mask in 1u64..1 << (n - 1) {
            let nb = VertexSet::from_bits(mask);
            let edges = g.edges().chain(nb.iter().map(|u| (u, n - 1)));
            let h = Graph::from_edges(n, edges).expect("order within limits");
            let (code, canon) = canonical_form(&h);
            found.entry(code).or_insert(canon);
        }
    }
    found.into_values().collect()
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in t.neighbors(leaf) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_code(t, u, Some(v)))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Isomorphism invariant of a tree that separates non-isomorphic trees.
pub fn tree_code(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, None))
        .min()
        .unwrap_or_default()
}

/// All free trees of order `n`, one per isomorphism class, sorted by their code.
pub fn free_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return vec![],
        1 => return vec![Graph::complete(1)],
        _ => {}
    }
    let mut found: BTreeMap<String, Graph> = BTreeMap::new();
    for t in free_trees(n - 1) {
        for v in t.vertices() {
            let grown = Graph::from_edges(n, t.edges().chain([(v, n - 1)])).expect("order within limits");
            found.entry(tree_code(&grown)).or_insert(grown);
        }
    }
    found.into_values().collect()
}
