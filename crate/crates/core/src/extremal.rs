//! Twin-free graphs whose location-domination number is half their order:
//! the `H_k` and `A_k` families, complete joins of `A_k`'s, attachable gadgets,
//! and the tree family `T` together with its recognizer.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complete_join, Graph, VertexSet, MAX_ORDER};

/// `H_k`, for `k >= 3`: `K_{2,k}` with every edge at one hub subdivided and a
/// pendant leaf on each hub. Order `2k + 4`.
///
/// Labels: `0` is the subdivided hub, `1` the other hub, `2..k+2` the middle
/// vertices `m_i`, `k+2..2k+2` the subdivision vertices `s_i` (so `0 - s_i - m_i - 1`),
/// `2k+2` the leaf on hub 0 and `2k+3` the leaf on hub 1.
pub fn gen_hk(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::invalid("k", k, "H_k needs k >= 3"));
    }
    if 2 * k + 4 > MAX_ORDER {
        return Err(Error::TooManyVertices {
            n: 2 * k + 4,
            max: MAX_ORDER,
        });
    }
    let mut edges = Vec::with_capacity(3 * k + 2);
    for i in 0..k {
        let (m, s) = (2 + i, 2 + k + i);
        edges.extend([(0, s), (s, m), (m, 1)]);
    }
    edges.extend([(0, 2 * k + 2), (1, 2 * k + 3)]);
    Graph::from_edges(2 * k + 4, edges)
}

/// A minimum locating-dominating set of `H_k`: both hubs and all subdivision
/// vertices.
pub fn hk_ld_set(k: usize) -> VertexSet {
    (k + 2..2 * k + 2).chain([0, 1]).collect()
}

/// `A_k`, for `k >= 2`: vertices `x_1..x_{2k}` (labelled `0..2k`) with `x_i x_j`
/// an edge iff `0 < |i - j| <= k - 1`. Co-bipartite with cliques `{x_1..x_k}` and
/// `{x_{k+1}..x_{2k}}`.
pub fn gen_ak(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::invalid("k", k, "A_k needs k >= 2"));
    }
    let n = 2 * k;
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices { n, max: MAX_ORDER });
    }
    let edges = (0..n).flat_map(|i| (i + 1..n.min(i + k)).map(move |j| (i, j)));
    Graph::from_edges(n, edges)
}

/// `{x_1, ..., x_{k-1}} ∪ {x_{2k}}`, a locating-dominating set of `A_k` of size `k`.
pub fn ak_ld_set(k: usize) -> VertexSet {
    (0..k - 1).chain([2 * k - 1]).collect()
}

/// Complete join of `A_k` for each `k` in `ks`, blocks in list order.
pub fn gen_join_of_aks(ks: &[usize]) -> Result<Graph> {
    if ks.is_empty() {
        return Err(Error::EmptyJoin);
    }
    let parts = ks.iter().map(|&k| gen_ak(k)).collect::<Result<Vec<_>>>()?;
    complete_join(&parts)
}

/// A graph with a distinguished link vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    pub link: usize,
}

/// `K_2`, linked at vertex 0.
pub fn gen_attachable_edge() -> Gadget {
    Gadget {
        graph: Graph::complete(2),
        link: 0,
    }
}

/// A star with `p` edges where one edge is subdivided twice and the others once,
/// linked at the center. Order `2p + 2`.
///
/// Labels: center `0`; long branch `0 - 1 - 2 - 3`; short branch `i` (for
/// `1 <= i < p`) is `0 - (2 + 2i) - (3 + 2i)`. For `p = 1` this is the path
/// `0 - 1 - 2 - 3` linked at an end.
pub fn gen_attachable_star(p: usize) -> Result<Gadget> {
    if p < 1 {
        return Err(Error::invalid("p", p, "a star gadget needs p >= 1"));
    }
    let n = 2 * p + 2;
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices { n, max: MAX_ORDER });
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    for i in 1..p {
        edges.extend([(0, 2 + 2 * i), (2 + 2 * i, 3 + 2 * i)]);
    }
    Ok(Gadget {
        graph: Graph::from_edges(n, edges)?,
        link: 0,
    })
}

/// A locating-dominating set of half the order in the star gadget: the center,
/// the middle of the long branch, and the inner vertex of every short branch.
pub fn star_gadget_ld_set(p: usize) -> VertexSet {
    (1..p).map(|i| 2 + 2 * i).chain([0, 2]).collect()
}

/// A host graph with one gadget per host vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachSpec {
    pub host: Graph,
    pub gadgets: Vec<Gadget>,
}

impl AttachSpec {
    pub fn order(&self) -> usize {
        self.host.order()
            + self
                .gadgets
                .iter()
                .map(|g| g.graph.order().saturating_sub(1))
                .sum::<usize>()
    }

    /// Label of vertex `v` of gadget `i` in the assembled graph.
    pub fn label(&self, i: usize, v: usize) -> usize {
        let gadget = &self.gadgets[i];
        if v == gadget.link {
            return i;
        }
        let before: usize = self.gadgets[..i].iter().map(|g| g.graph.order() - 1).sum();
        self.host.order() + before + if v < gadget.link { v } else { v - 1 }
    }
}

/// Identifies the link vertex of gadget `i` with host vertex `i`.
///
/// Labels: host vertices keep `0..h`; the remaining vertices of each gadget follow
/// in gadget order, each gadget's vertices in increasing order (see
/// [`AttachSpec::label`]).
pub fn attach_link(spec: &AttachSpec) -> Result<Graph> {
    let h = spec.host.order();
    if spec.gadgets.len() != h {
        return Err(Error::InvalidAttachSpec(format!(
            "{} gadgets for a host of order {h}",
            spec.gadgets.len()
        )));
    }
    if let Some((i, g)) = spec.gadgets.iter().enumerate().find(|(_, g)| g.link >= g.graph.order()) {
        return Err(Error::InvalidAttachSpec(format!(
            "gadget {i} has link vertex {} but order {}",
            g.link,
            g.graph.order()
        )));
    }
    let n = spec.order();
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices { n, max: MAX_ORDER });
    }
    let mut edges: Vec<(usize, usize)> = spec.host.edges().collect();
    for (i, gadget) in spec.gadgets.iter().enumerate() {
        edges.extend(gadget.graph.edges().map(|(u, v)| (spec.label(i, u), spec.label(i, v))));
    }
    Graph::from_edges(n, edges)
}

/// A sample assembly of attachable graphs: the path on 5 vertices carrying an edge,
/// a 2-star, an edge, a 1-star and a 5-star. Returns the graph and a half-order
/// locating-dominating set.
pub fn sample_attach_assembly() -> (Graph, VertexSet) {
    let mut gadgets = vec![gen_attachable_edge()];
    gadgets.push(gen_attachable_star(2).unwrap());
    gadgets.push(gen_attachable_edge());
    gadgets.push(gen_attachable_star(1).unwrap());
    gadgets.push(gen_attachable_star(5).unwrap());
    let spec = AttachSpec {
        host: Graph::path(5),
        gadgets,
    };
    let g = attach_link(&spec).unwrap();
    // the 2-star is darkened at its short-branch leaf, the others at inner vertices
    let dark: VertexSet = [(1, 2), (1, 5), (3, 2), (4, 2), (4, 4), (4, 6), (4, 8), (4, 10)]
        .into_iter()
        .map(|(i, v)| spec.label(i, v))
        .chain(0..5)
        .collect();
    (g, dark)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

/// Witness that a tree belongs to `T`: its perfect matching and a black/white
/// coloring with one end of each matching edge of each color, where every white
/// vertex is a leaf or has degree 2 and a black neighbor whose partner is a white
/// leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCertificate {
    /// Matching edges `(u, v)` with `u < v`, sorted.
    pub matching: Vec<(usize, usize)>,
    pub color: Vec<Color>,
}

impl TreeCertificate {
    pub fn black(&self) -> VertexSet {
        self.with_color(Color::Black)
    }

    pub fn white(&self) -> VertexSet {
        self.with_color(Color::White)
    }

    fn with_color(&self, c: Color) -> VertexSet {
        self.color
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }

    /// Re-checks every defining condition against `t`.
    pub fn verify(&self, t: &Graph) -> bool {
        let n = t.order();
        if self.color.len() != n || 2 * self.matching.len() != n {
            return false;
        }
        let mut covered = VertexSet::EMPTY;
        for &(u, v) in &self.matching {
            if u >= n || v >= n || !t.has_edge(u, v) || covered.contains(u) || covered.contains(v) {
                return false;
            }
            if self.color[u] == self.color[v] {
                return false;
            }
            covered = covered.with(u).with(v);
        }
        let white = self.white();
        let black = self.black();
        white.iter().all(|w| {
            t.degree(w) == 1
                || (t.degree(w) == 2
                    && (t.neighbors(w) & black)
                        .iter()
                        .any(|b| (t.neighbors(b) & white).iter().any(|l| t.degree(l) == 1)))
        })
    }
}

/// The perfect matching of a forest, found by repeatedly matching a leaf to its
/// neighbor. A forest has at most one perfect matching.
pub fn tree_perfect_matching(t: &Graph) -> Option<Vec<(usize, usize)>> {
    let n = t.order();
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut alive = t.vertex_set();
    let mut queue: VecDeque<usize> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut matching = Vec::with_capacity(n / 2);
    while let Some(leaf) = queue.pop_front() {
        if !alive.contains(leaf) {
            continue;
        }
        let partner = (t.neighbors(leaf) & alive).min()?;
        alive = alive.without(leaf).without(partner);
        matching.push((leaf.min(partner), leaf.max(partner)));
        for q in t.neighbors(partner) & alive {
            degree[q] -= 1;
            if degree[q] <= 1 {
                queue.push_back(q);
            }
        }
    }
    if !alive.is_empty() {
        return None;
    }
    matching.sort_unstable();
    Some(matching)
}

/// Membership test for `T`; `Ok(None)` for trees outside the family.
///
/// The coloring is a choice, per matching edge, of its white end. A white vertex
/// of degree 2 forces its non-partner neighbor `z` to be black and `z`'s partner
/// to be a leaf, which gives a 2-SAT-like system solved by backtracking with unit
/// propagation. White ends are tried smallest vertex first.
pub fn is_in_family_t(t: &Graph) -> Result<Option<TreeCertificate>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let Some(matching) = tree_perfect_matching(t) else {
        return Ok(None);
    };
    let n = t.order();
    let mut partner = vec![0; n];
    let mut edge_of = vec![0; n];
    for (i, &(u, v)) in matching.iter().enumerate() {
        partner[u] = v;
        partner[v] = u;
        edge_of[u] = i;
        edge_of[v] = i;
    }
    let solver = Coloring {
        t,
        matching: &matching,
        partner: &partner,
        edge_of: &edge_of,
    };
    let Some(white_ends) = solver.solve() else {
        return Ok(None);
    };
    let mut color = vec![Color::Black; n];
    for w in white_ends {
        color[w] = Color::White;
    }
    let cert = TreeCertificate { matching, color };
    debug_assert!(cert.verify(t));
    Ok(Some(cert))
}

struct Coloring<'a> {
    t: &'a Graph,
    matching: &'a [(usize, usize)],
    partner: &'a [usize],
    edge_of: &'a [usize],
}

impl Coloring<'_> {
    /// If `w` may be white, the vertex that must then be black (if any).
    fn white_requirement(&self, w: usize) -> Option<Option<usize>> {
        match self.t.degree(w) {
            1 => Some(None),
            2 => {
                let z = (self.t.neighbors(w).without(self.partner[w])).min()?;
                (self.t.degree(self.partner[z]) == 1).then_some(Some(z))
            }
            _ => None,
        }
    }

    fn solve(&self) -> Option<Vec<usize>> {
        let mut white: Vec<Option<usize>> = vec![None; self.matching.len()];
        for (i, &(u, v)) in self.matching.iter().enumerate() {
            match (self.white_requirement(u).is_some(), self.white_requirement(v).is_some()) {
                (false, false) => return None,
                (true, false) => self.assign(&mut white, i, u)?,
                (false, true) => self.assign(&mut white, i, v)?,
                (true, true) => {}
            }
        }
        self.search(white)
    }

    /// Sets `w` white on edge `i` and propagates forced black vertices.
    fn assign(&self, white: &mut [Option<usize>], i: usize, w: usize) -> Option<()> {
        let mut pending = vec![(i, w)];
        while let Some((e, w)) = pending.pop() {
            match white[e] {
                Some(x) if x == w => continue,
                Some(_) => return None,
                None => white[e] = Some(w),
            }
            if let Some(z) = self.white_requirement(w)? {
                // z black means its partner is white
                pending.push((self.edge_of[z], self.partner[z]));
            }
        }
        Some(())
    }

    fn search(&self, white: Vec<Option<usize>>) -> Option<Vec<usize>> {
        let Some(i) = white.iter().position(Option::is_none) else {
            return Some(white.into_iter().flatten().collect());
        };
        let (u, v) = self.matching[i];
        for w in [u, v] {
            if self.white_requirement(w).is_none() {
                continue;
            }
            let mut next = white.clone();
            if self.assign(&mut next, i, w).is_some() {
                if let Some(found) = self.search(next) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// A reference order-20 member of the family `T`. Black vertices `b_1..b_10` are
/// `0..10`, white vertices `w_1..w_10` are `10..20`, and the matching is
/// `b_i w_i`.
pub fn sample_family_t_tree() -> Graph {
    let b = |i: usize| i - 1;
    let w = |i: usize| 9 + i;
    let mut edges: Vec<(usize, usize)> = (1..=10).map(|i| (b(i), w(i))).collect();
    edges.extend([
        (b(1), b(2)),
        (b(1), b(3)),
        (b(1), w(4)),
        (b(1), w(5)),
        (b(6), w(3)),
        (b(6), b(7)),
        (b(8), b(5)),
        (b(5), b(9)),
        (w(9), b(10)),
    ]);
    Graph::from_edges(20, edges).expect("sample tree is well formed")
}

/// A pseudo-random member of `T` of the given even order, deterministic in `seed`.
///
/// Starts from `K_2` (black `0`, white `1`) and repeatedly applies one of two
/// growth rules, each adding a matched black/white pair:
/// * hang a new black vertex with a new white leaf off an existing black vertex;
/// * hang a new white vertex with a new black leaf off a black vertex whose
///   partner is a white leaf.
///
/// Neither rule changes the degree of a white vertex or removes a white leaf, so
/// membership is preserved. New vertices take the next free labels.
pub fn gen_family_t_tree(size: usize, seed: u64) -> Result<Graph> {
    if size < 2 || size % 2 == 1 {
        return Err(Error::invalid("size", size, "order must be even and at least 2"));
    }
    if size > MAX_ORDER {
        return Err(Error::TooManyVertices {
            n: size,
            max: MAX_ORDER,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1)];
    let mut black = vec![0];
    // black vertices whose partner is a white leaf
    let mut anchored = vec![0];
    let mut n = 2;
    while n < size {
        let (new_b, new_w) = (n, n + 1);
        if rng.gen_bool(0.5) {
            let &host = black.choose(&mut rng).unwrap();
            edges.extend([(host, new_b), (new_b, new_w)]);
            anchored.push(new_b);
        } else {
            let &host = anchored.choose(&mut rng).unwrap();
            edges.extend([(host, new_w), (new_w, new_b)]);
        }
        black.push(new_b);
        n += 2;
    }
    Graph::from_edges(size, edges)
}
