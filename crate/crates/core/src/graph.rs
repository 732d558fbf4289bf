//! Immutable simple graphs on at most 64 vertices, bitset vertex sets, twin
//! detection, class recognition and the compositions used by the extremal
//! constructions.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can have; vertex sets are single machine words.
pub const MAX_ORDER: usize = 64;

/// A set of vertices `0..64`, stored as a bitmask.
///
/// The ordering is numeric on the mask, so "lexicographically smallest" witnesses
/// throughout the crate are the ones with the smallest `bits()`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_ORDER, "vertex {v} does not fit in a VertexSet");
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet(self.0 ^ rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// An undirected simple graph on vertices `0..n`.
///
/// The adjacency is validated on construction (symmetric, loop-free, in range)
/// and never changes afterwards; every operation returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from per-vertex neighborhoods, checking every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let all = VertexSet::full(n);
        for (u, &nb) in adj.iter().enumerate() {
            if let Some(v) = (nb - all).min() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if nb.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = nb.iter().find(|&v| !adj[v].contains(u)) {
                return Err(Error::Asymmetric { u, v });
            }
        }
        Ok(Graph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let all = VertexSet::full(n);
        let adj = (0..n).map(|v| all.without(v)).collect();
        Graph::from_adjacency(adj).expect("complete graph order within MAX_ORDER")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path order within MAX_ORDER")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle order within MAX_ORDER")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star order within MAX_ORDER")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N[S]`, the union of closed neighborhoods of members of `s`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v)))
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Fails with [`Error::VertexOutOfRange`] if `s` mentions a vertex `>= n`.
    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertex_set()).min() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            }),
            None => Ok(()),
        }
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]) - seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }

    /// The order-0 graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(0) == self.vertex_set()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count() + 1 == self.order() && self.is_connected()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        Graph {
            adj: self.vertices().map(|v| (all - self.adj[v]).without(v)).collect(),
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::invalid("perm", p, "not a permutation of the vertex set"));
            }
            seen.insert(p);
        }
        if perm.len() != n {
            return Err(Error::invalid(
                "perm",
                perm.len(),
                "length differs from the graph order",
            ));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::TooManyVertices { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// Complete join of `graphs`: their disjoint union, blocks in list order, plus
/// every edge between vertices of different summands.
pub fn complete_join(graphs: &[Graph]) -> Result<Graph> {
    if graphs.is_empty() {
        return Err(Error::EmptyJoin);
    }
    let n: usize = graphs.iter().map(Graph::order).sum();
    check_order(n)?;
    let all = VertexSet::full(n);
    let mut adj = Vec::with_capacity(n);
    let mut offset = 0;
    for g in graphs {
        let block = VertexSet::full(offset + g.order()) - VertexSet::full(offset);
        for v in g.vertices() {
            let inside = VertexSet::from_bits(g.neighbors(v).bits() << offset);
            adj.push(inside | (all - block));
        }
        offset += g.order();
    }
    Graph::from_adjacency(adj)
}

/// Corona of `g`: vertex `v` keeps its label and gains the pendant leaf `n + v`.
pub fn corona(g: &Graph) -> Result<Graph> {
    let n = g.order();
    Graph::from_edges(2 * n, g.edges().chain((0..n).map(|v| (v, n + v))))
}

/// Disjoint union, blocks in list order.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    let n: usize = graphs.iter().map(Graph::order).sum();
    check_order(n)?;
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in graphs {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.order();
    }
    Graph::from_edges(n, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwinKind {
    /// `N(u) = N(v)`
    Open,
    /// `N[u] = N[v]`
    Closed,
}

impl fmt::Display for TwinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwinKind::Open => "open",
            TwinKind::Closed => "closed",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    pub kind: TwinKind,
}

/// All twin pairs `(u, v)` with `u < v`, in lexicographic order.
///
/// A pair cannot be both open and closed twins: closed twins are adjacent and
/// open twins are not.
pub fn find_twins(g: &Graph) -> Vec<TwinPair> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if g.neighbors(u) == g.neighbors(v) {
                out.push(TwinPair {
                    u,
                    v,
                    kind: TwinKind::Open,
                });
            } else if g.closed_neighbors(u) == g.closed_neighbors(v) {
                out.push(TwinPair {
                    u,
                    v,
                    kind: TwinKind::Closed,
                });
            }
        }
    }
    out
}

pub fn first_twin_pair(g: &Graph) -> Option<TwinPair> {
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if g.neighbors(u) == g.neighbors(v) {
                return Some(TwinPair {
                    u,
                    v,
                    kind: TwinKind::Open,
                });
            }
            if g.closed_neighbors(u) == g.closed_neighbors(v) {
                return Some(TwinPair {
                    u,
                    v,
                    kind: TwinKind::Closed,
                });
            }
        }
    }
    None
}

pub fn is_twin_free(g: &Graph) -> bool {
    first_twin_pair(g).is_none()
}

/// Fails unless `g` is twin-free and has no isolated vertex, the standing
/// hypothesis of every upper-bound construction.
pub fn require_twin_free_without_isolated(g: &Graph) -> Result<()> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(Error::IsolatedVertex(isolated));
    }
    if let Some(TwinPair { u, v, kind }) = first_twin_pair(g) {
        return Err(Error::Twins { u, v, kind });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_split: bool,
    pub is_cobipartite: bool,
    pub split_partition: Option<SplitPartition>,
    /// Two cliques covering the vertex set; the first contains the smallest vertex.
    pub cobip_partition: Option<(VertexSet, VertexSet)>,
}

pub fn classify(g: &Graph) -> GraphClass {
    let split_partition = split_partition(g);
    let cobip_partition = two_coloring(&g.complement());
    GraphClass {
        is_tree: g.is_tree(),
        is_bipartite: two_coloring(g).is_some(),
        is_split: split_partition.is_some(),
        is_cobipartite: cobip_partition.is_some(),
        split_partition,
        cobip_partition,
    }
}

/// Breadth-first 2-coloring, roots taken in increasing vertex order and colored
/// into the first side. `None` if `g` has an odd cycle.
pub fn two_coloring(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.order();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let first: VertexSet = (0..n).filter(|&v| side[v] == Some(false)).collect();
    Some((first, g.vertex_set() - first))
}

/// Split recognition from the degree sequence (Hammer–Simeone).
///
/// With degrees sorted non-increasingly, `m = max { i : d_i >= i - 1 }`; the graph is
/// split iff `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the `m` vertices of
/// largest degree form a clique and the rest an independent set. Ties are broken by
/// vertex index.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = degrees
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique: VertexSet = order[..m].iter().copied().collect();
    let part = SplitPartition {
        clique,
        independent: g.vertex_set() - clique,
    };
    debug_assert!(g.is_clique(part.clique) && g.is_independent(part.independent));
    Some(part)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_twins(g: &Graph) -> Vec<TwinPair> {
        let mut out = Vec::new();
        for u in 0..g.order() {
            for v in 0..g.order() {
                if u >= v {
                    continue;
                }
                let open = (0..g.order()).all(|w| g.has_edge(u, w) == g.has_edge(v, w));
                let closed = (0..g.order()).all(|w| (w == u || g.has_edge(u, w)) == (w == v || g.has_edge(v, w)));
                if open {
                    out.push(TwinPair {
                        u,
                        v,
                        kind: TwinKind::Open,
                    });
                } else if closed {
                    out.push(TwinPair {
                        u,
                        v,
                        kind: TwinKind::Closed,
                    });
                }
            }
        }
        out
    }

    #[test]
    fn twins_small() {
        assert_eq!(
            find_twins(&Graph::complete(2)),
            vec![TwinPair {
                u: 0,
                v: 1,
                kind: TwinKind::Closed
            }]
        );
        assert_eq!(
            find_twins(&Graph::path(3)),
            vec![TwinPair {
                u: 0,
                v: 2,
                kind: TwinKind::Open
            }]
        );
        assert_eq!(find_twins(&Graph::path(4)), brute_twins(&Graph::path(4)));
        assert!(find_twins(&Graph::path(4)).is_empty());
        assert!(is_twin_free(&Graph::cycle(5)));
        assert!(!is_twin_free(&Graph::cycle(4)));
    }

    #[test]
    fn twins_match_brute_force() {
        for bits in 0u32..(1 << 10) {
            let edges = (0..5)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, e)| e);
            let g = Graph::from_edges(5, edges).unwrap();
            assert_eq!(find_twins(&g), brute_twins(&g));
        }
    }

    #[test]
    fn classify_p4() {
        let c = classify(&Graph::path(4));
        assert!(c.is_tree && c.is_bipartite && c.is_split && c.is_cobipartite);
        assert_eq!(
            c.split_partition,
            Some(SplitPartition {
                clique: [1, 2].into(),
                independent: [0, 3].into()
            })
        );
        assert_eq!(c.cobip_partition, Some(([0, 1].into(), [2, 3].into())));
    }

    #[test]
    fn classify_k3_and_c5() {
        let c = classify(&Graph::complete(3));
        assert!(c.is_split && c.is_cobipartite && !c.is_bipartite && !c.is_tree);
        assert_eq!(
            c.split_partition,
            Some(SplitPartition {
                clique: [0, 1, 2].into(),
                independent: VertexSet::EMPTY
            })
        );

        let c5 = classify(&Graph::cycle(5));
        assert!(!c5.is_split && !c5.is_cobipartite && !c5.is_bipartite && !c5.is_tree);
    }

    fn brute_is_split(g: &Graph) -> bool {
        (0u64..1 << g.order()).any(|m| {
            let k = VertexSet::from_bits(m);
            g.is_clique(k) && g.is_independent(g.vertex_set() - k)
        })
    }

    fn brute_is_cobipartite(g: &Graph) -> bool {
        (0u64..1 << g.order()).any(|m| {
            let k = VertexSet::from_bits(m);
            g.is_clique(k) && g.is_clique(g.vertex_set() - k)
        })
    }

    #[test]
    fn recognition_matches_brute_force_on_order_6() {
        for bits in 0u32..(1 << 15) {
            let edges = (0..6)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, e)| e);
            let g = Graph::from_edges(6, edges).unwrap();
            let c = classify(&g);
            assert_eq!(c.is_split, brute_is_split(&g), "{g:?}");
            assert_eq!(c.is_cobipartite, brute_is_cobipartite(&g), "{g:?}");
            if let Some(p) = c.split_partition {
                assert!(g.is_clique(p.clique) && g.is_independent(p.independent));
                assert_eq!(p.clique | p.independent, g.vertex_set());
            }
            if let Some((a, b)) = c.cobip_partition {
                assert!(g.is_clique(a) && g.is_clique(b) && a.is_disjoint(b));
                assert_eq!(a | b, g.vertex_set());
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3).unwrap());
        let c = Graph::path(4).complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
        // 2 - 0 - 3 - 1 is a path
        assert_eq!(c.relabel(&[1, 3, 0, 2]).unwrap(), Graph::path(4));
    }

    #[test]
    fn join_and_corona() {
        let k1 = Graph::complete(1);
        assert_eq!(complete_join(&[k1.clone(), k1]).unwrap(), Graph::complete(2));
        let k2 = Graph::complete(2);
        assert_eq!(complete_join(&[k2.clone(), k2]).unwrap(), Graph::complete(4));
        assert_eq!(complete_join(&[]), Err(Error::EmptyJoin));

        assert_eq!(corona(&Graph::complete(1)).unwrap(), Graph::complete(2));
        // 2 - 0 - 1 - 3
        let p = corona(&Graph::complete(2)).unwrap();
        assert_eq!(p.relabel(&[1, 2, 0, 3]).unwrap(), Graph::path(4));
        assert_eq!(corona(&Graph::cycle(4)).unwrap().order(), 8);
    }

    #[test]
    fn rejects_bad_adjacency() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_adjacency(vec![VertexSet::from([1]), VertexSet::EMPTY]),
            Err(Error::Asymmetric { u: 0, v: 1 })
        );
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices { .. })));
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from([3, 0, 5]);
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.to_string(), "{0, 3, 5}");
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.max(), Some(5));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3,5]");
    }
}
