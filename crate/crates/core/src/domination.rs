//! Verifiers and exact solvers for domination, location and location-domination.
//!
//! A vertex `v` outside a set `S` has *signature* `N(v) ∩ S`. `S` is locating when
//! all outside signatures are pairwise distinct, dominating when none is empty, and
//! locating-dominating when both hold.
//!
//! The exact solvers enumerate subsets by increasing cardinality, each cardinality
//! in increasing bitmask order, so the witness returned is always the numerically
//! smallest optimal set. This is exponential and meant for orders up to about 20.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub(crate) fn dominates(g: &Graph, d: VertexSet) -> bool {
    g.closed_neighborhood_of(d) == g.vertex_set()
}

/// `true` iff every outside signature is distinct; with `dominating` also
/// requires them non-empty.
pub(crate) fn separates(g: &Graph, s: VertexSet, dominating: bool) -> bool {
    let outside = g.vertex_set() - s;
    let mut sigs = [0u64; 64];
    let mut len = 0;
    for v in outside {
        let sig = (g.neighbors(v) & s).bits();
        if dominating && sig == 0 {
            return false;
        }
        sigs[len] = sig;
        len += 1;
    }
    let sigs = &mut sigs[..len];
    sigs.sort_unstable();
    sigs.windows(2).all(|w| w[0] != w[1])
}

pub fn is_dominating(g: &Graph, d: VertexSet) -> Result<bool> {
    g.check_set(d)?;
    Ok(dominates(g, d))
}

pub fn is_locating_set(g: &Graph, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(separates(g, s, false))
}

pub fn is_locating_dominating(g: &Graph, d: VertexSet) -> Result<bool> {
    g.check_set(d)?;
    Ok(separates(g, d, true))
}

/// Vertices outside `s` adjacent to `v` and to no other member of `s`.
pub fn external_private_neighbors(g: &Graph, s: VertexSet, v: usize) -> VertexSet {
    let others = s.without(v);
    (g.neighbors(v) - s)
        .iter()
        .filter(|&u| g.neighbors(u).is_disjoint(others))
        .collect()
}

/// Every member of `s` has an `s`-external private neighbor.
pub fn has_external_private_neighbors(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !external_private_neighbors(g, s, v).is_empty())
}

/// Bitmasks of all `k`-subsets of `0..n` in increasing numeric order.
#[derive(Debug, Clone)]
pub struct Subsets {
    next: Option<u128>,
    limit: u128,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        let next = (k <= n).then(|| (1u128 << k) - 1);
        Subsets {
            next,
            limit: 1u128 << n,
        }
    }
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let x = self.next?;
        if x >= self.limit && x != 0 {
            self.next = None;
            return None;
        }
        self.next = if x == 0 {
            None
        } else {
            // Gosper's hack
            let c = x & x.wrapping_neg();
            let r = x + c;
            Some((((r ^ x) >> 2) / c) | r)
        };
        Some(VertexSet::from_bits(x as u64))
    }
}

/// First set, in (cardinality, bitmask) order, with size in `from..=to` that
/// satisfies `accept`.
fn first_subset<F>(n: usize, from: usize, to: usize, mut accept: F) -> Option<VertexSet>
where
    F: FnMut(VertexSet) -> bool,
{
    (from..=to.min(n)).find_map(|k| Subsets::new(n, k).find(|&s| accept(s)))
}

/// Smallest `k` with `2^k - 1 >= n - k`: fewer members cannot give `n - k`
/// distinct non-empty signatures.
pub fn ld_lower_bound(n: usize) -> usize {
    (0..=n)
        .find(|&k| k >= 64 || (1u128 << k) > (n - k) as u128)
        .unwrap_or(n)
}

/// Smallest `k` with `2^k >= n - k` (one signature may be empty).
pub fn locating_lower_bound(n: usize) -> usize {
    (0..=n)
        .find(|&k| k >= 64 || (1u128 << k) >= (n - k) as u128)
        .unwrap_or(n)
}

/// Size of a greedy dominating set; an upper bound on the domination number.
pub fn greedy_domination_bound(g: &Graph) -> usize {
    let mut dominated = VertexSet::EMPTY;
    let mut size = 0;
    while dominated != g.vertex_set() {
        let best = g
            .vertices()
            .max_by_key(|&v| ((g.closed_neighbors(v) - dominated).len(), std::cmp::Reverse(v)))
            .expect("non-empty graph while vertices remain undominated");
        dominated = dominated | g.closed_neighbors(best);
        size += 1;
    }
    size
}

pub fn min_dominating_exact(g: &Graph) -> VertexSet {
    let ub = greedy_domination_bound(g);
    first_subset(g.order(), 0, ub, |s| dominates(g, s)).expect("the greedy bound is attained")
}

/// Minimum vertex cover, i.e. the complement of a maximum independent set.
pub fn min_vertex_cover_exact(g: &Graph) -> VertexSet {
    let all = g.vertex_set();
    first_subset(g.order(), 0, g.order(), |c| {
        (all - c).iter().all(|v| g.neighbors(v).is_subset(c))
    })
    .expect("the full vertex set is a cover")
}

/// Optimum value of a minimization together with the smallest optimal witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub value: usize,
    pub witness: VertexSet,
}

impl Optimum {
    fn of(witness: VertexSet) -> Self {
        Optimum {
            value: witness.len(),
            witness,
        }
    }
}

/// The location-domination number `γ_L(G)` with a witness.
///
/// Isolated vertices are allowed; they belong to every dominating set.
pub fn gamma_l_exact(g: &Graph) -> Optimum {
    let n = g.order();
    let witness = first_subset(n, ld_lower_bound(n), n, |s| separates(g, s, true))
        .expect("the full vertex set is locating-dominating");
    Optimum::of(witness)
}

/// Minimum size of a locating set (outside signatures distinct, one may be empty).
pub fn min_locating_set_exact(g: &Graph) -> Optimum {
    let n = g.order();
    let witness = first_subset(n, locating_lower_bound(n), n, |s| separates(g, s, false))
        .expect("the full vertex set is locating");
    Optimum::of(witness)
}

/// A graph is combinable when its minimum locating sets are as large as its
/// minimum locating-dominating sets.
pub fn is_combinable(g: &Graph) -> Result<bool> {
    require_no_isolated(g)?;
    Ok(min_locating_set_exact(g).value == gamma_l_exact(g).value)
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    let isolated = g.isolated_vertices();
    if isolated.is_empty() {
        Ok(())
    } else {
        Err(Error::IsolatedVertex(isolated))
    }
}

/// Above this order the private-neighbor set is obtained by repairing one minimum
/// dominating set instead of scanning all of them.
pub const PRIVATE_ENUMERATION_MAX_ORDER: usize = 24;

/// A minimum dominating set in which every member has an external private neighbor.
///
/// Such a set exists in every graph without isolated vertices (Bollobás–Cockayne).
/// Small graphs: the first minimum dominating set in bitmask order with the
/// property. Larger graphs: [`repair_private_neighbors`] on one minimum dominating
/// set, with enumeration as the fallback.
pub fn bc_private_dominating_set(g: &Graph) -> Result<VertexSet> {
    require_no_isolated(g)?;
    if g.order() > PRIVATE_ENUMERATION_MAX_ORDER {
        let start = min_dominating_exact(g);
        if let Some(s) = repair_private_neighbors(g, start, g.order()) {
            return Ok(s);
        }
    }
    Ok(private_by_enumeration(g))
}

fn private_by_enumeration(g: &Graph) -> VertexSet {
    let gamma = min_dominating_exact(g).len();
    Subsets::new(g.order(), gamma)
        .find(|&s| dominates(g, s) && has_external_private_neighbors(g, s))
        .expect("a minimum dominating set with external private neighbors exists")
}

/// Swap argument on a minimum dominating set `s`.
///
/// A member `v` without an external private neighbor has no neighbor in `s`
/// (otherwise `s - v` would still dominate), so it is replaced by its smallest
/// neighbor. Each swap adds at least one edge inside the set, so the loop ends;
/// `None` if it has not after `max_swaps` swaps, or if `s` is not a minimum
/// dominating set to begin with.
pub fn repair_private_neighbors(g: &Graph, mut s: VertexSet, max_swaps: usize) -> Option<VertexSet> {
    if !dominates(g, s) {
        return None;
    }
    for _ in 0..=max_swaps {
        let Some(v) = s.iter().find(|&v| external_private_neighbors(g, s, v).is_empty()) else {
            return Some(s);
        };
        if !g.neighbors(v).is_disjoint(s) {
            return None;
        }
        let u = g.neighbors(v).min()?;
        s = s.without(v).with(u);
        debug_assert!(dominates(g, s));
    }
    None
}

/// One class of the partition of `V - S` by signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignaturePart {
    pub signature: VertexSet,
    pub members: VertexSet,
}

/// Partition of `V - S` into classes of equal signature, with the counts used by
/// the two-thirds construction: `x_set` is the union of singleton classes, `y_set`
/// the union of the rest, `k` the number of classes, `n1 = |x_set|` and
/// `n2 = k - n1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionSignature {
    pub base_set: VertexSet,
    /// Ordered by smallest member.
    pub parts: Vec<SignaturePart>,
    pub x_set: VertexSet,
    pub y_set: VertexSet,
    pub k: usize,
    pub n1: usize,
    pub n2: usize,
}

pub fn partition_signature(g: &Graph, s: VertexSet) -> Result<PartitionSignature> {
    g.check_set(s)?;
    let mut classes: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for v in g.vertex_set() - s {
        classes.entry(g.neighbors(v) & s).or_default().insert(v);
    }
    let mut parts: Vec<SignaturePart> = classes
        .into_iter()
        .map(|(signature, members)| SignaturePart { signature, members })
        .collect();
    parts.sort_by_key(|p| p.members.min());

    let x_set: VertexSet = parts
        .iter()
        .filter(|p| p.members.len() == 1)
        .fold(VertexSet::EMPTY, |acc, p| acc | p.members);
    let y_set = g.vertex_set() - s - x_set;
    let k = parts.len();
    let n1 = x_set.len();
    Ok(PartitionSignature {
        base_set: s,
        parts,
        x_set,
        y_set,
        k,
        n1,
        n2: k - n1,
    })
}

/// Counts `(n1, n2)` without materializing the parts.
pub(crate) fn partition_counts(g: &Graph, s: VertexSet) -> (usize, usize) {
    let mut sigs: Vec<u64> = (g.vertex_set() - s)
        .iter()
        .map(|v| (g.neighbors(v) & s).bits())
        .collect();
    sigs.sort_unstable();
    let (mut n1, mut n2) = (0, 0);
    let mut i = 0;
    while i < sigs.len() {
        let j = sigs[i..].iter().take_while(|&&x| x == sigs[i]).count();
        if j == 1 {
            n1 += 1;
        } else {
            n2 += 1;
        }
        i += j;
    }
    (n1, n2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    TwoThirds,
    VertexCover,
    Split,
    Cobipartite,
    Manual,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::TwoThirds => "two-thirds",
            Method::VertexCover => "vertex-cover",
            Method::Split => "split",
            Method::Cobipartite => "cobipartite",
            Method::Manual => "manual",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A vertex set with its verification flags and the algorithm that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LdCertificate {
    pub set: VertexSet,
    pub is_dominating: bool,
    pub is_locating: bool,
    pub is_locating_dominating: bool,
    pub method: Method,
}

impl LdCertificate {
    pub fn verify(g: &Graph, set: VertexSet, method: Method) -> Result<Self> {
        g.check_set(set)?;
        let is_dominating = dominates(g, set);
        let is_locating = separates(g, set, false);
        Ok(LdCertificate {
            set,
            is_dominating,
            is_locating,
            is_locating_dominating: is_dominating && is_locating,
            method,
        })
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }
}
