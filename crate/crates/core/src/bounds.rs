//! Constructive upper bounds on `γ_L` for twin-free graphs without isolated
//! vertices: the `2n/3` augmentation construction, minimum vertex covers, and the
//! `n/2` case analyses for split and co-bipartite graphs.
//!
//! Every construction verifies its output before returning it; a failed check is
//! reported as [`Error::ConstructionFailed`].

use serde::Serialize;

use crate::domination::{
    bc_private_dominating_set, min_vertex_cover_exact, partition_counts, partition_signature, separates, LdCertificate,
    Method, PartitionSignature,
};
use crate::error::{Error, Result};
use crate::graph::{classify, require_twin_free_without_isolated, Graph, VertexSet};

/// Intermediate sets of the two-thirds construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoThirdsTrace {
    /// Minimum dominating set whose members all have external private neighbors.
    pub s0: VertexSet,
    /// Superset of `s0`, grown until no single vertex can be added while keeping
    /// `n1 + n2 >= |D|`.
    pub d: VertexSet,
    pub sig: PartitionSignature,
    /// `D ∪ X_D`, of size `|D| + n1`.
    pub candidate_a: VertexSet,
    /// `D` plus all but the smallest member of every class of size at least two,
    /// of size `n - n1 - n2`.
    pub candidate_b: VertexSet,
    /// The smaller candidate; `candidate_b` on ties.
    pub chosen: VertexSet,
}

impl TwoThirdsTrace {
    pub fn certificate(&self, g: &Graph) -> Result<LdCertificate> {
        LdCertificate::verify(g, self.chosen, Method::TwoThirds)
    }
}

/// Grows `start` one vertex at a time: scanning outside vertices in increasing
/// order, the first `w` with `n1(D + w) + n2(D + w) >= |D| + 1` is added and the
/// scan restarts. Stops when no vertex qualifies.
pub fn augment_two_thirds(g: &Graph, start: VertexSet) -> VertexSet {
    let mut d = start;
    'grow: loop {
        for w in g.vertex_set() - d {
            let candidate = d.with(w);
            let (n1, n2) = partition_counts(g, candidate);
            if n1 + n2 >= candidate.len() {
                d = candidate;
                continue 'grow;
            }
        }
        return d;
    }
}

/// The `2n/3` construction: a locating-dominating set of size at most
/// `min(|D| + n1(D), n - n1(D) - n2(D)) <= 2n/3`.
pub fn construct_ld_two_thirds(g: &Graph) -> Result<TwoThirdsTrace> {
    require_twin_free_without_isolated(g)?;
    let s0 = bc_private_dominating_set(g)?;
    let d = augment_two_thirds(g, s0);
    let sig = partition_signature(g, d)?;

    let candidate_a = d | sig.x_set;
    let dropped: VertexSet = sig
        .parts
        .iter()
        .filter(|p| p.members.len() >= 2)
        .filter_map(|p| p.members.min())
        .collect();
    let candidate_b = d | (sig.y_set - dropped);
    let chosen = if candidate_a.len() < candidate_b.len() {
        candidate_a
    } else {
        candidate_b
    };
    if !separates(g, chosen, true) {
        return Err(Error::ConstructionFailed {
            method: "two-thirds",
            set: chosen,
        });
    }
    Ok(TwoThirdsTrace {
        s0,
        d,
        sig,
        candidate_a,
        candidate_b,
        chosen,
    })
}

/// A minimum vertex cover, which is locating-dominating in any twin-free graph
/// without isolated vertices.
pub fn ld_from_vertex_cover(g: &Graph) -> Result<LdCertificate> {
    require_twin_free_without_isolated(g)?;
    let cover = min_vertex_cover_exact(g);
    checked(g, cover, Method::VertexCover)
}

fn checked(g: &Graph, set: VertexSet, method: Method) -> Result<LdCertificate> {
    let cert = LdCertificate::verify(g, set, method)?;
    if cert.is_locating_dominating {
        Ok(cert)
    } else {
        Err(Error::ConstructionFailed {
            method: method.label(),
            set,
        })
    }
}

/// Which branch of the split-graph case analysis produced the set. `X` is the
/// clique, `Y` the independent set, `x` the clique vertex with no neighbor in `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitCase {
    /// `|Y| >= n/2`: the clique is a vertex cover.
    Clique,
    /// Every clique vertex has a neighbor in `Y`: returns `Y`.
    Independent,
    /// `|X| - |Y| >= 2`: returns `Y + x`.
    IndependentPlusLoner,
    /// No `y` is adjacent to all of `X - x`: returns `X - x`.
    CliqueMinusLoner,
    /// Some `y` is adjacent to all of `X - x`: returns `(Y - y) + x`. Unreachable
    /// in twin-free graphs, since then `N(y) = X - x = N(x)`.
    Swap,
}

/// Case analysis on a given split partition (`clique`, `independent`).
pub fn split_case_analysis(g: &Graph, clique: VertexSet, independent: VertexSet) -> Result<(SplitCase, VertexSet)> {
    let n = g.order();
    let (x_set, y_set) = (clique, independent);
    if 2 * y_set.len() >= n {
        return Ok((SplitCase::Clique, x_set));
    }
    let loners: VertexSet = x_set.iter().filter(|&v| g.neighbors(v).is_disjoint(y_set)).collect();
    let x = match loners.len() {
        0 => return Ok((SplitCase::Independent, y_set)),
        1 => loners.min().unwrap(),
        _ => {
            return Err(Error::ConstructionFailed {
                method: "split",
                set: loners,
            })
        }
    };
    if x_set.len() >= y_set.len() + 2 {
        return Ok((SplitCase::IndependentPlusLoner, y_set.with(x)));
    }
    let rest = x_set.without(x);
    match y_set.iter().find(|&y| rest.is_subset(g.neighbors(y))) {
        None => Ok((SplitCase::CliqueMinusLoner, rest)),
        Some(y) => Ok((SplitCase::Swap, y_set.without(y).with(x))),
    }
}

pub fn construct_ld_split(g: &Graph) -> Result<LdCertificate> {
    require_twin_free_without_isolated(g)?;
    let part = classify(g).split_partition.ok_or(Error::NotSplit)?;
    let (_, set) = split_case_analysis(g, part.clique, part.independent)?;
    checked(g, set, Method::Split)
}

/// Branch of the co-bipartite case analysis. `X` is the smaller clique, `y` the
/// vertex of `Y` with no neighbor in `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CobipartiteCase {
    /// Every vertex of `Y` has a neighbor in `X`: returns `X`.
    SmallClique,
    /// Some `x` has no neighbor in `Y`: returns `(X - x) + y`.
    SwapLoners,
    /// `|Y| - |X| >= 2`: returns `X + y`.
    SmallCliquePlusLoner,
    /// No `x` is adjacent to all of `Y - y`: returns `Y - y`.
    LargeCliqueMinusLoner,
    /// Some `x` is adjacent to all of `Y - y`: returns `(X - x) + y`.
    SwapDominator,
}

/// Case analysis on two cliques covering the graph; the smaller one plays `X`
/// (the first one on ties).
pub fn cobipartite_case_analysis(
    g: &Graph,
    first: VertexSet,
    second: VertexSet,
) -> Result<(CobipartiteCase, VertexSet)> {
    let (x_set, y_set) = if first.len() <= second.len() {
        (first, second)
    } else {
        (second, first)
    };
    let unique_loner = |within: VertexSet, other: VertexSet| -> Result<Option<usize>> {
        let loners: VertexSet = within.iter().filter(|&v| g.neighbors(v).is_disjoint(other)).collect();
        match loners.len() {
            0 => Ok(None),
            1 => Ok(loners.min()),
            _ => Err(Error::ConstructionFailed {
                method: "cobipartite",
                set: loners,
            }),
        }
    };

    let Some(y) = unique_loner(y_set, x_set)? else {
        return Ok((CobipartiteCase::SmallClique, x_set));
    };
    if let Some(x) = unique_loner(x_set, y_set)? {
        return Ok((CobipartiteCase::SwapLoners, x_set.without(x).with(y)));
    }
    if y_set.len() >= x_set.len() + 2 {
        return Ok((CobipartiteCase::SmallCliquePlusLoner, x_set.with(y)));
    }
    let rest = y_set.without(y);
    match x_set.iter().find(|&x| rest.is_subset(g.neighbors(x))) {
        None => Ok((CobipartiteCase::LargeCliqueMinusLoner, rest)),
        Some(x) => Ok((CobipartiteCase::SwapDominator, x_set.without(x).with(y))),
    }
}

pub fn construct_ld_cobipartite(g: &Graph) -> Result<LdCertificate> {
    require_twin_free_without_isolated(g)?;
    let (a, b) = classify(g).cobip_partition.ok_or(Error::NotCobipartite)?;
    let (_, set) = cobipartite_case_analysis(g, a, b)?;
    checked(g, set, Method::Cobipartite)
}

/// Split construction if the graph is split, else co-bipartite, else two-thirds.
pub fn construct_ld_auto(g: &Graph) -> Result<LdCertificate> {
    require_twin_free_without_isolated(g)?;
    let class = classify(g);
    if class.is_split {
        construct_ld_split(g)
    } else if class.is_cobipartite {
        construct_ld_cobipartite(g)
    } else {
        construct_ld_two_thirds(g)?.certificate(g)
    }
}
