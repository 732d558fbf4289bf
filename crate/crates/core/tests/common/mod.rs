//! Fixtures and brute-force oracles shared by the integration tests. The oracles
//! work on plain adjacency matrices and `Vec<usize>` subsets and share no code with
//! the library's solvers or verifiers.
#![allow(dead_code)]

use std::collections::HashSet;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use locdom::graph6::read_graph6;
use locdom::Graph;

pub fn fixture_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/fixtures/connected{n}.g6"))
}

/// Connected graphs of order `n` (1..=8), one per isomorphism class.
pub fn connected_fixture(n: usize) -> Vec<Graph> {
    read_graph6(BufReader::new(File::open(fixture_path(n)).expect("fixture present"))).expect("fixture parses")
}

pub struct Adj {
    pub n: usize,
    pub m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.order();
        let m = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Adj { n, m }
    }

    fn open(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.m[v][u]).collect()
    }

    pub fn twin_free(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                let mut open_u = self.open(u);
                let mut open_v = self.open(v);
                if open_u == open_v {
                    return false;
                }
                open_u.push(u);
                open_v.push(v);
                open_u.sort_unstable();
                open_v.sort_unstable();
                if open_u == open_v {
                    return false;
                }
            }
        }
        true
    }

    pub fn has_isolated(&self) -> bool {
        (0..self.n).any(|v| self.open(v).is_empty())
    }

    pub fn dominating(&self, d: &[usize]) -> bool {
        (0..self.n).all(|v| d.contains(&v) || d.iter().any(|&u| self.m[u][v]))
    }

    /// Every vertex outside `d` has a non-empty trace `N(v) ∩ d`, all different.
    pub fn locating_dominating(&self, d: &[usize]) -> bool {
        let mut seen = HashSet::new();
        for v in (0..self.n).filter(|v| !d.contains(v)) {
            let trace: Vec<usize> = d.iter().copied().filter(|&u| self.m[u][v]).collect();
            if trace.is_empty() || !seen.insert(trace) {
                return false;
            }
        }
        true
    }

    pub fn vertex_cover(&self, c: &[usize]) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| !self.m[u][v] || c.contains(&u) || c.contains(&v)))
    }

    /// Vertices of `s`' complement adjacent to `v` and to no other member of `s`.
    pub fn external_private(&self, s: &[usize], v: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|u| !s.contains(u) && self.m[v][*u])
            .filter(|&u| s.iter().all(|&w| w == v || !self.m[w][u]))
            .collect()
    }

    /// Smallest `k` with a `k`-subset satisfying `pred`, and all such subsets.
    pub fn minimum_all(&self, pred: impl Fn(&[usize]) -> bool) -> (usize, Vec<Vec<usize>>) {
        for k in 0..=self.n {
            let found: Vec<Vec<usize>> = combinations(self.n, k).into_iter().filter(|c| pred(c)).collect();
            if !found.is_empty() {
                return (k, found);
            }
        }
        unreachable!("the full vertex set satisfies every predicate used here")
    }

    pub fn minimum(&self, pred: impl Fn(&[usize]) -> bool) -> usize {
        (0..=self.n)
            .find(|&k| combinations(self.n, k).iter().any(|c| pred(c)))
            .expect("the full vertex set qualifies")
    }

    pub fn gamma(&self) -> usize {
        self.minimum(|d| self.dominating(d))
    }

    pub fn gamma_l(&self) -> usize {
        self.minimum(|d| self.locating_dominating(d))
    }
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Reference graph6 encoder written directly from the format description.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    assert!(n <= 62);
    out.push((n as u8 + 63) as char);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - i);
            }
        }
        out.push((x + 63) as char);
    }
    out
}
