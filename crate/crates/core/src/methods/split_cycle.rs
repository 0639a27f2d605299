use super::WinnerSet;
use crate::error::{Error, Result};
use crate::margins::MarginGraph;
use crate::profile::Candidate;

/// Default largest candidate count for which simple cycles are enumerated.
pub const DEFAULT_CYCLE_CAP: usize = 8;

/// How to decide which majority edges are defeats.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Algorithm {
    /// Compare each margin with the widest path back (cubic time).
    WidestPath,
    /// Enumerate simple cycles; refused above `cap` candidates.
    Direct { cap: usize },
}

impl Default for Algorithm {
    fn default() -> Self {
        Algorithm::WidestPath
    }
}

/// Widest-path strengths: `get(x, y)` is the largest bottleneck margin over
/// majority paths from `x` to `y`, 0 if there is none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrengthMatrix {
    ids: Vec<Candidate>,
    s: Vec<i64>,
}

impl StrengthMatrix {
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.s[i * self.ids.len() + j]
    }

    pub fn get(&self, a: Candidate, b: Candidate) -> Result<i64> {
        let i = self.ids.binary_search(&a).map_err(|_| Error::UnknownCandidate(a))?;
        let j = self.ids.binary_search(&b).map_err(|_| Error::UnknownCandidate(b))?;
        Ok(self.at(i, j))
    }

    pub fn ids(&self) -> &[Candidate] {
        &self.ids
    }
}

pub fn strength_matrix(m: &MarginGraph) -> StrengthMatrix {
    let k = m.len();
    let mut s = vec![0i64; k * k];
    for i in 0..k {
        for j in 0..k {
            s[i * k + j] = m.weight(i, j).max(0);
        }
    }
    for via in 0..k {
        for i in 0..k {
            let left = s[i * k + via];
            if left == 0 || i == via {
                continue;
            }
            for j in 0..k {
                if j == i || j == via {
                    continue;
                }
                let cand = left.min(s[via * k + j]);
                if cand > s[i * k + j] {
                    s[i * k + j] = cand;
                }
            }
        }
    }
    StrengthMatrix { ids: m.ids().to_vec(), s }
}

/// The Split Cycle defeat graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefeatRelation {
    ids: Vec<Candidate>,
    adj: Vec<bool>,
}

impl DefeatRelation {
    fn new(ids: Vec<Candidate>) -> Self {
        let k = ids.len();
        DefeatRelation { ids, adj: vec![false; k * k] }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.ids.len() + j]
    }

    pub fn defeats(&self, a: Candidate, b: Candidate) -> bool {
        match (self.ids.binary_search(&a), self.ids.binary_search(&b)) {
            (Ok(i), Ok(j)) => self.at(i, j),
            _ => false,
        }
    }

    pub fn edges(&self) -> Vec<(Candidate, Candidate)> {
        let k = self.ids.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if self.at(i, j) {
                    out.push((self.ids[i], self.ids[j]));
                }
            }
        }
        out
    }

    pub fn undefeated(&self) -> WinnerSet {
        let k = self.ids.len();
        let winners: Vec<Candidate> =
            (0..k).filter(|&j| (0..k).all(|i| !self.at(i, j))).map(|j| self.ids[j]).collect();
        WinnerSet::new(winners).expect("defeat graphs are acyclic, so someone is undefeated")
    }

    pub fn is_acyclic(&self) -> bool {
        let k = self.ids.len();
        let mut indeg: Vec<usize> = (0..k).map(|j| (0..k).filter(|&i| self.at(i, j)).count()).collect();
        let mut stack: Vec<usize> = (0..k).filter(|&j| indeg[j] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for j in 0..k {
                if self.at(i, j) {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        seen == k
    }

    /// Candidates reachable from `a` along defeat edges, `a` excluded.
    pub fn reachable_from(&self, a: Candidate) -> Vec<Candidate> {
        let k = self.ids.len();
        let Ok(start) = self.ids.binary_search(&a) else { return Vec::new() };
        let mut seen = vec![false; k];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if self.at(i, j) && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        (0..k).filter(|&j| seen[j] && j != start).map(|j| self.ids[j]).collect()
    }
}

pub fn sc_defeats(m: &MarginGraph, algorithm: Algorithm) -> Result<DefeatRelation> {
    let k = m.len();
    let mut d = DefeatRelation::new(m.ids().to_vec());
    match algorithm {
        Algorithm::WidestPath => {
            let s = strength_matrix(m);
            for i in 0..k {
                for j in 0..k {
                    let w = m.weight(i, j);
                    if w > 0 && w > s.at(j, i) {
                        d.adj[i * k + j] = true;
                    }
                }
            }
        }
        Algorithm::Direct { cap } => {
            if k > cap {
                return Err(Error::DirectCapExceeded { k, cap });
            }
            for i in 0..k {
                for j in 0..k {
                    let w = m.weight(i, j);
                    if w > 0 && w > cycle_number_at(m, i, j) {
                        d.adj[i * k + j] = true;
                    }
                }
            }
        }
    }
    Ok(d)
}

/// Largest splitting number over simple majority cycles that start with the
/// edge `a -> b`; 0 if there is none. Enumerates cycles explicitly.
pub fn cycle_number(m: &MarginGraph, a: Candidate, b: Candidate) -> Result<i64> {
    let i = m.index_of(a).ok_or(Error::UnknownCandidate(a))?;
    let j = m.index_of(b).ok_or(Error::UnknownCandidate(b))?;
    Ok(cycle_number_at(m, i, j))
}

fn cycle_number_at(m: &MarginGraph, a: usize, b: usize) -> i64 {
    let first = m.weight(a, b);
    if first <= 0 {
        return 0;
    }
    let mut on_path = vec![false; m.len()];
    on_path[a] = true;
    on_path[b] = true;
    let mut best = 0;
    walk(m, b, a, first, &mut on_path, &mut best);
    best
}

// Depth-first search over simple paths from `at` back to `target`.
fn walk(m: &MarginGraph, at: usize, target: usize, bottleneck: i64, on_path: &mut [bool], best: &mut i64) {
    if bottleneck <= *best {
        return;
    }
    for next in 0..m.len() {
        let w = m.weight(at, next);
        if w <= 0 {
            continue;
        }
        let bn = bottleneck.min(w);
        if next == target {
            if bn > *best {
                *best = bn;
            }
        } else if !on_path[next] {
            on_path[next] = true;
            walk(m, next, target, bn, on_path, best);
            on_path[next] = false;
        }
    }
}

/// Candidates with no Split Cycle defeat.
pub fn split_cycle(m: &MarginGraph) -> WinnerSet {
    sc_defeats(m, Algorithm::WidestPath).expect("widest path never fails").undefeated()
}

/// Candidates whose path strength to every rival is at least the reverse.
pub fn beat_path(m: &MarginGraph) -> WinnerSet {
    let s = strength_matrix(m);
    let k = m.len();
    WinnerSet::from_mask(m, |x| (0..k).all(|y| s.at(y, x) <= s.at(x, y)))
}
