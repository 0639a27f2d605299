//! Ranked Pairs winners over all tie-breaking orders.
//!
//! Pairs with non-negative margin are locked in order of decreasing margin,
//! skipping any pair that would close a cycle. Only pairs of equal margin can
//! be reordered by a tie-breaker, so the search branches on which addable
//! pair of the current margin class is locked next. The state is the
//! transitive closure of the locked pairs together with the class index, and
//! is memoized. A branch is abandoned once every candidate still able to come
//! first is already known to win.

use super::WinnerSet;
use crate::error::{Error, Result};
use crate::margins::MarginGraph;
use crate::profile::Candidate;
use std::collections::HashSet;

/// Default number of search nodes before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

pub fn ranked_pairs(m: &MarginGraph) -> Result<WinnerSet> {
    ranked_pairs_with_budget(m, DEFAULT_NODE_BUDGET)
}

pub fn ranked_pairs_with_budget(m: &MarginGraph, budget: u64) -> Result<WinnerSet> {
    let k = m.len();
    if k > 64 {
        return Err(Error::Unsupported {
            method: "ranked_pairs".into(),
            reason: format!("{k} candidates; at most 64 are supported"),
        });
    }
    if k == 1 {
        return Ok(WinnerSet::from_sorted(vec![m.id(0)]));
    }
    let mut pairs: Vec<(i64, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let w = m.weight(i, j);
            if i != j && w >= 0 {
                pairs.push((w, i, j));
            }
        }
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0));
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut last = None;
    for (w, i, j) in pairs {
        if last != Some(w) {
            groups.push(Vec::new());
            last = Some(w);
        }
        groups.last_mut().unwrap().push((i, j));
    }
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut search = Search { groups, k, all, budget, nodes: 0, found: 0, seen: HashSet::new() };
    let outcome = search.explore(0, vec![0u64; k]);
    let found = search.found;
    let winners = || (0..k).filter(|&i| found >> i & 1 == 1).map(|i| m.id(i)).collect::<Vec<_>>();
    match outcome {
        Ok(()) => Ok(WinnerSet::from_sorted(winners())),
        Err(()) => Err(Error::BudgetExceeded { budget, partial: winners() }),
    }
}

struct Search {
    groups: Vec<Vec<(usize, usize)>>,
    k: usize,
    all: u64,
    budget: u64,
    nodes: u64,
    found: u64,
    seen: HashSet<(usize, Vec<u64>)>,
}

impl Search {
    // `reach[i]` is the set of candidates locked below `i`.
    fn explore(&mut self, mut g: usize, mut reach: Vec<u64>) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        loop {
            let below = reach.iter().fold(0u64, |acc, r| acc | r);
            let possible = self.all & !below;
            if possible & !self.found == 0 {
                return Ok(());
            }
            if g == self.groups.len() {
                self.found |= possible;
                return Ok(());
            }
            let addable: Vec<(usize, usize)> = self.groups[g]
                .iter()
                .copied()
                .filter(|&(i, j)| reach[i] >> j & 1 == 0 && reach[j] >> i & 1 == 0)
                .collect();
            match addable.len() {
                0 => g += 1,
                1 => lock(&mut reach, addable[0], self.k),
                _ => {
                    if !self.seen.insert((g, reach.clone())) {
                        return Ok(());
                    }
                    for e in addable {
                        let mut next = reach.clone();
                        lock(&mut next, e, self.k);
                        self.explore(g, next)?;
                    }
                    return Ok(());
                }
            }
        }
    }
}

fn lock(reach: &mut [u64], (i, j): (usize, usize), k: usize) {
    let gain = (1u64 << j) | reach[j];
    for u in 0..k {
        if u == i || reach[u] >> i & 1 == 1 {
            reach[u] |= gain;
        }
    }
}

/// True if `order` (best first) is a stack: whenever `a` is above `b`, a
/// descending chain from `a` to `b` has every margin at least `margin(b, a)`.
/// Stacks are exactly the Ranked Pairs rankings.
pub fn is_stack(m: &MarginGraph, order: &[Candidate]) -> bool {
    let k = m.len();
    if order.len() != k {
        return false;
    }
    let Some(pos) = order.iter().map(|&c| m.index_of(c)).collect::<Option<Vec<usize>>>() else {
        return false;
    };
    for p in 0..k {
        for q in (p + 1)..k {
            let threshold = m.weight(pos[q], pos[p]);
            // forward reachability from p along strong enough downward edges
            let mut reach = vec![false; k];
            reach[p] = true;
            for u in p..q {
                if !reach[u] {
                    continue;
                }
                for v in (u + 1)..=q {
                    if m.weight(pos[u], pos[v]) >= threshold {
                        reach[v] = true;
                    }
                }
            }
            if !reach[q] {
                return false;
            }
        }
    }
    true
}
