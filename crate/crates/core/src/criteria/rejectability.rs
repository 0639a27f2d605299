//! Making any Split Cycle co-winner the unique winner by reinforcing
//! existing majorities.
//!
//! Starting from the majority edges plus an edge from `x` to every candidate
//! it ties, edges lying on some shortest path out of `x` get the heavy weight
//! `n + 3` and all others `n + 1`, where `n` is the largest margin. Then `x`
//! defeats its out-neighbours directly and every other candidate is defeated
//! by its predecessor on a shortest path.

use crate::debord::realize;
use crate::error::{Error, Result};
use crate::margins::MarginGraph;
use crate::methods::split_cycle;
use crate::profile::{Candidate, Profile};
use std::collections::VecDeque;

/// The reinforced margin graph in which `x` is the unique Split Cycle winner.
pub fn rejectability_graph(m: &MarginGraph, x: Candidate) -> Result<MarginGraph> {
    let xi = m.index_of(x).ok_or(Error::UnknownCandidate(x))?;
    let winners = split_cycle(m);
    if !winners.contains(x) {
        return Err(Error::Precondition(format!("{x} is not a Split Cycle winner")));
    }
    if winners.is_unique() {
        return Err(Error::Precondition(format!("{x} is already the unique Split Cycle winner")));
    }
    let k = m.len();
    let edge = |i: usize, j: usize| m.weight(i, j) > 0 || (i == xi && j != xi && m.weight(i, j) == 0);

    let mut dist = vec![usize::MAX; k];
    dist[xi] = 0;
    let mut queue = VecDeque::from([xi]);
    while let Some(u) = queue.pop_front() {
        for v in 0..k {
            if edge(u, v) && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }

    let untouched_tie = (0..k).any(|i| ((i + 1)..k).any(|j| !edge(i, j) && !edge(j, i)));
    let n = m.max_margin();
    // ties left in place force even margins
    let light = if untouched_tie && (n + 1) % 2 != 0 { n + 2 } else { n + 1 };
    let heavy = light + 2;

    let mut rows = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            if edge(i, j) {
                let on_shortest = dist[i] != usize::MAX && dist[i] + 1 == dist[j];
                let w = if on_shortest { heavy } else { light };
                rows[i][j] = w;
                rows[j][i] = -w;
            }
        }
    }
    MarginGraph::new(m.ids().to_vec(), rows)
}

/// The reinforced graph for `x` and a profile realizing it.
pub fn rejectability_witness(p: &Profile, x: Candidate) -> Result<(MarginGraph, Profile)> {
    let g = rejectability_graph(&p.margin_graph(), x)?;
    let realization = realize(&g)?;
    Ok((g, realization))
}

/// `p` plus `2 |V(p)|` copies of `reinforcement`, enough for the
/// reinforcement's Split Cycle defeats to survive.
pub fn reinforce(p: &Profile, reinforcement: &Profile) -> Result<Profile> {
    p.combine(&reinforcement.replicate(2 * p.num_voters())?)
}
