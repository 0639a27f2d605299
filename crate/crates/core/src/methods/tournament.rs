use super::WinnerSet;
use crate::margins::MarginGraph;
use crate::profile::Candidate;

/// Which definition of covering the uncovered set uses.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum UncoveredVariant {
    Fishburn,
    Gillies,
}

/// Winners whose largest pairwise loss is smallest.
pub fn minimax(m: &MarginGraph) -> WinnerSet {
    let k = m.len();
    let score: Vec<i64> = (0..k).map(|x| (0..k).filter(|&y| y != x).map(|y| m.weight(y, x)).max().unwrap_or(0)).collect();
    let best = *score.iter().min().unwrap();
    WinnerSet::from_mask(m, |x| score[x] == best)
}

/// Winners with the most pairwise wins minus losses.
pub fn copeland(m: &MarginGraph) -> WinnerSet {
    let k = m.len();
    let score: Vec<i64> = (0..k).map(|x| (0..k).map(|y| m.weight(x, y).signum()).sum()).collect();
    let best = *score.iter().max().unwrap();
    WinnerSet::from_mask(m, |x| score[x] == best)
}

fn closure(m: &MarginGraph, edge: impl Fn(i64) -> bool) -> Vec<bool> {
    let k = m.len();
    let mut r = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            r[i * k + j] = i != j && edge(m.weight(i, j));
        }
    }
    for via in 0..k {
        for i in 0..k {
            if !r[i * k + via] {
                continue;
            }
            for j in 0..k {
                if r[via * k + j] {
                    r[i * k + j] = true;
                }
            }
        }
    }
    r
}

/// The Smith set: candidates reaching everyone through non-negative margins.
pub fn getcha(m: &MarginGraph) -> WinnerSet {
    let k = m.len();
    let r = closure(m, |w| w >= 0);
    WinnerSet::from_mask(m, |x| (0..k).all(|y| y == x || r[x * k + y]))
}

/// The Schwartz set: candidates that reach, through positive margins, every
/// candidate that reaches them.
pub fn gocha(m: &MarginGraph) -> WinnerSet {
    let k = m.len();
    let r = closure(m, |w| w > 0);
    WinnerSet::from_mask(m, |x| (0..k).all(|y| !r[y * k + x] || r[x * k + y]))
}

pub fn uncovered(m: &MarginGraph, variant: UncoveredVariant) -> WinnerSet {
    let k = m.len();
    // y left-covers x: everyone with a majority over y also has one over x
    let left_covers = |y: usize, x: usize| (0..k).all(|z| m.weight(z, y) <= 0 || m.weight(z, x) > 0);
    WinnerSet::from_mask(m, |x| {
        (0..k).filter(|&y| y != x).all(|y| match variant {
            UncoveredVariant::Fishburn => !left_covers(y, x) || left_covers(x, y),
            UncoveredVariant::Gillies => m.weight(y, x) <= 0 || !left_covers(y, x),
        })
    })
}

/// The candidate with a positive margin over every other, if any.
pub fn condorcet_winner(m: &MarginGraph) -> Option<Candidate> {
    let k = m.len();
    (0..k).find(|&x| (0..k).all(|y| y == x || m.weight(x, y) > 0)).map(|x| m.id(x))
}

/// The candidate with a negative margin against every other, if any.
/// Undefined for a single candidate.
pub fn condorcet_loser(m: &MarginGraph) -> Option<Candidate> {
    let k = m.len();
    if k < 2 {
        return None;
    }
    (0..k).find(|&x| (0..k).all(|y| y == x || m.weight(y, x) > 0)).map(|x| m.id(x))
}
