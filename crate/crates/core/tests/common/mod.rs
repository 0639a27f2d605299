//! Shared fixtures: small elections written with letter names.
//!
//! Letter `a` is candidate 0, `b` is 1 and so on, so `x`, `y`, `z` are 23, 24, 25.
#![allow(dead_code)]

use splitcycle::{realize, Ballot, Candidate, MarginGraph, Profile, WinnerSet};

pub fn c(letter: char) -> Candidate {
    Candidate(letter as u32 - 'a' as u32)
}

pub fn set(letters: &str) -> WinnerSet {
    WinnerSet::new(letters.chars().map(c).collect()).unwrap()
}

pub fn ballot(order: &str) -> Ballot {
    Ballot::new(order.chars().map(c).collect()).unwrap()
}

/// `&[(3, "abc"), (2, "cba")]`
pub fn profile(rows: &[(u64, &str)]) -> Profile {
    Profile::from_ballots(rows.iter().map(|&(n, r)| (ballot(r), n))).unwrap()
}

/// Margin graph over the letters of `candidates` with edges `"ba" -> 8`.
pub fn graph(candidates: &str, edges: &[(&str, i64)]) -> MarginGraph {
    let edges: Vec<_> = edges
        .iter()
        .map(|&(e, w)| {
            let mut it = e.chars();
            (c(it.next().unwrap()), c(it.next().unwrap()), w)
        })
        .collect();
    MarginGraph::from_edges(candidates.chars().map(c), &edges).unwrap()
}

pub fn realized(m: &MarginGraph) -> Profile {
    realize(m).unwrap()
}

pub fn three_candidate() -> Profile {
    profile(&[(2, "bac"), (3, "acb"), (4, "cba")])
}

pub fn four_candidate() -> MarginGraph {
    graph("abcd", &[("cb", 3), ("ba", 3), ("ac", 3), ("cd", 1), ("bd", 1), ("ad", 1)])
}

pub fn six_candidate() -> MarginGraph {
    graph(
        "abcdef",
        &[("ba", 4), ("cb", 4), ("ac", 4), ("ed", 4), ("fe", 4), ("df", 4), ("af", 4), ("da", 2)],
    )
}

pub fn overlapping_cycles() -> MarginGraph {
    graph("abcde", &[("ba", 8), ("dc", 6), ("cb", 8), ("ac", 6), ("ad", 4), ("bd", 4), ("de", 2)])
}

/// Beat Path spoiler example: the graph without `e`, then with it.
pub fn spoiler_beat_path() -> (MarginGraph, MarginGraph) {
    let base = [("cb", 5), ("ac", 5), ("ba", 5), ("cd", 1), ("ad", 1), ("bd", 1)];
    let mut full = base.to_vec();
    full.extend([("ae", 3), ("be", 3), ("ec", 5), ("de", 3)]);
    (graph("abcd", &base), graph("abcde", &full))
}

/// Ranked Pairs spoiler example: the graph without `e`, then with it.
pub fn spoiler_ranked_pairs() -> (MarginGraph, MarginGraph) {
    let base = [("bc", 11), ("ca", 1), ("cd", 9), ("ab", 13), ("db", 1), ("da", 7)];
    let mut full = base.to_vec();
    full.extend([("ce", 17), ("eb", 15), ("ed", 5), ("ae", 3)]);
    (graph("abcd", &base), graph("abcde", &full))
}

pub fn minimax_stability() -> MarginGraph {
    graph("abcd", &[("ba", 3), ("dc", 3), ("cb", 3), ("ac", 3), ("ad", 1), ("bd", 1)])
}

pub fn schwartz_example() -> MarginGraph {
    graph("adef", &[("ed", 2), ("fe", 2), ("df", 2), ("af", 2)])
}

/// Coalitional participation example and the ballot added twice.
pub fn coalition_example() -> (MarginGraph, Ballot) {
    (graph("abcd", &[("ba", 3), ("dc", 5), ("cb", 1), ("ac", 1), ("ad", 3), ("db", 1)]), ballot("cbda"))
}

pub fn getcha_pareto() -> Profile {
    profile(&[(1, "axbc"), (1, "bcax"), (1, "caxb")])
}

/// Uncovered set clone example with clones `d`, `e`, `f`.
pub fn uncovered_clones() -> Profile {
    profile(&[(1, "edfb"), (1, "dfeb"), (1, "fedb"), (1, "bedf"), (1, "bdfe"), (1, "bfed")])
}

pub fn amalgamation_example() -> (Profile, Profile, Profile) {
    let p = profile(&[(4, "dacb"), (2, "dcba"), (1, "cbda"), (1, "cbad"), (4, "bacd")]);
    let q = profile(&[(4, "dfeb"), (2, "fedb"), (1, "bfed"), (1, "bfed"), (4, "bedf")]);
    let r = profile(&[
        (1, "dfaceb"),
        (3, "dafceb"),
        (2, "fedcba"),
        (1, "cbfeda"),
        (1, "cbafed"),
        (3, "beacdf"),
        (1, "baecdf"),
    ]);
    (p, q, r)
}

pub fn florida() -> Profile {
    let (b, g, n) = ('a', 'b', 'c');
    let order = |s: [char; 3]| s.iter().collect::<String>();
    profile(&[
        (2_912_790, &order([b, g, n])),
        (2_912_253, &order([g, n, b])),
        (97_488, &order([n, g, b])),
    ])
}

/// Burlington with `d`, `p`, `r` for the Democrat, Progressive and Republican.
pub fn burlington() -> Profile {
    profile(&[(37, "rdp"), (29, "dpr"), (34, "pdr")])
}

/// Ranked Choice before and after two `abc` voters turn up.
pub fn no_show() -> (Profile, Profile) {
    (
        profile(&[(2, "abc"), (3, "bca"), (1, "cab"), (3, "cba")]),
        profile(&[(4, "abc"), (3, "bca"), (1, "cab"), (3, "cba")]),
    )
}

/// A profile where one `abc` voter hands `c` the Ranked Choice win.
pub fn no_show_single() -> Profile {
    profile(&[(3, "abc"), (3, "bca"), (1, "cab"), (3, "cba")])
}

/// GOCHA loses `x` when one voter ranking `x` first turns up.
pub fn gocha_involvement() -> Profile {
    let m = graph("xyz", &[("yx", 5), ("xz", 3), ("zy", 1)]);
    realized(&m).with_ballot(&ballot("xyz"), 1).unwrap()
}

/// Majority graph for the rejectability example, every edge weighted 1.
pub fn rejectability_majority() -> MarginGraph {
    graph("abcd", &[("ba", 1), ("dc", 1), ("cb", 1), ("ac", 1), ("da", 1), ("bd", 1)])
}

pub fn rejectability_weighted_for_a() -> MarginGraph {
    graph("abcd", &[("ba", 1), ("dc", 1), ("cb", 3), ("ac", 3), ("da", 1), ("bd", 3)])
}

pub fn rejectability_weighted_for_d() -> MarginGraph {
    graph("abcd", &[("ba", 1), ("dc", 3), ("cb", 3), ("ac", 1), ("da", 3), ("bd", 1)])
}
