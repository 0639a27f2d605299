use super::{case, Case, Criterion, Witness};
use crate::error::{Error, Result};
use crate::methods::{getcha, gocha, MethodId};
use crate::profile::{Ballot, Candidate, Profile};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Polarity {
    Positive,
    Negative,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SubsetTarget {
    Smith,
    Schwartz,
}

fn witness(criterion: Criterion, method: MethodId, note: &str, candidates: Vec<Candidate>, cases: Vec<Case>) -> Witness {
    Witness { criterion, method, note: note.to_string(), candidates, cases }
}

/// A candidate `b` that wins in neither election and loses to `a`
/// head-to-head must not knock `a` out of the winning set.
pub fn check_immunity_to_spoilers(method: MethodId, p: &Profile) -> Result<Option<Witness>> {
    spoiler_scan(method, p, Criterion::ImmunityToSpoilers)
}

/// A winner `a` of `P - b` with a majority over `b` (or at least a tie, if
/// `strong`) must still win in `P`.
pub fn check_stability_for_winners(method: MethodId, p: &Profile, strong: bool) -> Result<Option<Witness>> {
    let criterion = if strong { Criterion::StrongStabilityForWinners } else { Criterion::StabilityForWinners };
    spoiler_scan(method, p, criterion)
}

fn spoiler_scan(method: MethodId, p: &Profile, criterion: Criterion) -> Result<Option<Witness>> {
    if p.num_candidates() < 2 {
        return Ok(None);
    }
    let full = method.winners(p)?;
    let m = p.margin_graph();
    for &b in p.candidates() {
        if criterion == Criterion::ImmunityToSpoilers && full.contains(b) {
            continue;
        }
        let without = p.remove_candidate(b)?;
        let reduced = method.winners(&without)?;
        for a in reduced.iter() {
            let margin = m.margin(a, b)?;
            let applies = match criterion {
                Criterion::StrongStabilityForWinners => margin >= 0,
                _ => margin > 0,
            };
            if applies && !full.contains(a) {
                return Ok(Some(witness(
                    criterion,
                    method,
                    "adding the entrant removes a winner it loses to",
                    vec![a, b],
                    vec![case("with_entrant", p, &full), case("without_entrant", &without, &reduced)],
                )));
            }
        }
    }
    Ok(None)
}

/// Checks that `r` is an amalgamation of `p` and `q`: it ranks the union of
/// their candidates and restricts to each of them.
pub fn is_amalgamation(p: &Profile, q: &Profile, r: &Profile) -> Result<()> {
    if p.num_voters() != q.num_voters() {
        return Err(Error::InvalidArgument("amalgamable profiles need the same number of voters".into()));
    }
    let shared: Vec<Candidate> = p.candidates().iter().copied().filter(|&c| q.contains(c)).collect();
    if !shared.is_empty() && p.restrict(&shared)? != q.restrict(&shared)? {
        return Err(Error::InvalidArgument("profiles disagree on their shared candidates".into()));
    }
    let mut union: Vec<Candidate> = p.candidates().iter().chain(q.candidates()).copied().collect();
    union.sort_unstable();
    union.dedup();
    if r.candidates() != union.as_slice() {
        return Err(Error::InvalidArgument("the amalgamation must rank exactly the union of candidates".into()));
    }
    if r.restrict(p.candidates())? != *p || r.restrict(q.candidates())? != *q {
        return Err(Error::InvalidArgument("the amalgamation does not restrict to both profiles".into()));
    }
    Ok(())
}

/// A candidate winning in both `p` and `q` must win in their amalgamation `r`.
pub fn check_amalgamation(method: MethodId, p: &Profile, q: &Profile, r: &Profile) -> Result<Option<Witness>> {
    is_amalgamation(p, q, r)?;
    let fp = method.winners(p)?;
    let fq = method.winners(q)?;
    let fr = method.winners(r)?;
    for a in fp.iter() {
        if fq.contains(a) && !fr.contains(a) {
            return Ok(Some(witness(
                Criterion::Amalgamation,
                method,
                "a winner of both parts loses in the amalgamation",
                vec![a],
                vec![case("first", p, &fp), case("second", q, &fq), case("amalgamation", r, &fr)],
            )));
        }
    }
    Ok(None)
}

/// Removal form: deleting one voter whose unique favourite (least favourite)
/// is `x` must not turn `x` from a loser into a winner (winner into a loser).
pub fn check_involvement(method: MethodId, p: &Profile, polarity: Polarity) -> Result<Option<Witness>> {
    if p.num_voters() < 2 {
        return Err(Error::InvalidArgument("involvement needs at least two voters".into()));
    }
    let p = p.canonical();
    let full = method.winners(&p)?;
    let criterion = match polarity {
        Polarity::Positive => Criterion::PositiveInvolvement,
        Polarity::Negative => Criterion::NegativeInvolvement,
    };
    for i in 0..p.num_entries() {
        let r = p.entry(i).0;
        let x = match polarity {
            Polarity::Positive => r[0],
            Polarity::Negative => r[r.len() - 1],
        };
        let without = p.without_one(i)?;
        let reduced = method.winners(&without)?;
        let violated = match polarity {
            Polarity::Positive => reduced.contains(x) && !full.contains(x),
            Polarity::Negative => !reduced.contains(x) && full.contains(x),
        };
        if violated {
            let note = match polarity {
                Polarity::Positive => "a voter ranking the candidate first made it lose",
                Polarity::Negative => "a voter ranking the candidate last made it win",
            };
            return Ok(Some(witness(
                criterion,
                method,
                note,
                vec![x],
                vec![case("with_voter", &p, &full), case("without_voter", &without, &reduced)],
            )));
        }
    }
    Ok(None)
}

/// Raising a winner one place on one ballot must keep it winning.
pub fn check_monotonicity(method: MethodId, p: &Profile) -> Result<Option<Witness>> {
    let p = p.canonical();
    let full = method.winners(&p)?;
    for x in full.iter() {
        for i in 0..p.num_entries() {
            let Some(lifted) = p.lift(i, x)? else { continue };
            let after = method.winners(&lifted)?;
            if !after.contains(x) {
                return Ok(Some(witness(
                    Criterion::Monotonicity,
                    method,
                    "lifting a winner made it lose",
                    vec![x],
                    vec![case("original", &p, &full), case("lifted", &lifted, &after)],
                )));
            }
        }
    }
    Ok(None)
}

/// A unique winner must not also win when every ballot is reversed.
pub fn check_reversal_symmetry(method: MethodId, p: &Profile) -> Result<Option<Witness>> {
    if p.num_candidates() < 2 {
        return Err(Error::InvalidArgument("reversal symmetry needs two candidates".into()));
    }
    let full = method.winners(p)?;
    if !full.is_unique() {
        return Ok(None);
    }
    let x = full.as_slice()[0];
    let rev = p.reverse();
    let reversed = method.winners(&rev)?;
    if reversed.contains(x) {
        return Ok(Some(witness(
            Criterion::ReversalSymmetry,
            method,
            "the unique winner also wins the reversed profile",
            vec![x],
            vec![case("original", p, &full), case("reversed", &rev, &reversed)],
        )));
    }
    Ok(None)
}

/// Deleting a candidate outside the Smith set must not change the winners.
pub fn check_isda(method: MethodId, p: &Profile) -> Result<Option<Witness>> {
    let smith = getcha(&p.margin_graph());
    let full = method.winners(p)?;
    for &x in p.candidates() {
        if smith.contains(x) {
            continue;
        }
        let without = p.remove_candidate(x)?;
        let reduced = method.winners(&without)?;
        if reduced != full {
            return Ok(Some(witness(
                Criterion::Isda,
                method,
                "deleting a Smith-dominated candidate changed the winners",
                vec![x],
                vec![case("original", p, &full), case("without_dominated", &without, &reduced)],
            )));
        }
    }
    Ok(None)
}

/// Winners must lie in the Smith (GETCHA) or Schwartz (GOCHA) set.
pub fn check_subset(method: MethodId, p: &Profile, target: SubsetTarget) -> Result<Option<Witness>> {
    let m = p.margin_graph();
    let (set, criterion) = match target {
        SubsetTarget::Smith => (getcha(&m), Criterion::Smith),
        SubsetTarget::Schwartz => (gocha(&m), Criterion::Schwartz),
    };
    let full = method.winners(p)?;
    let outside: Vec<Candidate> = full.iter().filter(|&c| !set.contains(c)).collect();
    if outside.is_empty() {
        return Ok(None);
    }
    Ok(Some(witness(
        criterion,
        method,
        "a winner lies outside the target set",
        outside,
        vec![case("original", p, &full)],
    )))
}

/// A candidate ranked below another by every voter must not win.
pub fn check_pareto(method: MethodId, p: &Profile) -> Result<Option<Witness>> {
    let m = p.margin_graph();
    let n = p.num_voters() as i64;
    let full = method.winners(p)?;
    for i in 0..m.len() {
        for j in 0..m.len() {
            if m.weight(i, j) == n && full.contains(m.id(j)) {
                return Ok(Some(witness(
                    Criterion::Pareto,
                    method,
                    "a unanimously dominated candidate wins",
                    vec![m.id(i), m.id(j)],
                    vec![case("original", p, &full)],
                )));
            }
        }
    }
    Ok(None)
}

/// A unique winner must stay a winner after one more voter of any kind.
pub fn check_winner_continuity(method: MethodId, p: &Profile, ballot: &Ballot) -> Result<Option<Witness>> {
    let full = method.winners(p)?;
    if !full.is_unique() {
        return Err(Error::InvalidArgument(format!("winner continuity needs a unique winner, got {full}")));
    }
    let x = full.as_slice()[0];
    let added = p.with_ballot(ballot, 1)?;
    let after = method.winners(&added)?;
    if !after.contains(x) {
        return Ok(Some(witness(
            Criterion::WinnerContinuity,
            method,
            "one extra voter removed the unique winner",
            vec![x],
            vec![case("original", p, &full), case("with_voter", &added, &after)],
        )));
    }
    Ok(None)
}
