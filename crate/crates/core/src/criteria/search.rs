//! Criterion dispatch for single profiles and randomized searches.

use super::checks::*;
use super::clones::{check_clone_independence, find_clone_sets};
use super::{Criterion, Witness};
use crate::error::{Error, Result};
use crate::generators::{amalgamable_split, stream_rng, with_clones, GeneratorConfig};
use crate::methods::MethodId;
use crate::profile::{Ballot, Candidate, Profile};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

/// Largest candidate count for which winner continuity tries every ballot.
pub const CONTINUITY_MAX_CANDIDATES: usize = 8;

/// Checks `criterion` on one profile as exhaustively as the criterion allows.
///
/// Clone independence tries every member of every maximal clone set. Winner
/// continuity tries every possible extra ballot and does not apply without
/// a unique winner. Amalgamation needs three profiles; use
/// [`check_amalgamation`] instead.
pub fn check_profile(criterion: Criterion, method: MethodId, p: &Profile) -> Result<Option<Witness>> {
    match criterion {
        Criterion::CloneIndependence => {
            for clones in find_clone_sets(p) {
                for &c in clones.members() {
                    if let Some(w) = check_clone_independence(method, p, &clones, c)? {
                        return Ok(Some(w));
                    }
                }
            }
            Ok(None)
        }
        Criterion::ImmunityToSpoilers => check_immunity_to_spoilers(method, p),
        Criterion::StabilityForWinners => check_stability_for_winners(method, p, false),
        Criterion::StrongStabilityForWinners => check_stability_for_winners(method, p, true),
        Criterion::Amalgamation => {
            Err(Error::InvalidArgument("amalgamation compares three profiles: two parts and their amalgamation".into()))
        }
        Criterion::PositiveInvolvement => check_involvement(method, p, Polarity::Positive),
        Criterion::NegativeInvolvement => check_involvement(method, p, Polarity::Negative),
        Criterion::Monotonicity => check_monotonicity(method, p),
        Criterion::ReversalSymmetry => check_reversal_symmetry(method, p),
        Criterion::Isda => check_isda(method, p),
        Criterion::Smith => check_subset(method, p, SubsetTarget::Smith),
        Criterion::Schwartz => check_subset(method, p, SubsetTarget::Schwartz),
        Criterion::Pareto => check_pareto(method, p),
        Criterion::WinnerContinuity => {
            if !method.winners(p)?.is_unique() {
                return Ok(None);
            }
            if p.num_candidates() > CONTINUITY_MAX_CANDIDATES {
                return Err(Error::InvalidArgument(format!(
                    "winner continuity tries every ballot and is limited to {CONTINUITY_MAX_CANDIDATES} candidates"
                )));
            }
            let mut order = p.candidates().to_vec();
            loop {
                if let Some(w) = check_winner_continuity(method, p, &Ballot::new(order.clone())?)? {
                    return Ok(Some(w));
                }
                if !next_permutation(&mut order) {
                    return Ok(None);
                }
            }
        }
    }
}

fn next_permutation(v: &mut [Candidate]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else { return false };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Outcome of a randomized search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    /// Instances on which the criterion applied.
    pub instances: u64,
    pub witnesses: u64,
    /// Witness from the lowest-numbered trial that produced one.
    pub first: Option<Witness>,
}

/// Checks `criterion` on `trials` random instances drawn from `config`.
///
/// Trial `t` uses the profile `config.profile(t)`. Criteria that need more
/// than a profile draw it from an extra RNG stream: clone independence adds
/// two or three clones of a random candidate, amalgamation splits the profile
/// into two overlapping parts, and winner continuity adds one random ballot.
pub fn search(criterion: Criterion, method: MethodId, config: &GeneratorConfig, trials: u64) -> Result<SearchSummary> {
    config.validate()?;
    let results: Vec<Option<Option<Witness>>> =
        (0..trials).into_par_iter().map(|t| search_trial(criterion, method, config, t)).collect::<Result<_>>()?;
    let instances = results.iter().filter(|r| r.is_some()).count() as u64;
    let mut found = results.into_iter().flatten().flatten();
    let first = found.next();
    let witnesses = first.iter().count() as u64 + found.count() as u64;
    Ok(SearchSummary { instances, witnesses, first })
}

fn search_trial(criterion: Criterion, method: MethodId, config: &GeneratorConfig, trial: u64) -> Result<Option<Option<Witness>>> {
    let p = config.profile(trial)?;
    let mut rng = stream_rng(config.seed ^ 0x9e37_79b9_7f4a_7c15, trial);
    let found = match criterion {
        Criterion::CloneIndependence => {
            let target = p.candidates()[rng.random_range(0..p.num_candidates())];
            let (q, clones) = with_clones(&p, target, rng.random_range(2..=3), &mut rng)?;
            let c = clones.members()[rng.random_range(0..clones.members().len())];
            check_clone_independence(method, &q, &clones, c)?
        }
        Criterion::Amalgamation => {
            if p.num_candidates() < 3 {
                return Ok(None);
            }
            let (a, b) = amalgamable_split(&p, &mut rng)?;
            check_amalgamation(method, &a, &b, &p)?
        }
        Criterion::WinnerContinuity => {
            if !method.winners(&p)?.is_unique() {
                return Ok(None);
            }
            let mut order = p.candidates().to_vec();
            order.shuffle(&mut rng);
            check_winner_continuity(method, &p, &Ballot::new(order)?)?
        }
        Criterion::PositiveInvolvement | Criterion::NegativeInvolvement if p.num_voters() < 2 => return Ok(None),
        Criterion::ReversalSymmetry if p.num_candidates() < 2 => return Ok(None),
        _ => check_profile(criterion, method, &p)?,
    };
    Ok(Some(found))
}
