//! Axiom checkers.
//!
//! Each `check_*` function examines one instance and returns `Ok(None)` when
//! the criterion holds there, or a [`Witness`] recording the profiles, the
//! pivotal candidates and the winner sets that exhibit the violation.

mod checks;
mod clones;
mod rejectability;
mod resolvability;
mod search;

pub use checks::{
    check_amalgamation, check_immunity_to_spoilers, check_involvement, check_isda, check_monotonicity,
    check_pareto, check_reversal_symmetry, check_stability_for_winners, check_subset, check_winner_continuity,
    is_amalgamation, Polarity, SubsetTarget,
};
pub use clones::{check_clone_independence, find_clone_sets, is_clone_set, CloneSet};
pub use rejectability::{reinforce, rejectability_graph, rejectability_witness};
pub use resolvability::{resolvability_stress, resolvability_stress_with};
pub use search::{check_profile, search, SearchSummary, CONTINUITY_MAX_CANDIDATES};

use crate::error::{Error, Result};
use crate::methods::{MethodId, WinnerSet};
use crate::profile::{Candidate, Profile};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    CloneIndependence,
    ImmunityToSpoilers,
    StabilityForWinners,
    StrongStabilityForWinners,
    Amalgamation,
    PositiveInvolvement,
    NegativeInvolvement,
    Monotonicity,
    ReversalSymmetry,
    Isda,
    Smith,
    Schwartz,
    Pareto,
    WinnerContinuity,
}

impl Criterion {
    pub const ALL: [Criterion; 14] = [
        Criterion::CloneIndependence,
        Criterion::ImmunityToSpoilers,
        Criterion::StabilityForWinners,
        Criterion::StrongStabilityForWinners,
        Criterion::Amalgamation,
        Criterion::PositiveInvolvement,
        Criterion::NegativeInvolvement,
        Criterion::Monotonicity,
        Criterion::ReversalSymmetry,
        Criterion::Isda,
        Criterion::Smith,
        Criterion::Schwartz,
        Criterion::Pareto,
        Criterion::WinnerContinuity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::CloneIndependence => "clone_independence",
            Criterion::ImmunityToSpoilers => "immunity_to_spoilers",
            Criterion::StabilityForWinners => "stability_for_winners",
            Criterion::StrongStabilityForWinners => "strong_stability_for_winners",
            Criterion::Amalgamation => "amalgamation",
            Criterion::PositiveInvolvement => "positive_involvement",
            Criterion::NegativeInvolvement => "negative_involvement",
            Criterion::Monotonicity => "monotonicity",
            Criterion::ReversalSymmetry => "reversal_symmetry",
            Criterion::Isda => "isda",
            Criterion::Smith => "smith",
            Criterion::Schwartz => "schwartz",
            Criterion::Pareto => "pareto",
            Criterion::WinnerContinuity => "winner_continuity",
        }
    }

    pub fn catalog() -> String {
        Criterion::ALL.iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        Criterion::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown criterion '{s}'; valid: {}", Criterion::catalog())))
    }
}

/// One profile of a witness together with the winners the method chose.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub label: String,
    pub profile: Profile,
    pub winners: WinnerSet,
}

/// A recorded violation of a criterion by a method.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub criterion: Criterion,
    pub method: MethodId,
    /// Which clause failed, in words.
    pub note: String,
    pub candidates: Vec<Candidate>,
    pub cases: Vec<Case>,
}

impl Witness {
    /// Recomputes every stored winner set.
    pub fn verify(&self) -> Result<bool> {
        for case in &self.cases {
            if self.method.winners(&case.profile)? != case.winners {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn case(&self, label: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.label == label)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witnesses serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }
}

pub(crate) fn case(label: &str, profile: &Profile, winners: &WinnerSet) -> Case {
    Case { label: label.to_string(), profile: profile.clone(), winners: winners.clone() }
}
