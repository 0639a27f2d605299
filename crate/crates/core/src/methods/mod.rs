//! Voting methods.
//!
//! Everything except [`plurality`] and [`ranked_choice`] depends only on the
//! margin graph and is exposed as a function of [`MarginGraph`].

mod positional;
mod ranked_pairs;
mod split_cycle;
mod tournament;

pub use positional::{plurality, ranked_choice};
pub use ranked_pairs::{is_stack, ranked_pairs, ranked_pairs_with_budget, DEFAULT_NODE_BUDGET};
pub use split_cycle::{
    beat_path, cycle_number, sc_defeats, split_cycle, strength_matrix, Algorithm, DefeatRelation, StrengthMatrix,
    DEFAULT_CYCLE_CAP,
};
pub use tournament::{
    condorcet_loser, condorcet_winner, copeland, getcha, gocha, minimax, uncovered, UncoveredVariant,
};

use crate::error::{Error, Result};
use crate::margins::MarginGraph;
use crate::profile::{Candidate, Profile};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A nonempty set of winners, sorted by candidate id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Candidate>", into = "Vec<Candidate>")]
pub struct WinnerSet(Vec<Candidate>);

impl WinnerSet {
    pub fn new(mut members: Vec<Candidate>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::InvalidArgument("a winner set cannot be empty".into()));
        }
        Ok(WinnerSet(members))
    }

    pub(crate) fn from_sorted(members: Vec<Candidate>) -> Self {
        debug_assert!(!members.is_empty());
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        WinnerSet(members)
    }

    /// Winners given by a mask over the graph's candidate positions.
    pub(crate) fn from_mask(m: &MarginGraph, mask: impl Fn(usize) -> bool) -> Self {
        WinnerSet::from_sorted((0..m.len()).filter(|&i| mask(i)).map(|i| m.id(i)).collect())
    }

    pub fn contains(&self, c: Candidate) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_unique(&self) -> bool {
        self.0.len() == 1
    }

    pub fn is_subset(&self, other: &WinnerSet) -> bool {
        self.0.iter().all(|&c| other.contains(c))
    }

    pub fn as_slice(&self) -> &[Candidate] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Candidate> + '_ {
        self.0.iter().copied()
    }
}

impl TryFrom<Vec<Candidate>> for WinnerSet {
    type Error = Error;
    fn try_from(v: Vec<Candidate>) -> Result<Self> {
        WinnerSet::new(v)
    }
}

impl From<WinnerSet> for Vec<Candidate> {
    fn from(w: WinnerSet) -> Self {
        w.0
    }
}

impl fmt::Display for WinnerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// The implemented voting methods.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodId {
    SplitCycle,
    BeatPath,
    RankedPairs,
    Minimax,
    Copeland,
    Getcha,
    Gocha,
    UncoveredFishburn,
    UncoveredGillies,
    RankedChoice,
    Plurality,
}

impl MethodId {
    pub const ALL: [MethodId; 11] = [
        MethodId::SplitCycle,
        MethodId::BeatPath,
        MethodId::RankedPairs,
        MethodId::Minimax,
        MethodId::Copeland,
        MethodId::Getcha,
        MethodId::Gocha,
        MethodId::UncoveredFishburn,
        MethodId::UncoveredGillies,
        MethodId::RankedChoice,
        MethodId::Plurality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodId::SplitCycle => "split_cycle",
            MethodId::BeatPath => "beat_path",
            MethodId::RankedPairs => "ranked_pairs",
            MethodId::Minimax => "minimax",
            MethodId::Copeland => "copeland",
            MethodId::Getcha => "getcha",
            MethodId::Gocha => "gocha",
            MethodId::UncoveredFishburn => "uncovered_fishburn",
            MethodId::UncoveredGillies => "uncovered_gillies",
            MethodId::RankedChoice => "ranked_choice",
            MethodId::Plurality => "plurality",
        }
    }

    /// True if the method is a function of the margin graph alone.
    pub fn uses_margins_only(self) -> bool {
        !matches!(self, MethodId::RankedChoice | MethodId::Plurality)
    }

    /// True if the method is a function of the qualitative margin graph alone.
    pub fn uses_qualitative_only(self) -> bool {
        matches!(
            self,
            MethodId::SplitCycle
                | MethodId::Copeland
                | MethodId::Getcha
                | MethodId::Gocha
                | MethodId::UncoveredFishburn
                | MethodId::UncoveredGillies
        )
    }

    pub fn winners(self, p: &Profile) -> Result<WinnerSet> {
        match self {
            MethodId::RankedChoice => Ok(ranked_choice(p)),
            MethodId::Plurality => Ok(plurality(p)),
            _ => self.winners_from_margins(&p.margin_graph()),
        }
    }

    /// Winners computed from a margin graph; fails for ballot-based methods.
    pub fn winners_from_margins(self, m: &MarginGraph) -> Result<WinnerSet> {
        Ok(match self {
            MethodId::SplitCycle => split_cycle(m),
            MethodId::BeatPath => beat_path(m),
            MethodId::RankedPairs => ranked_pairs(m)?,
            MethodId::Minimax => minimax(m),
            MethodId::Copeland => copeland(m),
            MethodId::Getcha => getcha(m),
            MethodId::Gocha => gocha(m),
            MethodId::UncoveredFishburn => uncovered(m, UncoveredVariant::Fishburn),
            MethodId::UncoveredGillies => uncovered(m, UncoveredVariant::Gillies),
            MethodId::RankedChoice | MethodId::Plurality => {
                return Err(Error::Unsupported {
                    method: self.name().into(),
                    reason: "needs ballots, not just margins".into(),
                })
            }
        })
    }

    pub fn catalog() -> String {
        MethodId::ALL.iter().map(|m| m.name()).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        if s == "uncovered" {
            return Ok(MethodId::UncoveredGillies);
        }
        MethodId::ALL
            .iter()
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method '{s}'; valid: {}", MethodId::catalog())))
    }
}
