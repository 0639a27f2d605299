//! Reading and writing elections and simulation results.
//!
//! * [`parse_preflib`] reads strict-complete-order preflib files (`.soc`).
//! * [`serialize_profile`] / [`deserialize_profile`] define a small
//!   canonical text format, also used when profiles are embedded in JSON.
//! * [`write_csv`] / [`read_csv`] handle simulation records.

mod canonical;
mod csv;
mod preflib;

pub use self::canonical::{deserialize_profile, serialize_profile, PROFILE_HEADER};
pub use self::csv::{read_csv, write_csv, SimRecord, CSV_COLUMNS, CSV_SCHEMA};
pub use self::preflib::{parse_preflib, to_preflib};

use crate::error::Result;
use crate::profile::{Candidate, Profile};
use std::collections::BTreeMap;
use std::path::Path;

/// A profile together with optional display names for its candidates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Election {
    pub profile: Profile,
    pub labels: BTreeMap<Candidate, String>,
}

impl Election {
    pub fn unlabeled(profile: Profile) -> Self {
        Election { profile, labels: BTreeMap::new() }
    }

    /// The display name of `c`, falling back to its id.
    pub fn label(&self, c: Candidate) -> String {
        self.labels.get(&c).cloned().unwrap_or_else(|| c.to_string())
    }
}

/// Reads a profile file, choosing the format from its first meaningful line:
/// the canonical header selects the canonical format, anything else is
/// parsed as preflib.
pub fn read_election(path: impl AsRef<Path>) -> Result<Election> {
    let text = std::fs::read_to_string(path)?;
    parse_election(&text)
}

pub fn parse_election(text: &str) -> Result<Election> {
    if text.lines().map(str::trim).find(|l| !l.is_empty()) == Some(PROFILE_HEADER) {
        Ok(Election::unlabeled(deserialize_profile(text)?))
    } else {
        parse_preflib(text)
    }
}
