use crate::error::{Error, Result};
use crate::profile::{Ballot, Candidate, Profile};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt::Write;

pub const PROFILE_HEADER: &str = "# splitcycle profile v1";

/// Canonical text form:
///
/// ```text
/// # splitcycle profile v1
/// candidates: 0,1,2
/// 3: 0,2,1
/// 2: 1,0,2
/// ```
///
/// Rankings are merged and listed in lexicographic order, so equal profiles
/// serialize to identical bytes.
pub fn serialize_profile(p: &Profile) -> String {
    let p = p.canonical();
    let mut out = String::new();
    out.push_str(PROFILE_HEADER);
    out.push('\n');
    out.push_str("candidates: ");
    out.push_str(&join(p.candidates()));
    out.push('\n');
    for (r, w) in p.entries() {
        writeln!(out, "{w}: {}", join(r)).unwrap();
    }
    out
}

fn join(cs: &[Candidate]) -> String {
    cs.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
}

pub fn deserialize_profile(text: &str) -> Result<Profile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: &str| Error::Parse { line, message: message.to_string() };

    match lines.next() {
        Some((_, l)) if l == PROFILE_HEADER => {}
        Some((n, _)) => return Err(err(n, "missing profile header")),
        None => return Err(err(0, "empty input")),
    }
    let (n, cand_line) = lines.next().ok_or_else(|| err(0, "missing candidate line"))?;
    let list = cand_line.strip_prefix("candidates:").ok_or_else(|| err(n, "expected 'candidates:'"))?;
    let candidates = parse_ids(list, n)?;

    let mut ballots = Vec::new();
    for (n, line) in lines {
        let (count, ranking) = line.split_once(':').ok_or_else(|| err(n, "expected 'count: ranking'"))?;
        let count: u64 = count.trim().parse().map_err(|_| err(n, "invalid multiplicity"))?;
        let ids = parse_ids(ranking, n)?;
        let ballot = Ballot::new(ids).map_err(|e| err(n, &e.to_string()))?;
        ballots.push((ballot, count));
    }
    Profile::new(candidates, ballots).map_err(|e| Error::Parse { line: 0, message: e.to_string() })
}

fn parse_ids(list: &str, line: usize) -> Result<Vec<Candidate>> {
    list.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map(Candidate)
                .map_err(|_| Error::Parse { line, message: format!("invalid candidate id '{}'", s.trim()) })
        })
        .collect()
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&serialize_profile(self))
    }
}

impl<'de> Deserialize<'de> for Profile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        deserialize_profile(&text).map_err(serde::de::Error::custom)
    }
}
