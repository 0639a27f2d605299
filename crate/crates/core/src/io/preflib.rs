use super::Election;
use crate::error::{Error, Result};
use crate::profile::{Ballot, Candidate, Profile};
use std::collections::BTreeMap;
use std::fmt::Write;

/// Parses a strict-complete-order preflib file.
///
/// Both the current layout (`# KEY: value` metadata, then `count: a,b,c`)
/// and the legacy one (alternative count, `id,name` lines, a totals line,
/// then `count,a,b,c`) are accepted. Preflib ids become candidate ids as-is.
/// Ties, partial ballots and non-`soc` data types are rejected.
pub fn parse_preflib(text: &str) -> Result<Election> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if !l.contains(':') && !l.contains(',') => parse_legacy(text),
        _ => parse_current(text),
    }
}

fn unsupported(line: usize, message: impl Into<String>) -> Error {
    Error::UnsupportedFormat { line, message: message.into() }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_current(text: &str) -> Result<Election> {
    let mut declared: Option<usize> = None;
    let mut labels = BTreeMap::new();
    let mut ballots: Vec<(usize, Vec<Candidate>, u64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(meta) = line.strip_prefix('#') {
            let Some((key, value)) = meta.split_once(':') else { continue };
            let key = key.trim().to_ascii_uppercase();
            let value = value.trim();
            if key == "DATA TYPE" && !value.eq_ignore_ascii_case("soc") {
                return Err(unsupported(n, format!("data type '{value}' is not a strict complete order")));
            } else if key == "NUMBER ALTERNATIVES" {
                declared = Some(value.parse().map_err(|_| parse_err(n, "invalid alternative count"))?);
            } else if let Some(id) = key.strip_prefix("ALTERNATIVE NAME ") {
                let id: u32 = id.trim().parse().map_err(|_| parse_err(n, "invalid alternative id"))?;
                labels.insert(Candidate(id), value.to_string());
            }
            continue;
        }
        let (count, ranking) = line.split_once(':').ok_or_else(|| parse_err(n, "expected 'count: ranking'"))?;
        let count = parse_count(count, n)?;
        ballots.push((n, parse_ranking(ranking, n)?, count));
    }
    build(ballots, declared, labels)
}

fn parse_legacy(text: &str) -> Result<Election> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (n, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?;
    let k: usize = header.parse().map_err(|_| parse_err(n, "invalid alternative count"))?;
    let mut labels = BTreeMap::new();
    for _ in 0..k {
        let (n, line) = lines.next().ok_or_else(|| parse_err(n, "missing alternative line"))?;
        let (id, name) = line.split_once(',').ok_or_else(|| parse_err(n, "expected 'id,name'"))?;
        let id: u32 = id.trim().parse().map_err(|_| parse_err(n, "invalid alternative id"))?;
        labels.insert(Candidate(id), name.trim().to_string());
    }
    // voters, total count, distinct orders
    let (n, totals) = lines.next().ok_or_else(|| parse_err(n, "missing totals line"))?;
    if totals.split(',').count() != 3 {
        return Err(parse_err(n, "expected 'voters,total,distinct'"));
    }
    let mut ballots = Vec::new();
    for (n, line) in lines {
        let (count, ranking) = line.split_once(',').ok_or_else(|| parse_err(n, "expected 'count,ranking'"))?;
        let count = parse_count(count, n)?;
        ballots.push((n, parse_ranking(ranking, n)?, count));
    }
    build(ballots, Some(k), labels)
}

fn parse_count(s: &str, line: usize) -> Result<u64> {
    match s.trim().parse::<u64>() {
        Ok(0) | Err(_) => Err(parse_err(line, format!("invalid ballot count '{}'", s.trim()))),
        Ok(c) => Ok(c),
    }
}

fn parse_ranking(s: &str, line: usize) -> Result<Vec<Candidate>> {
    if s.contains('{') || s.contains('}') {
        return Err(unsupported(line, "tied alternatives are not supported"));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map(Candidate)
                .map_err(|_| parse_err(line, format!("invalid alternative '{}'", t.trim())))
        })
        .collect()
}

fn build(
    ballots: Vec<(usize, Vec<Candidate>, u64)>,
    declared: Option<usize>,
    labels: BTreeMap<Candidate, String>,
) -> Result<Election> {
    let Some(first) = ballots.first() else {
        return Err(parse_err(0, "no ballots"));
    };
    let mut candidates = first.1.clone();
    candidates.sort_unstable();
    candidates.dedup();
    if let Some(k) = declared {
        if candidates.len() != k {
            return Err(unsupported(first.0, format!("ballot ranks {} of {k} alternatives", candidates.len())));
        }
    }
    let mut entries = Vec::with_capacity(ballots.len());
    for (n, ranking, count) in ballots {
        let mut sorted = ranking.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(n, "alternative ranked twice"));
        }
        if sorted != candidates {
            return Err(unsupported(n, "ballot does not rank every alternative exactly once"));
        }
        entries.push((Ballot::new(ranking).map_err(|e| parse_err(n, e.to_string()))?, count));
    }
    let profile = Profile::new(candidates, entries)?;
    Ok(Election { profile, labels })
}

/// Writes `election` in the current preflib layout; parsing the result
/// gives back the same election.
pub fn to_preflib(election: &Election) -> String {
    let p = election.profile.canonical();
    let mut out = String::new();
    writeln!(out, "# DATA TYPE: soc").unwrap();
    writeln!(out, "# NUMBER ALTERNATIVES: {}", p.num_candidates()).unwrap();
    writeln!(out, "# NUMBER VOTERS: {}", p.num_voters()).unwrap();
    writeln!(out, "# NUMBER UNIQUE ORDERS: {}", p.num_entries()).unwrap();
    for (c, name) in &election.labels {
        writeln!(out, "# ALTERNATIVE NAME {}: {name}", c.0).unwrap();
    }
    let mut entries: Vec<(&[Candidate], u64)> = p.entries().collect();
    entries.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    for (r, w) in entries {
        let ids: Vec<String> = r.iter().map(|c| c.0.to_string()).collect();
        writeln!(out, "{w}: {}", ids.join(",")).unwrap();
    }
    out
}
