//! Candidates, ballots and profiles, plus the profile algebra used throughout
//! the crate: combining electorates, replicating them, deleting candidates,
//! restricting to a subset and reversing every ballot.
//!
//! Candidate ids are arbitrary distinct integers. Freshly generated or parsed
//! profiles use `0..k`; deleting or restricting keeps the surviving ids, so
//! winner sets of `P` and `P - x` can be compared directly.

use crate::error::{Error, Result};
use crate::margins::MarginGraph;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A candidate, identified by a small integer.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Candidate(pub u32);

impl Candidate {
    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Candidate {
    fn from(id: u32) -> Self {
        Candidate(id)
    }
}

/// A strict ranking of distinct candidates, most preferred first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ballot(Vec<Candidate>);

impl Ballot {
    pub fn new(ranking: Vec<Candidate>) -> Result<Self> {
        if ranking.is_empty() {
            return Err(Error::InvalidBallot("empty ranking".into()));
        }
        let mut sorted = ranking.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidBallot(format!("candidate {} listed twice", w[0])));
        }
        Ok(Ballot(ranking))
    }

    /// Builds a ballot from raw ids.
    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        Ballot::new(ids.iter().copied().map(Candidate).collect())
    }

    pub fn as_slice(&self) -> &[Candidate] {
        &self.0
    }

    pub fn top(&self) -> Candidate {
        self.0[0]
    }

    pub fn bottom(&self) -> Candidate {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Ballot {
        Ballot(self.0.iter().rev().copied().collect())
    }

    pub fn into_vec(self) -> Vec<Candidate> {
        self.0
    }
}

/// A multiset of linear ballots over a common candidate set.
///
/// Ballots are stored flat as `(ranking, multiplicity)` entries. The same
/// ranking may occur in several entries; equality compares the merged
/// multisets.
#[derive(Clone, Debug)]
pub struct Profile {
    candidates: Vec<Candidate>,
    rankings: Vec<Candidate>,
    counts: Vec<u64>,
}

impl Profile {
    /// Builds a profile from a candidate set and `(ballot, multiplicity)` entries.
    pub fn new<C, B>(candidates: C, ballots: B) -> Result<Self>
    where
        C: IntoIterator<Item = Candidate>,
        B: IntoIterator<Item = (Ballot, u64)>,
    {
        let mut cands: Vec<Candidate> = candidates.into_iter().collect();
        cands.sort_unstable();
        if cands.is_empty() {
            return Err(Error::InvalidProfile("no candidates".into()));
        }
        if let Some(w) = cands.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidProfile(format!("candidate {} listed twice", w[0])));
        }
        let k = cands.len();
        let mut rankings = Vec::new();
        let mut counts = Vec::new();
        for (ballot, count) in ballots {
            if count == 0 {
                return Err(Error::InvalidProfile("ballot multiplicity must be positive".into()));
            }
            if ballot.len() != k {
                return Err(Error::InvalidBallot(format!(
                    "ballot ranks {} candidates, profile has {}",
                    ballot.len(),
                    k
                )));
            }
            for &c in ballot.as_slice() {
                if cands.binary_search(&c).is_err() {
                    return Err(Error::UnknownCandidate(c));
                }
            }
            rankings.extend_from_slice(ballot.as_slice());
            counts.push(count);
        }
        if counts.is_empty() {
            return Err(Error::InvalidProfile("a profile needs at least one voter".into()));
        }
        Ok(Profile { candidates: cands, rankings, counts })
    }

    /// Builds a profile whose candidate set is read off the first ballot.
    pub fn from_ballots<B>(ballots: B) -> Result<Self>
    where
        B: IntoIterator<Item = (Ballot, u64)>,
    {
        let ballots: Vec<(Ballot, u64)> = ballots.into_iter().collect();
        let first = ballots
            .first()
            .ok_or_else(|| Error::InvalidProfile("a profile needs at least one voter".into()))?;
        let cands = first.0.as_slice().to_vec();
        Profile::new(cands, ballots)
    }

    /// Trusted constructor for generators that build valid rankings by construction.
    pub(crate) fn from_parts(candidates: Vec<Candidate>, rankings: Vec<Candidate>, counts: Vec<u64>) -> Self {
        debug_assert!(!counts.is_empty());
        debug_assert_eq!(rankings.len(), candidates.len() * counts.len());
        Profile { candidates, rankings, counts }
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn num_candidates(&self) -> usize {
        self.candidates.len()
    }

    pub fn num_voters(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Number of stored `(ranking, multiplicity)` entries.
    pub fn num_entries(&self) -> usize {
        self.counts.len()
    }

    pub fn contains(&self, c: Candidate) -> bool {
        self.candidates.binary_search(&c).is_ok()
    }

    /// Position of `c` in the sorted candidate list.
    pub fn index_of(&self, c: Candidate) -> Option<usize> {
        self.candidates.binary_search(&c).ok()
    }

    pub fn entry(&self, i: usize) -> (&[Candidate], u64) {
        let k = self.candidates.len();
        (&self.rankings[i * k..(i + 1) * k], self.counts[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[Candidate], u64)> + '_ {
        let k = self.candidates.len();
        self.rankings.chunks_exact(k).zip(self.counts.iter().copied())
    }

    fn check(&self, c: Candidate) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::UnknownCandidate(c))
        }
    }

    /// Voters ranking `a` above `b` minus voters ranking `b` above `a`.
    pub fn margin(&self, a: Candidate, b: Candidate) -> Result<i64> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Ok(0);
        }
        let mut m = 0i64;
        for (r, w) in self.entries() {
            let pa = r.iter().position(|&c| c == a).unwrap_or(0);
            let pb = r.iter().position(|&c| c == b).unwrap_or(0);
            if pa < pb {
                m += w as i64;
            } else {
                m -= w as i64;
            }
        }
        Ok(m)
    }

    pub fn margin_graph(&self) -> MarginGraph {
        let k = self.candidates.len();
        let lookup = self.local_lookup();
        let mut above = vec![0i64; k * k];
        let mut local = vec![0usize; k];
        for (r, w) in self.entries() {
            for (p, c) in r.iter().enumerate() {
                local[p] = lookup[c.0 as usize] as usize;
            }
            let w = w as i64;
            for p in 0..k {
                let row = local[p] * k;
                for &q in &local[p + 1..] {
                    above[row + q] += w;
                }
            }
        }
        let mut m = vec![0i64; k * k];
        for i in 0..k {
            for j in 0..k {
                m[i * k + j] = above[i * k + j] - above[j * k + i];
            }
        }
        MarginGraph::from_parts(self.candidates.clone(), m)
    }

    /// Dense map from candidate id to position in the candidate list.
    pub(crate) fn local_lookup(&self) -> Vec<u32> {
        let max = self.candidates.last().map_or(0, |c| c.0 as usize);
        let mut lookup = vec![u32::MAX; max + 1];
        for (i, c) in self.candidates.iter().enumerate() {
            lookup[c.0 as usize] = i as u32;
        }
        lookup
    }

    /// Number of voters ranking each candidate first, in candidate order.
    pub fn first_place_counts(&self) -> Vec<u64> {
        let lookup = self.local_lookup();
        let mut t = vec![0u64; self.candidates.len()];
        for (r, w) in self.entries() {
            t[lookup[r[0].0 as usize] as usize] += w;
        }
        t
    }

    /// The electorate of `self` together with that of `other`.
    pub fn combine(&self, other: &Profile) -> Result<Profile> {
        if self.candidates != other.candidates {
            return Err(Error::CandidateMismatch);
        }
        let mut rankings = self.rankings.clone();
        rankings.extend_from_slice(&other.rankings);
        let mut counts = self.counts.clone();
        counts.extend_from_slice(&other.counts);
        Ok(Profile { candidates: self.candidates.clone(), rankings, counts })
    }

    /// Every voter copied `m` times.
    pub fn replicate(&self, m: u64) -> Result<Profile> {
        if m == 0 {
            return Err(Error::InvalidArgument("replication factor must be positive".into()));
        }
        let mut p = self.clone();
        for c in &mut p.counts {
            *c *= m;
        }
        Ok(p)
    }

    /// Adds `count` voters casting `ballot`.
    pub fn with_ballot(&self, ballot: &Ballot, count: u64) -> Result<Profile> {
        let extra = Profile::new(self.candidates.iter().copied(), [(ballot.clone(), count)])?;
        self.combine(&extra)
    }

    /// Deletes `x` from every ballot.
    pub fn remove_candidate(&self, x: Candidate) -> Result<Profile> {
        self.check(x)?;
        if self.candidates.len() < 2 {
            return Err(Error::InvalidArgument("cannot remove the only candidate".into()));
        }
        let keep: Vec<Candidate> = self.candidates.iter().copied().filter(|&c| c != x).collect();
        Ok(self.restrict_unchecked(keep))
    }

    /// Restricts every ballot to `subset`, keeping relative order.
    pub fn restrict(&self, subset: &[Candidate]) -> Result<Profile> {
        if subset.is_empty() {
            return Err(Error::InvalidArgument("cannot restrict to the empty set".into()));
        }
        let mut keep = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &c in &keep {
            self.check(c)?;
        }
        Ok(self.restrict_unchecked(keep))
    }

    fn restrict_unchecked(&self, keep: Vec<Candidate>) -> Profile {
        let k = self.candidates.len();
        let mut mask = vec![false; self.local_lookup().len()];
        for c in &keep {
            mask[c.0 as usize] = true;
        }
        let mut rankings = Vec::with_capacity(keep.len() * self.counts.len());
        for r in self.rankings.chunks_exact(k) {
            rankings.extend(r.iter().copied().filter(|c| mask[c.0 as usize]));
        }
        Profile { candidates: keep, rankings, counts: self.counts.clone() }
    }

    /// Every ballot turned upside down.
    pub fn reverse(&self) -> Profile {
        let k = self.candidates.len();
        let mut rankings = Vec::with_capacity(self.rankings.len());
        for r in self.rankings.chunks_exact(k) {
            rankings.extend(r.iter().rev().copied());
        }
        Profile { candidates: self.candidates.clone(), rankings, counts: self.counts.clone() }
    }

    /// Removes one voter from entry `i`.
    pub fn without_one(&self, i: usize) -> Result<Profile> {
        if i >= self.counts.len() {
            return Err(Error::InvalidArgument(format!("no ballot entry {i}")));
        }
        if self.num_voters() < 2 {
            return Err(Error::InvalidArgument("cannot remove the only voter".into()));
        }
        let mut p = self.clone();
        if p.counts[i] > 1 {
            p.counts[i] -= 1;
        } else {
            let k = p.candidates.len();
            p.counts.remove(i);
            p.rankings.drain(i * k..(i + 1) * k);
        }
        Ok(p)
    }

    /// One voter of entry `i` moves `x` up by one place. Returns `None` if
    /// `x` is already first on that ballot.
    pub fn lift(&self, i: usize, x: Candidate) -> Result<Option<Profile>> {
        self.check(x)?;
        let (r, w) = self.entry(i);
        let pos = r.iter().position(|&c| c == x).expect("ballot covers the candidate set");
        if pos == 0 {
            return Ok(None);
        }
        let mut lifted = r.to_vec();
        lifted.swap(pos - 1, pos);
        let mut p = if w > 1 {
            let mut p = self.clone();
            p.counts[i] -= 1;
            p
        } else {
            let mut p = self.clone();
            let k = p.candidates.len();
            p.counts.remove(i);
            p.rankings.drain(i * k..(i + 1) * k);
            p
        };
        p.rankings.extend_from_slice(&lifted);
        p.counts.push(1);
        Ok(Some(p))
    }

    /// Merged, sorted representation: each distinct ranking once, in
    /// lexicographic order.
    pub fn canonical(&self) -> Profile {
        let k = self.candidates.len();
        let mut entries: Vec<(&[Candidate], u64)> = self.entries().collect();
        entries.sort_unstable_by(|a, b| a.0.cmp(b.0));
        let mut rankings: Vec<Candidate> = Vec::with_capacity(self.rankings.len());
        let mut counts: Vec<u64> = Vec::new();
        for (r, w) in entries {
            let n = counts.len();
            if n > 0 && &rankings[(n - 1) * k..] == r {
                counts[n - 1] += w;
            } else {
                rankings.extend_from_slice(r);
                counts.push(w);
            }
        }
        Profile { candidates: self.candidates.clone(), rankings, counts }
    }

    /// Ballots as owned values, one entry per stored ranking.
    pub fn ballots(&self) -> Vec<(Ballot, u64)> {
        self.entries().map(|(r, w)| (Ballot(r.to_vec()), w)).collect()
    }
}

impl PartialEq for Profile {
    fn eq(&self, other: &Self) -> bool {
        if self.candidates != other.candidates || self.num_voters() != other.num_voters() {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        a.rankings == b.rankings && a.counts == b.counts
    }
}

impl Eq for Profile {}
