use super::{case, Criterion, Witness};
use crate::error::{Error, Result};
use crate::methods::MethodId;
use crate::profile::{Candidate, Profile};

/// A set of clones: at least two candidates, not all of them, that form a
/// contiguous block on every ballot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CloneSet(Vec<Candidate>);

impl CloneSet {
    pub fn new(p: &Profile, members: &[Candidate]) -> Result<Self> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if !is_clone_set(p, &m)? {
            return Err(Error::InvalidArgument(format!("{m:?} is not a set of clones")));
        }
        Ok(CloneSet(m))
    }

    pub fn members(&self) -> &[Candidate] {
        &self.0
    }

    pub fn contains(&self, c: Candidate) -> bool {
        self.0.binary_search(&c).is_ok()
    }
}

/// True if `members` is a clone set of `p`.
pub fn is_clone_set(p: &Profile, members: &[Candidate]) -> Result<bool> {
    for &c in members {
        if !p.contains(c) {
            return Err(Error::UnknownCandidate(c));
        }
    }
    let size = {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        m.len()
    };
    if size < 2 || size >= p.num_candidates() {
        return Ok(false);
    }
    Ok(p.entries().all(|(r, _)| {
        let first = r.iter().position(|c| members.contains(c)).unwrap();
        r[first..first + size].iter().all(|c| members.contains(c))
    }))
}

/// All inclusion-maximal clone sets.
///
/// Every clone set is an interval of the first ballot, so intervals are
/// grown from each start while tracking each ballot's position span.
pub fn find_clone_sets(p: &Profile) -> Vec<CloneSet> {
    let k = p.num_candidates();
    if k < 3 {
        return Vec::new();
    }
    let lookup = p.local_lookup();
    let positions: Vec<Vec<usize>> = p
        .entries()
        .map(|(r, _)| {
            let mut pos = vec![0; k];
            for (i, c) in r.iter().enumerate() {
                pos[lookup[c.0 as usize] as usize] = i;
            }
            pos
        })
        .collect();
    let first = p.entry(0).0;
    let mut found: Vec<(usize, usize)> = Vec::new();
    for s in 0..k {
        let mut lo = vec![usize::MAX; positions.len()];
        let mut hi = vec![0usize; positions.len()];
        for e in s..k {
            let c = lookup[first[e].0 as usize] as usize;
            let mut ok = true;
            for (b, pos) in positions.iter().enumerate() {
                lo[b] = lo[b].min(pos[c]);
                hi[b] = hi[b].max(pos[c]);
                ok &= hi[b] - lo[b] == e - s;
            }
            let size = e - s + 1;
            if ok && size >= 2 && size < k {
                found.push((s, e));
            }
        }
    }
    let maximal = found
        .iter()
        .filter(|&&(s, e)| !found.iter().any(|&(s2, e2)| s2 <= s && e <= e2 && (s2, e2) != (s, e)))
        .map(|&(s, e)| {
            let mut m = first[s..=e].to_vec();
            m.sort_unstable();
            CloneSet(m)
        })
        .collect();
    maximal
}

/// Checks both clauses of independence of clones for deleting `c` from `clones`.
pub fn check_clone_independence(
    method: MethodId,
    p: &Profile,
    clones: &CloneSet,
    c: Candidate,
) -> Result<Option<Witness>> {
    if !clones.contains(c) {
        return Err(Error::InvalidArgument(format!("{c} is not in the clone set")));
    }
    if !is_clone_set(p, clones.members())? {
        return Err(Error::InvalidArgument("not a clone set of this profile".into()));
    }
    let full = method.winners(p)?;
    let reduced_profile = p.remove_candidate(c)?;
    let reduced = method.winners(&reduced_profile)?;
    let witness = |note: &str, candidates: Vec<Candidate>| Witness {
        criterion: Criterion::CloneIndependence,
        method,
        note: note.to_string(),
        candidates,
        cases: vec![case("with_clone", p, &full), case("without_clone", &reduced_profile, &reduced)],
    };
    for &a in p.candidates() {
        if !clones.contains(a) && full.contains(a) != reduced.contains(a) {
            return Ok(Some(witness("non-clone choice depends on clones", vec![a, c])));
        }
    }
    let before = clones.members().iter().any(|&x| full.contains(x));
    let after = clones.members().iter().any(|&x| x != c && reduced.contains(x));
    if before != after {
        return Ok(Some(witness("clone choice depends on clones", vec![c])));
    }
    Ok(None)
}
