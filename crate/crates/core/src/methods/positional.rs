use super::WinnerSet;
use crate::profile::{Candidate, Profile};

/// Candidates with the most first-place votes.
pub fn plurality(p: &Profile) -> WinnerSet {
    let tally = p.first_place_counts();
    let best = *tally.iter().max().unwrap();
    let cands = p.candidates();
    WinnerSet::from_sorted((0..cands.len()).filter(|&i| tally[i] == best).map(|i| cands[i]).collect())
}

/// Instant runoff: stop when someone holds a strict majority of first places;
/// otherwise drop every candidate with the fewest. If all remaining
/// candidates are tied, they all win.
pub fn ranked_choice(p: &Profile) -> WinnerSet {
    let cands = p.candidates();
    let k = cands.len();
    let lookup = p.local_lookup();
    let total = p.num_voters();
    let mut alive = vec![true; k];
    loop {
        let mut tally = vec![0u64; k];
        for (r, w) in p.entries() {
            let top = r.iter().map(|c| lookup[c.0 as usize] as usize).find(|&i| alive[i]).unwrap();
            tally[top] += w;
        }
        let live: Vec<usize> = (0..k).filter(|&i| alive[i]).collect();
        if let Some(&i) = live.iter().find(|&&i| 2 * tally[i] > total) {
            return WinnerSet::from_sorted(vec![cands[i]]);
        }
        let low = live.iter().map(|&i| tally[i]).min().unwrap();
        if live.iter().all(|&i| tally[i] == low) {
            let winners: Vec<Candidate> = live.iter().map(|&i| cands[i]).collect();
            return WinnerSet::from_sorted(winners);
        }
        for &i in &live {
            if tally[i] == low {
                alive[i] = false;
            }
        }
    }
}
