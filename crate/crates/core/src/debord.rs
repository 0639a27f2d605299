//! Realizing a margin graph by an explicit profile.
//!
//! Even graphs are built from ballot pairs `(a, b, rest)` and
//! `(reverse(rest), a, b)`: each pair adds 2 to the margin of `a` over `b`
//! and cancels everywhere else. Odd graphs start from one seed ballot listing
//! the candidates in id order and correct the (now even) residual with pairs.

use crate::error::Result;
use crate::margins::MarginGraph;
use crate::profile::{Candidate, Profile};

/// A profile whose margin graph is exactly `m`.
pub fn realize(m: &MarginGraph) -> Result<Profile> {
    m.validate()?;
    let k = m.len();
    let ids = m.ids().to_vec();
    let mut rankings: Vec<Candidate> = Vec::new();
    let mut counts: Vec<u64> = Vec::new();

    let odd = k > 1 && m.weight(0, 1) % 2 != 0;
    if odd {
        rankings.extend_from_slice(&ids);
        counts.push(1);
    }
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            // residual after the seed, which ranks lower ids first
            let seed = if odd {
                if i < j {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            let residual = m.weight(i, j) - seed;
            if residual <= 0 {
                continue;
            }
            let pairs = (residual / 2) as u64;
            let rest: Vec<Candidate> = (0..k).filter(|&c| c != i && c != j).map(|c| ids[c]).collect();
            rankings.push(ids[i]);
            rankings.push(ids[j]);
            rankings.extend_from_slice(&rest);
            counts.push(pairs);
            rankings.extend(rest.iter().rev().copied());
            rankings.push(ids[i]);
            rankings.push(ids[j]);
            counts.push(pairs);
        }
    }
    if counts.is_empty() {
        // all margins zero: one ballot and its reverse
        rankings.extend_from_slice(&ids);
        rankings.extend(ids.iter().rev().copied());
        counts.extend([1, 1]);
    }
    Ok(Profile::from_parts(ids, rankings, counts))
}
