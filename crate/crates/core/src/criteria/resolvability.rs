//! Four-candidate graphs on which any method satisfying stability for
//! winners must return two winners.
//!
//! Candidates `0..4` play the roles x1..x4 with edges
//! x1->x3 (psi), x4->x2 (beta), x2->x1 (gamma), x3->x2 (phi), x4->x3 (chi),
//! x1->x4 (alpha), where alpha < gamma < beta and gamma < phi < psi.

use crate::debord::realize;
use crate::generators::stream_rng;
use crate::margins::{MarginGraph, QualitativeMarginGraph};
use crate::profile::{Candidate, Profile};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

pub fn resolvability_stress(seed: u64) -> (QualitativeMarginGraph, Profile) {
    resolvability_stress_with(&mut stream_rng(seed, 0))
}

pub fn resolvability_stress_with<R: Rng + ?Sized>(rng: &mut R) -> (QualitativeMarginGraph, Profile) {
    const ALPHA: usize = 0;
    const BETA: usize = 1;
    const GAMMA: usize = 2;
    const PHI: usize = 3;
    const CHI: usize = 4;
    const PSI: usize = 5;
    let mut rank: [usize; 6] = [0, 1, 2, 3, 4, 5];
    loop {
        rank.shuffle(rng);
        if rank[ALPHA] < rank[GAMMA] && rank[GAMMA] < rank[BETA] && rank[GAMMA] < rank[PHI] && rank[PHI] < rank[PSI] {
            break;
        }
    }
    let odd: Vec<i64> = (0..50).map(|i| 2 * i + 1).collect();
    let mut weights: Vec<i64> = odd.choose_multiple(rng, 6).copied().collect();
    weights.sort_unstable();
    let w = |role: usize| weights[rank[role]];
    let c = Candidate;
    let edges = [
        (c(0), c(2), w(PSI)),
        (c(3), c(1), w(BETA)),
        (c(1), c(0), w(GAMMA)),
        (c(2), c(1), w(PHI)),
        (c(3), c(2), w(CHI)),
        (c(0), c(3), w(ALPHA)),
    ];
    let m = MarginGraph::from_edges((0..4).map(Candidate), &edges).expect("complete odd graph");
    let profile = realize(&m).expect("valid graph");
    (m.qualitative(), profile)
}
