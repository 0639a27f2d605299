//! Seeded random profiles and margin graphs.
//!
//! All randomness comes from ChaCha8 keyed by a 64-bit seed, with a separate
//! stream per trial, so results do not depend on thread count or platform.

use crate::criteria::CloneSet;
use crate::error::{Error, Result};
use crate::margins::{MarginGraph, QualitativeMarginGraph};
use crate::profile::{Ballot, Candidate, Profile};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The generator behind every seeded sampler.
pub type SimRng = ChaCha8Rng;

/// Generator for `(seed, stream)`.
pub fn stream_rng(seed: u64, stream: u64) -> SimRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    ImpartialCulture,
    Mallows,
    MallowsTwoRef,
    Limit,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::ImpartialCulture => "ic",
            Model::Mallows => "mallows",
            Model::MallowsTwoRef => "mallows_two_ref",
            Model::Limit => "limit",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "ic" | "impartial_culture" => Ok(Model::ImpartialCulture),
            "mallows" => Ok(Model::Mallows),
            "mallows_two_ref" | "mallows2" => Ok(Model::MallowsTwoRef),
            "limit" => Ok(Model::Limit),
            other => Err(Error::InvalidArgument(format!(
                "unknown model '{other}'; valid: ic, mallows, mallows_two_ref, limit"
            ))),
        }
    }
}

/// Everything needed to reproduce a stream of random elections.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub model: Model,
    pub candidates: usize,
    /// Ignored by the limit model.
    pub voters: u64,
    /// Mallows dispersion in (0, 1].
    pub dispersion: f64,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(model: Model, candidates: usize, voters: u64, seed: u64) -> Self {
        GeneratorConfig { model, candidates, voters, dispersion: 0.8, seed }
    }

    pub fn with_dispersion(mut self, dispersion: f64) -> Self {
        self.dispersion = dispersion;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.candidates == 0 {
            return Err(Error::InvalidArgument("at least one candidate is required".into()));
        }
        if self.model != Model::Limit && self.voters == 0 {
            return Err(Error::InvalidArgument("at least one voter is required".into()));
        }
        if matches!(self.model, Model::Mallows | Model::MallowsTwoRef) {
            check_dispersion(self.dispersion)?;
        }
        Ok(())
    }

    /// The profile for trial number `trial`; not available for the limit model.
    pub fn profile(&self, trial: u64) -> Result<Profile> {
        self.validate()?;
        let mut rng = stream_rng(self.seed, trial);
        let (k, n) = (self.candidates, self.voters);
        Ok(match self.model {
            Model::ImpartialCulture => impartial_culture_with(k, n, &mut rng),
            Model::Mallows => mallows_with(n, self.dispersion, &identity(k), &mut rng),
            Model::MallowsTwoRef => mallows_two_ref_with(k, n, self.dispersion, &mut rng),
            Model::Limit => {
                return Err(Error::Unsupported {
                    method: "limit".into(),
                    reason: "the limit model yields margin graphs, not ballots".into(),
                })
            }
        })
    }

    /// The margin graph for trial number `trial`.
    pub fn margin_graph(&self, trial: u64) -> Result<MarginGraph> {
        match self.model {
            Model::Limit => {
                self.validate()?;
                Ok(limit_margin_graph_with(self.candidates, &mut stream_rng(self.seed, trial)))
            }
            _ => Ok(self.profile(trial)?.margin_graph()),
        }
    }
}

fn check_dispersion(phi: f64) -> Result<()> {
    if phi > 0.0 && phi <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("dispersion must lie in (0, 1], got {phi}")))
    }
}

fn identity(k: usize) -> Vec<Candidate> {
    (0..k as u32).map(Candidate).collect()
}

/// `n` independent uniformly random ballots over candidates `0..k`.
pub fn impartial_culture(k: usize, n: u64, seed: u64) -> Result<Profile> {
    GeneratorConfig::new(Model::ImpartialCulture, k, n, seed).profile(0)
}

pub fn impartial_culture_with<R: Rng + ?Sized>(k: usize, n: u64, rng: &mut R) -> Profile {
    let base = identity(k);
    let mut rankings = Vec::with_capacity(k * n as usize);
    for _ in 0..n {
        let start = rankings.len();
        rankings.extend_from_slice(&base);
        rankings[start..].shuffle(rng);
    }
    Profile::from_parts(base, rankings, vec![1; n as usize])
}

/// `n` ballots from the Mallows model around `reference`: a ballot at
/// Kendall-tau distance `d` has probability proportional to `dispersion^d`.
pub fn mallows(n: u64, dispersion: f64, reference: &Ballot, seed: u64) -> Result<Profile> {
    check_dispersion(dispersion)?;
    if n == 0 {
        return Err(Error::InvalidArgument("at least one voter is required".into()));
    }
    Ok(mallows_with(n, dispersion, reference.as_slice(), &mut stream_rng(seed, 0)))
}

/// Insertion probabilities: item `j` goes to position `i <= j` with weight
/// `dispersion^(j - i)`. Returned as cumulative tables.
fn insertion_tables(k: usize, phi: f64) -> Vec<Vec<f64>> {
    (0..k)
        .map(|j| {
            let w: Vec<f64> = (0..=j).map(|i| phi.powi((j - i) as i32)).collect();
            let total: f64 = w.iter().sum();
            let mut acc = 0.0;
            w.iter()
                .map(|x| {
                    acc += x / total;
                    acc
                })
                .collect()
        })
        .collect()
}

fn insert_sample<R: Rng + ?Sized>(tables: &[Vec<f64>], reference: &[Candidate], out: &mut Vec<Candidate>, rng: &mut R) {
    let start = out.len();
    for (j, &c) in reference.iter().enumerate() {
        let u: f64 = rng.random();
        let table = &tables[j];
        let i = table.iter().position(|&t| u < t).unwrap_or(j);
        out.insert(start + i, c);
    }
}

pub fn mallows_with<R: Rng + ?Sized>(n: u64, dispersion: f64, reference: &[Candidate], rng: &mut R) -> Profile {
    let k = reference.len();
    let tables = insertion_tables(k, dispersion);
    let mut rankings = Vec::with_capacity(k * n as usize);
    for _ in 0..n {
        insert_sample(&tables, reference, &mut rankings, rng);
    }
    let mut cands = reference.to_vec();
    cands.sort_unstable();
    Profile::from_parts(cands, rankings, vec![1; n as usize])
}

/// Mallows ballots where each voter independently uses the identity order
/// or its reverse as reference, with equal probability.
pub fn mallows_two_ref(k: usize, n: u64, dispersion: f64, seed: u64) -> Result<Profile> {
    GeneratorConfig::new(Model::MallowsTwoRef, k, n, seed).with_dispersion(dispersion).profile(0)
}

pub fn mallows_two_ref_with<R: Rng + ?Sized>(k: usize, n: u64, dispersion: f64, rng: &mut R) -> Profile {
    let forward = identity(k);
    let backward: Vec<Candidate> = forward.iter().rev().copied().collect();
    let tables = insertion_tables(k, dispersion);
    let mut rankings = Vec::with_capacity(k * n as usize);
    for _ in 0..n {
        let reference = if rng.random::<bool>() { &forward } else { &backward };
        insert_sample(&tables, reference, &mut rankings, rng);
    }
    Profile::from_parts(forward, rankings, vec![1; n as usize])
}

/// The limiting qualitative margin graph of impartial culture as the number
/// of voters grows.
///
/// Normalized margins converge to a Gaussian vector indexed by pairs with
/// unit variance, correlation 1/3 between pairs sharing their first or their
/// second candidate, -1/3 between chained pairs and 0 between disjoint ones.
/// Drawing `Z_ab + W_a - W_b` from independent standard normals has exactly
/// this correlation structure.
pub fn limit_qualitative_margin_graph(k: usize, seed: u64) -> QualitativeMarginGraph {
    limit_margin_graph_with(k, &mut stream_rng(seed, 0)).qualitative()
}

/// A margin graph with weights `1, 3, 5, ...` in the order of the sampled
/// limiting margins.
pub fn limit_margin_graph_with<R: Rng + ?Sized>(k: usize, rng: &mut R) -> MarginGraph {
    let w: Vec<f64> = (0..k).map(|_| rng.sample(StandardNormal)).collect();
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for a in 0..k {
        for b in (a + 1)..k {
            let z: f64 = rng.sample(StandardNormal);
            pairs.push((z + w[a] - w[b], a, b));
        }
    }
    pairs.sort_by(|x, y| x.0.abs().total_cmp(&y.0.abs()));
    let mut m = vec![0i64; k * k];
    for (rank, &(y, a, b)) in pairs.iter().enumerate() {
        let weight = 2 * rank as i64 + 1;
        let (from, to) = if y > 0.0 { (a, b) } else { (b, a) };
        m[from * k + to] = weight;
        m[to * k + from] = -weight;
    }
    MarginGraph::from_parts(identity(k), m)
}

/// Replaces `c` by a block of `copies` clones, ordered independently at
/// random on each ballot. New clones take fresh ids above the current maximum.
pub fn with_clones<R: Rng + ?Sized>(p: &Profile, c: Candidate, copies: usize, rng: &mut R) -> Result<(Profile, CloneSet)> {
    if !p.contains(c) {
        return Err(Error::UnknownCandidate(c));
    }
    if copies < 2 {
        return Err(Error::InvalidArgument("a clone set needs at least two members".into()));
    }
    let next = p.candidates().last().unwrap().0 + 1;
    let mut block: Vec<Candidate> = vec![c];
    block.extend((0..copies as u32 - 1).map(|i| Candidate(next + i)));
    let mut cands: Vec<Candidate> = p.candidates().to_vec();
    cands.extend_from_slice(&block[1..]);
    let mut ballots = Vec::new();
    for (r, w) in p.entries() {
        for _ in 0..w {
            let mut order = block.clone();
            order.shuffle(rng);
            let mut ranking = Vec::with_capacity(cands.len());
            for &x in r {
                if x == c {
                    ranking.extend_from_slice(&order);
                } else {
                    ranking.push(x);
                }
            }
            ballots.push((Ballot::new(ranking)?, 1));
        }
    }
    let profile = Profile::new(cands, ballots)?.canonical();
    let clones = CloneSet::new(&profile, &block)?;
    Ok((profile, clones))
}

/// Splits `q`'s candidates into two overlapping sets, each of size at least
/// two, whose union is everything, and returns the two restrictions; `q` is
/// then an amalgamation of them.
pub fn amalgamable_split<R: Rng + ?Sized>(q: &Profile, rng: &mut R) -> Result<(Profile, Profile)> {
    let k = q.num_candidates();
    if k < 3 {
        return Err(Error::InvalidArgument("splitting needs at least three candidates".into()));
    }
    let mut shuffled = q.candidates().to_vec();
    shuffled.shuffle(rng);
    // first part: a prefix, second part: a suffix, overlapping in at least one
    let first_len = rng.random_range(2..k);
    let second_start = rng.random_range(1..first_len);
    let first = &shuffled[..first_len];
    let second = &shuffled[second_start.min(k - 2)..];
    Ok((q.restrict(first)?, q.restrict(second)?))
}
