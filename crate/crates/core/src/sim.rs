//! Reproducible simulation campaigns.
//!
//! Trial `t` always draws from RNG stream `t` of the configured seed, and
//! results come back in trial order, so output does not depend on the
//! number of worker threads.

use crate::error::{Error, Result};
use crate::generators::{GeneratorConfig, Model};
use crate::io::SimRecord;
use crate::methods::MethodId;
use crate::profile::Profile;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Runs `trials` elections from `config` and evaluates every method on each.
/// Records are ordered by trial, then by the order of `methods`.
pub fn simulate(config: &GeneratorConfig, trials: u64, methods: &[MethodId]) -> Result<Vec<SimRecord>> {
    config.validate()?;
    if config.model == Model::Limit {
        check_qualitative(methods)?;
    }
    let per_trial: Vec<Vec<SimRecord>> = (0..trials)
        .into_par_iter()
        .map(|trial| run_trial(config, trial, methods))
        .collect::<Result<_>>()?;
    Ok(per_trial.into_iter().flatten().collect())
}

/// Limit-model campaign: `trials` qualitative margin graphs on `k`
/// candidates. Only methods that read the qualitative margin graph are allowed.
pub fn limit_sim(k: usize, trials: u64, seed: u64, methods: &[MethodId]) -> Result<Vec<SimRecord>> {
    simulate(&GeneratorConfig::new(Model::Limit, k, 0, seed), trials, methods)
}

fn check_qualitative(methods: &[MethodId]) -> Result<()> {
    match methods.iter().find(|m| !m.uses_qualitative_only()) {
        Some(m) => Err(Error::Unsupported {
            method: m.name().to_string(),
            reason: "the limit model only determines the qualitative margin graph".into(),
        }),
        None => Ok(()),
    }
}

fn run_trial(config: &GeneratorConfig, trial: u64, methods: &[MethodId]) -> Result<Vec<SimRecord>> {
    let (profile, margins): (Option<Profile>, _) = match config.model {
        Model::Limit => (None, config.margin_graph(trial)?),
        _ => {
            let p = config.profile(trial)?;
            let m = p.margin_graph();
            (Some(p), m)
        }
    };
    methods
        .iter()
        .map(|&method| {
            let winners = match (&profile, method.uses_margins_only()) {
                (Some(p), false) => method.winners(p)?,
                _ => method.winners_from_margins(&margins)?,
            };
            Ok(SimRecord {
                model: config.model.name().to_string(),
                candidates: config.candidates,
                voters: (config.model != Model::Limit).then_some(config.voters),
                trial,
                method,
                winners: winners.into(),
                seed: config.seed,
            })
        })
        .collect()
}

/// Mean winner-set size per method.
pub fn average_sizes(records: &[SimRecord]) -> BTreeMap<MethodId, f64> {
    aggregate(records, |r| r.winners.len() as f64)
}

/// Fraction of trials with more than one winner, per method.
pub fn multiple_winner_rates(records: &[SimRecord]) -> BTreeMap<MethodId, f64> {
    aggregate(records, |r| if r.winners.len() > 1 { 1.0 } else { 0.0 })
}

fn aggregate(records: &[SimRecord], value: impl Fn(&SimRecord) -> f64) -> BTreeMap<MethodId, f64> {
    let mut acc: BTreeMap<MethodId, (f64, u64)> = BTreeMap::new();
    for r in records {
        let e = acc.entry(r.method).or_default();
        e.0 += value(r);
        e.1 += 1;
    }
    acc.into_iter().map(|(m, (s, n))| (m, s / n as f64)).collect()
}
