mod common;

use proptest::prelude::*;
use splitcycle::criteria::{reinforce, rejectability_witness};
use splitcycle::generators::{GeneratorConfig, Model};
use splitcycle::methods::{
    beat_path, condorcet_loser, condorcet_winner, getcha, gocha, ranked_pairs, sc_defeats, split_cycle, uncovered,
    Algorithm, UncoveredVariant,
};
use splitcycle::{realize, Candidate, MarginGraph, MethodId, Profile};

fn arb_margin_graph() -> impl Strategy<Value = MarginGraph> {
    (1usize..=7, any::<bool>(), any::<u64>()).prop_flat_map(|(k, odd, _)| {
        let pairs = k * (k - 1) / 2;
        prop::collection::vec((0i64..12, any::<bool>()), pairs).prop_map(move |cells| {
            let mut rows = vec![vec![0i64; k]; k];
            let mut it = cells.into_iter();
            for i in 0..k {
                for j in (i + 1)..k {
                    let (w, flip) = it.next().unwrap();
                    let w = if odd { 2 * w + 1 } else { 2 * w };
                    let w = if flip { -w } else { w };
                    rows[i][j] = w;
                    rows[j][i] = -w;
                }
            }
            MarginGraph::new((0..k as u32).map(Candidate).collect(), rows).unwrap()
        })
    })
}

fn arb_profile() -> impl Strategy<Value = Profile> {
    (
        prop_oneof![Just(Model::ImpartialCulture), Just(Model::Mallows), Just(Model::MallowsTwoRef)],
        1usize..=6,
        1u64..=30,
        any::<u64>(),
    )
        .prop_map(|(model, k, n, seed)| GeneratorConfig::new(model, k, n, seed).profile(0).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn realization_reproduces_margin_graph(m in arb_margin_graph()) {
        let p = realize(&m).unwrap();
        prop_assert_eq!(p.margin_graph(), m);
    }

    #[test]
    fn inclusions_between_methods(p in arb_profile()) {
        let m = p.margin_graph();
        let sc = split_cycle(&m);
        let bp = beat_path(&m);
        let rp = ranked_pairs(&m).unwrap();
        prop_assert!(!sc.is_empty());
        prop_assert!(bp.is_subset(&sc));
        prop_assert!(rp.is_subset(&sc));
        prop_assert!(sc.is_subset(&getcha(&m)));
        prop_assert!(gocha(&m).is_subset(&getcha(&m)));
        prop_assert!(uncovered(&m, UncoveredVariant::Fishburn).is_subset(&uncovered(&m, UncoveredVariant::Gillies)));
        prop_assert!(sc_defeats(&m, Algorithm::WidestPath).unwrap().is_acyclic());
        if sc.is_unique() {
            prop_assert_eq!(&sc, &bp);
            prop_assert_eq!(&sc, &rp);
        }
    }

    #[test]
    fn condorcet_winner_and_loser(p in arb_profile()) {
        let m = p.margin_graph();
        let sc = split_cycle(&m);
        if let Some(w) = condorcet_winner(&m) {
            prop_assert_eq!(&sc, &splitcycle::WinnerSet::new(vec![w]).unwrap());
        }
        if let Some(l) = condorcet_loser(&m) {
            prop_assert!(!sc.contains(l) || m.len() == 1);
        }
    }

    #[test]
    fn margins_add_and_scale(p in arb_profile(), q_seed in any::<u64>(), times in 1u64..5) {
        let q = GeneratorConfig::new(Model::ImpartialCulture, p.num_candidates(), 7, q_seed).profile(0).unwrap();
        let q = Profile::new(p.candidates().to_vec(), q.ballots().into_iter().map(|(b, w)| {
            let ids: Vec<Candidate> = b.as_slice().iter().map(|c| p.candidates()[c.0 as usize]).collect();
            (splitcycle::Ballot::new(ids).unwrap(), w)
        })).unwrap();
        let sum = p.combine(&q).unwrap();
        let (mp, mq, ms) = (p.margin_graph(), q.margin_graph(), sum.margin_graph());
        let scaled = p.replicate(times).unwrap().margin_graph();
        for &a in p.candidates() {
            for &b in p.candidates() {
                prop_assert_eq!(ms.margin(a, b).unwrap(), mp.margin(a, b).unwrap() + mq.margin(a, b).unwrap());
                prop_assert_eq!(scaled.margin(a, b).unwrap(), times as i64 * mp.margin(a, b).unwrap());
            }
        }
    }

    #[test]
    fn candidate_removal_keeps_other_margins(p in arb_profile(), pick in any::<prop::sample::Index>()) {
        prop_assume!(p.num_candidates() >= 2);
        let x = p.candidates()[pick.index(p.num_candidates())];
        let without = p.remove_candidate(x).unwrap();
        prop_assert_eq!(without.margin_graph(), p.margin_graph().without(x).unwrap());
        prop_assert_eq!(without.num_voters(), p.num_voters());
    }

    #[test]
    fn margin_methods_ignore_everything_but_margins(p in arb_profile()) {
        let q = realize(&p.margin_graph()).unwrap();
        for method in MethodId::ALL.iter().filter(|m| m.uses_margins_only()) {
            prop_assert_eq!(method.winners(&p).unwrap(), method.winners(&q).unwrap());
        }
    }

    #[test]
    fn reversal_and_canonical_form(p in arb_profile()) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.reverse().margin_graph(), p.margin_graph().scaled(-1));
        prop_assert_eq!(p.canonical(), p.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Adding twice the voters of `P` in copies of a profile keeps every one
    /// of that profile's defeats.
    #[test]
    fn overwhelming_majority(p in arb_profile(), q_seed in any::<u64>()) {
        let q = GeneratorConfig::new(Model::ImpartialCulture, p.num_candidates(), 5, q_seed).profile(0).unwrap();
        let q = Profile::new(p.candidates().to_vec(), q.ballots().into_iter().map(|(b, w)| {
            let ids: Vec<Candidate> = b.as_slice().iter().map(|c| p.candidates()[c.0 as usize]).collect();
            (splitcycle::Ballot::new(ids).unwrap(), w)
        })).unwrap();
        let reinforced = reinforce(&p, &q).unwrap();
        let before = sc_defeats(&q.margin_graph(), Algorithm::WidestPath).unwrap();
        let after = sc_defeats(&reinforced.margin_graph(), Algorithm::WidestPath).unwrap();
        for (a, b) in before.edges() {
            prop_assert!(after.defeats(a, b));
        }
    }

    #[test]
    fn rejectability_reaches_each_winner(p in arb_profile()) {
        let m = p.margin_graph();
        let sc = split_cycle(&m);
        prop_assume!(sc.len() > 1);
        for x in sc.iter() {
            let (g, realization) = rejectability_witness(&p, x).unwrap();
            prop_assert_eq!(realization.margin_graph(), g.clone());
            prop_assert_eq!(split_cycle(&g), splitcycle::WinnerSet::new(vec![x]).unwrap());
            let reinforced = reinforce(&p, &realization).unwrap();
            prop_assert_eq!(split_cycle(&reinforced.margin_graph()), splitcycle::WinnerSet::new(vec![x]).unwrap());
        }
    }
}
