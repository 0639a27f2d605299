use splitcycle::criteria::{is_amalgamation, is_clone_set};
use splitcycle::generators::{
    amalgamable_split, impartial_culture, limit_qualitative_margin_graph, mallows, stream_rng, with_clones,
    GeneratorConfig, Model,
};
use splitcycle::sim::{average_sizes, limit_sim, multiple_winner_rates, simulate};
use splitcycle::{Ballot, Candidate, Error, MethodId};

#[test]
fn same_seed_same_profile() {
    assert_eq!(impartial_culture(5, 40, 3).unwrap(), impartial_culture(5, 40, 3).unwrap());
    assert_ne!(impartial_culture(5, 40, 3).unwrap(), impartial_culture(5, 40, 4).unwrap());
    let cfg = GeneratorConfig::new(Model::MallowsTwoRef, 6, 25, 9);
    assert_eq!(cfg.profile(17).unwrap(), cfg.profile(17).unwrap());
    assert_eq!(limit_qualitative_margin_graph(6, 1), limit_qualitative_margin_graph(6, 1));
}

#[test]
fn single_candidate() {
    let p = impartial_culture(1, 5, 0).unwrap();
    assert!(p.entries().all(|(r, _)| r == [Candidate(0)]));
    assert_eq!(limit_qualitative_margin_graph(1, 0).edges().len(), 0);
}

#[test]
fn invalid_configs_are_rejected() {
    let reference = Ballot::from_ids(&[0, 1]).unwrap();
    assert!(matches!(mallows(3, 0.0, &reference, 0), Err(Error::InvalidArgument(_))));
    assert!(matches!(mallows(3, 1.5, &reference, 0), Err(Error::InvalidArgument(_))));
    assert!(GeneratorConfig::new(Model::ImpartialCulture, 0, 3, 0).validate().is_err());
    assert!(GeneratorConfig::new(Model::ImpartialCulture, 3, 0, 0).validate().is_err());
    assert!(GeneratorConfig::new(Model::Limit, 3, 0, 0).validate().is_ok());
    assert!("urn".parse::<Model>().is_err());
    assert_eq!("impartial-culture".parse::<Model>().unwrap(), Model::ImpartialCulture);
}

#[test]
fn limit_graphs_are_complete_and_uniquely_weighted() {
    for seed in 0..200 {
        let q = limit_qualitative_margin_graph(7, seed);
        assert!(q.is_complete());
        assert!(q.is_uniquely_weighted());
    }
}

#[test]
fn clone_augmentation_produces_clone_sets() {
    let mut rng = stream_rng(8, 0);
    for seed in 0..50 {
        let p = impartial_culture(4, 9, seed).unwrap();
        let (q, clones) = with_clones(&p, Candidate(2), 3, &mut rng).unwrap();
        assert_eq!(q.num_candidates(), 6);
        assert!(is_clone_set(&q, clones.members()).unwrap());
        assert_eq!(q.restrict(p.candidates()).unwrap(), p);
    }
}

#[test]
fn splits_are_amalgamable() {
    let mut rng = stream_rng(5, 0);
    for seed in 0..100 {
        let q = impartial_culture(3 + seed as usize % 4, 7, seed).unwrap();
        let (a, b) = amalgamable_split(&q, &mut rng).unwrap();
        assert!(a.num_candidates() >= 2 && b.num_candidates() >= 2);
        is_amalgamation(&a, &b, &q).unwrap();
    }
}

#[test]
fn simulation_is_independent_of_thread_count() {
    let cfg = GeneratorConfig::new(Model::Mallows, 5, 31, 77);
    let methods = [MethodId::SplitCycle, MethodId::Plurality, MethodId::RankedChoice];
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| simulate(&cfg, 60, &methods).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one.len(), 180);
    assert!(one.windows(2).all(|w| w[0].trial <= w[1].trial));
}

#[test]
fn limit_simulation_rules() {
    assert!(matches!(limit_sim(4, 10, 0, &[MethodId::Plurality]), Err(Error::Unsupported { .. })));
    assert!(matches!(limit_sim(4, 10, 0, &[MethodId::BeatPath]), Err(Error::Unsupported { .. })));
    assert!(limit_sim(4, 0, 0, &[MethodId::SplitCycle]).unwrap().is_empty());

    let methods = [MethodId::SplitCycle, MethodId::Copeland, MethodId::UncoveredGillies, MethodId::Getcha];
    let records = limit_sim(1, 20, 0, &methods).unwrap();
    assert!(average_sizes(&records).values().all(|&v| v == 1.0));

    let records = limit_sim(3, 5000, 3, &methods).unwrap();
    let avg = average_sizes(&records);
    assert_eq!(avg[&MethodId::SplitCycle], 1.0);
    assert!((avg[&MethodId::Getcha] - 1.17).abs() < 0.03, "{avg:?}");
    let rates = multiple_winner_rates(&records);
    assert_eq!(rates[&MethodId::SplitCycle], 0.0);
}
