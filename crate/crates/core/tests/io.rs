mod common;

use proptest::prelude::*;
use splitcycle::generators::{GeneratorConfig, Model};
use splitcycle::io::{
    deserialize_profile, parse_election, parse_preflib, read_csv, read_election, serialize_profile, to_preflib,
    write_csv, SimRecord, CSV_SCHEMA,
};
use splitcycle::{Candidate, Error, MethodId};
use std::collections::HashMap;
use std::path::PathBuf;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

const SAMPLES: [&str; 10] = [
    "burlington.soc",
    "overlapping_cycles.soc",
    "beat_path_spoiler.soc",
    "sample1.soc",
    "sample2.soc",
    "sample3.soc",
    "sample4.soc",
    "sample5.soc",
    "sample6.soc",
    "legacy1.soc",
];

/// Pairwise tallies straight from the ballot lines, ignoring all metadata.
fn tally(text: &str) -> HashMap<(u32, u32), i64> {
    let mut body: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    let legacy = !body[0].contains(':') && !body[0].contains(',');
    if legacy {
        let k: usize = body[0].parse().unwrap();
        body.drain(..k + 2);
    }
    let mut out = HashMap::new();
    for line in body {
        let (count, rest) = if legacy { line.split_once(',').unwrap() } else { line.split_once(':').unwrap() };
        let count: i64 = count.trim().parse().unwrap();
        let ids: Vec<u32> = rest.split(',').map(|s| s.trim().parse().unwrap()).collect();
        for i in 0..ids.len() {
            for j in (i + 1)..ids.len() {
                *out.entry((ids[i], ids[j])).or_insert(0) += count;
                *out.entry((ids[j], ids[i])).or_insert(0) -= count;
            }
        }
    }
    out
}

#[test]
fn parsed_margins_match_line_tallies() {
    for name in SAMPLES {
        let text = std::fs::read_to_string(data(name)).unwrap();
        let e = parse_preflib(&text).unwrap();
        let expected = tally(&text);
        let m = e.profile.margin_graph();
        for (a, b, w) in m.edges() {
            assert_eq!(expected[&(a.0, b.0)], w, "{name}");
        }
        for ((a, b), w) in expected {
            assert_eq!(m.margin(Candidate(a), Candidate(b)).unwrap(), w, "{name}");
        }
    }
}

#[test]
fn preflib_round_trip() {
    for name in SAMPLES.iter().chain(&["legacy2.soc", "single.soc"]) {
        let e = read_election(data(name)).unwrap();
        let again = parse_preflib(&to_preflib(&e)).unwrap();
        assert_eq!(again, e, "{name}");
    }
}

#[test]
fn labels_come_from_metadata() {
    let e = read_election(data("burlington.soc")).unwrap();
    assert_eq!(e.label(Candidate(2)), "Progressive");
    assert_eq!(e.profile.num_voters(), 100);
}

#[test]
fn tied_ballots_are_rejected_with_their_line() {
    match read_election(data("tied.toc")) {
        Err(Error::UnsupportedFormat { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
}

#[test]
fn canonical_text_of_amalgamation_profile() {
    let (p, _, _) = common::amalgamation_example();
    let text = serialize_profile(&p);
    assert_eq!(
        text,
        "# splitcycle profile v1\ncandidates: 0,1,2,3\n4: 1,0,2,3\n1: 2,1,0,3\n1: 2,1,3,0\n4: 3,0,2,1\n2: 3,2,1,0\n"
    );
    assert_eq!(deserialize_profile(&text).unwrap(), p);
    assert_eq!(serialize_profile(&p.canonical()), text);
    assert_eq!(parse_election(&text).unwrap().profile, p);
}

#[test]
fn duplicate_candidates_on_a_ballot_are_rejected() {
    let text = "# splitcycle profile v1\ncandidates: 0,1,2\n1: 0,1,2\n1: 0,0,2\n";
    assert!(matches!(deserialize_profile(text), Err(Error::Parse { line: 4, .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_round_trip(k in 1usize..8, n in 1u64..40, seed in any::<u64>()) {
        let p = GeneratorConfig::new(Model::ImpartialCulture, k, n, seed).profile(0).unwrap();
        let text = serialize_profile(&p);
        let back = deserialize_profile(&text).unwrap();
        prop_assert_eq!(serialize_profile(&back), text);
        prop_assert_eq!(back, p);
    }
}

fn record(trial: u64, winners: &[u32]) -> SimRecord {
    SimRecord {
        model: "ic".into(),
        candidates: 5,
        voters: Some(101),
        trial,
        method: MethodId::BeatPath,
        winners: winners.iter().copied().map(Candidate).collect(),
        seed: 42,
    }
}

#[test]
fn csv_layout() {
    let records: Vec<SimRecord> = (0..10).map(|t| record(t, if t % 2 == 0 { &[1] } else { &[0, 4] })).collect();
    let mut buf = Vec::new();
    write_csv(&records, &mut buf).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    // schema line + header + one line per record
    assert_eq!(text.lines().count(), 12);
    assert_eq!(text.lines().next().unwrap(), CSV_SCHEMA);
    assert_eq!(text.lines().nth(3).unwrap(), "ic,5,101,1,beat_path,2,0;4,42");
    assert_eq!(read_csv(&buf[..]).unwrap(), records);
}

#[test]
fn csv_rejects_wrong_schema() {
    let text = "model,candidates\n";
    assert!(matches!(read_csv(text.as_bytes()), Err(Error::Parse { line: 1, .. })));
    let text = format!("{CSV_SCHEMA}\na,b,c\n");
    assert!(matches!(read_csv(text.as_bytes()), Err(Error::Parse { line: 2, .. })));
}
