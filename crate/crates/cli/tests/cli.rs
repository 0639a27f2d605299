use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitcycle")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn winners_json(file: &str, methods: &str) -> serde_json::Value {
    let o = run(&["winners", "--input", &data(file), "--methods", methods, "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn winners_of(doc: &serde_json::Value, method: &str) -> Vec<String> {
    let row = doc["results"].as_array().unwrap().iter().find(|r| r["method"] == method).unwrap();
    row["winners"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
}

#[test]
fn burlington_ranked_choice_differs_from_split_cycle() {
    let doc = winners_json("burlington.soc", "split_cycle,ranked_choice");
    assert_eq!(winners_of(&doc, "split_cycle"), ["Democrat"]);
    assert_eq!(winners_of(&doc, "ranked_choice"), ["Progressive"]);
    assert_eq!(doc["voters"], 100);
}

#[test]
fn single_candidate_wins_everywhere() {
    let doc = winners_json("single.soc", "all");
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 11);
    for r in results {
        assert_eq!(r["winners"], serde_json::json!(["Solo"]), "{}", r["method"]);
    }
}

#[test]
fn overlapping_cycles_table() {
    let o = run(&["winners", "--input", &data("overlapping_cycles.soc"), "--methods", "all", "--defeats"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let sc = text.lines().find(|l| l.starts_with("split_cycle ")).unwrap();
    assert_eq!(sc.split_whitespace().nth(1), Some("d"));
    assert!(text.contains("discarded, cycle number"));
}

#[test]
fn beat_path_spoiler_is_reported() {
    let o = run(&[
        "check",
        "--criterion",
        "immunity_to_spoilers",
        "--method",
        "beat_path",
        "--input",
        &data("beat_path_spoiler.soc"),
        "--emit-witness",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let json = &text[text.find('{').unwrap()..];
    let w: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(w["criterion"], "immunity_to_spoilers");

    let o = run(&[
        "check",
        "--criterion",
        "immunity_to_spoilers",
        "--method",
        "split_cycle",
        "--input",
        &data("beat_path_spoiler.soc"),
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn positive_involvement_search_finds_nothing() {
    let o = run(&[
        "check",
        "--criterion",
        "positive_involvement",
        "--method",
        "split_cycle",
        "--search",
        "ic",
        "4",
        "9",
        "10000",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("0 witnesses"));
}

#[test]
fn bad_names_exit_two_with_catalog() {
    let o = run(&["check", "--criterion", "nope", "--method", "split_cycle", "--input", &data("burlington.soc")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("winner_continuity"));

    let o = run(&["winners", "--input", &data("burlington.soc"), "--methods", "borda"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("split_cycle"));

    let o = run(&["winners", "--input", &data("tied.toc")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn simulate_zero_trials_writes_header_only() {
    let dir = std::env::temp_dir().join(format!("splitcycle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.csv");
    let o = run(&[
        "simulate", "--model", "ic", "--candidates", "5", "--voters", "11", "--trials", "0", "--seed", "1", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().nth(1).unwrap().starts_with("model,candidates"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn simulate_is_reproducible() {
    let args = [
        "simulate", "--model", "mallows", "--candidates", "5", "--voters", "21", "--trials", "50", "--seed", "9",
        "--methods", "all",
    ];
    let a = run(&args);
    let b = run(&[&args[..], &["--threads", "1"]].concat());
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 2 + 50 * 11);
}

#[test]
fn simulate_ranked_pairs_size_gate() {
    let base = ["simulate", "--model", "ic", "--candidates", "9", "--voters", "11", "--trials", "2", "--seed", "1"];
    let o = run(&[&base[..], &["--methods", "ranked_pairs"]].concat());
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[&base[..], &["--methods", "all"]].concat());
    assert!(o.status.success());
    assert!(!stdout(&o).contains("ranked_pairs"));
    let o = run(&[&base[..], &["--methods", "ranked_pairs", "--ranked-pairs-any-size"]].concat());
    assert!(o.status.success());
}

#[test]
fn limit_sim_single_candidate_and_capabilities() {
    let o = run(&["limit-sim", "--candidates", "1", "--trials", "20", "--seed", "3"]);
    assert!(o.status.success());
    let summary = String::from_utf8_lossy(&o.stderr);
    assert!(summary.lines().count() >= 1);
    for line in summary.lines() {
        assert!(line.contains("mean size 1.000"), "{line}");
    }

    let o = run(&["limit-sim", "--candidates", "4", "--trials", "20", "--seed", "3", "--methods", "plurality"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["simulate", "--model", "limit", "--candidates", "4", "--voters", "1", "--trials", "2", "--seed", "3", "--methods", "minimax"]);
    assert_eq!(o.status.code(), Some(2));
}
