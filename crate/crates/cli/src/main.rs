use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use splitcycle::criteria::{check_amalgamation, check_profile, search, Criterion, Witness};
use splitcycle::generators::{GeneratorConfig, Model};
use splitcycle::io::{read_election, write_csv, Election, SimRecord};
use splitcycle::methods::{cycle_number, sc_defeats, Algorithm};
use splitcycle::sim::{average_sizes, multiple_winner_rates, simulate};
use splitcycle::{Error, MethodId};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Ranked Pairs is left out of simulations above this many candidates
/// unless explicitly requested.
const RANKED_PAIRS_SIM_LIMIT: usize = 7;

#[derive(Parser)]
#[command(name = "splitcycle", version, about = "Split Cycle and related voting methods")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute winner sets for an election file.
    Winners(WinnersArgs),
    /// Check a criterion on election files or on random profiles.
    Check(CheckArgs),
    /// Simulate random elections and write one CSV row per trial and method.
    Simulate(SimulateArgs),
    /// Sample limiting margin graphs and write one CSV row per trial and method.
    LimitSim(LimitArgs),
}

#[derive(Args)]
struct WinnersArgs {
    /// Preflib strict-order file or canonical profile file.
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated method names, or "all".
    #[arg(long, default_value = "split_cycle")]
    methods: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Also list Split Cycle defeats and the majority edges it discards.
    #[arg(long)]
    defeats: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    criterion: String,
    #[arg(long)]
    method: String,
    /// Election file; give three (parts, then amalgamation) for amalgamation.
    #[arg(long, required_unless_present = "search", conflicts_with = "search")]
    input: Vec<PathBuf>,
    /// Random search: model, candidates, voters, trials, seed.
    #[arg(long, num_args = 5, value_names = ["MODEL", "K", "N", "TRIALS", "SEED"])]
    search: Option<Vec<String>>,
    /// Mallows dispersion for searches.
    #[arg(long, default_value_t = 0.8)]
    dispersion: f64,
    /// Print the first witness as JSON on standard output.
    #[arg(long)]
    emit_witness: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    model: String,
    #[arg(long)]
    candidates: usize,
    #[arg(long)]
    voters: u64,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    /// Comma-separated method names, or "all".
    #[arg(long, default_value = "split_cycle,beat_path,getcha")]
    methods: String,
    /// Output CSV file; standard output if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0.8)]
    dispersion: f64,
    /// Worker threads; all cores if omitted.
    #[arg(long)]
    threads: Option<usize>,
    /// Run Ranked Pairs above seven candidates, subject to its search budget.
    #[arg(long)]
    ranked_pairs_any_size: bool,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long)]
    candidates: usize,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    /// Comma-separated method names, or "all" for every qualitative method.
    #[arg(long, default_value = "split_cycle,copeland,uncovered,getcha")]
    methods: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Winners(a) => winners(a),
        Command::Check(a) => check(a),
        Command::Simulate(a) => simulate_cmd(a),
        Command::LimitSim(a) => limit_cmd(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_methods(list: &str, all: &[MethodId]) -> Result<Vec<MethodId>, Failure> {
    if list.trim() == "all" {
        return Ok(all.to_vec());
    }
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let m: MethodId = name.parse()?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    if out.is_empty() {
        return Err(Failure::Input(format!("no methods given; valid: {}", MethodId::catalog())));
    }
    Ok(out)
}

fn load(path: &Path) -> Result<Election, Failure> {
    read_election(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn set_threads(threads: Option<usize>) -> Result<(), Failure> {
    if let Some(n) = threads {
        if n == 0 {
            return Err(Failure::Input("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    Ok(())
}

fn winners(args: WinnersArgs) -> Outcome {
    let methods = parse_methods(&args.methods, &MethodId::ALL)?;
    let election = load(&args.input)?;
    let p = &election.profile;
    let names = |cs: &[splitcycle::Candidate]| cs.iter().map(|&c| election.label(c)).collect::<Vec<_>>();

    let rows: Vec<(MethodId, Result<Vec<String>, String>)> = methods
        .iter()
        .map(|&m| (m, m.winners(p).map(|w| names(w.as_slice())).map_err(|e| e.to_string())))
        .collect();

    let m = p.margin_graph();
    let defeats: Vec<(String, String, i64, Option<i64>)> = if args.defeats {
        let relation = sc_defeats(&m, Algorithm::WidestPath)?;
        m.edges()
            .into_iter()
            .map(|(a, b, w)| {
                let discarded = if relation.defeats(a, b) { None } else { Some(cycle_number(&m, a, b)) };
                Ok((election.label(a), election.label(b), w, discarded.transpose()?))
            })
            .collect::<Result<_, Error>>()?
    } else {
        Vec::new()
    };

    let mut out = io::stdout().lock();
    match args.format {
        Format::Table => {
            let width = rows.iter().map(|(m, _)| m.name().len()).max().unwrap_or(6).max(6);
            writeln!(out, "{:width$}  winners", "method")?;
            for (method, result) in &rows {
                match result {
                    Ok(w) => writeln!(out, "{:width$}  {}", method.name(), w.join(", "))?,
                    Err(e) => writeln!(out, "{:width$}  error: {e}", method.name())?,
                }
            }
            if args.defeats {
                writeln!(out, "\nsplit cycle defeats")?;
                for (a, b, w, discarded) in &defeats {
                    match discarded {
                        None => writeln!(out, "  {a} -> {b} ({w}): defeat")?,
                        Some(c) => writeln!(out, "  {a} -> {b} ({w}): discarded, cycle number {c}")?,
                    }
                }
            }
        }
        Format::Json => {
            let results: Vec<_> = rows
                .iter()
                .map(|(method, result)| match result {
                    Ok(w) => json!({ "method": method.name(), "winners": w }),
                    Err(e) => json!({ "method": method.name(), "error": e }),
                })
                .collect();
            let mut doc = json!({
                "candidates": names(p.candidates()),
                "voters": p.num_voters(),
                "results": results,
            });
            if args.defeats {
                doc["defeats"] = defeats
                    .iter()
                    .map(|(a, b, w, d)| json!({ "from": a, "to": b, "margin": w, "defeat": d.is_none(), "cycle_number": d }))
                    .collect();
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json values serialize"))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(args: CheckArgs) -> Outcome {
    let criterion: Criterion = args.criterion.parse()?;
    let method: MethodId = args.method.parse()?;

    let first: Option<Witness> = if let Some(spec) = &args.search {
        let field = |i: usize, what: &str| -> Result<u64, Failure> {
            spec[i].parse().map_err(|_| Failure::Input(format!("--search {what} must be a non-negative integer")))
        };
        let model: Model = spec[0].parse()?;
        if model == Model::Limit {
            return Err(Failure::Input("searches need ballots; the limit model has none".into()));
        }
        let config = GeneratorConfig::new(model, field(1, "K")? as usize, field(2, "N")?, field(4, "SEED")?)
            .with_dispersion(args.dispersion);
        let trials = field(3, "TRIALS")?;
        let summary = search(criterion, method, &config, trials)?;
        println!(
            "{criterion} / {method}: {} witnesses in {} applicable instances ({trials} trials)",
            summary.witnesses, summary.instances
        );
        summary.first
    } else {
        let elections: Vec<Election> = args.input.iter().map(|p| load(p)).collect::<Result<_, _>>()?;
        let found = if criterion == Criterion::Amalgamation {
            let [a, b, r] = elections.as_slice() else {
                return Err(Failure::Input("amalgamation takes three --input files: two parts, then the amalgamation".into()));
            };
            check_amalgamation(method, &a.profile, &b.profile, &r.profile)?
        } else {
            let mut found = None;
            for e in &elections {
                found = check_profile(criterion, method, &e.profile)?;
                if found.is_some() {
                    break;
                }
            }
            found
        };
        let verdict = match &found {
            Some(w) => {
                let labels = elections.last().expect("at least one input");
                let names: Vec<String> = w.candidates.iter().map(|&c| labels.label(c)).collect();
                format!("violated ({}; candidates {})", w.note, names.join(", "))
            }
            None => "no violation".to_string(),
        };
        println!("{criterion} / {method}: {verdict}");
        found
    };
    match first {
        Some(w) => {
            if args.emit_witness {
                println!("{}", w.to_json());
            }
            Ok(ExitCode::from(1))
        }
        None => Ok(ExitCode::SUCCESS),
    }
}

fn open_sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) if path.as_os_str() != "-" => Box::new(BufWriter::new(File::create(path)?)),
        _ => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn summary(records: &[SimRecord]) -> String {
    let avg = average_sizes(records);
    let rates = multiple_winner_rates(records);
    let parts: Vec<String> = avg
        .iter()
        .map(|(m, a)| format!("{:<20} mean size {a:.3}  multiple winners {:5.1}%", m.name(), 100.0 * rates[m]))
        .collect();
    parts.join("\n")
}

fn report(records: &[SimRecord], out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut sink = open_sink(out)?;
    write_csv(records, &mut sink)?;
    sink.flush()?;
    if !records.is_empty() {
        let line = summary(records);
        match out {
            Some(p) if p.as_os_str() != "-" => println!("{line}"),
            _ => eprintln!("{line}"),
        }
    }
    Ok(())
}

fn simulate_cmd(args: SimulateArgs) -> Outcome {
    set_threads(args.threads)?;
    let model: Model = args.model.parse()?;
    let config =
        GeneratorConfig::new(model, args.candidates, args.voters, args.seed).with_dispersion(args.dispersion);
    config.validate()?;
    let everything = args.methods.trim() == "all";
    let pool: Vec<MethodId> = if model == Model::Limit {
        MethodId::ALL.iter().copied().filter(|m| m.uses_qualitative_only()).collect()
    } else {
        MethodId::ALL.to_vec()
    };
    let mut methods = parse_methods(&args.methods, &pool)?;
    if args.candidates > RANKED_PAIRS_SIM_LIMIT && !args.ranked_pairs_any_size && methods.contains(&MethodId::RankedPairs) {
        if everything {
            methods.retain(|&m| m != MethodId::RankedPairs);
            eprintln!("note: ranked_pairs skipped above {RANKED_PAIRS_SIM_LIMIT} candidates; pass --ranked-pairs-any-size to include it");
        } else {
            return Err(Failure::Input(format!(
                "ranked_pairs is off above {RANKED_PAIRS_SIM_LIMIT} candidates; pass --ranked-pairs-any-size to run it"
            )));
        }
    }
    let records = simulate(&config, args.trials, &methods)?;
    report(&records, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn limit_cmd(args: LimitArgs) -> Outcome {
    set_threads(args.threads)?;
    let qualitative: Vec<MethodId> = MethodId::ALL.iter().copied().filter(|m| m.uses_qualitative_only()).collect();
    let methods = parse_methods(&args.methods, &qualitative)?;
    let records = splitcycle::sim::limit_sim(args.candidates, args.trials, args.seed, &methods)?;
    report(&records, &args.out)?;
    Ok(ExitCode::SUCCESS)
}
