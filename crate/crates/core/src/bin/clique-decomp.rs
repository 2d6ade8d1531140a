use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use clique_decomp::colouring::{CliqueProfile, EdgeColouring};
use clique_decomp::decomposition::{PhiOptions, DEFAULT_COLOURING_BUDGET};
use clique_decomp::graph::Graph;
use clique_decomp::graph6::{parse_graph6, read_graph6_stream};
use clique_decomp::ramsey::SearchOptions;
use clique_decomp::report::{self, Method, RunReport, SweepSource};
use clique_decomp::{Error, Result};

/// Clique packings, covers and monochromatic clique decompositions.
///
/// Exit status: 0 on success, 1 when a size guard or search budget is hit
/// (or a report fails verification), 2 on malformed input.
#[derive(Parser)]
#[command(name = "clique-decomp", version)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct MethodFlags {
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    fractional: bool,
    #[arg(long)]
    krivelevich: bool,
    #[arg(long)]
    greedy: bool,
    #[arg(long)]
    bipartite: bool,
}

impl MethodFlags {
    fn method(&self) -> Method {
        match self {
            MethodFlags { fractional: true, .. } => Method::Fractional,
            MethodFlags { krivelevich: true, .. } => Method::Krivelevich,
            MethodFlags { greedy: true, .. } => Method::Greedy,
            MethodFlags { bipartite: true, .. } => Method::Bipartite,
            _ => Method::Exact,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Turán graph T_p(n).
    Turan { n: usize, p: usize },
    /// Blow up a coloured complete graph.
    Blowup { base: String, sizes: Vec<usize> },
    /// List the r-cliques of a graph6 graph.
    Cliques { graph: String, r: usize },
    /// K_r-packing (exact by default).
    Packing {
        graph: String,
        r: usize,
        #[command(flatten)]
        method: MethodFlags,
    },
    /// K_r-cover (exact by default).
    Cover {
        graph: String,
        r: usize,
        #[command(flatten)]
        method: MethodFlags,
    },
    /// Both fractional programs and their common optimum.
    Duality { graph: String, r: usize },
    /// Fewest parts in a K_r-decomposition of a graph.
    Phi { graph: String, r: usize },
    /// Fewest parts in a monochromatic decomposition of a colouring.
    PhiColoured { colouring: String, profile: String },
    /// Worst colouring of a graph.
    PhiK {
        graph: String,
        profile: String,
        #[arg(long, default_value_t = DEFAULT_COLOURING_BUDGET)]
        budget: u128,
        #[arg(long)]
        symmetry: bool,
    },
    /// Maximum over a graph6 stream ("-" reads standard input).
    PhiN {
        input: String,
        profile: String,
        #[arg(long, default_value_t = DEFAULT_COLOURING_BUDGET)]
        budget: u128,
    },
    /// Ramsey table lookup or witness search.
    Ramsey {
        #[command(subcommand)]
        action: RamseyAction,
    },
    /// Re-check the certificates in a JSON report.
    Verify { report: String },
    /// Check tau_3 <= 2 nu_3 exhaustively or on seeded random graphs.
    TuzaSweep {
        #[arg(long, conflicts_with = "random")]
        n: Option<usize>,
        /// COUNT N P SEED
        #[arg(long, num_args = 4, value_names = ["COUNT", "N", "P", "SEED"])]
        random: Option<Vec<String>>,
    },
}

#[derive(Subcommand)]
enum RamseyAction {
    Known { profile: String },
    Search {
        profile: String,
        s: usize,
        #[arg(long)]
        degree_ordering: bool,
        #[arg(long)]
        node_budget: Option<u64>,
    },
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::parse(path, e.to_string()))?;
    Ok(text)
}

fn read_graph(path: &str) -> Result<Graph> {
    let text = read_input(path)?;
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    parse_graph6(line.trim())
}

fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|f| f.trim().parse().map_err(|_| Error::parse("profile", format!("not an integer: {f:?}"))))
        .collect()
}

fn parse_num<T: std::str::FromStr>(what: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::parse(what, format!("cannot parse {s:?}")))
}

enum Outcome {
    Report(RunReport),
    Verified(report::Verification),
}

fn run(cli: &Cli) -> Result<Outcome> {
    let report = match &cli.command {
        Command::Turan { n, p } => report::turan(*n, *p)?,
        Command::Blowup { base, sizes } => {
            let base: EdgeColouring = read_input(base)?.parse()?;
            report::blowup(&base, sizes)?
        }
        Command::Cliques { graph, r } => report::cliques(&read_graph(graph)?, *r)?,
        Command::Packing { graph, r, method } => report::packing(&read_graph(graph)?, *r, method.method())?,
        Command::Cover { graph, r, method } => report::cover(&read_graph(graph)?, *r, method.method())?,
        Command::Duality { graph, r } => report::duality(&read_graph(graph)?, *r)?,
        Command::Phi { graph, r } => report::phi(&read_graph(graph)?, *r)?,
        Command::PhiColoured { colouring, profile } => {
            let c: EdgeColouring = read_input(colouring)?.parse()?;
            report::phi_coloured_report(&c, &profile.parse()?)?
        }
        Command::PhiK { graph, profile, budget, symmetry } => {
            let options = PhiOptions { budget: *budget, symmetry_pruning: *symmetry };
            report::phi_k(&read_graph(graph)?, &profile.parse()?, &options)?
        }
        Command::PhiN { input, profile, budget } => {
            let options = PhiOptions { budget: *budget, ..Default::default() };
            let profile: CliqueProfile = profile.parse()?;
            if input == "-" {
                report::phi_n(read_graph6_stream(io::stdin().lock()), &profile, &options)?
            } else {
                let file = fs::File::open(input).map_err(|e| Error::parse(input.as_str(), e.to_string()))?;
                report::phi_n(read_graph6_stream(BufReader::new(file)), &profile, &options)?
            }
        }
        Command::Ramsey { action: RamseyAction::Known { profile } } => report::ramsey_known_report(&parse_sizes(profile)?)?,
        Command::Ramsey { action: RamseyAction::Search { profile, s, degree_ordering, node_budget } } => {
            let mut options = SearchOptions { degree_ordering: *degree_ordering, ..Default::default() };
            if let Some(b) = node_budget {
                options.node_budget = *b;
            }
            report::ramsey_search(&CliqueProfile::normalized(parse_sizes(profile)?)?, *s, &options)?
        }
        Command::Verify { report: path } => {
            let r = RunReport::from_json(&read_input(path)?)?;
            // A well-formed report whose claims do not check out is a
            // verification failure, not malformed input.
            let v = report::verify_report(&r).map_err(|e| match e {
                Error::InvalidInput(msg) => Error::Internal(format!("verification failed: {msg}")),
                other => other,
            })?;
            return Ok(Outcome::Verified(v));
        }
        Command::TuzaSweep { n, random } => {
            let source = match (n, random) {
                (Some(n), None) => SweepSource::AllLabelled(*n),
                (None, Some(args)) => SweepSource::Random {
                    count: parse_num("count", &args[0])?,
                    n: parse_num("n", &args[1])?,
                    p: parse_num("p", &args[2])?,
                    seed: parse_num("seed", &args[3])?,
                },
                _ => return Err(Error::InvalidInput("give either --n N or --random COUNT N P SEED".into())),
            };
            report::tuza_sweep(&source)?
        }
    };
    Ok(Outcome::Report(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let text = match run(&cli) {
        Ok(Outcome::Report(r)) if cli.json => r.to_json() + "\n",
        Ok(Outcome::Report(r)) => r.to_text(),
        Ok(Outcome::Verified(v)) if cli.json => {
            serde_json::to_string_pretty(&report::verification_json(&v)).expect("json") + "\n"
        }
        Ok(Outcome::Verified(v)) => {
            let checked = v.checked.iter().map(|c| format!("checked: {c}\n"));
            checked.chain(v.uncertified.iter().map(|u| format!("uncertified: {u}\n"))).collect()
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}
