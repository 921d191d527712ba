use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;

use hubmatch::bench::run_bench;
use hubmatch::ordering::{
    enumerate_full_orderings, enumerate_mhc_orderings, DEFAULT_FULL_ORDERING_CAP,
};
use hubmatch::random::random_full_ordering;
use hubmatch::{
    brute_force_match, covers, enumerate_minimum_hub_covers, parse_edge_list, parse_graphlet_xml,
    select_best_ordering, to_edge_list, to_graphlet_xml, to_graphlets, Counter, CoverOptions,
    Execution, Graph, HubCover, Matcher, OracleLimits, Ordering, SearchOptions, SelectionOptions,
    UnifyMode,
};

mod report;

use report::Format;

#[derive(Parser)]
#[command(
    name = "hubmatch",
    version,
    about = "Subgraph matching over graphlet decompositions"
)]
struct Cli {
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find every embedding of the query in the data graph.
    Match {
        data: PathBuf,
        query: PathBuf,
        /// Comma-separated query vertices, e.g. 3,6,7.
        #[arg(long, conflicts_with = "auto")]
        ordering: Option<String>,
        /// Pick a minimum hub cover and order it greedily (the default).
        #[arg(long)]
        auto: bool,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        /// Accept orderings whose vertices are not a hub cover of the query.
        #[arg(long)]
        allow_any_ordering: bool,
        /// Include every binding formed during the search.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List the minimum hub covers of a query.
    Covers {
        query: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Show graphlet metrics and the greedily selected ordering.
    Order {
        query: PathBuf,
        /// Reference metrics to compare against, as vertex=boundaries/free
        /// pairs, e.g. 5=1/0,8=0/2.
        #[arg(long)]
        reference_metrics: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Search once per ordering and tabulate the counters.
    Bench {
        data: PathBuf,
        query: PathBuf,
        /// mhc, all, or sample:N.
        #[arg(long, default_value = "mhc")]
        scope: Scope,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        /// Counter the rows are sorted by.
        #[arg(long, default_value = "recursiveCalls")]
        counter: Counter,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Rewrite a graph as an edge list or as graphlet XML.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        /// Write here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare the matcher against the brute-force enumerator.
    Verify {
        data: PathBuf,
        query: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Lax,
}

impl From<Mode> for UnifyMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strict => UnifyMode::Strict,
            Mode::Lax => UnifyMode::Lax,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(alias = "edges")]
    Edgelist,
    #[value(name = "graphlet-xml", alias = "xml")]
    GraphletXml,
}

#[derive(Clone, Copy)]
enum Scope {
    Mhc,
    All,
    Sample(usize),
}

impl std::str::FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mhc" => Ok(Scope::Mhc),
            "all" => Ok(Scope::All),
            _ => s
                .strip_prefix("sample:")
                .and_then(|n| n.parse().ok())
                .map(Scope::Sample)
                .ok_or_else(|| format!("expected mhc, all or sample:N, got {s:?}")),
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_xml = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("xml"))
        || text.trim_start().starts_with('<');
    let parsed = if is_xml {
        parse_graphlet_xml(&text)
    } else {
        parse_edge_list(&text)
    };
    parsed.with_context(|| format!("parsing {}", path.display()))
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn min_covers(q: &Graph, exec: Execution) -> anyhow::Result<Vec<HubCover>> {
    let options = CoverOptions {
        execution: exec,
        ..Default::default()
    };
    Ok(enumerate_minimum_hub_covers(q, &options)?)
}

fn parse_reference(spec: &str) -> anyhow::Result<Vec<(String, usize, usize)>> {
    spec.split(',')
        .map(|item| {
            let bad = || anyhow!("bad reference metric {item:?}; expected vertex=boundaries/free");
            let (v, m) = item.trim().split_once('=').ok_or_else(bad)?;
            let (b, f) = m.split_once('/').ok_or_else(bad)?;
            Ok((
                v.to_string(),
                b.parse().map_err(|_| bad())?,
                f.parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let exec = execution(cli.sequential);
    match cli.command {
        Command::Match {
            data,
            query,
            ordering,
            auto: _,
            mode,
            allow_any_ordering,
            trace,
            format,
        } => {
            let (d, q) = (read_graph(&data)?, read_graph(&query)?);
            let matcher = Matcher::new(&d, &q)?;
            let (ordering, cover, warnings) = match ordering {
                Some(spec) => {
                    let o = Ordering::parse(&spec)?;
                    o.check_against(&q)?;
                    let cover = if covers(&q, &o.vertex_set())? {
                        Some(HubCover::new(&q, o.vertex_set())?)
                    } else {
                        None
                    };
                    (o, cover, Vec::new())
                }
                None => {
                    let sel = select_best_ordering(
                        &q,
                        &min_covers(&q, exec)?,
                        &SelectionOptions::default(),
                    )?;
                    (sel.ordering, Some(sel.cover), sel.warnings)
                }
            };
            let options = SearchOptions {
                mode: mode.into(),
                require_cover: !allow_any_ordering,
                trace,
                execution: exec,
                ..Default::default()
            };
            let result = matcher.run(&ordering, &options)?;
            let mut warnings = warnings;
            if result.no_match {
                warnings.push("some graphlet unified with no data graphlet on any branch".into());
            }
            print!(
                "{}",
                report::matching(&result, &ordering, cover.as_ref(), &warnings, format)
            );
            Ok(exit_for(!result.solutions.is_empty()))
        }
        Command::Covers { query, format } => {
            let q = read_graph(&query)?;
            print!("{}", report::covers(&min_covers(&q, exec)?, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Order {
            query,
            reference_metrics,
            format,
        } => {
            let q = read_graph(&query)?;
            let reference = reference_metrics
                .as_deref()
                .map(parse_reference)
                .transpose()?;
            let sel =
                select_best_ordering(&q, &min_covers(&q, exec)?, &SelectionOptions::default())?;
            let graphlets = to_graphlets(&q);
            let mut notes = Vec::new();
            for (v, b, f) in reference.iter().flatten() {
                let g = graphlets
                    .iter()
                    .find(|g| g.hub().as_str() == v)
                    .ok_or_else(|| anyhow!("reference names unknown vertex {v:?}"))?;
                let m = g.metrics();
                if (m.boundary_count, m.free_neighbor_count) != (*b, *f) {
                    notes.push(format!(
                        "graphlet {v}: computed ({},{}) differs from reference ({b},{f})",
                        m.boundary_count, m.free_neighbor_count
                    ));
                }
            }
            print!("{}", report::order(&graphlets, &sel, &notes, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            data,
            query,
            scope,
            seed,
            mode,
            counter,
            format,
        } => {
            let (d, q) = (read_graph(&data)?, read_graph(&query)?);
            let matcher = Matcher::new(&d, &q)?;
            let orderings: Vec<Ordering> = match scope {
                Scope::Mhc => enumerate_mhc_orderings(&min_covers(&q, exec)?),
                Scope::All => enumerate_full_orderings(&q, DEFAULT_FULL_ORDERING_CAP)?.collect(),
                Scope::Sample(n) => {
                    let mut rng = StdRng::seed_from_u64(seed);
                    (0..n).map(|_| random_full_ordering(&q, &mut rng)).collect()
                }
            };
            let options = SearchOptions {
                mode: mode.into(),
                require_cover: matches!(scope, Scope::Mhc),
                ..Default::default()
            };
            let bench = run_bench(&matcher, &orderings, &options, counter, exec)?;
            print!("{}", report::bench(&bench, format));
            if !bench.consistent() {
                let list: Vec<String> = bench.disagreements.iter().map(|o| o.joined()).collect();
                eprintln!("solution sets differ for orderings: {}", list.join(" "));
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { input, to, output } => {
            let g = read_graph(&input)?;
            let text = match to {
                Target::Edgelist => to_edge_list(&g),
                Target::GraphletXml => to_graphlet_xml(&g),
            };
            match output {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            data,
            query,
            mode,
            format,
        } => {
            let (d, q) = (read_graph(&data)?, read_graph(&query)?);
            let expected = brute_force_match(&d, &q, &OracleLimits::default())?;
            let matcher = Matcher::new(&d, &q)?;
            let sel =
                select_best_ordering(&q, &min_covers(&q, exec)?, &SelectionOptions::default())?;
            let options = SearchOptions {
                mode: mode.into(),
                execution: exec,
                ..Default::default()
            };
            let found = matcher.run(&sel.ordering, &options)?.solutions;
            let equal = found == expected;
            print!(
                "{}",
                report::verify(&sel.ordering, found.len(), expected.len(), equal, format)
            );
            Ok(exit_for(equal))
        }
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
