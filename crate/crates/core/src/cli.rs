//! Command-line surface: construct, check, coex, ex, sts, experiment.
//!
//! Exit codes are a stable contract: 0 success, 1 internal invariant, 2
//! usage or parse trouble, 3 containment found, 4 budget exhausted.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    bipartite, cospan, from_colouring, from_tournament, iterated_steiner,
    rainbow_construction, ramsey_construction, steiner_blowup, suspension, winding_tripartite,
    PairColouring, Tournament,
};
use crate::error::{Error, Result};
use crate::experiments::{
    self, codegree_concentration, density_check_iterated, expected_codegree_report,
    indicator_independence_check, k5_rate_exact, K5RateMode, RandomConstruction,
};
use crate::family::{builtin, ForbiddenFamily};
use crate::hypergraph::{PairGraph, TriSystem};
use crate::io;
use crate::search::{self, SearchStatus};
use crate::steiner::{generate_sts, is_steiner, SteinerSystem};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVARIANT: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CONTAINED: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

const DEFAULT_SEED: u64 = 0;
const DEFAULT_BUDGET_SECS: u64 = 60;
const BUDGET_ENV: &str = "CODEGREE_BUDGET_SECS";

#[derive(Parser)]
#[command(
    name = "codegree",
    about = "3-uniform hypergraph constructions, forbidden-subgraph checks, exact codegree thresholds, and probability experiments"
)]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a named construction and write it as a 3-graph file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Test a 3-graph file against a forbidden family.
    Check {
        /// 3-graph file to test.
        #[arg(long)]
        graph: PathBuf,
        /// Family: comma-separated built-in names or a 3-graph file.
        #[arg(long)]
        forbid: String,
    },
    /// Exact codegree threshold coex(n, F) by pruned search.
    Coex(SearchArgs),
    /// Exact Turán number ex(n, F) by pruned search.
    Ex(SearchArgs),
    /// Generate or validate Steiner triple systems.
    Sts {
        /// Number of points (1 or 3 mod 6) to generate.
        #[arg(long, required_unless_present = "validate")]
        v: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Validate an existing 3-graph file instead of generating.
        #[arg(long, conflicts_with_all = ["v", "out"])]
        validate: Option<PathBuf>,
    },
    /// Exact enumerations and Monte-Carlo runs.
    Experiment {
        #[command(subcommand)]
        kind: ExperimentKind,
    },
}

#[derive(Args)]
pub struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Family: comma-separated built-in names or a 3-graph file.
    #[arg(long)]
    forbid: String,
    /// Wall-clock budget in seconds (default 60; env CODEGREE_BUDGET_SECS).
    #[arg(long)]
    budget: Option<u64>,
    /// Use the exhaustive enumeration oracle instead of the pruned search.
    #[arg(long)]
    naive: bool,
    /// Write the result as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the witness as a 3-graph file.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum ConstructKind {
    /// Random or file-backed s-colouring construction.
    Colouring {
        #[arg(long, required_unless_present = "colouring")]
        n: Option<usize>,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Pair-colouring file to use instead of a random colouring.
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random or file-backed tournament construction.
    Tournament {
        #[arg(long, required_unless_present = "tournament")]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Tournament file to use instead of a random tournament.
        #[arg(long)]
        tournament: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Steiner triple system blow-up on s - 2 parts.
    SteinerBlowup {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        /// Steiner system file; defaults to the generated system on s - 2 points.
        #[arg(long)]
        sts: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Triples off monochromatic triangles of a 2-colouring.
    Ramsey {
        #[arg(long, required_unless_present = "colouring")]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rainbow triangles of an (s-1)-colouring.
    Rainbow {
        #[arg(long, required_unless_present = "colouring")]
        n: Option<usize>,
        /// Family parameter; the colouring uses s - 1 colours.
        #[arg(long, default_value_t = 4)]
        s: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Iterated blow-up of the complement of a system on 2s - 1 points.
    IteratedSteiner {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sts: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Apex over every edge of a 2-graph.
    Suspension {
        /// 2-graph: "triangle", "K<d>", or a file path.
        #[arg(long)]
        pairgraph: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Two extra vertices co-spanning the whole vertex set of a 3-graph.
    Cospan {
        /// 3-graph: a built-in name (K3..K9, K4-, F32, F7, ...) or a file path.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Balanced tripartition winding round modulo 3.
    Winding {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Complete balanced bipartite 3-graph.
    Bipartite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum ExperimentKind {
    /// Exact joint distribution of the codegree indicators of a pair.
    Independence {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact K5 frequency of a random colouring of a 5-set.
    K5Rate {
        /// colouring4 or ramsey2.
        #[arg(long)]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum-codegree distribution over random instances.
    Concentration {
        /// colouring, tournament, ramsey or rainbow.
        #[arg(long)]
        construction: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value = "1/10")]
        eps: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write per-trial minimum codegrees as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exact per-third-vertex edge probability of a construction.
    ExpectedCodegree {
        #[arg(long)]
        construction: String,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge density of the iterated construction against 1 - 2/s.
    Density {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run(cli: Cli) -> u8 {
    if let Some(threads) = cli.threads {
        // Ignore failure: the pool can only be configured once per process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<u8> {
    match command {
        Command::Construct { kind } => cmd_construct(kind),
        Command::Check { graph, forbid } => cmd_check(&graph, &forbid),
        Command::Coex(args) => cmd_search(args, true),
        Command::Ex(args) => cmd_search(args, false),
        Command::Sts { v, out, validate } => cmd_sts(v, out.as_deref(), validate.as_deref()),
        Command::Experiment { kind } => cmd_experiment(kind),
    }
}

fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn load_colouring(
    n: Option<usize>,
    s: usize,
    seed: u64,
    file: Option<&Path>,
) -> Result<PairColouring> {
    match file {
        Some(path) => io::read_colouring_file(path),
        None => {
            let n = n.ok_or_else(|| Error::invalid("--n is required without --colouring"))?;
            if s == 0 {
                return Err(Error::invalid("a colouring needs at least one colour"));
            }
            Ok(PairColouring::random(n, s, &mut seeded_rng(seed)))
        }
    }
}

fn resolve_pairgraph(spec: &str) -> Result<PairGraph> {
    if spec == "triangle" {
        return Ok(PairGraph::triangle());
    }
    if let Some(rest) = spec.strip_prefix('K') {
        if let Ok(k) = rest.parse::<usize>() {
            return Ok(PairGraph::complete(k));
        }
    }
    let path = Path::new(spec);
    if path.exists() {
        return io::read_pair_file(path);
    }
    Err(Error::invalid(format!(
        "unknown 2-graph '{spec}': expected triangle, K<d>, or a file path"
    )))
}

fn resolve_trisystem(spec: &str) -> Result<TriSystem> {
    let path = Path::new(spec);
    if path.exists() {
        return io::read_tri_file(path);
    }
    builtin(spec)
}

fn cmd_construct(kind: ConstructKind) -> Result<u8> {
    let (system, out) = match kind {
        ConstructKind::Colouring {
            n,
            s,
            seed,
            colouring,
            out,
        } => {
            let c = load_colouring(n, s, seed, colouring.as_deref())?;
            (from_colouring(&c), out)
        }
        ConstructKind::Tournament {
            n,
            seed,
            tournament,
            out,
        } => {
            let t = match tournament {
                Some(path) => io::read_tournament_file(&path)?,
                None => {
                    let n =
                        n.ok_or_else(|| Error::invalid("--n is required without --tournament"))?;
                    Tournament::random(n, &mut seeded_rng(seed))
                }
            };
            (from_tournament(&t), out)
        }
        ConstructKind::SteinerBlowup { s, n, sts, out } => {
            let system = load_steiner(sts.as_deref(), s.checked_sub(2))?;
            (steiner_blowup(&system, n)?, out)
        }
        ConstructKind::Ramsey {
            n,
            seed,
            colouring,
            out,
        } => {
            let c = load_colouring(n, 2, seed, colouring.as_deref())?;
            (ramsey_construction(&c)?, out)
        }
        ConstructKind::Rainbow {
            n,
            s,
            seed,
            colouring,
            out,
        } => {
            if s < 3 {
                return Err(Error::invalid("rainbow needs s >= 3 (s - 1 >= 2 colours)"));
            }
            let c = load_colouring(n, s - 1, seed, colouring.as_deref())?;
            (rainbow_construction(&c)?, out)
        }
        ConstructKind::IteratedSteiner { s, n, sts, out } => {
            let points = s.checked_mul(2).and_then(|x| x.checked_sub(1));
            let system = load_steiner(sts.as_deref(), points)?;
            (iterated_steiner(&system, n)?, out)
        }
        ConstructKind::Suspension { pairgraph, out } => {
            (suspension(&resolve_pairgraph(&pairgraph)?), out)
        }
        ConstructKind::Cospan { graph, out } => (cospan(&resolve_trisystem(&graph)?), out),
        ConstructKind::Winding { n, out } => (winding_tripartite(n)?, out),
        ConstructKind::Bipartite { n, out } => (bipartite(n), out),
    };
    io::write_tri_file(&out, &system)?;
    let min_codegree = if system.n() >= 2 {
        system.min_codegree()?.to_string()
    } else {
        "-".to_string()
    };
    println!(
        "n={} edges={} min_codegree={} -> {}",
        system.n(),
        system.edge_count(),
        min_codegree,
        out.display()
    );
    Ok(EXIT_OK)
}

fn load_steiner(file: Option<&Path>, points: Option<usize>) -> Result<SteinerSystem> {
    match file {
        Some(path) => {
            let system = SteinerSystem::new(io::read_tri_file(path)?)?;
            if let Some(v) = points {
                if system.n() != v {
                    return Err(Error::invalid(format!(
                        "the system in the file has {} points but the parameters need {v}",
                        system.n()
                    )));
                }
            }
            Ok(system)
        }
        None => {
            let v = points.ok_or_else(|| Error::invalid("parameter s is too small"))?;
            generate_sts(v)
        }
    }
}

fn cmd_check(graph: &Path, forbid: &str) -> Result<u8> {
    let g = io::read_tri_file(graph)?;
    let family = ForbiddenFamily::from_spec(forbid)?;
    match crate::subgraph::contains_any(&g, &family) {
        None => {
            println!("FREE");
            Ok(EXIT_OK)
        }
        Some((idx, witness)) => {
            let mapping: Vec<String> = witness
                .iter()
                .enumerate()
                .map(|(from, to)| format!("{from}->{to}"))
                .collect();
            println!(
                "CONTAINED {} via {}",
                family.name_of(idx),
                mapping.join(" ")
            );
            Ok(EXIT_CONTAINED)
        }
    }
}

fn effective_budget(flag: Option<u64>) -> Duration {
    let secs = flag
        .or_else(|| {
            std::env::var(BUDGET_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_BUDGET_SECS);
    Duration::from_secs(secs)
}

fn cmd_search(args: SearchArgs, codegree: bool) -> Result<u8> {
    let family = ForbiddenFamily::from_spec(&args.forbid)?;
    let budget = effective_budget(args.budget);
    let result = match (codegree, args.naive) {
        (true, true) => search::coex_naive(args.n, &family)?,
        (true, false) => search::coex_exact(args.n, &family, Some(budget))?,
        (false, true) => search::ex_naive(args.n, &family)?,
        (false, false) => search::ex_exact(args.n, &family, Some(budget))?,
    };
    let status = match result.status {
        SearchStatus::Exact => "exact",
        SearchStatus::Incomplete => "incomplete",
    };
    let witness_path = match &args.witness {
        Some(path) => {
            io::write_tri_file(path, &result.witness)?;
            path.display().to_string()
        }
        None => "-".to_string(),
    };
    println!(
        "{} value={} status={} nodes={} witness={}",
        if codegree { "coex" } else { "ex" },
        result.value,
        status,
        result.nodes_explored,
        witness_path
    );
    if let Some(out) = &args.out {
        let mut text = serde_json::to_string_pretty(&result).expect("result serializes");
        text.push('\n');
        std::fs::write(out, text).map_err(|source| Error::Io {
            path: out.clone(),
            source,
        })?;
    }
    if result.status == SearchStatus::Incomplete {
        return Ok(EXIT_BUDGET);
    }
    Ok(EXIT_OK)
}

fn cmd_sts(v: Option<usize>, out: Option<&Path>, validate: Option<&Path>) -> Result<u8> {
    if let Some(path) = validate {
        let g = io::read_tri_file(path)?;
        if is_steiner(&g) {
            println!("VALID");
            return Ok(EXIT_OK);
        }
        println!("INVALID");
        return Ok(EXIT_INVARIANT);
    }
    let v = v.expect("clap enforces --v without --validate");
    let system = generate_sts(v)?;
    if let Some(path) = out {
        io::write_tri_file(path, system.as_tri())?;
        println!(
            "n={} triples={} -> {}",
            system.n(),
            system.as_tri().edge_count(),
            path.display()
        );
    } else {
        print!("{}", io::write_tri_string(system.as_tri()));
    }
    Ok(EXIT_OK)
}

fn write_report(
    report: &experiments::ExperimentReport,
    out: Option<&Path>,
) -> Result<()> {
    if let Some(path) = out {
        std::fs::write(path, report.to_json()).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
    }
    Ok(())
}

fn cmd_experiment(kind: ExperimentKind) -> Result<u8> {
    match kind {
        ExperimentKind::Independence { n, s, out } => {
            let report = indicator_independence_check(n, s)?;
            for e in &report.exact_rationals {
                println!("{} = {}/{}", e.label, e.numerator, e.denominator);
            }
            write_report(&report, out.as_deref())?;
        }
        ExperimentKind::K5Rate { mode, out } => {
            let report = k5_rate_exact(K5RateMode::parse(&mode)?);
            let rate = report.exact("k5_rate").expect("always present");
            println!("k5_rate = {}/{}", rate.numer(), rate.denom());
            for note in &report.notes {
                println!("note: {note}");
            }
            write_report(&report, out.as_deref())?;
        }
        ExperimentKind::Concentration {
            construction,
            n,
            s,
            eps,
            trials,
            seed,
            out,
            csv,
        } => {
            let construction = RandomConstruction::parse(&construction)?;
            let eps = experiments::parse_ratio(&eps)?;
            let (report, per_trial) =
                codegree_concentration(construction, n, s, eps, trials, seed)?;
            let stat = &report.empirical[0];
            println!(
                "min_codegree mean={} min={} max={} failures={}/{}",
                stat.mean, stat.min, stat.max, stat.failure_count, trials
            );
            if let Some(path) = csv {
                let mut text = String::from("trial,min_codegree\n");
                for (i, d) in per_trial.iter().enumerate() {
                    text.push_str(&format!("{i},{d}\n"));
                }
                std::fs::write(&path, text).map_err(|source| Error::Io { path, source })?;
            }
            write_report(&report, out.as_deref())?;
        }
        ExperimentKind::ExpectedCodegree {
            construction,
            s,
            out,
        } => {
            let construction = RandomConstruction::parse(&construction)?;
            let report = expected_codegree_report(construction, s)?;
            let p = report
                .exact("per_third_vertex_probability")
                .expect("always present");
            println!("per_third_vertex_probability = {}/{}", p.numer(), p.denom());
            write_report(&report, out.as_deref())?;
        }
        ExperimentKind::Density { s, n, out } => {
            let report = density_check_iterated(s, n)?;
            let d = report.exact("density").expect("always present");
            println!("density = {}/{}", d.numer(), d.denom());
            for note in &report.notes {
                println!("note: {note}");
            }
            write_report(&report, out.as_deref())?;
        }
    }
    Ok(EXIT_OK)
}
