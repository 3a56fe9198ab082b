//! Command-line front end for the `cfcolor` library.
//!
//! Every command ends with one summary line on standard output,
//! `RESULT <status> ...`. Exit codes: 0 success, valid or feasible; 1 invalid
//! or infeasible; 2 input or usage error; 3 search budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cfcolor::domination::{open_cf_bipartite4, open_cf_planar8, outerplanar_cf3, planar_cf4};
use cfcolor::exact::{chi_cf, exists_cf_k, gamma_cf_k};
use cfcolor::generators::{
    gen_complete, gen_cycle, gen_gk, gen_kn_minus_triangle, gen_path, gen_random_outerplanar, gen_random_planar,
    gen_reduction_1color, gen_star, ClauseOrders,
};
use cfcolor::heuristic::iterated_elimination;
use cfcolor::io::{parse_coloring, parse_formula, parse_graph, write_coloring, write_graph, write_roles};
use cfcolor::outerplanar::solve_outerplanar_detailed;
use cfcolor::{verify_cf, Error, Graph, Mode, Outcome, PartialColoring, SearchLimits};

#[derive(Parser)]
#[command(name = "cfcolor", version, about = "Conflict-free graph coloring tools")]
struct Cli {
    /// Log progress to standard error (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring file against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
    },
    /// Exhaustive search.
    Exact {
        #[arg(value_enum)]
        quantity: Quantity,
        /// Palette size; required for `gamma`, turns `chi` into a decision.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterated elimination of distance-3 sets.
    Heuristic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dynamic program for outerplanar graphs, k in {1, 2}.
    Dp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: u32,
        /// Minimize the number of colored vertices.
        #[arg(long)]
        minimize: bool,
        /// Print per-atom feasible-list sizes to standard error.
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Colorings from dominating sets and the open-neighborhood constructions.
    DominateColor {
        #[arg(value_enum)]
        construction: Construction,
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated graph.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Order of the graph; the level for `gk`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Chord keep probability for `random-outerplanar`.
        #[arg(long, default_value_t = 0.5)]
        keep: f64,
        /// Formula file for `reduction1`.
        #[arg(long)]
        formula: Option<PathBuf>,
        /// Role labels for `reduction1`, one `v role` line per vertex.
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Budget {
    /// Search nodes before giving up.
    #[arg(long)]
    node_budget: Option<u64>,
    /// Seconds before giving up.
    #[arg(long)]
    time_budget: Option<u64>,
}

impl Budget {
    fn limits(&self) -> Result<SearchLimits, Failure> {
        let default = SearchLimits::default();
        let nodes = self.node_budget.unwrap_or(default.node_budget);
        let time = self.time_budget.map_or(default.time_budget, Duration::from_secs);
        SearchLimits::new(nodes, time).map_err(Failure::Input)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Closed,
    Open,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Closed => Mode::Closed,
            ModeArg::Open => Mode::Open,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Chi,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Cf4,
    Cf3,
    Open4,
    Open8,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gk,
    Knm3,
    Path,
    Cycle,
    Star,
    Complete,
    Reduction1,
    RandomOuterplanar,
    RandomPlanar,
}

/// Ways a command can fail, with their exit codes.
enum Failure {
    /// Exit 1 with the given status word.
    Negative(String),
    Input(Error),
    Io(String),
    Budget(u64),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { nodes } => Failure::Budget(nodes),
            other => Failure::Input(other),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

/// Writes `payload` to `out`, or to standard output when no file is given.
fn emit(out: Option<&Path>, payload: &str) -> CmdResult {
    match out {
        Some(p) => fs::write(p, payload).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn summary(status: &str, coloring: &PartialColoring) {
    println!(
        "RESULT {status} colors={} colored={}",
        coloring.colors_used(),
        coloring.colored_vertices().len()
    );
}

fn emit_coloring(out: Option<&Path>, status: &str, coloring: &PartialColoring) -> CmdResult {
    emit(out, &write_coloring(coloring))?;
    summary(status, coloring);
    Ok(())
}

fn unwrap_outcome<T>(outcome: Outcome<T>) -> Result<Option<T>, Failure> {
    match outcome {
        Outcome::Found(x) => Ok(Some(x)),
        Outcome::Infeasible => Ok(None),
        Outcome::BudgetExceeded(u) => Err(Failure::Budget(u.nodes)),
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Verify { graph, coloring, mode } => {
            let g = load_graph(&graph)?;
            let chi = parse_coloring(&read(&coloring)?, g.n())?;
            let verdict = verify_cf(&g, &chi, mode.into());
            for (v, reason) in &verdict.violations {
                eprintln!("vertex {v}: {reason:?}");
            }
            if verdict.is_valid() {
                summary("valid", &chi);
                Ok(())
            } else {
                summary("invalid", &chi);
                Err(Failure::Negative(String::new()))
            }
        }
        Command::Exact {
            quantity,
            k,
            mode,
            graph,
            budget,
            out,
        } => {
            let g = load_graph(&graph)?;
            let limits = budget.limits()?;
            let mode = Mode::from(mode);
            let found = match (quantity, k) {
                (Quantity::Chi, None) => unwrap_outcome(chi_cf(&g, mode, limits)?)?.map(|(_, c)| c),
                (Quantity::Chi, Some(k)) => unwrap_outcome(exists_cf_k(&g, k, mode, limits)?)?,
                (Quantity::Gamma, Some(k)) => unwrap_outcome(gamma_cf_k(&g, k, mode, limits)?)?.map(|(_, c)| c),
                (Quantity::Gamma, None) => {
                    return Err(Failure::Input(Error::InvalidParameter {
                        what: "--k",
                        constraint: "given for gamma",
                        value: 0,
                    }))
                }
            };
            match found {
                Some(chi) => emit_coloring(out.as_deref(), "feasible", &chi),
                None => Err(Failure::Negative("infeasible".into())),
            }
        }
        Command::Heuristic { graph, out } => {
            let g = load_graph(&graph)?;
            let result = iterated_elimination(&g);
            log::info!("{} rounds", result.trace.rounds.len());
            emit_coloring(out.as_deref(), "ok", &result.coloring)
        }
        Command::Dp {
            graph,
            k,
            minimize,
            stats,
            out,
        } => {
            let g = load_graph(&graph)?;
            let run = solve_outerplanar_detailed(&g, k, minimize)?;
            if stats {
                for (c, comp) in run.components.iter().enumerate() {
                    for (&a, st) in comp.tree.post_order.iter().zip(&comp.atoms) {
                        eprintln!(
                            "ATOM component={c} atom={a} kind={:?} size={} incoming={:?} anchors={} feasible={} layers={:?}",
                            st.kind, st.size, st.incoming, st.anchors, st.feasible, st.layer_sizes
                        );
                    }
                }
            }
            match run.solution {
                Some(s) => emit_coloring(out.as_deref(), "feasible", &s.coloring),
                None => Err(Failure::Negative("infeasible".into())),
            }
        }
        Command::DominateColor {
            construction,
            graph,
            budget,
            out,
        } => {
            let g = load_graph(&graph)?;
            let limits = budget.limits()?;
            let result = match construction {
                Construction::Cf4 => planar_cf4(&g, limits),
                Construction::Cf3 => outerplanar_cf3(&g, limits),
                Construction::Open4 => open_cf_bipartite4(&g, limits),
                Construction::Open8 => open_cf_planar8(&g, limits),
            };
            match result {
                Ok(chi) => emit_coloring(out.as_deref(), "ok", &chi),
                Err(Error::ProperColoringInfeasible(k)) => {
                    eprintln!("contracted minor is not properly {k}-colorable");
                    Err(Failure::Negative("infeasible".into()))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Gen {
            family,
            n,
            seed,
            keep,
            formula,
            roles,
            out,
        } => {
            let need_n = |default: usize| n.unwrap_or(default);
            let g = match family {
                Family::Gk => gen_gk(need_n(3))?,
                Family::Knm3 => gen_kn_minus_triangle(need_n(5))?,
                Family::Path => gen_path(need_n(5))?,
                Family::Cycle => gen_cycle(need_n(5))?,
                Family::Star => gen_star(need_n(5))?,
                Family::Complete => gen_complete(need_n(5))?,
                Family::RandomOuterplanar => gen_random_outerplanar(need_n(10), keep, seed)?,
                Family::RandomPlanar => gen_random_planar(need_n(10), seed)?,
                Family::Reduction1 => {
                    let Some(path) = formula else {
                        return Err(Failure::Io("reduction1 needs --formula".into()));
                    };
                    let f = parse_formula(&read(&path)?)?;
                    let r = gen_reduction_1color(&f, &ClauseOrders::all_upper(&f))?;
                    if let Some(p) = roles {
                        fs::write(&p, write_roles(&r.roles))
                            .map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
                    }
                    r.graph
                }
            };
            emit(out.as_deref(), &write_graph(&g))?;
            println!("RESULT ok n={} m={}", g.n(), g.m());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).init();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(status)) => {
            if !status.is_empty() {
                println!("RESULT {status} colors=0 colored=0");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            println!("RESULT error colors=0 colored=0");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            println!("RESULT error colors=0 colored=0");
            ExitCode::from(2)
        }
        Err(Failure::Budget(nodes)) => {
            eprintln!("search budget exceeded after {nodes} nodes");
            println!("RESULT budget-exceeded colors=0 colored=0");
            ExitCode::from(3)
        }
    }
}
