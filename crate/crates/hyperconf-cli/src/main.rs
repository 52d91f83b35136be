//! Command-line driver: parse hypergraph and graph files, run the
//! conformality and transversal machinery, and report verdicts with
//! certificates.

mod formats;
mod gen;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hyperconf::conformality::is_conformal;
use hyperconf::dual_conformality::{
    decide_2uniform_with, decide_bounded_dim_with, decide_dim3_with, decide_general_with,
    decide_with, dual_cooccurrence_with, DecideOptions, Verdict,
};
use hyperconf::dualize::dual_with_guard;
use hyperconf::graph::maximal_cliques;
use hyperconf::transversal::{is_minimal_transversal, is_subtransversal, is_transversal};
use hyperconf::uct::k_uct_with;
use hyperconf::{Graph, Hypergraph, VertexSet};

use report::fmt_set;

#[derive(Parser)]
#[command(
    name = "hyperconf",
    version,
    about = "Hypergraph duality and conformality toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print nothing; answer through the exit status (YES: 0, NO: 1).
    #[arg(long, global = true)]
    quiet: bool,

    /// Lift the size guards on exhaustive computations.
    #[arg(long, global = true)]
    force: bool,

    /// Run the pairwise subtransversal loop and the per-vertex phase of the
    /// dimension-3 decider on multiple threads. Output is identical.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathChoice {
    Auto,
    General,
    #[value(name = "dim-k")]
    DimK,
    Dim3,
    #[value(name = "2uniform")]
    TwoUniform,
}

#[derive(Subcommand)]
enum Command {
    /// Test conformality of a hypergraph via the triple criterion.
    Conformal { file: Option<PathBuf> },
    /// Print the dual hypergraph (exhaustive, size-guarded).
    Dual { file: Option<PathBuf> },
    /// Print the co-occurrence graph of the dual hypergraph.
    DualCooccurrence { file: Option<PathBuf> },
    /// Decide whether the dual hypergraph is conformal.
    DualConformal {
        file: Option<PathBuf>,
        /// Decision procedure to use.
        #[arg(long, value_enum, default_value_t = PathChoice::Auto)]
        path: PathChoice,
        /// Emit a JSON record instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Is the given vertex set contained in some minimal transversal?
    Subtransversal {
        file: Option<PathBuf>,
        /// Comma-separated 1-based vertex ids, e.g. -S 1,2.
        #[arg(short = 'S', value_name = "IDS")]
        set: String,
    },
    /// Is the given vertex set a transversal (or a minimal one)?
    Transversal {
        file: Option<PathBuf>,
        /// Comma-separated 1-based vertex ids.
        #[arg(short = 'S', value_name = "IDS")]
        set: String,
        /// Require minimality as well.
        #[arg(long)]
        minimal: bool,
    },
    /// Does the graph have a minimal clique transversal of size >= k?
    Uct {
        file: Option<PathBuf>,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Decide dual conformality of the clique hypergraph of a graph.
    Cdc {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = PathChoice::Auto)]
        path: PathChoice,
        #[arg(long)]
        json: bool,
    },
    /// Emit a hypergraph file: c5 | ex33 | ex34 | ex35 | gm <d> <k> <l> |
    /// random <n> <m> <k> <seed>.
    Gen {
        #[arg(required = true)]
        spec: Vec<String>,
    },
}

struct Guards {
    dual: usize,
    subtransversal: usize,
}

fn guards(force: bool) -> Guards {
    let env = std::env::var("HYPERCONF_GUARD")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    let lift = |base: usize| {
        if force {
            usize::MAX
        } else {
            env.map_or(base, |e| base.max(e))
        }
    };
    Guards {
        dual: lift(hyperconf::dualize::DEFAULT_DUAL_GUARD),
        subtransversal: lift(12),
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    match file {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn load_hypergraph(file: &Option<PathBuf>) -> Result<Hypergraph> {
    Ok(formats::parse_hg(&read_input(file)?)?)
}

fn load_graph(file: &Option<PathBuf>) -> Result<Graph> {
    Ok(formats::parse_graph(&read_input(file)?)?)
}

fn parse_vertex_set(list: &str, n: usize) -> Result<VertexSet> {
    let mut ids = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let id: usize = token
            .parse()
            .map_err(|_| anyhow!("invalid vertex id {token:?}"))?;
        if id == 0 || id > n {
            bail!("vertex id {id} out of range 1..={n}");
        }
        ids.push(id as u32 - 1);
    }
    Ok(VertexSet::from_indices(&ids))
}

fn decide_by_path(h: &Hypergraph, path: PathChoice, opts: &DecideOptions) -> Result<Verdict> {
    let verdict = match path {
        PathChoice::Auto => decide_with(h, opts),
        PathChoice::General => decide_general_with(h, opts),
        PathChoice::DimK => decide_bounded_dim_with(h, h.dimension(), opts)?,
        PathChoice::Dim3 => decide_dim3_with(h, opts)?,
        PathChoice::TwoUniform => decide_2uniform_with(h, opts)?,
    };
    Ok(verdict)
}

fn report_verdict(h: &Hypergraph, verdict: &Verdict, json: bool, quiet: bool, started: Instant) {
    if quiet {
        return;
    }
    if json {
        let total_ms = started.elapsed().as_secs_f64() * 1e3;
        println!("{}", report::verdict_json(verdict, total_ms));
    } else {
        let reduced = h.sperner_reduce();
        let dropped = h.edge_count() - reduced.edge_count();
        print!("{}", report::verdict_text(verdict, &reduced, dropped));
    }
}

/// Runs one subcommand; `Some(answer)` participates in the `--quiet` exit
/// status protocol.
fn run(cli: &Cli) -> Result<Option<bool>> {
    let opts = DecideOptions {
        parallel: cli.parallel,
    };
    let guard = guards(cli.force);
    match &cli.command {
        Command::Conformal { file } => {
            let h = load_hypergraph(file)?;
            let (yes, witness) = is_conformal(&h);
            if !cli.quiet {
                if yes {
                    println!("YES (conformal)");
                } else {
                    let (i, j, k) = witness.expect("negative answers carry a witness");
                    let probe = h
                        .edge(i)
                        .intersection(h.edge(j))
                        .union(&h.edge(i).intersection(h.edge(k)))
                        .union(&h.edge(j).intersection(h.edge(k)));
                    println!("NO (not conformal)");
                    println!(
                        "witness: hyperedges {}, {}, {} need {} inside a hyperedge, and no hyperedge contains it",
                        fmt_set(h.edge(i)),
                        fmt_set(h.edge(j)),
                        fmt_set(h.edge(k)),
                        fmt_set(&probe)
                    );
                }
            }
            Ok(Some(yes))
        }
        Command::Dual { file } => {
            let h = load_hypergraph(file)?;
            let d = dual_with_guard(&h, guard.dual)?;
            if !cli.quiet {
                print!("{}", formats::emit_hg(&d));
            }
            Ok(None)
        }
        Command::DualCooccurrence { file } => {
            let h = load_hypergraph(file)?;
            let g = dual_cooccurrence_with(&h, &opts);
            if !cli.quiet {
                print!("{}", formats::emit_graph(&g));
            }
            Ok(None)
        }
        Command::DualConformal { file, path, json } => {
            let started = Instant::now();
            let h = load_hypergraph(file)?;
            let verdict = decide_by_path(&h, *path, &opts)?;
            report_verdict(&h, &verdict, *json, cli.quiet, started);
            Ok(Some(verdict.dually_conformal))
        }
        Command::Subtransversal { file, set } => {
            let h = load_hypergraph(file)?;
            let s = parse_vertex_set(set, h.vertex_count())?;
            if s.len() > guard.subtransversal {
                bail!(
                    "set of size {} exceeds the subtransversal guard ({}); pass --force or raise HYPERCONF_GUARD",
                    s.len(),
                    guard.subtransversal
                );
            }
            let (yes, witness) = is_subtransversal(&h, &s)?;
            if !cli.quiet {
                if yes {
                    println!("YES (subtransversal)");
                    let w = witness.expect("positive answers carry a witness");
                    if w.selection.is_empty() {
                        println!("the set is itself a minimal transversal");
                    } else {
                        let parts: Vec<String> = w
                            .selection
                            .iter()
                            .map(|&(v, e)| format!("{} -> {}", v.0 + 1, fmt_set(h.edge(e))))
                            .collect();
                        println!("selection: {}", parts.join("; "));
                        println!("uncovered union: {}", fmt_set(&w.uncovered_union));
                    }
                } else {
                    println!("NO (not a subtransversal)");
                }
            }
            Ok(Some(yes))
        }
        Command::Transversal { file, set, minimal } => {
            let h = load_hypergraph(file)?;
            let s = parse_vertex_set(set, h.vertex_count())?;
            let yes = if *minimal {
                is_minimal_transversal(&h, &s)?
            } else {
                is_transversal(&h, &s)?
            };
            if !cli.quiet {
                let label = if *minimal {
                    "minimal transversal"
                } else {
                    "transversal"
                };
                println!(
                    "{} ({}{})",
                    if yes { "YES" } else { "NO" },
                    if yes { "" } else { "not a " },
                    label
                );
            }
            Ok(Some(yes))
        }
        Command::Uct { file, k } => {
            let g = load_graph(file)?;
            let decision = k_uct_with(&g, *k, &opts)?;
            if !cli.quiet {
                if decision.answer {
                    println!("YES (tau_c+ >= {k}) via {}", decision.path);
                } else {
                    println!("NO (tau_c+ < {k}) via {}", decision.path);
                }
            }
            Ok(Some(decision.answer))
        }
        Command::Cdc { file, path, json } => {
            let started = Instant::now();
            let g = load_graph(file)?;
            let cliques: Vec<Vec<u32>> = maximal_cliques(&g)
                .iter()
                .map(|c| c.iter().map(|v| v.0).collect())
                .collect();
            let h = Hypergraph::build(g.vertex_count(), &cliques)?;
            if !cli.quiet && !json {
                println!("clique hypergraph: {} hyperedges", h.edge_count());
            }
            let verdict = decide_by_path(&h, *path, &opts)?;
            report_verdict(&h, &verdict, *json, cli.quiet, started);
            Ok(Some(verdict.dually_conformal))
        }
        Command::Gen { spec } => {
            let h = gen::generate(spec)?;
            if !cli.quiet {
                print!("{}", formats::emit_hg(&h));
            }
            Ok(None)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(answer) => {
            if cli.quiet && answer == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
