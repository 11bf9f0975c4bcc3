//! `metdim`: generate graphs, compute metric dimensions, check landmark sets,
//! print automorphism groups and verify manifests of known values.
//!
//! Exit codes: 0 success, 1 manifest mismatch, 2 usage or input error,
//! 3 budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use metdim_core::catalog::{load_manifest, run_suite, VerifyOptions};
use metdim_core::graph::{distance_matrix, intersection_array, parse_edge_list, parse_graph6, srg_parameters, to_edge_list, to_graph6};
use metdim_core::metricdim::{metric_dimension, unresolved_pair, DimError, SearchOptions, Strategy};
use metdim_core::symsearch::Mode;
use metdim_core::{automorphism_group, expr, Graph};

#[derive(Parser)]
#[command(name = "metdim", version, about = "Exact metric dimension of distance-regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a constructor expression and print it.
    Gen {
        /// e.g. `johnson(7,2)`, `paley(13)`, `hadamard(12,paley1)`, `named(coxeter)`.
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Compute the metric dimension.
    Dim {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check whether a vertex set resolves the graph.
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex indices, e.g. `0,1,2`.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        set: Vec<u32>,
    },
    /// Print the automorphism group order and generators.
    Aut {
        #[command(flatten)]
        input: Input,
    },
    /// Verify every entry of a manifest.
    Tables {
        manifest: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Constructor expression.
    expr: Option<String>,
    /// graph6 token.
    #[arg(long)]
    graph6: Option<String>,
    /// File holding a graph6 token or an edge list.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value = "auto")]
    strategy: Strategy,
    /// Worker threads.
    #[arg(long, env = "METDIM_THREADS")]
    threads: Option<usize>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Lexicographically least witnesses and schedule-independent output.
    #[arg(long)]
    deterministic: bool,
}

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl ToString) -> Failure {
    Failure { code: 2, msg: msg.to_string() }
}

impl SearchArgs {
    fn options(&self) -> Result<SearchOptions, Failure> {
        let budget = match self.budget {
            Some(b) if !b.is_finite() || b < 0.0 => return Err(usage(format!("--budget must be a non-negative number, got {b}"))),
            Some(b) => Some(Duration::from_secs_f64(b)),
            None => None,
        };
        if self.threads == Some(0) {
            return Err(usage("--threads must be at least 1"));
        }
        Ok(SearchOptions { strategy: self.strategy, threads: self.threads, budget, deterministic: self.deterministic, ..SearchOptions::default() })
    }
}

impl Input {
    fn load(&self) -> Result<Graph, Failure> {
        if let Some(e) = &self.expr {
            return expr::build(e).map_err(usage);
        }
        if let Some(t) = &self.graph6 {
            return parse_graph6(t.trim()).map_err(usage);
        }
        let path = self.file.as_ref().expect("clap enforces one input");
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        match parse_graph6(first) {
            Ok(g) => Ok(g),
            Err(_) => parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        }
    }
}

fn summary(g: &Graph) -> String {
    let dm = distance_matrix(g);
    let mut s = format!("n={} edges={}", g.n(), g.edge_count());
    match g.valency() {
        Some(k) => s += &format!(" valency={k}"),
        None => s += " irregular",
    }
    if !dm.is_connected() {
        return s + " disconnected";
    }
    s += &format!(" diameter={}", dm.diameter());
    if let Ok(Some(ia)) = intersection_array(g) {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        s += &format!(" intersection-array={{{};{}}}", list(&ia.b), list(&ia.c));
    }
    if let Ok(Some(p)) = srg_parameters(g) {
        s += &format!(" srg=({},{},{},{})", p.n, p.k, p.a, p.c);
    }
    s
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen { expr, format } => {
            let g = expr::build(&expr).map_err(usage)?;
            match format {
                Format::Graph6 => println!("{}", to_graph6(&g)),
                Format::Edgelist => print!("{}", to_edge_list(&g)),
            }
            eprintln!("{}", summary(&g));
            Ok(0)
        }
        Command::Dim { input, search } => {
            let g = input.load()?;
            let opts = search.options()?;
            match metric_dimension(&g, &opts) {
                Ok(r) => {
                    println!("dimension {}", r.dimension);
                    println!("witness {}", join(&r.witness));
                    println!("lower-bound {}", r.lower_bound);
                    if let Some(order) = &r.group_order {
                        println!("group-order {order}");
                    }
                    for l in &r.levels {
                        let mode = match l.mode {
                            Mode::Plain => "plain",
                            Mode::LexLeader => "orbit",
                        };
                        if opts.deterministic {
                            println!("level k={} mode={mode} found={}", l.k, l.found);
                        } else {
                            println!(
                                "level k={} mode={mode} tasks={} nodes={} leaves={} lex-rejected={} found={} seconds={:.3}",
                                l.k,
                                l.tasks,
                                l.nodes,
                                l.leaves,
                                l.lex_rejected,
                                l.found,
                                l.elapsed.as_secs_f64()
                            );
                        }
                    }
                    if !opts.deterministic {
                        eprintln!("elapsed {:.3}s", r.elapsed.as_secs_f64());
                    }
                    Ok(0)
                }
                Err(DimError::Budget(p)) => {
                    println!("bounds {} {}", p.lower, p.upper);
                    eprintln!("budget exceeded: dimension is between {} and {}", p.lower, p.upper);
                    Ok(3)
                }
                Err(e) => Err(usage(e)),
            }
        }
        Command::Check { input, set } => {
            let g = input.load()?;
            let mut set = set;
            set.sort_unstable();
            set.dedup();
            match unresolved_pair(&distance_matrix(&g), &set).map_err(usage)? {
                None => println!("resolving"),
                Some((u, v)) => println!("not resolving: {u} {v}"),
            }
            Ok(0)
        }
        Command::Aut { input } => {
            let g = input.load()?;
            let group = automorphism_group(&g);
            println!("order {}", group.order());
            for p in group.generators() {
                println!("generator {p}");
            }
            Ok(0)
        }
        Command::Tables { manifest, search } => {
            let entries = load_manifest(&manifest).map_err(usage)?;
            let opts = search.options()?;
            let verify = VerifyOptions { budget: opts.budget, search: opts };
            let s = run_suite(&entries, &verify);
            print!("{}", s.tsv());
            eprint!("{}", s.table());
            Ok(s.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
