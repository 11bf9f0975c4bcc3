//! Resolving sets and the exact metric-dimension search.
//!
//! The search ascends from a counting lower bound. Level `k` walks sorted
//! `k`-subsets depth first, either all of them or only lex-leaders of
//! automorphism orbits, and refines the partition of vertices by distance
//! vectors as landmarks are added. The first resolving leaf ends the search.
//!
//! Leaves are not lex-tested: automorphisms preserve resolvability, so the
//! lexicographically first resolving leaf of a prefix-pruned walk is already
//! the least member of its orbit.

mod formulas;
mod resolve;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{distance_matrix, DistanceMatrix, Graph};
use crate::parallel;
use crate::permgroup::{automorphism_group, StabilizerChain};
use crate::symsearch::{DfsStats, GroupContext, Mode, Step, SubsetDfs};

pub use formulas::{double_transfer_applicable, formula_johnson_kneser2, formula_lattice, formula_multipartite};
pub use resolve::{is_resolving, lower_bound, unresolved_pair};
use resolve::ResolveFilter;

#[derive(Debug, Error, Clone)]
pub enum DimError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has fewer than two vertices")]
    TooSmall,
    #[error("landmark set is empty")]
    EmptySet,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not distance-regular")]
    NotDistanceRegular,
    #[error("{0}")]
    Formula(String),
    #[error("budget exhausted: dimension is between {} and {}", .0.lower, .0.upper)]
    Budget(Box<PartialResult>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Orbit representatives when the group is large enough to pay off.
    #[default]
    Auto,
    Plain,
    Orbit,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "plain" => Ok(Strategy::Plain),
            "orbit" => Ok(Strategy::Orbit),
            _ => Err(format!("unknown strategy `{s}` (expected auto, plain or orbit)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Plain => "plain",
            Strategy::Orbit => "orbit",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub strategy: Strategy,
    /// Worker threads; `None` uses the ambient pool.
    pub threads: Option<usize>,
    /// Wall-clock allowance for the whole search.
    pub budget: Option<Duration>,
    /// Report the lexicographically least witness.
    pub deterministic: bool,
    /// Under `Auto`, orbit search needs a group larger than this.
    pub orbit_threshold: u128,
    /// Under `Auto`, orbit search needs `1/|G|` below this fraction.
    pub plain_fraction: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            strategy: Strategy::Auto,
            threads: None,
            budget: None,
            deterministic: false,
            orbit_threshold: 24,
            plain_fraction: 0.5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub k: usize,
    pub mode: Mode,
    /// Work units the level was split into.
    pub tasks: usize,
    /// Internal prefixes accepted.
    pub nodes: u64,
    /// Subsets tested for resolvability.
    pub leaves: u64,
    pub lex_rejected: u64,
    pub elapsed: Duration,
    pub found: bool,
}

#[derive(Clone, Debug)]
pub struct DimResult {
    pub dimension: usize,
    pub witness: Vec<u32>,
    /// Every smaller size was exhausted.
    pub exact: bool,
    pub lower_bound: usize,
    pub group_order: Option<BigUint>,
    pub levels: Vec<LevelStats>,
    pub elapsed: Duration,
}

/// What is known when the budget runs out.
#[derive(Clone, Debug)]
pub struct PartialResult {
    pub lower: usize,
    pub upper: usize,
    pub group_order: Option<BigUint>,
    pub levels: Vec<LevelStats>,
    pub elapsed: Duration,
}

enum Outcome {
    Found(Vec<u32>),
    Exhausted,
    Stopped,
}

struct Level<'a> {
    dm: &'a DistanceMatrix,
    k: usize,
    root: Arc<GroupContext>,
    mode: Mode,
    deterministic: bool,
    deadline: Option<Instant>,
}

impl Level<'_> {
    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn dfs(&self, prefix: &[u32], target: usize) -> SubsetDfs<ResolveFilter<'_>> {
        let n = self.dm.n();
        SubsetDfs::new(Arc::clone(&self.root), n, self.k, target, self.mode, prefix, ResolveFilter::new(self.dm, self.k))
    }

    /// Accepted prefixes of length `p`, in lexicographic order, chosen so
    /// there are enough to keep every worker busy.
    fn split(&self, stats: &mut DfsStats) -> Option<Vec<Vec<u32>>> {
        let want = 16 * parallel::current_threads();
        let mut tasks: Vec<Vec<u32>> = vec![Vec::new()];
        for p in 1..self.k.min(5) {
            if tasks.len() >= want {
                break;
            }
            let expanded = parallel::map(&tasks, |t| {
                let mut dfs = self.dfs(t, p);
                let mut out = Vec::new();
                loop {
                    match dfs.step(&|| self.expired()) {
                        Step::Yield(s) => out.push(s.to_vec()),
                        Step::Done => break,
                        Step::Stopped => return None,
                    }
                }
                Some((out, dfs.stats()))
            });
            let mut next = Vec::new();
            for e in expanded {
                let (out, s) = e?;
                add_stats(stats, s);
                next.extend(out);
            }
            tasks = next;
        }
        Some(tasks)
    }

    fn run(&self) -> (Outcome, LevelStats) {
        let start = Instant::now();
        let mut stats = DfsStats::default();
        let level = |outcome: Outcome, tasks: usize, stats: DfsStats| {
            let found = matches!(outcome, Outcome::Found(_));
            let ls = LevelStats {
                k: self.k,
                mode: self.mode,
                tasks,
                nodes: stats.nodes,
                leaves: stats.leaves,
                lex_rejected: stats.lex_rejected,
                elapsed: start.elapsed(),
                found,
            };
            (outcome, ls)
        };
        let Some(tasks) = self.split(&mut stats) else {
            return level(Outcome::Stopped, 0, stats);
        };
        let best = AtomicUsize::new(usize::MAX);
        let indexed: Vec<(usize, &Vec<u32>)> = tasks.iter().enumerate().collect();
        let results = parallel::map(&indexed, |&(i, prefix)| {
            let stop = || {
                let b = best.load(Ordering::Relaxed);
                (if self.deterministic { b < i } else { b != usize::MAX }) || self.expired()
            };
            if stop() {
                return (Outcome::Stopped, DfsStats::default());
            }
            let mut dfs = self.dfs(prefix, self.k).skip_last_lex_check();
            let outcome = match dfs.step(&stop) {
                Step::Yield(s) => {
                    best.fetch_min(i, Ordering::Relaxed);
                    Outcome::Found(s.to_vec())
                }
                Step::Done => Outcome::Exhausted,
                Step::Stopped => Outcome::Stopped,
            };
            (outcome, dfs.stats())
        });
        let mut found = None;
        let mut stopped = false;
        for (outcome, s) in results {
            add_stats(&mut stats, s);
            match outcome {
                Outcome::Found(w) if found.is_none() => found = Some(w),
                Outcome::Stopped => stopped = true,
                _ => {}
            }
        }
        let outcome = match found {
            Some(w) => Outcome::Found(w),
            None if stopped => Outcome::Stopped,
            None => Outcome::Exhausted,
        };
        level(outcome, tasks.len(), stats)
    }
}

fn add_stats(acc: &mut DfsStats, s: DfsStats) {
    acc.nodes += s.nodes;
    acc.leaves += s.leaves;
    acc.lex_rejected += s.lex_rejected;
}

/// The exact metric dimension of a connected graph.
pub fn metric_dimension(g: &Graph, opts: &SearchOptions) -> Result<DimResult, DimError> {
    parallel::with_threads(opts.threads, || search(g, opts))
}

fn search(g: &Graph, opts: &SearchOptions) -> Result<DimResult, DimError> {
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let n = g.n();
    if n < 2 {
        return Err(DimError::TooSmall);
    }
    let dm = distance_matrix(g);
    if !dm.is_connected() {
        return Err(DimError::Disconnected);
    }
    let lb = lower_bound(n, dm.diameter());
    let group = match opts.strategy {
        Strategy::Plain => None,
        Strategy::Auto | Strategy::Orbit => Some(automorphism_group(g)),
    };
    let group_order = group.as_ref().map(StabilizerChain::order);
    let order = group.as_ref().map_or(1.0, |c| c.order_u128().map_or(f64::INFINITY, |o| o as f64));
    let use_orbit = match opts.strategy {
        Strategy::Plain => false,
        Strategy::Orbit => order > 1.0,
        Strategy::Auto => order > opts.orbit_threshold as f64 && 1.0 / order < opts.plain_fraction,
    };
    let (root, mode) = match group {
        Some(chain) if use_orbit => (Arc::new(GroupContext::new(chain)), Mode::LexLeader),
        _ => (Arc::new(GroupContext::new(StabilizerChain::trivial(n))), Mode::Plain),
    };
    let mut levels = Vec::new();
    for k in lb..n {
        let level = Level { dm: &dm, k, root: Arc::clone(&root), mode, deterministic: opts.deterministic, deadline };
        let (outcome, stats) = level.run();
        levels.push(stats);
        match outcome {
            Outcome::Found(witness) => {
                debug_assert!(is_resolving(&dm, &witness).unwrap_or(false));
                return Ok(DimResult {
                    dimension: k,
                    witness,
                    exact: true,
                    lower_bound: lb,
                    group_order,
                    levels,
                    elapsed: start.elapsed(),
                });
            }
            Outcome::Exhausted => {}
            Outcome::Stopped => {
                return Err(DimError::Budget(Box::new(PartialResult {
                    lower: k,
                    upper: n - 1,
                    group_order,
                    levels,
                    elapsed: start.elapsed(),
                })));
            }
        }
    }
    unreachable!("all but one vertex always resolve")
}
