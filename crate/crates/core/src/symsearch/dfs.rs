use std::sync::Arc;

use super::context::{prefix_is_lex_minimal, GroupContext};

/// Incremental per-depth state attached to a subset search.
///
/// `extend(depth, v)` is called when `v` is placed at position `depth`; the
/// state for positions `..depth` is the one built by the previous calls, so
/// implementations index their state by depth and need no undo.
pub trait PrefixFilter {
    /// Whether the prefix extended by `v` may lead to an accepted subset.
    fn extend(&mut self, depth: usize, v: u32) -> bool;
}

impl PrefixFilter for () {
    fn extend(&mut self, _: usize, _: u32) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every sorted subset.
    Plain,
    /// Only subsets whose every prefix is lex-minimal in its orbit.
    LexLeader,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DfsStats {
    /// Prefixes that passed all checks, excluding the final position.
    pub nodes: u64,
    /// Candidates examined at the final position.
    pub leaves: u64,
    /// Prefixes rejected by the lex-leader test.
    pub lex_rejected: u64,
}

pub enum Step<'a> {
    Yield(&'a [u32]),
    Done,
    Stopped,
}

/// Depth-first enumeration of sorted subsets of `0..n` of size `target`,
/// drawn as prefixes of `k`-subsets (so position `d` ranges up to
/// `n − k + d`), in lexicographic order.
pub struct SubsetDfs<F: PrefixFilter> {
    n: u32,
    k: usize,
    target: usize,
    mode: Mode,
    check_last: bool,
    /// `ctx[i]` is the stabilizer of `current[..i]`; computed lazily.
    ctx: Vec<Arc<GroupContext>>,
    current: Vec<u32>,
    next: Vec<u32>,
    floor: usize,
    filter: F,
    stats: DfsStats,
    started: bool,
    done: bool,
    ticks: u32,
}

impl<F: PrefixFilter> SubsetDfs<F> {
    /// Extensions of `prefix`, which must itself pass the search's checks
    /// (it is replayed through the filter; a rejected prefix gives an empty
    /// search).
    pub fn new(root: Arc<GroupContext>, n: usize, k: usize, target: usize, mode: Mode, prefix: &[u32], mut filter: F) -> Self {
        assert!(target <= k && k <= n && prefix.len() <= target);
        let mut ok = true;
        for (d, &v) in prefix.iter().enumerate() {
            ok &= filter.extend(d, v);
        }
        let mut next = vec![0; target + 1];
        next[prefix.len()] = prefix.last().map_or(0, |&v| v + 1);
        SubsetDfs {
            n: n as u32,
            k,
            target,
            mode,
            check_last: true,
            ctx: vec![root],
            current: prefix.to_vec(),
            next,
            floor: prefix.len(),
            filter,
            stats: DfsStats::default(),
            started: false,
            done: !ok,
            ticks: 0,
        }
    }

    /// Skip the lex-leader test at the final position. The first accepted
    /// subset in lexicographic order is then still lex-minimal provided the
    /// filter's acceptance is invariant under the group.
    pub fn skip_last_lex_check(mut self) -> Self {
        self.check_last = false;
        self
    }

    pub fn stats(&self) -> DfsStats {
        self.stats
    }

    pub fn filter(&self) -> &F {
        &self.filter
    }

    /// Resume after `last`, a subset previously yielded by an identical
    /// search.
    pub fn resume_after(&mut self, last: &[u32]) {
        assert_eq!(last.len(), self.target);
        assert!(last.starts_with(&self.current[..self.floor]));
        self.ctx.truncate(1);
        self.current.clear();
        for (d, &v) in last.iter().enumerate() {
            if d >= self.floor {
                self.next[d] = v + 1;
            }
            if !self.filter.extend(d, v) && d >= self.floor {
                // Only reached when `last` was not produced by this search.
                self.done = true;
            }
            self.current.push(v);
        }
        self.started = true;
        if self.floor == self.target {
            self.done = true;
        }
    }

    fn context(&mut self, depth: usize) -> Arc<GroupContext> {
        while self.ctx.len() <= depth {
            let d = self.ctx.len();
            let c = self.ctx[d - 1].stabilize(self.current[d - 1]);
            self.ctx.push(c);
        }
        Arc::clone(&self.ctx[depth])
    }

    fn lex_ok(&mut self) -> bool {
        let len = self.current.len();
        if self.ctx[0].is_trivial() {
            return true;
        }
        self.context(len - 1);
        prefix_is_lex_minimal(&self.ctx[..len], &self.current)
    }

    /// Advances to the next accepted subset. `stop` is polled every few
    /// thousand steps.
    pub fn step(&mut self, stop: &dyn Fn() -> bool) -> Step<'_> {
        if self.done {
            return Step::Done;
        }
        if self.started {
            self.pop();
        } else {
            self.started = true;
            if self.current.len() == self.target {
                self.done = true;
                return Step::Yield(&self.current);
            }
        }
        loop {
            self.ticks += 1;
            if self.ticks & 0xfff == 0 && stop() {
                return Step::Stopped;
            }
            let d = self.current.len();
            if d == self.target {
                return Step::Yield(&self.current);
            }
            let c = self.next[d];
            if c + (self.k - d) as u32 > self.n {
                if d == self.floor {
                    self.done = true;
                    return Step::Done;
                }
                self.pop();
                continue;
            }
            self.next[d] = c + 1;
            self.current.push(c);
            let last = d + 1 == self.target;
            if last {
                self.stats.leaves += 1;
            }
            if self.mode == Mode::LexLeader && (!last || self.check_last) && !self.lex_ok() {
                self.stats.lex_rejected += 1;
                self.pop();
                continue;
            }
            if !self.filter.extend(d, c) {
                self.pop();
                continue;
            }
            if !last {
                self.stats.nodes += 1;
                self.next[d + 1] = c + 1;
            }
        }
    }

    fn pop(&mut self) {
        self.current.pop();
        self.ctx.truncate(self.current.len() + 1);
    }
}

impl<F: PrefixFilter> Iterator for SubsetDfs<F> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        match self.step(&|| false) {
            Step::Yield(s) => Some(s.to_vec()),
            Step::Done | Step::Stopped => None,
        }
    }
}
