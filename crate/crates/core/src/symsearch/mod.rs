//! One representative per orbit of a permutation group on `k`-subsets.
//!
//! Representatives are lex-leaders: the lexicographically least sorted
//! subset of each orbit. A prefix of a lex-leader is itself a lex-leader
//! (of the shorter subsets), so a depth-first walk over sorted subsets can
//! discard any prefix that some group element maps to a smaller one. The
//! test walks the stabilizer chain of the prefix, keeping the set of
//! partial images that agree with the prefix so far.

mod context;
mod dfs;

use std::sync::Arc;

use thiserror::Error;

use crate::permgroup::StabilizerChain;

pub use context::GroupContext;
pub use dfs::{DfsStats, Mode, PrefixFilter, Step, SubsetDfs};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("group order exceeds the element budget of {0}")]
    Budget(usize),
    #[error("orbit count does not fit in 128 bits")]
    Overflow,
}

/// `C(n, k)` as a float, for size estimates.
pub fn binomial_f64(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `C(n, k)` exactly, if it fits.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

/// True iff no group element maps the sorted subset `s` to a
/// lexicographically smaller sorted subset.
pub fn is_lex_minimal(group: &StabilizerChain, s: &[u32]) -> bool {
    debug_assert!(s.windows(2).all(|w| w[0] < w[1]));
    let mut ctx = vec![Arc::new(GroupContext::new(group.clone()))];
    for i in 1..s.len() {
        let c = ctx[i - 1].stabilize(s[i - 1]);
        ctx.push(c);
    }
    context::prefix_is_lex_minimal(&ctx, s)
}

/// A stream of orbit representatives on `k`-subsets, in increasing
/// lexicographic order.
pub struct RepStream {
    dfs: SubsetDfs<()>,
    mode: Mode,
    last: Option<Vec<u32>>,
}

impl RepStream {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The last subset yielded; pass it to [`RepStream::resume`] on an
    /// identical stream to continue from here.
    pub fn cursor(&self) -> Option<&[u32]> {
        self.last.as_deref()
    }

    pub fn resume(&mut self, cursor: &[u32]) {
        self.dfs.resume_after(cursor);
        self.last = Some(cursor.to_vec());
    }

    pub fn stats(&self) -> DfsStats {
        self.dfs.stats()
    }
}

impl Iterator for RepStream {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let s = self.dfs.next()?;
        self.last = Some(s.clone());
        Some(s)
    }
}

/// Orbit representatives of `group` on the `k`-subsets of `0..n`.
///
/// Falls back to plain enumeration when the group is trivial, or when the
/// predicted number of representatives `C(n,k)/|G|` exceeds
/// `plain_fraction · C(n,k)`.
pub fn orbit_reps_with(group: &StabilizerChain, n: usize, k: usize, plain_fraction: f64) -> RepStream {
    assert_eq!(group.degree(), n);
    let order = group.order_u128().map_or(f64::INFINITY, |o| o as f64);
    let mode = if group.is_trivial() || 1.0 / order > plain_fraction { Mode::Plain } else { Mode::LexLeader };
    let root = Arc::new(GroupContext::new(if mode == Mode::Plain { StabilizerChain::trivial(n) } else { group.clone() }));
    RepStream { dfs: SubsetDfs::new(root, n, k, k, mode, &[], ()), mode, last: None }
}

pub fn orbit_reps(group: &StabilizerChain, n: usize, k: usize) -> RepStream {
    orbit_reps_with(group, n, k, 0.5)
}

/// Orbits on `k`-subsets by Burnside's lemma: the mean over all group
/// elements of the number of fixed `k`-subsets, which is the coefficient of
/// `x^k` in `∏ (1 + x^len)` over the element's cycles.
pub fn orbit_count_burnside(group: &StabilizerChain, n: usize, k: usize, budget: usize) -> Result<u128, SymError> {
    assert_eq!(group.degree(), n);
    let elements = group.elements(budget).ok_or(SymError::Budget(budget))?;
    let mut total: u128 = 0;
    for g in &elements {
        let mut poly = vec![0u128; k + 1];
        poly[0] = 1;
        for len in g.cycle_type() {
            for j in (len..=k).rev() {
                poly[j] = poly[j].checked_add(poly[j - len]).ok_or(SymError::Overflow)?;
            }
        }
        total = total.checked_add(poly[k]).ok_or(SymError::Overflow)?;
    }
    Ok(total / elements.len() as u128)
}
