use std::sync::Arc;

use crate::permgroup::{Permutation, StabilizerChain};

const ROOT: u32 = u32::MAX;

/// Orbit data for one group: orbit minima and a Schreier vector per orbit,
/// rooted at the orbit's least point.
#[derive(Clone, Debug)]
pub struct GroupContext {
    chain: StabilizerChain,
    gens: Vec<Permutation>,
    gens_inv: Vec<Permutation>,
    orbit_min: Vec<u32>,
    /// Generator index taking `parent[y]` to `y`, or `ROOT`.
    via: Vec<u32>,
    parent: Vec<u32>,
}

impl GroupContext {
    pub fn new(chain: StabilizerChain) -> GroupContext {
        let n = chain.degree();
        let gens: Vec<Permutation> = chain.generators().to_vec();
        let gens_inv = gens.iter().map(Permutation::inverse).collect();
        let mut orbit_min = vec![u32::MAX; n];
        let mut via = vec![ROOT; n];
        let mut parent: Vec<u32> = (0..n as u32).collect();
        let mut queue = Vec::new();
        for r in 0..n as u32 {
            if orbit_min[r as usize] != u32::MAX {
                continue;
            }
            orbit_min[r as usize] = r;
            queue.clear();
            queue.push(r);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for (s, g) in gens.iter().enumerate() {
                    let y = g.apply(x);
                    if orbit_min[y as usize] == u32::MAX {
                        orbit_min[y as usize] = r;
                        via[y as usize] = s as u32;
                        parent[y as usize] = x;
                        queue.push(y);
                    }
                }
            }
        }
        GroupContext { chain, gens, gens_inv, orbit_min, via, parent }
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn degree(&self) -> usize {
        self.orbit_min.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    #[inline]
    pub fn orbit_min(&self, y: u32) -> u32 {
        self.orbit_min[y as usize]
    }

    /// The context of the stabilizer of `pt`.
    pub fn stabilize(self: &Arc<Self>, pt: u32) -> Arc<GroupContext> {
        if self.gens.iter().all(|g| g.apply(pt) == pt) {
            return Arc::clone(self);
        }
        let chain = self.chain.point_stabilizer(pt).expect("point in range");
        Arc::new(GroupContext::new(chain))
    }

    /// Maps `set` by an element taking `y` to `a` (same orbit), i.e. by the
    /// inverse of `y`'s transversal element followed by `a`'s.
    pub fn map_set(&self, set: &mut [u32], y: u32, a: u32) {
        debug_assert_eq!(self.orbit_min(y), self.orbit_min(a));
        let mut x = y;
        while self.via[x as usize] != ROOT {
            let g = &self.gens_inv[self.via[x as usize] as usize];
            for z in set.iter_mut() {
                *z = g.apply(*z);
            }
            x = self.parent[x as usize];
        }
        let mut path = Vec::new();
        let mut x = a;
        while self.via[x as usize] != ROOT {
            path.push(self.via[x as usize]);
            x = self.parent[x as usize];
        }
        for &s in path.iter().rev() {
            let g = &self.gens[s as usize];
            for z in set.iter_mut() {
                *z = g.apply(*z);
            }
        }
    }
}

/// Minimal-image test of a sorted prefix.
///
/// `ctx[i]` must be the context of the pointwise stabilizer of `p[..i]`, for
/// every `i < p.len()`.
pub(crate) fn prefix_is_lex_minimal(ctx: &[Arc<GroupContext>], p: &[u32]) -> bool {
    debug_assert!(ctx.len() >= p.len());
    // Candidate images, each sorted with its first `i` entries equal to p[..i].
    let mut cands: Vec<Vec<u32>> = vec![p.to_vec()];
    let mut next: Vec<Vec<u32>> = Vec::new();
    for (i, &a) in p.iter().enumerate() {
        let h = &ctx[i];
        if h.is_trivial() {
            return cands.iter().all(|t| t.as_slice() >= p);
        }
        let mut m = u32::MAX;
        for t in &cands {
            for &y in &t[i..] {
                m = m.min(h.orbit_min(y));
            }
        }
        if m < a {
            return false;
        }
        debug_assert_eq!(m, h.orbit_min(a));
        next.clear();
        for t in &cands {
            for &y in &t[i..] {
                if h.orbit_min(y) == m {
                    let mut img = t.clone();
                    h.map_set(&mut img[i..], y, a);
                    img[i..].sort_unstable();
                    next.push(img);
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        std::mem::swap(&mut cands, &mut next);
    }
    true
}
