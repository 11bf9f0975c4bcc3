//! Automorphism groups by individualization and refinement.
//!
//! The first path of the search tree individualizes the smallest vertex of
//! the first largest cell at each level until the partition is discrete; the
//! individualized vertices form the base. Working from the deepest level up,
//! every other vertex `w` of the level's target cell that is not yet known to
//! share an orbit with the base point is tried: the subtree under `w` is
//! searched exhaustively for a leaf that maps the first leaf onto it by an
//! automorphism. Because each level's orbit is computed exactly, the
//! generators found form a strong generating set for that base.

use super::partition::Partition;
use super::{GroupError, Permutation, StabilizerChain};
use crate::graph::{distance_matrix, Graph};

/// True iff `p` maps every edge of `g` to an edge.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, GroupError> {
    if p.degree() != g.n() {
        return Err(GroupError::DegreeMismatch { expected: g.n(), found: p.degree() });
    }
    Ok(maps_edges(g, p.images()))
}

fn maps_edges(g: &Graph, images: &[u32]) -> bool {
    (0..g.n()).all(|u| {
        let pu = images[u] as usize;
        g.degree(u) == g.degree(pu) && g.neighbors(u).all(|v| g.has_edge(pu, images[v] as usize))
    })
}

/// Search statistics and the resulting group.
#[derive(Debug, Clone)]
pub struct AutomorphismSearch {
    pub chain: StabilizerChain,
    /// Search-tree nodes refined, including the first path.
    pub nodes: usize,
    /// Leaves checked for being automorphisms.
    pub leaves: usize,
}

struct Search<'a> {
    g: &'a Graph,
    /// Partition at each level of the first path (after refinement).
    path: Vec<Partition>,
    traces: Vec<u64>,
    targets: Vec<usize>,
    nodes: usize,
    leaves: usize,
}

impl Search<'_> {
    fn leaf_map(&self, leaf: &Partition) -> Vec<u32> {
        let first = self.path.last().expect("non-empty path").order();
        let mut images = vec![0u32; first.len()];
        for (a, b) in first.iter().zip(leaf.order()) {
            images[*a as usize] = *b;
        }
        images
    }

    fn child(&mut self, part: &Partition, v: u32, level: usize) -> Option<Partition> {
        let mut child = part.clone();
        let s = child.individualize(v);
        self.nodes += 1;
        let trace = child.refine(self.g, Some(&[s]));
        (trace == self.traces[level + 1]).then_some(child)
    }

    /// Exhaustive search below `part` (at `level`) for a leaf equivalent to
    /// the first leaf.
    fn find_leaf(&mut self, part: Partition, level: usize) -> Option<Permutation> {
        if level + 1 == self.path.len() {
            if !part.is_discrete() {
                return None;
            }
            self.leaves += 1;
            let images = self.leaf_map(&part);
            return maps_edges(self.g, &images).then(|| Permutation::from_images(images).expect("leaf map is bijective"));
        }
        let target = self.targets[level];
        let cell: Vec<u32> = part.cell(target).to_vec();
        for v in cell {
            if let Some(child) = self.child(&part, v, level) {
                if let Some(p) = self.find_leaf(child, level + 1) {
                    return Some(p);
                }
            }
        }
        None
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut y = x;
        while self.0[y as usize] != r {
            let next = self.0[y as usize];
            self.0[y as usize] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// `Aut(g)` as a stabilizer chain, together with search statistics.
pub fn automorphism_search(g: &Graph) -> AutomorphismSearch {
    let n = g.n();
    if n == 0 {
        return AutomorphismSearch { chain: StabilizerChain::trivial(0), nodes: 0, leaves: 0 };
    }
    let dm = distance_matrix(g);
    let keys: Vec<Vec<usize>> = (0..n).map(|v| dm.distance_profile(v)).collect();
    let mut root = Partition::from_keys(&keys);
    let root_trace = root.refine(g, None);
    let mut search =
        Search { g, path: vec![root], traces: vec![root_trace], targets: Vec::new(), nodes: 1, leaves: 1 };
    let mut base: Vec<u32> = Vec::new();
    while let Some(t) = search.path.last().unwrap().target_cell() {
        let part = search.path.last().unwrap();
        let v = *part.cell(t).iter().min().expect("non-empty cell");
        let mut child = part.clone();
        let s = child.individualize(v);
        let trace = child.refine(g, Some(&[s]));
        search.nodes += 1;
        search.targets.push(t);
        search.traces.push(trace);
        search.path.push(child);
        base.push(v);
    }

    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..base.len()).rev() {
        let mut uf = UnionFind::new(n);
        for p in &gens {
            for x in 0..n as u32 {
                uf.union(x, p.apply(x));
            }
        }
        let mut cell: Vec<u32> = search.path[level].cell(search.targets[level]).to_vec();
        cell.sort_unstable();
        for w in cell {
            if uf.find(w) == uf.find(base[level]) {
                continue;
            }
            let parent = search.path[level].clone();
            let Some(child) = search.child(&parent, w, level) else { continue };
            if let Some(p) = search.find_leaf(child, level + 1) {
                debug_assert_eq!(p.apply(base[level]), w);
                for x in 0..n as u32 {
                    uf.union(x, p.apply(x));
                }
                gens.push(p);
            }
        }
    }
    let chain = StabilizerChain::with_base(n, &gens, &base).expect("generators have graph degree");
    AutomorphismSearch { chain, nodes: search.nodes, leaves: search.leaves }
}

pub fn automorphism_group(g: &Graph) -> StabilizerChain {
    automorphism_search(g).chain
}
