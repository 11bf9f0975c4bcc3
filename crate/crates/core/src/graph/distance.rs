use super::{iter_bits, Graph};
use crate::parallel;

/// Marks vertex pairs in different components.
pub const UNREACHABLE: u8 = u8::MAX;

/// All-pairs shortest-path lengths, one byte per entry, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.entries[u * self.n + v]
    }

    /// Row `u`; by symmetry this is also column `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u8] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.entries.contains(&UNREACHABLE)
    }

    /// Largest finite entry.
    pub fn diameter(&self) -> usize {
        self.entries.iter().copied().filter(|&d| d != UNREACHABLE).max().unwrap_or(0) as usize
    }

    /// Number of vertices at each distance from `u`, indexed by distance;
    /// unreachable vertices are not counted.
    pub fn distance_profile(&self, u: usize) -> Vec<usize> {
        let mut prof = vec![0; self.diameter() + 1];
        for &d in self.row(u) {
            if d != UNREACHABLE {
                prof[d as usize] += 1;
            }
        }
        prof
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            writeln!(f, "{:?}", self.row(u))?;
        }
        Ok(())
    }
}

fn bfs_row(g: &Graph, root: usize, row: &mut [u8]) {
    let w = g.words();
    row.fill(UNREACHABLE);
    row[root] = 0;
    let mut seen = vec![0u64; w];
    seen[root / 64] |= 1 << (root % 64);
    let mut frontier = seen.clone();
    let mut next = vec![0u64; w];
    let mut depth = 0u8;
    loop {
        next.fill(0);
        for v in iter_bits(&frontier) {
            for (nw, rw) in next.iter_mut().zip(g.row(v)) {
                *nw |= rw;
            }
        }
        let mut any = false;
        for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
            *nw &= !*sw;
            *sw |= *nw;
            any |= *nw != 0;
        }
        if !any {
            break;
        }
        depth += 1;
        assert!(depth < UNREACHABLE, "diameter exceeds distance matrix range");
        for v in iter_bits(&next) {
            row[v] = depth;
        }
        std::mem::swap(&mut frontier, &mut next);
    }
}

/// Breadth-first search from every vertex. Rows are filled independently,
/// so the result does not depend on how many threads run.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut entries = vec![0u8; n * n];
    if n > 0 {
        parallel::for_each_chunk_mut(&mut entries, n, |root, row| bfs_row(g, root, row));
    }
    DistanceMatrix { n, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn hexagon() {
        let dm = distance_matrix(&cycle(6));
        assert_eq!(dm.diameter(), 3);
        assert_eq!(dm.row(0), &[0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn unreachable_across_components() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let dm = distance_matrix(&g);
        assert_eq!(dm.get(0, 2), UNREACHABLE);
        assert_eq!(dm.get(0, 1), 1);
        assert!(!dm.is_connected());
        assert_eq!(dm.diameter(), 1);
    }

    fn random_graph(n: usize, seed: u64, density: u64) -> Graph {
        let mut s = seed | 1;
        Graph::from_fn(n, |_, _| {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            s % 100 < density
        })
    }

    proptest! {
        #[test]
        fn matrix_invariants(n in 1usize..40, seed in any::<u64>(), density in 2u64..60) {
            let g = random_graph(n, seed, density);
            let dm = distance_matrix(&g);
            for u in 0..n {
                prop_assert_eq!(dm.get(u, u), 0);
                for v in 0..n {
                    prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                    prop_assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                    for w in 0..n {
                        let (a, b, c) = (dm.get(u, v), dm.get(v, w), dm.get(u, w));
                        if a != UNREACHABLE && b != UNREACHABLE {
                            prop_assert!(c as usize <= a as usize + b as usize);
                        }
                    }
                }
            }
        }
    }
}
