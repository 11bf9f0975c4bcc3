//! Independent oracles for integration tests. Nothing here calls into the
//! search or group code of the library.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use metdim_core::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).collect()).collect()
}

/// All-pairs distances by plain BFS; `usize::MAX` when unreachable.
pub fn bfs_distances(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    (0..g.n())
        .map(|s| {
            let mut d = vec![usize::MAX; g.n()];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &adj[u] {
                    if d[w] == usize::MAX {
                        d[w] = d[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn resolves(d: &[Vec<usize>], s: &[u32]) -> bool {
    let rows: HashSet<Vec<usize>> = (0..d.len()).map(|v| s.iter().map(|&x| d[v][x as usize]).collect()).collect();
    rows.len() == d.len()
}

/// Smallest resolving set size by trying every subset in order of size.
pub fn brute_force_dimension(g: &Graph) -> usize {
    let d = bfs_distances(g);
    let n = g.n();
    for k in 1..n {
        let mut s: Vec<u32> = (0..k as u32).collect();
        loop {
            if resolves(&d, &s) {
                return k;
            }
            let Some(i) = (0..k).rev().find(|&i| (s[i] as usize) < n - k + i) else { break };
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
        }
    }
    n.saturating_sub(1)
}

pub fn preserves_edges(g: &Graph, images: &[u32]) -> bool {
    let n = g.n();
    images.len() == n
        && images.iter().collect::<HashSet<_>>().len() == n
        && (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(images[u] as usize, images[v] as usize)))
}

/// Counts automorphisms by visiting every permutation (Heap's algorithm).
pub fn count_automorphisms_exhaustive(g: &Graph) -> u64 {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let check = |p: &[usize]| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v]));
    let mut count = u64::from(check(&p));
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            count += u64::from(check(&p));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
    bfs_distances(&g)[0].iter().all(|&d| d != usize::MAX)
}

/// Connected Erdős–Rényi graph, resampled until connected.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        if connected(n, &edges) {
            return Graph::from_edges(n, edges).unwrap();
        }
    }
}

/// Connected circulant graph on `Z_n` with a random symmetric connection set.
pub fn random_circulant(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let jumps: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.4)).collect();
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| jumps.iter().map(move |&j| (u, (u + j) % n))).collect();
        if !jumps.is_empty() && connected(n, &edges) {
            return Graph::from_edges(n, edges).unwrap();
        }
    }
}

/// Mixed corpus: half Erdős–Rényi, half circulant, sizes in `lo..=hi`.
pub fn corpus(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(lo..=hi);
            if i % 2 == 0 {
                let p = rng.gen_range(0.15..0.7);
                random_connected(&mut rng, n, p)
            } else {
                random_circulant(&mut rng, n)
            }
        })
        .collect()
}

/// Relabels `g` by a random permutation; returns the graph and the map.
pub fn shuffled(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng);
    (g.relabel(&perm), perm)
}
