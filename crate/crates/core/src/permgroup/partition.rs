//! Ordered vertex partitions with equitable refinement.
//!
//! Cells are identified by the position of their first element in `order`.
//! Every step depends only on cell positions and neighbour counts, never on
//! vertex labels, so refinement commutes with graph isomorphisms.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    order: Vec<u32>,
    pos: Vec<u32>,
    /// Start of the cell containing each position.
    start_of: Vec<u32>,
    /// For a cell start, one past its last position.
    end_of: Vec<u32>,
    cells: usize,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(17) ^ 0x9e37_79b9_7f4a_7c15
}

impl Partition {
    /// Cells are runs of equal `key`, ordered by key.
    pub fn from_keys<K: Ord>(keys: &[K]) -> Partition {
        let n = keys.len();
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by(|&a, &b| keys[a as usize].cmp(&keys[b as usize]).then(a.cmp(&b)));
        let mut pos = vec![0u32; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v as usize] = p as u32;
        }
        let mut start_of = vec![0u32; n];
        let mut end_of = vec![0u32; n];
        let mut cells = 0;
        let mut s = 0;
        while s < n {
            let mut e = s + 1;
            while e < n && keys[order[e] as usize] == keys[order[s] as usize] {
                e += 1;
            }
            start_of[s..e].fill(s as u32);
            end_of[s] = e as u32;
            cells += 1;
            s = e;
        }
        Partition { order, pos, start_of, end_of, cells }
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.order.len()
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn cell(&self, start: usize) -> &[u32] {
        &self.order[start..self.end_of[start] as usize]
    }

    pub fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.order.len();
        let mut p = 0;
        std::iter::from_fn(move || {
            (p < n).then(|| {
                let s = p;
                p = self.end_of[s] as usize;
                s
            })
        })
    }

    /// First cell of maximum size among non-singletons.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let size = self.end_of[s] as usize - s;
            if size > 1 && best.is_none_or(|(_, b)| size > b) {
                best = Some((s, size));
            }
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell; returns the new singleton's start.
    pub fn individualize(&mut self, v: u32) -> usize {
        let p = self.pos[v as usize] as usize;
        let s = self.start_of[p] as usize;
        let e = self.end_of[s] as usize;
        if e - s == 1 {
            return s;
        }
        let other = self.order[s];
        self.order.swap(s, p);
        self.pos[other as usize] = p as u32;
        self.pos[v as usize] = s as u32;
        self.end_of[s] = s as u32 + 1;
        self.end_of[s + 1] = e as u32;
        for q in s + 1..e {
            self.start_of[q] = s as u32 + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to an equitable partition starting from the given splitter
    /// cells (all cells if `None`). Returns a hash of the refinement trace
    /// and the resulting cell structure.
    pub fn refine(&mut self, g: &Graph, splitters: Option<&[usize]>) -> u64 {
        let n = self.order.len();
        let words = g.words();
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut queued = vec![false; n];
        match splitters {
            Some(list) => {
                for &s in list {
                    if !queued[s] {
                        queued[s] = true;
                        queue.push_back(s);
                    }
                }
            }
            None => {
                for s in self.cell_starts().collect::<Vec<_>>() {
                    queued[s] = true;
                    queue.push_back(s);
                }
            }
        }
        let mut trace = 0xcbf2_9ce4_8422_2325u64;
        let mut wbits = vec![0u64; words];
        let mut counts = vec![0u32; n];
        let mut scratch: Vec<(u32, u32)> = Vec::new();
        while let Some(sp) = queue.pop_front() {
            if self.is_discrete() {
                break;
            }
            queued[sp] = false;
            wbits.fill(0);
            for &v in self.cell(sp) {
                wbits[v as usize / 64] |= 1 << (v % 64);
            }
            let starts: Vec<usize> = self.cell_starts().collect();
            for s in starts {
                let e = self.end_of[s] as usize;
                if e - s == 1 {
                    continue;
                }
                let mut uniform = true;
                for p in s..e {
                    let v = self.order[p] as usize;
                    let c: u32 = g.row(v).iter().zip(&wbits).map(|(a, b)| (a & b).count_ones()).sum();
                    counts[v] = c;
                    uniform &= c == counts[self.order[s] as usize];
                }
                if uniform {
                    continue;
                }
                scratch.clear();
                scratch.extend(self.order[s..e].iter().map(|&v| (counts[v as usize], v)));
                scratch.sort_unstable();
                trace = mix(trace, ((sp as u64) << 32) | s as u64);
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut q = 0;
                while q < scratch.len() {
                    let mut r = q + 1;
                    while r < scratch.len() && scratch[r].0 == scratch[q].0 {
                        r += 1;
                    }
                    frags.push((s + q, s + r));
                    trace = mix(trace, ((scratch[q].0 as u64) << 32) | (r - q) as u64);
                    q = r;
                }
                for (i, &(_, v)) in scratch.iter().enumerate() {
                    self.order[s + i] = v;
                    self.pos[v as usize] = (s + i) as u32;
                }
                for &(fs, fe) in &frags {
                    self.end_of[fs] = fe as u32;
                    for p in fs..fe {
                        self.start_of[p] = fs as u32;
                    }
                }
                self.cells += frags.len() - 1;
                let was_queued = queued[s];
                let largest = frags
                    .iter()
                    .enumerate()
                    .max_by(|a, b| (a.1 .1 - a.1 .0).cmp(&(b.1 .1 - b.1 .0)).then(b.0.cmp(&a.0)))
                    .map(|(i, _)| i)
                    .expect("at least two fragments");
                for (i, &(fs, _)) in frags.iter().enumerate() {
                    if (was_queued || i != largest) && !queued[fs] {
                        queued[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
        }
        for s in self.cell_starts() {
            trace = mix(trace, ((s as u64) << 32) | self.end_of[s] as u64);
        }
        trace
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn refinement_splits_path_by_degree_and_depth() {
        let g = path(5);
        let mut p = Partition::from_keys(&[0; 5]);
        p.refine(&g, None);
        let mut cells: Vec<Vec<u32>> = p.cell_starts().map(|s| {
            let mut c = p.cell(s).to_vec();
            c.sort();
            c
        }).collect();
        cells.sort();
        assert_eq!(cells, vec![vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn trace_is_label_invariant() {
        let g = path(6);
        let relabel = [3usize, 5, 0, 1, 4, 2];
        let h = g.relabel(&relabel);
        let mut p = Partition::from_keys(&[0; 6]);
        let mut q = Partition::from_keys(&[0; 6]);
        let t1 = p.refine(&g, None);
        let t2 = q.refine(&h, None);
        assert_eq!(t1, t2);
        let s1 = p.individualize(p.cell(p.target_cell().unwrap())[0]);
        let v = relabel[p.cell(s1)[0] as usize] as u32;
        let s2 = q.individualize(v);
        assert_eq!(s1, s2);
        assert_eq!(p.refine(&g, Some(&[s1])), q.refine(&h, Some(&[s2])));
        for (a, b) in p.order().iter().zip(q.order()) {
            assert_eq!(relabel[*a as usize] as u32, *b);
        }
    }
}
