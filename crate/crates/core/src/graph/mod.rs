//! Simple undirected graphs stored as dense adjacency bit rows.

mod distance;
mod edgelist;
mod graph6;
mod structure;

use std::fmt;

use thiserror::Error;

pub use distance::{distance_matrix, DistanceMatrix, UNREACHABLE};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};
pub use structure::{intersection_array, odd_girth, srg_parameters, IntersectionArray, SrgParams};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is disconnected")]
    Disconnected,
}

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An undirected loop-free graph on vertices `0..n`.
///
/// Row `i` is an `n`-bit set of the neighbours of `i`, packed into `u64`
/// words. Rows are kept symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph { n, words, bits: vec![0; n * words] }
    }

    /// Builds a graph from unordered pairs. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on every pair `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Caller guarantees `u != v` and both in range.
    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The common valency if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        seen[0] |= 1;
        frontier[0] |= 1;
        loop {
            let mut next = vec![0u64; self.words];
            for v in iter_bits(&frontier) {
                for (nw, rw) in next.iter_mut().zip(self.row(v)) {
                    *nw |= rw;
                }
            }
            let mut grew = false;
            for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
                *nw &= !*sw;
                if *nw != 0 {
                    grew = true;
                }
                *sw |= *nw;
            }
            if !grew {
                break;
            }
            frontier = next;
        }
        seen.iter().map(|w| w.count_ones() as usize).sum::<usize>() == self.n
    }

    /// Proper 2-colouring test.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        stack.push(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Vertices of the line graph are the edges of `self` in the order of
    /// [`Graph::edges`]; two are adjacent when they share an endpoint.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        if edges.is_empty() {
            return Err(GraphError::Edgeless);
        }
        Ok(Graph::from_fn(edges.len(), |i, j| {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            a == c || a == d || b == c || b == d
        }))
    }

    /// Vertex `v` becomes `v` (the plus copy) and `v + n` (the minus copy);
    /// `v+` is joined to `w-` whenever `v ~ w`.
    pub fn bipartite_double(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(2 * n);
        for (u, v) in self.edges() {
            g.add_edge(u, v + n);
            g.add_edge(v, u + n);
        }
        g
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.valency(), Some(2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::from_edges(5, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 5 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k5 = Graph::from_fn(5, |_, _| true);
        assert_eq!(k5.complement().edge_count(), 0);
        assert_eq!(k5.complement().complement(), k5);
    }

    #[test]
    fn line_graph_of_triangle() {
        let k3 = Graph::from_fn(3, |_, _| true);
        assert_eq!(k3.line_graph().unwrap(), k3);
        assert_eq!(Graph::empty(4).line_graph(), Err(GraphError::Edgeless));
    }

    #[test]
    fn bipartite_double_of_bipartite_splits() {
        let c6 = cycle(6);
        let d = c6.bipartite_double();
        assert_eq!(d.n(), 12);
        assert!(d.is_bipartite());
        assert!(!d.is_connected());
        assert!(cycle(5).bipartite_double().is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(cycle(7).is_connected());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        let big = Graph::from_edges(130, (0..129).map(|i| (i, i + 1))).unwrap();
        assert!(big.is_connected());
    }
}
