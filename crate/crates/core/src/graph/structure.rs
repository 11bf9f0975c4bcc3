use super::{distance_matrix, DistanceMatrix, Graph, GraphError};

/// `{b_0, ..., b_{d-1}; c_1, ..., c_d}` of a distance-regular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    pub diameter: usize,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn valency(&self) -> usize {
        self.b.first().copied().unwrap_or(0)
    }
}

/// Parameters `(n, k, a, c)` of a strongly regular graph: `k` the valency,
/// `a` common neighbours of adjacent pairs, `c` of non-adjacent pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c: usize,
}

impl SrgParams {
    /// The counting identity `k(k - a - 1) = (n - k - 1)c`.
    pub fn is_feasible(&self) -> bool {
        self.k > self.a
            && self.n > self.k
            && self.k * (self.k - self.a - 1) == (self.n - self.k - 1) * self.c
    }
}

/// Length of a shortest odd cycle, or `None` for bipartite graphs.
///
/// For every root `r` and edge `uv` with `d(r,u) = d(r,v)` there is a closed
/// odd walk of length `2 d(r,u) + 1`; the minimum over all such pairs is
/// attained on a shortest odd cycle.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let dm = distance_matrix(g);
    odd_girth_with(g, &dm)
}

pub(crate) fn odd_girth_with(g: &Graph, dm: &DistanceMatrix) -> Option<usize> {
    let mut best: Option<usize> = None;
    for r in 0..g.n() {
        let row = dm.row(r);
        for (u, v) in g.edges() {
            if row[u] == row[v] && row[u] != super::UNREACHABLE {
                let len = 2 * row[u] as usize + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

/// The intersection array if `g` is distance-regular, certified over every
/// ordered vertex pair.
pub fn intersection_array(g: &Graph) -> Result<Option<IntersectionArray>, GraphError> {
    let dm = distance_matrix(g);
    intersection_array_with(g, &dm)
}

pub(crate) fn intersection_array_with(
    g: &Graph,
    dm: &DistanceMatrix,
) -> Result<Option<IntersectionArray>, GraphError> {
    if !dm.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    let d = dm.diameter();
    let mut b: Vec<Option<usize>> = vec![None; d + 1];
    let mut c: Vec<Option<usize>> = vec![None; d + 1];
    for u in 0..n {
        let du = dm.row(u);
        for v in 0..n {
            let i = du[v] as usize;
            let (mut up, mut down) = (0, 0);
            for w in g.neighbors(v) {
                let j = du[w] as usize;
                if j == i + 1 {
                    up += 1;
                } else if j + 1 == i {
                    down += 1;
                }
            }
            for (slot, val) in [(&mut b[i], up), (&mut c[i], down)] {
                match slot {
                    None => *slot = Some(val),
                    Some(prev) if *prev != val => return Ok(None),
                    _ => {}
                }
            }
        }
    }
    let b: Vec<usize> = b[..d].iter().map(|x| x.expect("every distance occurs")).collect();
    let c: Vec<usize> = c[1..].iter().map(|x| x.expect("every distance occurs")).collect();
    Ok(Some(IntersectionArray { diameter: d, b, c }))
}

/// Strongly regular parameters, present exactly for distance-regular graphs
/// of diameter 2.
pub fn srg_parameters(g: &Graph) -> Result<Option<SrgParams>, GraphError> {
    Ok(intersection_array(g)?.and_then(|ia| srg_from_array(g.n(), &ia)))
}

pub(crate) fn srg_from_array(n: usize, ia: &IntersectionArray) -> Option<SrgParams> {
    (ia.diameter == 2).then(|| SrgParams { n, k: ia.b[0], a: ia.b[0] - ia.b[1] - 1, c: ia.c[1] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Shortest odd closed walk by brute force over all simple cycles
    /// through each vertex (depth-first, tiny graphs only).
    fn brute_odd_girth(g: &Graph) -> Option<usize> {
        fn dfs(g: &Graph, start: usize, v: usize, len: usize, used: &mut Vec<bool>, best: &mut Option<usize>) {
            for w in g.neighbors(v) {
                if w == start && len >= 2 && (len + 1) % 2 == 1 {
                    *best = Some(best.map_or(len + 1, |b| b.min(len + 1)));
                }
                if !used[w] && w > start {
                    used[w] = true;
                    dfs(g, start, w, len + 1, used, best);
                    used[w] = false;
                }
            }
        }
        let mut best = None;
        for s in 0..g.n() {
            let mut used = vec![false; g.n()];
            used[s] = true;
            dfs(g, s, s, 0, &mut used, &mut best);
        }
        best
    }

    #[test]
    fn odd_girths() {
        assert_eq!(brute_odd_girth(&petersen()), Some(5));
        assert_eq!(odd_girth(&petersen()), Some(5));
        assert_eq!(odd_girth(&cycle(6)), None);
        assert_eq!(odd_girth(&Graph::from_fn(4, |_, _| true)), Some(3));
        assert_eq!(odd_girth(&cycle(9)), Some(9));
    }

    #[test]
    fn petersen_array() {
        let ia = intersection_array(&petersen()).unwrap().unwrap();
        assert_eq!(ia, IntersectionArray { diameter: 2, b: vec![3, 2], c: vec![1, 1] });
        let srg = srg_parameters(&petersen()).unwrap().unwrap();
        assert_eq!(srg, SrgParams { n: 10, k: 3, a: 0, c: 1 });
        assert!(srg.is_feasible());
    }

    #[test]
    fn pentagon_and_hexagon() {
        let ia = intersection_array(&cycle(5)).unwrap().unwrap();
        assert_eq!((ia.b, ia.c), (vec![2, 1], vec![1, 1]));
        let hex = intersection_array(&cycle(6)).unwrap().unwrap();
        assert_eq!((hex.b, hex.c), (vec![2, 1, 1], vec![1, 1, 2]));
        assert_eq!(srg_parameters(&cycle(6)).unwrap(), None);
    }

    #[test]
    fn path_is_not_distance_regular() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(intersection_array(&p4).unwrap(), None);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(intersection_array(&g), Err(GraphError::Disconnected));
        assert_eq!(srg_parameters(&g), Err(GraphError::Disconnected));
    }
}
