//! Constructors for graph families.
//!
//! Vertex orders are fixed so that witnesses are reproducible:
//!
//! * Johnson and Kneser graphs: `k`-subsets of `0..n` in lexicographic order.
//! * Hamming graphs: tuples in mixed-radix order, first coordinate most
//!   significant.
//! * Paley graphs: field elements by index (see the field module).
//! * `K_{n,n} − I`: `i⁺ = i`, `i⁻ = i + n`.
//! * Hadamard graphs: `r⁺`, `r⁻`, `c⁺`, `c⁻`, each indexed `0..k`.
//! * Projective planes: normalized points (first nonzero coordinate 1, in
//!   lexicographic order of coordinate indices), then lines in the same order.

mod field;
mod hadamard;
mod named;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use field::Field;

pub use hadamard::{HadamardMatrix, HadamardMethod};
pub use named::{named, named_graphs};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: {reason}")]
    Parameter { family: &'static str, reason: String },
    #[error("invalid Hadamard matrix: {0}")]
    InvalidHadamard(String),
    #[error("unknown named graph `{0}`")]
    UnknownNamed(String),
    #[error("embedded graph `{name}` failed its checks: {reason}")]
    NamedCheck { name: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Parameter { family, reason: reason.into() }
}

/// Part sizes of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(parts: Vec<usize>) -> Result<PartitionSpec, FamilyError> {
        if parts.is_empty() {
            return Err(bad("multipartite", "no parts"));
        }
        if parts.contains(&0) {
            return Err(bad("multipartite", "empty part"));
        }
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Parts are consecutive vertex ranges.
pub fn complete_multipartite(spec: &PartitionSpec) -> Result<Graph, FamilyError> {
    let n = spec.total();
    if n < 2 {
        return Err(bad("multipartite", "fewer than two vertices"));
    }
    let part: Vec<usize> = spec.parts.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i, m)).collect();
    Ok(Graph::from_fn(n, |u, v| part[u] != part[v]))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("complete", "need n >= 2"));
    }
    Ok(Graph::from_fn(n, |_, _| true))
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", "need n >= 3"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.iter().fold(0u64, |m, &x| m | 1 << x));
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else { break };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
    out
}

fn subset_graph(family: &'static str, n: usize, k: usize, meet: u32) -> Result<Graph, FamilyError> {
    if n > 64 {
        return Err(bad(family, "n > 64 unsupported"));
    }
    let sets = subsets(n, k);
    if sets.len() > 5000 {
        return Err(bad(family, format!("{} vertices is too many", sets.len())));
    }
    Ok(Graph::from_fn(sets.len(), |u, v| (sets[u] & sets[v]).count_ones() == meet))
}

/// `k`-subsets adjacent when they share `k − 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if k < 1 || k >= n {
        return Err(bad("johnson", format!("need 1 <= k <= n - 1, got n={n}, k={k}")));
    }
    subset_graph("johnson", n, k, k as u32 - 1)
}

/// `k`-subsets adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if k < 1 || n < 2 * k {
        return Err(bad("kneser", format!("need 1 <= k and n >= 2k, got n={n}, k={k}")));
    }
    subset_graph("kneser", n, k, 0)
}

/// `d`-tuples over `q` symbols adjacent when they differ in one position.
pub fn hamming(d: usize, q: usize) -> Result<Graph, FamilyError> {
    if d < 1 || q < 2 {
        return Err(bad("hamming", format!("need d >= 1 and q >= 2, got d={d}, q={q}")));
    }
    let n = q.checked_pow(d as u32).filter(|&n| n <= 5000).ok_or_else(|| bad("hamming", "too many vertices"))?;
    let digits = |mut v: usize| -> Vec<usize> {
        let mut t = vec![0; d];
        for slot in t.iter_mut().rev() {
            *slot = v % q;
            v /= q;
        }
        t
    };
    let tuples: Vec<Vec<usize>> = (0..n).map(digits).collect();
    Ok(Graph::from_fn(n, |u, v| tuples[u].iter().zip(&tuples[v]).filter(|(a, b)| a != b).count() == 1))
}

/// Field elements adjacent when their difference is a nonzero square.
pub fn paley(q: usize) -> Result<Graph, FamilyError> {
    if q % 4 != 1 {
        return Err(bad("paley", format!("{q} is not 1 mod 4")));
    }
    let f = Field::new(q).ok_or_else(|| bad("paley", format!("{q} is not a prime power")))?;
    let sq = f.squares();
    Ok(Graph::from_fn(q, |u, v| sq[f.sub(u, v)]))
}

/// `K_{n,n}` minus a perfect matching.
pub fn knn_minus_i(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("knn_minus_i", "need n >= 2"));
    }
    Ok(complete(n)?.bipartite_double())
}

/// `r_i⁺ ~ c_j⁺` and `r_i⁻ ~ c_j⁻` when `H_ij = 1`; `r_i⁺ ~ c_j⁻` and
/// `r_i⁻ ~ c_j⁺` when `H_ij = −1`.
pub fn hadamard_graph(h: &HadamardMatrix) -> Result<Graph, FamilyError> {
    let k = h.order();
    if k < 4 {
        return Err(bad("hadamard", "need order >= 4"));
    }
    let (rp, rm, cp, cm) = (0, k, 2 * k, 3 * k);
    let mut edges = Vec::with_capacity(2 * k * k);
    for i in 0..k {
        for j in 0..k {
            if h.get(i, j) > 0 {
                edges.push((rp + i, cp + j));
                edges.push((rm + i, cm + j));
            } else {
                edges.push((rp + i, cm + j));
                edges.push((rm + i, cp + j));
            }
        }
    }
    Ok(Graph::from_edges(4 * k, edges)?)
}

/// Incidence graph of points and lines of PG(2, q).
pub fn pg2_incidence(q: usize) -> Result<Graph, FamilyError> {
    let f = Field::new(q).ok_or_else(|| bad("pg2", format!("{q} is not a prime power")))?;
    let mut points: Vec<[usize; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first = [a, b, c].into_iter().find(|&x| x != 0);
                if first == Some(1) {
                    points.push([a, b, c]);
                }
            }
        }
    }
    let m = points.len();
    debug_assert_eq!(m, q * q + q + 1);
    let dot = |x: &[usize; 3], y: &[usize; 3]| (0..3).fold(0, |s, i| f.add(s, f.mul(x[i], y[i])));
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            if dot(p, l) == 0 {
                edges.push((i, m + j));
            }
        }
    }
    Ok(Graph::from_edges(2 * m, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, intersection_array, odd_girth, srg_parameters, SrgParams};

    fn params(g: &Graph) -> (usize, Option<usize>, usize) {
        (g.n(), g.valency(), distance_matrix(g).diameter())
    }

    #[test]
    fn multipartite() {
        let oct = complete_multipartite(&PartitionSpec::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert_eq!(params(&oct), (6, Some(4), 2));
        assert_eq!(complete_multipartite(&PartitionSpec::new(vec![1; 4]).unwrap()).unwrap().edge_count(), 6);
        let k34 = complete_multipartite(&PartitionSpec::new(vec![3, 4]).unwrap()).unwrap();
        assert_eq!(k34.edge_count(), 12);
        assert!(k34.is_bipartite());
        assert!(PartitionSpec::new(vec![]).is_err());
        assert!(complete_multipartite(&PartitionSpec::new(vec![1]).unwrap()).is_err());
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle(3).unwrap().edges().collect::<Vec<_>>(), complete(3).unwrap().edges().collect::<Vec<_>>());
        assert!(cycle(6).unwrap().is_bipartite());
        assert_eq!(params(&cycle(31).unwrap()), (31, Some(2), 15));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn johnson_and_kneser() {
        assert_eq!(params(&johnson(5, 2).unwrap()), (10, Some(6), 2));
        assert_eq!(params(&johnson(6, 3).unwrap()), (20, Some(9), 3));
        assert_eq!(params(&kneser(7, 3).unwrap()), (35, Some(4), 3));
        assert_eq!(params(&kneser(6, 2).unwrap()), (15, Some(6), 2));
        let petersen = kneser(5, 2).unwrap();
        assert_eq!(intersection_array(&petersen).unwrap().unwrap().b, vec![3, 2]);
        for n in 4..=10 {
            assert_eq!(johnson(n, 2).unwrap().complement(), kneser(n, 2).unwrap());
        }
        let d = kneser(7, 3).unwrap().bipartite_double();
        assert!(d.is_connected());
        assert_eq!(distance_matrix(&d).diameter(), 7);
        assert!(johnson(4, 4).is_err());
        assert!(kneser(5, 3).is_err());
    }

    #[test]
    fn hamming_graphs() {
        assert_eq!(params(&hamming(2, 3).unwrap()), (9, Some(4), 2));
        assert_eq!(params(&hamming(4, 2).unwrap()), (16, Some(4), 4));
        assert_eq!(params(&hamming(3, 3).unwrap()), (27, Some(6), 3));
        assert!(hamming(0, 3).is_err());
    }

    #[test]
    fn paley_graphs() {
        assert_eq!(params(&paley(13).unwrap()), (13, Some(6), 2));
        assert_eq!(srg_parameters(&paley(9).unwrap()).unwrap(), Some(SrgParams { n: 9, k: 4, a: 1, c: 2 }));
        assert_eq!(srg_parameters(&paley(25).unwrap()).unwrap(), Some(SrgParams { n: 25, k: 12, a: 5, c: 6 }));
        assert_eq!(srg_parameters(&paley(49).unwrap()).unwrap().unwrap().k, 24);
        assert!(paley(12).is_err());
        assert!(paley(21).is_err());
        assert_eq!(srg_parameters(&paley(81).unwrap()).unwrap(), Some(SrgParams { n: 81, k: 40, a: 19, c: 20 }));
    }

    #[test]
    fn knn() {
        let cube = hamming(3, 2).unwrap();
        let q3 = knn_minus_i(4).unwrap();
        assert_eq!(params(&q3), params(&cube));
        assert_eq!(intersection_array(&q3).unwrap(), intersection_array(&cube).unwrap());
        assert_eq!(params(&knn_minus_i(5).unwrap()), (10, Some(4), 3));
        assert!(!knn_minus_i(2).unwrap().is_connected());
        assert!(knn_minus_i(1).is_err());
    }

    #[test]
    fn hadamard_graphs() {
        let h4 = hadamard_graph(&HadamardMatrix::sylvester(4).unwrap()).unwrap();
        assert_eq!(params(&h4), (16, Some(4), 4));
        assert_eq!(intersection_array(&h4).unwrap(), intersection_array(&hamming(4, 2).unwrap()).unwrap());
        let h8 = hadamard_graph(&HadamardMatrix::sylvester(8).unwrap()).unwrap();
        assert_eq!(params(&h8), (32, Some(8), 4));
        let h12 = hadamard_graph(&HadamardMatrix::paley1(12).unwrap()).unwrap();
        assert_eq!(params(&h12), (48, Some(12), 4));
        assert!(h12.is_bipartite());
        assert!(intersection_array(&h12).unwrap().is_some());
        // Swapping r⁺/r⁻ together with c⁺/c⁻ is an automorphism.
        let k = 12;
        let swap: Vec<usize> = (0..4 * k).map(|v| if (v / k) % 2 == 0 { v + k } else { v - k }).collect();
        assert_eq!(h12.relabel(&swap), h12);
    }

    #[test]
    fn projective_planes() {
        let heawood = pg2_incidence(2).unwrap();
        assert_eq!(params(&heawood), (14, Some(3), 3));
        assert_eq!(params(&pg2_incidence(3).unwrap()), (26, Some(4), 3));
        let pg4 = pg2_incidence(4).unwrap();
        assert_eq!(params(&pg4), (42, Some(5), 3));
        assert!(pg4.is_bipartite());
        assert!(intersection_array(&pg4).unwrap().is_some());
        assert_eq!(odd_girth(&heawood), None);
        assert!(pg2_incidence(6).is_err());
    }

    #[test]
    fn named_literals() {
        let ico = named("icosahedron").unwrap();
        assert_eq!(params(&ico), (12, Some(5), 3));
        assert_eq!(params(&named("coxeter").unwrap()), (28, Some(3), 4));
        let s = named("shrikhande").unwrap();
        assert_eq!(srg_parameters(&s).unwrap(), Some(SrgParams { n: 16, k: 6, a: 2, c: 2 }));
        assert_eq!(srg_parameters(&named("hoffman_singleton").unwrap()).unwrap(), Some(SrgParams { n: 50, k: 7, a: 0, c: 1 }));
        assert_eq!(srg_parameters(&named("gewirtz").unwrap()).unwrap(), Some(SrgParams { n: 56, k: 10, a: 0, c: 2 }));
    }
}
