use std::collections::BTreeMap;

use super::DimError;
use crate::graph::DistanceMatrix;
use crate::symsearch::PrefixFilter;

fn validate(dm: &DistanceMatrix, s: &[u32]) -> Result<(), DimError> {
    if !dm.is_connected() {
        return Err(DimError::Disconnected);
    }
    if s.is_empty() && dm.n() > 1 {
        return Err(DimError::EmptySet);
    }
    if let Some(&v) = s.iter().find(|&&v| v as usize >= dm.n()) {
        return Err(DimError::VertexOutOfRange { vertex: v as usize, n: dm.n() });
    }
    Ok(())
}

/// True iff every vertex has a distinct vector of distances to `s`.
pub fn is_resolving(dm: &DistanceMatrix, s: &[u32]) -> Result<bool, DimError> {
    Ok(unresolved_pair(dm, s)?.is_none())
}

/// The lexicographically least pair `(u, v)`, `u < v`, with equal distances
/// to every member of `s`.
pub fn unresolved_pair(dm: &DistanceMatrix, s: &[u32]) -> Result<Option<(usize, usize)>, DimError> {
    validate(dm, s)?;
    let mut groups: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for u in 0..dm.n() {
        let key: Vec<u8> = s.iter().map(|&x| dm.get(u, x as usize)).collect();
        groups.entry(key).or_default().push(u);
    }
    Ok(groups.values().filter(|g| g.len() > 1).map(|g| (g[0], g[1])).min())
}

/// Smallest `k` with `k + diam^k ≥ n`: outside a resolving set of size `k`
/// every vertex has a distinct vector in `{1..diam}^k`.
pub fn lower_bound(n: usize, diam: usize) -> usize {
    (1..).find(|&k| k + capacity(diam, k) >= n).expect("bound exists")
}

/// `diam^r`, saturating.
fn capacity(diam: usize, r: usize) -> usize {
    (0..r).fold(1usize, |acc, _| acc.saturating_mul(diam))
}

/// Incremental partition of the vertices by distance vectors to the chosen
/// landmarks, one level per search depth.
///
/// A prefix with `r` picks left is rejected when some class has more than
/// `r + diam^r` vertices, since the remaining landmarks cannot separate it.
pub(crate) struct ResolveFilter<'a> {
    dm: &'a DistanceMatrix,
    n: usize,
    k: usize,
    radix: u32,
    diam: usize,
    classes: Vec<u32>,
    stamp: Vec<u32>,
    label: Vec<u32>,
    size: Vec<u32>,
    epoch: u32,
}

impl<'a> ResolveFilter<'a> {
    pub fn new(dm: &'a DistanceMatrix, k: usize) -> Self {
        let n = dm.n();
        let diam = dm.diameter();
        let radix = diam as u32 + 1;
        ResolveFilter {
            dm,
            n,
            k,
            radix,
            diam,
            classes: vec![0; (k + 1) * n],
            stamp: vec![0; n * radix as usize],
            label: vec![0; n * radix as usize],
            size: vec![0; n],
            epoch: 0,
        }
    }
}

impl PrefixFilter for ResolveFilter<'_> {
    fn extend(&mut self, depth: usize, x: u32) -> bool {
        let n = self.n;
        let remaining = self.k - depth - 1;
        let bound = if remaining == 0 { 1 } else { remaining.saturating_add(capacity(self.diam, remaining)) } as u32;
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let row = self.dm.row(x as usize);
        let (prev, next) = self.classes[depth * n..(depth + 2) * n].split_at_mut(n);
        let mut count = 0u32;
        for u in 0..n {
            let key = (prev[u] * self.radix + u32::from(row[u])) as usize;
            let c = if self.stamp[key] == self.epoch {
                self.label[key]
            } else {
                self.stamp[key] = self.epoch;
                self.label[key] = count;
                self.size[count as usize] = 0;
                count += 1;
                count - 1
            };
            next[u] = c;
            self.size[c as usize] += 1;
            if self.size[c as usize] > bound {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, Graph};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn subsets(n: u32) -> impl Iterator<Item = Vec<u32>> {
        (0u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
    }

    #[test]
    fn resolving_on_c4_matches_brute_force() {
        let dm = distance_matrix(&cycle(4));
        assert!(!is_resolving(&dm, &[0]).unwrap());
        assert!(is_resolving(&dm, &[0, 1]).unwrap());
        for s in subsets(4).filter(|s| !s.is_empty()) {
            let rows: Vec<Vec<u8>> = (0..4).map(|u| s.iter().map(|&x| dm.get(u, x as usize)).collect()).collect();
            let distinct = (0..4).all(|i| (i + 1..4).all(|j| rows[i] != rows[j]));
            assert_eq!(is_resolving(&dm, &s).unwrap(), distinct, "{s:?}");
        }
    }

    #[test]
    fn unresolved_pairs() {
        let dm = distance_matrix(&cycle(4));
        assert_eq!(unresolved_pair(&dm, &[0]).unwrap(), Some((1, 3)));
        assert_eq!(unresolved_pair(&dm, &[0, 1]).unwrap(), None);
        let k3 = distance_matrix(&Graph::from_fn(3, |_, _| true));
        assert_eq!(unresolved_pair(&k3, &[0]).unwrap(), Some((1, 2)));
        assert!(matches!(unresolved_pair(&k3, &[]), Err(DimError::EmptySet)));
        assert!(matches!(unresolved_pair(&k3, &[3]), Err(DimError::VertexOutOfRange { .. })));
        let split = distance_matrix(&Graph::empty(2));
        assert!(matches!(is_resolving(&split, &[0]), Err(DimError::Disconnected)));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(10, 2), 3);
        assert_eq!(lower_bound(2, 1), 1);
        assert_eq!(lower_bound(126, 4), 4);
        assert_eq!(lower_bound(7, 1), 6);
    }

    #[test]
    fn filter_accepts_exactly_resolving_leaves() {
        let dm = distance_matrix(&cycle(7));
        for s in subsets(7).filter(|s| s.len() == 2) {
            let mut f = ResolveFilter::new(&dm, 2);
            let ok = f.extend(0, s[0]) && f.extend(1, s[1]);
            assert_eq!(ok, is_resolving(&dm, &s).unwrap(), "{s:?}");
        }
    }
}
