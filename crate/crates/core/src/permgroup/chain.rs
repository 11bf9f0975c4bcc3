use num_bigint::BigUint;

use super::{GroupError, Permutation};

#[derive(Clone, Debug)]
struct Level {
    /// Orbit of the level's base point under the level's generators, in
    /// discovery order.
    orbit: Vec<u32>,
    /// `coset[x]` maps the base point to `x`.
    coset: Vec<Option<Permutation>>,
    /// Inverses of `coset`, used when sifting.
    coset_inv: Vec<Option<Permutation>>,
    /// Indices into the strong generating set of elements fixing all earlier
    /// base points.
    gens: Vec<usize>,
}

/// A base and strong generating set with explicit coset representatives.
///
/// Level `i` holds the orbit of `base[i]` under the pointwise stabilizer of
/// `base[..i]`; the group order is the product of orbit lengths.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    base: Vec<u32>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn trivial(degree: usize) -> StabilizerChain {
        StabilizerChain { degree, base: Vec::new(), strong: Vec::new(), levels: Vec::new() }
    }

    /// Deterministic Schreier–Sims on the group generated by `gens`.
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<StabilizerChain, GroupError> {
        StabilizerChain::with_base(degree, gens, &[])
    }

    /// As [`StabilizerChain::new`], with the base starting with `base_prefix`
    /// (further points are appended as needed).
    pub fn with_base(degree: usize, gens: &[Permutation], base_prefix: &[u32]) -> Result<StabilizerChain, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let mut base: Vec<u32> = Vec::new();
        for &b in base_prefix {
            if b as usize >= degree {
                return Err(GroupError::PointOutOfRange { point: b as usize, degree });
            }
            if !base.contains(&b) {
                base.push(b);
            }
        }
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        let mut chain = StabilizerChain { degree, base, strong, levels: Vec::new() };
        chain.levels = (0..chain.base.len()).map(|_| Level::empty(degree)).collect();
        for l in 0..chain.levels.len() {
            chain.rebuild_level(l);
        }
        chain.complete();
        Ok(chain)
    }

    fn rebuild_level(&mut self, l: usize) {
        let prefix = &self.base[..l];
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&s| prefix.iter().all(|&b| self.strong[s].apply(b) == b))
            .collect();
        let root = self.base[l];
        let mut level = Level::empty(self.degree);
        level.gens = gens;
        level.coset[root as usize] = Some(Permutation::identity(self.degree));
        level.coset_inv[root as usize] = Some(Permutation::identity(self.degree));
        level.orbit.push(root);
        let mut head = 0;
        while head < level.orbit.len() {
            let x = level.orbit[head];
            head += 1;
            for &s in &level.gens {
                let y = self.strong[s].apply(x);
                if level.coset[y as usize].is_none() {
                    let u = level.coset[x as usize].as_ref().expect("in orbit").then(&self.strong[s]);
                    level.coset_inv[y as usize] = Some(u.inverse());
                    level.coset[y as usize] = Some(u);
                    level.orbit.push(y);
                }
            }
        }
        self.levels[l] = level;
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped (`base.len()` if it passed every level).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let beta = g.apply(self.base[l]) as usize;
            match &self.levels[l].coset_inv[beta] {
                Some(inv) => g = g.then(inv),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            let mut jump = None;
            'scan: for oi in 0..self.levels[l].orbit.len() {
                let beta = self.levels[l].orbit[oi];
                for gi in 0..self.levels[l].gens.len() {
                    let s = &self.strong[self.levels[l].gens[gi]];
                    let img = s.apply(beta) as usize;
                    let lev = &self.levels[l];
                    let h = lev.coset[beta as usize]
                        .as_ref()
                        .expect("orbit point")
                        .then(s)
                        .then(lev.coset_inv[img].as_ref().expect("orbit closed"));
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.strip(h, l + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        self.base.push(residue.first_moved().expect("non-identity"));
                        self.levels.push(Level::empty(self.degree));
                    }
                    self.strong.push(residue);
                    for m in l + 1..=j {
                        self.rebuild_level(m);
                    }
                    jump = Some(j);
                    break 'scan;
                }
            }
            match jump {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Generators of the whole group (the strong generators).
    pub fn generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn is_trivial(&self) -> bool {
        self.strong.is_empty()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Group order, if it fits.
    pub fn order_u128(&self) -> Option<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    /// Membership by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.strip(g.clone(), 0).0.is_identity()
    }

    /// The orbit of `pt` under the whole group, sorted.
    pub fn orbit(&self, pt: u32) -> Vec<u32> {
        orbit_under(self.degree, &self.strong, pt)
    }

    /// All orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if !seen[p as usize] {
                let o = self.orbit(p);
                for &x in &o {
                    seen[x as usize] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// The subgroup fixing `pt`.
    pub fn point_stabilizer(&self, pt: u32) -> Result<StabilizerChain, GroupError> {
        if pt as usize >= self.degree {
            return Err(GroupError::PointOutOfRange { point: pt as usize, degree: self.degree });
        }
        if self.is_trivial() {
            return Ok(StabilizerChain::trivial(self.degree));
        }
        let rebased = if self.base.first() == Some(&pt) {
            self.clone()
        } else {
            let mut prefix = vec![pt];
            prefix.extend(self.base.iter().copied().filter(|&b| b != pt));
            StabilizerChain::with_base(self.degree, &self.strong, &prefix)?
        };
        Ok(rebased.drop_first_level())
    }

    fn drop_first_level(mut self) -> StabilizerChain {
        let first = self.base[0];
        let keep: Vec<usize> = (0..self.strong.len()).filter(|&s| self.strong[s].apply(first) == first).collect();
        let mut remap = vec![usize::MAX; self.strong.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let strong = keep.iter().map(|&s| self.strong[s].clone()).collect();
        let mut levels: Vec<Level> = self.levels.drain(1..).collect();
        for level in &mut levels {
            level.gens = level.gens.iter().map(|&g| remap[g]).collect();
            debug_assert!(level.gens.iter().all(|&g| g != usize::MAX));
        }
        let mut chain = StabilizerChain { degree: self.degree, base: self.base[1..].to_vec(), strong, levels };
        // Trailing levels whose orbit is a single point carry no information.
        while chain.levels.last().is_some_and(|l| l.orbit.len() == 1) {
            chain.levels.pop();
            chain.base.pop();
        }
        chain
    }

    /// The element `u_{k}[choice_k] ... u_1[choice_1] u_0[choice_0]` where
    /// `choices[i]` indexes the orbit at level `i` (taken modulo its length).
    pub fn element_from_choices(&self, choices: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (l, level) in self.levels.iter().enumerate().rev() {
            let c = choices.get(l).copied().unwrap_or(0) % level.orbit.len();
            let x = level.orbit[c] as usize;
            g = g.then(level.coset[x].as_ref().expect("orbit point"));
        }
        g
    }

    /// Every group element, or `None` if the order exceeds `limit`.
    pub fn elements(&self, limit: usize) -> Option<Vec<Permutation>> {
        let order = self.order_u128()?;
        if order > limit as u128 {
            return None;
        }
        let mut out = vec![Permutation::identity(self.degree)];
        // g = h u_l with h in the deeper stabilizer: extend from the deepest level up.
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &x in &level.orbit {
                    next.push(h.then(level.coset[x as usize].as_ref().expect("orbit point")));
                }
            }
            out = next;
        }
        Some(out)
    }

    #[cfg(test)]
    pub(crate) fn check_invariants(&self) -> bool {
        self.levels.iter().enumerate().all(|(l, level)| {
            let b = self.base[l];
            level.gens.iter().all(|&s| self.base[..l].iter().all(|&p| self.strong[s].apply(p) == p))
                && level.orbit.iter().all(|&x| {
                    let u = level.coset[x as usize].as_ref().unwrap();
                    u.apply(b) == x && self.base[..l].iter().all(|&p| u.apply(p) == p)
                })
        })
    }
}

impl Level {
    fn empty(degree: usize) -> Level {
        Level { orbit: Vec::new(), coset: vec![None; degree], coset_inv: vec![None; degree], gens: Vec::new() }
    }
}

pub(crate) fn orbit_under(degree: usize, gens: &[Permutation], pt: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[pt as usize] = true;
    let mut orbit = vec![pt];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head];
        head += 1;
        for g in gens {
            let y = g.apply(x);
            if !std::mem::replace(&mut seen[y as usize], true) {
                orbit.push(y);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cyc(n: usize) -> Permutation {
        Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap()
    }

    fn transposition(n: usize, a: u32, b: u32) -> Permutation {
        Permutation::from_cycles(n, &[&[a, b]]).unwrap()
    }

    /// Closure of the generators by brute-force multiplication.
    fn closure(n: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut set: HashSet<Permutation> = HashSet::new();
        set.insert(Permutation::identity(n));
        let mut frontier = vec![Permutation::identity(n)];
        while let Some(g) = frontier.pop() {
            for s in gens {
                let h = g.then(s);
                if set.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        set
    }

    #[test]
    fn trivial_group() {
        let c = StabilizerChain::new(5, &[]).unwrap();
        assert_eq!(c.order_u128(), Some(1));
        assert!(c.contains(&Permutation::identity(5)));
        assert!(!c.contains(&cyc(5)));
    }

    #[test]
    fn symmetric_group_s5() {
        let c = StabilizerChain::new(5, &[cyc(5), transposition(5, 0, 1)]).unwrap();
        assert_eq!(c.order_u128(), Some(120));
        assert!(c.check_invariants());
        assert_eq!(c.elements(1000).unwrap().into_iter().collect::<HashSet<_>>().len(), 120);
    }

    #[test]
    fn klein_four() {
        let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        assert_eq!(closure(4, &[a.clone(), b.clone()]).len(), 4);
        let c = StabilizerChain::new(4, &[a, b]).unwrap();
        assert_eq!(c.order_u128(), Some(4));
        assert!(!c.contains(&transposition(4, 0, 1)));
    }

    #[test]
    fn degree_mismatch() {
        assert_eq!(
            StabilizerChain::new(4, &[cyc(5)]).unwrap_err(),
            GroupError::DegreeMismatch { expected: 4, found: 5 }
        );
    }

    #[test]
    fn membership_matches_closure() {
        let gens = [
            Permutation::from_cycles(7, &[&[0, 1, 2], &[3, 4]]).unwrap(),
            Permutation::from_cycles(7, &[&[2, 3, 5, 6]]).unwrap(),
        ];
        let all = closure(7, &gens);
        let c = StabilizerChain::new(7, &gens).unwrap();
        assert_eq!(c.order_u128(), Some(all.len() as u128));
        assert!(c.check_invariants());
        // Every permutation of 7 points: membership agrees with the closure.
        let sym = StabilizerChain::new(7, &[cyc(7), transposition(7, 0, 1)]).unwrap();
        for p in sym.elements(10_000).unwrap() {
            assert_eq!(c.contains(&p), all.contains(&p));
        }
    }

    #[test]
    fn stabilizers() {
        let s4 = StabilizerChain::new(4, &[cyc(4), transposition(4, 0, 1)]).unwrap();
        for p in 0..4 {
            let st = s4.point_stabilizer(p).unwrap();
            assert_eq!(st.order_u128(), Some(6));
            assert!(st.generators().iter().all(|g| g.apply(p) == p));
        }
        let refl = Permutation::from_images(vec![0, 4, 3, 2, 1]).unwrap();
        let d5 = StabilizerChain::new(5, &[cyc(5), refl]).unwrap();
        assert_eq!(d5.order_u128(), Some(10));
        let st = d5.point_stabilizer(2).unwrap();
        assert_eq!(st.order_u128(), Some(2));
        assert_eq!(st.orbit(2), vec![2]);
        assert_eq!(d5.orbit(3), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn orbit_stabilizer_identity() {
        let gens = [
            Permutation::from_cycles(9, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]]).unwrap(),
            Permutation::from_cycles(9, &[&[0, 3, 6], &[1, 4, 7]]).unwrap(),
        ];
        let g = StabilizerChain::new(9, &gens).unwrap();
        let order = g.order_u128().unwrap();
        for p in 0..9 {
            let st = g.point_stabilizer(p).unwrap();
            assert_eq!(order, g.orbit(p).len() as u128 * st.order_u128().unwrap());
        }
    }
}
