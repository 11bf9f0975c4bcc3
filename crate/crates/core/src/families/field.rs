//! Small finite fields GF(p^e).
//!
//! Elements are indices `0..q`; the index `Σ a_i·p^i` stands for the
//! polynomial `Σ a_i·x^i` modulo a fixed monic irreducible of degree `e`.
//! For `e = 2` that modulus is `x² − t` with `t` the least quadratic
//! nonresidue (odd `p`) or `x² + x + 1` (`p = 2`); for other degrees it is
//! the least monic irreducible in index order.

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub(crate) fn prime_power(q: usize) -> Option<(usize, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

#[derive(Clone, Debug)]
pub(crate) struct Field {
    p: usize,
    e: usize,
    q: usize,
    /// `x^e = Σ red[i]·x^i`.
    red: Vec<usize>,
}

fn poly_rem(mut a: Vec<usize>, m: &[usize], p: usize) -> Vec<usize> {
    // m monic, coefficients low to high
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("non-empty");
        let shift = a.len() - dm;
        for i in 0..dm {
            a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
        }
    }
    a
}

fn is_irreducible(m: &[usize], p: usize) -> bool {
    let e = m.len() - 1;
    for d in 1..=e / 2 {
        for code in 0..p.pow(d as u32) {
            let mut f: Vec<usize> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            f.push(1);
            if poly_rem(m.to_vec(), &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// GF(q) if `q` is a prime power of at most 2^16.
    pub fn new(q: usize) -> Option<Field> {
        if q > 1 << 16 {
            return None;
        }
        let (p, e) = prime_power(q)?;
        let e = e as usize;
        let red = if e == 1 {
            vec![0]
        } else if e == 2 && p == 2 {
            vec![1, 1]
        } else if e == 2 {
            let is_square = |t: usize| (1..p).any(|x| x * x % p == t);
            let t = (1..p).find(|&t| !is_square(t)).expect("odd prime has a nonresidue");
            vec![t, 0]
        } else {
            (0..p.pow(e as u32))
                .map(|code| {
                    let mut m: Vec<usize> = (0..e).map(|i| code / p.pow(i as u32) % p).collect();
                    m.push(1);
                    m
                })
                .find(|m| is_irreducible(m, p))
                .map(|m| m[..e].iter().map(|&c| (p - c) % p).collect())
                .expect("irreducible polynomials exist in every degree")
        };
        Some(Field { p, e, q, red })
    }

    #[cfg(test)]
    pub fn order(&self) -> usize {
        self.q
    }

    fn digits(&self, mut x: usize) -> Vec<usize> {
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn index(&self, d: &[usize]) -> usize {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let s: Vec<usize> = self.digits(x).iter().zip(self.digits(y)).map(|(a, b)| a + b).collect();
        self.index(&s)
    }

    pub fn neg(&self, x: usize) -> usize {
        let s: Vec<usize> = self.digits(x).iter().map(|a| self.p - a).collect();
        self.index(&s)
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (p, e) = (self.p, self.e);
        let a = self.digits(x);
        let b = self.digits(y);
        let mut prod = vec![0usize; 2 * e - 1];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        // Fold x^k for k >= e using x^e = red.
        for k in (e..2 * e - 1).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..e {
                    prod[k - e + i] = (prod[k - e + i] + c * self.red[i]) % p;
                }
            }
        }
        self.index(&prod[..e])
    }

    /// Membership table of the nonzero squares.
    pub fn squares(&self) -> Vec<bool> {
        let mut s = vec![false; self.q];
        for x in 1..self.q {
            s[self.mul(x, x)] = true;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Field) {
        let q = f.order();
        for x in 0..q {
            assert_eq!(f.add(x, 0), x);
            assert_eq!(f.mul(x, 1), x);
            assert_eq!(f.add(x, f.neg(x)), 0);
            if x != 0 {
                assert!((1..q).any(|y| f.mul(x, y) == 1), "no inverse for {x} in GF({q})");
            }
            for y in 0..q {
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for z in [0, 1, q - 1] {
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    assert_eq!(f.mul(x, f.mul(y, z)), f.mul(f.mul(x, y), z));
                }
            }
        }
    }

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81] {
            check_axioms(&Field::new(q).unwrap());
        }
    }

    #[test]
    fn quadratic_moduli() {
        // 2 is the least nonresidue mod 3 and mod 5.
        let f = Field::new(25).unwrap();
        assert_eq!(f.red, vec![2, 0]);
        assert_eq!(Field::new(4).unwrap().red, vec![1, 1]);
        assert_eq!(Field::new(9).unwrap().red, vec![2, 0]);
    }

    #[test]
    fn inadmissible_orders() {
        for q in [0, 1, 6, 12, 100] {
            assert!(Field::new(q).is_none(), "{q}");
        }
    }

    #[test]
    fn half_the_units_are_squares_in_odd_order() {
        for q in [5, 9, 13, 25, 27, 81] {
            let s = Field::new(q).unwrap().squares();
            assert_eq!(s.iter().filter(|&&b| b).count(), (q - 1) / 2);
        }
    }
}
